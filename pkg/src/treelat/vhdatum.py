"""Square presentations with two letter sets (vertical/horizontal).

A datum consists of two inverse-closed letter sets A and B and a list of
squares (a, b, a', b') recording the relation a·b = b'·a'.  A valid datum
covers every pair in A x B exactly once after closing under the square
symmetries; the maps lambda_b : a -> a' and mu_a : b -> b' are then
bijections, and the two groups they generate are the level-1 local
actions on the two tree factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BadInverse, DatumError, DuplicatePair, IncompleteDatum,
                     NonBijectiveLink)
from .permcore import Permutation, PermGroup
from .verdict import (Verdict, check_hypotheses_t12, classify_2transitive_small,
                      hji_verdict, theorem11_verdict, theorem12_verdict)


@dataclass(frozen=True)
class LetterSet:
    """Inverse-closed alphabet; fixed points of the involution are
    involutive letters."""
    letters: tuple
    inverse: dict

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise BadInverse("repeated letter")
        for x in self.letters:
            y = self.inverse.get(x)
            if y is None or y not in self.letters:
                raise BadInverse(f"no inverse recorded for {x!r}")
            if self.inverse[y] != x:
                raise BadInverse(f"inverse map is not an involution at {x!r}")

    @property
    def degree(self):
        return len(self.letters)

    def inv(self, x):
        return self.inverse[x]

    def index(self, x):
        return self.letters.index(x)

    def involutions(self):
        return tuple(x for x in self.letters if self.inverse[x] == x)


def _close_square(a_set, b_set, square):
    """Orbit of one square under the two generating symmetries."""
    seen = set()
    queue = [square]
    while queue:
        sq = queue.pop()
        if sq in seen:
            continue
        seen.add(sq)
        a, b, a2, b2 = sq
        queue.append((a_set.inv(a), b2, a_set.inv(a2), b))
        queue.append((a2, b_set.inv(b), a, b_set.inv(b2)))
    return seen


class VhDatum:
    def __init__(self, a_letters, b_letters, squares):
        self.a_letters = a_letters
        self.b_letters = b_letters
        table = {}
        for sq in squares:
            a, b, a2, b2 = sq
            for x in (a, a2):
                if x not in a_letters.letters:
                    raise DatumError(f"unknown letter {x!r}")
            for y in (b, b2):
                if y not in b_letters.letters:
                    raise DatumError(f"unknown letter {y!r}")
            for ca, cb, ca2, cb2 in _close_square(a_letters, b_letters, sq):
                prior = table.get((ca, cb))
                if prior is not None and prior != (ca2, cb2):
                    raise DuplicatePair(ca, cb)
                table[(ca, cb)] = (ca2, cb2)
        uncovered = [(a, b) for a in a_letters.letters
                     for b in b_letters.letters if (a, b) not in table]
        if uncovered:
            raise IncompleteDatum(uncovered)
        self.table = table
        for b in b_letters.letters:
            if len({table[(a, b)][0] for a in a_letters.letters}) != \
                    a_letters.degree:
                raise NonBijectiveLink(b)
        for a in a_letters.letters:
            if len({table[(a, b)][1] for b in b_letters.letters}) != \
                    b_letters.degree:
                raise NonBijectiveLink(a)

    @property
    def degrees(self):
        return self.a_letters.degree, self.b_letters.degree

    def squares(self):
        """All closed squares, one per covered pair, sorted by letter
        position."""
        out = []
        for a in self.a_letters.letters:
            for b in self.b_letters.letters:
                a2, b2 = self.table[(a, b)]
                out.append((a, b, a2, b2))
        return out

    def lambda_perm(self, b):
        """a -> a' over the squares through b, on letter positions."""
        return Permutation(
            self.a_letters.index(self.table[(a, b)][0])
            for a in self.a_letters.letters)

    def mu_perm(self, a):
        """b -> b' over the squares through a, on letter positions."""
        return Permutation(
            self.b_letters.index(self.table[(a, b)][1])
            for b in self.b_letters.letters)

    def swapped(self):
        """The same geometric squares read with the roles of the two
        alphabets exchanged: a·b = b'·a' becomes b'·a' = a·b."""
        squares = [(b2, a2, b, a) for a, b, a2, b2 in self.squares()]
        return VhDatum(self.b_letters, self.a_letters, squares)


def local_actions(datum):
    d1, d2 = datum.degrees
    f1 = PermGroup(d1, [datum.lambda_perm(b) for b in datum.b_letters.letters])
    f2 = PermGroup(d2, [datum.mu_perm(a) for a in datum.a_letters.letters])
    return f1, f2


# -- parsing -------------------------------------------------------------

def _parse_letter_section(lines, side):
    letters = []
    inverse = {}

    def add(x, y):
        for z in (x, y) if x != y else (x,):
            if z in inverse:
                raise BadInverse(f"letter {z!r} declared twice")
            letters.append(z)
        inverse[x] = y
        inverse[y] = x

    for line in lines:
        parts = line.split()
        name = parts[0]
        tags = parts[1:]
        if tags and tags != ["involution"]:
            raise DatumError(f"unknown tag on letter {name!r}")
        if tags:
            if name.endswith("^-1"):
                raise BadInverse(f"involution {name!r} cannot carry ^-1")
            add(name, name)
        elif name.endswith("^-1"):
            base = name[:-3]
            if base not in inverse:
                raise BadInverse(f"{name!r} listed before {base!r}")
            if inverse[base] != name:
                raise BadInverse(f"{base!r} already has an inverse")
        else:
            add(name, name + "^-1")
    if not letters:
        raise DatumError(f"empty [{side}] section")
    return LetterSet(tuple(letters), inverse)


def parse_datum(text):
    sections = {"a": [], "b": [], "squares": []}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current not in sections:
                raise DatumError(f"unknown section [{current}]")
            continue
        if current is None:
            raise DatumError("content before first section")
        sections[current].append(line)
    a_set = _parse_letter_section(sections["a"], "a")
    b_set = _parse_letter_section(sections["b"], "b")
    squares = []
    for line in sections["squares"]:
        parts = line.split()
        if len(parts) != 4:
            raise DatumError(f"malformed square line: {line!r}")
        squares.append(tuple(parts))
    return VhDatum(a_set, b_set, squares)


def commuting_datum(d1, d2):
    """Datum on involutive letters in which every square commutes; both
    local actions are trivial."""
    a_set = LetterSet(tuple(f"a{i}" for i in range(d1)),
                      {f"a{i}": f"a{i}" for i in range(d1)})
    b_set = LetterSet(tuple(f"b{j}" for j in range(d2)),
                      {f"b{j}": f"b{j}" for j in range(d2)})
    squares = [(a, b, a, b) for a in a_set.letters for b in b_set.letters]
    return VhDatum(a_set, b_set, squares)


def load_corpus_datum(name):
    """Parse one of the data files shipped with the package, by stem."""
    from importlib import resources

    text = resources.files("treelat").joinpath(
        f"data/{name}.txt").read_text()
    return parse_datum(text)


# -- analysis pipeline ---------------------------------------------------

NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class DatumReport:
    degrees: tuple
    f1: PermGroup
    f2: PermGroup
    class1: object
    class2: object
    theorem12: object  # Verdict, or NOT_APPLICABLE below degree 3
    theorem11: object
    hji: object

    @property
    def overall(self):
        """Single-word outcome: NotApplicable when the degrees are too small
        or the 2-transitivity hypotheses fail; else the irreducibility
        criterion's answer."""
        if not isinstance(self.theorem12, Verdict):
            return NOT_APPLICABLE
        if self.theorem12.status == "HypothesesNotMet":
            return NOT_APPLICABLE
        return self.theorem12.status

    def as_dict(self):
        def verdict_dict(v):
            if not isinstance(v, Verdict):
                return v
            d = {"status": v.status, "by": v.by}
            if v.matched_cases:
                d["matched_cases"] = [
                    {"case": m.case, "witness": m.witness}
                    for m in v.matched_cases]
            if v.failure is not None:
                d["failure"] = v.failure.reason
            return d

        return {
            "degrees": list(self.degrees),
            "overall": self.overall,
            "f1": {"order": self.f1.order(), "label": self.class1.label},
            "f2": {"order": self.f2.order(), "label": self.class2.label},
            "theorem12": verdict_dict(self.theorem12),
            "theorem11": verdict_dict(self.theorem11),
            "hji": self.hji,
        }


def analyze(datum):
    d1, d2 = datum.degrees
    f1, f2 = local_actions(datum)
    c1 = classify_2transitive_small(f1)
    c2 = classify_2transitive_small(f2)
    if min(d1, d2) < 3:
        return DatumReport((d1, d2), f1, f2, c1, c2,
                           NOT_APPLICABLE, NOT_APPLICABLE, NOT_APPLICABLE)
    t12 = theorem12_verdict(d1, d2, f1, f2)
    if check_hypotheses_t12(d1, d2, f1, f2) is None:
        hi, lo = max(d1, d2), min(d1, d2)
        t11 = theorem11_verdict(hi, lo)
        hji = hji_verdict(d1, d2, f1, f2, t12.status == "Irreducible")
    else:
        t11 = Verdict("HypothesesNotMet", "Theorem11", failure=t12.failure)
        hji = "Unknown"
    return DatumReport((d1, d2), f1, f2, c1, c2, t12, t11, hji)
