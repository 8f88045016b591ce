"""Irreducibility decision procedures from level-1 local data.

Given tree degrees (d1, d2) and the two local actions, decide whether
freeness plus 2-transitivity already forces irreducibility of the lattice,
or whether the pair lands in one of the finitely many exceptional families.
The exceptional lists are one-directional: matching a case means
irreducibility is *not guaranteed* by the criterion, not that the lattice
is reducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .classtables import two_transitive_lookup

_LABEL_BY_NAME = {
    "Sym(3)": "Sym3",
    "Alt(4)": "Alt4",
    "Sym(4)": "Sym4",
    "C5:C4": "C5xC4",
    "Alt(5)": "Alt5@5",
    "Sym(5)": "Sym5@5",
    "PSL(2,5)": "PSL25@6",
    "PGL(2,5)": "PGL25@6",
    "Alt(6)": "Alt6",
    "Sym(6)": "Sym6",
}


@dataclass(frozen=True)
class LocalActionClass:
    degree: int
    order: int
    label: str
    socle_label: str


def classify_2transitive_small(group):
    """Classify a permutation group by (degree, order) against the table of
    2-transitive groups of degree at most 6; larger degrees are labelled
    AltD/SymD when they contain the alternating group."""
    degree = group.degree
    order = group.order()
    if degree < 2 or not group.is_2_transitive():
        return LocalActionClass(degree, order, "Not2Transitive", "-")
    if degree <= 6:
        rows = two_transitive_lookup(degree, order)
        if rows:
            row = rows[0]
            return LocalActionClass(degree, order, _LABEL_BY_NAME[row.name],
                                    row.socle_name)
        return LocalActionClass(degree, order, "Other2Transitive", "-")
    f = factorial(degree)
    if order == f:
        return LocalActionClass(degree, order, "SymD", f"Alt({degree})")
    if order == f // 2:
        return LocalActionClass(degree, order, "AltD", f"Alt({degree})")
    return LocalActionClass(degree, order, "Other2Transitive", "-")


@dataclass(frozen=True)
class HypothesisFailure:
    reason: str


def check_hypotheses_t12(d1, d2, f1, f2):
    """Hypotheses of the main criterion: both local actions 2-transitive,
    and containing the alternating group whenever the degree is at least 7.
    Returns None when satisfied, otherwise a HypothesisFailure."""
    if d1 < 3 or d2 < 3:
        return HypothesisFailure("degrees must be at least 3")
    for i, (d, f) in enumerate(((d1, f1), (d2, f2)), start=1):
        if f.degree != d:
            return HypothesisFailure(f"F{i} has degree {f.degree}, expected {d}")
        if not f.is_2_transitive():
            return HypothesisFailure(f"F{i} is not 2-transitive")
        if d >= 7 and not f.contains_alt():
            return HypothesisFailure(
                f"d{i} = {d} >= 7 requires F{i} to contain Alt({d})")
    return None


@dataclass(frozen=True)
class MatchedCase:
    case: str  # "i" .. "vi"
    witness: str


def _divisors(n):
    return sorted(d for d in range(1, n + 1) if n % d == 0)


def _family_match(d1, low_mult, high_mult, modulus):
    """Match d1 against {low_mult*n : n >= 2, n | modulus} and
    {high_mult*n - 1 : n | modulus}; returns a witness string or None."""
    if d1 % low_mult == 0:
        n = d1 // low_mult
        if n >= 2 and modulus % n == 0:
            return f"d1 = {low_mult}*{n} with {n} | {modulus}"
    if (d1 + 1) % high_mult == 0:
        n = (d1 + 1) // high_mult
        if modulus % n == 0:
            return f"d1 = {high_mult}*{n} - 1 with {n} | {modulus}"
    return None


def exceptional_cases(d1, d2, class2):
    """All exceptional cases matched by (d1, d2) with the second local
    action classified as ``class2``; requires d1 >= d2 >= 3."""
    if d1 < d2 or d2 < 3:
        raise ValueError("expected d1 >= d2 >= 3")
    matches = []
    if d2 == 3 and d1 in (23, 24, 47):
        matches.append(MatchedCase("i", f"d1 = {d1} in {{23, 24, 47}}"))
    if d2 == 4:
        witness = _family_match(d1, 6, 12, 972)
        if witness:
            matches.append(MatchedCase("ii", witness))
    if d2 == 5 and class2.label == "C5xC4" and d1 in (10, 19, 20, 39, 40, 79):
        matches.append(MatchedCase(
            "iii", f"d1 = {d1} in {{10, 19, 20, 39, 40, 79}} with F2 = C5:C4"))
    if d2 == 5 and class2.socle_label == "Alt(5)":
        witness = _family_match(d1, 30, 60, 768)
        if witness:
            matches.append(MatchedCase("iv", witness + ", soc(F2) = Alt(5)"))
    if d2 == 6 and class2.socle_label == "Alt(5)":
        witness = _family_match(d1, 30, 60, 200)
        if witness:
            matches.append(MatchedCase("v", witness + ", soc(F2) = Alt(5)"))
    if d2 >= 6:
        f2 = factorial(d2)
        g2 = factorial(d2 - 1)
        special = {
            f2 // 2 - 1: "d2!/2 - 1",
            f2 // 2: "d2!/2",
            f2 - 1: "d2! - 1",
            f2 * g2 // 4 - 1: "d2!(d2-1)!/4 - 1",
            f2 * g2 // 4: "d2!(d2-1)!/4",
            f2 * g2 // 2 - 1: "d2!(d2-1)!/2 - 1",
            f2 * g2 // 2: "d2!(d2-1)!/2",
            f2 * g2 - 1: "d2!(d2-1)! - 1",
        }
        if d1 in special:
            matches.append(MatchedCase("vi", f"d1 = {special[d1]} = {d1}"))
    return matches


@dataclass(frozen=True)
class Verdict:
    status: str  # Irreducible | ExceptionalCase | HypothesesNotMet
    by: str  # Theorem12 | Theorem11
    matched_cases: tuple = ()
    failure: object = None

    def describe(self):
        if self.status == "Irreducible":
            return "irreducible"
        if self.status == "HypothesesNotMet":
            return f"hypotheses not met: {self.failure.reason}"
        if self.status == "Inconclusive":
            return "inconclusive: degree below the bound"
        cases = "; ".join(f"({m.case}) {m.witness}" for m in self.matched_cases)
        return f"irreducibility not guaranteed by the criterion: {cases}"


def theorem12_verdict(d1, d2, f1, f2):
    failure = check_hypotheses_t12(d1, d2, f1, f2)
    if failure is not None:
        return Verdict("HypothesesNotMet", "Theorem12", failure=failure)
    return theorem12_verdict_from_classes(
        d1, d2, classify_2transitive_small(f1), classify_2transitive_small(f2))


def _class_hypothesis_failure(d1, d2, c1, c2):
    if d1 < 3 or d2 < 3:
        return HypothesisFailure("degrees must be at least 3")
    for i, (d, c) in enumerate(((d1, c1), (d2, c2)), start=1):
        if c.degree != d:
            return HypothesisFailure(f"F{i} has degree {c.degree}, expected {d}")
        if c.label == "Not2Transitive":
            return HypothesisFailure(f"F{i} is not 2-transitive")
        if d >= 7 and c.label not in ("AltD", "SymD"):
            return HypothesisFailure(
                f"d{i} = {d} >= 7 requires F{i} to contain Alt({d})")
    return None


def theorem12_verdict_from_classes(d1, d2, c1, c2):
    """Same decision as theorem12_verdict but driven by classification
    labels only, so it works at degrees where the groups themselves are
    unbuildable."""
    failure = _class_hypothesis_failure(d1, d2, c1, c2)
    if failure is not None:
        return Verdict("HypothesesNotMet", "Theorem12", failure=failure)
    if d1 > d2:
        matches = exceptional_cases(d1, d2, c2)
    elif d2 > d1:
        matches = exceptional_cases(d2, d1, c1)
    else:
        # equal degrees: the factor labelling is ambiguous, test both
        # readings and union the matches
        matches = exceptional_cases(d1, d2, c2)
        seen = {(m.case, m.witness) for m in matches}
        for m in exceptional_cases(d2, d1, c1):
            if (m.case, m.witness) not in seen:
                matches.append(m)
    if matches:
        return Verdict("ExceptionalCase", "Theorem12",
                       matched_cases=tuple(matches))
    return Verdict("Irreducible", "Theorem12")


def theorem11_bound(d2):
    """Explicit degree threshold above which 2-transitive local actions on
    both sides force irreducibility."""
    if d2 < 3:
        raise ValueError("d2 must be at least 3")
    exponent = d2 * ((d2 - 1) ** 5 - 1) // (d2 - 2)
    return factorial(d2) * factorial(d2 - 1) ** exponent


def theorem11_verdict(d1, d2):
    if d2 < 3 or d1 < d2:
        raise ValueError("expected d1 >= d2 >= 3")
    if d1 >= theorem11_bound(d2):
        return Verdict("Irreducible", "Theorem11")
    return Verdict("Inconclusive", "Theorem11")


def trofimov_condition(group):
    """Whether the local action satisfies the point-stabilizer transitivity
    condition used for the just-infinite conclusion: true for every
    2-transitive group of degree at most 6 except C5:C4, and for
    alternating-or-larger groups in higher degree."""
    cls = classify_2transitive_small(group)
    if cls.label == "Not2Transitive":
        return False
    if cls.degree <= 6:
        return cls.label != "C5xC4" and cls.label != "Other2Transitive"
    return cls.label in ("AltD", "SymD")


def hji_verdict(d1, d2, f1, f2, irreducible):
    """Hereditary just-infiniteness: granted when irreducibility holds and
    both local actions pass the stabilizer-transitivity condition."""
    if irreducible and trofimov_condition(f1) and trofimov_condition(f2):
        return "HereditarilyJustInfinite"
    return "Unknown"


def allowed_stabilizer_orders(d, cls):
    """The finite set of possible vertex-stabilizer orders for a
    vertex-transitive action with the given 2-transitive local action."""
    if cls.degree != d:
        raise ValueError("class degree mismatch")
    if d == 3:
        return sorted(6 * n for n in _divisors(8))
    if d == 4:
        return sorted(12 * n for n in _divisors(972))
    if d == 5 and cls.label == "C5xC4":
        return [20, 40, 80]
    if d == 5 and cls.socle_label == "Alt(5)":
        return sorted(60 * n for n in _divisors(768))
    if d == 6 and cls.socle_label == "Alt(5)":
        return sorted(60 * n for n in _divisors(200))
    if d >= 6 and cls.label in ("Alt6", "Sym6", "AltD", "SymD"):
        f, g = factorial(d), factorial(d - 1)
        return sorted({f // 2, f, f * g // 4, f * g // 2, f * g})
    raise ValueError(f"no stabilizer-order case for degree {d} label {cls.label}")
