"""Classification data consumed by the decision procedures.

Four read-only tables: the 2-transitive groups of degree at most 6, the
minimal index of a proper subgroup of PSL2(q), the simple groups whose
order has no prime divisor beyond 5, and the exceptional maximal-factor
pairs from the Liebeck--Praeger--Saxl classification of maximal
factorizations of almost simple groups.

These rest on classification theorems (ultimately CFSG) and are *not*
recomputed here; a test cross-checks the constants against the
human-readable copy shipped in ``data/classification_tables.txt``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import NotPrimePower


@dataclass(frozen=True)
class TwoTransitiveRow:
    degree: int
    order: int
    name: str
    socle_name: str
    socle_order: int


TWO_TRANSITIVE_ROWS = (
    TwoTransitiveRow(3, 6, "Sym(3)", "C3", 3),
    TwoTransitiveRow(4, 12, "Alt(4)", "C2xC2", 4),
    TwoTransitiveRow(4, 24, "Sym(4)", "C2xC2", 4),
    TwoTransitiveRow(5, 20, "C5:C4", "C5", 5),
    TwoTransitiveRow(5, 60, "Alt(5)", "Alt(5)", 60),
    TwoTransitiveRow(5, 120, "Sym(5)", "Alt(5)", 60),
    TwoTransitiveRow(6, 60, "PSL(2,5)", "Alt(5)", 60),
    TwoTransitiveRow(6, 120, "PGL(2,5)", "Alt(5)", 60),
    TwoTransitiveRow(6, 360, "Alt(6)", "Alt(6)", 360),
    TwoTransitiveRow(6, 720, "Sym(6)", "Alt(6)", 360),
)


def two_transitive_table():
    return list(TWO_TRANSITIVE_ROWS)


def two_transitive_lookup(degree, order=None):
    """Rows of the degree-at-most-6 table matching a degree and, if given,
    an order.  (degree, order) pairs are unique across the table."""
    rows = [r for r in TWO_TRANSITIVE_ROWS if r.degree == degree]
    if order is not None:
        rows = [r for r in rows if r.order == order]
    return rows


# minimal index of a proper subgroup of PSL2(q): q+1 except for six small q
_PSL2_MIN_INDEX_EXCEPTIONS = {2: 2, 3: 3, 5: 5, 7: 7, 9: 6, 11: 11}


def _prime_power_base(q):
    if q < 2:
        return None
    n = q
    for p in range(2, q + 1):
        if p * p > n:
            break
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return q  # q itself is prime


def min_index_psl2(q):
    if _prime_power_base(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    return _PSL2_MIN_INDEX_EXCEPTIONS.get(q, q + 1)


@dataclass(frozen=True)
class SimpleGroupEntry:
    name: str
    aliases: tuple
    order: int
    factorization: dict


SIMPLE_235 = (
    SimpleGroupEntry("Alt(5)", (), 60, {2: 2, 3: 1, 5: 1}),
    SimpleGroupEntry("Alt(6)", (), 360, {2: 3, 3: 2, 5: 1}),
    SimpleGroupEntry("PSp(4,3)", ("U4(2)",), 25920, {2: 6, 3: 4, 5: 1}),
)


def simple_235():
    """The nonabelian simple groups all of whose prime divisors lie in
    {2, 3, 5}."""
    return list(SIMPLE_235)


@dataclass(frozen=True)
class LpsRow:
    index: int
    group: str
    factorization: dict
    factor_intersections: tuple

    @property
    def order(self):
        n = 1
        for p, e in self.factorization.items():
            n *= p ** e
        return n


LPS_ROWS = (
    LpsRow(1, "Alt(6)", {2: 3, 3: 2, 5: 1}, ("PSL(2,5)",)),
    LpsRow(2, "U3(5)", {2: 4, 3: 2, 5: 3, 7: 1}, ("Alt(7)",)),
    LpsRow(3, "U4(2)", {2: 6, 3: 4, 5: 1}, ("2^4.Alt(5)", "Sym(6)")),
    LpsRow(4, "U4(3)", {2: 7, 3: 6, 5: 1, 7: 1}, ("Alt(7)",)),
    LpsRow(5, "PSp(4,7)", {2: 8, 3: 2, 5: 2, 7: 4}, ("Alt(7)",)),
    LpsRow(6, "Sp(6,2)", {2: 9, 3: 4, 5: 1, 7: 1},
           ("Alt(7)", "Sym(7)", "Alt(8)", "Sym(8)")),
    LpsRow(7, "POmega8+(2)", {2: 12, 3: 5, 5: 2, 7: 1},
           ("P1", "P3", "P4", "Alt(9)")),
)


def lps_exceptions():
    return list(LPS_ROWS)


def factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def load_data_file():
    """Parse ``data/classification_tables.txt`` into the same shapes as the
    embedded constants, for cross-checking."""
    text = resources.files("treelat").joinpath(
        "data/classification_tables.txt").read_text()
    sections = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
        else:
            sections[current].append(line.split("\t"))
    two = [TwoTransitiveRow(int(d), int(o), name, soc, int(so))
           for d, o, name, soc, so in sections["two-transitive"]]
    galois = {int(q): int(m) for q, m in sections["psl2-min-index"]}
    simple = [SimpleGroupEntry(name, tuple(a for a in aliases.split("|") if a),
                               int(order), _parse_factorization(fact))
              for name, aliases, order, fact in sections["simple-235"]]
    lps = [LpsRow(int(i), name, _parse_factorization(fact),
                  tuple(parts.split("|")))
           for i, name, fact, parts in sections["lps-exceptions"]]
    return {
        "two_transitive": two,
        "psl2_min_index": galois,
        "simple_235": simple,
        "lps": lps,
    }


def _parse_factorization(text):
    out = {}
    for term in text.split("*"):
        if "^" in term:
            p, e = term.split("^")
        else:
            p, e = term, "1"
        out[int(p)] = int(e)
    return out
