"""Desk-scale exhaustive computations backing the decision procedures.

Three independent jobs:

* ``gap_replication_11_4`` — enumerate all 11! elements g of the
  stabilizer H = Sym(11) of a point in Sym(12), where the 12 points carry
  a regular Alt(4) ≤ Sym(12), and confirm that no g satisfies all three
  double-coset conditions simultaneously.
* ``thompson_check`` — Goursat census of the Alt(5)-subgroups of
  Alt(5) x Alt(5) and verification that every trivial-intersection pair
  includes a factor.
* ``wreath_order_oracle`` — order of the five-fold iterated wreath
  product, cross-checking the closed-form degree bound.

The big enumeration is partitioned by the image of point 1, reduced with
mergeable per-partition counters, and bit-identical for any thread count.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

import numpy as np

from .permcore import Permutation, PermGroup


@dataclass(frozen=True)
class SearchReport:
    total_candidates: int
    counts: dict
    survivors: tuple
    wall_time: float

    def as_dict(self):
        return {
            "total_candidates": self.total_candidates,
            "counts": dict(self.counts),
            "survivors": [list(s) for s in self.survivors],
            "wall_time": self.wall_time,
        }


def _alt4_regular():
    """The 12 elements of Alt(4) in sorted order, and the left-regular
    embedding into Sym(12) as a 12 x 12 array whose row w is the unique
    element of K sending point 0 to w."""
    elems = sorted(p.images for p in
                   PermGroup.from_cycles(4, "(0 1 2)", "(0 1)(2 3)").elements())
    index = {e: i for i, e in enumerate(elems)}
    assert elems[0] == (0, 1, 2, 3)
    kmat = np.zeros((12, 12), dtype=np.uint8)
    for w, h in enumerate(elems):
        for i, x in enumerate(elems):
            # functional composition h∘x; the map h -> k_h is then a
            # homomorphism for ∘ and k_h(0) = index(h) = w
            kmat[w, i] = index[tuple(h[x[j]] for j in range(4))]
    return kmat


_BASE10 = None


def _base10():
    global _BASE10
    if _BASE10 is None:
        _BASE10 = np.array(list(itertools.permutations(range(10))),
                           dtype=np.uint8)
    return _BASE10


def _partition(kmat, kinv, t):
    """All g in Sym(12) with g(0) = 0 and g(1) = t: per-condition counts
    and the survivors of conditions 1 and 2 (as image tuples)."""
    rest = np.array([v for v in range(1, 12) if v != t], dtype=np.uint8)
    n = factorial(10)
    g = np.empty((n, 12), dtype=np.uint8)
    g[:, 0] = 0
    g[:, 1] = t
    g[:, 2:] = rest[_base10()]
    ginv = np.empty_like(g)
    np.put_along_axis(ginv, g, np.arange(12, dtype=np.uint8), axis=1)

    # condition 2: |K ∩ gKg⁻¹| = 3.  For v != 0, the conjugate g∘K_v∘g⁻¹
    # lies in K iff it equals the K-element sending 0 to g(v).
    hits = np.zeros(n, dtype=np.uint8)
    for v in range(1, 12):
        conj = np.take_along_axis(g, kmat[v][ginv], axis=1)
        np.add(hits, (conj == kmat[g[:, v]]).all(axis=1), out=hits,
               casting="unsafe")
    cond2 = hits == 2  # identity conjugate always matches, totalling 3

    # condition 1: g⁻¹ ∈ K g K ⟺ some k in K has g⁻¹∘k⁻¹∘g⁻¹ ∈ K
    cond1 = np.zeros(n, dtype=bool)
    for w in range(12):
        prod = np.take_along_axis(ginv, kinv[w][ginv], axis=1)
        cond1 |= (prod == kmat[prod[:, 0]]).all(axis=1)

    both = cond1 & cond2
    survivors = [tuple(int(x) for x in row) for row in g[both]]
    return int(cond1.sum()), int(cond2.sum()), survivors


def _condition3(images, kmat):
    """⟨gK⟩ contains Alt(12)."""
    gens = [Permutation(kmat[w][np.array(images)]) for w in range(12)]
    return PermGroup(12, gens).contains_alt()


def gap_replication_11_4(threads=1):
    """Exhaust Sym(11) (as the stabilizer of the identity point of a
    regular Alt(4) on 12 points) against the three double-coset
    conditions; the survivor list is expected empty."""
    start = time.monotonic()
    _base10()  # materialize before the pool so workers share one array
    kmat = _alt4_regular()
    kinv = np.empty_like(kmat)
    for w in range(12):
        kinv[w, kmat[w]] = np.arange(12, dtype=np.uint8)

    partitions = range(1, 12)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: _partition(kmat, kinv, t),
                                    partitions))
    else:
        results = [_partition(kmat, kinv, t) for t in partitions]

    c1 = sum(r[0] for r in results)
    c2 = sum(r[1] for r in results)
    both = [s for r in results for s in r[2]]
    survivors = tuple(s for s in both if _condition3(s, kmat))
    counts = {
        "cond1": c1,
        "cond2": c2,
        "cond1&cond2": len(both),
        "cond1&cond2&cond3": len(survivors),
    }
    return SearchReport(factorial(11), counts, survivors,
                        time.monotonic() - start)


def double_coset_conditions_direct(g_images, kmat):
    """Literal re-statement of conditions 1 and 2 for one g: enumerate the
    144 products k1∘g∘k2 and measure the double coset.  Slow; used as the
    independent oracle for the vectorized path."""
    def comp(a, b):
        return tuple(a[b[x]] for x in range(12))

    k_elems = [tuple(int(x) for x in kmat[w]) for w in range(12)]
    g = tuple(g_images)
    ginv = [0] * 12
    for x, y in enumerate(g):
        ginv[y] = x
    coset = {comp(k1, comp(g, k2)) for k1 in k_elems for k2 in k_elems}
    cond1 = tuple(ginv) in coset
    cond2 = len(coset) == 4 * 12
    return cond1, cond2


# -- Goursat check over Alt(5) x Alt(5) ----------------------------------

@dataclass(frozen=True)
class ThompsonReport:
    census_size: int
    factor_count: int
    diagonal_count: int
    trivial_intersection_pairs: int
    counterexample: object = None


def _alt5_elements():
    from .groupzoo import alternating

    return [p.images for p in alternating(5).elements()]


def _alt5_automorphisms():
    """All 120 automorphisms of Alt(5), realized by Sym(5) conjugation."""
    from .groupzoo import symmetric

    out = []
    for s in symmetric(5).elements():
        si = s.inverse()
        out.append({x: (si * Permutation(x) * s).images
                    for x in _alt5_elements()})
    return out


def thompson_check():
    """Census all Alt(5)-subgroups of Alt(5) x Alt(5) — the two factors
    plus one graph per isomorphism — and confirm that every pair with
    trivial intersection includes a factor."""
    elems = _alt5_elements()
    ident = tuple(range(5))
    factor1 = frozenset((x, ident) for x in elems)
    factor2 = frozenset((ident, x) for x in elems)
    diagonals = {frozenset((x, phi[x]) for x in elems)
                 for phi in _alt5_automorphisms()}
    census = [factor1, factor2] + sorted(diagonals, key=sorted)
    factors = {factor1, factor2}

    trivial_pairs = 0
    for i in range(len(census)):
        for j in range(i + 1, len(census)):
            meet = census[i] & census[j]
            if len(meet) == 1:
                trivial_pairs += 1
                if census[i] not in factors and census[j] not in factors:
                    return ThompsonReport(len(census), 2, len(diagonals),
                                          trivial_pairs,
                                          (census[i], census[j]))
    return ThompsonReport(len(census), 2, len(diagonals), trivial_pairs)


def wreath_order_oracle(d):
    """Order of Sym(d-1) ≀ ... ≀ Sym(d-1) ≀ Sym(d) with five inner layers,
    acting on the d(d-1)^5 leaves of the truncated regular rooted tree."""
    if not 3 <= d <= 12:
        raise ValueError("d out of the supported range 3..12")
    order = factorial(d)
    for k in range(5):
        order *= factorial(d - 1) ** (d * (d - 1) ** k)
    return order
