"""End-to-end acceptance checklist.

One test per criterion; each prints a single PASS line on success (and
pytest itself reports the fail line otherwise).
"""

import random
import time
from math import factorial

from treelat.classtables import (lps_exceptions, min_index_psl2, simple_235,
                                 two_transitive_table)
from treelat.desksearch import (gap_replication_11_4, thompson_check,
                                wreath_order_oracle)
from treelat.graphaction import action_from_vertex_group, \
    kernel_on_quotient_check
from treelat.groupzoo import (alternating, dihedral, frobenius20,
                              pgl2_5_degree6, psl2_5_degree6, symmetric)
from treelat.permcore import Permutation, PermGroup
from treelat.productcheck import (check_hypotheses, product_orbit_report,
                                  sym5_complete5_petersen_instance,
                                  sym5_complete6_petersen_instance,
                                  theta4_cube_instance)
from treelat.serregraph import cycle_graph
from treelat.verdict import (LocalActionClass, classify_2transitive_small,
                             theorem11_bound, theorem12_verdict,
                             theorem12_verdict_from_classes)


def _ok(n, text):
    print(f"ACCEPTANCE {n}: PASS — {text}")


def _table1_groups(degree):
    return {
        3: [symmetric(3)],
        4: [alternating(4), symmetric(4)],
        5: [frobenius20(), alternating(5), symmetric(5)],
        6: [psl2_5_degree6(), pgl2_5_degree6(), alternating(6), symmetric(6)],
    }[degree]


def _alt_class(d):
    return LocalActionClass(d, factorial(d) // 2, "AltD", f"Alt({d})")


def test_criterion_1_known_reducible_pairs():
    start = time.monotonic()
    sym3 = classify_2transitive_small(symmetric(3))
    sym4 = classify_2transitive_small(symmetric(4))
    f20 = classify_2transitive_small(frobenius20())
    expected = [
        (23, 3, sym3, "i"),
        (24, 3, sym3, "i"),
        (47, 3, sym3, "i"),
        (11663, 4, sym4, "ii"),
        (19, 5, f20, "iii"),
        (39, 5, f20, "iii"),
        (79, 5, f20, "iii"),
    ]
    for d1, d2, c2, case in expected:
        v = theorem12_verdict_from_classes(d1, d2, _alt_class(d1), c2)
        assert v.status == "ExceptionalCase", (d1, d2, v)
        assert [m.case for m in v.matched_cases] == [case], (d1, d2, v)
        if case == "ii":
            assert "972" in v.matched_cases[0].witness
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    _ok(1, f"7 exceptional pairs matched in {elapsed:.3f}s")


def test_criterion_2_small_degrees_exhaustive():
    groups = {d: _table1_groups(d) for d in range(3, 7)}
    for gs in groups.values():  # warm the stabilizer chains up front
        for g in gs:
            g.order()
    start = time.monotonic()
    checked = 0
    for d1 in range(3, 7):
        for d2 in range(3, 7):
            for f1 in groups[d1]:
                for f2 in groups[d2]:
                    v = theorem12_verdict(d1, d2, f1, f2)
                    assert v.status == "Irreducible", (d1, d2, v)
                    checked += 1
    assert checked == 100
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    _ok(2, f"all {checked} small-degree ordered pairs irreducible "
           f"in {elapsed:.3f}s")


def test_criterion_3_gap_replication():
    reports = {t: gap_replication_11_4(threads=t) for t in (1, 4, 8)}
    base = reports[1]
    assert base.total_candidates == 39916800
    assert base.counts == {"cond1": 137608, "cond2": 5088,
                           "cond1&cond2": 504, "cond1&cond2&cond3": 0}
    assert base.survivors == ()
    for t in (4, 8):
        assert reports[t].total_candidates == base.total_candidates
        assert reports[t].counts == base.counts
        assert reports[t].survivors == base.survivors
    assert all(r.wall_time < 1800 for r in reports.values())
    _ok(3, "39916800 candidates, 0 survivors, identical for 1/4/8 threads")


def test_criterion_4_wreath_bound():
    for d in range(3, 9):
        assert theorem11_bound(d) == wreath_order_oracle(d)
    assert theorem11_bound(3) == 6 * 2 ** 93
    _ok(4, "closed-form bound equals wreath order for d = 3..8")


def test_criterion_5_thompson():
    start = time.monotonic()
    rep = thompson_check()
    assert rep.census_size == 122
    assert (rep.factor_count, rep.diagonal_count) == (2, 120)
    assert rep.counterexample is None
    elapsed = time.monotonic() - start
    assert elapsed < 60
    _ok(5, f"census 122, no counterexample, {elapsed:.1f}s")


def test_criterion_6_product_probes():
    inst = theta4_cube_instance()
    rep = check_hypotheses(inst, symmetric(4),
                           PermGroup.from_cycles(3, "(0 1 2)", "(0 1)"))
    assert (rep.hyp1, rep.hyp2, rep.hyp3, rep.hyp4, rep.hyp5) == (True,) * 5
    assert not rep.hyp6
    assert product_orbit_report(inst) == [(16, 3)]
    assert product_orbit_report(sym5_complete6_petersen_instance()) == \
        [(60, 2)]
    assert product_orbit_report(sym5_complete5_petersen_instance()) == \
        [(20, 6), (30, 4)]
    _ok(6, "orbit/stabilizer profiles of all three probes as printed")


def test_criterion_7_kernel_quotient_suite():
    rng = random.Random(1140)
    checked = 0
    while checked < 110:
        n = rng.randrange(9, 61)
        divisors = [m for m in range(2, n) if n % m == 0 and n // m >= 3]
        if not divisors:
            continue
        m = rng.choice(divisors)  # |N| = m rotations, quotient length n/m
        if rng.random() < 0.5:
            group = PermGroup.from_cycles(
                n, "(" + " ".join(map(str, range(n))) + ")")
        else:
            group = dihedral(n)
        assert group.order() <= 10 ** 4
        action = action_from_vertex_group(cycle_graph(n), group)
        step = n // m
        normal = PermGroup(n, [Permutation((x + step) % n for x in range(n))])
        assert kernel_on_quotient_check(action, normal)
        checked += 1
    _ok(7, f"kernel equals normal subgroup on {checked} randomized "
           f"instances")


def test_criterion_8_table_fidelity():
    rows = two_transitive_table()
    assert len(rows) == 10
    assert [(r.degree, r.order) for r in rows] == [
        (3, 6), (4, 12), (4, 24), (5, 20), (5, 60), (5, 120),
        (6, 60), (6, 120), (6, 360), (6, 720)]
    assert {q: min_index_psl2(q) for q in (2, 3, 5, 7, 9, 11)} == \
        {2: 2, 3: 3, 5: 5, 7: 7, 9: 6, 11: 11}
    assert min_index_psl2(13) == 14
    assert len(lps_exceptions()) == 7
    assert [e.order for e in simple_235()] == [60, 360, 25920]
    _ok(8, "all classification tables match the printed constants")


def _pair_orbit_oracle(group):
    """Independent 2-transitivity test: full orbit of an ordered pair under
    every group element."""
    d = group.degree
    elems = list(group.elements())
    orbit = {(g.images[0], g.images[1]) for g in elems}
    return len(orbit) == d * (d - 1)


def test_criterion_9_property_suites():
    rng = random.Random(9)
    for _ in range(1000):
        d = rng.randrange(4, 9)
        gens = [Permutation(rng.sample(range(d), d)) for _ in range(2)]
        group = PermGroup(d, gens)
        x = rng.randrange(d)
        assert len(group.orbit(x)) * group.point_stabilizer(x).order() == \
            group.order()

    for d in range(3, 7):
        for f in _table1_groups(d):
            assert f.is_2_transitive() == _pair_orbit_oracle(f)

    labels = [classify_2transitive_small(g)
              for d in range(3, 7) for g in _table1_groups(d)]
    labels += [_alt_class(d) for d in (7, 10, 23, 24, 47, 720)]
    for _ in range(500):
        c1, c2 = rng.choice(labels), rng.choice(labels)
        a = theorem12_verdict_from_classes(c1.degree, c2.degree, c1, c2)
        b = theorem12_verdict_from_classes(c2.degree, c1.degree, c2, c1)
        assert a.status == b.status
        assert {(m.case, m.witness) for m in a.matched_cases} == \
            {(m.case, m.witness) for m in b.matched_cases}
    _ok(9, "orbit-stabilizer, 2-transitivity oracle, and verdict symmetry "
           "properties hold")
