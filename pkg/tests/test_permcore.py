import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelat.errors import GroupTooLarge
from treelat.permcore import Permutation, PermGroup, parse_perm_list, subgroup_of


def sym(n):
    return PermGroup.from_cycles(n, "(" + " ".join(map(str, range(n))) + ")", "(0 1)")


def alt(n):
    gens = ["(0 1 2)"]
    if n > 3:
        cyc = " ".join(map(str, range(n))) if n % 2 else " ".join(map(str, range(1, n)))
        gens.append("(" + cyc + ")")
    return PermGroup.from_cycles(n, *gens)


class TestPermutation:
    def test_roundtrip_cycle_notation(self):
        p = Permutation.from_cycles("(0 1 2)(3 4)")
        assert p.cycle_string() == "(0 1 2)(3 4)"
        assert Permutation.from_cycles(p.cycle_string()) == p

    def test_identity_prints_as_empty_parens(self):
        assert Permutation.identity(5).cycle_string() == "()"
        assert Permutation.from_cycles("()", degree=3) == Permutation.identity(3)

    def test_composition_is_left_to_right(self):
        p = Permutation.from_cycles("(0 1)", degree=3)
        q = Permutation.from_cycles("(1 2)", degree=3)
        # apply p first: 0 -> 1 -> 2
        assert (p * q)(0) == 2

    def test_inverse(self):
        p = Permutation.from_cycles("(0 1 2 3 4)")
        assert (p * p.inverse()).is_identity()

    def test_order(self):
        assert Permutation.from_cycles("(0 1 2)(3 4)").order() == 6

    def test_rejects_bad_images(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    def test_rejects_overlapping_cycles(self):
        with pytest.raises(ValueError):
            Permutation.from_cycles("(0 1)(1 2)")

    @given(st.permutations(list(range(8))), st.permutations(list(range(8))))
    def test_cycle_string_roundtrip_random(self, a, b):
        p, q = Permutation(a), Permutation(b)
        assert Permutation.from_cycles((p * q).cycle_string(), degree=8) == p * q
        assert (p * q).inverse() == q.inverse() * p.inverse()


class TestOrders:
    def test_symmetric_groups(self):
        for n in (3, 4, 5, 6, 7):
            assert sym(n).order() == math.factorial(n)

    def test_alternating_groups(self):
        for n in (3, 4, 5, 6, 7):
            assert alt(n).order() == math.factorial(n) // 2

    def test_frobenius_20(self):
        g = PermGroup.from_cycles(5, "(0 1 2 3 4)", "(1 2 4 3)")
        assert g.order() == 20

    def test_psl_3_2(self):
        # generators derived from matrices over F2 acting on nonzero vectors
        g = PermGroup.from_cycles(7, "(0 1 4 2 6 5 3)", "(1 3)(2 4)")
        assert g.order() == 168

    def test_frobenius_21(self):
        g = PermGroup.from_cycles(7, "(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)")
        assert g.order() == 21

    def test_large_symmetric(self):
        assert sym(24).order() == math.factorial(24)

    def test_trivial(self):
        assert PermGroup.trivial(4).order() == 1

    def test_membership(self):
        g = alt(5)
        assert g.contains("(0 1 2)")
        assert not g.contains("(0 1)")
        assert g.contains(Permutation.identity(5))


class TestElements:
    def test_element_listing_matches_order(self):
        g = PermGroup.from_cycles(5, "(0 1 2 3 4)", "(1 2 4 3)")
        elems = list(g.elements())
        assert len(elems) == 20 == len({e.images for e in elems})
        assert all(g.contains(e) for e in elems)

    def test_cap_enforced(self):
        with pytest.raises(GroupTooLarge):
            list(sym(12).elements(cap=10**6))

    def test_listing_is_deterministic(self):
        a = [e.images for e in sym(4).elements()]
        b = [e.images for e in sym(4).elements()]
        assert a == b


class TestOrbitsAndTransitivity:
    def test_orbits_of_intransitive_group(self):
        g = PermGroup.from_cycles(5, "(0 1 2)", "(3 4)")
        assert g.orbits() == [[0, 1, 2], [3, 4]]

    def test_two_transitive(self):
        assert sym(5).is_2_transitive()
        assert alt(5).is_2_transitive()
        assert PermGroup.from_cycles(5, "(0 1 2 3 4)", "(1 2 4 3)").is_2_transitive()
        # cyclic C5 is transitive but not 2-transitive
        assert not PermGroup.from_cycles(5, "(0 1 2 3 4)").is_2_transitive()

    def test_contains_alt(self):
        assert sym(6).contains_alt()
        assert alt(6).contains_alt()
        assert not PermGroup.from_cycles(6, "(0 1 2 3 4 5)").contains_alt()

    def test_orbit_transversal_maps_basepoint(self):
        g = sym(5)
        for x, t in g.orbit_transversal(2).items():
            assert t(2) == x


class TestStabilizers:
    def test_point_stabilizer_of_sym(self):
        s = sym(5).point_stabilizer(0)
        assert s.order() == 24
        assert all(g(0) == 0 for g in s.generators)

    def test_orbit_stabilizer_product(self):
        g = PermGroup.from_cycles(7, "(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)")
        orb, stab = g.stabilizer_chain_order(0)
        assert orb * stab == g.order()


class TestNormalStructure:
    def test_normal_closure_of_3cycle_in_sym(self):
        g = sym(5)
        n = g.normal_closure([Permutation.from_cycles("(0 1 2)", degree=5)])
        assert n.order() == 60

    def test_is_normal(self):
        g = sym(4)
        v4 = PermGroup.from_cycles(4, "(0 1)(2 3)", "(0 2)(1 3)")
        assert g.is_normal(v4)
        assert not g.is_normal(PermGroup.from_cycles(4, "(0 1)"))

    def test_minimal_normal_subgroups_sym4(self):
        mins = sym(4).minimal_normal_subgroups()
        assert [m.order() for m in mins] == [4]

    def test_minimal_normal_subgroups_simple(self):
        mins = alt(5).minimal_normal_subgroups()
        assert [m.order() for m in mins] == [60]

    def test_minimal_normal_subgroups_direct_product(self):
        # C3 x C3 acting on 3+3 points: two minimal normal subgroups of
        # order 3 plus two diagonals
        g = PermGroup.from_cycles(6, "(0 1 2)", "(3 4 5)")
        mins = g.minimal_normal_subgroups()
        assert sorted(m.order() for m in mins) == [3, 3, 3, 3]

    def test_quasi_primitive(self):
        assert alt(5).is_quasi_primitive()
        assert sym(4).is_quasi_primitive()
        assert not PermGroup.from_cycles(6, "(0 1 2)", "(3 4 5)").is_quasi_primitive()
        # D4 on the square: minimal normal subgroup <(0 2)(1 3)> is intransitive
        d4 = PermGroup.from_cycles(4, "(0 1 2 3)", "(1 3)")
        assert not d4.is_quasi_primitive()


class TestIntersection:
    def test_intersection_of_point_stabilizers(self):
        g = sym(5)
        both = g.point_stabilizer(0).intersection(g.point_stabilizer(1))
        assert both.order() == 6

    def test_intersection_picks_out_common_cycle(self):
        a = PermGroup.from_cycles(6, "(0 1 2 3 4 5)")
        b = PermGroup.from_cycles(6, "(0 2 4)", "(1 3 5)")
        # the only overlap is powers of the 6-cycle's square
        assert a.intersection(b).order() == 3

    def test_intersection_trivial(self):
        a = PermGroup.from_cycles(6, "(0 1 2 3 4 5)")
        b = PermGroup.from_cycles(6, "(0 1 2)", "(3 4 5)")
        assert a.intersection(b).order() == 1


class TestRegularRepresentation:
    def test_regular_rep_is_free_and_transitive(self):
        g = PermGroup.from_cycles(5, "(0 1 2 3 4)", "(1 2 4 3)")
        r = g.regular_representation()
        assert r.degree == 20
        assert r.order() == 20
        assert r.is_transitive()
        for e in r.elements():
            if not e.is_identity():
                assert all(e(x) != x for x in range(20))


class TestParseList:
    def test_parse_list_pads_to_common_degree(self):
        perms = parse_perm_list("(0 1 2), (3 4)")
        assert all(p.degree == 5 for p in perms)

    def test_subgroup_of(self):
        assert subgroup_of(alt(4), sym(4))
        assert not subgroup_of(sym(4), alt(4))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_subgroup_orders_divide(seed):
    rng = random.Random(seed)
    n = rng.randrange(4, 8)
    g = sym(n)
    picks = [Permutation(rng.sample(range(n), n)) for _ in range(2)]
    h = PermGroup(n, picks)
    assert g.order() % h.order() == 0
    assert all(g.contains(p) for p in h.elements())
