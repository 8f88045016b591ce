import random
from math import factorial

import numpy as np
import pytest

from treelat.desksearch import (
    _alt4_regular,
    _condition3,
    _partition,
    double_coset_conditions_direct,
    thompson_check,
    wreath_order_oracle,
)
from treelat.permcore import Permutation, PermGroup
from treelat.verdict import theorem11_bound


@pytest.fixture(scope="module")
def kmat():
    return _alt4_regular()


@pytest.fixture(scope="module")
def kinv(kmat):
    out = np.empty_like(kmat)
    for w in range(12):
        out[w, kmat[w]] = np.arange(12, dtype=np.uint8)
    return out


class TestRegularAlt4:
    def test_rows_form_a_regular_group(self, kmat):
        group = PermGroup(12, [Permutation(kmat[w]) for w in range(12)])
        assert group.order() == 12
        assert all(len(o) == 12 for o in group.orbits())

    def test_row_indexing_by_image_of_zero(self, kmat):
        for w in range(12):
            assert kmat[w, 0] == w

    def test_identity_row(self, kmat):
        assert list(kmat[0]) == list(range(12))


class TestDoubleCosetConditions:
    def _random_g(self, rng):
        rest = rng.sample(range(1, 12), 11)
        return (0,) + tuple(rest)

    def _vector_flags(self, g, kmat, kinv):
        gi = [0] * 12
        for x, y in enumerate(g):
            gi[y] = x
        hits = sum(
            tuple(g[kmat[v][gi[x]]] for x in range(12)) == tuple(kmat[g[v]])
            for v in range(1, 12))
        cond2 = hits == 2
        cond1 = any(
            (p := tuple(gi[kinv[w][gi[x]]] for x in range(12)))
            == tuple(kmat[p[0]])
            for w in range(12))
        return cond1, cond2

    def test_direct_oracle_agrees_on_random_sample(self, kmat, kinv):
        rng = random.Random(20260823)
        for _ in range(200):
            g = self._random_g(rng)
            assert self._vector_flags(g, kmat, kinv) == \
                double_coset_conditions_direct(g, kmat)

    def test_coset_size_equivalence(self, kmat):
        # |KgK| = 4|K| iff |K ∩ gKg⁻¹| = 3, by the double-coset counting
        # identity |KgK| = |K|^2 / |K ∩ gKg⁻¹|
        rng = random.Random(99)
        k_elems = [tuple(int(x) for x in kmat[w]) for w in range(12)]

        def comp(a, b):
            return tuple(a[b[x]] for x in range(12))

        for _ in range(100):
            g = self._random_g(rng)
            gi = [0] * 12
            for x, y in enumerate(g):
                gi[y] = x
            coset = {comp(k1, comp(g, k2))
                     for k1 in k_elems for k2 in k_elems}
            conj_meet = sum(comp(g, comp(k, tuple(gi))) in set(k_elems)
                            for k in k_elems)
            assert (len(coset) == 48) == (conj_meet == 3)

    def test_identity_candidate(self, kmat, kinv):
        g = tuple(range(12))
        cond1, cond2 = double_coset_conditions_direct(g, kmat)
        assert cond1  # identity lies in its own double coset
        assert not cond2  # the conjugate intersection is all of K

    def test_condition3_on_known_groups(self, kmat):
        # gK for g = identity generates only K itself
        assert not _condition3(tuple(range(12)), kmat)
        # an 11-cycle together with K generates at least Alt(12)
        g = (0,) + tuple(range(2, 12)) + (1,)
        assert _condition3(g, kmat)


class TestPartitionReduction:
    def test_partition_counts_frozen(self, kmat, kinv):
        # golden values, first computed by the vectorized path and spot
        # verified against the 144-product oracle above
        c1, c2, both = _partition(kmat, kinv, 1)
        assert (c1, c2, len(both)) == (16042, 474, 54)

    def test_partition_is_deterministic(self, kmat, kinv):
        a = _partition(kmat, kinv, 5)
        b = _partition(kmat, kinv, 5)
        assert a == b


class TestThompson:
    def test_census_and_no_counterexample(self):
        rep = thompson_check()
        assert rep.census_size == 122
        assert rep.factor_count == 2
        assert rep.diagonal_count == 120
        assert rep.trivial_intersection_pairs == 241
        assert rep.counterexample is None

    def test_pair_count_breakdown(self):
        # factor-factor (1) plus factor-diagonal (2 * 120); no two
        # distinct diagonals meet trivially
        assert 1 + 2 * 120 == 241


class TestWreathOracle:
    def test_closed_form_agreement(self):
        for d in range(3, 9):
            assert wreath_order_oracle(d) == theorem11_bound(d)

    def test_degree3_value(self):
        assert wreath_order_oracle(3) == 6 * 2 ** 93

    def test_degree4_value(self):
        assert wreath_order_oracle(4) == 24 * 6 ** 484

    def test_exponent_sum_degree3(self):
        assert 3 + 6 + 12 + 24 + 48 == 93 == 3 * (2 ** 5 - 1) // 1

    def test_range_enforced(self):
        with pytest.raises(ValueError):
            wreath_order_oracle(2)
        with pytest.raises(ValueError):
            wreath_order_oracle(13)
