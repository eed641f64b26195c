from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qnk.partitions import (
    DecoratedTuple,
    ThetaVector,
    YoungDiagram,
    a_count,
    a_infinity,
    a_tilde,
    enumerate_decorated,
    enumerate_theta,
    pairing,
    pairing_half,
    partition_count,
    rank1_bijection,
    rank1_inverse,
    restricted_partition_count,
    young_diagrams,
)
from qnk.series import NEG_INFINITY, euler_product_inv, lattice_theta_sum

from oracles import brute_a_count, brute_a_tilde, brute_partitions, brute_theta


class TestYoungDiagram:
    def test_invariants(self):
        with pytest.raises(ValueError):
            YoungDiagram((1, 2))
        with pytest.raises(ValueError):
            YoungDiagram((2, 0))

    def test_size_and_columns(self):
        y = YoungDiagram((3, 1, 1))
        assert (y.size, y.columns) == (5, 3)
        assert y.column_heights() == (3, 1, 1)
        assert YoungDiagram().columns == 0

    def test_from_columns(self):
        assert YoungDiagram.from_columns([0, 1]) == YoungDiagram((1,))
        assert YoungDiagram.from_columns([1, 1]) == YoungDiagram((2,))
        assert YoungDiagram.from_columns([1, 3]) == YoungDiagram((2, 1, 1))

    def test_enumeration_matches_oracle(self):
        for n in range(9):
            for cap in range(0, 5):
                got = sorted(y.rows for y in young_diagrams(n, cap))
                assert got == brute_partitions(n, cap)


class TestPartitionCount:
    def test_values(self):
        assert partition_count(0) == 1
        assert partition_count(4) == 5
        assert partition_count(6) == 11

    def test_against_enumeration(self):
        for n in range(25):
            assert partition_count(n) == len(brute_partitions(n))

    def test_restricted(self):
        for n in range(15):
            for k in range(6):
                assert restricted_partition_count(n, k) == len(brute_partitions(n, k))


class TestTheta:
    def test_examples(self):
        assert enumerate_theta(1, 2, 1) == [ThetaVector((1, 0, 1))]
        assert enumerate_theta(2, 1, 0) == [ThetaVector((2,))]
        assert enumerate_theta(1, 0, 0) == [ThetaVector(())]
        assert enumerate_theta(1, 0, 3) == []

    @pytest.mark.parametrize("r,d", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)])
    def test_against_brute_force(self, r, d):
        for j in range(6):
            got = sorted(v.entries for v in enumerate_theta(r, d, j))
            assert got == sorted(brute_theta(r, d, j))

    def test_canonical_form(self):
        with pytest.raises(ValueError):
            ThetaVector((1, 0))
        assert ThetaVector.canonical((1, 0, 0)) == ThetaVector((1,))

    def test_all_sums(self):
        for v in enumerate_theta(3, 3, 7):
            assert v.total == 9
            assert v.weight == 7 + 3 * 3 * 4 // 2
            assert all(0 <= k <= 3 for k in v.entries)


class TestCounters:
    def test_a_tilde_examples(self):
        assert a_tilde(2, 1, 0) == 1
        assert a_tilde(2, 1, 1) == 4
        assert a_tilde(1, 2, 2) == 2

    def test_a_count_examples(self):
        assert a_count(2, 1, 1) == 4
        assert a_count(2, 1, 0) == 1

    def test_a_count_rank_one(self):
        for k in range(6):
            for j in range(10):
                assert a_count(1, k, j) == len(brute_partitions(j, k))

    def test_a_tilde_d0(self):
        for r in (1, 2, 3):
            assert [a_tilde(r, 0, j) for j in range(4)] == [1, 0, 0, 0]

    @pytest.mark.parametrize("r,d", [(1, 2), (2, 1), (2, 2), (3, 1)])
    def test_against_brute(self, r, d):
        # oracle values: (1,2): 1,1,2,2,3  (2,1): 1,4,5,8,9  (2,2): 1,4,9,16,30  (3,1): 1,9,18,37,54
        for j in range(5):
            assert a_tilde(r, d, j) == brute_a_tilde(r, d, j)
            assert a_count(r, d, j) == brute_a_count(r, d, j)

    def test_decorated_enumeration(self):
        tuples = list(enumerate_decorated(2, 1, 1))
        assert len(tuples) == 4
        assert {t.m for t in tuples} == {(1, 1), (2, 0), (0, 2)}
        for r, d, j in [(2, 2, 3), (3, 1, 3), (1, 4, 6)]:
            assert len(list(enumerate_decorated(r, d, j))) == a_count(r, d, j)

    def test_decorated_invariant(self):
        with pytest.raises(ValueError):
            DecoratedTuple(((1, YoungDiagram((2,))),))

    def test_a_infinity(self):
        assert a_infinity(1, 5) == 7
        assert a_infinity(2, 0) == 1
        assert a_infinity(2, 1) == 4
        for d in range(1, 5):
            assert a_count(2, d, 1) == 4

    def test_lemma_agreement(self):
        for r in (1, 2, 3):
            for d in range(4):
                theta = lattice_theta_sum(r, -d, d, 8)
                for j in range(9):
                    assert a_tilde(r, d, j) == a_count(r, d, j) == theta[j]

    def test_rank_one_stable_range(self):
        for d in range(8):
            for j in range(d + 1):
                assert a_count(1, d, j) == partition_count(j)


class TestPairing:
    def test_values(self):
        assert pairing((0, 0, 0)) == 0
        assert pairing((1, -1)) == 2
        assert pairing((2, 0)) == 2
        assert isinstance(pairing((1, 0, 0)), Fraction)

    def test_half_is_integral_for_zero_sum_offsets(self):
        assert pairing_half((3, 0, 0)) == 3

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(-10, 10), min_size=1, max_size=5), st.integers(-6, 6))
    def test_shift_invariance(self, m, c):
        assert pairing(m) == pairing([x - c for x in m])

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(-10, 10), min_size=1, max_size=5))
    def test_quadratic_identity(self, m):
        r = len(m)
        total = sum(m)
        lhs = sum((a - b) ** 2 for a in m for b in m)
        assert lhs == 2 * r * sum(a * a for a in m) - 2 * total * total
        if total % r == 0:
            d = total // r
            assert lhs == 2 * r * sum(a * a for a in m) - 2 * r * r * d * d


class TestBijection:
    def test_examples(self):
        assert rank1_bijection((1, 0, 1)) == YoungDiagram((1,))
        assert rank1_bijection((0, 1, 1)) == YoungDiagram((2,))
        assert rank1_bijection((1, 1, 1, 1)) == YoungDiagram()
        assert rank1_bijection(()) == YoungDiagram()

    def test_rejects_higher_rank(self):
        with pytest.raises(ValueError):
            rank1_bijection((2, 1))

    def test_inverse_rejects_wide(self):
        with pytest.raises(ValueError):
            rank1_inverse(YoungDiagram((3,)), 2)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 6), st.integers(0, 10), st.data())
    def test_roundtrip_random(self, d, j, data):
        diagrams = list(young_diagrams(j, d))
        if not diagrams:
            return
        y = data.draw(st.sampled_from(diagrams))
        v = rank1_inverse(y, d)
        assert v.total == d
        assert v.weight == j + d * (d + 1) // 2
        assert rank1_bijection(v) == y
        assert v in enumerate_theta(1, d, j)

    def test_image_is_exact(self):
        for d in range(6):
            for j in range(8):
                images = [rank1_bijection(v) for v in enumerate_theta(1, d, j)]
                assert len(images) == len(set(images))
                assert sorted(images) == sorted(young_diagrams(j, d))
