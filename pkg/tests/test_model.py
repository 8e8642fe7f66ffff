import pytest

from invpoly import (
    HSequence,
    PairSet,
    Permutation,
    inv_h,
    is_admissible,
    is_h_closed,
    possible_pairs,
)
from invpoly.errors import InputError, NoDescentError


class TestHSequence:
    def test_tail_values(self):
        h = HSequence((), 2)
        assert [h.h(i) for i in range(1, 6)] == [3, 4, 5, 6, 7]

    def test_prefix_then_tail(self):
        h = HSequence((2, 4, 4, 5), 1)
        assert [h.h(i) for i in range(1, 8)] == [2, 4, 4, 5, 6, 7, 8]

    def test_rejects_h_not_above_index(self):
        with pytest.raises(InputError):
            HSequence((2, 2), 1)

    def test_rejects_decreasing(self):
        with pytest.raises(InputError):
            HSequence((4, 3), 1)

    def test_rejects_seam_drop(self):
        # prefix ends at 9 but the tail would continue at h(3) = 4
        with pytest.raises(InputError):
            HSequence((9, 9), 1)

    def test_rejects_nonpositive_tail(self):
        with pytest.raises(InputError):
            HSequence((), 0)

    def test_json_round_trip(self):
        h = HSequence((3, 4, 6, 7, 7), 2)
        assert HSequence.from_json(h.to_json()) == h


class TestPermutation:
    def test_rejects_non_permutation(self):
        with pytest.raises(InputError):
            Permutation((1, 1, 2))

    def test_length_counts_inversions(self):
        assert Permutation((4, 5, 2, 3, 1)).length() == 8
        assert Permutation.identity(5).length() == 0

    def test_inversions(self):
        assert Permutation((3, 1, 2)).inversions() == PairSet([(1, 2), (1, 3)])

    def test_flatten_preserves_relative_order(self):
        assert Permutation((4, 5, 2, 3, 1)).flatten(3).word == (2, 3, 1)

    def test_inverse(self):
        pi = Permutation((3, 4, 2, 1, 5))
        assert pi.inverse().word == (4, 3, 1, 2, 5)
        assert pi.inverse().inverse() == pi

    def test_str(self):
        assert str(Permutation((2, 4, 1, 3))) == "2413"
        assert str(Permutation(tuple(range(1, 11)))) == "1.2.3.4.5.6.7.8.9.10"


class TestPairSet:
    def test_canonical_order_and_dedup(self):
        S = PairSet([(2, 3), (1, 2), (2, 3)])
        assert S.pairs == ((1, 2), (2, 3))

    def test_rejects_bad_pairs(self):
        with pytest.raises(InputError):
            PairSet([(3, 2)])
        with pytest.raises(InputError):
            PairSet([(0, 2)])

    def test_j_and_m(self):
        S = PairSet([(1, 3), (2, 3), (2, 4)])
        assert S.j() == 4
        assert S.m() == 2

    def test_j_undefined_for_empty(self):
        with pytest.raises(InputError):
            PairSet().j()

    def test_m_requires_a_descent(self):
        with pytest.raises(NoDescentError):
            PairSet([(1, 3)]).m()

    def test_immutable_and_hashable(self):
        S = PairSet([(1, 2)])
        with pytest.raises(AttributeError):
            S.pairs = ()
        assert S in {PairSet([(1, 2)])}

    def test_json_round_trip(self):
        S = PairSet([(1, 3), (2, 3)])
        assert PairSet.from_json(S.to_json()) == S


class TestWindowAndInversions:
    def test_possible_pairs_tail1_is_descent_pairs(self):
        assert possible_pairs(HSequence((), 1), 4).pairs == (
            (1, 2), (2, 3), (3, 4)
        )

    def test_possible_pairs_respects_prefix(self):
        got = possible_pairs(HSequence((2, 4, 4, 5), 1), 5).pairs
        assert got == ((1, 2), (2, 3), (2, 4), (3, 4), (4, 5))

    def test_inv_h_restricts_inversions(self):
        h = HSequence((), 2)
        pi = Permutation((4, 5, 2, 3, 1))
        assert inv_h(h, pi) == PairSet(
            [(1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]
        )

    def test_inv_h_tail1_is_descent_set(self):
        h = HSequence((), 1)
        pi = Permutation((3, 1, 4, 2))
        assert inv_h(h, pi) == PairSet([(1, 2), (3, 4)])


class TestAdmissibility:
    def test_empty_set_admissible(self):
        assert is_admissible(HSequence((), 2), PairSet())

    def test_realized_set_admissible(self):
        h = HSequence((), 2)
        S = inv_h(h, Permutation((4, 5, 2, 3, 1)))
        assert is_admissible(h, S)

    def test_set_outside_window_inadmissible(self):
        # (1, 4) is not a possible pair when h(1) = 3
        assert not is_admissible(HSequence((), 2), PairSet([(1, 4)]))

    def test_closure_failure_inadmissible(self):
        # (1,2), (2,3) in S force (1,3) when h(1) >= 3
        h = HSequence((), 2)
        assert not is_admissible(h, PairSet([(1, 2), (2, 3)]))
        assert is_admissible(h, PairSet([(1, 2), (2, 3), (1, 3)]))

    def test_complement_closure_failure_inadmissible(self):
        # complement holds (1,2), (2,3) but not (1,3)
        h = HSequence((), 2)
        assert not is_admissible(h, PairSet([(1, 3)]))

    def test_is_h_closed_direct(self):
        h = HSequence((), 2)
        assert not is_h_closed(h, PairSet([(1, 2), (2, 3)]), 3)
        assert is_h_closed(h, PairSet([(1, 2), (2, 3), (1, 3)]), 3)
