import math

import pytest

from invpoly import (
    A_star_set,
    B_k_set,
    HSequence,
    PairSet,
    Permutation,
    enumerate_Ih,
    enumerate_admissible,
    fiber_data,
    inv_h,
    poincare,
    t_of,
)
from invpoly.enumeration import enumerate_Ih_structured
from invpoly.errors import BoundExceededError, InputError
from invpoly.polynomials import QPoly

H2 = HSequence((), 2)
H3 = HSequence((), 3)
S_QUAD = PairSet([(1, 3), (2, 3), (2, 4)])
S_FIVE = PairSet([(3, 4), (3, 5), (3, 6), (4, 6), (5, 6)])


def words(perms):
    return {str(p) for p in perms}


class TestEnumerateIh:
    def test_known_small_sets(self):
        assert words(enumerate_Ih(H2, S_QUAD, 4)) == {"2413", "3412"}
        assert words(enumerate_Ih(H3, S_FIVE, 6)) == {
            "126453", "136452", "236451"
        }

    def test_empty_set_gives_identity_only(self):
        got = enumerate_Ih(H2, PairSet(), 4)
        assert got == [Permutation.identity(4)]

    def test_every_member_realizes_S(self):
        for pi in enumerate_Ih(H2, S_QUAD, 6):
            assert inv_h(H2, pi) == S_QUAD

    def test_partition_of_Sn(self):
        n = 5
        total = sum(
            len(enumerate_Ih(H2, S, n)) for S in enumerate_admissible(H2, n)
        )
        assert total == math.factorial(n)

    def test_set_outside_window_empty(self):
        assert enumerate_Ih(H2, PairSet([(1, 4)]), 5) == []

    def test_bound_enforced(self):
        with pytest.raises(BoundExceededError):
            enumerate_Ih(H2, S_QUAD, 11)
        # explicit bound overrides the default
        with pytest.raises(BoundExceededError):
            enumerate_Ih(H2, S_QUAD, 7, bound=6)

    def test_structured_matches_full_sweep(self):
        for S in (S_QUAD, S_FIVE, PairSet([(1, 2)])):
            h = H3 if S is S_FIVE else H2
            for n in range(S.j(), 8):
                assert enumerate_Ih_structured(h, S, n) == enumerate_Ih(h, S, n)

    def test_structured_empty_set(self):
        assert enumerate_Ih_structured(H2, PairSet(), 3) == [
            Permutation.identity(3)
        ]


class TestFiberData:
    def test_t_values(self):
        by_word = {
            str(fd.sigma): fd.t_value for fd in fiber_data(H2, S_QUAD)
        }
        assert by_word == {"2413": 3, "3412": 2}

    def test_constant_t_for_five_pair_set(self):
        data = fiber_data(H3, S_FIVE)
        assert sorted(fd.t_value for fd in data) == [5, 5, 5]

    def test_t_of_single(self):
        assert t_of(Permutation((2, 4, 1, 3)), H2, S_QUAD) == 3


class TestBkAndAStar:
    def test_b_k_window_counts(self):
        counts = {k: len(B_k_set(H3, S_FIVE, 8, k)) for k in range(3, 9)}
        assert counts == {3: 0, 4: 0, 5: 0, 6: 0, 7: 3, 8: 6}

    def test_b_k_members_end_correctly(self):
        for pi in B_k_set(H3, S_FIVE, 8, 7):
            assert pi.word[7] == 7

    def test_b_k_rejects_small_window(self):
        with pytest.raises(InputError):
            B_k_set(H3, S_FIVE, 7, 7)

    def test_a_star_counts(self):
        assert [len(A_star_set(H2, S_QUAD, k)) for k in range(3)] == [0, 2, 1]

    def test_a_star_sets_disjoint_interval_condition(self):
        # members whose high entries form a non-initial subset of
        # [h(m), N] (here {5} instead of {4}) belong to no A*_k
        m, hm = S_QUAD.m(), H2.h(S_QUAD.m())
        sets = [words(A_star_set(H2, S_QUAD, k)) for k in range(m + 1)]
        assert sets == [set(), {"24135", "34125"}, {"45123"}]
        all_members = words(enumerate_Ih(H2, S_QUAD, m + hm - 1))
        assert all_members - set().union(*sets) == {"25134", "35124"}


class TestAdmissibleGrouping:
    def test_counts_sum_to_factorial(self):
        for n in range(1, 7):
            assert sum(enumerate_admissible(H2, n).values()) == math.factorial(n)

    def test_every_key_admissible(self):
        from invpoly import is_admissible

        for S in enumerate_admissible(H2, 5):
            assert is_admissible(H2, S)

    def test_tail1_n3_partition(self):
        got = {
            S: c for S, c in enumerate_admissible(HSequence((), 1), 3).items()
        }
        # descent-set grouping of S_3: each of the four descent sets, with
        # multiplicities 1, 2, 2, 1
        expect = {
            PairSet(): 1,
            PairSet([(1, 2)]): 2,
            PairSet([(2, 3)]): 2,
            PairSet([(1, 2), (2, 3)]): 1,
        }
        assert got == expect


class TestPoincare:
    def test_tail1_n3(self):
        assert poincare(HSequence((), 1), 3) == QPoly((1, 0, 4, 0, 1))

    def test_tail2_n3(self):
        assert poincare(H2, 3) == QPoly((1, 0, 2, 0, 2, 0, 1))

    def test_t_equals_one_gives_factorial(self):
        for n in range(1, 7):
            assert poincare(H2, n).at_one() == math.factorial(n)
