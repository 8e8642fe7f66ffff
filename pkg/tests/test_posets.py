import pytest

from invpoly import (
    HSequence,
    PairSet,
    Poset,
    b_expansion,
    b_from_heights,
    build_poset,
    d_S_of,
    enumerate_Ih,
    height_sequence,
    height_support_bounds,
    linear_extensions,
)
from invpoly.errors import InputError, PosetCycleError

H2 = HSequence((), 2)
S_POSET = PairSet([(1, 3), (2, 3), (2, 4), (3, 4)])

# six-element poset with covers 1<2, 2<3, 2<4, 3<5, 4<6, 5<6
P6 = Poset.from_relations(
    6, [(1, 2), (2, 3), (2, 4), (3, 5), (4, 6), (5, 6)]
)


def words(perms):
    return {str(p) for p in perms}


class TestPoset:
    def test_from_relations_closes(self):
        assert P6.less(1, 6)
        assert not P6.less(3, 4)

    def test_rejects_cycles(self):
        with pytest.raises(PosetCycleError):
            Poset.from_relations(3, [(1, 2), (2, 3), (3, 1)])

    def test_rejects_unclosed_input(self):
        with pytest.raises(InputError):
            Poset(3, frozenset([(1, 2), (2, 3)]))

    def test_down_up_maximal(self):
        assert P6.down_set(4) == {1, 2}
        assert P6.up_set(4) == {6}
        assert P6.maximal_elements() == {6}

    def test_cover_relations(self):
        assert set(P6.cover_relations()) == {
            (1, 2), (2, 3), (2, 4), (3, 5), (4, 6), (5, 6)
        }

    def test_json_round_trip(self):
        assert Poset.from_json(P6.to_json()) == P6


class TestLinearExtensions:
    def test_six_element_example(self):
        assert words(linear_extensions(P6)) == {"123456", "123546", "124356"}

    def test_chain_has_one_extension(self):
        chain = Poset.from_relations(3, [(1, 2), (2, 3)])
        assert words(linear_extensions(chain)) == {"123"}

    def test_antichain_has_all(self):
        antichain = Poset.from_relations(3, [])
        assert len(linear_extensions(antichain)) == 6


class TestHeights:
    def test_all_six_height_sequences(self):
        expect = {
            1: [3, 0, 0, 0, 0, 0],
            2: [0, 3, 0, 0, 0, 0],
            3: [0, 0, 2, 1, 0, 0],
            4: [0, 0, 1, 1, 1, 0],
            5: [0, 0, 0, 1, 2, 0],
            6: [0, 0, 0, 0, 0, 3],
        }
        for v, want in expect.items():
            assert height_sequence(P6, v) == want

    def test_support_bounds(self):
        assert height_support_bounds(P6, 4) == (2, 4)
        assert height_support_bounds(P6, 1) == (0, 0)

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            height_sequence(P6, 7)


class TestInducedPoset:
    def test_worked_example_structure(self):
        P = build_poset(H2, S_POSET)
        assert P.ground == 5
        assert set(P.cover_relations()) == {(1, 2), (3, 1), (3, 5), (4, 3)}

    def test_extensions_are_inverses_of_members(self):
        P = build_poset(H2, S_POSET)
        exts = linear_extensions(P)
        assert words(exts) == {"43512", "43152", "43125"}
        members = enumerate_Ih(H2, S_POSET, 5)
        assert {pi.inverse() for pi in members} == set(exts)

    def test_b_from_heights_bridge(self):
        assert b_from_heights(H2, S_POSET) == b_expansion(H2, S_POSET).coeffs

    def test_d_S(self):
        assert d_S_of(H2, S_POSET) == 3
