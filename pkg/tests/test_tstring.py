"""T-string generation, recognition, and parameter arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wahlkit import (
    TString,
    WahlParams,
    apply_L,
    apply_R,
    as_entries,
    checksum_ok,
    enumerate_tstrings,
    eval_cf,
    hj_expand,
    is_tstring,
    iter_tstrings,
    params_after_L,
    params_after_R,
    tstring_to_params,
    wahl_tstring,
)

# Expansions of n/m as minus continued fractions, checked by hand.
HJ_EXPANSIONS = {
    (4, 1): (4,),
    (9, 2): (5, 2),
    (4, 3): (2, 2, 2),
    (25, 9): (3, 5, 2),
    (16, 3): (6, 2, 2),
    (16, 11): (2, 2, 6),
    (25, 14): (2, 5, 3),
}

# (p, q) -> resolution string, checked by hand against p^2/(pq-1).
WAHL_STRINGS = {
    (2, 1): (4,),
    (3, 1): (5, 2),
    (3, 2): (2, 5),
    (5, 2): (3, 5, 2),
    (5, 3): (2, 5, 3),
    (4, 1): (6, 2, 2),
    (4, 3): (2, 2, 6),
}

LENGTH_3_STRINGS = {(2, 2, 6), (2, 5, 3), (3, 5, 2), (6, 2, 2)}
LENGTH_4_STRINGS = {
    (2, 2, 2, 7),
    (3, 2, 6, 2),
    (2, 2, 5, 4),
    (3, 5, 3, 2),
    (2, 3, 5, 3),
    (4, 5, 2, 2),
    (2, 6, 2, 3),
    (7, 2, 2, 2),
}


def _level_entries(levels, ell):
    return {as_entries(t) for t in levels[ell]}


class TestHJExpansion:
    @pytest.mark.parametrize("nm,expected", sorted(HJ_EXPANSIONS.items()))
    def test_known_expansions(self, nm, expected):
        assert hj_expand(*nm) == expected

    def test_eval_cf_inverts_expansion(self):
        for (n, m), b in HJ_EXPANSIONS.items():
            assert eval_cf(b) == Fraction(n, m)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            hj_expand(4, 0)
        with pytest.raises(ValueError):
            hj_expand(4, 4)
        with pytest.raises(ValueError):
            hj_expand(9, 6)

    @given(st.integers(2, 400))
    def test_every_ratio_expands_with_entries_at_least_two(self, n):
        for m in range(1, n):
            if math.gcd(n, m) == 1:
                b = hj_expand(n, m)
                assert all(x >= 2 for x in b)
                assert eval_cf(b) == Fraction(n, m)
                break


class TestWahlStrings:
    @pytest.mark.parametrize("pq,expected", sorted(WAHL_STRINGS.items()))
    def test_known_strings(self, pq, expected):
        assert as_entries(wahl_tstring(*pq)) == expected

    @pytest.mark.parametrize("pq,expected", sorted(WAHL_STRINGS.items()))
    def test_params_roundtrip(self, pq, expected):
        params = tstring_to_params(expected)
        assert (params.p, params.q) == pq

    def test_rejects_invalid_params(self):
        with pytest.raises(ValueError):
            wahl_tstring(4, 2)  # not coprime
        with pytest.raises(ValueError):
            wahl_tstring(3, 3)  # q must be < p
        with pytest.raises(ValueError):
            wahl_tstring(2, 0)

    def test_reversal_swaps_q_and_p_minus_q(self):
        for (p, q), b in WAHL_STRINGS.items():
            assert as_entries(wahl_tstring(p, p - q)) == b[::-1]
            assert WahlParams(p, q).reversed() == WahlParams(p, p - q)


class TestChecksum:
    def test_holds_on_known_strings(self):
        for b in WAHL_STRINGS.values():
            assert checksum_ok(b)

    def test_is_not_sufficient(self):
        # [3, 4] has sum(b_j - 2) = 3 = ell + 1 yet is not a T-string.
        assert checksum_ok((3, 4))
        assert not is_tstring((3, 4)).accepted
        with pytest.raises(ValueError):
            tstring_to_params((3, 4))

    def test_tstring_constructor_enforces_it(self):
        with pytest.raises(ValueError):
            TString((2, 2))
        with pytest.raises(ValueError):
            TString(())
        with pytest.raises(ValueError):
            TString((4, 1))


class TestEnumeration:
    def test_level_sizes_are_powers_of_two(self):
        levels = enumerate_tstrings(8)
        for ell in range(1, 9):
            assert len(levels[ell]) == 2 ** (ell - 1)
            assert len(_level_entries(levels, ell)) == 2 ** (ell - 1)

    def test_small_levels_exactly(self):
        levels = enumerate_tstrings(4)
        assert _level_entries(levels, 1) == {(4,)}
        assert _level_entries(levels, 2) == {(2, 5), (5, 2)}
        assert _level_entries(levels, 3) == LENGTH_3_STRINGS
        assert _level_entries(levels, 4) == LENGTH_4_STRINGS

    def test_matches_brute_force_parameter_sweep(self):
        # Independent generation: expand p^2/(pq-1) for every coprime pair
        # with p small enough to cover all strings of length <= 6, and
        # compare the bucketed results with the L/R generation tree.
        by_length = {ell: set() for ell in range(1, 7)}
        for p in range(2, 40):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                b = hj_expand(p * p, p * q - 1)
                if len(b) <= 6:
                    by_length[len(b)].add(b)
        levels = enumerate_tstrings(6)
        for ell in range(1, 7):
            assert _level_entries(levels, ell) == by_length[ell]
        # the sweep cap of 40 really covers everything: p <= 2^ell
        assert max(tstring_to_params(t).p for t in levels[6]) < 40

    def test_iterator_is_sorted_by_length(self):
        lengths = [t.ell for t in iter_tstrings(5)]
        assert lengths == sorted(lengths)
        assert len(lengths) == 2**5 - 1

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_tstrings(0)
        with pytest.raises(ValueError):
            enumerate_tstrings(17)  # above the default cap
        assert len(enumerate_tstrings(17, cap=17)[17]) == 2**16


class TestMoves:
    def test_left_move(self):
        assert as_entries(apply_L((4,))) == (2, 5)
        assert as_entries(apply_L((3, 5, 2))) == (2, 3, 5, 3)

    def test_right_move(self):
        assert as_entries(apply_R((4,))) == (5, 2)
        assert as_entries(apply_R((2, 5))) == (3, 5, 2)

    def test_parameter_actions(self):
        assert params_after_L(WahlParams(2, 1)) == WahlParams(3, 2)
        assert params_after_R(WahlParams(2, 1)) == WahlParams(3, 1)
        assert params_after_L(WahlParams(5, 2)) == WahlParams(8, 5)
        assert params_after_R(WahlParams(5, 2)) == WahlParams(7, 2)

    @given(st.lists(st.booleans(), max_size=9))
    def test_moves_track_parameters(self, word):
        t, params = TString((4,)), WahlParams(2, 1)
        for left in word:
            t = apply_L(t) if left else apply_R(t)
            params = params_after_L(params) if left else params_after_R(params)
        assert tstring_to_params(t) == params
        assert as_entries(wahl_tstring(params)) == as_entries(t)


class TestRecognition:
    def test_base_case(self):
        rec = is_tstring((4,))
        assert rec.accepted and rec.word == ""

    def test_word_is_outermost_first(self):
        # [3,5,2] = R(L([4])): peel R first, then L.
        rec = is_tstring((3, 5, 2))
        assert rec.accepted and rec.word == "RL"
        assert as_entries(apply_R(apply_L((4,)))) == (3, 5, 2)

    def test_rejections_carry_reasons(self):
        assert not is_tstring(()).accepted
        assert not is_tstring((3, 1)).accepted
        assert "checksum" in is_tstring((2, 2)).reason
        assert "checksum" not in is_tstring((3, 4)).reason

    def test_accepts_every_generated_string(self):
        for t in iter_tstrings(7):
            rec = is_tstring(t)
            assert rec.accepted
            assert len(rec.word) == t.ell - 1

    @given(st.lists(st.booleans(), max_size=9))
    def test_word_rebuilds_input(self, word):
        t = TString((4,))
        for left in word:
            t = apply_L(t) if left else apply_R(t)
        rec = is_tstring(t)
        assert rec.accepted
        rebuilt = TString((4,))
        for letter in reversed(rec.word):
            rebuilt = apply_L(rebuilt) if letter == "L" else apply_R(rebuilt)
        assert as_entries(rebuilt) == as_entries(t)


class TestParameterRecovery:
    def test_all_small_strings_roundtrip(self):
        for t in iter_tstrings(6):
            params = tstring_to_params(t)
            assert as_entries(wahl_tstring(params)) == as_entries(t)
            assert eval_cf(t) == Fraction(params.p**2, params.p * params.q - 1)

    def test_p_bounded_by_power_of_two(self):
        for t in iter_tstrings(6):
            assert tstring_to_params(t).p <= 2**t.ell

    @settings(max_examples=40)
    @given(st.integers(2, 60), st.integers(1, 59))
    def test_random_params_roundtrip(self, p, q):
        if q >= p or math.gcd(p, q) != 1:
            return
        t = wahl_tstring(p, q)
        assert tstring_to_params(t) == WahlParams(p, q)
        assert checksum_ok(t)
        assert is_tstring(t).accepted
