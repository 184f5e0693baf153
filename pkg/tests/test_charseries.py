import pytest
from hypothesis import given
from hypothesis import strategies as st

from wkit.charseries import (
    Character,
    ConventionMismatch,
    OddDegreeInput,
    char_closed_form,
    character_from_degrees,
    geometric,
    monomial,
    pbw_bruteforce,
    pbw_identity_check,
    plethystic_exp,
    tensor_HT,
    tensor_Hu,
)


# -- closed forms -----------------------------------------------------------------------------

def test_undeformed_constant_along_q():
    ch = char_closed_form("bps_undeformed", 3, -2, 6)
    assert ch.weight_slice(3) == {-2: 1, 0: 1, 2: 1, 4: 1, 6: 1}


def test_deformed_weight_one_counts_up():
    ch = char_closed_form("bps_deformed", 1, -2, 6)
    assert ch.weight_slice(1) == {-2: 1, 0: 2, 2: 3, 4: 4, 6: 5}


def test_grW_window():
    ch = char_closed_form("grW", 4, -2, 2)
    assert ch.format() == "t^2*q^-2 + t^2 + t^2*q^2 + t^4*q^-2 + t^4 + t^4*q^2"
    assert ch.convention == "doubled"


def test_unknown_closed_form():
    with pytest.raises(ValueError):
        char_closed_form("nope", 1, 0, 0)


# -- H_T and H_u ladders -------------------------------------------------------------------------

def test_tensor_HT_turns_undeformed_into_deformed():
    und = char_closed_form("bps_undeformed", 3, -2, 6)
    assert tensor_HT(und, 1) == char_closed_form("bps_deformed", 3, -2, 6)


def test_tensor_HT_rank_zero_is_identity():
    ch = char_closed_form("bps_deformed", 2, -2, 4)
    assert tensor_HT(ch, 0) is ch


def test_tensor_HT_of_one():
    ch = tensor_HT(Character.one(cmax=6), 2)
    assert ch.weight_slice(0) == {0: 1, 2: 2, 4: 3, 6: 4}


def test_tensor_HT_composes():
    ch = char_closed_form("bps_undeformed", 2, -2, 6)
    assert tensor_HT(tensor_HT(ch, 1), 1) == tensor_HT(ch, 2)


def test_tensor_Hu_of_bps_generators():
    g = character_from_degrees({d: [(-2, 1)] for d in range(1, 4)}, cmax=6)
    assert tensor_Hu(g) == char_closed_form("bps_undeformed", 3, -2, 6)


# -- plethystic exponential --------------------------------------------------------------------------

def test_pe_single_generator():
    pe = plethystic_exp(monomial(1, -2), wmax=4)
    assert pe.terms == {(0, 0): 1, (1, -2): 1, (2, -4): 1, (3, -6): 1, (4, -8): 1}


def test_pe_zero():
    assert plethystic_exp(Character(wmax=3), wmax=3) == Character.one(wmax=3)


def test_pe_weight_two_slice():
    # Sym^2 of the weight-one slice (q^-2 + 1 + q^2 + ...) plus the weight-two slice
    g = char_closed_form("bps_undeformed", 2, -2, 10)
    pe = plethystic_exp(g, wmax=2, cmax=2)
    assert pe.weight_slice(2) == {-4: 1, -2: 2, 0: 3, 2: 3}


def test_pe_rejects_odd_degrees():
    with pytest.raises(OddDegreeInput):
        plethystic_exp(monomial(1, 1), wmax=2)


def test_pe_matches_bruteforce_on_closed_form():
    g = char_closed_form("bps_deformed", 3, -2, 4)
    assert plethystic_exp(g, wmax=3) == pbw_bruteforce(g, 3)


def test_pbw_identity_examples():
    g = character_from_degrees({d: [(-2, 1)] for d in range(1, 4)})
    target = plethystic_exp(char_closed_form("bps_undeformed", 3, -2, 12), wmax=3, cmax=4)
    assert pbw_identity_check(g, True, target)
    assert pbw_identity_check(Character(), False, Character.one(wmax=2, cmax=0))


def test_convention_mismatch():
    with pytest.raises(ConventionMismatch):
        monomial(1, 0) + monomial(2, 0, "doubled")


def test_doubled_plain_roundtrip():
    ch = char_closed_form("bps_deformed", 3, -2, 4)
    assert ch.to_doubled().to_plain() == ch
    assert ch.to_doubled().weight_slice(6) == ch.weight_slice(3)


def test_geometric_needs_bound():
    with pytest.raises(ValueError):
        geometric(1, 0)


# -- properties --------------------------------------------------------------------------------

small_chars = st.dictionaries(
    st.tuples(st.integers(1, 3), st.integers(-2, 2).map(lambda c: 2 * c)), st.integers(1, 2), max_size=3
).map(lambda t: Character(t))


@given(small_chars)
def test_pe_matches_bruteforce(ch):
    assert plethystic_exp(ch, wmax=4) == pbw_bruteforce(ch, 4)


@given(small_chars, small_chars)
def test_pe_is_multiplicative(a, b):
    lhs = plethystic_exp(a + b, wmax=4)
    rhs = plethystic_exp(a, wmax=4).mul(plethystic_exp(b, wmax=4), wmax=4)
    assert lhs == rhs
