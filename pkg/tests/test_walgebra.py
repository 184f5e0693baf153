import math
from fractions import Fraction

import pytest
from conftest import welements
from hypothesis import assume, given

from wkit.coefring import CoefPoly, ParseError
from wkit.walgebra import (
    BRACKET_KINDS,
    WElement,
    bracket,
    filtration_degree,
    format_welement,
    heis_lower,
    heis_raise,
    parse_welement,
    rees_member,
    specialize_t,
)

P = parse_welement


# -- frozen examples ------------------------------------------------------------------

def test_classical_zD_z():
    assert bracket(P("z*D"), P("z"), "classical") == P("z^2")


def test_graded_monomials():
    assert bracket(P("z^2*D^3"), P("z^3*D^2"), "graded") == P("5*z^5*D^4")


def test_deformed_zD2_z3():
    assert bracket(P("z*D^2"), P("z^3"), "deformed") == P("z^4*(6*D + 9*t^2)")


@pytest.mark.parametrize("kind", BRACKET_KINDS)
def test_self_bracket_vanishes(kind):
    x = P("z^2*(3*D^2 + 1/2) + z^5*D")
    assert bracket(x, x, kind).is_zero()


def test_specialize_examples():
    x = P("z^4*(6*D + 9*t^2)")
    assert specialize_t(x, 0) == P("6*z^4*D")
    assert specialize_t(x, 1) == P("z^4*(6*D + 9)")
    assert specialize_t(P("z^3"), Fraction(1, 2)) == P("z^3")


def test_filtration_degree_examples():
    assert filtration_degree(P("z^3*D^2")) == 2
    assert filtration_degree(P("z^7")) == -2
    assert filtration_degree(WElement()) == -math.inf


def test_rees_membership_examples():
    assert rees_member(P("z^3*D^2*t^2"))
    assert not rees_member(P("z^3*D^2*t"))
    assert rees_member(P("z^4"))


def test_heis_raise_examples():
    assert heis_raise(P("z")) == P("z*(2*D + 1)")
    assert heis_raise(P("z^3*D")) == P("z^3*(6*D + 9)*D")
    assert heis_raise(WElement()).is_zero()


def test_heis_lower_examples():
    assert heis_lower(P("z^2*D^3")) == P("3*z^2*D^2")
    assert heis_lower(P("z^5")).is_zero()
    assert heis_lower(heis_raise(P("z"))) == P("2*z")


@pytest.mark.parametrize("m", range(1, 11))
def test_zD_raises_z_degree(m):
    assert bracket(P("z*D"), WElement.monomial(m), "graded") == WElement.monomial(m + 1, 0, m)


# -- grammar ---------------------------------------------------------------------------------

def test_printing_forms():
    assert format_welement(WElement()) == "0"
    assert format_welement(P("z^4*(9*t^2 + 6*D)")) == "z^4*(9*t^2 + 6*D)"
    assert format_welement(P("-z^2*D + z")) == "z - z^2*D"


def test_parse_rejects_missing_z():
    with pytest.raises(ParseError):
        P("D^2 + z")


def test_parse_rejects_unknown_symbol():
    with pytest.raises(ParseError):
        P("z*y")


def test_z_degree_invariant():
    with pytest.raises(ValueError):
        WElement({0: CoefPoly.const(1)})


# -- properties -----------------------------------------------------------------------------------

@given(welements(), welements(), welements())
def test_lie_axioms(x, y, z):
    for kind in BRACKET_KINDS:
        assert (bracket(x, y, kind) + bracket(y, x, kind)).is_zero()
        jac = bracket(x, bracket(y, z, kind), kind) + bracket(y, bracket(z, x, kind), kind) \
            + bracket(z, bracket(x, y, kind), kind)
        assert jac.is_zero()


@given(welements(), welements())
def test_deformed_specializes(x, y):
    d = bracket(x, y, "deformed")
    assert specialize_t(d, 0) == bracket(x, y, "graded")
    assert specialize_t(d, 1) == bracket(x, y, "classical")


@given(welements(), welements())
def test_filtration_compatible(x, y):
    assert filtration_degree(bracket(x, y, "classical")) <= filtration_degree(x) + filtration_degree(y)


def _rees_normalize(x):
    """Multiply each ``z^m D^a`` by ``t^(max(0, 2a-2))``."""
    out = WElement()
    for m, f in x.terms.items():
        for a, c in f.coeffs_in("D").items():
            out = out + WElement({m: c * CoefPoly.var("D", a) * CoefPoly.var("t", max(0, 2 * a - 2))})
    return out


@given(welements(), welements())
def test_rees_closure(x, y):
    xr, yr = _rees_normalize(x), _rees_normalize(y)
    assert rees_member(xr) and rees_member(yr)
    assert rees_member(bracket(xr, yr, "deformed"))


@given(welements(), welements())
def test_heisenberg_derivations(x, y):
    for L in (heis_raise, heis_lower):
        assert L(bracket(x, y, "classical")) == bracket(L(x), y, "classical") + bracket(x, L(y), "classical")


@given(welements(max_terms=1))
def test_central_charge(x):
    assume(not x.is_zero())
    (m,) = x.terms
    assert heis_lower(heis_raise(x)) - heis_raise(heis_lower(x)) == x * (2 * m)


@given(welements(with_t=True))
def test_print_parse_roundtrip(x):
    assert P(format_welement(x)) == x
