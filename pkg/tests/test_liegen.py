from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wkit.charseries import char_closed_form
from wkit.liegen import (
    GradedSubspace,
    TruncationOverflow,
    ad_power_elements,
    character_of,
    generate_subalgebra,
    rank_profile,
    spherical_generators,
)
from wkit.walgebra import WElement, parse_welement

P = parse_welement


def _full_window(space):
    return all(v == 1 for v in space.dims().values())


# -- frozen examples -----------------------------------------------------------------

def test_spherical_generation_graded():
    space = generate_subalgebra(spherical_generators(4), "graded", 4, 4)
    assert _full_window(space)
    assert space.total_dimension() == 20


def test_spherical_generation_deformed_over_rational_functions():
    space = generate_subalgebra(spherical_generators(4), "deformed", 4, 4)
    assert _full_window(space)


def test_spherical_generation_classical():
    assert _full_window(generate_subalgebra(spherical_generators(4), "classical", 4, 4))


def test_rank_stable_under_specialization():
    space = generate_subalgebra(spherical_generators(3), "deformed", 3, 3)
    for dims in rank_profile(space).values():
        assert all(v == 1 for v in dims.values())


@pytest.mark.parametrize("kind", ["classical", "graded", "deformed"])
def test_empty_generators_give_zero(kind):
    space = generate_subalgebra([], kind, 3, 3)
    assert space.total_dimension() == 0
    assert character_of(space).terms == {}


def test_single_generator_z_is_abelian():
    space = generate_subalgebra([P("z")], "graded", 4, 4)
    assert space.elements() == [P("z")]


def test_zD_and_z_generate_only_D_order_zero():
    space = generate_subalgebra([P("z*D"), P("z")], "graded", 4, 3)
    assert {(m, a) for m, row in space.basis.items() for a in row} == {(1, 0), (1, 1), (2, 0), (3, 0), (4, 0)}


def test_ad_squared_of_z():
    table = ad_power_elements(2, 0, "graded")
    assert table.elements[(1, 0)] == P("z^2")
    assert table.elements[(2, 0)] == P("2*z^3")


def test_ad_zeroth_power_is_identity():
    table = ad_power_elements(3, 3, "classical")
    for n in range(4):
        assert table.elements[(0, n)] == WElement.monomial(1, n)


@pytest.mark.parametrize("kind", ["classical", "graded", "deformed"])
def test_ad_powers_vanish_when_order_at_most_power(kind):
    # [zD, z^k D^n] has leading coefficient (k - n), so ad^m(zD^n) = 0 once
    # the factor k = n appears, i.e. for 1 <= n <= m.
    table = ad_power_elements(3, 3, kind)
    assert table.zero_entries() == [(m, n) for m in range(1, 4) for n in range(1, m + 1)]
    assert not table.fills_window()


def test_character_of_two_monomials():
    space = GradedSubspace(2, 0)
    space.insert(P("z"))
    space.insert(P("z^2"))
    ch = character_of(space)
    assert ch.terms == {(2, -2): 1, (4, -2): 1}


def test_character_of_full_window_matches_closed_form():
    space = generate_subalgebra(spherical_generators(3), "graded", 3, 3)
    closed = char_closed_form("grW", wmax=6, cmin=-2, cmax=4)
    assert character_of(space) == closed


def test_plain_convention_halves_weight():
    space = GradedSubspace(2, 0)
    space.insert(P("z^2"))
    assert character_of(space, "plain").terms == {(2, -2): 1}


def test_truncation_overflow():
    with pytest.raises(TruncationOverflow):
        generate_subalgebra([P("z*D^5")], "graded", 2, 2)


def test_cap_below_window_rejected():
    with pytest.raises(ValueError):
        generate_subalgebra([P("z")], "graded", 2, 3, hard_cap=2)


def test_cancellation_above_window_is_kept():
    # [zD^3, z^2 D^2] and [zD^3, z^2 (3D^2 + 3D + 1)] both have order 4, but a
    # combination of them has order 3 and belongs to the window.
    space = generate_subalgebra([P("z"), P("z*D^3"), P("z^2*D^2")], "classical", 3, 3)
    assert space.contains(P("z^3*(D^3 + 14/5*D^2)"))


def test_rejects_inhomogeneous_generator():
    with pytest.raises(ValueError):
        generate_subalgebra([P("z + z^2")], "graded", 2, 2)


def test_contains():
    space = generate_subalgebra(spherical_generators(2), "graded", 3, 2)
    assert space.contains(P("5*z^3*D^2 - z^3"))
    assert not space.contains(P("z^3*D^4"))


# -- properties ----------------------------------------------------------------------------

monomial_gens = st.lists(
    st.tuples(st.integers(1, 3), st.integers(0, 3)), min_size=1, max_size=4, unique=True
).map(lambda ms: [WElement.monomial(m, a) for m, a in ms])


@settings(max_examples=15)
@given(monomial_gens, st.sampled_from(["classical", "graded"]))
def test_idempotence(gens, kind):
    space = generate_subalgebra(gens, kind, 3, 3)
    again = generate_subalgebra(space.elements(), kind, 3, 3)
    assert again == space


@settings(max_examples=15)
@given(monomial_gens, st.sampled_from(["classical", "graded"]), st.randoms())
def test_order_independence(gens, kind, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert generate_subalgebra(gens, kind, 3, 3) == generate_subalgebra(shuffled, kind, 3, 3)


@settings(max_examples=15)
@given(monomial_gens, st.sampled_from(["classical", "graded"]))
def test_monotone_in_bounds(gens, kind):
    small = generate_subalgebra(gens, kind, 2, 2, hard_cap=12).dims()
    big = generate_subalgebra(gens, kind, 3, 3, hard_cap=12).dims()
    assert all(big[k] >= v for k, v in small.items())


def test_specialize_at_half():
    space = generate_subalgebra(spherical_generators(2), "deformed", 2, 2)
    assert space.specialize(Fraction(1, 2)).total_dimension() == space.total_dimension()
