import pytest

from wkit.coefring import CoefPoly, shift_substitute
from wkit.shuffle import parse_kernel
from wkit.walgebra import WElement, parse_welement, specialize_t
from wkit.yangian import SIGN_VARIANTS, check_quartic, check_serre, sweep

P = parse_welement
t = CoefPoly.var("t")
D = CoefPoly.var("D")


# -- shuffle model ---------------------------------------------------------------------------

def test_shuffle_quartic_0_1():
    assert check_quartic(0, 1, "shuffle", "plus").vanishes


def test_shuffle_quartic_diagonal():
    assert check_quartic(1, 1, "shuffle", "plus").vanishes


def test_shuffle_quartic_rejects_minus():
    assert not check_quartic(0, 1, "shuffle", "minus").vanishes


def test_shuffle_serre_0_0_0():
    assert check_serre(0, 0, 0, "shuffle").vanishes


def test_shuffle_sweep_quartic():
    report = sweep(("quartic",), 2, "shuffle")
    assert report.passed
    assert report.sign_variant == "plus"


def test_shuffle_quartic_depends_on_kernel():
    # a rewritten but equal kernel is accepted; dropping a factor is rejected
    k = parse_kernel("(x+t1)(x+t2)(x-t1-t2)(x+1)/(x)(x+1)")
    assert check_quartic(0, 1, "shuffle", "plus", k).vanishes
    k2 = parse_kernel("(x+t1)(x+t2)/(x)")
    assert not check_quartic(0, 1, "shuffle", "plus", k2).vanishes


# -- deformed W model ----------------------------------------------------------------------

@pytest.mark.parametrize("idx", [(0, 0, 0), (0, 1, 2), (2, 1, 0), (1, 1, 3)])
def test_w_serre_vanishes(idx):
    r = check_serre(*idx, "w_deformed")
    assert r.vanishes
    assert specialize_t(r.residual, 0).is_zero()


def test_w_quartic_residuals_at_origin():
    # With the t^2-shifted bracket neither sign of s2 = +-t^2 closes the relation.
    assert check_quartic(0, 0, "w_deformed", "plus").residual == P("z^2*(2*t^4 + 2*t^2)")
    assert check_quartic(0, 0, "w_deformed", "minus").residual == P("z^2*(2*t^4 - 2*t^2)")


def test_w_quartic_frozen_residual():
    r = check_quartic(1, 2, "w_deformed", "plus")
    assert r.residual_text() == "z^2*(D*t^8 + 3*D^2*t^6 + 2*D^3*t^4 + D*t^6 + 3*D^2*t^4 + 2*D^3*t^2)"


@pytest.mark.parametrize("i", range(4))
@pytest.mark.parametrize("j", range(4))
def test_w_quartic_residual_factorizes(i, j):
    # residual = z^2 (t^4 + s2)(E^i D^j + D^i E^j), E = D + t^2
    E = shift_substitute(D, "D", t**2)
    for variant, s2 in (("plus", t**2), ("minus", -(t**2))):
        expected = WElement({2: (t**4 + s2) * (E**i * D**j + D**i * E**j)})
        assert check_quartic(i, j, "w_deformed", variant).residual == expected


@pytest.mark.parametrize("i", range(4))
@pytest.mark.parametrize("j", range(4))
def test_w_quartic_closes_with_minus_t_fourth(i, j):
    assert check_quartic(i, j, "w_deformed", sigma2=-(t**4)).vanishes


def test_w_quartic_graded_limit():
    # at t = 0 the relation holds under either sign
    for v in SIGN_VARIANTS:
        assert specialize_t(check_quartic(2, 1, "w_deformed", v).residual, 0).is_zero()


def test_w_sweep_reports_failure():
    report = sweep(bound=1, model="w_deformed")
    assert report.sign_variant is None
    assert not report.passed
    assert all(report.serre.values())


# -- sweep plumbing ---------------------------------------------------------------------------

def test_sweep_bound_zero_single_cell():
    report = sweep(bound=0, model="w_deformed")
    assert list(report.quartic) == [(0, 0)]
    assert list(report.serre) == [(0, 0, 0)]


def test_sweep_threads_are_deterministic(monkeypatch):
    serial = sweep(bound=1, model="w_deformed").to_json()
    monkeypatch.setenv("WKIT_THREADS", "4")
    assert sweep(bound=1, model="w_deformed").to_json() == serial


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        check_quartic(-1, 0)


def test_unknown_model_rejected():
    with pytest.raises(ValueError):
        sweep(bound=0, model="nope")
