from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wkit.coefring import CoefPoly
from wkit.walgebra import WElement

settings.register_profile(
    "wkit",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("wkit")

rationals = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 10))


@st.composite
def coef_polys(draw, variables=("D", "t"), max_exp=3, max_terms=4):
    p = CoefPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        mono = CoefPoly.const(draw(rationals))
        for v in variables:
            mono = mono * CoefPoly.var(v, draw(st.integers(0, max_exp)))
        p = p + mono
    return p


@st.composite
def welements(draw, max_z=5, max_d=5, with_t=False, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        m = draw(st.integers(1, max_z))
        f = CoefPoly.var("D", draw(st.integers(0, max_d))) * draw(rationals)
        if with_t:
            f = f * CoefPoly.var("t", draw(st.integers(0, 2)))
        terms[m] = terms[m] + f if m in terms else f
    return WElement(terms)
