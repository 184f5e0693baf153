"""Elements of W(1+inf)^+ = span{z^m D^n : m >= 1, n >= 0} and its relatives.

An element is stored as ``{m: f_m}`` with ``f_m`` a :class:`CoefPoly` in ``D``
(whose coefficients may involve ``t``, ``t1``, ``t2`` or ``u``).  Three
brackets are provided:

* ``classical``: ``[z^m f, z^n g] = z^{m+n} (f(D+n) g(D) - f(D) g(D+m))``
* ``graded``:    ``[z^m D^a, z^n D^b] = (a n - b m) z^{m+n} D^{a+b-1}``
* ``deformed``:  as classical with the shifts ``D+n``, ``D+m`` replaced by
  ``D+n t^2``, ``D+m t^2`` and the result divided by ``t^2``.  Setting
  ``t = 0`` recovers ``graded`` and ``t = 1`` recovers ``classical``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coefring import (
    COEF_VARIABLES,
    CoefPoly,
    ParseError,
    exact_divide,
    format_monomial,
    format_poly,
    format_scalar,
    parse_poly,
    shift_substitute,
)

BRACKET_KINDS = ("classical", "graded", "deformed")

_D = CoefPoly.var("D")
_T2 = CoefPoly.var("t", 2)

NEG_INF = -math.inf


class WElement:
    """Finite sum ``sum_m z^m f_m(D)`` with every ``m >= 1``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for m, f in (terms or {}).items():
            if int(m) != m or m < 1:
                raise ValueError(f"z-degree must be an integer >= 1, got {m}")
            f = CoefPoly.coerce(f)
            if not f.is_zero():
                clean[int(m)] = f
        self.terms = clean

    @classmethod
    def monomial(cls, m: int, a: int = 0, coeff=1) -> WElement:
        return cls({m: CoefPoly.var("D", a) * Fraction(coeff)})

    @classmethod
    def parse(cls, text: str) -> WElement:
        return parse_welement(text)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, WElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for m, f in other.terms.items():
            terms[m] = terms[m] + f if m in terms else f
        return WElement(terms)

    def __neg__(self):
        return WElement({m: -f for m, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """Scale by a rational or a coefficient polynomial (not a product in W)."""
        if isinstance(c, WElement):
            return NotImplemented
        c = CoefPoly.coerce(c)
        return WElement({m: f * c for m, f in self.terms.items()})

    __rmul__ = __mul__

    def d_order(self) -> int:
        """Highest power of ``D`` present; -1 for zero."""
        return max((f.degree("D") for f in self.terms.values()), default=-1)

    def z_degrees(self) -> tuple:
        return tuple(sorted(self.terms))

    def map_coefficients(self, fn) -> WElement:
        return WElement({m: fn(f) for m, f in self.terms.items()})

    def __repr__(self):
        return f"WElement({format_welement(self)!r})"

    def __str__(self):
        return format_welement(self)


# -- brackets -------------------------------------------------------------

def _bracket_classical(m, f, n, g, shift_m, shift_n):
    return shift_substitute(f, "D", shift_n) * g - f * shift_substitute(g, "D", shift_m)


def _bracket_graded(m, f, n, g):
    out = CoefPoly()
    fd = f.coeffs_in("D")
    gd = g.coeffs_in("D")
    for a, fa in fd.items():
        for b, gb in gd.items():
            c = a * n - b * m
            if c and a + b >= 1:
                out = out + fa * gb * CoefPoly.var("D", a + b - 1) * c
    return out


def bracket(x: WElement, y: WElement, kind: str = "classical") -> WElement:
    """Lie bracket of two elements for ``kind`` in ``BRACKET_KINDS``."""
    if kind not in BRACKET_KINDS:
        raise ValueError(f"unknown bracket kind {kind!r}")
    out = {}
    for m, f in x.terms.items():
        for n, g in y.terms.items():
            if kind == "classical":
                h = _bracket_classical(m, f, n, g, CoefPoly.const(m), CoefPoly.const(n))
            elif kind == "graded":
                h = _bracket_graded(m, f, n, g)
            else:
                num = _bracket_classical(m, f, n, g, _T2 * m, _T2 * n)
                h = exact_divide(num, _T2)
            k = m + n
            out[k] = out[k] + h if k in out else h
    return WElement(out)


def specialize_t(x: WElement, c) -> WElement:
    """Substitute ``t = c`` in every coefficient."""
    c = Fraction(c)
    return x.map_coefficients(lambda f: f.substitute("t", c))


# -- order filtration and Rees membership --------------------------------

def filtration_degree(x: WElement):
    """Doubled order filtration degree: ``z^m D^a`` sits in degree ``2a - 2``.

    Returns ``-math.inf`` for the zero element.
    """
    if x.is_zero():
        return NEG_INF
    return 2 * x.d_order() - 2


def rees_member(x: WElement) -> bool:
    """Whether ``x`` lies in ``sum_i F_i t^i Q[t]`` (checked monomial-wise)."""
    for f in x.terms.values():
        if set(f.variables) - {"D", "t"}:
            raise ValueError("rees_member expects coefficients in Q[t]")
        for mono in f.terms:
            d = dict(mono)
            a, k = d.get("D", 0), d.get("t", 0)
            if k < max(0, 2 * a - 2):
                return False
    return True


# -- Heisenberg action ----------------------------------------------------

def heis_raise(x: WElement) -> WElement:
    """``[D^2, -]``: ``z^m f(D) -> z^m (2 m D + m^2) f(D)``."""
    return WElement({m: (_D * (2 * m) + m * m) * f for m, f in x.terms.items()})


def heis_lower(x: WElement) -> WElement:
    """``d/dD`` applied to each coefficient."""
    return WElement({m: f.derivative("D") for m, f in x.terms.items()})


# -- grammar ----------------------------------------------------------------

def parse_welement(text: str) -> WElement:
    """Parse e.g. ``"z^2*(3*D^2 + 1/2)*t1 + z^5*D"``.

    Every monomial must carry a positive power of ``z``.
    """
    p = parse_poly(text, allowed=COEF_VARIABLES + ("z",))
    terms = {}
    for m, f in p.coeffs_in("z").items():
        if m < 1:
            raise ParseError(f"term {format_poly(f)} has no positive power of z")
        terms[m] = f
    return WElement(terms)


def _z(m):
    return "z" if m == 1 else f"z^{m}"


def format_welement(x: WElement) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for m in sorted(x.terms):
        f = x.terms[m]
        if len(f.terms) == 1:
            ((mono, c),) = f.terms.items()
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = _z(m) if mag == 1 else f"{format_scalar(mag)}*{_z(m)}"
            if mono:
                body += "*" + format_monomial(mono)
        else:
            sign = "+"
            body = f"{_z(m)}*({format_poly(f)})"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def random_welement(rng, max_z=5, max_d=5, max_terms=3, bound=10, coef_vars=()) -> WElement:
    """Random element with z-degree <= max_z, D-degree <= max_d.

    Coefficients are rationals with numerator and denominator bounded by
    ``bound``.  ``coef_vars`` may name extra variables (e.g. ``("t",)``) to
    sprinkle into the coefficients with degree <= 2.
    """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.randint(1, max_z)
        f = CoefPoly()
        for _ in range(rng.randint(1, 3)):
            c = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            mono = CoefPoly.var("D", rng.randint(0, max_d))
            for v in coef_vars:
                mono = mono * CoefPoly.var(v, rng.randint(0, 2))
            f = f + mono * c
        terms[m] = terms[m] + f if m in terms else f
    return WElement(terms)

