"""The one-vertex shuffle algebra over Q[t1, t2].

A degree-``d`` element is a symmetric polynomial in ``x1..xd`` whose
coefficients are polynomials in ``t1, t2`` (``t3 = -t1 - t2``).  The product
of a degree-``d`` and a degree-``e`` element is

    sum over (d, e)-shuffles (A, B) of  f(x_A) g(x_B) prod_{i in A, j in B} K(x_j - x_i)

for a kernel ``K`` given as a ratio of linear factors in one variable ``x``.
The default kernel is ``(x + t1)(x + t2)(x + t3) / x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .coefring import (
    CoefPoly,
    InexactDivision,
    ParseError,
    exact_divide,
    format_poly,
    parse_poly,
    var_key,
)

SHUFFLE_COEF_VARIABLES = ("t1", "t2")


class NonPolynomialResult(ArithmeticError):
    """The kernel denominators did not cancel in a shuffle product."""


class NotSymmetric(ValueError):
    """A polynomial offered as a shuffle element is not symmetric."""


def _x(k: int) -> str:
    return f"x{k}"


def rename_variables(p: CoefPoly, mapping: dict) -> CoefPoly:
    """Simultaneously rename variables according to ``mapping``."""
    terms = {}
    for mono, c in p.terms.items():
        exps = {}
        for v, e in mono:
            w = mapping.get(v, v)
            exps[w] = exps.get(w, 0) + e
        m = tuple(sorted(exps.items(), key=lambda ve: var_key(ve[0])))
        terms[m] = terms.get(m, 0) + c
    return CoefPoly(terms)


def _x_indices(p: CoefPoly) -> set:
    out = set()
    for v in p.variables:
        m = re.fullmatch(r"x(\d+)", v)
        if m:
            out.add(int(m.group(1)))
        elif v not in SHUFFLE_COEF_VARIABLES:
            raise ValueError(f"variable {v!r} cannot occur in a shuffle element")
    return out


class ShuffleElement:
    """Symmetric polynomial in ``x1..x_degree`` over ``Q[t1, t2]``."""

    __slots__ = ("degree", "poly")

    def __init__(self, degree: int, poly=0, check: bool = True):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        poly = CoefPoly.coerce(poly)
        idx = _x_indices(poly)
        if idx and (min(idx) < 1 or max(idx) > degree):
            raise ValueError(f"variables x{sorted(idx)} do not fit degree {degree}")
        if check:
            for k in range(1, degree):
                swap = {_x(k): _x(k + 1), _x(k + 1): _x(k)}
                if rename_variables(poly, swap) != poly:
                    raise NotSymmetric(f"{format_poly(poly)} is not symmetric in x1..x{degree}")
        self.degree = degree
        self.poly = poly

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> ShuffleElement:
        return parse_shuffle(text, degree)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        # zero is zero in every degree
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.poly == other.poly

    def __hash__(self):
        return hash((self.degree, self.poly)) if not self.is_zero() else 0

    def _same_degree(self, other):
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        return other.degree if self.is_zero() else self.degree

    def __add__(self, other):
        return ShuffleElement(self._same_degree(other), self.poly + other.poly, check=False)

    def __neg__(self):
        return ShuffleElement(self.degree, -self.poly, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> ShuffleElement:
        return ShuffleElement(self.degree, self.poly * CoefPoly.coerce(c), check=False)

    def __repr__(self):
        return f"ShuffleElement({self.degree}, {format_poly(self.poly)!r})"

    def __str__(self):
        return format_shuffle(self)


# -- kernel ------------------------------------------------------------------

@dataclass(frozen=True)
class ShuffleKernel:
    """``K(x) = prod(numerator) / prod(denominator)``, factors linear in ``x``."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        for f in self.numerator + self.denominator:
            if f.is_zero() or f.degree("x") > 1:
                raise ValueError(f"kernel factor {format_poly(f)} is not a nonzero linear form in x")
            if set(f.variables) - {"x", "t1", "t2"}:
                raise ValueError(f"kernel factor {format_poly(f)} uses unsupported variables")

    def text(self) -> str:
        num = "".join(f"({format_poly(f)})" for f in self.numerator) or "1"
        den = "".join(f"({format_poly(f)})" for f in self.denominator)
        return f"{num}/{den}" if den else num


def _split_factors(text: str) -> list:
    text = text.strip()
    if text in ("", "1"):
        return []
    out, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
            if depth == 0:
                out.append(text[start:i])
        elif depth == 0 and not ch.isspace() and ch != "*":
            raise ParseError(f"kernel factors must be parenthesized: {text!r}")
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    return out


def parse_kernel(text: str) -> ShuffleKernel:
    """Parse a factor list such as ``"(x+t1)(x+t2)(x+t3)/(x)"``."""
    num, _, den = text.partition("/")
    allowed = ("x", "t1", "t2")
    try:
        return ShuffleKernel(
            tuple(parse_poly(f, allowed) for f in _split_factors(num)),
            tuple(parse_poly(f, allowed) for f in _split_factors(den)),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


DEFAULT_KERNEL = parse_kernel("(x+t1)(x+t2)(x+t3)/(x)")


# -- product -------------------------------------------------------------------

def _normalize_linear(f: CoefPoly):
    """Write ``f = c * g`` with ``g`` having coefficient 1 on its last variable."""
    if f.is_constant():
        return f.constant_value(), CoefPoly.const(1)
    lead = f.variables[-1]
    c = f.coeffs_in(lead)[1].constant_value()
    return c, f * (1 / c)


def _embed(f: ShuffleElement, block) -> CoefPoly:
    return rename_variables(f.poly, {_x(k + 1): _x(i) for k, i in enumerate(block)})


def shuffle_product(f: ShuffleElement, g: ShuffleElement, kernel: ShuffleKernel = DEFAULT_KERNEL,
                    full_group: bool = False) -> ShuffleElement:
    """Kernel-weighted shuffle product; ``full_group`` sums over all of S_{d+e}."""
    d, e = f.degree, g.degree
    n = d + e
    if f.is_zero() or g.is_zero():
        return ShuffleElement(n, 0, check=False)
    numerators, denominators = [], []
    for A in combinations(range(1, n + 1), d):
        B = [j for j in range(1, n + 1) if j not in A]
        num = _embed(f, A) * _embed(g, B)
        scale = Fraction(1)
        dens = []
        for i in A:
            for j in B:
                diff = CoefPoly.var(_x(j)) - CoefPoly.var(_x(i))
                for factor in kernel.numerator:
                    num = num * factor.substitute("x", diff)
                for factor in kernel.denominator:
                    c, h = _normalize_linear(factor.substitute("x", diff))
                    scale *= c
                    dens.append(h)
        numerators.append(num * (1 / scale))
        denominators.append(dens)
    # common denominator: every normalized factor with its maximal multiplicity
    common = {}
    for dens in denominators:
        counts = {}
        for h in dens:
            counts[h] = counts.get(h, 0) + 1
        for h, k in counts.items():
            common[h] = max(common.get(h, 0), k)
    total = CoefPoly()
    for num, dens in zip(numerators, denominators):
        missing = dict(common)
        for h in dens:
            missing[h] -= 1
        for h, k in missing.items():
            num = num * h ** k
        total = total + num
    for h, k in sorted(common.items(), key=lambda hk: format_poly(hk[0])):
        for _ in range(k):
            try:
                total = exact_divide(total, h)
            except InexactDivision as exc:
                raise NonPolynomialResult(
                    f"kernel {kernel.text()} leaves denominator {format_poly(h)}"
                ) from exc
    if full_group:
        total = total * (factorial(d) * factorial(e))
    return ShuffleElement(n, total, check=False)


def commutator(f: ShuffleElement, g: ShuffleElement, kernel: ShuffleKernel = DEFAULT_KERNEL) -> ShuffleElement:
    return shuffle_product(f, g, kernel) - shuffle_product(g, f, kernel)


# -- generators and Heisenberg operators ----------------------------------------

def shuffle_e(i: int) -> ShuffleElement:
    """Degree-one generator ``x1^i``."""
    if i < 0:
        raise ValueError("index must be >= 0")
    return ShuffleElement(1, CoefPoly.var("x1", i))


def shuffle_unit() -> ShuffleElement:
    return ShuffleElement(0, 1)


def shuffle_raise(f: ShuffleElement) -> ShuffleElement:
    """Multiply by ``x1 + ... + xd``."""
    s = CoefPoly()
    for k in range(1, f.degree + 1):
        s = s + CoefPoly.var(_x(k))
    return ShuffleElement(f.degree, f.poly * s, check=False)


def shuffle_lower(f: ShuffleElement) -> ShuffleElement:
    """Apply ``sum_k d/dx_k``."""
    out = CoefPoly()
    for k in range(1, f.degree + 1):
        out = out + f.poly.derivative(_x(k))
    return ShuffleElement(f.degree, out, check=False)


def symmetrize(p: CoefPoly, degree: int) -> ShuffleElement:
    """Sum of ``p`` over all permutations of ``x1..x_degree``."""
    out = CoefPoly()
    names = [_x(k) for k in range(1, degree + 1)]
    for perm in permutations(names):
        out = out + rename_variables(p, dict(zip(names, perm)))
    return ShuffleElement(degree, out)


def random_shuffle_element(rng, degree: int, max_x_degree: int = 3, bound: int = 5,
                           with_t: bool = False) -> ShuffleElement:
    """Random symmetric polynomial built by symmetrizing a few monomials."""
    p = CoefPoly()
    for _ in range(rng.randint(1, 2)):
        mono = CoefPoly.const(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        for k in range(1, degree + 1):
            mono = mono * CoefPoly.var(_x(k), rng.randint(0, max_x_degree))
        if with_t:
            mono = mono * CoefPoly.var("t1", rng.randint(0, 1)) * CoefPoly.var("t2", rng.randint(0, 1))
        p = p + mono
    return symmetrize(p, degree)


# -- grammar -------------------------------------------------------------------------

def parse_shuffle(text: str, degree: int | None = None) -> ShuffleElement:
    """Parse a polynomial in ``x1, x2, ..., t1, t2, t3``.

    The degree defaults to the largest ``x`` index present (0 for constants).
    """
    p = parse_poly(text, allowed=SHUFFLE_COEF_VARIABLES + ("x*",))
    idx = _x_indices(p)
    if degree is None:
        degree = max(idx, default=0)
    return ShuffleElement(degree, p)


def format_shuffle(f: ShuffleElement) -> str:
    return format_poly(f.poly)
