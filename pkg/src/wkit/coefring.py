"""Exact coefficient ring: rationals and sparse multivariate polynomials.

Scalars are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).  Polynomials are immutable maps from monomials to nonzero
rationals, where a monomial is a sorted tuple of ``(variable, exponent)``
pairs.  Variables follow one fixed global order, so two polynomials with the
same term map are equal no matter how they were built.

The parameter ``t3`` is never stored: the parser rewrites it to ``-t1-t2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

CoefScalar = Fraction

#: Global variable order.  ``x1, x2, ...`` (shuffle variables) sort after these.
VARIABLE_ORDER = ("z", "D", "t", "u", "t1", "t2", "x")
COEF_VARIABLES = ("D", "t", "u", "t1", "t2")


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class SubstitutionCycle(ValueError):
    """Raised when a shift ``var -> var + c`` has ``var`` occurring in ``c``."""


class ParseError(ValueError):
    pass


@lru_cache(maxsize=None)
def var_key(name: str):
    if name in VARIABLE_ORDER:
        return (VARIABLE_ORDER.index(name), 0)
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        return (len(VARIABLE_ORDER), int(m.group(1)))
    raise ValueError(f"unknown variable {name!r}")


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    return _mono_mul_cached(a, b)


@lru_cache(maxsize=1 << 16)
def _mono_mul_cached(a, b):
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda ve: var_key(ve[0])))


def _mono_degree(mono) -> int:
    return sum(e for _, e in mono)


class CoefPoly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if type(c) is not Fraction:
                    c = Fraction(c)
                if c:
                    clean[mono] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> CoefPoly:
        """Wrap a term map whose values are already nonzero Fractions."""
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, c) -> CoefPoly:
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> CoefPoly:
        var_key(name)
        if exp == 0:
            return cls.const(1)
        return cls({((name, exp),): Fraction(1)})

    @classmethod
    def coerce(cls, x) -> CoefPoly:
        if isinstance(x, CoefPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CoefPoly")

    # -- basic queries ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def variables(self) -> tuple:
        names = {v for mono in self.terms for v, _ in mono}
        return tuple(sorted(names, key=var_key))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(_mono_degree(m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def exponent_vector(self, mono, variables) -> tuple:
        d = dict(mono)
        return tuple(d.get(v, 0) for v in variables)

    def coeffs_in(self, var: str) -> dict:
        """Split as ``sum_k c_k * var^k``; returns ``{k: c_k}``."""
        out = {}
        for mono, c in self.terms.items():
            k = 0
            rest = []
            for v, e in mono:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: CoefPoly(t) for k, t in out.items()}

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            if v is None:
                terms[m] = c
            else:
                v = v + c
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return CoefPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return CoefPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CoefPoly()
            return CoefPoly._raw({m: Fraction(c * other) for m, c in self.terms.items()})
        other = _maybe(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = terms.get(m)
                terms[m] = c1 * c2 if v is None else v + c1 * c2
        return CoefPoly._raw({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return exact_divide(self, CoefPoly.coerce(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = CoefPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoefPoly.const(other)
        if not isinstance(other, CoefPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- calculus & substitution ----------------------------------------
    def derivative(self, var: str) -> CoefPoly:
        terms = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(var, 0)
            if not e:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            m = tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))
            terms[m] = terms.get(m, 0) + c * e
        return CoefPoly(terms)

    def substitute(self, var: str, value) -> CoefPoly:
        """Replace ``var`` by the polynomial (or scalar) ``value``."""
        value = CoefPoly.coerce(value)
        powers = {0: CoefPoly.const(1)}
        out = CoefPoly()
        for k, c in sorted(self.coeffs_in(var).items()):
            if k not in powers:
                powers[k] = value ** k
            out = out + c * powers[k]
        return out

    def evaluate(self, values: dict) -> CoefPoly:
        out = self
        for v, x in values.items():
            out = out.substitute(v, x)
        return out

    def __repr__(self):
        return f"CoefPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _maybe(x):
    if isinstance(x, CoefPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return CoefPoly.const(x)
    return NotImplemented


def poly_arith(a, b, op: str) -> CoefPoly:
    """Exact ``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    a, b = CoefPoly.coerce(a), CoefPoly.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def shift_substitute(f, var: str, c) -> CoefPoly:
    """Return ``f`` with ``var`` replaced by ``var + c``."""
    f, c = CoefPoly.coerce(f), CoefPoly.coerce(c)
    if var in c.variables:
        raise SubstitutionCycle(f"shift amount {c} contains {var}")
    parts = f.coeffs_in(var)
    if set(parts) <= {0} or c.is_zero():
        return f
    top = max(parts)
    # (var + c)^k by the binomial theorem, reusing powers of c
    cpow = [CoefPoly.const(1)]
    for _ in range(top):
        cpow.append(cpow[-1] * c)
    terms = {}
    for mono, coeff in f.terms.items():
        k = dict(mono).get(var, 0)
        rest = tuple(ve for ve in mono if ve[0] != var)
        for j in range(k + 1):
            base = _mono_mul(rest, ((var, j),)) if j else rest
            scale = coeff * comb(k, j)
            for cm, cc in cpow[k - j].terms.items():
                m = _mono_mul(base, cm)
                terms[m] = terms.get(m, 0) + scale * cc
    return CoefPoly(terms)


def exact_divide(f, g) -> CoefPoly:
    """Return ``h`` with ``f == g * h``, or raise :class:`InexactDivision`.

    ``g`` must be a monomial, or have a constant leading coefficient with
    respect to one of its variables (e.g. any univariate polynomial, or a
    linear form such as ``x2 - x1 + t1``).
    """
    f, g = CoefPoly.coerce(f), CoefPoly.coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return CoefPoly()
    if len(g.terms) == 1:
        ((gm, gc),) = g.terms.items()
        gd = dict(gm)
        terms = {}
        for mono, c in f.terms.items():
            d = dict(mono)
            for v, e in gd.items():
                if d.get(v, 0) < e:
                    raise InexactDivision(f"{format_poly(f)} is not divisible by {format_poly(g)}")
                d[v] -= e
                if not d[v]:
                    del d[v]
            m = tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))
            terms[m] = c / gc
        return CoefPoly(terms)
    for v in g.variables:
        dg = g.degree(v)
        lc = g.coeffs_in(v)[dg]
        if lc.is_constant():
            break
    else:
        raise ValueError(f"no variable of {g} has a constant leading coefficient")
    lc = lc.constant_value()
    quotient = CoefPoly()
    r = f
    while not r.is_zero():
        dr = r.degree(v)
        if dr < dg:
            raise InexactDivision(f"{format_poly(f)} is not divisible by {format_poly(g)}")
        q = r.coeffs_in(v)[dr] * CoefPoly.var(v, dr - dg) * (1 / lc)
        quotient = quotient + q
        r = r - q * g
    return quotient


def univariate_gcd(a: CoefPoly, b: CoefPoly, var: str) -> CoefPoly:
    """Monic gcd of two polynomials in the single variable ``var``."""
    while not b.is_zero():
        a, b = b, _univariate_rem(a, b, var)
    if a.is_zero():
        return a
    lc = a.coeffs_in(var)[a.degree(var)].constant_value()
    return a * (1 / lc)


def _univariate_rem(a, b, var):
    db = b.degree(var)
    lc = b.coeffs_in(var)[db].constant_value()
    r = a
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        r = r - b * r.coeffs_in(var)[dr] * CoefPoly.var(var, dr - db) * (1 / lc)
    return r


# -- printing -------------------------------------------------------------

def format_scalar(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


def sort_key(mono):
    # descending total degree, then descending exponents in global variable order
    return (-_mono_degree(mono), tuple((var_key(v), -e) for v, e in mono))


def format_poly(p: CoefPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for mono in sorted(p.terms, key=sort_key):
        c = p.terms[mono]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        m = format_monomial(mono)
        if not m:
            body = format_scalar(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{format_scalar(mag)}*{m}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))")


def _tokenize(s: str):
    tokens = []
    pos = 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"bad input at {s[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, allowed):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allowed = allowed
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        e = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return e

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                out = out * self.unary()
            elif tok == ("op", "/"):
                self.take()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division only by nonzero rational constants")
                out = out * (1 / d.constant_value())
            elif tok == ("op", "("):
                out = out * self.unary()
            else:
                return out

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            return base ** n
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return CoefPoly.const(val)
        if kind == "var":
            if val == "t3":
                return -CoefPoly.var("t1") - CoefPoly.var("t2")
            if val not in self.allowed and not (
                "x*" in self.allowed and re.fullmatch(r"x\d+", val)
            ):
                raise ParseError(f"variable {val!r} not allowed here")
            return CoefPoly.var(val)
        if (kind, val) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str, allowed=COEF_VARIABLES) -> CoefPoly:
    """Parse e.g. ``"3/2*D^2*t1 - t2"``.  ``t3`` becomes ``-t1-t2``."""
    return _Parser(text, tuple(allowed) + ("t3",)).parse()
