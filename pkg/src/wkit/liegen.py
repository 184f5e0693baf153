"""Lie subalgebras of W^+ generated inside a finite window.

A :class:`GradedSubspace` keeps, for each z-degree ``m``, an echelon basis
indexed by leading ``D``-order.  Coefficients may be polynomials in ``t``:
elimination is then fraction-free over ``Q[t]`` and ranks are ranks over
``Q(t)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .charseries import Character
from .coefring import CoefPoly, exact_divide, univariate_gcd
from .walgebra import BRACKET_KINDS, WElement, bracket, specialize_t


class TruncationOverflow(RuntimeError):
    """An element of the saturation exceeded the hard cap on D-order."""


def _lead(f: CoefPoly):
    a = f.degree("D")
    return a, f.coeffs_in("D")[a]


def _normalize(f: CoefPoly) -> CoefPoly:
    """Primitive part over Q[t], with the top t-coefficient of the lead equal to 1."""
    if f.is_zero():
        return f
    parts = list(f.coeffs_in("D").values())
    extra = set().union(*(p.variables for p in parts)) - {"t"}
    if extra:
        raise ValueError(f"coefficients must lie in Q[t], found {sorted(extra)}")
    g = parts[0]
    for p in parts[1:]:
        g = univariate_gcd(g, p, "t")
    if not g.is_constant():
        f = exact_divide(f, g)
    _, lc = _lead(f)
    top = lc.coeffs_in("t")[lc.degree("t")].constant_value()
    return f * (1 / top)


@dataclass
class GradedSubspace:
    """Echelon bases per z-degree; ``basis[m][a]`` has leading term ``z^m D^a``."""

    m_max: int
    a_max: int
    basis: dict = field(default_factory=dict)

    def insert(self, x: WElement) -> bool:
        """Add a z-homogeneous element; return whether the span grew."""
        if x.is_zero():
            return False
        if len(x.terms) != 1:
            raise ValueError("elements must be homogeneous in z-degree")
        ((m, f),) = x.terms.items()
        row = self.basis.setdefault(m, {})
        f = _normalize(f)
        while not f.is_zero():
            a, c = _lead(f)
            if a not in row:
                row[a] = f
                return True
            b = row[a]
            _, p = _lead(b)
            f = _normalize(f * p - b * c)
        return False

    def contains(self, x: WElement) -> bool:
        probe = GradedSubspace(self.m_max, self.a_max, {m: dict(r) for m, r in self.basis.items()})
        return not any(probe.insert(WElement({m: f})) for m, f in x.terms.items())

    def dims(self) -> dict:
        """``{(m, a): dimension}`` over the whole window (zeros included)."""
        return {
            (m, a): int(a in self.basis.get(m, {}))
            for m in range(1, self.m_max + 1)
            for a in range(0, self.a_max + 1)
        }

    def total_dimension(self) -> int:
        return sum(len(r) for r in self.basis.values())

    def canonical(self) -> GradedSubspace:
        """Fully reduced echelon form; independent of insertion history."""
        out = GradedSubspace(self.m_max, self.a_max)
        for m, row in self.basis.items():
            new = {}
            for a in sorted(row):
                f = row[a]
                for k in sorted(new, reverse=True):
                    c = f.coeffs_in("D").get(k)
                    if c is None or c.is_zero():
                        continue
                    b = new[k]
                    _, p = _lead(b)
                    f = _normalize(f * p - b * c)
                new[a] = f
            out.basis[m] = dict(sorted(new.items()))
        out.basis = dict(sorted(out.basis.items()))
        return out

    def elements(self) -> list:
        return [
            WElement({m: f})
            for m in sorted(self.basis)
            for a, f in sorted(self.basis[m].items())
        ]

    def specialize(self, c) -> GradedSubspace:
        """Specialize every basis vector at ``t = c`` and re-reduce over Q."""
        out = GradedSubspace(self.m_max, self.a_max)
        for x in self.elements():
            out.insert(specialize_t(x, c))
        return out


def generate_subalgebra(generators, kind: str, m_max: int, a_max: int, hard_cap=None) -> GradedSubspace:
    """Bracket closure of ``generators`` intersected with ``m <= m_max``, order ``<= a_max``.

    Saturation runs in the wider window of order ``<= hard_cap`` (default
    ``a_max + 2``): the classical bracket can overshoot the window by a
    leading term that cancels against another bracket, so those
    intermediates are kept.  Brackets are formed only when their result can
    land in the wider window, in increasing (z-degree, order) of the
    result.  The returned basis is the part of the canonical echelon basis
    with leading order ``<= a_max``, which spans the intersection with the
    window.
    """
    if kind not in BRACKET_KINDS:
        raise ValueError(f"unknown bracket kind {kind!r}")
    if m_max < 1 or a_max < 1:
        raise ValueError("window bounds must be >= 1")
    cap = a_max + 2 if hard_cap is None else hard_cap
    if cap < a_max:
        raise ValueError(f"hard cap {cap} is below the window order {a_max}")
    space = GradedSubspace(m_max, cap)
    found = []  # (m, order, element) of every vector that enlarged the span
    heap = []

    def add(x):
        if x.is_zero():
            return
        if x.d_order() > cap:
            raise TruncationOverflow(f"D-order {x.d_order()} exceeds the hard cap {cap}")
        if not space.insert(x):
            return
        (m,) = x.terms
        entry = (m, x.d_order(), x)
        for j, (n, b, _) in enumerate(found):
            if m + n <= m_max and entry[1] + b - 1 <= cap:
                heapq.heappush(heap, (m + n, entry[1] + b - 1, len(found), j))
        found.append(entry)

    for g in generators:
        if g.is_zero():
            raise ValueError("generators must be nonzero")
        if len(g.terms) != 1:
            raise ValueError("generators must be homogeneous in z-degree")
        (m,) = g.terms
        if m <= m_max:
            add(g)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        add(bracket(found[i][2], found[j][2], kind))
    full = space.canonical()
    out = GradedSubspace(m_max, a_max)
    for m, row in full.basis.items():
        kept = {a: f for a, f in row.items() if a <= a_max}
        if kept:
            out.basis[m] = kept
    return out


@dataclass
class AdPowerTable:
    """``ad_{zD}^m (z D^n)`` for a rectangle of ``(m, n)``."""

    kind: str
    elements: dict  # (m, n) -> WElement

    def zero_entries(self) -> list:
        return sorted(k for k, x in self.elements.items() if x.is_zero())

    def span(self, m: int, n_max: int) -> GradedSubspace:
        """Echelon span of ``ad^m(zD^n)``, ``n <= n_max`` (z-degree ``m+1``)."""
        s = GradedSubspace(m + 1, n_max)
        for n in range(n_max + 1):
            s.insert(self.elements[(m, n)])
        return s

    def ranks(self) -> dict:
        """``{(m, n): rank of span{ad^m(zD^k) : k <= n}}``."""
        n_max = max(n for _, n in self.elements)
        m_max = max(m for m, _ in self.elements)
        return {(m, n): self.span(m, n).total_dimension() for m in range(m_max + 1) for n in range(n_max + 1)}

    def fills_window(self) -> bool:
        """Every element nonzero and each ``span(m, n)`` has dims 1 at ``(m+1, a)``, ``a <= n``."""
        if self.zero_entries():
            return False
        n_max = max(n for _, n in self.elements)
        m_max = max(m for m, _ in self.elements)
        for m in range(m_max + 1):
            for n in range(n_max + 1):
                row = self.span(m, n).basis.get(m + 1, {})
                if sorted(row) != list(range(n + 1)):
                    return False
        return True


def ad_power_elements(m_max: int, n_max: int, kind: str = "classical") -> AdPowerTable:
    if m_max < 0 or n_max < 0:
        raise ValueError("bounds must be >= 0")
    zd = WElement.monomial(1, 1)
    table = {}
    for n in range(n_max + 1):
        x = WElement.monomial(1, n)
        for m in range(m_max + 1):
            table[(m, n)] = x
            x = bracket(zd, x, kind)
    return AdPowerTable(kind, table)


def character_of(space: GradedSubspace, convention: str = "doubled") -> Character:
    """Bigraded dimensions: ``z^m D^a`` sits at cohomological degree ``2a - 2``.

    Weight exponent is ``2m`` (doubled) or ``m`` (plain).
    """
    scale = 2 if convention == "doubled" else 1
    terms = {}
    for m, row in space.basis.items():
        for a in row:
            key = (scale * m, 2 * a - 2)
            terms[key] = terms.get(key, 0) + 1
    return Character(
        terms,
        convention,
        wmax=scale * space.m_max,
        cmin=-2,
        cmax=2 * space.a_max - 2,
    )


def spherical_generators(a_max: int) -> list:
    """``z D^a`` for ``0 <= a <= a_max``."""
    return [WElement.monomial(1, a) for a in range(a_max + 1)]


def rank_profile(space: GradedSubspace, values=(0, Fraction(1, 2), 1, 3)) -> dict:
    """Per-window dimensions after specializing ``t`` at each value."""
    return {Fraction(v): space.specialize(v).dims() for v in values}
