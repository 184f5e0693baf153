"""Truncated bigraded characters and the generating series around them.

A :class:`Character` is a finite map ``(weight exponent, cohomological
exponent) -> dimension`` together with an exponent convention:

* ``plain``:   the monomial ``t^i q^j`` records weight ``i``;
* ``doubled``: weights are recorded as ``t^{2i}`` (central charge ``2i``).

Cohomological exponents are actual degrees in both conventions, so the
converter only rescales the weight exponent.  Mixing conventions in one
operation raises :class:`ConventionMismatch`.
"""

from __future__ import annotations

import math
from math import comb

CONVENTIONS = ("plain", "doubled")


class ConventionMismatch(ValueError):
    pass


class OddDegreeInput(ValueError):
    """A plethystic exponential was asked of a character with odd degrees."""


class Character:
    """Finite bigraded dimension series with an optional truncation window.

    ``wmax`` bounds the weight exponent, ``cmin``/``cmax`` the cohomological
    exponent; ``None`` means the side is not truncated.
    """

    __slots__ = ("convention", "terms", "wmax", "cmin", "cmax")

    def __init__(self, terms=None, convention="plain", wmax=None, cmin=None, cmax=None):
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        self.convention = convention
        self.wmax, self.cmin, self.cmax = wmax, cmin, cmax
        clean = {}
        for (w, c), d in (terms or {}).items():
            if d < 0:
                raise ValueError(f"negative dimension at {(w, c)}")
            if d and self._in_window(w, c):
                clean[(int(w), int(c))] = int(d)
        self.terms = clean

    def _in_window(self, w, c):
        return (
            (self.wmax is None or w <= self.wmax)
            and (self.cmin is None or c >= self.cmin)
            and (self.cmax is None or c <= self.cmax)
        )

    @classmethod
    def one(cls, convention="plain", **window):
        return cls({(0, 0): 1}, convention, **window)

    def window(self) -> dict:
        return {"wmax": self.wmax, "cmin": self.cmin, "cmax": self.cmax}

    def restrict(self, wmax=None, cmin=None, cmax=None) -> Character:
        """Clip to a (smaller) window; ``None`` keeps the current bound."""
        def tighter(new, old, pick):
            if new is None:
                return old
            return new if old is None else pick(new, old)

        return Character(
            self.terms,
            self.convention,
            wmax=tighter(wmax, self.wmax, min),
            cmin=tighter(cmin, self.cmin, max),
            cmax=tighter(cmax, self.cmax, min),
        )

    def __getitem__(self, key) -> int:
        return self.terms.get(tuple(key), 0)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.convention == other.convention and self.terms == other.terms

    def __repr__(self):
        return f"Character({self.convention}, {self.format()})"

    def _check(self, other):
        if self.convention != other.convention:
            raise ConventionMismatch(f"{self.convention} vs {other.convention}")

    def __add__(self, other: Character) -> Character:
        self._check(other)
        terms = dict(self.terms)
        for k, d in other.terms.items():
            terms[k] = terms.get(k, 0) + d
        return Character(terms, self.convention, **_meet(self, other))

    def mul(self, other: Character, wmax=None) -> Character:
        """Product of series, truncated at weight ``wmax`` (default: the window)."""
        self._check(other)
        window = _meet(self, other)
        if wmax is not None:
            window["wmax"] = wmax if window["wmax"] is None else min(wmax, window["wmax"])
        limit = window["wmax"]
        terms = {}
        for (w1, c1), d1 in self.terms.items():
            for (w2, c2), d2 in other.terms.items():
                if limit is not None and w1 + w2 > limit:
                    continue
                k = (w1 + w2, c1 + c2)
                terms[k] = terms.get(k, 0) + d1 * d2
        return Character(terms, self.convention, **window)

    __mul__ = mul

    def to_doubled(self) -> Character:
        if self.convention == "doubled":
            return self
        return Character(
            {(2 * w, c): d for (w, c), d in self.terms.items()},
            "doubled",
            wmax=None if self.wmax is None else 2 * self.wmax,
            cmin=self.cmin,
            cmax=self.cmax,
        )

    def to_plain(self) -> Character:
        if self.convention == "plain":
            return self
        if any(w % 2 for w, _ in self.terms):
            raise ValueError("odd weight exponent in a doubled character")
        return Character(
            {(w // 2, c): d for (w, c), d in self.terms.items()},
            "plain",
            wmax=None if self.wmax is None else self.wmax // 2,
            cmin=self.cmin,
            cmax=self.cmax,
        )

    def weight_slice(self, w) -> dict:
        return {c: d for (ww, c), d in self.terms.items() if ww == w}

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w, c), d in sorted(self.terms.items()):
            mono = "*".join(
                s for s in (
                    "" if w == 0 else ("t" if w == 1 else f"t^{w}"),
                    "" if c == 0 else ("q" if c == 1 else f"q^{c}"),
                ) if s
            ) or "1"
            parts.append(mono if d == 1 else f"{d}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        weights = sorted({w for w, _ in self.terms})
        return {
            "convention": self.convention,
            "window": self.window(),
            "rows": [
                {"weight": w, "dims": {str(c): d for c, d in sorted(self.weight_slice(w).items())}}
                for w in weights
            ],
        }


def _meet(a: Character, b: Character) -> dict:
    def pick(x, y, f):
        if x is None:
            return y
        if y is None:
            return x
        return f(x, y)

    return {
        "wmax": pick(a.wmax, b.wmax, min),
        "cmin": pick(a.cmin, b.cmin, max),
        "cmax": pick(a.cmax, b.cmax, min),
    }


# -- elementary series ----------------------------------------------------

def monomial(w, c, convention="plain", d=1, **window) -> Character:
    return Character({(w, c): d}, convention, **window)


def geometric(w, c, convention="plain", power=1, wmax=None, cmax=None) -> Character:
    """Expansion of ``(1 - t^w q^c)^(-power)`` within the given bounds."""
    if w < 0 or c < 0 or (w == 0 and c == 0):
        raise ValueError("geometric factor needs a positive exponent")
    if (w == 0 or wmax is None) and (c == 0 or cmax is None):
        raise ValueError("geometric series needs a truncation bound")
    terms = {}
    k = 0
    while True:
        if (wmax is not None and w * k > wmax) or (cmax is not None and c * k > cmax):
            break
        terms[(w * k, c * k)] = comb(power + k - 1, k)
        k += 1
    return Character(terms, convention)


# -- closed forms ---------------------------------------------------------

CLOSED_FORMS = ("grW", "bps_undeformed", "bps_deformed")


def char_closed_form(which: str, wmax: int, cmin: int, cmax: int) -> Character:
    """Expand one of the closed-form characters inside the given window.

    * ``grW`` (doubled): ``t^2 q^-2 (1-t^2)^-1 (1-q^2)^-1``
    * ``bps_undeformed`` (plain): ``q^-2 t (1-t)^-1 (1-q^2)^-1``
    * ``bps_deformed`` (plain): ``q^-2 t (1-t)^-1 (1-q^2)^-2``

    ``wmax`` is an exponent bound in the character's own convention.
    """
    top = cmax + 2  # the q-series is shifted down by q^-2
    if which == "grW":
        conv = "doubled"
        lead = monomial(2, -2, conv)
        factors = [geometric(2, 0, conv, wmax=wmax), geometric(0, 2, conv, cmax=top)]
    elif which in ("bps_undeformed", "bps_deformed"):
        conv = "plain"
        lead = monomial(1, -2, conv)
        power = 1 if which == "bps_undeformed" else 2
        factors = [geometric(1, 0, conv, wmax=wmax), geometric(0, 2, conv, power=power, cmax=top)]
    else:
        raise ValueError(f"unknown closed form {which!r}")
    out = lead
    for f in factors:
        out = out.mul(f, wmax=wmax)
    return out.restrict(wmax=wmax, cmin=cmin, cmax=cmax)


def _q_margin(c: Character, wmax: int) -> int:
    """How far above ``cmax`` an input term may sit and still matter below it."""
    slopes = [cc / w for (w, cc) in c.terms if w > 0]
    low = min(slopes, default=0)
    return math.ceil(max(0.0, -low) * wmax)


def tensor_HT(c: Character, torus_rank: int, cmax=None) -> Character:
    """Multiply by ``(1 - q^2)^-torus_rank`` (tensoring with ``H_T``)."""
    if torus_rank < 0:
        raise ValueError("torus_rank must be >= 0")
    if torus_rank == 0:
        return c
    cmax = c.cmax if cmax is None else cmax
    if cmax is None:
        raise ValueError("tensor_HT needs a cohomological upper bound")
    low = min((cc for _, cc in c.terms), default=0)
    ladder = geometric(0, 2, c.convention, power=torus_rank, cmax=cmax - low)
    return c.mul(ladder).restrict(cmax=cmax)


def tensor_Hu(c: Character, cmax=None) -> Character:
    """Tensor with the ``u``-ladder ``Q[u]`` (``u`` in degree 2)."""
    cmax = c.cmax if cmax is None else cmax
    if cmax is None:
        raise ValueError("tensor_Hu needs a cohomological upper bound")
    low = min((cc for _, cc in c.terms), default=0)
    ladder = geometric(0, 2, c.convention, cmax=cmax - low)
    return c.mul(ladder).restrict(cmax=cmax)


def plethystic_exp(c: Character, wmax=None, cmin=None, cmax=None) -> Character:
    """``prod_{(i,j)} (1 - t^i q^j)^(-dim(i,j))``, all generators even (bosonic).

    The product is exact for the given finite character up to weight
    ``wmax`` (default ``c.wmax``); the result is then clipped to
    ``[cmin, cmax]``.
    """
    wmax = c.wmax if wmax is None else wmax
    if wmax is None:
        raise ValueError("plethystic_exp needs a weight bound")
    for (w, cc), d in c.terms.items():
        if w <= 0:
            raise ValueError("plethystic exponential needs positive weights")
        if cc % 2:
            raise OddDegreeInput(f"odd cohomological exponent {cc}")
    out = Character.one(c.convention)
    for (w, cc), d in sorted(c.terms.items()):
        if w > wmax:
            continue
        factor = {}
        k = 0
        while w * k <= wmax:
            factor[(w * k, cc * k)] = comb(d + k - 1, k)
            k += 1
        out = out.mul(Character(factor, c.convention), wmax=wmax)
    return out.restrict(wmax=wmax, cmin=cmin, cmax=cmax)


def pbw_identity_check(g_char: Character, tensor_hu: bool, target: Character) -> bool:
    """Whether ``PE[g_char (x) H_u]`` (or ``PE[g_char]``) equals ``target`` in its window."""
    if g_char.convention != target.convention:
        raise ConventionMismatch(f"{g_char.convention} vs {target.convention}")
    wmax = target.wmax if target.wmax is not None else g_char.wmax
    if wmax is None or target.cmax is None:
        raise ValueError("target must carry a weight and cohomological bound")
    gen = g_char.restrict(wmax=wmax)
    if tensor_hu:
        gen = tensor_Hu(gen, cmax=target.cmax + _q_margin(gen, wmax))
    pe = plethystic_exp(gen, wmax=wmax)
    return pe.restrict(wmax=target.wmax, cmin=target.cmin, cmax=target.cmax) == target


def character_from_degrees(per_weight: dict, convention="plain", **window) -> Character:
    """Build a character from ``{weight: [(cohomological degree, dim), ...]}``."""
    terms = {}
    for w, rows in per_weight.items():
        for c, d in rows:
            terms[(w, c)] = terms.get((w, c), 0) + d
    return Character(terms, convention, **window)


def pbw_bruteforce(generators: Character, wmax: int, cmin=None, cmax=None) -> Character:
    """Character of ``Sym`` of a graded space by enumerating monomials directly.

    Every basis vector of ``generators`` is a separate bosonic label; the
    function walks all multisets of labels with total weight ``<= wmax``.
    This is deliberately naive and serves as an oracle for
    :func:`plethystic_exp`.
    """
    labels = []
    for (w, c), d in sorted(generators.terms.items()):
        if w <= 0:
            raise ValueError("generators need positive weight")
        if w <= wmax:
            labels.extend([(w, c)] * d)
    terms = {}

    def walk(start, w, c):
        terms[(w, c)] = terms.get((w, c), 0) + 1
        for i in range(start, len(labels)):
            lw, lc = labels[i]
            if w + lw <= wmax:
                walk(i, w + lw, c + lc)

    walk(0, 0, 0)
    return Character(terms, generators.convention, wmax=wmax, cmin=cmin, cmax=cmax)
