"""Residuals of the affine Yangian relations for generators ``e_i``.

Quartic relation, for ``i, j >= 0``::

    [e_{i+3}, e_j] - 3[e_{i+2}, e_{j+1}] + 3[e_{i+1}, e_{j+2}] - [e_i, e_{j+3}]
      + s2 ([e_{i+1}, e_j] - [e_i, e_{j+1}]) = -s3 (e_i e_j + e_j e_i)

Cubic Serre relation::

    sum over permutations of (i1, i2, i3) of [e_{i1}, [e_{i2}, e_{i3 + 1}]] = 0

Two models are available:

* ``w_deformed``: ``e_i -> z D^i`` with the deformed bracket, ``s2 -> +t^2``
  (variant ``plus``) or ``-t^2`` (variant ``minus``), and ``s3 -> 0``, so the
  check is purely Lie-theoretic.
* ``shuffle``: ``e_i -> x1^i`` in the shuffle algebra, brackets are
  commutators of the shuffle product, ``s3 = t1 t2 t3`` and ``s2`` is the
  second elementary symmetric function of ``(t1, t2, t3)`` (variant
  ``plus``) or its negative (variant ``minus``).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product

from .coefring import CoefPoly
from .shuffle import DEFAULT_KERNEL, ShuffleElement, ShuffleKernel, commutator, shuffle_e, shuffle_product
from .walgebra import WElement, bracket, format_welement

MODELS = ("w_deformed", "shuffle")
SIGN_VARIANTS = ("plus", "minus")
RELATIONS = ("quartic", "serre")

_T1, _T2 = CoefPoly.var("t1"), CoefPoly.var("t2")
_T3 = -_T1 - _T2
SIGMA2 = _T1 * _T2 + _T1 * _T3 + _T2 * _T3
SIGMA3 = _T1 * _T2 * _T3


def thread_count() -> int:
    """Degree of parallelism from ``WKIT_THREADS`` (default 1)."""
    raw = os.environ.get("WKIT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"WKIT_THREADS must be an integer, got {raw!r}") from exc
    return max(1, n)


# -- models ------------------------------------------------------------------

class _WModel:
    name = "w_deformed"

    def gen(self, i):
        return WElement.monomial(1, i)

    def bracket(self, a, b):
        return bracket(a, b, "deformed")

    def sigma2(self, variant):
        t2 = CoefPoly.var("t", 2)
        return t2 if variant == "plus" else -t2

    def anticommutator_term(self, a, b):
        # s3 vanishes in this model
        return None

    def zero(self):
        return WElement()


class _ShuffleModel:
    name = "shuffle"

    def __init__(self, kernel):
        self.kernel = kernel

    def gen(self, i):
        return shuffle_e(i)

    def bracket(self, a, b):
        return _cached_commutator(a, b, self.kernel)

    def sigma2(self, variant):
        return SIGMA2 if variant == "plus" else -SIGMA2

    def anticommutator_term(self, a, b):
        ab = shuffle_product(a, b, self.kernel)
        ba = shuffle_product(b, a, self.kernel)
        return (ab + ba).scale(SIGMA3)

    def zero(self):
        return ShuffleElement(0, 0, check=False)


@lru_cache(maxsize=4096)
def _cached_commutator(a: ShuffleElement, b: ShuffleElement, kernel: ShuffleKernel):
    return commutator(a, b, kernel)


def _model(model: str, kernel: ShuffleKernel):
    if model == "w_deformed":
        return _WModel()
    if model == "shuffle":
        return _ShuffleModel(kernel)
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def _scale(x, c):
    return x.scale(c) if isinstance(x, ShuffleElement) else x * c


# -- residuals -----------------------------------------------------------------

@dataclass(frozen=True)
class RelationResidual:
    relation: str
    indices: tuple
    model: str
    sign_variant: str | None
    residual: object

    @property
    def vanishes(self) -> bool:
        return self.residual.is_zero()

    def residual_text(self) -> str:
        if isinstance(self.residual, WElement):
            return format_welement(self.residual)
        return str(self.residual)


def check_quartic(i: int, j: int, model: str = "w_deformed", sign_variant: str = "plus",
                  kernel: ShuffleKernel = DEFAULT_KERNEL, sigma2=None) -> RelationResidual:
    """Exact ``LHS - RHS`` of the quartic relation at ``(i, j)``.

    ``sigma2`` replaces the model's value of ``s2`` outright (the recorded
    ``sign_variant`` is then ``"custom"``); useful for probing which
    specialization of ``s2`` a model actually satisfies.
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be >= 0")
    if sigma2 is not None:
        sign_variant = "custom"
    elif sign_variant not in SIGN_VARIANTS:
        raise ValueError(f"unknown sign variant {sign_variant!r}")
    M = _model(model, kernel)
    e = M.gen
    br = M.bracket
    cubic = None
    for k, c in enumerate((1, -3, 3, -1)):
        term = _scale(br(e(i + 3 - k), e(j + k)), c)
        cubic = term if cubic is None else cubic + term
    linear = br(e(i + 1), e(j)) - br(e(i), e(j + 1))
    s2 = CoefPoly.coerce(sigma2) if sigma2 is not None else M.sigma2(sign_variant)
    lhs = cubic + _scale(linear, s2)
    rhs_part = M.anticommutator_term(e(i), e(j))
    # LHS - RHS = LHS + s3 (e_i e_j + e_j e_i)
    residual = lhs if rhs_part is None else lhs + rhs_part
    return RelationResidual("quartic", (i, j), model, sign_variant, residual)


def check_serre(i1: int, i2: int, i3: int, model: str = "w_deformed",
                kernel: ShuffleKernel = DEFAULT_KERNEL) -> RelationResidual:
    """Exact value of the symmetrized double bracket."""
    if min(i1, i2, i3) < 0:
        raise ValueError("indices must be >= 0")
    M = _model(model, kernel)
    total = None
    for a, b, c in permutations((i1, i2, i3)):
        term = M.bracket(M.gen(a), M.bracket(M.gen(b), M.gen(c + 1)))
        total = term if total is None else total + term
    return RelationResidual("serre", (i1, i2, i3), model, None, total)


# -- sweeps -------------------------------------------------------------------------

@dataclass
class SweepReport:
    model: str
    bound: int
    quartic: dict = field(default_factory=dict)  # (i, j) -> {variant: bool}
    serre: dict = field(default_factory=dict)  # (i1, i2, i3) -> bool
    kernel: str | None = None

    @property
    def sign_variant(self):
        """The unique variant under which every quartic residual vanishes, if any."""
        if not self.quartic:
            return None
        ok = [v for v in SIGN_VARIANTS if all(cell[v] for cell in self.quartic.values())]
        return ok[0] if len(ok) == 1 else None

    @property
    def passed(self) -> bool:
        quartic_ok = not self.quartic or self.sign_variant is not None
        return quartic_ok and all(self.serre.values())

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "bound": self.bound,
            "kernel": self.kernel,
            "sign_variant": self.sign_variant,
            "quartic": [
                {"indices": list(k), **{v: cell[v] for v in SIGN_VARIANTS}}
                for k, cell in sorted(self.quartic.items())
            ],
            "serre": [{"indices": list(k), "vanishes": ok} for k, ok in sorted(self.serre.items())],
            "passed": self.passed,
        }


def _map(fn, items):
    n = thread_count()
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def sweep(relations=RELATIONS, bound: int = 2, model: str = "w_deformed",
          kernel: ShuffleKernel = DEFAULT_KERNEL, serre_bound: int | None = None) -> SweepReport:
    """Check every index tuple with entries ``<= bound``.

    Quartic checks are run under both sign variants.  ``serre_bound``
    overrides ``bound`` for the Serre relation.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    for r in relations:
        if r not in RELATIONS:
            raise ValueError(f"unknown relation {r!r}")
    _model(model, kernel)
    report = SweepReport(model, bound, kernel=kernel.text() if model == "shuffle" else None)
    if "quartic" in relations:
        pairs = list(product(range(bound + 1), repeat=2))
        cells = _map(
            lambda ij: {v: check_quartic(*ij, model, v, kernel).vanishes for v in SIGN_VARIANTS},
            pairs,
        )
        report.quartic = dict(zip(pairs, cells))
    if "serre" in relations:
        sb = bound if serre_bound is None else serre_bound
        triples = list(product(range(sb + 1), repeat=3))
        oks = _map(lambda ijk: check_serre(*ijk, model, kernel).vanishes, triples)
        report.serre = dict(zip(triples, oks))
    return report
