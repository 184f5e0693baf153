"""The twelve exact acceptance checks, shared by the CLI and the test suite.

Each check returns ``(passed, detail)``; :func:`run` adds timing.  Every
comparison is an exact identity of rationals or polynomials.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .charseries import (
    char_closed_form,
    character_from_degrees,
    pbw_bruteforce,
    pbw_identity_check,
    plethystic_exp,
    tensor_HT,
    tensor_Hu,
    _q_margin,
)
from .coefring import CoefPoly
from .liegen import ad_power_elements, character_of, generate_subalgebra, rank_profile, spherical_generators
from .quiverkac import build_nminus_polyD, dynkin_quiver, jordan_quiver, kac_bruteforce, kac_to_bps_character
from .shuffle import (
    DEFAULT_KERNEL,
    NonPolynomialResult,
    ShuffleElement,
    ShuffleKernel,
    shuffle_lower,
    shuffle_product,
    shuffle_raise,
)
from .walgebra import (
    BRACKET_KINDS,
    WElement,
    bracket,
    heis_lower,
    heis_raise,
    random_welement,
    specialize_t,
)
from .yangian import sweep

SEED = 20240601
N_RANDOM = 200


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    module: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name} ({self.module}, {self.seconds:.2f}s): {self.detail}"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "number": self.number,
            "name": self.name,
            "module": self.module,
            "passed": self.passed,
            "detail": self.detail,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def random_triples(n: int = N_RANDOM, seed: int = SEED) -> list:
    """Deterministic random elements: z-degree <= 5, D-degree <= 5, |num|, den <= 10."""
    rng = random.Random(seed)
    return [tuple(random_welement(rng, 5, 5, 3, 10) for _ in range(3)) for _ in range(n)]


# -- W-algebra -----------------------------------------------------------------

def brackets_are_lie(kernel=None):
    """Antisymmetry and Jacobi for all three brackets on random triples."""
    bad = []
    for kind in BRACKET_KINDS:
        for k, (x, y, z) in enumerate(random_triples()):
            if not (bracket(x, y, kind) + bracket(y, x, kind)).is_zero():
                bad.append(f"{kind} antisymmetry #{k}")
                break
            jac = (
                bracket(x, bracket(y, z, kind), kind)
                + bracket(y, bracket(z, x, kind), kind)
                + bracket(z, bracket(x, y, kind), kind)
            )
            if not jac.is_zero():
                bad.append(f"{kind} Jacobi #{k}")
                break
    return not bad, "; ".join(bad) or f"{N_RANDOM} triples x {len(BRACKET_KINDS)} brackets"


def specializations_agree(kernel=None):
    """Deformed bracket at t = 0 is graded, at t = 1 is classical."""
    for k, (x, y, _) in enumerate(random_triples()):
        d = bracket(x, y, "deformed")
        if specialize_t(d, 0) != bracket(x, y, "graded"):
            return False, f"t=0 mismatch at pair #{k}"
        if specialize_t(d, 1) != bracket(x, y, "classical"):
            return False, f"t=1 mismatch at pair #{k}"
    return True, f"{N_RANDOM} pairs at t=0 and t=1"


def heisenberg_on_w(kernel=None):
    """``[D^2, -]`` and ``d/dD`` are derivations; their commutator is ``2m`` on charge ``m``."""
    for k, (x, y, _) in enumerate(random_triples()):
        for name, L in (("raise", heis_raise), ("lower", heis_lower)):
            lhs = L(bracket(x, y, "classical"))
            rhs = bracket(L(x), y, "classical") + bracket(x, L(y), "classical")
            if lhs != rhs:
                return False, f"{name} fails the Leibniz rule at pair #{k}"
    for m in range(1, 7):
        for n in range(7):
            x = WElement.monomial(m, n)
            if heis_lower(heis_raise(x)) - heis_raise(heis_lower(x)) != x * (2 * m):
                return False, f"central charge wrong at z^{m}*D^{n}"
    return True, "derivations on random pairs; central charge 2m for m<=6, n<=6"


def zD_raises_z_degree(kernel=None):
    """``[zD, z^m] = m z^{m+1}`` in the associated graded."""
    for m in range(1, 11):
        if bracket(WElement.monomial(1, 1), WElement.monomial(m), "graded") != WElement.monomial(m + 1, 0, m):
            return False, f"fails at m={m}"
    return True, "1 <= m <= 10"


# -- generation ------------------------------------------------------------------

def spherical_generation(kernel=None):
    """Generators ``z D^a`` (``a <= 6``) fill the 6 x 7 window, with the expected character."""
    M = A = 6
    gens = spherical_generators(A)
    graded = generate_subalgebra(gens, "graded", M, A)
    dims = graded.dims()
    if len(dims) != 42 or set(dims.values()) != {1}:
        return False, f"graded dims {sorted(set(dims.values()))} over {len(dims)} bidegrees"
    expected = char_closed_form("grW", wmax=2 * M, cmin=-2, cmax=2 * A - 2)
    if character_of(graded, "doubled") != expected:
        return False, "graded character differs from the closed form"
    deformed = generate_subalgebra(gens, "deformed", M, A)
    if set(deformed.dims().values()) != {1}:
        return False, "deformed dims over Q(t) are not all 1"
    for c, d in rank_profile(deformed).items():
        if set(d.values()) != {1}:
            return False, f"rank drops after t = {c}"
    return True, "42 bidegrees of dim 1 (graded and deformed; t in {0, 1/2, 1, 3})"


def ad_power_basis(kernel=None):
    """``ad_{zD}^m (z D^n)`` for ``m, n <= 5`` (classical bracket) fill the window."""
    table = ad_power_elements(5, 5, "classical")
    zeros = table.zero_entries()
    if zeros:
        return False, f"{len(zeros)} of 36 elements vanish, e.g. ad^m(zD^n) at (m,n) = {zeros[:3]}"
    if not table.fills_window():
        return False, "ranks do not fill the window"
    return True, "36 nonzero elements, rank fills every (m+1, <=n)"


# -- Yangian -------------------------------------------------------------------------

def yangian_w_model(kernel=None):
    """Quartic relation (both signs of ``t^2``) for ``i, j <= 5`` and Serre for indices ``<= 3``."""
    report = sweep(("quartic", "serre"), bound=5, model="w_deformed", serre_bound=3)
    serre_ok = all(report.serre.values())
    counts = {
        v: sum(cell[v] for cell in report.quartic.values()) for v in ("plus", "minus")
    }
    detail = (
        f"quartic pairs vanishing: plus {counts['plus']}/36, minus {counts['minus']}/36; "
        f"serre {'ok' if serre_ok else 'FAILS'}; sign variant {report.sign_variant}"
    )
    return report.passed, detail


def yangian_shuffle_model(kernel: ShuffleKernel = DEFAULT_KERNEL):
    """Quartic (``i, j <= 3``) and Serre (indices ``<= 2``) in the shuffle algebra."""
    try:
        report = sweep(("quartic", "serre"), bound=3, model="shuffle", kernel=kernel, serre_bound=2)
    except NonPolynomialResult as exc:
        return False, f"non-polynomial shuffle product: {exc}"
    ok = report.passed and report.sign_variant == "plus"
    return ok, f"kernel {kernel.text()}; sign variant {report.sign_variant}; serre {all(report.serre.values())}"


# -- shuffle Heisenberg ------------------------------------------------------------------

def monomial_symmetric_basis(degree: int, max_exp: int) -> list:
    """Monomial symmetric functions ``m_lambda`` with at most ``degree`` parts, each ``<= max_exp``."""
    out = []
    for parts in combinations_with_replacement(range(max_exp + 1), degree):
        poly = CoefPoly()
        for exps in sorted(set(permutations(parts))):
            mono = CoefPoly.const(1)
            for k, e in enumerate(exps, start=1):
                mono = mono * CoefPoly.var(f"x{k}", e)
            poly = poly + mono
        out.append(ShuffleElement(degree, poly if degree else 1))
    return out


def shuffle_heisenberg(kernel: ShuffleKernel = DEFAULT_KERNEL):
    """Raise/lower are derivations for ``d + e <= 3`` and satisfy ``[lower, raise] = d``."""
    try:
        for d, e in ((1, 1), (1, 2), (2, 1)):
            for f in monomial_symmetric_basis(d, 3):
                for g in monomial_symmetric_basis(e, 3):
                    fg = shuffle_product(f, g, kernel)
                    for name, L in (("raise", shuffle_raise), ("lower", shuffle_lower)):
                        rhs = shuffle_product(L(f), g, kernel) + shuffle_product(f, L(g), kernel)
                        if L(fg) != rhs:
                            return False, f"{name} is not a derivation on degrees ({d}, {e})"
    except NonPolynomialResult as exc:
        return False, f"non-polynomial shuffle product: {exc}"
    for d in range(0, 5):
        for f in monomial_symmetric_basis(d, 3):
            comm = shuffle_lower(shuffle_raise(f)) - shuffle_raise(shuffle_lower(f))
            if comm != f.scale(d):
                return False, f"[lower, raise] != {d} in degree {d}"
    return True, "derivations for d+e<=3, x-degree<=3; central charge d for d<=4"


# -- Kac oracle and characters ---------------------------------------------------------------

def kac_oracle(kernel=None):
    J = jordan_quiver()
    A2 = dynkin_quiver("A", 2)
    for d in (1, 2):
        for q in (2, 3):
            c = kac_bruteforce(J, d, q).count
            if c != q:
                return False, f"Jordan d={d}, q={q}: {c} != {q}"
    for q in (2, 3):
        c = kac_bruteforce(A2, (1, 1), q).count
        if c != 1:
            return False, f"A2 (1,1), q={q}: {c} != 1"
        c = kac_bruteforce(A2, (2, 0), q).count
        if c != 0:
            return False, f"A2 (2,0), q={q}: {c} != 0"
    return True, "Jordan a(q)=q for d<=2, q<=3; A2: (1,1) -> 1, (2,0) -> 0"


def character_pipeline(kernel=None):
    W, CMIN, CMAX = 5, -10, 10
    bps = kac_to_bps_character([0, 1])
    if bps != [(-2, 1)]:
        return False, f"Kac polynomial q gives {bps}, not a single class in degree -2"
    g = character_from_degrees({w: bps for w in range(1, W + 1)}, "plain", wmax=W)
    margin = _q_margin(g, W)
    ghat = tensor_Hu(g, cmax=CMAX + margin)
    if ghat.restrict(cmin=CMIN, cmax=CMAX) != char_closed_form("bps_undeformed", W, CMIN, CMAX):
        return False, "affinized BPS character differs from its closed form"
    if tensor_HT(ghat, 1).restrict(cmin=CMIN, cmax=CMAX) != char_closed_form("bps_deformed", W, CMIN, CMAX):
        return False, "torus-equivariant character differs from its closed form"
    pbw = pbw_bruteforce(ghat, W, CMIN, CMAX)
    if plethystic_exp(ghat, W, CMIN, CMAX) != pbw:
        return False, "PE differs from the PBW monomial count"
    if not pbw_identity_check(g, True, pbw):
        return False, "PBW identity check failed"
    return True, f"weight <= {W}, degrees [{CMIN}, {CMAX}]"


def finite_type_model(kernel=None):
    for n in (1, 2, 3):
        N = build_nminus_polyD("A", n, 4)
        for name, check in (
            ("Jacobi", N.check_jacobi),
            ("derivation", N.check_derivations),
            ("[q_i, p_i] = d_i", N.check_heisenberg),
        ):
            if not check():
                return False, f"A{n}: {name} fails"
    return True, "A1, A2, A3 with D-degree <= 4"


CRITERIA = (
    (1, "brackets are Lie brackets", "walgebra", brackets_are_lie),
    (2, "deformed bracket specializes", "walgebra", specializations_agree),
    (3, "Heisenberg action on W", "walgebra", heisenberg_on_w),
    (4, "spherical generation", "liegen", spherical_generation),
    (5, "ad-power basis", "liegen", ad_power_basis),
    (6, "zD raises z-degree", "walgebra", zD_raises_z_degree),
    (7, "Yangian relations, W model", "yangian", yangian_w_model),
    (8, "Yangian relations, shuffle model", "shuffle", yangian_shuffle_model),
    (9, "Heisenberg action on shuffle algebra", "shuffle", shuffle_heisenberg),
    (10, "Kac polynomial oracle", "quiverkac", kac_oracle),
    (11, "character pipeline", "charseries", character_pipeline),
    (12, "finite-type affinization", "quiverkac", finite_type_model),
)

MODULES = tuple(sorted({c[2] for c in CRITERIA}))


def run_criterion(number: int, kernel: ShuffleKernel = DEFAULT_KERNEL) -> CriterionResult:
    for num, name, module, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn(kernel)
            return CriterionResult(num, name, module, bool(passed), detail, time.perf_counter() - start)
    raise KeyError(f"no criterion {number}")


def run(only=None, kernel: ShuffleKernel = DEFAULT_KERNEL) -> list:
    """Run every criterion, or those whose module is in ``only``."""
    if only:
        unknown = set(only) - set(MODULES)
        if unknown:
            raise ValueError(f"unknown module(s) {sorted(unknown)}; expected {MODULES}")
    return [
        run_criterion(num, kernel)
        for num, _, module, _ in CRITERIA
        if not only or module in only
    ]
