"""Command-line front end: ``wkit <subcommand> ...``.

Exit status: 0 on success (or a passing check), 1 on a computational failure
or a failing check, 2 on a usage error.  ``--json`` emits one object
``{"schema": 1, "command": ..., "inputs": ..., "result": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .charseries import (
    CLOSED_FORMS,
    char_closed_form,
    character_from_degrees,
    pbw_bruteforce,
    pbw_identity_check,
    tensor_Hu,
    _q_margin,
)
from .coefring import InexactDivision, ParseError
from .liegen import TruncationOverflow, ad_power_elements, character_of, generate_subalgebra
from .quiverkac import (
    TooLarge,
    UnsupportedType,
    build_nminus_polyD,
    kac_bruteforce,
    kac_to_bps_character,
    parse_quiver,
    positive_roots,
    root_multiplicities,
)
from .shuffle import (
    DEFAULT_KERNEL,
    NonPolynomialResult,
    NotSymmetric,
    parse_kernel,
    parse_shuffle,
    shuffle_lower,
    shuffle_product,
    shuffle_raise,
)
from .walgebra import BRACKET_KINDS, bracket, format_welement, parse_welement
from .yangian import sweep

SCHEMA = 1


class UsageError(Exception):
    """Bad flag value; reported with exit status 2."""


def _usage(flag: str, exc: Exception):
    raise UsageError(f"{flag}: {exc}") from exc


def _welement(text, flag):
    try:
        return parse_welement(text)
    except ParseError as exc:
        _usage(flag, exc)


def _kernel(text):
    if text is None:
        return DEFAULT_KERNEL
    try:
        return parse_kernel(text)
    except ParseError as exc:
        _usage("--kernel", exc)


def _ints(text, flag):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        _usage(flag, exc)


# -- subcommands ------------------------------------------------------------------
# Each returns (inputs, result, text_lines, passed).

def cmd_bracket(a):
    x, y = _welement(a.x, "X"), _welement(a.y, "Y")
    r = format_welement(bracket(x, y, a.kind))
    return {"kind": a.kind, "x": a.x, "y": a.y}, r, [r], True


def cmd_generate(a):
    gens = [_welement(g, "GENERATORS") for g in a.generators]
    for g, text in zip(gens, a.generators):
        if len(g.terms) != 1:
            _usage("GENERATORS", ValueError(f"{text!r} is not homogeneous in z"))
    if a.mmax < 1 or a.amax < 1:
        _usage("--mmax/--amax", ValueError("bounds must be >= 1"))
    S = generate_subalgebra(gens, a.bracket, a.mmax, a.amax)
    dims = S.dims()
    result = {
        "dims": [{"m": m, "a": k, "dim": d} for (m, k), d in sorted(dims.items())],
        "total": S.total_dimension(),
        "character": character_of(S, "doubled").format(),
    }
    lines = [f"total dimension {S.total_dimension()}"]
    for m in range(1, a.mmax + 1):
        lines.append(f"m={m}: " + " ".join(str(dims[(m, k)]) for k in range(a.amax + 1)))
    if a.basis:
        result["basis"] = [format_welement(e) for e in S.elements()]
        lines += result["basis"]
    inputs = {"generators": a.generators, "bracket": a.bracket, "mmax": a.mmax, "amax": a.amax}
    return inputs, result, lines, True


def cmd_adbasis(a):
    if a.mmax < 0 or a.nmax < 0:
        _usage("--mmax/--nmax", ValueError("bounds must be >= 0"))
    T = ad_power_elements(a.mmax, a.nmax, a.kind)
    ranks = T.ranks()
    rows = [
        {"m": m, "n": n, "element": format_welement(T.elements[(m, n)]), "rank": ranks[(m, n)]}
        for (m, n) in sorted(T.elements)
    ]
    ok = T.fills_window()
    lines = [f"ad^{r['m']}(zD^{r['n']}) = {r['element']}   rank {r['rank']}" for r in rows]
    lines.append(f"fills window: {ok}")
    inputs = {"mmax": a.mmax, "nmax": a.nmax, "kind": a.kind}
    return inputs, {"elements": rows, "zero_entries": [list(k) for k in T.zero_entries()], "fills_window": ok}, lines, True


def cmd_shuffle(a):
    K = _kernel(a.kernel)
    degs = list(_ints(a.degrees, "--degrees")) if a.degrees else []
    need = 2 if a.op == "product" else 1
    if len(a.operands) != need:
        _usage("OPERANDS", ValueError(f"{a.op} takes {need} operand(s)"))
    els = []
    for k, text in enumerate(a.operands):
        try:
            els.append(parse_shuffle(text, degs[k] if k < len(degs) else None))
        except (ParseError, NotSymmetric, ValueError) as exc:
            _usage("OPERANDS", exc)
    if a.op == "product":
        r = shuffle_product(els[0], els[1], K, full_group=a.full_group)
    elif a.op == "raise":
        r = shuffle_raise(els[0])
    else:
        r = shuffle_lower(els[0])
    inputs = {"op": a.op, "operands": a.operands, "kernel": K.text(), "full_group": a.full_group}
    return inputs, {"degree": r.degree, "poly": str(r)}, [str(r)], True


def cmd_yangian(a):
    model = {"w": "w_deformed", "shuffle": "shuffle"}[a.model]
    if a.bound < 0:
        _usage("--bound", ValueError("must be >= 0"))
    K = _kernel(a.kernel)
    rep = sweep(("quartic", "serre"), a.bound, model, K, a.serre_bound)
    res = rep.to_json()
    lines = [
        f"model {model}, bound {a.bound}",
        "quartic: " + " ".join(
            f"{i},{j}:{'+' if c['plus'] else '.'}{'-' if c['minus'] else '.'}"
            for (i, j), c in sorted(rep.quartic.items())
        ),
        f"serre: {sum(rep.serre.values())}/{len(rep.serre)} vanish",
        f"sign variant: {rep.sign_variant}",
        "PASS" if rep.passed else "FAIL",
    ]
    inputs = {"model": model, "bound": a.bound, "serre_bound": a.serre_bound, "kernel": K.text()}
    return inputs, res, lines, rep.passed


def cmd_kac(a):
    try:
        Q = parse_quiver(a.quiver)
    except ValueError as exc:
        _usage("QUIVER", exc)
    d = _ints(a.dim, "--dim")
    if len(d) != len(Q.vertices):
        _usage("--dim", ValueError(f"expected {len(Q.vertices)} entries"))
    if a.q not in (2, 3, 4, 5):
        _usage("--q", ValueError("q must be one of 2, 3, 4, 5"))
    s = kac_bruteforce(Q, d, a.q)
    res = s.to_json()
    return {"quiver": a.quiver, "dim": list(d), "q": a.q}, res, [str(s.count)], True


def cmd_nminus(a):
    try:
        roots = positive_roots(a.type.upper(), a.rank)
        N = build_nminus_polyD(a.type, a.rank, a.mmax)
    except UnsupportedType as exc:
        _usage("--type/--rank", exc)
    res = {
        "roots": [list(r) for r in roots],
        "basis_size": len(N.basis()),
        "jacobi": N.check_jacobi(),
        "derivations": N.check_derivations(),
        "heisenberg": N.check_heisenberg(),
    }
    if a.dim:
        res["multiplicity"] = root_multiplicities(a.type, a.rank, _ints(a.dim, "--dim"))
    ok = res["jacobi"] and res["derivations"] and res["heisenberg"]
    lines = [f"{len(roots)} positive roots; basis {res['basis_size']}",
             f"jacobi {res['jacobi']}, derivations {res['derivations']}, heisenberg {res['heisenberg']}"]
    if a.dim:
        lines.append(f"multiplicity of {a.dim}: {res['multiplicity']}")
    inputs = {"type": a.type.upper(), "rank": a.rank, "mmax": a.mmax, "dim": a.dim}
    return inputs, res, lines, ok


def cmd_char(a):
    c = char_closed_form(a.which, a.wmax, a.qmin, a.qmax)
    if a.convention != c.convention:
        c = c.to_doubled() if a.convention == "doubled" else c.to_plain()
    inputs = {"which": a.which, "wmax": a.wmax, "qmin": a.qmin, "qmax": a.qmax, "convention": a.convention}
    lines = [f"t^{w}: " + " ".join(f"q^{k}:{v}" for k, v in sorted(c.weight_slice(w).items()))
             for w in sorted({w for w, _ in c.terms})]
    return inputs, c.to_json(), lines or ["0"], True


def cmd_pbw(a):
    coeffs = _ints(a.kac, "--kac")
    try:
        bps = kac_to_bps_character(coeffs)
    except ValueError as exc:
        _usage("--kac", exc)
    g = character_from_degrees({w: bps for w in range(1, a.wmax + 1)}, "plain", wmax=a.wmax)
    ghat = tensor_Hu(g, cmax=a.qmax + _q_margin(g, a.wmax))
    target = pbw_bruteforce(ghat, a.wmax, a.qmin, a.qmax)
    ok = pbw_identity_check(g, True, target)
    inputs = {"kac": list(coeffs), "wmax": a.wmax, "qmin": a.qmin, "qmax": a.qmax}
    return inputs, {"bps": [list(x) for x in bps], "agrees": ok, "pbw": target.to_json()}, [
        f"PE[g (x) Q[u]] equals the PBW monomial count: {ok}"], ok


def cmd_accept(a):
    K = _kernel(a.kernel)
    try:
        results = acceptance.run(a.only, K)
    except ValueError as exc:
        _usage("--only", exc)
    ok = all(r.passed for r in results)
    if a.timing:
        lines = [r.line() for r in results]
    else:
        lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.number:2d} {r.name} ({r.module}): {r.detail}" for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    inputs = {"only": a.only, "kernel": K.text(), "timing": a.timing}
    return inputs, {"criteria": [r.to_json(a.timing) for r in results], "passed": ok}, lines, ok


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wkit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit a single JSON object")
    # --json is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    s = sub.add_parser("bracket", help="bracket two W elements")
    s.add_argument("--kind", choices=BRACKET_KINDS, default="classical")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(fn=cmd_bracket)

    s = sub.add_parser("generate", help="truncated Lie subalgebra generated by elements")
    s.add_argument("generators", nargs="*")
    s.add_argument("--bracket", choices=BRACKET_KINDS, default="graded")
    s.add_argument("--mmax", type=int, required=True)
    s.add_argument("--amax", type=int, required=True)
    s.add_argument("--basis", action="store_true", help="also print the echelon basis")
    s.set_defaults(fn=cmd_generate)

    s = sub.add_parser("adbasis", help="table of ad_{zD}^m (z D^n)")
    s.add_argument("--mmax", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--kind", choices=BRACKET_KINDS, default="classical")
    s.set_defaults(fn=cmd_adbasis)

    s = sub.add_parser("shuffle", help="shuffle product and Heisenberg operators")
    s.add_argument("op", choices=("product", "raise", "lower"))
    s.add_argument("operands", nargs="+")
    s.add_argument("--degrees", help="comma-separated degrees of the operands")
    s.add_argument("--kernel", help='factor list, e.g. "(x+t1)(x+t2)(x+t3)/(x)"')
    s.add_argument("--full-group", action="store_true", help="sum over the full symmetric group")
    s.set_defaults(fn=cmd_shuffle)

    s = sub.add_parser("yangian-check", help="sweep the Yangian relations")
    s.add_argument("--model", choices=("w", "shuffle"), required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--serre-bound", type=int)
    s.add_argument("--kernel")
    s.set_defaults(fn=cmd_yangian)

    s = sub.add_parser("kac", help="brute-force count of absolutely indecomposables")
    s.add_argument("quiver", help="edge list such as '1-1' or '1->2'")
    s.add_argument("--dim", required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(fn=cmd_kac)

    s = sub.add_parser("nminus", help="ADE root data and the n^- (x) Q[D] model")
    s.add_argument("--type", required=True)
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--mmax", type=int, default=2)
    s.add_argument("--dim", help="report the multiplicity of this dimension vector")
    s.set_defaults(fn=cmd_nminus)

    s = sub.add_parser("char", help="expand a closed-form character")
    s.add_argument("--which", choices=CLOSED_FORMS, required=True)
    s.add_argument("--wmax", type=int, required=True)
    s.add_argument("--qmin", type=int, default=-2)
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--convention", choices=("plain", "doubled"))
    s.set_defaults(fn=cmd_char)

    s = sub.add_parser("pbw-check", help="PE of the affinized BPS character vs PBW monomials")
    s.add_argument("--kac", default="0,1", help="Kac polynomial coefficients, constant first")
    s.add_argument("--wmax", type=int, default=5)
    s.add_argument("--qmin", type=int, default=-10)
    s.add_argument("--qmax", type=int, default=10)
    s.set_defaults(fn=cmd_pbw)

    s = sub.add_parser("accept", help="run the acceptance criteria")
    s.add_argument("--only", nargs="+", metavar="MODULE")
    s.add_argument("--kernel")
    s.add_argument("--timing", action="store_true", help="include wall times (not byte-stable)")
    s.set_defaults(fn=cmd_accept)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "char" and args.convention is None:
        args.convention = "doubled" if args.which == "grW" else "plain"
    try:
        inputs, result, lines, passed = args.fn(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (NonPolynomialResult, TooLarge, TruncationOverflow, InexactDivision) as exc:
        msg = f"{type(exc).__name__}: {exc}"
        if args.json:
            print(json.dumps({"schema": SCHEMA, "command": args.command, "error": msg}, indent=2))
        else:
            print(msg, file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(
            {"schema": SCHEMA, "command": args.command, "inputs": inputs, "result": result},
            indent=2, ensure_ascii=False,
        ))
    else:
        print("\n".join(lines))
    return 0 if passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
