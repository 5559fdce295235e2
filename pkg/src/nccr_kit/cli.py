"""Command-line front end.  Every command prints one JSON object to stdout.

Exit codes: 0 success or certified, 1 a certificate was falsified, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from pathlib import Path

from . import __version__
from .algebra import build_quiver, compare_sides, emit_dot
from .bwb import bwb, tilting_vanishing
from .cm import NoWitnessError, betas_outside_up, certify_cm, cm_report, max_gap, maximality_witness
from .certify import CHECKS, SweepConfig, run_sweep
from .schur import lr_decompose
from .staircase import AlreadyProjective, ResolutionError, resolve, staircase_bwb, staircase_geometric
from .young import BoxError, GrContext, NonCoprimeError, d_upp, enumerate_up, fmt, to_binary

SCHEMA = "nccr-kit/1"


class UsageError(Exception):
    pass


def diagram_arg(text: str) -> tuple[int, ...]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"not valid JSON: {text!r} ({exc.msg})") from None
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise argparse.ArgumentTypeError(f"expected a JSON array of integers, got {text!r}")
    return tuple(value)


def _emit(payload: dict, meta: dict | None = None) -> None:
    out = {"schema": SCHEMA, **payload}
    if meta is not None:
        out["meta"] = meta
    sys.stdout.write(json.dumps(out, separators=(",", ":")) + "\n")


def _write_json(path: str, payload: dict) -> None:
    Path(path).write_text(json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n")


def _ctx(args) -> GrContext:
    return GrContext(args.n, args.k, allow_noncoprime=getattr(args, "allow_noncoprime", False))


def _check_diagram(args, flag: str, length: int) -> tuple[int, ...]:
    value = getattr(args, flag.replace("-", "_"))
    if len(value) != length:
        raise UsageError(f"--{flag}: expected {length} entries, got {list(value)}")
    if any(a < b for a, b in zip(value, value[1:])) or (value and value[-1] < 0):
        raise UsageError(f"--{flag}: {list(value)} is not a Young diagram")
    return value


def cmd_enumerate_up(args) -> int:
    ctx = _ctx(args)
    _emit({"command": "enumerate-up", "n": ctx.n, "k": ctx.k, "result": [list(a) for a in enumerate_up(ctx)]})
    return 0


def cmd_lr(args) -> int:
    decomp = lr_decompose(args.alpha, args.beta, args.m)
    result = {fmt(g): mult for g, mult in sorted(decomp.items(), reverse=True)}
    _emit({"command": "lr", "m": args.m, "alpha": list(args.alpha), "beta": list(args.beta), "result": result})
    return 0


def cmd_bwb(args) -> int:
    ctx = _ctx(args)
    out = bwb(args.beta, args.gamma, ctx, args.twist)
    result = {"vanishes": True} if out is None else {
        "dominant": list(out.dominant), "degree": out.degree, "dim": out.dim,
    }
    _emit({"command": "bwb", "n": ctx.n, "k": ctx.k, "result": result})
    return 0


def cmd_dupp(args) -> int:
    ctx = _ctx(args)
    alpha = _check_diagram(args, "alpha", ctx.k)
    _emit({"command": "dupp", "n": ctx.n, "k": ctx.k, "alpha": list(alpha),
           "binary": to_binary(alpha, ctx), "result": d_upp(alpha, ctx)})
    return 0


def cmd_staircase(args) -> int:
    ctx = _ctx(args)
    alpha = _check_diagram(args, "alpha", ctx.k)
    if alpha[0] - alpha[-1] > ctx.width:
        bwb_terms = staircase_bwb(alpha, ctx)
        result = {
            "source": list(alpha),
            "method": "bwb",
            "terms": [None if t is None else list(t) for t in bwb_terms],
        }
    else:
        result = {"method": "geometric", **staircase_geometric(alpha, ctx).as_dict()}
    _emit({"command": "staircase", "n": ctx.n, "k": ctx.k, "result": result})
    return 0


def cmd_resolve(args) -> int:
    ctx = _ctx(args)
    alpha = _check_diagram(args, "alpha", ctx.k)
    try:
        trace = resolve(alpha, ctx, args.depth_limit)
    except ResolutionError as exc:
        _emit({"command": "resolve", "n": ctx.n, "k": ctx.k, "error": str(exc)})
        return 1
    _emit({"command": "resolve", "n": ctx.n, "k": ctx.k, "result": trace.as_dict()})
    return 0


def cmd_cm_certify(args) -> int:
    ctx = _ctx(args)
    rep = certify_cm(ctx) if ctx.coprime else cm_report(ctx)
    payload = {"command": "cm-certify", "result": rep.as_dict()}
    if args.report:
        _write_json(args.report, payload)
    _emit(payload)
    return 0 if rep.certified else 1


def cmd_maximality(args) -> int:
    ctx = _ctx(args)
    betas = [_check_diagram(args, "beta", ctx.k)] if args.beta is not None else betas_outside_up(ctx)
    results, failed = [], False
    for beta in betas:
        try:
            alpha, gamma = maximality_witness(beta, ctx)
        except NoWitnessError as exc:
            if args.beta is not None and "in UP" in str(exc):
                raise UsageError(f"--beta: {exc}") from None
            results.append({"beta": list(beta), "error": str(exc)})
            failed = True
            continue
        except AssertionError as exc:
            results.append({"beta": list(beta), "error": str(exc)})
            failed = True
            continue
        results.append({"beta": list(beta), "alpha": list(alpha), "gamma": list(gamma), "gap": max_gap(gamma)})
    _emit({"command": "maximality", "n": ctx.n, "k": ctx.k, "result": results})
    return 1 if failed else 0


def cmd_quiver(args) -> int:
    ctx = _ctx(args)
    q = build_quiver(ctx, args.side, args.max_degree)
    payload = {"command": "quiver", "result": q.as_dict()}
    if args.compare:
        payload["comparison"] = [c.as_dict() for c in compare_sides(ctx, args.max_degree)]
    if args.json:
        _write_json(args.json, payload)
    if args.dot:
        Path(args.dot).write_text(emit_dot(q))
    _emit(payload)
    return 0


def cmd_tilting_check(args) -> int:
    ctx = _ctx(args)
    ctx.require_coprime("tilting-check")
    top = ctx.k * ctx.width if args.max_twist is None else args.max_twist
    up = enumerate_up(ctx)
    failures = [
        {"alpha": list(a), "beta": list(b), "twist": i}
        for a in up for b in up for i in range(top + 1)
        if not tilting_vanishing(a, b, i, ctx)
    ]
    _emit({"command": "tilting-check", "n": ctx.n, "k": ctx.k,
           "result": {"max_twist": top, "cases": len(up) ** 2 * (top + 1), "failures": failures}})
    return 1 if failures else 0


def _sweep_contexts(args) -> list[tuple[int, int]]:
    if args.max_n is not None:
        return [(n, k) for n in range(5, args.max_n + 1) for k in range(2, n - 1) if gcd(n, k) == 1]
    if args.n is None or args.k is None:
        raise UsageError("certify-all needs --n and --k, or --max-n")
    return [(args.n, args.k)]


def cmd_certify_all(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else CHECKS
    cfg = SweepConfig(_sweep_contexts(args), args.max_degree, args.width_factor, args.jobs, checks)
    bundle, timing = run_sweep(cfg)
    payload = {"command": "certify-all", "version": __version__, "result": bundle}
    if args.report:
        _write_json(args.report, {**payload, "meta": {"timing": timing}})
    if args.figures:
        from .report import write_figures

        written = write_figures(bundle, args.figures)
        payload["figures"] = sorted(p.name for p in written)
    _emit(payload, {"timing": timing} if args.timing else None)
    return 0 if bundle["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nccr-kit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_ctx(name, help_text, noncoprime=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        if noncoprime:
            sp.add_argument("--allow-noncoprime", action="store_true")
        return sp

    sp = with_ctx("enumerate-up", "list UP_{n,k}", noncoprime=True)
    sp.set_defaults(func=cmd_enumerate_up)

    sp = sub.add_parser("lr", help="Littlewood-Richardson decomposition")
    sp.add_argument("--alpha", type=diagram_arg, required=True)
    sp.add_argument("--beta", type=diagram_arg, required=True)
    sp.add_argument("--m", type=int, required=True, help="rank of GL_m")
    sp.set_defaults(func=cmd_lr)

    sp = with_ctx("bwb", "cohomology of S^beta S* (x) S^gamma Q* (x) O(twist)", noncoprime=True)
    sp.add_argument("--beta", type=diagram_arg, required=True)
    sp.add_argument("--gamma", type=diagram_arg, required=True)
    sp.add_argument("--twist", type=int, default=0)
    sp.set_defaults(func=cmd_bwb)

    sp = with_ctx("dupp", "rotations needed to reach UP")
    sp.add_argument("--alpha", type=diagram_arg, required=True)
    sp.set_defaults(func=cmd_dupp)

    sp = with_ctx("staircase", "terms of the staircase complex of P_alpha")
    sp.add_argument("--alpha", type=diagram_arg, required=True)
    sp.set_defaults(func=cmd_staircase)

    sp = with_ctx("resolve", "iterated staircase resolution of P_alpha")
    sp.add_argument("--alpha", type=diagram_arg, required=True)
    sp.add_argument("--depth-limit", type=int, default=None)
    sp.set_defaults(func=cmd_resolve)

    sp = with_ctx("cm-certify", "Cohen-Macaulay gap sweep over UP x UP", noncoprime=True)
    sp.add_argument("--report", metavar="PATH")
    sp.set_defaults(func=cmd_cm_certify)

    sp = with_ctx("maximality", "witnesses that UP cannot be enlarged")
    sp.add_argument("--beta", type=diagram_arg, default=None, help="default: every in-box beta outside UP")
    sp.set_defaults(func=cmd_maximality)

    sp = with_ctx("quiver", "graded quiver, truncated at --max-degree")
    sp.add_argument("--side", choices=("sub", "quot"), default="sub")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--dot", metavar="PATH")
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--compare", action="store_true", help="include the side-by-side comparison")
    sp.set_defaults(func=cmd_quiver)

    sp = with_ctx("tilting-check", "higher cohomology vanishing over UP x UP")
    sp.add_argument("--max-twist", type=int, default=None, help="default k(n-k)")
    sp.set_defaults(func=cmd_tilting_check)

    sp = sub.add_parser("certify-all", help="run every certificate")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-n", type=int, help="sweep every coprime pair with n up to this")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--width-factor", type=int, default=2, help="resolve diagrams with alpha_1 up to this times n-k")
    sp.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report", metavar="PATH")
    sp.add_argument("--figures", metavar="DIR", help="write PNG figures and summary.tsv here")
    sp.add_argument("--timing", action="store_true", help="add a meta.timing field to stdout")
    sp.set_defaults(func=cmd_certify_all)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NonCoprimeError, BoxError, AlreadyProjective, ValueError) as exc:
        print(f"nccr-kit {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
