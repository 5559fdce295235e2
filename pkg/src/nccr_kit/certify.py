"""Certification sweeps: every per-context check, bundled for the CLI."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import graded_hom
from .bwb import tilting_vanishing
from .cm import betas_outside_up, certify_cm, is_cm_safe, maximality_witness
from .staircase import (
    ResolutionError,
    resolve,
    staircase_bwb_terms,
    staircase_geometric,
    verify_dupp_descent,
    verify_width_descent,
)
from .young import Diagram, GrContext, diagrams_in_box, enumerate_up, in_up

CHECKS = ("cm", "maximality", "staircase", "width_descent", "resolve", "tilting", "algebra")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "failures": self.failures}


@dataclass
class SweepConfig:
    contexts: list[tuple[int, int]]
    max_degree: int = 4
    width_factor: int = 2
    jobs: int = 1
    checks: tuple[str, ...] = CHECKS

    def __post_init__(self):
        # validate every context before any work starts
        for n, k in self.contexts:
            GrContext(n, k)
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.max_degree < 0 or self.width_factor < 1 or self.jobs < 1:
            raise ValueError("max_degree >= 0, width_factor >= 1 and jobs >= 1 required")


def wide_diagrams(ctx: GrContext, width: int) -> list[Diagram]:
    """Diagrams with k rows, last row empty, first row at most ``width``."""
    return [a for a in diagrams_in_box(ctx.k, width) if a[-1] == 0]


def check_cm(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    rep = certify_cm(ctx)
    d = rep.as_dict()
    return CheckResult(
        "cm",
        rep.certified,
        {"pairs_checked": d["pairs_checked"], "worst_gap": d["worst_gap"], "bound": d["bound"]},
        d["violations"],
    )


def check_maximality(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    failures, count = [], 0
    for beta in betas_outside_up(ctx):
        count += 1
        try:
            maximality_witness(beta, ctx)
        except (ValueError, AssertionError) as exc:
            failures.append({"beta": list(beta), "error": str(exc)})
    return CheckResult("maximality", not failures, {"betas": count}, failures)


def check_staircase(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    """d_upp descent plus geometric/BWB term agreement on the box."""
    failures, count = [], 0
    for alpha in betas_outside_up(ctx):
        count += 1
        geo = staircase_geometric(alpha, ctx).term_diagrams()
        if geo != staircase_bwb_terms(alpha, ctx):
            failures.append({"alpha": list(alpha), "error": "geometric and BWB terms differ"})
        if not verify_dupp_descent(alpha, ctx):
            failures.append({"alpha": list(alpha), "error": "d_upp does not descend"})
    return CheckResult("staircase", not failures, {"diagrams": count}, failures)


def check_width_descent(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    failures, count = [], 0
    for alpha in wide_diagrams(ctx, cfg.width_factor * ctx.width):
        if alpha[0] <= ctx.width:
            continue
        count += 1
        if not verify_width_descent(alpha, ctx):
            failures.append({"alpha": list(alpha)})
    return CheckResult("width_descent", not failures, {"diagrams": count}, failures)


def check_resolve(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    failures, anomalies, depths = [], [], {}
    bound = None
    for alpha in wide_diagrams(ctx, cfg.width_factor * ctx.width):
        try:
            trace = resolve(alpha, ctx)
        except ResolutionError as exc:
            failures.append({"alpha": list(alpha), "error": str(exc)})
            continue
        bound = trace.bound
        if not all(in_up(leaf, ctx) for leaf in trace.leaves):
            failures.append({"alpha": list(alpha), "error": "leaf outside UP"})
        depths[trace.projective_dimension] = depths.get(trace.projective_dimension, 0) + 1
        if trace.anomalous:
            anomalies.append({"alpha": list(alpha), "depth": trace.projective_dimension})
    detail = {
        "diagrams": sum(depths.values()),
        "max_depth": max(depths) if depths else 0,
        "bound": bound,
        "depth_histogram": {str(d): c for d, c in sorted(depths.items())},
        "anomalies": anomalies,
    }
    return CheckResult("resolve", not failures, detail, failures)


def check_tilting(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    failures, count = [], 0
    up = enumerate_up(ctx)
    top = ctx.k * ctx.width
    for alpha in up:
        for beta in up:
            for i in range(top + 1):
                count += 1
                if not tilting_vanishing(alpha, beta, i, ctx):
                    failures.append({"alpha": list(alpha), "beta": list(beta), "twist": i})
    return CheckResult("tilting", not failures, {"cases": count, "max_twist": top}, failures)


def check_algebra(ctx: GrContext, cfg: SweepConfig) -> CheckResult:
    """Degree-0 semisimplicity on both sides and CM safety of the S-side weights."""
    failures, weights = [], set()
    up = enumerate_up(ctx)
    for alpha in up:
        for beta in up:
            for side in ("sub", "quot"):
                hom = graded_hom(alpha, beta, ctx, cfg.max_degree, side)
                expected = 1 if alpha == beta else 0
                if hom.dim(0) != expected:
                    failures.append(
                        {"alpha": list(alpha), "beta": list(beta), "side": side, "error": "degree 0 not semisimple"}
                    )
                if side == "sub":
                    weights.update(hom.s_weights)
    unsafe = sorted(g for g in weights if not is_cm_safe(g, ctx))
    failures.extend({"gamma": list(g), "error": "S-side weight not CM-safe"} for g in unsafe)
    return CheckResult("algebra", not failures, {"pairs": len(up) ** 2, "s_weights": len(weights)}, failures)


_RUNNERS = {
    "cm": check_cm,
    "maximality": check_maximality,
    "staircase": check_staircase,
    "width_descent": check_width_descent,
    "resolve": check_resolve,
    "tilting": check_tilting,
    "algebra": check_algebra,
}


def _run_one(item):
    n, k, name, cfg = item
    t0 = time.perf_counter()
    result = _RUNNERS[name](GrContext(n, k), cfg)
    return n, k, result, time.perf_counter() - t0


def run_sweep(cfg: SweepConfig) -> tuple[dict, dict]:
    """Run every configured check; returns (bundle, timing).

    Work items are independent; results are merged in input order so the
    bundle does not depend on ``jobs``.
    """
    items = [(n, k, name, cfg) for n, k in cfg.contexts for name in cfg.checks]
    t0 = time.perf_counter()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            done = list(pool.map(_run_one, items))
    else:
        done = [_run_one(item) for item in items]
    per_context: dict[tuple[int, int], list[CheckResult]] = {}
    timing = {"checks": {}}
    for n, k, result, elapsed in done:
        per_context.setdefault((n, k), []).append(result)
        timing["checks"][f"{n},{k},{result.name}"] = round(elapsed, 4)
    timing["total_s"] = round(time.perf_counter() - t0, 4)
    contexts = []
    for (n, k), results in per_context.items():
        contexts.append(
            {
                "n": n,
                "k": k,
                "passed": all(r.passed for r in results),
                "checks": [r.as_dict() for r in results],
            }
        )
    bundle = {
        "max_degree": cfg.max_degree,
        "width_factor": cfg.width_factor,
        "passed": all(c["passed"] for c in contexts),
        "contexts": contexts,
    }
    return bundle, timing
