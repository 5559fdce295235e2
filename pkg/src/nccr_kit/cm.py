"""Cohen-Macaulay certification of the endomorphism algebra.

Every graded piece of the algebra is a module of covariants for some S^gamma
with gamma in S^{alpha*} (x) S^beta, alpha and beta in UP_{n,k}.  Such a piece
is Cohen-Macaulay when every fundamental coefficient of gamma is below n - k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .schur import dual_diagram, fundamental_coefficients, lr_decompose
from .young import Diagram, GrContext, diagrams_in_box, enumerate_up, in_up, sl_normalize, up_bounds


def max_gap(gamma: Sequence[int]) -> int:
    coeffs = fundamental_coefficients(gamma)
    return max(coeffs) if coeffs else 0


def is_cm_safe(gamma: Sequence[int], ctx: GrContext) -> bool:
    """True iff every a_i = gamma_i - gamma_{i+1} is strictly below n - k."""
    gamma = tuple(gamma)
    if len(gamma) != ctx.k:
        raise ValueError(f"weight {list(gamma)} must have length k={ctx.k}")
    return max_gap(sl_normalize(gamma)) < ctx.width


@dataclass
class CMReport:
    n: int
    k: int
    pairs_checked: int = 0
    worst_gap: int = 0
    violations: list[tuple[Diagram, Diagram, Diagram]] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "pairs_checked": self.pairs_checked,
            "worst_gap": self.worst_gap,
            "bound": self.n - self.k,
            "certified": self.certified,
            "violations": [[list(a), list(b), list(g)] for a, b, g in self.violations],
        }


def _pair_gaps(alpha: Diagram, beta: Diagram, ctx: GrContext):
    worst, bad = 0, []
    for gamma in lr_decompose(dual_diagram(alpha), beta, ctx.k):
        gap = max_gap(gamma)
        worst = max(worst, gap)
        if gap >= ctx.width:
            bad.append((alpha, beta, gamma))
    return worst, bad


def cm_report(ctx: GrContext) -> CMReport:
    """Gap sweep over UP x UP without the coprimality guard (exploratory)."""
    report = CMReport(ctx.n, ctx.k)
    up = enumerate_up(ctx)
    for alpha in up:
        for beta in up:
            worst, bad = _pair_gaps(alpha, beta, ctx)
            report.pairs_checked += 1
            report.worst_gap = max(report.worst_gap, worst)
            report.violations.extend(bad)
    report.violations.sort()
    return report


def certify_cm(ctx: GrContext) -> CMReport:
    ctx.require_coprime("certify_cm")
    return cm_report(ctx)


class NoWitnessError(ValueError):
    pass


def _check_witness_input(beta: Sequence[int], ctx: GrContext) -> Diagram:
    beta = sl_normalize(tuple(beta))
    if len(beta) != ctx.k or beta[0] > ctx.width:
        raise ValueError(f"beta={list(beta)} must fit the {ctx.k} x {ctx.width} box")
    if in_up(beta, ctx):
        raise NoWitnessError(f"beta={list(beta)} is in UP: no witness exists, the algebra is CM")
    return beta


def witness_constructive(beta: Sequence[int], ctx: GrContext) -> tuple[Diagram, Diagram]:
    """Witness from the explicit recipe.

    With l the last row exceeding its bound, take alpha maximal in the first
    k - l rows and zero below, so alpha* starts with l copies of alpha_1.
    Then gamma = (alpha_1 + beta_1, ..., alpha_1 + beta_l, alpha_1 - alpha_{k-l}, ...)
    occurs and gamma_l - gamma_{l+1} = beta_l + alpha_{k-l} >= n - k.
    """
    ctx.require_coprime("maximality_witness")
    beta = _check_witness_input(beta, ctx)
    k, w = ctx.k, ctx.width
    l = max(i for i, b in enumerate(beta, start=1) if k * b > (k - i) * w)
    bounds = up_bounds(ctx)
    alpha = tuple(bounds[: k - l]) + (0,) * l
    for gamma in sorted(lr_decompose(dual_diagram(alpha), beta, k), reverse=True):
        if gamma[l - 1] - gamma[l] >= w:
            return alpha, gamma
    raise NoWitnessError(f"recipe found no witness for beta={list(beta)}")


def all_witnesses(beta: Sequence[int], ctx: GrContext) -> list[tuple[Diagram, Diagram]]:
    """Every (alpha, gamma) with alpha in UP and gamma not CM-safe."""
    beta = _check_witness_input(beta, ctx)
    out = []
    for alpha in enumerate_up(ctx):
        for gamma in sorted(lr_decompose(dual_diagram(alpha), beta, ctx.k), reverse=True):
            if max_gap(gamma) >= ctx.width:
                out.append((alpha, gamma))
    return out


def witness_brute_force(beta: Sequence[int], ctx: GrContext) -> tuple[Diagram, Diagram]:
    ctx.require_coprime("maximality_witness")
    found = all_witnesses(beta, ctx)
    if not found:
        raise NoWitnessError(f"no alpha in UP witnesses beta={list(beta)}")
    return found[0]


def maximality_witness(beta: Sequence[int], ctx: GrContext) -> tuple[Diagram, Diagram]:
    """(alpha, gamma) showing UP cannot be enlarged by ``beta``.

    The recipe answer is cross-checked against the exhaustive search; a
    disagreement raises rather than silently falling back.
    """
    alpha, gamma = witness_constructive(beta, ctx)
    if (alpha, gamma) not in all_witnesses(beta, ctx):
        raise AssertionError(f"recipe witness {alpha}, {gamma} rejected by brute force")
    return alpha, gamma


def betas_outside_up(ctx: GrContext) -> list[Diagram]:
    """SL-normalized diagrams in the box that are not in UP."""
    return [b for b in diagrams_in_box(ctx.k, ctx.width) if b[-1] == 0 and not in_up(b, ctx)]
