"""Borel-Weil-Bott on Gr(k, V) for bundles S^beta S* (x) S^gamma Q*."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .schur import dual_diagram, lr_decompose, weyl_dim
from .young import Diagram, GrContext, in_up


@dataclass(frozen=True)
class Cohomology:
    """Non-vanishing outcome: H^degree = S^dominant V*, all other degrees zero."""

    dominant: tuple[int, ...]
    degree: int

    @property
    def dim(self) -> int:
        return weyl_dim(self.dominant, len(self.dominant))


def rho(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


def inversions(seq: Sequence[int]) -> int:
    """Pairs i < j with seq[i] < seq[j]: the length of the sorting permutation."""
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


def dot_action(weight: Sequence[int]) -> Cohomology | None:
    """Sort weight + rho; ``None`` when it has a repeated entry (singular)."""
    m = len(weight)
    shifted = [w + r for w, r in zip(weight, rho(m))]
    if len(set(shifted)) < m:
        return None
    ordered = sorted(shifted, reverse=True)
    dominant = tuple(s - r for s, r in zip(ordered, rho(m)))
    return Cohomology(dominant, inversions(shifted))


def bwb(beta: Sequence[int], gamma: Sequence[int], ctx: GrContext, twist: int = 0) -> Cohomology | None:
    """H^*(Gr(k, n), S^beta S* (x) S^gamma Q* (x) O(twist)).

    ``beta`` has length k and ``gamma`` length n - k; O(1) = det S* is folded
    into beta.  Returns ``None`` when all cohomology vanishes.
    """
    beta, gamma = tuple(beta), tuple(gamma)
    if len(beta) != ctx.k or len(gamma) != ctx.width:
        raise ValueError(f"need len(beta)={ctx.k} and len(gamma)={ctx.width}")
    for name, w in (("beta", beta), ("gamma", gamma)):
        if any(a < b for a, b in zip(w, w[1:])):
            raise ValueError(f"{name}={list(w)} is not non-increasing")
    beta = tuple(b + twist for b in beta)
    return dot_action(beta + gamma)


def line_bundle_cohomology(d: int, m: int) -> tuple[int, int] | None:
    """(degree, dimension) of the cohomology of O(d) on P^m, or ``None``."""
    # P^m = Gr(1, m+1) and O(1) = S*; GrContext requires 1 < k, so call the sort directly
    out = dot_action((d,) + (0,) * m)
    if out is None:
        return None
    return out.degree, out.dim


def classical_line_bundle(d: int, m: int) -> tuple[int, int] | None:
    """Textbook answer for H^*(P^m, O(d))."""
    if d >= 0:
        return 0, comb(m + d, m)
    if d <= -m - 1:
        return m, comb(-d - 1, m)
    return None


def tilting_terms(alpha: Diagram, beta: Diagram, i: int, ctx: GrContext):
    """BWB outcome for each S^gamma S* in S^alpha S (x) S^beta S* (x) O(i).

    S^alpha S is S^{alpha*} S* (x) O(-alpha_1), so the product is decomposed
    as S^{alpha*} (x) S^beta twisted by i - alpha_1.
    """
    shift = i - alpha[0]
    zeros = (0,) * ctx.width
    out = []
    for gamma, mult in lr_decompose(dual_diagram(alpha), beta, ctx.k).items():
        twisted = tuple(g + shift for g in gamma)
        out.append((twisted, mult, bwb(twisted, zeros, ctx)))
    return out


def tilting_vanishing(alpha: Diagram, beta: Diagram, i: int, ctx: GrContext) -> bool:
    """True iff S^alpha S (x) S^beta S* (x) O(i) has no higher cohomology."""
    for name, d in (("alpha", alpha), ("beta", beta)):
        if not in_up(d, ctx):
            raise ValueError(f"{name}={list(d)} is not in UP_{{{ctx.n},{ctx.k}}}")
    if i < 0:
        raise ValueError("twist i must be non-negative")
    return all(out is None or out.degree == 0 for _, _, out in tilting_terms(alpha, beta, i, ctx))
