"""Staircase complexes and the iterated resolution of P_alpha.

Only the diagrams of the terms are tracked, never their multiplicities.
All diagrams are SL-normalized (complete columns stripped) after each step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bwb import dot_action
from .young import BoxError, Diagram, GrContext, d_upp, in_up, sl_normalize


class AlreadyProjective(ValueError):
    """The diagram is in UP_{n,k}; P_alpha needs no resolution."""


class ResolutionError(RuntimeError):
    pass


# extra depth tolerated above k(n-k) + 1 before a trace is flagged
DEPTH_SLACK = 2


@dataclass(frozen=True)
class StaircaseComplex:
    source: Diagram
    terms: tuple[tuple[Diagram, ...], ...]
    raw_terms: tuple[Diagram, ...]
    # column of the strip that each added box belongs to, keyed by (row, col), 1-based
    strip: dict = field(compare=False, hash=False, default_factory=dict)

    def term_diagrams(self) -> list[Diagram]:
        return [d for term in self.terms for d in term]

    def as_dict(self) -> dict:
        return {
            "source": list(self.source),
            "terms": [[list(d) for d in term] for term in self.terms],
            "raw_terms": [list(d) for d in self.raw_terms],
        }


def _normalized_input(alpha: Sequence[int], ctx: GrContext) -> Diagram:
    alpha = tuple(alpha)
    if len(alpha) != ctx.k or alpha[-1] < 0 or any(a < b for a, b in zip(alpha, alpha[1:])):
        raise ValueError(f"alpha={list(alpha)} is not a diagram with {ctx.k} rows")
    return sl_normalize(alpha)


def strip_boxes(alpha: Diagram, ctx: GrContext) -> dict[tuple[int, int], int]:
    """The n-box strip along the edge of ``alpha`` (alpha_k = 0), by column.

    Rows 2..k receive columns alpha_r + 1 .. alpha_{r-1} + 1; the first row
    is extended until n boxes have been added.
    """
    k = ctx.k
    cells = {}
    for r in range(k, 1, -1):
        for c in range(alpha[r - 1] + 1, alpha[r - 2] + 2):
            cells[(r, c)] = c
    used = len(cells)
    for c in range(alpha[0] + 1, alpha[0] + 1 + ctx.n - used):
        cells[(1, c)] = c
    return cells


def staircase_geometric(alpha: Sequence[int], ctx: GrContext) -> StaircaseComplex:
    """Terms of the staircase complex from the strip picture.

    The i-th term is alpha together with the strip boxes in columns 1..i.
    """
    alpha = _normalized_input(alpha, ctx)
    if alpha[0] > ctx.width:
        raise BoxError(
            f"alpha={list(alpha)} is wider than {ctx.width}; use staircase_bwb (width descent)"
        )
    if in_up(alpha, ctx):
        raise AlreadyProjective(f"alpha={list(alpha)} is in UP: already projective")
    cells = strip_boxes(alpha, ctx)
    ncols = max(cells.values())
    raw, terms = [], []
    for i in range(1, ncols + 1):
        rows = list(alpha)
        for (r, _), c in cells.items():
            if c <= i:
                rows[r - 1] += 1
        raw.append(tuple(rows))
        terms.append((sl_normalize(rows),))
    return StaircaseComplex(alpha, tuple(terms), tuple(raw), cells)


def staircase_bwb(alpha: Sequence[int], ctx: GrContext) -> list[Diagram | None]:
    """For i = 1..n, the SL-normalized BWB output of alpha + (0, ..., 0, i)."""
    alpha = tuple(alpha)
    out = []
    for i in range(1, ctx.n + 1):
        res = dot_action(alpha[:-1] + (alpha[-1] + i,))
        out.append(None if res is None else sl_normalize(res.dominant))
    return out


def staircase_bwb_terms(alpha: Sequence[int], ctx: GrContext) -> list[Diagram]:
    return [d for d in staircase_bwb(alpha, ctx) if d is not None]


def verify_dupp_descent(alpha: Sequence[int], ctx: GrContext) -> bool:
    """Every staircase term beta has d_upp(beta) < d_upp(alpha)."""
    cx = staircase_geometric(alpha, ctx)
    top = d_upp(cx.source, ctx)
    return all(d_upp(beta, ctx) < top for beta in cx.term_diagrams())


def verify_width_descent(alpha: Sequence[int], ctx: GrContext) -> bool:
    """Every BWB staircase term beta has beta_1 < alpha_1 (needs alpha_1 > n - k)."""
    alpha = _normalized_input(alpha, ctx)
    if alpha[0] <= ctx.width:
        raise ValueError(f"width descent needs alpha_1 > {ctx.width}, got {list(alpha)}")
    return all(beta[0] < alpha[0] for beta in staircase_bwb_terms(alpha, ctx))


@dataclass
class ResolutionTrace:
    root: Diagram
    n: int
    k: int
    children: dict[Diagram, tuple[Diagram, ...]]
    depth: dict[Diagram, int]

    @property
    def projective_dimension(self) -> int:
        return self.depth[self.root]

    @property
    def leaves(self) -> set[Diagram]:
        return {d for d, kids in self.children.items() if not kids}

    @property
    def bound(self) -> int:
        """k(n-k) + 1, the expected global dimension, used for reporting."""
        return self.k * (self.n - self.k) + 1

    @property
    def anomalous(self) -> bool:
        return self.projective_dimension > self.bound + DEPTH_SLACK

    def as_dict(self) -> dict:
        nodes = sorted(self.children)
        return {
            "root": list(self.root),
            "projective_dimension": self.projective_dimension,
            "bound": self.bound,
            "within_bound": self.projective_dimension <= self.bound,
            "anomalous": self.anomalous,
            "leaves": [list(d) for d in sorted(self.leaves)],
            "nodes": [
                {
                    "diagram": list(d),
                    "depth": self.depth[d],
                    "children": [list(c) for c in self.children[d]],
                }
                for d in nodes
            ],
        }


def resolution_children(alpha: Diagram, ctx: GrContext) -> tuple[Diagram, ...]:
    if in_up(alpha, ctx):
        return ()
    if alpha[0] > ctx.width:
        kids = staircase_bwb_terms(alpha, ctx)
    else:
        kids = staircase_geometric(alpha, ctx).term_diagrams()
    return tuple(sorted(set(kids)))


def resolve(alpha: Sequence[int], ctx: GrContext, depth_limit: int | None = None) -> ResolutionTrace:
    """Iterate staircase resolutions until every leaf lies in UP_{n,k}.

    Width descent applies while alpha_1 > n - k, then d_upp descent.  Each
    diagram is expanded once; the reported depth is the longest chain.
    """
    ctx.require_coprime("resolve")
    root = _normalized_input(alpha, ctx)
    if depth_limit is None:
        depth_limit = 4 * ctx.n * ctx.k
    children: dict[Diagram, tuple[Diagram, ...]] = {}
    depth: dict[Diagram, int] = {}
    on_path: set[Diagram] = set()

    def visit(node: Diagram, level: int) -> int:
        if node in depth:
            return depth[node]
        if level > depth_limit:
            raise ResolutionError(f"depth limit {depth_limit} exceeded resolving {list(root)}")
        if node in on_path:
            raise ResolutionError(f"resolution of {list(root)} cycles through {list(node)}")
        on_path.add(node)
        kids = resolution_children(node, ctx)
        children[node] = kids
        depth[node] = 0 if not kids else 1 + max(visit(c, level + 1) for c in kids)
        on_path.discard(node)
        return depth[node]

    visit(root, 0)
    return ResolutionTrace(root, ctx.n, ctx.k, children, depth)
