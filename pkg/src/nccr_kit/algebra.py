"""Graded Hom-spaces of the NCCR and its quotient-side twin, as quivers.

On the ``sub`` side the vertices are alpha in UP_{n,k} and the arrows from
alpha to beta in degree d are

    (S^alpha S (x) S^beta S* (x) Sym^d(S (x) V*))^{SL(S)}
        = sum_lambda (S^alpha S (x) S^beta S* (x) S^lambda S)^{SL(S)} (x) S^lambda V*.

On the ``quot`` side the vertices are the transposes alpha^t (n - k rows),
with Sym^d(V (x) Q*) in place of Sym^d(S (x) V*), so labels are S^lambda V.
Degree is |lambda|, the polynomial degree in Sym X*.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from .schur import dual_diagram, lr_decompose, partitions, pad, sl_trivial_multiplicity, weyl_dim
from .young import Diagram, GrContext, enumerate_up, fmt, in_up, sl_normalize, transpose

Side = Literal["sub", "quot"]


@dataclass
class GradedHom:
    source: Diagram
    target: Diagram
    side: str
    # degree -> [(lambda, multiplicity, dimension)]
    by_degree: dict[int, list[tuple[Diagram, int, int]]]
    # SL-weights gamma of S^{source*} (x) S^{target} feeding the invariant count
    s_weights: dict[Diagram, int] = field(default_factory=dict)

    def dim(self, d: int) -> int:
        return sum(dim for _, _, dim in self.by_degree.get(d, []))

    def degrees(self) -> list[int]:
        return sorted(d for d, terms in self.by_degree.items() if terms)


def _rank(ctx: GrContext, side: Side) -> int:
    return ctx.k if side == "sub" else ctx.width


def vertex(alpha: Diagram, ctx: GrContext, side: Side) -> Diagram:
    """The vertex label of ``alpha`` on the given side."""
    return tuple(alpha) if side == "sub" else transpose(alpha, ctx.width)


def _invariants(gammas: dict[Diagram, int], lam: Diagram, rank: int, dual_lambda: bool) -> int:
    if dual_lambda:
        # S^lambda of the defining rep written as a weight of its dual
        lam_w = tuple(-x for x in reversed(pad(lam, rank)))
    else:
        lam_w = pad(lam, rank)
    total = 0
    for gamma, c in gammas.items():
        total += c * sl_trivial_multiplicity(lr_decompose(gamma, lam_w, rank))
    return total


def graded_hom(alpha: Diagram, beta: Diagram, ctx: GrContext, max_degree: int, side: Side = "sub") -> GradedHom:
    """Graded pieces of Hom(P_alpha, P_beta) up to ``max_degree``.

    ``alpha`` and ``beta`` are given as elements of UP_{n,k} on either side.
    """
    for name, d in (("alpha", alpha), ("beta", beta)):
        if not in_up(d, ctx):
            raise ValueError(f"{name}={list(d)} is not in UP_{{{ctx.n},{ctx.k}}}")
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    rank = _rank(ctx, side)
    src, tgt = vertex(alpha, ctx, side), vertex(beta, ctx, side)
    gammas = {g: c for g, c in lr_decompose(dual_diagram(src), tgt, rank).items()}
    by_degree: dict[int, list[tuple[Diagram, int, int]]] = {}
    for d in range(max_degree + 1):
        terms = []
        for lam in partitions(d, min(rank, ctx.n)):
            mult = _invariants(gammas, lam, rank, dual_lambda=(side == "sub"))
            if mult:
                lam_v = pad(lam, ctx.n)
                terms.append((lam_v, mult, mult * weyl_dim(lam_v, ctx.n)))
        by_degree[d] = terms
    return GradedHom(src, tgt, side, by_degree, gammas)


@dataclass(frozen=True)
class Arrow:
    source: Diagram
    target: Diagram
    degree: int
    label: Diagram
    multiplicity: int
    dim: int

    def as_dict(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "degree": self.degree,
            "label": list(self.label),
            "multiplicity": self.multiplicity,
            "dim": self.dim,
        }


@dataclass
class Quiver:
    n: int
    k: int
    side: str
    max_degree: int
    vertices: list[Diagram]
    arrows: list[Arrow]

    def arrows_between(self, source: Diagram, target: Diagram) -> list[Arrow]:
        return [a for a in self.arrows if a.source == source and a.target == target]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "side": self.side,
            "label_space": "V*" if self.side == "sub" else "V",
            "max_degree": self.max_degree,
            "vertices": [list(v) for v in self.vertices],
            "arrows": [a.as_dict() for a in self.arrows],
        }


def build_quiver(ctx: GrContext, side: Side, max_degree: int) -> Quiver:
    """All graded Hom pieces between vertices, truncated at ``max_degree``."""
    ctx.require_coprime("build_quiver")
    up = enumerate_up(ctx)
    arrows = []
    for a in up:
        for b in up:
            hom = graded_hom(a, b, ctx, max_degree, side)
            for d in hom.degrees():
                for lam, mult, dim in hom.by_degree[d]:
                    arrows.append(Arrow(hom.source, hom.target, d, lam, mult, dim))
    vertices = sorted(vertex(a, ctx, side) for a in up)
    arrows.sort(key=lambda ar: (ar.source, ar.target, ar.degree, tuple(-x for x in ar.label)))
    return Quiver(ctx.n, ctx.k, side, max_degree, vertices, arrows)


def emit_dot(q: Quiver) -> str:
    """Graphviz digraph; arrows labelled ``deg d: lambda (dim)``."""
    space = "V*" if q.side == "sub" else "V"
    lines = [f'digraph "{q.side}_{q.n}_{q.k}" {{']
    for v in q.vertices:
        lines.append(f'  "{fmt(v)}";')
    for a in q.arrows:
        mult = f"{a.multiplicity}x " if a.multiplicity > 1 else ""
        label = f"deg {a.degree}: {mult}S^{fmt(a.label)}{space} ({a.dim})"
        lines.append(f'  "{fmt(a.source)}" -> "{fmt(a.target)}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def v_weight_as_dual(mu: Diagram) -> Diagram:
    """S^mu V as an SL(V)-weight of V*, via a volume form on V."""
    return sl_normalize(tuple(-x for x in reversed(mu)))


@dataclass
class SideComparison:
    source: Diagram
    target: Diagram
    level: int
    sub_degree: int
    quot_degree: int
    sub_dim: int
    quot_dim: int
    matched: list[Diagram]
    sub_only: list[Diagram]
    quot_only: list[Diagram]

    @property
    def differs(self) -> bool:
        return bool(self.sub_only or self.quot_only)

    def as_dict(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "level": self.level,
            "sub": {"degree": self.sub_degree, "dim": self.sub_dim},
            "quot": {"degree": self.quot_degree, "dim": self.quot_dim},
            "matched": [list(x) for x in self.matched],
            "sub_only": [list(x) for x in self.sub_only],
            "quot_only": [list(x) for x in self.quot_only],
            "differs": self.differs,
        }


def compare_sides(ctx: GrContext, max_degree: int) -> list[SideComparison]:
    """Line up the r-th non-zero graded piece of each Hom on both sides.

    Components are keyed by the pair (alpha, beta) in UP_{n,k}.  The two
    sides use different polynomial gradings (Plucker coordinates sit in
    degree k on one side and n - k on the other), so pieces are paired by
    their rank r among the non-zero degrees.  Labels are compared as
    SL(V)-representations after identifying V with V* via a volume form.
    """
    ctx.require_coprime("compare_sides")
    out = []
    up = enumerate_up(ctx)
    for a in up:
        for b in up:
            sub = graded_hom(a, b, ctx, max_degree, "sub")
            quot = graded_hom(a, b, ctx, max_degree, "quot")
            for r, (ds, dq) in enumerate(zip(sub.degrees(), quot.degrees())):
                s_labels = Counter()
                for lam, mult, _ in sub.by_degree[ds]:
                    s_labels[sl_normalize(lam)] += mult
                q_labels = Counter()
                for lam, mult, _ in quot.by_degree[dq]:
                    q_labels[v_weight_as_dual(lam)] += mult
                common = s_labels & q_labels
                out.append(
                    SideComparison(
                        a, b, r, ds, dq, sub.dim(ds), quot.dim(dq),
                        sorted(common.elements(), reverse=True),
                        sorted((s_labels - common).elements(), reverse=True),
                        sorted((q_labels - common).elements(), reverse=True),
                    )
                )
    return out
