"""Littlewood-Richardson products and related bookkeeping for GL_m weights.

Weights are tuples of integers, non-increasing.  Extended weights (negative
entries allowed) are handled by twisting with a power of the determinant.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

Weight = tuple[int, ...]


def _check_weight(w: Sequence[int], name: str) -> Weight:
    w = tuple(int(x) for x in w)
    if any(a < b for a, b in zip(w, w[1:])):
        raise ValueError(f"{name}={list(w)} is not non-increasing")
    return w


def pad(w: Sequence[int], m: int) -> Weight:
    """Pad a weight to length ``m``; extra entries must be zero."""
    w = tuple(w)
    if len(w) > m:
        if any(w[m:]):
            raise ValueError(f"rank mismatch: {list(w)} has more than {m} non-zero rows")
        return w[:m]
    if len(w) < m and w and w[-1] < 0:
        raise ValueError(f"rank mismatch: cannot zero-pad extended weight {list(w)} to {m}")
    return w + (0,) * (m - len(w))


def fundamental_coefficients(w: Sequence[int]) -> tuple[int, ...]:
    """a_i = w_i - w_{i+1}, the coordinates in the fundamental-weight basis."""
    return tuple(a - b for a, b in zip(w, w[1:]))


def _horizontal_strips(shape: Weight, count: int, prev: tuple[int, ...], label: int):
    """Ways of adding ``count`` boxes labelled ``label`` as a horizontal strip.

    ``prev`` holds the per-row counts of label - 1.  Rows are filled top down
    while the reverse reading word stays a lattice word.  Yields
    (new_shape, counts_of_this_label).
    """
    m = len(shape)
    added = [0] * m

    def place(r: int, left: int, placed_so_far: int, prev_above: int):
        if left == 0:
            yield tuple(s + a for s, a in zip(shape, added)), tuple(added)
            return
        if r == m:
            return
        # label j lands only in rows >= j (0-based: r >= label - 1)
        cap = left
        if r > 0:
            cap = min(cap, shape[r - 1] - shape[r])
        elif label > 1:
            cap = 0
        if label > 1:
            cap = min(cap, prev_above - placed_so_far)
        nxt_prev = prev_above + (prev[r] if label > 1 else 0)
        for c in range(max(cap, 0), -1, -1):
            added[r] = c
            yield from place(r + 1, left - c, placed_so_far + c, nxt_prev)
        added[r] = 0

    yield from place(0, count, 0, 0)


@lru_cache(maxsize=None)
def _lr_partitions(alpha: Weight, beta: Weight, m: int) -> tuple[tuple[Weight, int], ...]:
    """LR product of two partitions (length ``m``), rows beyond ``m`` dropped."""
    states: Counter = Counter({(alpha, (0,) * m): 1})
    for j, b in enumerate(beta, start=1):
        if b == 0:
            break
        nxt: Counter = Counter()
        for (shape, prev), mult in states.items():
            for new_shape, counts in _horizontal_strips(shape, b, prev, j):
                nxt[(new_shape, counts)] += mult
        states = nxt
    out: Counter = Counter()
    for (shape, _), mult in states.items():
        out[shape] += mult
    return tuple(sorted(out.items(), reverse=True))


def lr_decompose(alpha: Sequence[int], beta: Sequence[int], m: int) -> dict[Weight, int]:
    """Multiplicities of S^gamma in S^alpha (x) S^beta as GL_m representations.

    Negative entries are allowed; both factors are untwisted by their last
    entry, multiplied, and the total twist reapplied.
    """
    alpha = pad(_check_weight(alpha, "alpha"), m)
    beta = pad(_check_weight(beta, "beta"), m)
    if m == 0:
        return {(): 1}
    ta, tb = alpha[-1], beta[-1]
    a0 = tuple(x - ta for x in alpha)
    b0 = tuple(x - tb for x in beta)
    shift = ta + tb
    return {
        tuple(g + shift for g in gamma): mult
        for gamma, mult in _lr_partitions(a0, b0, m)
    }


def lr_coefficient(alpha, beta, gamma, m: int) -> int:
    return lr_decompose(alpha, beta, m).get(pad(gamma, m), 0)


def lr_bounds(alpha: Sequence[int], beta: Sequence[int], k: int) -> tuple[Weight, Weight]:
    """Row bounds alpha_i + beta_k <= gamma_i <= alpha_1 + beta_i."""
    alpha, beta = pad(alpha, k), pad(beta, k)
    lower = tuple(a + beta[-1] for a in alpha)
    upper = tuple(alpha[0] + b for b in beta)
    return lower, upper


def satisfies_lr_bounds(alpha, beta, gamma, k: int) -> bool:
    lower, upper = lr_bounds(alpha, beta, k)
    gamma = pad(gamma, k)
    return all(lo <= g <= hi for lo, g, hi in zip(lower, gamma, upper))


def dual_diagram(alpha: Sequence[int]) -> Weight:
    """alpha* = (alpha_1 - alpha_k, ..., alpha_1 - alpha_1).

    S^alpha W is S^{alpha*} W^* twisted by (det W)^{alpha_1}.
    """
    alpha = tuple(alpha)
    if not alpha:
        return alpha
    top = alpha[0]
    return tuple(top - a for a in reversed(alpha))


def max_dual_test(alpha: Sequence[int], beta: Sequence[int], l: int) -> bool:
    """Whether S^alpha (x) S^beta contains some S^gamma with gamma_1 = alpha_1.

    Decided by the row-wise comparison beta <= alpha*, with no LR expansion.
    """
    alpha, beta = pad(alpha, l), pad(beta, l)
    return all(b <= d for b, d in zip(beta, dual_diagram(alpha)))


def weyl_dim(weight: Sequence[int], m: int) -> int:
    """dim S^weight C^m by the Weyl dimension formula (exact)."""
    lam = pad(_check_weight(weight, "weight"), m)
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral Weyl dimension for {lam}")  # pragma: no cover
    return q


def partitions(d: int, max_len: int, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``d`` with at most ``max_len`` parts, largest first."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, max_len - 1, first):
            yield (first,) + rest


def cauchy_decompose(d: int, k: int, n: int) -> list[Weight]:
    """Shapes lambda with Sym^d(S (x) V*) = sum S^lambda S (x) S^lambda V*."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return list(partitions(d, min(k, n)))


def sym_dimension(d: int, dim: int) -> int:
    """dim Sym^d C^dim."""
    return comb(dim + d - 1, d)


def sl_trivial_multiplicity(decomp: dict[Weight, int]) -> int:
    """Total multiplicity of rectangular weights (m, ..., m)."""
    return sum(mult for w, mult in decomp.items() if len(set(w)) <= 1)


def tensor_all(weights: Sequence[Sequence[int]], m: int) -> dict[Weight, int]:
    """Iterated LR product of several GL_m weights."""
    acc: Counter = Counter({(0,) * m: 1})
    for w in weights:
        nxt: Counter = Counter()
        for g, mult in acc.items():
            for h, c in lr_decompose(g, w, m).items():
                nxt[h] += mult * c
        acc = nxt
    return dict(acc)
