"""Young diagrams in the k x (n-k) box and their binary-path encoding.

Diagrams are plain tuples of non-negative integers with exactly ``k`` entries
(trailing zeros kept).  Binary sequences are strings over ``'01'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

Diagram = tuple[int, ...]


class NonCoprimeError(ValueError):
    """Raised by operations that are only well defined for gcd(n, k) = 1."""


class BoxError(ValueError):
    """Raised when a diagram does not fit the k x (n-k) box."""


@dataclass(frozen=True)
class GrContext:
    """The pair (n, k) = (dim V, dim S) for Gr(k, V)."""

    n: int
    k: int
    allow_noncoprime: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not (1 < self.k < self.n - 1):
            raise ValueError(f"need 1 < k < n-1, got n={self.n}, k={self.k}")
        if not self.allow_noncoprime and not self.coprime:
            raise NonCoprimeError(
                f"gcd({self.n}, {self.k}) != 1; pass allow_noncoprime=True to explore"
            )

    @property
    def coprime(self) -> bool:
        return gcd(self.n, self.k) == 1

    @property
    def width(self) -> int:
        """n - k, the width of the box (and dim Q)."""
        return self.n - self.k

    @property
    def h(self) -> int:
        """Krull dimension of the invariant ring, nk - k^2 + 1."""
        return self.n * self.k - self.k * self.k + 1

    def require_coprime(self, what: str = "this operation") -> None:
        if not self.coprime:
            raise NonCoprimeError(
                f"{what} needs gcd(n, k) = 1: orbit may lack unique "
                f"upper-triangular element (n={self.n}, k={self.k})"
            )

    def dual(self) -> "GrContext":
        """The context (n, n-k) describing the quotient side."""
        return GrContext(self.n, self.width, allow_noncoprime=self.allow_noncoprime)


def as_diagram(rows: Sequence[int], length: int | None = None) -> Diagram:
    """Validate ``rows`` as a Young diagram, padding with zeros to ``length``."""
    rows = tuple(int(r) for r in rows)
    if length is not None:
        if len(rows) > length:
            if any(rows[length:]):
                raise ValueError(f"diagram {list(rows)} has more than {length} rows")
            rows = rows[:length]
        rows = rows + (0,) * (length - len(rows))
    if any(r < 0 for r in rows):
        raise ValueError(f"diagram {list(rows)} has a negative row")
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"diagram {list(rows)} is not non-increasing")
    return rows


def sl_normalize(rows: Sequence[int]) -> tuple[int, ...]:
    """Shift a weight so its last entry is zero (strips complete columns)."""
    rows = tuple(rows)
    if not rows:
        return rows
    last = rows[-1]
    return tuple(r - last for r in rows)


def fits_box(alpha: Sequence[int], ctx: GrContext) -> bool:
    return len(alpha) == ctx.k and alpha[-1] >= 0 and alpha[0] <= ctx.width


def in_up(alpha: Sequence[int], ctx: GrContext) -> bool:
    """Membership in UP_{n,k}: k * alpha_i <= (k - i)(n - k) for all i."""
    k, w = ctx.k, ctx.width
    if len(alpha) != k:
        return False
    return all(k * a <= (k - i) * w for i, a in enumerate(alpha, start=1))


def up_bounds(ctx: GrContext) -> Diagram:
    """Largest allowed row lengths floor((k - i)(n - k) / k) for UP_{n,k}."""
    return tuple((ctx.k - i) * ctx.width // ctx.k for i in range(1, ctx.k + 1))


def diagrams_in_box(rows: int, width: int) -> Iterator[Diagram]:
    """All diagrams with ``rows`` entries and first row at most ``width``."""
    # combinations_with_replacement yields non-decreasing tuples in lex order
    for combo in itertools.combinations_with_replacement(range(width + 1), rows):
        yield tuple(reversed(combo))


def diagrams_under(bounds: Sequence[int]) -> Iterator[Diagram]:
    """All diagrams alpha with alpha_i <= bounds[i]."""

    def extend(prefix: list[int], i: int) -> Iterator[Diagram]:
        if i == len(bounds):
            yield tuple(prefix)
            return
        cap = bounds[i] if i == 0 else min(bounds[i], prefix[-1])
        for a in range(cap + 1):
            prefix.append(a)
            yield from extend(prefix, i + 1)
            prefix.pop()

    yield from extend([], 0)


def enumerate_up(ctx: GrContext) -> list[Diagram]:
    """UP_{n,k}, sorted lexicographically."""
    return sorted(diagrams_under(up_bounds(ctx)))


def to_binary(alpha: Sequence[int], ctx: GrContext) -> str:
    """Encode the boundary path of ``alpha``, bottom-left to top-right.

    A vertical step is ``'1'`` and a horizontal step is ``'0'``.
    """
    alpha = as_diagram(alpha, ctx.k)
    if alpha[0] > ctx.width:
        raise BoxError(f"diagram exceeds box: {list(alpha)} wider than {ctx.width}")
    out = []
    x = 0
    for a in reversed(alpha):
        out.append("0" * (a - x) + "1")
        x = a
    out.append("0" * (ctx.width - x))
    return "".join(out)


def from_binary(bits: str) -> Diagram:
    """Decode a path into a diagram with one row per ``'1'``."""
    if set(bits) - {"0", "1"}:
        raise ValueError(f"not a binary sequence: {bits!r}")
    rows = []
    x = 0
    for b in bits:
        if b == "0":
            x += 1
        else:
            rows.append(x)
    return tuple(reversed(rows))


def rotate(bits: str, i: int) -> str:
    """Rotate by ``i`` steps along the path (left cyclic shift)."""
    if not bits:
        return bits
    i %= len(bits)
    return bits[i:] + bits[:i]


def d_upp(alpha: Sequence[int], ctx: GrContext) -> int:
    """Number of rotations taking ``alpha`` into UP_{n,k}."""
    ctx.require_coprime("d_upp")
    bits = to_binary(alpha, ctx)
    for i in range(ctx.n):
        if in_up(from_binary(rotate(bits, i)), ctx):
            return i
    raise AssertionError(f"no upper-triangular rotation of {bits}")  # pragma: no cover


def path_heights(bits: str, k: int) -> list[int]:
    """Value of k*x - (n-k)*y at each of the n path vertices before a step.

    Lines of slope (n-k)/k through the vertices are level sets of this
    function; larger values are lower lines.
    """
    w = len(bits) - k
    f, out = 0, []
    for b in bits:
        out.append(f)
        f += k if b == "0" else -w
    return out


def d_upp_geometric(alpha: Sequence[int], ctx: GrContext) -> int:
    """Steps along the path to the vertex on the lowest diagonal line."""
    ctx.require_coprime("d_upp_geometric")
    heights = path_heights(to_binary(alpha, ctx), ctx.k)
    top = max(heights)
    return heights.index(top)


def transpose(alpha: Sequence[int], length: int | None = None) -> Diagram:
    """Column lengths of ``alpha``; pads to ``length`` (default alpha_1)."""
    alpha = tuple(a for a in alpha if a > 0)
    cols = tuple(sum(1 for a in alpha if a > j) for j in range(alpha[0] if alpha else 0))
    if length is None:
        return cols
    return as_diagram(cols, length)


def boxes(alpha: Sequence[int]) -> int:
    return sum(alpha)


def fmt(alpha: Sequence[int]) -> str:
    """Canonical string form ``[3,1,0]``."""
    return "[" + ",".join(str(a) for a in alpha) + "]"
