"""Acceptance criteria, each checked exactly and against a wall-clock limit.

Every criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
"""

from __future__ import annotations

import time
from math import comb, gcd

import pytest

from nccr_kit.algebra import build_quiver, compare_sides, graded_hom
from nccr_kit.bwb import classical_line_bundle, line_bundle_cohomology, tilting_vanishing
from nccr_kit.cm import all_witnesses, betas_outside_up, certify_cm, is_cm_safe, maximality_witness
from nccr_kit.schur import (
    _lr_partitions,
    cauchy_decompose,
    lr_decompose,
    pad,
    partitions,
    satisfies_lr_bounds,
    weyl_dim,
)
from nccr_kit.staircase import (
    resolve,
    staircase_bwb_terms,
    staircase_geometric,
    verify_dupp_descent,
    verify_width_descent,
)
from nccr_kit.young import GrContext, diagrams_in_box, enumerate_up, from_binary, in_up, rotate, to_binary

RESULTS: list[str] = []


def coprime_pairs(max_n: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(5, max_n + 1) for k in range(2, n - 1) if gcd(n, k) == 1]


def run_criterion(number: int, title: str, limit: float, check) -> None:
    # time every criterion from a cold LR cache
    _lr_partitions.cache_clear()
    t0 = time.perf_counter()
    error = None
    try:
        check()
    except AssertionError as exc:
        error = str(exc) or "assertion failed"
    elapsed = time.perf_counter() - t0
    if error is None and elapsed >= limit:
        error = f"took {elapsed:.2f} s, limit {limit:g} s"
    status = "PASS" if error is None else "FAIL"
    line = f"criterion {number:2d} {status}  {title}  ({elapsed:.2f} s / {limit:g} s)"
    if error:
        line += f"  -- {error}"
    RESULTS.append(line)
    print(line)
    if error:
        pytest.fail(line)


def gr25_quiver():
    ctx = GrContext(5, 2)
    q = build_quiver(ctx, "sub", 1)
    assert len(q.vertices) == 2, q.vertices
    hom = graded_hom((0, 0), (1, 0), ctx, 1)
    assert hom.dim(1) == 5, hom.by_degree
    first = [c for c in compare_sides(ctx, 3) if (c.source, c.target, c.level) == ((0, 0), (1, 0), 0)][0]
    assert (first.sub_dim, first.quot_dim) == (5, 10), first


def orbit_count():
    for n, k in coprime_pairs(14):
        ctx = GrContext(n, k)
        up = enumerate_up(ctx)
        assert len(up) * n == comb(n, k), (n, k)
        seen = set()
        for alpha in diagrams_in_box(k, n - k):
            bits = to_binary(alpha, ctx)
            if bits in seen:
                continue
            orbit = {rotate(bits, i) for i in range(n)}
            seen |= orbit
            members = [w for w in orbit if in_up(from_binary(w), ctx)]
            assert len(members) == 1, (n, k, bits, members)
        assert len(seen) == comb(n, k)


def lr_row_bounds():
    for k in range(1, 5):
        shapes = [pad(p, k) for d in range(9) for p in partitions(d, k)]
        for a in shapes:
            for b in shapes:
                for gamma in lr_decompose(a, b, k):
                    assert satisfies_lr_bounds(a, b, gamma, k), (a, b, gamma)


def cm_certification():
    for n, k in coprime_pairs(10):
        rep = certify_cm(GrContext(n, k))
        assert rep.certified and rep.worst_gap < n - k, rep.as_dict()


def maximality():
    for n, k in coprime_pairs(8):
        ctx = GrContext(n, k)
        for beta in betas_outside_up(ctx):
            alpha, gamma = maximality_witness(beta, ctx)
            assert (alpha, gamma) in all_witnesses(beta, ctx)


def descent():
    for n, k in coprime_pairs(10):
        ctx = GrContext(n, k)
        for alpha in betas_outside_up(ctx):
            assert verify_dupp_descent(alpha, ctx), (n, k, alpha)
        for alpha in diagrams_in_box(k, 2 * (n - k)):
            if alpha[-1] == 0 and alpha[0] > n - k:
                assert verify_width_descent(alpha, ctx), (n, k, alpha)


def resolution():
    for n, k in [(5, 2), (7, 3), (8, 3)]:
        ctx = GrContext(n, k)
        for alpha in diagrams_in_box(k, 2 * (n - k)):
            if alpha[-1]:
                continue
            trace = resolve(alpha, ctx)
            assert all(in_up(leaf, ctx) for leaf in trace.leaves), (n, k, alpha)
            assert trace.projective_dimension <= k * (n - k) + 3, (n, k, alpha, trace.projective_dimension)


def tilting():
    for n, k in [(5, 2), (7, 3), (8, 3)]:
        ctx = GrContext(n, k)
        up = enumerate_up(ctx)
        for a in up:
            for b in up:
                for i in range(k * (n - k) + 1):
                    assert tilting_vanishing(a, b, i, ctx), (n, k, a, b, i)


def line_bundles():
    for m in range(1, 7):
        for d in range(-2 * m - 2, 2 * m + 3):
            here = line_bundle_cohomology(d, m)
            assert here == classical_line_bundle(d, m), (m, d)
            there = line_bundle_cohomology(-d - m - 1, m)
            if here is None:
                assert there is None
            else:
                assert there == (m - here[0], here[1]), (m, d)


def cauchy():
    for k in range(1, 6):
        for n in range(1, 6):
            for d in range(9):
                total = sum(weyl_dim(l, k) * weyl_dim(l, n) for l in cauchy_decompose(d, k, n))
                assert total == comb(k * n + d - 1, d), (k, n, d)


def pipeline_agreement():
    for n, k in coprime_pairs(10):
        ctx = GrContext(n, k)
        up = enumerate_up(ctx)
        weights = set()
        for a in up:
            for b in up:
                weights.update(graded_hom(a, b, ctx, 0).s_weights)
        assert all(is_cm_safe(g, ctx) for g in weights), (n, k)
        for alpha in betas_outside_up(ctx):
            geometric = staircase_geometric(alpha, ctx).term_diagrams()
            assert geometric == staircase_bwb_terms(alpha, ctx), (n, k, alpha)


CRITERIA = [
    (1, "Gr(2,5) quiver: 2 vertices, rank 5 arrow, rank 10 counterpart", 1, gr25_quiver),
    (2, "one UP diagram per rotation orbit, n <= 14", 10, orbit_count),
    (3, "LR row bounds, <= 8 boxes, k <= 4", 60, lr_row_bounds),
    (4, "CM certification, coprime n <= 10", 60, cm_certification),
    (5, "maximality witnesses, recipe = brute force, n <= 8", 60, maximality),
    (6, "d_upp and width descent, n <= 10", 60, descent),
    (7, "resolutions end in UP, depth <= k(n-k)+3", 120, resolution),
    (8, "tilting vanishing, 0 <= i <= k(n-k)", 60, tilting),
    (9, "line bundles on P^m and Serre duality", 1, line_bundles),
    (10, "Cauchy dimension identity", 5, cauchy),
    (11, "algebra weights re-certify CM; staircase routes agree", 60, pipeline_agreement),
]


@pytest.mark.parametrize("number,title,limit,check", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, limit, check):
    run_criterion(number, title, limit, check)


if __name__ == "__main__":
    failed = 0
    for number, title, limit, check in CRITERIA:
        try:
            run_criterion(number, title, limit, check)
        except pytest.fail.Exception:
            failed += 1
    raise SystemExit(1 if failed else 0)
