from math import comb

import pytest

from nccr_kit.schur import (
    cauchy_decompose,
    dual_diagram,
    lr_bounds,
    lr_coefficient,
    lr_decompose,
    max_dual_test,
    pad,
    partitions,
    satisfies_lr_bounds,
    sl_trivial_multiplicity,
    sym_dimension,
    tensor_all,
    weyl_dim,
)

from oracles import lr_by_characters, ssyt_dimension


def test_lr_small_cases():
    assert lr_decompose((1,), (1,), 2) == {(2, 0): 1, (1, 1): 1}
    assert lr_decompose((2, 1), (2, 1), 3) == {(4, 2, 0): 1, (4, 1, 1): 1, (3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1}
    # rows beyond m are dropped
    assert lr_decompose((1,), (1,), 1) == {(2,): 1}


def test_lr_maximality_witness_term():
    assert (3, 0) in lr_decompose((1, 0), (2, 0), 2)


def test_lr_extended_weights():
    assert lr_decompose((1, -1), (1, 0), 2) == {(2, -1): 1, (1, 0): 1}
    assert lr_decompose((0, -1), (1, 0), 2) == {(1, -1): 1, (0, 0): 1}


def test_pad_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        pad((1, 1, 1), 2)
    with pytest.raises(ValueError, match="rank mismatch"):
        pad((1, -1), 3)
    assert pad((1, -1), 2) == (1, -1)


def test_lr_rejects_non_dominant():
    with pytest.raises(ValueError):
        lr_decompose((0, 1), (1,), 2)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_lr_matches_character_oracle(m):
    shapes = [p for d in range(4) for p in partitions(d, m)]
    for a in shapes:
        for b in shapes:
            assert lr_decompose(a, b, m) == lr_by_characters(pad(a, m), pad(b, m), m)


def test_lr_coefficient_lookup():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1), 3) == 2
    assert lr_coefficient((2, 1), (2, 1), (5, 1), 3) == 0


def test_lr_bounds_example():
    lower, upper = lr_bounds((1, 0), (2, 0), 2)
    assert lower == (1, 0)
    assert upper == (3, 1)
    # with beta = 0 only the lower bound is tight; the product itself is alpha
    assert lr_bounds((3, 1), (0, 0), 2) == ((3, 1), (3, 3))
    assert lr_decompose((3, 1), (0, 0), 2) == {(3, 1): 1}
    for gamma in lr_decompose((1, 0), (2, 0), 2):
        assert satisfies_lr_bounds((1, 0), (2, 0), gamma, 2)


def test_dual_diagram():
    assert dual_diagram((1, 0)) == (1, 0)
    assert dual_diagram((3, 1, 0)) == (3, 2, 0)
    assert dual_diagram((4, 4, 4)) == (0, 0, 0)


def test_max_dual_test_examples():
    alpha = (3, 1, 0)
    assert max_dual_test(alpha, (0, 0, 0), 3)
    assert max_dual_test(alpha, dual_diagram(alpha), 3)
    assert not max_dual_test(alpha, (4, 0, 0), 3)
    assert not max_dual_test(alpha, (3, 3, 0), 3)


def test_max_dual_test_agrees_with_lr():
    for l in range(1, 5):
        for na in range(9):
            for a in partitions(na, l):
                for nb in range(9 - na):
                    for b in partitions(nb, l):
                        a2, b2 = pad(a, l), pad(b, l)
                        direct = any(g[0] == a2[0] for g in lr_decompose(a2, b2, l))
                        assert max_dual_test(a2, b2, l) == direct, (a2, b2)


def test_weyl_dim_values():
    assert weyl_dim((1, 0, 0, 0, 0), 5) == 5
    assert weyl_dim((1, 1, 0, 0, 0), 5) == 10
    assert weyl_dim((0, 0, 0), 3) == 1
    assert weyl_dim((2, 2, 0, 0, 0), 5) == 50
    # twisting by det does not change the dimension
    assert weyl_dim((1, 0, -1), 3) == weyl_dim((2, 1, 0), 3) == 8


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_weyl_dim_matches_tableau_count(m):
    for d in range(6):
        for lam in partitions(d, m):
            assert weyl_dim(lam, m) == ssyt_dimension(lam, m)


def test_weyl_dim_is_exact_for_large_weights():
    # far beyond 64-bit range; Python integers never wrap
    big = weyl_dim((400, 300, 200, 100, 0), 5)
    assert big > 2**64
    assert big == weyl_dim((500, 400, 300, 200, 100), 5)


def test_cauchy_small():
    assert cauchy_decompose(0, 2, 5) == [()]
    lams = cauchy_decompose(2, 2, 2)
    assert lams == [(2,), (1, 1)]
    assert sum(weyl_dim(l, 2) ** 2 for l in lams) == 10 == sym_dimension(2, 4)
    with pytest.raises(ValueError):
        cauchy_decompose(-1, 2, 2)


def test_cauchy_dimension_identity():
    for k in range(1, 6):
        for n in range(1, 6):
            for d in range(9):
                total = sum(weyl_dim(l, k) * weyl_dim(l, n) for l in cauchy_decompose(d, k, n))
                assert total == comb(k * n + d - 1, d)


def test_sl_trivial_multiplicity():
    assert sl_trivial_multiplicity(lr_decompose((1, 0), (0, -1), 2)) == 1
    assert sl_trivial_multiplicity({(2, 2): 1, (3, 1): 1, (0, 0): 2}) == 3


def test_tensor_all_dimension():
    decomp = tensor_all([(1, 0, 0)] * 3, 3)
    assert sum(mult * weyl_dim(g, 3) for g, mult in decomp.items()) == 27
    assert decomp[(2, 1, 0)] == 2
