import math

import numpy as np
import pytest

from degauss.special import gauss_2f1
from degauss.states import (build_added, build_subtracted, build_tmsv,
                            one_mode_weight, pascal_recursion_residual)

LAMBDA_GRID = [round(0.1 * i, 1) for i in range(1, 10)]


def test_tmsv_at_zero_is_vacuum():
    s = build_tmsv(0.0)
    assert s.n_terms == 1
    assert s.weights[0] == 1.0
    assert s.offset_a == s.offset_b == 0.0


def test_tmsv_weights_direct():
    s = build_tmsv(0.4)
    assert s.weights[0] == pytest.approx(0.84, rel=1e-14)
    assert s.weights[1] == pytest.approx(0.1344, rel=1e-14)


def test_tmsv_mean_index():
    # geometric sum: sum n w_n = lam^2/(1-lam^2)
    s = build_tmsv(0.4, epsilon=1e-13)
    m = np.arange(s.n_terms)
    assert float(np.sum(m * s.weights)) == pytest.approx(0.16 / 0.84,
                                                         rel=1e-10)


def test_lambda_domain():
    for build in (build_tmsv,):
        with pytest.raises(ValueError):
            build(1.0)
        with pytest.raises(ValueError):
            build(-0.2)
    with pytest.raises(ValueError):
        build_added(1.0, 1, 1)
    with pytest.raises(ValueError):
        build_subtracted(0.5, -1, 0)


def test_added_zero_ops_matches_tmsv():
    ref = build_tmsv(0.37)
    s = build_added(0.37, 0, 0)
    n = min(ref.n_terms, s.n_terms)
    assert np.allclose(ref.weights[:n], s.weights[:n], rtol=1e-13, atol=0)
    assert s.op_kind == "tmsv"


def test_added_11_anchor_weight():
    # w_0 = 1 / 2F1(2,2;1;0.16) with the closed form (1+z)/(1-z)^3
    s = build_added(0.4, 1, 1)
    assert s.weights[0] == pytest.approx(0.84 ** 3 / 1.16, rel=1e-13)
    assert (s.offset_a, s.offset_b) == (1.0, 1.0)


@pytest.mark.parametrize("lam", [0.22, 0.4, 0.7])
@pytest.mark.parametrize("k", [0, 1, 3, 6])
def test_added_one_mode_closed_form(lam, k):
    # p_n^(k) = (1-lam^2)^(k+1) lam^(2n) C(n+k, n)
    s = build_added(lam, k, 0)
    for n in range(min(s.n_terms, 25)):
        assert s.weights[n] == pytest.approx(one_mode_weight(lam, k, n),
                                             rel=1e-12)


def test_subtracted_offsets():
    s = build_subtracted(0.4, 3, 1)
    assert (s.offset_a, s.offset_b) == (0.0, 2.0)
    s = build_subtracted(0.4, 1, 3)
    assert (s.offset_a, s.offset_b) == (2.0, 0.0)


def test_subtracted_at_lambda_zero_is_product_state():
    s = build_subtracted(0.0, 3, 1)
    assert s.n_terms == 1
    assert s.weights[0] == 1.0


def test_subtracted_on_b_equals_one_mode_added():
    # subtracting k on mode B collapses to the one-mode distribution:
    # 2F1(k+1,k+1;k+1;z) = (1-z)^(-k-1)
    for lam in (0.22, 0.55):
        for k in (1, 2, 5):
            s = build_subtracted(lam, 0, k)
            for n in range(min(s.n_terms, 20)):
                assert s.weights[n] == pytest.approx(
                    one_mode_weight(lam, k, n), rel=1e-12)


@pytest.mark.parametrize("lam", LAMBDA_GRID)
def test_normalization_grid(lam):
    for k in range(11):
        for l in range(11):
            for build in (build_added, build_subtracted):
                s = build(lam, k, l)
                assert abs(float(np.sum(s.weights)) - 1.0) <= 2e-10
                assert s.tail_bound <= 1e-10 + 1e-12


@pytest.mark.parametrize("build", [build_added, build_subtracted])
def test_mode_swap_symmetry(build):
    for lam in (0.22, 0.4):
        for k, l in [(0, 2), (1, 3), (2, 5), (4, 1)]:
            a = build(lam, k, l)
            b = build(lam, l, k)
            n = min(a.n_terms, b.n_terms)
            assert np.allclose(a.weights[:n], b.weights[:n], rtol=1e-13,
                               atol=0)
            assert (a.offset_a, a.offset_b) == (b.offset_b, b.offset_a)


def test_sub_equals_add_at_symmetric_point():
    for lam in (0.22, 0.4, 0.7):
        for k in range(9):
            a = build_added(lam, k, k)
            s = build_subtracted(lam, k, k)
            n = min(a.n_terms, s.n_terms)
            assert np.allclose(a.weights[:n], s.weights[:n], rtol=1e-13,
                               atol=0)


@pytest.mark.parametrize("lam", [0.22, 0.4, 0.7])
def test_pascal_recursion_residual(lam):
    s = build_tmsv(lam)
    for k in range(11):
        for n in range(s.n_terms):
            assert abs(pascal_recursion_residual(lam, k, n)) <= 1e-14


def test_pascal_boundary_term():
    assert pascal_recursion_residual(0.22, 5, 0) == pytest.approx(0.0,
                                                                  abs=1e-14)
    assert pascal_recursion_residual(0.4, 0, 0) == pytest.approx(0.0,
                                                                 abs=1e-14)


def test_continuous_mode_consistency():
    # real k converging to an integer reproduces the integer weights
    for build in (build_added, build_subtracted):
        ref = build(0.4, 3, 1)
        near = build(0.4, 3.0 + 1e-9, 1.0 - 1e-9, continuous=True)
        n = min(ref.n_terms, near.n_terms)
        assert np.max(np.abs(ref.weights[:n] - near.weights[:n])) <= 1e-6


def test_continuous_mode_normalizes():
    s = build_added(0.5, 2.5, 0.75, continuous=True)
    assert abs(float(np.sum(s.weights)) - 1.0) <= 2e-10
    assert s.continuous


def test_weights_consistent_with_independent_normalizer():
    # sum of the raw combinatorial terms must reproduce the 2F1 value
    lam, k, l = 0.6, 4, 2
    z = lam * lam
    f = gauss_2f1(k + 1.0, l + 1.0, 1.0, z).value
    total = 0.0
    term = 1.0
    for n in range(400):
        total += term
        term *= z * (n + 1.0 + k) * (n + 1.0 + l) / ((n + 1.0) ** 2)
    assert total == pytest.approx(f, rel=1e-12)


def test_truncation_tail_shrinks_with_epsilon():
    loose = build_added(0.7, 2, 3, epsilon=1e-8)
    tight = build_added(0.7, 2, 3, epsilon=1e-12)
    assert tight.n_terms > loose.n_terms
    assert tight.tail_bound <= 1e-12 + 1e-13


def test_one_mode_weight_negative_index():
    assert one_mode_weight(0.4, 2, -1) == 0.0
    assert one_mode_weight(0.0, 2, 0) == 1.0


def test_one_mode_weight_at_zero_squeezing():
    assert one_mode_weight(0.0, 3, 1) == 0.0


def test_binomial_anchor_math():
    # sanity on the ratio recursion anchor: C(n+k, k) for small cases
    lam, k = 0.3, 2
    s = build_added(lam, k, 0)
    z = lam * lam
    # p_1/p_0 = z*(1+k) directly from the distribution
    assert s.weights[1] / s.weights[0] == pytest.approx(z * (1 + k),
                                                        rel=1e-13)


def test_entropy_base_carried():
    s = build_tmsv(0.4, base="e")
    assert s.base == "e"
    assert math.isclose(float(np.sum(s.weights)), 1.0, abs_tol=1e-9)
