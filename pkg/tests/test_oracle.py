import numpy as np
import pytest

from degauss import oracle as fo
from degauss.entanglement import schmidt_entropy
from degauss.gaussian import covariance_direct
from degauss.oracle import (CutoffLeakageError, apply_ladder, apply_squeezer,
                            covariance_from_moments, dense_from_schmidt,
                            fidelity, schmidt_spectrum, squeezed_vacuum,
                            vacuum)
from degauss.states import build_added, build_subtracted, build_tmsv


def _entropy(weights, base=2):
    w = weights[weights > 1e-300]
    return float(-(w * np.log(w)).sum() / np.log(base))


def test_dense_from_schmidt_vacuum():
    d = dense_from_schmidt(build_tmsv(0.0), cutoff=10)
    assert d.amps[0, 0] == 1.0
    assert d.norm == 1.0


def test_dense_from_schmidt_band_structure():
    s = build_added(0.4, 1, 0)
    d = dense_from_schmidt(s)
    nz = np.argwhere(np.abs(d.amps) > 0)
    assert np.array_equal(nz[:, 0] - nz[:, 1], np.ones(len(nz), dtype=int))
    assert d.norm == pytest.approx(1.0, abs=1e-7)


def test_dense_round_trip_spectrum():
    s = build_added(0.4, 2, 1, epsilon=1e-13)
    spec = schmidt_spectrum(dense_from_schmidt(s))
    assert np.max(np.abs(spec[:s.n_terms] - np.sort(s.weights)[::-1])) < 1e-13


def test_dense_cutoff_overflow():
    with pytest.raises(CutoffLeakageError):
        dense_from_schmidt(build_tmsv(0.7), cutoff=5)


def test_dense_rejects_fractional_offsets():
    s = build_added(0.4, 1.5, 0, continuous=True)
    with pytest.raises(ValueError):
        dense_from_schmidt(s)


def test_ladder_on_vacuum():
    d = apply_ladder(vacuum(10), "A", "create")
    assert d.amps[1, 0] == 1.0
    assert np.sum(np.abs(d.amps)) == 1.0
    z = apply_ladder(vacuum(10), "A", "annihilate")
    assert z.norm == 0.0
    with pytest.raises(ValueError):
        z.normalized()


def test_ladder_sqrt_factors():
    d = vacuum(10)
    for _ in range(3):
        d = apply_ladder(d, "B", "create")
    # (b^dag)^3 |0> = sqrt(3!) |3>
    assert d.amps[0, 3] == pytest.approx(np.sqrt(6.0), rel=1e-14)


def test_ladder_bad_args():
    with pytest.raises(ValueError):
        apply_ladder(vacuum(4), "C", "create")
    with pytest.raises(ValueError):
        apply_ladder(vacuum(4), "A", "destroy")


def test_annihilation_shrinks_norm():
    tmsv = squeezed_vacuum(0.4, 60)
    out = apply_ladder(tmsv, "B", "annihilate")
    assert out.norm < tmsv.norm
    assert out.norm <= 1.0


def test_tmsv_operator_identity():
    # b|TMSV> = lam a^dag |TMSV> as a vector identity
    for lam in (0.22, 0.4, 0.6):
        tmsv = squeezed_vacuum(lam, 100)
        lhs = apply_ladder(tmsv, "B", "annihilate").amps
        rhs = lam * apply_ladder(tmsv, "A", "create").amps
        assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_squeezer_vacuum_coefficients():
    lam = 0.4
    d = squeezed_vacuum(lam, 60)
    n = np.arange(12)
    expect = np.sqrt((1 - lam ** 2) * lam ** (2 * n))
    assert np.max(np.abs(np.diag(d.amps)[:12] - expect)) < 1e-12
    off = d.amps - np.diag(np.diag(d.amps))
    assert np.max(np.abs(off)) < 1e-12


def test_squeezer_identity_at_zero():
    d = apply_squeezer(vacuum(8), 0.0)
    assert d.amps[0, 0] == 1.0


def test_squeezer_domain():
    with pytest.raises(ValueError):
        apply_squeezer(vacuum(8), 0.9)


def test_squeezer_commutes_with_addition():
    # adding k photons before or after the squeezer gives the same state
    lam = 0.4
    for k in (1, 2, 3):
        before = vacuum(100)
        for _ in range(k):
            before = apply_ladder(before, "A", "create")
        before = apply_squeezer(before.normalized(), lam)
        after = squeezed_vacuum(lam, 100)
        for _ in range(k):
            after = apply_ladder(after, "A", "create")
        after = after.normalized()
        assert fidelity(before, after) >= 1.0 - 1e-9


def test_three_equivalent_schemes():
    lam = 0.4
    for k in (1, 2, 3):
        tmsv = squeezed_vacuum(lam, 100)
        add_a = tmsv
        sub_b = tmsv
        for _ in range(k):
            add_a = apply_ladder(add_a, "A", "create")
            sub_b = apply_ladder(sub_b, "B", "annihilate")
        add_a = add_a.normalized()
        sub_b = sub_b.normalized()
        pre = vacuum(100)
        for _ in range(k):
            pre = apply_ladder(pre, "A", "create")
        pre = apply_squeezer(pre.normalized(), lam)
        assert fidelity(add_a, sub_b) >= 1.0 - 1e-10
        assert fidelity(add_a, pre) >= 1.0 - 1e-10
        assert fidelity(sub_b, pre) >= 1.0 - 1e-10


def test_schmidt_spectrum_product_state():
    spec = schmidt_spectrum(vacuum(12))
    assert spec[0] == pytest.approx(1.0)
    assert np.max(np.abs(spec[1:])) < 1e-14


def test_schmidt_spectrum_tmsv_geometric():
    lam = 0.4
    spec = schmidt_spectrum(squeezed_vacuum(lam, 60))
    n = np.arange(12)
    expect = (1 - lam ** 2) * lam ** (2 * n)
    assert np.max(np.abs(spec[:12] - expect)) < 1e-11


@pytest.mark.parametrize("lam", [0.22, 0.4])
def test_oracle_equivalence_grid(lam):
    # ladder-built states reproduce the closed-form Schmidt weights,
    # entropy and covariance
    cutoff = 100
    tmsv = squeezed_vacuum(lam, cutoff)
    for k in range(4):
        for l in range(4):
            for op, build in (("create", build_added),
                              ("annihilate", build_subtracted)):
                dense = tmsv
                for _ in range(k):
                    dense = apply_ladder(dense, "A", op)
                for _ in range(l):
                    dense = apply_ladder(dense, "B", op)
                dense = dense.normalized()
                ref = build(lam, k, l, epsilon=1e-13)
                spec = schmidt_spectrum(dense)
                ref_sorted = np.sort(ref.weights)[::-1]
                assert np.max(np.abs(spec[:ref.n_terms] - ref_sorted)) < 1e-9
                assert _entropy(spec, base=2) == pytest.approx(
                    schmidt_entropy(ref), abs=1e-9)
                cov_o, cov4 = covariance_from_moments(dense)
                cov_c = covariance_direct(ref)
                assert cov_o.alpha == pytest.approx(cov_c.alpha, abs=1e-9)
                assert cov_o.beta == pytest.approx(cov_c.beta, abs=1e-9)
                assert cov_o.gamma == pytest.approx(cov_c.gamma, abs=1e-9)
                assert cov4.shape == (4, 4)


def test_covariance_from_moments_vacuum():
    _, cov = covariance_from_moments(vacuum(10))
    assert np.max(np.abs(cov - np.eye(4))) < 1e-12


def test_covariance_from_moments_tmsv():
    c, _ = covariance_from_moments(squeezed_vacuum(0.4, 60))
    assert c.alpha == pytest.approx(1.16 / 0.84, abs=1e-10)
    assert c.beta == pytest.approx(1.16 / 0.84, abs=1e-10)
    assert c.gamma == pytest.approx(0.8 / 0.84, abs=1e-10)


def test_covariance_pattern_violation():
    # a state outside the family: superposition with a displaced-looking
    # component gives nonzero means/odd moments
    amps = np.zeros((20, 20))
    amps[0, 0] = 1.0
    amps[1, 0] = 1.0
    d = fo.DenseTwoModeState(amps / np.sqrt(2.0))
    with pytest.raises(ValueError):
        covariance_from_moments(d)


def test_fidelity_basics():
    v = vacuum(8)
    assert fidelity(v, v) == pytest.approx(1.0)
    one = apply_ladder(v, "A", "create")
    assert fidelity(v, one) == 0.0
    with pytest.raises(ValueError):
        fidelity(v, vacuum(9))


def test_leakage_monitor():
    amps = np.zeros((20, 20))
    amps[19, 0] = 1.0
    with pytest.raises(CutoffLeakageError):
        fo.DenseTwoModeState(amps).check_leakage()


def test_squeezed_vacuum_retries_with_larger_cutoff():
    # cutoff 25 leaks at lam=0.7; the retry doubles it and succeeds
    d = squeezed_vacuum(0.7, 25)
    assert d.cutoff == 50
    assert d.leakage_mass() <= 1e-12
