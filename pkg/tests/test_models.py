import numpy as np
import pytest

from eulerwedge import models
from eulerwedge.errors import (EmptyDictionary, GeneratorIllConditioned, PreconditionViolated,
                               ResolutionTooCoarse)


@pytest.fixture(scope="module")
def u1():
    return models.build_u1_current(512)


@pytest.fixture(scope="module")
def aff():
    return models.build_aff_rep(1024)


def test_gaussian_norm_closed_form():
    # int_0^inf p 2 pi e^{-p^2} dp = pi
    ops = models.build_u1_current(64, 1e-6, 1e2)
    g = lambda p: models.gaussian_hat(p)  # noqa: E731
    assert abs(ops.inner_product_1(g, g) - np.pi) < 1e-5
    assert abs(models.gaussian_inner_oracle(0, 1, 0, 1) - np.pi) < 1e-12


def test_inner_product_converges():
    r = models.inner_product_convergence()
    assert r["errors"][-1] < 1e-4
    assert all(q < 0.1 for q in r["ratios"])


def test_dilation_unitary_and_group_law(u1):
    assert u1.unitarity_defect(1.7) < 1e-12
    assert u1.group_law_residual([(0.3, 1.5), (-0.2, 0.7)]) < 1e-6
    assert u1.distribution_eigen_residual() < 1e-12


def test_translation_is_multiplication(u1):
    G = u1.interior_test_vector()
    assert np.allclose(u1.apply(0.4, 1.0, G), np.exp(1j * 0.4 * u1.p) * G)


def test_kms_trend():
    r = models.kms_trend(512)
    assert max(r["kms_residual"]) < 1e-5
    assert r["improves"]


def test_bgl_grid_basis_is_standard_in_band(u1):
    V = models.bgl_subspace_grid(u1)
    assert V.residuals.max() < 1e-5
    assert V.dim == V.real_basis().shape[1]


def test_ill_conditioned_band(u1):
    with pytest.raises(GeneratorIllConditioned):
        models.bgl_subspace_grid(u1, kappa_max=10.0)


def test_coarse_grids_rejected():
    with pytest.raises(ResolutionTooCoarse):
        models.build_u1_current(8)
    with pytest.raises(ResolutionTooCoarse):
        models.build_aff_rep(8)


def test_band_leak_detected(u1):
    with pytest.raises(ValueError):
        models.delta_power_exact(u1, np.random.default_rng(0).normal(size=u1.N), 0.5, 1.0)


@pytest.mark.parametrize("k,l", [(1, 2), (1, 3), (2, 3)])
def test_codimension(k, l):
    ops = models.build_u1_current(1024, 1e-4, 300.0)
    r = models.codimension_profile(ops, (-1.0, 1.0), k, l)
    assert r["estimate"] == l - k == r["expected"]
    assert r["gap_ratio"] >= 1e3


def test_empty_dictionary(u1):
    with pytest.raises(EmptyDictionary):
        models.dictionary_vectors(u1, (-1.0, 1.0), 1, 0)


def test_half_line_distance_shrinks():
    ops = models.build_u1_current(1024, 1e-4, 300.0)
    r = models.half_line_study(ops)
    assert r["decreasing"]
    assert r["loglog_slope"] < -0.5


def test_regularity_demo_shape(u1):
    rng = np.random.default_rng(0)
    sample = [(rng.uniform(-1, 1), np.exp(rng.uniform(-1, 1))) for _ in range(6)]
    r = models.regularity_demo(u1, sample)
    dims = [t["dim_V_N"] for t in r["trajectory"]]
    assert all(0 <= d <= r["dim_V"] for d in dims)
    assert dims == sorted(dims)  # smaller neighbourhoods keep more


def test_aff_flatness_and_trend(aff):
    f = models.spectral_flatness(aff)
    assert f["passed"] and f["max_weight"] < 0.05
    t = models.aff_trend(512)
    assert t["improves"]
    assert models.aff_group_law_residual(aff, [(0.3, 5), (-0.2, -3)]) < 1e-10


def test_aff_shift_margin(aff):
    f = aff.packet(-15.5, 0.0, 0.25)
    with pytest.raises(PreconditionViolated):
        aff.shift(f, 1.0, margin=1e-8)
    g = aff.packet(0.0, 0.0, 0.25)
    assert np.linalg.norm(aff.shift(g, 32 * aff.h, margin=1e-8)) == pytest.approx(1.0, abs=1e-12)
