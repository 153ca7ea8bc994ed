import warnings

import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from ncqosc.errors import NegativeNormalization, NodeTooCloseToZeroOfPhi, UnsupportedPair
from ncqosc.statistics import convergence_order
from ncqosc.tab_validation.suites import benchmark_families
from ncqosc.wavefunction import (
    EigenfunctionSpec, PolarPoint, eigenfunction, eigenfunction_family, evaluate_phi,
    gram_matrix, invariant_apply_polar, orthonormality_integral, sample_density, spec_at,
    tricomi_U_poly,
)

R = np.linspace(0.0, 3.0, 7)
ANG = np.linspace(0.0, 6.0, 5)
RR, AA = np.meshgrid(R, ANG, indexing="ij")


def test_tricomi_by_hand():
    assert tricomi_U_poly(0, 2.5, 3.0) == 1.0
    assert tricomi_U_poly(1, 2.0, 5.0) == 3.0
    assert tricomi_U_poly(2, 1.0, 0.0) == 2.0


@pytest.mark.parametrize("m, b", [(1, 0.5), (2, 3.0), (3, 0.25), (4, 1.0)])
def test_tricomi_matches_library_laguerre(m, b):
    z = np.linspace(0.0, 6.0, 13)
    expected = (-1) ** m * np.prod(range(1, m + 1)) * eval_genlaguerre(m, b - 1.0, z)
    np.testing.assert_allclose(tricomi_U_poly(m, b, z), expected, rtol=1e-12, atol=1e-12)


def test_tricomi_validates_order():
    with pytest.raises(TypeError, match="integer"):
        tricomi_U_poly(1.0, 1.0, 0.0)
    with pytest.raises(ValueError, match=">= 0"):
        tricomi_U_poly(-1, 1.0, 0.0)


def test_spec_validation():
    with pytest.raises(TypeError, match="n must be an integer"):
        EigenfunctionSpec(1.0, 0, rho=1.0, rho_dot=0.0, a=1.0)
    with pytest.raises(ValueError, match="m must be >= 0"):
        EigenfunctionSpec(0, -1, rho=1.0, rho_dot=0.0, a=1.0)
    with pytest.raises(ValueError, match="a must be > 0"):
        EigenfunctionSpec(0, 0, rho=1.0, rho_dot=0.0, a=0.0)
    with pytest.raises(NegativeNormalization):
        EigenfunctionSpec(0, 0, rho=0.0, rho_dot=0.0, a=1.0).normalization
    with pytest.raises(ValueError, match="r must be >= 0"):
        PolarPoint(-1.0, 0.0)


def test_ground_state_at_origin():
    spec = EigenfunctionSpec(0, 0, rho=1.0, rho_dot=0.0, a=1.0)
    assert eigenfunction(spec, PolarPoint(0.0, 0.0)) == pytest.approx(1 / np.sqrt(np.pi))


def test_angular_dependence():
    spec = EigenfunctionSpec(1, 3, rho=1.2, rho_dot=-0.3, a=0.8)
    base = eigenfunction(spec, PolarPoint(0.9, 0.4))
    turned = eigenfunction(spec, PolarPoint(0.9, 0.4 + 0.7))
    assert turned == pytest.approx(base * np.exp(2j * 0.7), rel=1e-12)
    assert spec.l == 2


def test_time_mismatch_is_rejected():
    ep = benchmark_families()["set1"]
    spec = spec_at(ep, 0, 0, 1.0)
    with pytest.raises(ValueError, match="sampled at"):
        eigenfunction(spec, PolarPoint(0.5, 0.0), t=2.0)


@pytest.mark.parametrize("name", ["set1", "set2-k2", "set2-critical"])
@pytest.mark.parametrize("n, m", [(0, 0), (1, 0), (0, 2), (2, 1), (3, 3)])
def test_specializations_match_generic_form(name, n, m):
    family = benchmark_families()[name]
    t = 1.3
    generic = evaluate_phi(spec_at(family, n, m, t), RR, AA)
    special = eigenfunction_family(family, n, m, RR, AA, t)
    np.testing.assert_allclose(special, generic, rtol=1e-12, atol=1e-14)


def test_normalization_and_orthogonality():
    spec = dict(rho=1.3, rho_dot=0.2, a=0.7)
    ground = EigenfunctionSpec(0, 0, **spec)
    excited = EigenfunctionSpec(1, 1, **spec)
    assert abs(orthonormality_integral(ground, ground) - 1) < 1e-9
    assert abs(orthonormality_integral(excited, excited) - 1) < 1e-9
    assert abs(orthonormality_integral(ground, excited)) < 1e-9


def test_gram_matrix_is_identity():
    ep = benchmark_families()["set2-critical"]
    G = gram_matrix(ep, 1.0)
    assert G.shape == (16, 16)
    np.testing.assert_allclose(G, np.eye(16), atol=1e-8)


def test_gram_matrix_on_catalog_family(fig1_params):
    from ncqosc.model import build_scenario

    ep = build_scenario("set1-case1", fig1_params).ep
    G = gram_matrix(ep, 2.0, pairs=[(0, 0), (1, 0), (0, 1), (2, 2)])
    np.testing.assert_allclose(G, np.eye(4), atol=1e-8)


def test_unsupported_pair():
    spec = dict(rho=1.0, rho_dot=0.0, a=1.0)
    with pytest.raises(UnsupportedPair, match="n=4"):
        orthonormality_integral(EigenfunctionSpec(4, 0, **spec), EigenfunctionSpec(0, 0, **spec))


def test_overlap_needs_a_common_state():
    with pytest.raises(ValueError, match="same EP state"):
        orthonormality_integral(EigenfunctionSpec(0, 0, rho=1.0, rho_dot=0.0, a=1.0),
                                EigenfunctionSpec(0, 0, rho=1.1, rho_dot=0.0, a=1.0))


@pytest.mark.parametrize("name", ["set1", "set2-k2", "set2-critical"])
def test_eigenfunctions_diagonalize_the_invariant(name):
    family = benchmark_families()[name]
    r = np.linspace(0.4, 1.6, 7)
    ang = np.linspace(0.1, 6.0, 9)
    for n, m in ((0, 0), (1, 0), (0, 1)):
        spec = spec_at(family, n, m, 0.5)
        field = invariant_apply_polar(spec, family, 0.5, (r, ang))
        assert field.spread <= 1e-4
        assert field.skipped == ()


def test_invariant_ratio_converges_at_second_order():
    family = benchmark_families()["set1"]
    spec = spec_at(family, 0, 0, 0.5)
    r = np.linspace(0.4, 1.6, 7)
    ang = np.linspace(0.1, 6.0, 9)
    steps = [4e-2, 2e-2, 1e-2]
    spreads = [invariant_apply_polar(spec, family, 0.5, (r, ang), h=h).spread for h in steps]
    assert 1.5 <= convergence_order(steps, spreads) <= 2.5


def test_ratio_field_needs_interior_radii():
    spec = EigenfunctionSpec(0, 0, rho=1.0, rho_dot=0.0, a=1.0)
    with pytest.raises(ValueError, match="radius > h"):
        invariant_apply_polar(spec, None, None, ([0.0, 1.0], [0.0]))


def test_ratio_field_skips_nodes():
    spec = EigenfunctionSpec(1, 0, rho=1.0, rho_dot=0.0, a=1.0)
    # |phi_{1,-1}| ~ r exp(-r^2/2) falls below the threshold at r = 8
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        field = invariant_apply_polar(spec, 1.0, None, ([1e-2, 1.0, 8.0], [0.0, 1.0]),
                                      h=1e-3)
    assert len(field.skipped) == 2
    assert any(issubclass(w.category, NodeTooCloseToZeroOfPhi) for w in caught)


def test_density_grid_shape():
    spec = EigenfunctionSpec(1, 0, rho=1.0, rho_dot=0.1, a=1.0)
    density = sample_density(spec, np.linspace(0, 3, 31), np.linspace(0, 2 * np.pi, 32))
    assert density.shape == (31, 32)
    assert np.all(density >= 0)
