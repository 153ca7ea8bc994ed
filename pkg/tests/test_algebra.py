import numpy as np
import pytest

from ncqosc.algebra import (
    QuadraticForm, bopp_shift, commutator, commutator_table, expand_nc_hamiltonian,
    hamiltonian_coefficients, p1, p2, x1, x2,
)
from ncqosc.errors import NonPositiveDamping
from ncqosc.model import ScenarioParams, build_scenario
from ncqosc.ncparams import nc_pair

PARAMS = ScenarioParams(M=1.0, q=1.0, omega0=2.0, B0=0.0, Gamma=0.0, sigma=1.0, Delta_c=4.0)


def test_canonical_pairs():
    assert commutator(x1, p1) == 1j
    assert commutator(x2, p2) == 1j
    assert commutator(x1, x2) == 0
    assert commutator(p1, x1) == -1j


def test_bopp_shift_identity():
    X1, X2, P1, P2 = bopp_shift(0.0, 0.0)
    assert (X1, X2, P1, P2) == (x1, x2, p1, p2)


def test_bopp_shift_commutators():
    X1, X2, P1, P2 = bopp_shift(0.1, 0.3)
    assert commutator(X1, X2) == pytest.approx(0.1j)
    assert commutator(P1, P2) == pytest.approx(0.3j)
    assert commutator(X1, P1) == pytest.approx(1.0075j, abs=1e-15)
    assert commutator(X2, P2) == pytest.approx(1.0075j, abs=1e-15)
    assert commutator(X1, P2) == 0
    assert commutator(X2, P1) == 0


def test_commutator_table_is_antisymmetric():
    rng = np.random.default_rng(7)
    for theta, Omega in rng.uniform(-2, 2, size=(20, 2)):
        table = commutator_table(theta, Omega)
        np.testing.assert_allclose(table, -table.T, atol=1e-15)
        assert table[0, 1] == pytest.approx(1j * theta, abs=1e-14)
        assert table[0, 2] == pytest.approx(1j * (1 + theta * Omega / 4), abs=1e-14)


def test_coefficients_by_hand():
    a, b, c = hamiltonian_coefficients(PARAMS, 1.0, 2.0, 0.0, 0.1, 0.3, 0.0)
    assert (a, b, c) == pytest.approx((1.01, 4.0225, 0.35), rel=1e-12)


def test_commutative_free_limit():
    a, b, c = hamiltonian_coefficients(PARAMS.replace(M=2.0), 0.5, 3.0, 0.0, 0.0, 0.0, 0.0)
    assert (a, b, c) == pytest.approx((0.25, 2.0 * 9.0 / 0.5, 0.0))


def test_field_free_cross_term():
    a, b, c = hamiltonian_coefficients(PARAMS, 0.8, 1.5, 0.0, 0.2, -0.4, 0.0)
    assert c == pytest.approx(0.5 * (-0.4 * 0.8 + 1.5 ** 2 / 0.8 * 0.2), rel=1e-12)


@pytest.mark.parametrize("theta, Omega, B", [(0.0, 0.0, 0.0), (0.1, 0.3, 0.0), (0.2, -0.5, 1.7)])
def test_expansion_matches_coefficients(theta, Omega, B):
    params = PARAMS.replace(q=-1.3)
    expanded = expand_nc_hamiltonian(params, 0.6, 2.5, B, theta, Omega, 0.0)
    reduced = QuadraticForm.from_coefficients(
        *hamiltonian_coefficients(params, 0.6, 2.5, B, theta, Omega, 0.0))
    np.testing.assert_allclose(expanded.matrix, reduced.matrix, rtol=1e-12, atol=1e-12)
    for z in np.random.default_rng(3).normal(size=(100, 4)):
        assert expanded(z) == pytest.approx(reduced(z), rel=1e-12, abs=1e-12)


def test_cross_term_structure():
    Q = expand_nc_hamiltonian(PARAMS, 1.0, 2.0, 0.8, 0.1, 0.3, 0.0).matrix
    # (x1, x2, p1, p2): Q[p1, x2] = -Q[p2, x1]
    assert Q[2, 1] == pytest.approx(-Q[3, 0])


def test_balanced_forms_match_literal_forms(fig1_params):
    pair = nc_pair("set1-case3", fig1_params)
    s = pair.scenario
    t = np.linspace(0.0, 3.0, 7)
    literal = hamiltonian_coefficients(s.params, s.f, s.omega, s.B, pair.theta(t), pair.Omega(t), t)
    balanced = hamiltonian_coefficients(s.params, s.f, s.omega, s.B, pair.theta(t), None, t,
                                        kappa=pair.kappa(t))
    for lit, bal in zip(literal, balanced):
        np.testing.assert_allclose(lit, bal, rtol=1e-9)


def test_catalog_case_expansion(fig1_params):
    pair = nc_pair("set2-case2", fig1_params)
    s = build_scenario("set2-case2", fig1_params)
    t = 1.5
    expanded = expand_nc_hamiltonian(s.params, s.f, s.omega, s.B, pair.theta(t), pair.Omega(t), t)
    a, b, c = expanded.coefficients()
    assert a == pytest.approx(float(s.ep.a(t)), rel=1e-9)
    assert b == pytest.approx(float(s.ep.b(t)), rel=1e-9)


def test_non_positive_damping():
    with pytest.raises(NonPositiveDamping, match="<= 0"):
        hamiltonian_coefficients(PARAMS, -1.0, 1.0, 0.0, 0.0, 0.0, 0.5)
    with pytest.raises(NonPositiveDamping):
        expand_nc_hamiltonian(PARAMS, 0.0, 1.0, 0.0, 0.0, 0.0, 0.5)
