"""Tests for the truncated quantum Rabi model and its work figures."""
import numpy as np
import pytest

from thermowork.qmath import SIGMA_X, eig_hermitian, expectation, identity, tensor
from thermowork.thermo import Temperature, gibbs_state
from thermowork.protocol import ProtocolInput, run_protocol
from thermowork.rabi import (
    ConvergenceError,
    RabiConfig,
    annihilation,
    auto_converge,
    build_rabi_hamiltonian,
    evaluate_point,
    number_operator,
    perturbative_oracle,
)


def total_rabi_hamiltonian(config):
    h_a, h_b, h_i, space = build_rabi_hamiltonian(config)
    return (
        tensor(h_a, identity(space.d_b)) + tensor(identity(2), h_b) + h_i,
        h_i,
        space,
    )


class TestBuilder:
    def test_zero_coupling_gives_zero_interaction(self):
        _, _, h_i, _ = build_rabi_hamiltonian(RabiConfig(0.0, 8))
        assert np.abs(h_i).max() == 0.0

    def test_ladder_matrix_elements(self):
        a_dag = annihilation(5).conj().T
        assert a_dag[1, 0] == pytest.approx(1.0)
        assert a_dag[2, 1] == pytest.approx(np.sqrt(2))

    def test_number_operator_diagonal(self):
        a = annihilation(6)
        np.testing.assert_allclose(a.conj().T @ a, number_operator(6), atol=1e-12)

    def test_perturbative_ground_energy(self):
        # second-order shift -g^2/2 from the |e,1> virtual state across gap 2
        h, _, _ = total_rabi_hamiltonian(RabiConfig(0.1, 40))
        e0 = eig_hermitian(h).ground_energy
        assert e0 == pytest.approx(-0.5 - 0.1**2 / 2, abs=5e-5)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            RabiConfig(-0.1, 16)
        with pytest.raises(ValueError):
            RabiConfig(0.5, 1)
        with pytest.raises(ValueError):
            RabiConfig(0.5, 16, convergence_tol=0.0)


class TestEvaluatePoint:
    def test_zero_coupling(self):
        point = evaluate_point(RabiConfig(0.0, 8))
        assert point.work == pytest.approx(0.0, abs=1e-12)
        assert point.efficiency is None
        assert point.ground_energy == pytest.approx(-0.5, abs=1e-12)

    def test_small_coupling_matches_perturbation_theory(self):
        point = evaluate_point(RabiConfig(0.01, 16))
        work_est, eff_est = perturbative_oracle(0.01)
        assert point.work == pytest.approx(work_est, rel=0.01)
        assert point.efficiency == pytest.approx(eff_est, rel=0.01)

    @pytest.mark.parametrize("g", [0.1, 0.5, 1.0, 1.5, 2.0])
    def test_two_forms_of_work_agree(self, g):
        point = evaluate_point(RabiConfig(g, 128))
        alternative = point.ground_energy + 0.5 - point.hi_mean
        assert point.work == pytest.approx(alternative, abs=1e-9)

    @pytest.mark.parametrize("g", [0.3, 1.0, 2.0])
    def test_negativity_invariants(self, g):
        point = evaluate_point(RabiConfig(g, 128))
        assert point.ground_energy <= -0.5
        assert point.hi_mean <= 0.0

    def test_ground_energy_non_increasing_in_g(self):
        energies = [evaluate_point(RabiConfig(g, 96)).ground_energy for g in np.arange(0.0, 2.01, 0.25)]
        assert np.all(np.diff(energies) <= 1e-10)

    def test_work_positive_only_when_coupled(self):
        assert evaluate_point(RabiConfig(0.0, 16)).work <= 1e-12
        for g in (0.2, 0.8, 1.6):
            assert evaluate_point(RabiConfig(g, 96)).work > 0.0

    @pytest.mark.parametrize("g", [0.05, 0.4, 1.0, 1.7])
    def test_efficiency_between_half_and_one(self, g):
        eff = evaluate_point(RabiConfig(g, 96)).efficiency
        assert 0.5 < eff < 1.0

    @pytest.mark.parametrize("g", [0.3, 1.0, 1.8])
    def test_ground_state_parity(self, g):
        config = RabiConfig(g, 96)
        h, _, space = total_rabi_hamiltonian(config)
        rho = gibbs_state(h, Temperature.zero()).state
        n = space.d_b
        a = annihilation(n)
        assert abs(expectation(tensor(SIGMA_X, identity(n)), rho)) < 1e-9
        assert abs(expectation(tensor(identity(2), a + a.conj().T), rho)) < 1e-9

    @pytest.mark.parametrize("g", [0.1, 0.5, 1.0, 1.5])
    def test_agrees_with_protocol_path(self, g):
        config = RabiConfig(g, 128)
        point = evaluate_point(config)
        h_a, h_b, h_i, space = build_rabi_hamiltonian(config)
        report = run_protocol(ProtocolInput(h_a, h_b, h_i, Temperature.zero(), space))
        assert point.work == pytest.approx(report.work, abs=1e-9)

    def test_unconverged_cutoff_rejected(self):
        with pytest.raises(ConvergenceError, match="increase fock_cutoff"):
            evaluate_point(RabiConfig(2.0, 8))

    def test_positive_temperature_delegates_to_protocol(self):
        config = RabiConfig(0.5, 48, temperature=Temperature(0.5))
        point = evaluate_point(config)
        h_a, h_b, h_i, space = build_rabi_hamiltonian(config)
        report = run_protocol(ProtocolInput(h_a, h_b, h_i, Temperature(0.5), space))
        assert point.work == pytest.approx(report.work, abs=1e-12)
        assert point.report is not None
        assert point.n_mean > 0.0


class TestAutoConverge:
    def test_matches_high_cutoff_reference(self):
        converged = auto_converge(RabiConfig(0.5, 16))
        reference = evaluate_point(RabiConfig(0.5, 200))
        assert converged.work == pytest.approx(reference.work, abs=1e-8)
        assert converged.efficiency == pytest.approx(reference.efficiency, abs=1e-8)

    def test_zero_coupling_converges_immediately(self):
        point = auto_converge(RabiConfig(0.0, 16))
        assert point.work == pytest.approx(0.0, abs=1e-12)
        assert point.converged_cutoff == 32

    def test_deep_strong_coupling_needs_larger_cutoff(self):
        point = auto_converge(RabiConfig(2.0, 16))
        assert point.converged_cutoff >= 64
        # displaced-oscillator estimate: <n> of order (g/omega)^2
        assert point.n_mean == pytest.approx(4.0, rel=0.2)


class TestPerturbativeOracle:
    def test_formal_zero_coupling_limit(self):
        assert perturbative_oracle(0.0) == (0.0, 0.5)

    def test_formula_value(self):
        work, eff = perturbative_oracle(0.02)
        assert work == pytest.approx(2e-4)
        assert eff == 0.5

    def test_cross_check_at_validity_edge(self):
        point = evaluate_point(RabiConfig(0.05, 24))
        work_est, _ = perturbative_oracle(0.05)
        assert point.work == pytest.approx(work_est, rel=0.03)
