"""Resonant quantum Rabi model on a truncated Fock space.

H = (1/2) sigma_z + n_hat + g * sigma_x (a+ + a), in units hbar = omega = 1.
Two-level convention: sigma_z|e> = +|e>, basis ordered (e, g), so
(1 + <sigma_z>)/2 is the excited-state population. Resonance is hard-coded.

At T = 0 the extracted work has two equivalent closed forms in the ground
state: W = (1 + <sigma_z>)/2 + <n> = E_0 + 1/2 - g<sigma_x(a+ + a)>, with
ideal efficiency eta = -W / (g<sigma_x(a+ + a)>).
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .qmath import SIGMA_X, SIGMA_Z, BipartiteSpace, eig_hermitian, expectation, identity, tensor
from .protocol import ProtocolInput, ProtocolReport, run_protocol, total_hamiltonian
from .thermo import Temperature, gibbs_state

# Fock levels beyond this make the dense eigensolver (dim 2N) unreasonably
# expensive for a desk-scale sweep.
CUTOFF_CEILING = 1024

# Ground-state population allowed in the top Fock level before the truncated
# basis is declared unconverged.
TAIL_TOL = 1e-8


class ConvergenceError(RuntimeError):
    """Truncated Fock basis too small for the requested coupling."""


@dataclass(frozen=True)
class RabiConfig:
    g_over_omega: float
    fock_cutoff: int = 16
    temperature: Temperature = Temperature(0.0)
    convergence_tol: float = 1e-8

    def __post_init__(self):
        if self.g_over_omega < 0:
            raise ValueError("coupling g/omega must be non-negative")
        if self.fock_cutoff < 2:
            raise ValueError("fock_cutoff must be at least 2")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be positive")


@dataclass(frozen=True)
class RabiPoint:
    """Observables of the thermalized (t3) state and the derived work figures."""

    config: RabiConfig
    ground_energy: float
    sz_mean: float
    n_mean: float
    hi_mean: float
    work: float
    efficiency: Optional[float]
    converged_cutoff: int
    report: Optional[ProtocolReport] = None


def annihilation(n: int) -> np.ndarray:
    """Truncated annihilation operator, a|k> = sqrt(k)|k-1>, levels 0..n-1."""
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), k=1).astype(complex)


def number_operator(n: int) -> np.ndarray:
    return np.diag(np.arange(n, dtype=float)).astype(complex)


def build_rabi_hamiltonian(
    config: RabiConfig,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, BipartiteSpace]:
    """Return (H_A, H_B, H_I, space) for the truncated resonant Rabi model."""
    n = config.fock_cutoff
    h_a = 0.5 * SIGMA_Z
    h_b = number_operator(n)
    a = annihilation(n)
    h_i = config.g_over_omega * tensor(SIGMA_X, a + a.conj().T)
    return h_a, h_b, h_i, BipartiteSpace(2, n)


def _top_level_population(rho: np.ndarray, n: int) -> float:
    """Combined population of the highest Fock level across both qubit states."""
    return float(rho[n - 1, n - 1].real + rho[2 * n - 1, 2 * n - 1].real)


def evaluate_point(config: RabiConfig) -> RabiPoint:
    """Diagonalize the Rabi Hamiltonian and evaluate work and efficiency.

    At T = 0 the t3 state is the ground state and the closed forms above are
    used directly. At T > 0 the full protocol is run on the built Hamiltonians
    and the shared fields are filled from the global thermal state.
    """
    h_a, h_b, h_i, space = build_rabi_hamiltonian(config)
    n = config.fock_cutoff
    t = config.temperature
    h_total = tensor(h_a, identity(n)) + tensor(identity(2), h_b) + h_i
    dec = eig_hermitian(h_total)

    report = None
    if not t.is_zero:
        report = run_protocol(ProtocolInput(h_a, h_b, h_i, t, space))
    rho_t3 = gibbs_state(h_total, t).state

    if _top_level_population(rho_t3, n) > TAIL_TOL:
        raise ConvergenceError(
            f"Fock cutoff {n} too small at g/omega = {config.g_over_omega:g}; "
            "increase fock_cutoff"
        )

    sz_mean = expectation(tensor(SIGMA_Z, identity(n)), rho_t3)
    n_mean = expectation(tensor(identity(2), number_operator(n)), rho_t3)
    hi_mean = expectation(h_i, rho_t3)

    if t.is_zero:
        work = 0.5 * (1.0 + sz_mean) + n_mean
        efficiency = -work / hi_mean if abs(hi_mean) > 1e-12 else None
    else:
        work = report.work
        efficiency = report.efficiency

    return RabiPoint(
        config=config,
        ground_energy=dec.ground_energy,
        sz_mean=sz_mean,
        n_mean=n_mean,
        hi_mean=hi_mean,
        work=work,
        efficiency=efficiency,
        converged_cutoff=n,
        report=report,
    )


def _efficiency_gap(a: Optional[float], b: Optional[float]) -> float:
    if a is None and b is None:
        return 0.0
    if a is None or b is None:
        return np.inf
    return abs(a - b)


def auto_converge(config: RabiConfig) -> RabiPoint:
    """Double the Fock cutoff until work and efficiency stop moving.

    Compares evaluations at N and 2N; returns the 2N result once both |dW|
    and |d eta| fall below convergence_tol. Raises ConvergenceError if the
    cutoff ceiling is reached first.
    """
    n = config.fock_cutoff
    prev: Optional[RabiPoint] = None
    while n <= CUTOFF_CEILING:
        try:
            current = evaluate_point(replace(config, fock_cutoff=n))
        except ConvergenceError:
            current = None
        if prev is not None and current is not None:
            if (
                abs(current.work - prev.work) <= config.convergence_tol
                and _efficiency_gap(current.efficiency, prev.efficiency)
                <= config.convergence_tol
            ):
                return current
        prev = current
        n *= 2
    raise ConvergenceError(
        f"no convergence up to Fock cutoff {CUTOFF_CEILING} "
        f"at g/omega = {config.g_over_omega:g}"
    )


def perturbative_oracle(g_over_omega: float) -> tuple[float, float]:
    """Second-order small-g estimates: W ~ g^2/2 and eta ~ 1/2.

    The ground state |g,0> mixes with |e,1> across a gap of 2, giving equal
    populations g^2/4 in the excited qubit state and in the one-photon state,
    while <H_I> ~ -g^2. Valid for g/omega up to about 0.05.
    """
    return 0.5 * g_over_omega**2, 0.5
