"""Thermal states, von Neumann entropy, free energy and mutual information.

Temperature is measured in units of hbar*omega/k_B, so Boltzmann factors are
exp(-E/T) with E in units of omega. Entropies are in nats.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmath import BipartiteSpace, eig_hermitian, expectation, partial_trace, require_hermitian

# Below this, Boltzmann weights underflow double precision; route to the
# exact T = 0 branch.
ZERO_TEMPERATURE_CUTOFF = 1e-8

# Relative gap tolerance for detecting ground-state degeneracy at T = 0.
GROUND_GAP_TOL = 1e-9

# Eigenvalues of a density matrix in [-EIG_CLIP, 0) are clipped to 0;
# anything lower is an error, not silently repaired.
EIG_CLIP = 1e-12


@dataclass(frozen=True)
class Temperature:
    """Bath temperature in units hbar*omega/k_B; value 0 selects the exact T = 0 branch."""

    value: float

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("temperature must be non-negative")

    @property
    def is_zero(self) -> bool:
        return self.value < ZERO_TEMPERATURE_CUTOFF

    @classmethod
    def zero(cls) -> "Temperature":
        return cls(0.0)


@dataclass(frozen=True)
class ThermalEnsemble:
    """A Gibbs state together with the Hamiltonian and temperature that generated it."""

    hamiltonian: np.ndarray
    temperature: Temperature
    state: np.ndarray


def gibbs_state(h, t: Temperature) -> ThermalEnsemble:
    """Gibbs state exp(-H/T)/Z via spectral decomposition.

    Weights are computed as exp(-(E_i - E_0)/T) and then normalized, so low
    temperatures do not underflow every weight at once. At T = 0 the state is
    the uniform mixture over the ground eigenspace, with degeneracy detected
    by a relative gap tolerance.
    """
    h = require_hermitian(h, "hamiltonian")
    dec = eig_hermitian(h)
    vals, vecs = dec.eigenvalues, dec.eigenvectors
    if t.is_zero:
        e0 = vals[0]
        degenerate = vals <= e0 + GROUND_GAP_TOL * max(1.0, abs(e0))
        p = degenerate.astype(float)
    else:
        p = np.exp(-(vals - vals[0]) / t.value)
    p /= p.sum()
    rho = (vecs * p) @ vecs.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return ThermalEnsemble(hamiltonian=h, temperature=t, state=rho)


def _state_spectrum(rho) -> np.ndarray:
    """Validate a density matrix and return its eigenvalues, clipped to [0, inf)."""
    rho = require_hermitian(rho, "density matrix")
    vals = np.linalg.eigvalsh(rho)
    if vals[0] < -EIG_CLIP:
        raise ValueError(f"density matrix has negative eigenvalue {vals[0]:g}")
    trace = float(vals.sum())
    if abs(trace - 1.0) > 1e-10:
        raise ValueError(f"density matrix trace {trace:.12g} differs from 1")
    return np.clip(vals, 0.0, None)


def von_neumann_entropy(rho) -> float:
    """S(rho) = -Tr(rho ln rho) in nats, with 0 ln 0 := 0."""
    p = _state_spectrum(rho)
    p = p[p > 0.0]
    return float(-(p * np.log(p)).sum())


def free_energy(rho, h, t: Temperature) -> float:
    """F(rho, H) = Tr(H rho) - T * S(rho); at T = 0 the entropy term is dropped exactly."""
    h = require_hermitian(h, "hamiltonian")
    energy = expectation(h, rho)
    if t.is_zero:
        return energy
    return energy - t.value * von_neumann_entropy(rho)


def delta_f(rho, h, t: Temperature) -> float:
    """Excess free energy over the thermal state at the same (H, T); non-negative."""
    thermal = gibbs_state(h, t)
    diff = free_energy(rho, h, t) - free_energy(thermal.state, h, t)
    if diff < -1e-10:
        raise ValueError(
            f"free energy below the Gibbs minimum by {-diff:g}; numerical breakdown"
        )
    return max(diff, 0.0)


def mutual_information(rho_s, space: BipartiteSpace) -> float:
    """S(A:B) = S(rho_A) + S(rho_B) - S(rho_AB) in nats; non-negative."""
    rho_a = partial_trace(rho_s, space, keep="A")
    rho_b = partial_trace(rho_s, space, keep="B")
    mi = von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho_s)
    if mi < -1e-10:
        raise ValueError(f"mutual information negative beyond tolerance: {mi:g}")
    return max(mi, 0.0)
