"""Dense complex linear algebra on finite Hilbert spaces.

Operators are plain square complex numpy arrays. All helpers here are pure
functions; nothing mutates its arguments. Units are hbar = k_B = 1 throughout
the package, with energies in units of the oscillator frequency omega.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def as_operator(m) -> np.ndarray:
    """Coerce to a square complex matrix or raise ValueError."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {m.shape}")
    return m


def is_hermitian(m, tol: float = HERMITICITY_TOL) -> bool:
    """Relative max-norm Hermiticity check: ||M - M+||_max <= tol * (1 + ||M||_max)."""
    m = as_operator(m)
    scale = 1.0 + np.abs(m).max(initial=0.0)
    return np.abs(m - m.conj().T).max(initial=0.0) <= tol * scale


def require_hermitian(m, name: str = "operator") -> np.ndarray:
    m = as_operator(m)
    if not is_hermitian(m):
        raise ValueError(f"{name} is not Hermitian within tolerance {HERMITICITY_TOL:g}")
    return m


@dataclass(frozen=True)
class BipartiteSpace:
    """Dimensions of a composite space A x B.

    Composite basis index convention: i = i_A * d_b + i_B, i.e. subsystem A is
    the slow (left) tensor factor, matching numpy's kron ordering.
    """

    d_a: int
    d_b: int

    def __post_init__(self):
        if self.d_a < 1 or self.d_b < 1:
            raise ValueError("subsystem dimensions must be positive")

    @property
    def dim(self) -> int:
        return self.d_a * self.d_b


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigensystem of a Hermitian operator, eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])


def tensor(a, b) -> np.ndarray:
    """Kronecker product, A as the left (slow) factor."""
    return np.kron(as_operator(a), as_operator(b))


def partial_trace(rho, space: BipartiteSpace, keep: str) -> np.ndarray:
    """Trace out one subsystem of a bipartite operator.

    keep="A" returns the d_a-dimensional marginal, keep="B" the d_b one.
    Preserves the trace of the input.
    """
    rho = as_operator(rho)
    if rho.shape[0] != space.dim:
        raise ValueError(
            f"operator dimension {rho.shape[0]} inconsistent with bipartition "
            f"{space.d_a} x {space.d_b}"
        )
    r = rho.reshape(space.d_a, space.d_b, space.d_a, space.d_b)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "B":
        return np.einsum("ijik->jk", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def eig_hermitian(h) -> SpectralDecomposition:
    """Full eigendecomposition of a Hermitian operator (ascending eigenvalues)."""
    h = require_hermitian(h)
    vals, vecs = np.linalg.eigh(h)
    return SpectralDecomposition(eigenvalues=vals, eigenvectors=vecs)


def expectation(obs, rho, tol: float = 1e-10) -> float:
    """Tr(obs * rho) with the imaginary residue checked and discarded."""
    obs = as_operator(obs)
    rho = as_operator(rho)
    if obs.shape != rho.shape:
        raise ValueError(f"dimension mismatch: {obs.shape[0]} vs {rho.shape[0]}")
    val = np.trace(obs @ rho)
    if abs(val.imag) > tol * (1.0 + abs(val.real)):
        raise ValueError(
            f"expectation value has imaginary residue {val.imag:g}; "
            "observable not Hermitian or state corrupted"
        )
    return float(val.real)
