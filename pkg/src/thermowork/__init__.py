"""Work extraction via a thermalization protocol for bipartite quantum systems."""

from .qmath import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    BipartiteSpace,
    SpectralDecomposition,
    eig_hermitian,
    expectation,
    identity,
    is_hermitian,
    partial_trace,
    tensor,
)
from .thermo import (
    Temperature,
    ThermalEnsemble,
    delta_f,
    free_energy,
    gibbs_state,
    mutual_information,
    von_neumann_entropy,
)
from .protocol import (
    ProtocolInput,
    ProtocolReport,
    run_protocol,
    total_hamiltonian,
    verify_bound,
)
from .rabi import (
    ConvergenceError,
    RabiConfig,
    RabiPoint,
    annihilation,
    auto_converge,
    build_rabi_hamiltonian,
    evaluate_point,
    number_operator,
    perturbative_oracle,
)

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "BipartiteSpace",
    "SpectralDecomposition",
    "eig_hermitian",
    "expectation",
    "identity",
    "is_hermitian",
    "partial_trace",
    "tensor",
    "Temperature",
    "ThermalEnsemble",
    "delta_f",
    "free_energy",
    "gibbs_state",
    "mutual_information",
    "von_neumann_entropy",
    "ProtocolInput",
    "ProtocolReport",
    "run_protocol",
    "total_hamiltonian",
    "verify_bound",
    "ConvergenceError",
    "RabiConfig",
    "RabiPoint",
    "annihilation",
    "auto_converge",
    "build_rabi_hamiltonian",
    "evaluate_point",
    "number_operator",
    "perturbative_oracle",
]

__version__ = "0.1.0"
