"""Pendular-state qubits of trapped polar molecules.

Reduced-variable toolkit for the two-dipole problem: single-molecule
pendular eigensystem, dipole-dipole pair Hamiltonian, Wootters
concurrence (pure and thermal), CNOT transition frequency shifts, and
reduced-variable curve fits.
"""

from .entanglement import (
    concurrence,
    critical_coupling,
    eigenstate_concurrences,
    entanglement_of_formation,
    spin_flip,
    thermal_concurrence,
    thermal_density_matrix,
    weak_coupling_concurrence,
    weak_coupling_slope,
)
from .pair import (
    MAGIC_ANGLE,
    PairConfig,
    PairEigensystem,
    bell_basis_hamiltonian,
    build_pair_hamiltonian,
    coupling_factor,
    diagonalize_pair,
    verify_azimuthal_average,
)
from .rotor import (
    BasisTruncation,
    CosineElements,
    PendularState,
    angular_distribution,
    build_pendular_hamiltonian,
    c1_zero_crossing,
    cosine_elements,
    cosine_matrix_element,
    qubit_states,
    solve_pendular,
)
from .spectroscopy import (
    TransitionSet,
    alpha_sweep,
    cnot_report,
    delta_omega,
    exact_transition_frequencies,
    transition_frequencies,
)

__all__ = [
    "BasisTruncation",
    "CosineElements",
    "PendularState",
    "PairConfig",
    "PairEigensystem",
    "TransitionSet",
    "MAGIC_ANGLE",
    "angular_distribution",
    "bell_basis_hamiltonian",
    "build_pair_hamiltonian",
    "build_pendular_hamiltonian",
    "c1_zero_crossing",
    "concurrence",
    "cosine_elements",
    "cosine_matrix_element",
    "coupling_factor",
    "critical_coupling",
    "delta_omega",
    "diagonalize_pair",
    "eigenstate_concurrences",
    "entanglement_of_formation",
    "exact_transition_frequencies",
    "alpha_sweep",
    "cnot_report",
    "qubit_states",
    "solve_pendular",
    "spin_flip",
    "thermal_concurrence",
    "thermal_density_matrix",
    "transition_frequencies",
    "verify_azimuthal_average",
    "weak_coupling_concurrence",
    "weak_coupling_slope",
]

__version__ = "0.1.0"
