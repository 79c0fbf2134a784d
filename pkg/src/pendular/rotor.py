"""Single-molecule pendular eigenproblem: a rigid rotor in a static field.

Works in reduced units throughout: energies in units of the rotational
constant B, field strength as the dimensionless ratio x = mu*E/B.  Only
M = 0 states are represented, so the basis is the set of Y_{j,0}
spherical harmonics up to a truncation j_max.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceFailure, RootNotBracketed

__all__ = [
    "BasisTruncation",
    "PendularState",
    "CosineElements",
    "cosine_matrix_element",
    "cosine_matrix",
    "build_pendular_hamiltonian",
    "solve_pendular",
    "qubit_states",
    "cosine_elements",
    "c1_zero_crossing",
    "angular_distribution",
]


@dataclass(frozen=True)
class BasisTruncation:
    """Spherical-harmonic basis cutoff with an adaptive convergence check.

    j_max is the starting cutoff; if the two qubit energies move by more
    than convergence_tol (in units of B) when four more basis functions
    are added, j_max is doubled, up to j_max_cap.
    """

    j_max: int = 20
    convergence_tol: float = 1e-10
    j_max_cap: int = 60

    def __post_init__(self):
        if self.j_max < 2:
            raise ValueError("j_max must be >= 2")


@dataclass(frozen=True)
class PendularState:
    """One M = 0 eigenstate: reduced energy and Y_{j,0} coefficients."""

    energy: float
    coefficients: np.ndarray
    label: int  # field-free correlate J-tilde (M = 0)


@dataclass(frozen=True)
class CosineElements:
    """Orientation-cosine matrix elements between the two qubit states."""

    c0: float  # <0|cos theta|0>
    cx: float  # <0|cos theta|1>
    c1: float  # <1|cos theta|1>


def cosine_matrix_element(j: int, jp: int) -> float:
    """<j,0|cos theta|j',0>; nonzero only for |j - j'| = 1."""
    if j < 0 or jp < 0:
        raise ValueError("j and jp must be non-negative")
    if abs(j - jp) != 1:
        return 0.0
    lo = min(j, jp)
    return (lo + 1) / np.sqrt((2 * lo + 1) * (2 * lo + 3))


def cosine_matrix(j_max: int) -> np.ndarray:
    """Full cos(theta) matrix in the Y_{j,0} basis, j = 0..j_max."""
    n = j_max + 1
    off = np.array([cosine_matrix_element(j, j + 1) for j in range(n - 1)])
    mat = np.zeros((n, n))
    mat[np.arange(n - 1), np.arange(1, n)] = off
    mat[np.arange(1, n), np.arange(n - 1)] = off
    return mat


def build_pendular_hamiltonian(x: float, trunc: BasisTruncation) -> np.ndarray:
    """Reduced Hamiltonian j(j+1) on the diagonal, -x <j|cos|j+1> off it."""
    if not np.isfinite(x) or x < 0:
        raise ValueError("reduced field x must be finite and non-negative")
    n = trunc.j_max + 1
    j = np.arange(n)
    ham = np.diag(j * (j + 1.0))
    off = -x * np.array([cosine_matrix_element(k, k + 1) for k in range(n - 1)])
    ham[np.arange(n - 1), np.arange(1, n)] = off
    ham[np.arange(1, n), np.arange(n - 1)] = off
    return ham


def _solve_at(x: float, j_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of the tridiagonal pendular Hamiltonian."""
    j = np.arange(j_max + 1)
    diag = j * (j + 1.0)
    off = -x * np.array([cosine_matrix_element(k, k + 1) for k in range(j_max)])
    energies, vectors = eigh_tridiagonal(diag, off)
    # Fix phase: largest-magnitude coefficient positive.
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        if col[np.argmax(np.abs(col))] < 0:
            vectors[:, k] = -col
    return energies, vectors


@lru_cache(maxsize=4096)
def _solve_certified(x: float, j_max: int, tol: float, cap: int):
    """Solve with adaptive truncation; returns (energies, vectors, j_used)."""
    j = j_max
    while True:
        energies, vectors = _solve_at(x, j)
        check_e, _ = _solve_at(x, j + 4)
        if max(abs(energies[0] - check_e[0]), abs(energies[1] - check_e[1])) < tol:
            return energies, vectors, j
        if j >= cap:
            raise ConvergenceFailure(
                f"qubit energies not converged at j_max = {cap} for x = {x}"
            )
        j = min(2 * j, cap)


def solve_pendular(x: float, trunc: BasisTruncation | None = None) -> list[PendularState]:
    """All pendular eigenstates at reduced field x, ascending in energy.

    The first two entries are the qubit states |0> and |1>, correlating
    with the field-free J = 0 and J = 1 (M = 0) rotor states.
    """
    trunc = trunc or BasisTruncation()
    energies, vectors, _ = _solve_certified(
        float(x), trunc.j_max, trunc.convergence_tol, trunc.j_max_cap
    )
    return [
        PendularState(energy=float(energies[k]), coefficients=vectors[:, k].copy(), label=k)
        for k in range(len(energies))
    ]


def qubit_states(x: float, trunc: BasisTruncation | None = None) -> tuple[PendularState, PendularState]:
    """The |0> and |1> qubit states at reduced field x."""
    states = solve_pendular(x, trunc)
    return states[0], states[1]


def cosine_elements(x: float, trunc: BasisTruncation | None = None) -> CosineElements:
    """Orientation-cosine elements (C0, CX, C1) at reduced field x."""
    trunc = trunc or BasisTruncation()
    energies, vectors, j_used = _solve_certified(
        float(x), trunc.j_max, trunc.convergence_tol, trunc.j_max_cap
    )
    cos = cosine_matrix(j_used)
    a, b = vectors[:, 0], vectors[:, 1]
    return CosineElements(
        c0=float(a @ cos @ a), cx=float(a @ cos @ b), c1=float(b @ cos @ b)
    )


def c1_zero_crossing(trunc: BasisTruncation | None = None) -> float:
    """Field strength where <1|cos theta|1> crosses zero, near x = 4.9."""
    trunc = trunc or BasisTruncation()

    def c1(x):
        return cosine_elements(x, trunc).c1

    lo, hi = 4.0, 6.0
    flo, fhi = c1(lo), c1(hi)
    if flo * fhi > 0:
        raise RootNotBracketed("c1 does not change sign on [4, 6]")
    while hi - lo > 1e-4:
        mid = 0.5 * (lo + hi)
        fmid = c1(mid)
        if flo * fmid <= 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def angular_distribution(state: PendularState, theta_grid: np.ndarray) -> np.ndarray:
    """Probability density |sum_j c_j Y_{j,0}(theta)|^2 on a theta grid.

    Normalized so that the integral of density * 2 pi sin(theta) over
    [0, pi] is unity.
    """
    theta = np.asarray(theta_grid, dtype=float)
    if np.any(theta < 0) or np.any(theta > np.pi + 1e-12):
        raise ValueError("theta grid must lie in [0, pi]")
    u = np.cos(theta)
    psi = np.zeros_like(theta)
    for j, c in enumerate(state.coefficients):
        if c == 0.0:
            continue
        # Y_{j,0}(theta) = sqrt((2j+1)/4pi) P_j(cos theta)
        leg = np.polynomial.legendre.Legendre.basis(j)(u)
        psi += c * np.sqrt((2 * j + 1) / (4 * np.pi)) * leg
    return psi**2
