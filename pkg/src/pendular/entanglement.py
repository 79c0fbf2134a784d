"""Wootters concurrence of pair eigenstates and thermal mixtures.

Everything here operates on real symmetric 4x4 density matrices in the
{|00>, |01>, |10>, |11>} product basis.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    LinearityCheckFailed,
    NonPhysicalDensity,
    NoOnsetFound,
    OutOfLinearRegime,
)
from .pair import PairConfig, diagonalize_pair
from .rotor import BasisTruncation

__all__ = [
    "spin_flip",
    "concurrence",
    "entanglement_of_formation",
    "eigenstate_concurrences",
    "thermal_density_matrix",
    "thermal_concurrence",
    "weak_coupling_slope",
    "weak_coupling_concurrence",
    "critical_coupling",
]

# sigma_y (x) sigma_y is real in the product basis.
_SYSY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=float,
)


def _check_density(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (4, 4):
        raise ValueError("density matrix must be 4x4")
    if abs(np.trace(rho) - 1.0) > 1e-9:
        raise NonPhysicalDensity("density matrix trace differs from 1")
    return rho


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """Spin-flipped density matrix (sy (x) sy) rho* (sy (x) sy)."""
    rho = np.asarray(rho, dtype=float)
    return _SYSY @ rho @ _SYSY


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The defining quantities are the square roots of the eigenvalues of
    the non-Hermitian product rho rho-tilde.  Those square roots are
    computed here as the absolute eigenvalues of the symmetric matrix
    sqrt(rho) (sy (x) sy) sqrt(rho), whose square is similar to
    rho rho-tilde; this avoids taking square roots of eigenvalues that
    are zero up to rounding noise and keeps the result accurate to
    machine precision even for rank-deficient mixtures.
    """
    rho = _check_density(rho)
    weights, basis = np.linalg.eigh(rho)
    if weights.min() < -1e-9:
        raise NonPhysicalDensity(f"negative density eigenvalue {weights.min()}")
    sqrt_rho = (basis * np.sqrt(np.clip(weights, 0.0, None))) @ basis.T
    mu = np.linalg.eigvalsh(sqrt_rho @ _SYSY @ sqrt_rho)
    roots = np.sort(np.abs(mu))[::-1]
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def entanglement_of_formation(c: float) -> float:
    """Monotone map from concurrence to entanglement of formation."""
    if not 0.0 <= c <= 1.0:
        raise ValueError("concurrence must lie in [0, 1]")
    p = 0.5 * (1.0 + np.sqrt(1.0 - c**2))
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1 - p) * np.log2(1 - p))


def eigenstate_concurrences(cfg: PairConfig, trunc: BasisTruncation | None = None) -> np.ndarray:
    """Concurrence of each pure pair eigenstate, ascending in energy."""
    eig = diagonalize_pair(cfg, trunc)
    return np.array([concurrence(np.outer(v, v)) for v in eig.vectors.T])


def thermal_density_matrix(
    cfg: PairConfig, z: float, trunc: BasisTruncation | None = None
) -> np.ndarray:
    """Boltzmann mixture of the pair eigenstates at reduced temperature z.

    z = 0 returns the ground projector (equal mixture over an exactly
    degenerate ground manifold).
    """
    if z < 0:
        raise ValueError("reduced temperature must be non-negative")
    eig = diagonalize_pair(cfg, trunc)
    e = eig.energies - eig.energies[0]
    if z == 0.0:
        weights = (e < 1e-12).astype(float)
    else:
        weights = np.exp(-e / z)
    weights /= weights.sum()
    rho = np.zeros((4, 4))
    for w, v in zip(weights, eig.vectors.T):
        rho += w * np.outer(v, v)
    return rho


def thermal_concurrence(cfg: PairConfig, z: float, trunc: BasisTruncation | None = None) -> float:
    """Concurrence of the thermal pair state at reduced temperature z."""
    return concurrence(thermal_density_matrix(cfg, z, trunc))


def _ground_concurrence(x: float, y: float, trunc: BasisTruncation | None) -> float:
    cfg = PairConfig(x=x, x_prime=x, y=y)
    eig = diagonalize_pair(cfg, trunc)
    v = eig.vectors[:, 0]
    return concurrence(np.outer(v, v))


def weak_coupling_slope(x: float, trunc: BasisTruncation | None = None) -> float:
    """Slope K(x) of the ground-state concurrence against y as y -> 0.

    Extracted at a finite probe coupling y = 1e-3 and verified linear by
    comparing against the slope at y = 2e-3.
    """
    k1 = _ground_concurrence(x, 1e-3, trunc) / 1e-3
    k2 = _ground_concurrence(x, 2e-3, trunc) / 2e-3
    if abs(k2 / k1 - 1.0) > 0.01:
        raise LinearityCheckFailed(
            f"concurrence not linear near y = 0 at x = {x}: {k1} vs {k2}"
        )
    return k1


def weak_coupling_concurrence(
    x: float, x_prime: float, y: float, trunc: BasisTruncation | None = None
) -> float:
    """Ground-state concurrence sqrt(K(x) K(x')) y for weak coupling."""
    if y >= 0.04:
        raise OutOfLinearRegime("linearized concurrence requires y < 0.04")
    return float(np.sqrt(weak_coupling_slope(x, trunc) * weak_coupling_slope(x_prime, trunc)) * y)


def critical_coupling(x: float, z: float, trunc: BasisTruncation | None = None) -> float:
    """Smallest coupling y with nonzero thermal concurrence at (x, z).

    Bisection on y in [0, 1] to absolute tolerance 1e-7; returns 0 when
    the concurrence is already positive at y = 1e-7.
    """
    if z <= 0:
        raise ValueError("critical coupling is defined for z > 0")

    def c12(y):
        return thermal_concurrence(PairConfig(x=x, x_prime=x, y=y), z, trunc)

    if c12(1e-7) > 0.0:
        return 0.0
    if c12(1.0) <= 0.0:
        raise NoOnsetFound(f"thermal concurrence is zero on y in [0, 1] at x={x}, z={z}")
    lo, hi = 1e-7, 1.0
    while hi - lo > 1e-7:
        mid = 0.5 * (lo + hi)
        if c12(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return hi
