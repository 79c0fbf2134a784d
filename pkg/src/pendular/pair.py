"""Two-dipole Hamiltonian in the pendular qubit basis and its eigensystem.

The pair model lives in the 4-dimensional product space spanned by
{|00>, |01>, |10>, |11>}, where the first slot is site 1 (reduced field
x) and the second is site 2 (reduced field x').  The dipole-dipole
coupling is azimuthally averaged, leaving the factor y (1 - 3 cos^2 a)
with a the angle between the inter-dipole axis and the field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AsymmetricSites
from .rotor import BasisTruncation, cosine_elements, qubit_states

__all__ = [
    "MAGIC_ANGLE",
    "PairConfig",
    "PairEigensystem",
    "coupling_factor",
    "build_pair_hamiltonian",
    "bell_basis_hamiltonian",
    "diagonalize_pair",
    "verify_azimuthal_average",
]

# alpha where (1 - 3 cos^2 alpha) vanishes, arccos(1/sqrt(3)) ~ 54.736 deg
MAGIC_ANGLE = float(np.arccos(1.0 / np.sqrt(3.0)))


@dataclass(frozen=True)
class PairConfig:
    """Two-site configuration: fields x, x', coupling y = Omega/B, tilt alpha."""

    x: float
    x_prime: float
    y: float
    alpha: float = np.pi / 2

    def __post_init__(self):
        if self.y < 0:
            raise ValueError("coupling y must be non-negative")

    @property
    def symmetric(self) -> bool:
        return self.x == self.x_prime

    @property
    def omega_alpha(self) -> float:
        """Effective coupling y (1 - 3 cos^2 alpha)."""
        return self.y * coupling_factor(self.alpha)


@dataclass(frozen=True)
class PairEigensystem:
    """Four reduced energies (ascending) and orthonormal real eigenvectors.

    vectors[:, i] is the i-th eigenvector in the {|00>,|01>,|10>,|11>} basis.
    """

    energies: np.ndarray
    vectors: np.ndarray


def coupling_factor(alpha: float) -> float:
    """Angular factor (1 - 3 cos^2 alpha) of the averaged interaction."""
    return 1.0 - 3.0 * np.cos(alpha) ** 2


def build_pair_hamiltonian(cfg: PairConfig, trunc: BasisTruncation | None = None) -> np.ndarray:
    """4x4 pair Hamiltonian: Stark diagonal plus dipole-dipole block."""
    s0, s1 = qubit_states(cfg.x, trunc)
    w0, w1 = s0.energy, s1.energy
    sp0, sp1 = qubit_states(cfg.x_prime, trunc)
    wp0, wp1 = sp0.energy, sp1.energy

    ce = cosine_elements(cfg.x, trunc)
    cep = cosine_elements(cfg.x_prime, trunc)
    c0, cx, c1 = ce.c0, ce.cx, ce.c1
    cp0, cpx, cp1 = cep.c0, cep.cx, cep.c1

    stark = np.diag([w0 + wp0, w0 + wp1, w1 + wp0, w1 + wp1])
    dd = np.array(
        [
            [c0 * cp0, c0 * cpx, cx * cp0, cx * cpx],
            [c0 * cpx, c0 * cp1, cx * cpx, cx * cp1],
            [cx * cp0, cx * cpx, c1 * cp0, c1 * cpx],
            [cx * cpx, cx * cp1, c1 * cpx, c1 * cp1],
        ]
    )
    return stark + cfg.omega_alpha * dd


# Bell basis columns in terms of {|00>,|01>,|10>,|11>}:
# (|11>+|00>)/sqrt2, (|11>-|00>)/sqrt2, (|10>+|01>)/sqrt2, (|10>-|01>)/sqrt2
_BELL = np.array(
    [
        [1, -1, 0, 0],
        [0, 0, 1, -1],
        [0, 0, 1, 1],
        [1, 1, 0, 0],
    ]
) / np.sqrt(2.0)


def bell_basis_hamiltonian(cfg: PairConfig, trunc: BasisTruncation | None = None) -> np.ndarray:
    """Pair Hamiltonian in the Bell basis; valid only for symmetric sites.

    The antisymmetric Bell state occupies a decoupled 1x1 block, so it
    stays an exact eigenvector for any field and coupling strength.
    """
    if not cfg.symmetric:
        raise AsymmetricSites("Bell-basis form requires x == x_prime")
    s0, s1 = qubit_states(cfg.x, trunc)
    w_plus = s1.energy + s0.energy
    w_minus = s1.energy - s0.energy
    ce = cosine_elements(cfg.x, trunc)
    c0, cx, c1 = ce.c0, ce.cx, ce.c1

    a_plus = 0.5 * (c1**2 + c0**2) + cx**2
    a_minus = 0.5 * (c1**2 + c0**2) - cx**2
    b_hat = 0.5 * (c1**2 - c0**2)
    c_plus = cx * (c1 + c0)
    c_minus = cx * (c1 - c0)
    d_plus = c1 * c0 + cx**2
    d_minus = c1 * c0 - cx**2

    stark = np.array(
        [
            [w_plus, w_minus, 0, 0],
            [w_minus, w_plus, 0, 0],
            [0, 0, w_plus, 0],
            [0, 0, 0, w_plus],
        ]
    )
    dd = np.array(
        [
            [a_plus, b_hat, c_plus, 0],
            [b_hat, a_minus, c_minus, 0],
            [c_plus, c_minus, d_plus, 0],
            [0, 0, 0, d_minus],
        ]
    )
    return stark + cfg.omega_alpha * dd


def diagonalize_pair(cfg: PairConfig, trunc: BasisTruncation | None = None) -> PairEigensystem:
    """Full eigensystem of the pair Hamiltonian, ascending in energy.

    At exact degeneracies the ordering is stabilized by a secondary sort
    on <v|diag(0,1,2,3)|v>; individual eigenvectors in a degenerate
    manifold remain basis-dependent, only the spectrum is canonical.
    """
    ham = build_pair_hamiltonian(cfg, trunc)
    energies, vectors = np.linalg.eigh(ham)
    weight = np.einsum("ij,i,ij->j", vectors, np.arange(4.0), vectors)
    order = np.lexsort((weight, np.round(energies / 1e-11) * 1e-11))
    energies = energies[order]
    vectors = vectors[:, order]
    for k in range(4):
        col = vectors[:, k]
        if col[np.argmax(np.abs(col))] < 0:
            vectors[:, k] = -col
    return PairEigensystem(energies=energies, vectors=vectors)


def verify_azimuthal_average(
    theta1: float, theta2: float, alpha: float, n_phi: int = 256
) -> tuple[float, float]:
    """Average the full dipole-dipole angle factor over both azimuths.

    Returns (numeric average, closed form); the numeric side integrates
    cos(beta) - 3 cos(gamma1) cos(gamma2) over phi1, phi2 in [0, 2 pi)
    on an n_phi x n_phi grid, the closed form is
    (1 - 3 cos^2 alpha) cos(theta1) cos(theta2).
    """
    phi = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
    p1, p2 = np.meshgrid(phi, phi, indexing="ij")
    # Angles measured from the field direction; the inter-dipole axis sits
    # at polar angle alpha, azimuth 0, in the field frame.
    cos_beta = np.cos(theta1) * np.cos(theta2) + np.sin(theta1) * np.sin(theta2) * np.cos(p1 - p2)
    cos_g1 = np.cos(theta1) * np.cos(alpha) + np.sin(theta1) * np.sin(alpha) * np.cos(p1)
    cos_g2 = np.cos(theta2) * np.cos(alpha) + np.sin(theta2) * np.sin(alpha) * np.cos(p2)
    numeric = float(np.mean(cos_beta - 3.0 * cos_g1 * cos_g2))
    closed = coupling_factor(alpha) * np.cos(theta1) * np.cos(theta2)
    return numeric, float(closed)
