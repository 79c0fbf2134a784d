"""Closed-form zero-field pair solution, used as an independent oracle.

At zero external field the qubits reduce to Y00 and Y10, the pair
Hamiltonian becomes an Ising-like antidiagonal problem, and everything
(eigensystem, pure concurrences, thermal concurrence, critical-coupling
onset) has an explicit form in terms of zeta = Omega/6B.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AnalyticEigenstate",
    "analytic_eigensystem",
    "thermal_weights",
    "analytic_thermal_concurrence",
    "approx_critical_coupling",
]


@dataclass(frozen=True)
class AnalyticEigenstate:
    """Energy (units of B), real 4-vector in {|00>,|01>,|10>,|11>}, concurrence."""

    energy: float
    vector: np.ndarray
    concurrence: float


def _alphas(zeta: float) -> tuple[float, float]:
    root = np.sqrt(1.0 + zeta**2)
    return (1.0 + root) / zeta, (1.0 - root) / zeta


def analytic_eigensystem(zeta: float) -> list[AnalyticEigenstate]:
    """The four pair eigenstates at zero field, ascending in energy.

    zeta = 0 is handled by its limit: the outer states collapse to the
    bare product states |00> and |11> with vanishing concurrence.
    """
    if zeta < 0:
        raise ValueError("zeta must be non-negative")
    root = np.sqrt(1.0 + zeta**2)
    energies = [2.0 - 2.0 * root, 2.0 * (1.0 - zeta), 2.0 * (1.0 + zeta), 2.0 + 2.0 * root]

    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    v2 = np.array([0.0, -inv_sqrt2, inv_sqrt2, 0.0])
    v3 = np.array([0.0, inv_sqrt2, inv_sqrt2, 0.0])
    if zeta == 0.0:
        # alpha_+ -> infinity, alpha_- -> 0
        v1 = np.array([1.0, 0.0, 0.0, 0.0])
        v4 = np.array([0.0, 0.0, 0.0, 1.0])
        c1 = c4 = 0.0
    else:
        a_plus, a_minus = _alphas(zeta)
        v1 = np.array([-a_plus, 0.0, 0.0, 1.0]) / np.sqrt(1.0 + a_plus**2)
        v4 = np.array([-a_minus, 0.0, 0.0, 1.0]) / np.sqrt(1.0 + a_minus**2)
        c1 = 2.0 * a_plus / (1.0 + a_plus**2)
        c4 = 2.0 * abs(a_minus) / (1.0 + a_minus**2)
    concurrences = [c1, 1.0, 1.0, c4]
    vectors = [v1, v2, v3, v4]
    return [
        AnalyticEigenstate(energy=float(e), vector=v, concurrence=float(c))
        for e, v, c in zip(energies, vectors, concurrences)
    ]


def thermal_weights(zeta: float, z: float) -> np.ndarray:
    """Boltzmann populations P_i of the four zero-field eigenstates."""
    if z < 0:
        raise ValueError("reduced temperature must be non-negative")
    energies = np.array([s.energy for s in analytic_eigensystem(zeta)])
    if z == 0.0:
        w = (energies - energies[0] < 1e-12).astype(float)
    else:
        w = np.exp(-(energies - energies[0]) / z)
    return w / w.sum()


def analytic_thermal_concurrence(zeta: float, z: float) -> float:
    """Thermal concurrence max{0, -2(b + g)} of the zero-field mixture."""
    p = thermal_weights(zeta, z)
    b = 0.5 * (p[1] + p[2])
    if zeta == 0.0:
        g = 0.0
    else:
        a_plus, a_minus = _alphas(zeta)
        g = (
            -a_plus / (1.0 + a_plus**2) * p[0]
            - a_minus / (1.0 + a_minus**2) * p[3]
        )
    return float(max(0.0, -2.0 * (b + g)))


def approx_critical_coupling(z: float, omega_over_b: float) -> float:
    """First-order estimate 12 exp(-2/z) cosh(y / 3z) of the onset coupling."""
    if z == 0.0:
        return 0.0
    return float(12.0 * np.exp(-2.0 / z) * np.cosh(omega_over_b / (3.0 * z)))
