"""Transition frequencies of the coupled pair and the CNOT-enabling shift.

Frequencies are first-order diagonal expectation values of the pair
Hamiltonian (dipole-dipole terms included to first order), in units of
the rotational constant B.  An exact mode based on eigenvalue
differences of the full 4x4 Hamiltonian is available for comparison;
the two agree to O(y^2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence, weak_coupling_concurrence
from .pair import PairConfig, diagonalize_pair
from .rotor import BasisTruncation, cosine_elements, qubit_states

__all__ = [
    "TransitionSet",
    "transition_frequencies",
    "delta_omega",
    "exact_transition_frequencies",
    "alpha_sweep",
    "cnot_report",
]


@dataclass(frozen=True)
class TransitionSet:
    """The four conditional qubit transition frequencies (units of B).

    w1: site-2 flip with site 1 in |0>;  w2: site-1 flip with site 2 in |1>;
    w3: site-1 flip with site 2 in |0>;  w4: site-2 flip with site 1 in |1>.
    delta_omega = w2 - w3 = w4 - w1 is the dipole-dipole splitting that a
    CNOT pulse must resolve; addressing_gap = w1 - w3 separates the sites.
    """

    w1: float
    w2: float
    w3: float
    w4: float
    delta_omega: float
    addressing_gap: float


def transition_frequencies(cfg: PairConfig, trunc: BasisTruncation | None = None) -> TransitionSet:
    """First-order transition frequencies of the coupled pair."""
    s0, s1 = qubit_states(cfg.x, trunc)
    sp0, sp1 = qubit_states(cfg.x_prime, trunc)
    dw = s1.energy - s0.energy
    dwp = sp1.energy - sp0.energy
    ce = cosine_elements(cfg.x, trunc)
    cep = cosine_elements(cfg.x_prime, trunc)
    oa = cfg.omega_alpha

    w1 = dwp + oa * ce.c0 * (cep.c1 - cep.c0)
    w2 = dw + oa * cep.c1 * (ce.c1 - ce.c0)
    w3 = dw + oa * cep.c0 * (ce.c1 - ce.c0)
    w4 = dwp + oa * ce.c1 * (cep.c1 - cep.c0)
    return TransitionSet(
        w1=w1, w2=w2, w3=w3, w4=w4, delta_omega=w4 - w1, addressing_gap=w1 - w3
    )


def delta_omega(cfg: PairConfig, trunc: BasisTruncation | None = None) -> float:
    """Frequency shift Omega_alpha (C1 - C0)(C1' - C0') in units of B."""
    ce = cosine_elements(cfg.x, trunc)
    cep = cosine_elements(cfg.x_prime, trunc)
    return cfg.omega_alpha * (ce.c1 - ce.c0) * (cep.c1 - cep.c0)


def exact_transition_frequencies(cfg: PairConfig, trunc: BasisTruncation | None = None) -> TransitionSet:
    """Transitions as eigenvalue differences of the full pair Hamiltonian.

    Eigenstates are matched to the product states they dominate, so this
    is meaningful only in the weak-coupling regime where that
    correspondence is unambiguous.
    """
    eig = diagonalize_pair(cfg, trunc)
    # e[k] = energy of the eigenstate dominated by product state k
    e = np.empty(4)
    for k in range(4):
        e[k] = eig.energies[np.argmax(np.abs(eig.vectors[k, :]))]
    w1 = e[1] - e[0]
    w2 = e[3] - e[1]
    w3 = e[2] - e[0]
    w4 = e[3] - e[2]
    return TransitionSet(
        w1=w1, w2=w2, w3=w3, w4=w4, delta_omega=w4 - w1, addressing_gap=w1 - w3
    )


def alpha_sweep(
    x: float,
    x_prime: float,
    y: float,
    alpha_grid: np.ndarray,
    trunc: BasisTruncation | None = None,
) -> list[tuple[float, float, float]]:
    """(alpha, delta_omega, ground-state concurrence) along an alpha grid."""
    rows = []
    for alpha in np.asarray(alpha_grid, dtype=float):
        cfg = PairConfig(x=x, x_prime=x_prime, y=y, alpha=alpha)
        eig = diagonalize_pair(cfg, trunc)
        c_ground = concurrence(np.outer(eig.vectors[:, 0], eig.vectors[:, 0]))
        rows.append((float(alpha), delta_omega(cfg, trunc), c_ground))
    return rows


def cnot_report(
    x: float,
    x_prime_list: list[float],
    omega_alpha: float,
    trunc: BasisTruncation | None = None,
    fitted: bool = False,
) -> dict:
    """Feasibility numbers for a CNOT implementation at given site fields.

    Returns the control-site column plus one column per x' with the
    transition gap, frequency shift and weak-coupling concurrence, all in
    reduced units.  omega_alpha is the effective coupling y(1-3cos^2 a).

    With fitted=True the energy gap and cosine elements come from the
    published reduced-variable fit formulas instead of the exact
    eigensystem; the two differ by up to ~1% at small x, the quoted
    accuracy of those fits.  The concurrence always uses the exact
    weak-coupling slopes.
    """

    def site_column(xi: float) -> dict:
        if fitted:
            from .fitting import ModelFamily, evaluate_fitted

            w_gap = float(evaluate_fitted(ModelFamily.W_GAP, xi))
            c0 = float(evaluate_fitted(ModelFamily.C0_POWER, xi))
            c1 = float(evaluate_fitted(ModelFamily.C1_DOUBLE_SIGMOID, xi))
        else:
            s0, s1 = qubit_states(xi, trunc)
            ce = cosine_elements(xi, trunc)
            w_gap, c0, c1 = s1.energy - s0.energy, ce.c0, ce.c1
        return {"x": xi, "w_gap": w_gap, "c0": c0, "c1": c1, "dc": c0 - c1}

    base = site_column(x)
    columns = []
    for xp in x_prime_list:
        col = site_column(xp)
        if fitted:
            col["w1_minus_w3"] = (
                col["w_gap"] - base["w_gap"]
                + omega_alpha * (base["c0"] * (col["c1"] - col["c0"])
                                 - col["c0"] * (base["c1"] - base["c0"]))
            )
            col["delta_omega"] = omega_alpha * (base["c1"] - base["c0"]) * (col["c1"] - col["c0"])
        else:
            cfg = PairConfig(x=x, x_prime=xp, y=omega_alpha, alpha=np.pi / 2)
            ts = transition_frequencies(cfg, trunc)
            col["w1_minus_w3"] = ts.addressing_gap
            col["delta_omega"] = ts.delta_omega
        col["c12"] = weak_coupling_concurrence(x, xp, omega_alpha, trunc)
        columns.append(col)
    return {"control": base, "targets": columns, "omega_alpha": omega_alpha}
