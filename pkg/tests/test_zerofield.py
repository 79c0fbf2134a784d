"""Closed-form zero-field solution and its agreement with the numerics."""

import numpy as np
import pytest

from pendular.entanglement import eigenstate_concurrences, thermal_concurrence
from pendular.pair import PairConfig, diagonalize_pair
from pendular.zerofield import (
    analytic_eigensystem,
    analytic_thermal_concurrence,
    approx_critical_coupling,
    thermal_weights,
)


def test_energies_at_unit_zeta():
    energies = [s.energy for s in analytic_eigensystem(1.0)]
    root2 = np.sqrt(2.0)
    assert energies == pytest.approx([2 - 2 * root2, 0.0, 4.0, 2 + 2 * root2], abs=1e-14)


def test_middle_states_are_bell_states():
    states = analytic_eigensystem(0.8)
    inv = 1.0 / np.sqrt(2.0)
    assert states[1].vector == pytest.approx([0.0, -inv, inv, 0.0])
    assert states[2].vector == pytest.approx([0.0, inv, inv, 0.0])
    assert states[1].concurrence == 1.0
    assert states[2].concurrence == 1.0


def test_ground_concurrence_closed_form():
    zeta = 1.0
    a_plus = 1.0 + np.sqrt(2.0)
    expected = 2.0 * a_plus / (1.0 + a_plus**2)
    assert analytic_eigensystem(zeta)[0].concurrence == pytest.approx(expected, abs=1e-14)


def test_zero_coupling_limit():
    states = analytic_eigensystem(0.0)
    assert [s.energy for s in states] == pytest.approx([0.0, 2.0, 2.0, 4.0])
    assert states[0].concurrence == 0.0
    assert states[3].concurrence == 0.0
    assert states[0].vector == pytest.approx([1.0, 0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        analytic_eigensystem(-0.1)


def test_vectors_are_hamiltonian_eigenvectors():
    # Cross-check the closed forms against the numerical 4x4 problem.
    y = 2.4
    ham = np.diag([0.0, 2.0, 2.0, 4.0])
    ham[0, 3] = ham[3, 0] = y / 3.0
    ham[1, 2] = ham[2, 1] = y / 3.0
    for state in analytic_eigensystem(y / 6.0):
        assert np.allclose(ham @ state.vector, state.energy * state.vector, atol=1e-12)


def test_thermal_weights_normalized():
    w = thermal_weights(0.5, 0.7)
    assert w.sum() == pytest.approx(1.0, abs=1e-14)
    assert np.all(np.diff(w) <= 1e-14)  # higher states never more populated
    with pytest.raises(ValueError):
        thermal_weights(0.5, -1.0)


def test_numerical_pipeline_matches_closed_forms():
    for y in (0.1, 1.0, 6.0):
        cfg = PairConfig(x=0.0, x_prime=0.0, y=y)
        eig = diagonalize_pair(cfg)
        analytic = analytic_eigensystem(y / 6.0)
        assert eig.energies == pytest.approx([s.energy for s in analytic], abs=1e-10)
        conc = eigenstate_concurrences(cfg)
        assert conc == pytest.approx([s.concurrence for s in analytic], abs=1e-10)
        for z in (0.1, 0.5, 2.0):
            assert thermal_concurrence(cfg, z) == pytest.approx(
                analytic_thermal_concurrence(y / 6.0, z), abs=1e-9
            )


def test_thermal_concurrence_zero_coupling_is_zero():
    assert analytic_thermal_concurrence(0.0, 0.5) == 0.0


def test_approximate_onset_formula():
    assert approx_critical_coupling(0.0, 1.0) == 0.0
    v = approx_critical_coupling(0.5, 1.0)
    assert v == pytest.approx(12.0 * np.exp(-4.0) * np.cosh(1.0 / 1.5), abs=1e-12)
