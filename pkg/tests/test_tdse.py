import math
import warnings

import numpy as np
import pytest

from schrodlab.bound_states import solve_1d
from schrodlab.numerics import radial_grid, uniform_grid
from schrodlab.potentials import free, harmonic, yukawa
from schrodlab.tdse import (
    BoundaryContamination,
    PropagationRun,
    absorbing_mask,
    gaussian_packet,
    line_potential,
    propagate,
    reverse,
    scattering_energy_audit,
    stationary_phase_error,
)


@pytest.fixture
def line():
    return uniform_grid(-60.0, 60.0, 2048)


def test_packet_normalised(line):
    psi = gaussian_packet(line, 0.0, 1.0, 2.0)
    assert psi.norm_squared() == pytest.approx(1.0, rel=1e-12)


def test_zero_steps_is_identity(line):
    psi = gaussian_packet(line, -5.0, 1.0, 2.0)
    run = propagate(PropagationRun(psi, line_potential(free(), line), 0.01, 0))
    assert len(run.snapshots) == 1
    np.testing.assert_array_equal(run.snapshots[0], psi.values)


def test_time_reversal(line):
    psi = gaussian_packet(line, -5.0, 1.0, 2.0)
    v = line_potential(yukawa(1.0, -1.0), line, softening=1.0)
    fwd = propagate(PropagationRun(psi, v, 0.01, 500, stride=500))
    back = propagate(reverse(fwd))
    np.testing.assert_allclose(back.snapshots[-1], psi.values, atol=1e-8)


def test_free_spreading(line):
    # <x^2> - <x>^2 grows as sigma^2 + t^2 / (4 sigma^2)
    sigma = 2.0
    psi = gaussian_packet(line, 0.0, 0.0, sigma)
    run = propagate(PropagationRun(psi, np.zeros(line.n), 0.01, 1000, stride=250))
    x = line.nodes
    for t, s in zip(run.times, run.snapshots):
        rho = np.abs(s) ** 2 * line.h
        var = np.dot(x**2, rho) - np.dot(x, rho) ** 2
        assert var == pytest.approx(sigma**2 + t**2 / (4 * sigma**2), rel=1e-8)


def test_free_packet_moves_at_group_velocity(line):
    run = propagate(PropagationRun(gaussian_packet(line, -10.0, 2.0, 2.0), np.zeros(line.n), 0.01, 500, stride=500))
    assert run.table("x")[-1] == pytest.approx(-10.0 + 2.0 * 5.0, abs=1e-8)
    assert run.table("p")[-1] == pytest.approx(2.0, abs=1e-8)


def test_stationary_state_phase():
    g = uniform_grid(-10.0, 10.0, 1001)
    psi0 = solve_1d(harmonic(), 1, g)[0].psi
    run = propagate(PropagationRun(psi0, line_potential(harmonic(), g), 2 * math.pi / 800, 800, stride=800))
    overlap, phase = stationary_phase_error(run, 0.5)
    assert overlap == pytest.approx(1.0, abs=1e-6)
    assert abs(phase) < 1e-3


def test_norm_conserved_without_absorption(line):
    run = propagate(PropagationRun(gaussian_packet(line, 0.0, 0.5, 3.0), line_potential(harmonic(0.1), line), 0.01, 2000, stride=100))
    norms = run.table("norm")
    assert np.max(np.abs(norms - norms[0])) < 1e-10


def test_boundary_contamination_detected():
    g = uniform_grid(-20.0, 20.0, 512)
    psi = gaussian_packet(g, 10.0, 3.0, 1.0)
    with pytest.raises(BoundaryContamination) as info:
        propagate(PropagationRun(psi, np.zeros(g.n), 0.01, 1000))
    assert info.value.step > 0


def test_absorbing_mask_shape():
    g = uniform_grid(0, 1, 100)
    m = absorbing_mask(g)
    assert m[50] == 1.0 and m[0] < 0.01 and m[-1] < 0.01
    np.testing.assert_allclose(m, m[::-1])


def test_absorption_removes_outgoing_flux():
    g = uniform_grid(-20.0, 20.0, 512)
    run = propagate(PropagationRun(gaussian_packet(g, 5.0, 3.0, 1.0), np.zeros(g.n), 0.01, 1500, stride=1500, absorbing=True))
    assert run.table("norm")[-1] < 0.05


def test_scattering_ledger():
    g = uniform_grid(-100.0, 100.0, 4096)
    barrier = line_potential(yukawa(1.0, strength=-1.0), g, softening=1.0)
    run = propagate(PropagationRun(gaussian_packet(g, -25.0, 2.0, 3.0), barrier, 0.005, 6000, stride=100, absorbing=True))
    ledger = scattering_energy_audit(run)
    assert ledger.constant
    assert ledger.exchanged
    assert ledger.e_in == pytest.approx(2.0 + 1 / (8 * 9), rel=1e-3)


def test_large_potential_phase_warns(line):
    psi = gaussian_packet(line, 0.0, 0.0, 2.0)
    with pytest.warns(UserWarning, match="dt"):
        propagate(PropagationRun(psi, np.full(line.n, 100.0), 0.01, 1))


def test_run_validation(line):
    psi = gaussian_packet(line, 0.0, 0.0, 2.0)
    with pytest.raises(ValueError):
        PropagationRun(psi, np.zeros(10), 0.01, 1)
    with pytest.raises(ValueError):
        PropagationRun(psi, np.zeros(line.n), 0.01, -1)
    g = radial_grid(10.0, 100)
    from schrodlab.numerics import Wavefunction

    with pytest.raises(ValueError):
        PropagationRun(Wavefunction(g, np.exp(-g.nodes)), np.zeros(g.n), 0.01, 1)
    with pytest.raises(ValueError):
        scattering_energy_audit(PropagationRun(psi, np.zeros(line.n), 0.01, 1))
