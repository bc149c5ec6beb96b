import math

import numpy as np
import pytest

from schrodlab.momentum import (
    HYDROGEN_A0,
    DecayError,
    amplitude_at,
    decompose,
    hydrogen_amplitude_closed_form,
    momentum_amplitude,
    reconstruct,
)
from schrodlab.numerics import Wavefunction, radial_grid


@pytest.fixture(scope="module")
def closed_1s():
    g = radial_grid()
    return Wavefunction(g, np.exp(-g.nodes) / math.sqrt(math.pi))


def test_amplitude_at_origin():
    assert HYDROGEN_A0 == pytest.approx(0.9003163, abs=1e-7)
    assert hydrogen_amplitude_closed_form(0.0) == HYDROGEN_A0


def test_closed_form_input_matches_closed_form_output(closed_1s):
    p = np.linspace(0.0, 10.0, 501)
    np.testing.assert_allclose(amplitude_at(closed_1s, p).real, hydrogen_amplitude_closed_form(p), atol=1e-8)


def test_solved_state(hydrogen):
    amp = decompose(hydrogen[0].psi)
    assert amp.origin_value == pytest.approx(HYDROGEN_A0, abs=1e-3)
    np.testing.assert_allclose(amp.values, hydrogen_amplitude_closed_form(amp.p), atol=1e-3)
    assert amp.norm_squared() == pytest.approx(1.0, abs=1e-4)


def test_truncation_warning_for_hydrogen(closed_1s):
    # a(20)/a(0) ~ 6e-6 is above the 1e-6 level
    amp = decompose(closed_1s)
    assert amp.truncated
    assert "truncated" in amp.warnings[0]


def test_no_warning_for_gaussian():
    g = radial_grid(10.0, 2000)
    psi = Wavefunction(g, np.exp(-g.nodes**2)).normalized()
    amp = decompose(psi, 10.0, 1000)
    assert not amp.truncated
    # Gaussian maps to Gaussian: a(p) ~ exp(-p^2/4)
    np.testing.assert_allclose(amp.values / amp.origin_value, np.exp(-amp.p**2 / 4), atol=1e-8)


def test_undecayed_input_rejected():
    g = radial_grid(5.0, 500)
    with pytest.raises(DecayError):
        decompose(Wavefunction(g, np.exp(-g.nodes)))


@pytest.mark.parametrize("level", [0, 1])
def test_round_trip(hydrogen, level):
    psi = hydrogen[level].psi
    back = reconstruct(decompose(psi), psi.grid)
    sel = psi.grid.nodes <= 20
    assert np.max(np.abs(back.values - psi.values)[sel]) < 2e-4


def test_tail_correction_matters(hydrogen):
    psi = hydrogen[0].psi
    amp = decompose(psi)
    raw = reconstruct(amp, psi.grid, tail=None)
    fixed = reconstruct(amp, psi.grid)
    err = lambda w: np.max(np.abs(w.values - psi.values))
    assert err(fixed) < 0.1 * err(raw)
    with pytest.raises(ValueError):
        reconstruct(amp, psi.grid, tail="gaussian")


def test_wrap_samples():
    pg = radial_grid(10.0, 1000)
    amp = momentum_amplitude(pg, hydrogen_amplitude_closed_form(pg.nodes))
    assert amp.origin_value == pytest.approx(HYDROGEN_A0, abs=1e-6)
    with pytest.raises(ValueError):
        momentum_amplitude(pg, np.ones(3))
