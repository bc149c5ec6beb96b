import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schrodlab.born import (
    ForwardDivergence,
    MomentumTransfer,
    born_amplitude,
    momentum_transfer,
    potential_from_propagator,
    propagator_weight,
    rutherford,
    rutherford_limit,
    screened_potential,
)
from schrodlab.potentials import coulomb, harmonic, tabulated, yukawa


def test_momentum_transfer():
    assert momentum_transfer(1.0, math.pi).q == pytest.approx(2.0)
    assert momentum_transfer(1.0, 0.0).q == 0.0
    with pytest.raises(ValueError):
        MomentumTransfer(1.0, 1.0, q0=0.1)
    with pytest.raises(ValueError):
        momentum_transfer(0.0, 1.0)


def test_propagator_weight():
    assert propagator_weight(2.0) == 0.25
    assert propagator_weight(momentum_transfer(1.0, math.pi)) == pytest.approx(0.25)
    with pytest.raises(ForwardDivergence):
        propagator_weight(0.0)


def test_backscatter_closed_form():
    f = born_amplitude(yukawa(0.5), 1.0, math.pi).amplitude
    assert f == pytest.approx(2 / 4.25, rel=1e-14)


@pytest.mark.parametrize("theta", [0.0, 0.3, 1.0, 2.0, math.pi])
@pytest.mark.parametrize("mu", [0.5, 1.0, 2.0])
def test_quadrature_matches_closed_form(mu, theta):
    pot = yukawa(mu, strength=1.5)
    exact = born_amplitude(pot, 1.3, theta).amplitude
    got = born_amplitude(pot, 1.3, theta, "quadrature").amplitude
    assert got == pytest.approx(exact, rel=1e-6)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.2, 4.0), st.floats(0.1, 3.0))
def test_amplitude_depends_only_on_q(p, theta):
    q = 2 * p * math.sin(theta / 2)
    p2 = 2.0 * p
    theta2 = 2 * math.asin(min(1.0, q / (2 * p2)))
    a = born_amplitude(yukawa(0.7), p, theta).amplitude
    b = born_amplitude(yukawa(0.7), p2, theta2).amplitude
    assert a == pytest.approx(b, rel=1e-10)


def test_tabulated_yukawa_by_quadrature():
    r = np.linspace(1e-4, 40.0, 40001)
    pot = tabulated(r, -np.exp(-r) / r)
    got = born_amplitude(pot, 1.0, math.pi / 2, "quadrature").amplitude
    assert got == pytest.approx(2 / (2 + 1), rel=1e-3)
    with pytest.raises(ValueError):
        born_amplitude(pot, 1.0, 1.0, "analytic")


@pytest.mark.parametrize("pot", [coulomb(), yukawa(0.0)])
def test_unscreened_coulomb_refused(pot):
    with pytest.raises(ForwardDivergence, match="mu"):
        born_amplitude(pot, 1.0, 1.0)


def test_bad_inputs():
    with pytest.raises(ValueError):
        born_amplitude(harmonic(), 1.0, 1.0)
    with pytest.raises(ValueError):
        born_amplitude(yukawa(1.0), 1.0, 1.0, "simpson")
    with pytest.raises(ValueError):
        potential_from_propagator((0.01, 0.02, 0.04))


def test_screened_potential_is_yukawa():
    r = np.array([0.5, 1.0, 3.0, 8.0])
    v, err = screened_potential(0.3, r)
    np.testing.assert_allclose(v, -np.exp(-0.3 * r) / r, rtol=1e-6)
    assert err < 1e-6


def test_propagator_limit_is_coulomb():
    lim = potential_from_propagator()
    assert lim.max_rel_deviation < 1e-3
    assert lim.potential.kind == "tabulated"


def test_rutherford():
    assert rutherford(1.0, math.pi / 2) == pytest.approx(1.0)
    assert rutherford_limit(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-2)
    assert rutherford_limit(1.0, math.pi / 3, method="analytic") == pytest.approx(rutherford(1.0, math.pi / 3), rel=1e-6)
