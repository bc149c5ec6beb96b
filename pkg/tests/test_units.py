import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from schrodlab.units import (
    ATOMIC,
    bohr_to_meters,
    ev_to_hartree,
    hartree_to_ev,
    meters_to_bohr,
)


def test_conversion_factors():
    assert hartree_to_ev(1.0) == pytest.approx(27.2114)
    assert bohr_to_meters(1.0) == pytest.approx(5.29177e-11)
    assert hartree_to_ev(-0.5) == pytest.approx(-13.6057, abs=1e-4)


def test_arrays_pass_through():
    e = np.array([-0.5, -0.125])
    np.testing.assert_allclose(hartree_to_ev(e), e * ATOMIC.hartree_in_ev)


@pytest.mark.parametrize("fn", [hartree_to_ev, ev_to_hartree, bohr_to_meters, meters_to_bohr])
@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(fn, bad):
    with pytest.raises(ValueError):
        fn(bad)


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_energy_round_trip(x):
    assert ev_to_hartree(hartree_to_ev(x)) == pytest.approx(x, rel=1e-12, abs=1e-300)


@given(st.floats(1e-3, 1e6))
def test_length_round_trip(x):
    assert meters_to_bohr(bohr_to_meters(x)) == pytest.approx(x, rel=1e-12)
