"""Hartree atomic units and conversions to laboratory units.

Internally every quantity is in atomic units (hbar = m_e = e = 1), so the
Bohr radius is 1 and the hydrogen ground energy is exactly -1/2.
Conversions are only applied at input/output boundaries.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class UnitSystem:
    hartree_in_ev: float = 27.2114
    bohr_in_meters: float = 5.29177e-11


ATOMIC = UnitSystem()


def _finite(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite value in unit conversion: {x!r}")
    return arr if arr.ndim else float(arr)


def hartree_to_ev(energy, units=ATOMIC):
    return _finite(energy) * units.hartree_in_ev


def ev_to_hartree(energy, units=ATOMIC):
    return _finite(energy) / units.hartree_in_ev


def bohr_to_meters(length, units=ATOMIC):
    return _finite(length) * units.bohr_in_meters


def meters_to_bohr(length, units=ATOMIC):
    return _finite(length) / units.bohr_in_meters
