"""Potential-energy functions of the electron, in atomic units.

These are potential *energies* (negative for attraction): Coulomb is
``-strength/r`` with ``strength = e^2 = 1`` by default.  Converting from the
proton's electric potential ``+e/r`` is the job of :mod:`schrodlab.born`.
"""

from dataclasses import dataclass

import numpy as np

COULOMB = "coulomb"
YUKAWA = "yukawa"
HARMONIC = "harmonic"
TABULATED = "tabulated"
FREE = "free"

KINDS = (COULOMB, YUKAWA, HARMONIC, TABULATED, FREE)


@dataclass(frozen=True)
class Potential:
    kind: str
    strength: float = 1.0
    mu: float = 0.0
    omega: float = 1.0
    table: tuple = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown potential kind {self.kind!r}; choose from {KINDS}")
        if self.kind == YUKAWA and self.mu < 0:
            raise ValueError("screening mu must be non-negative")
        if self.kind == TABULATED:
            if self.table is None:
                raise ValueError("tabulated potential needs a table")
            r, v = (np.asarray(c, dtype=float) for c in self.table)
            if r.ndim != 1 or r.shape != v.shape or len(r) < 2:
                raise ValueError("table needs two equal-length columns with at least 2 rows")
            if not (np.all(np.isfinite(r)) and np.all(np.isfinite(v))):
                raise ValueError("tabulated potential must be finite at every node")
            if np.any(np.diff(r) <= 0):
                raise ValueError("tabulated nodes must be strictly increasing")
            r.flags.writeable = False
            v.flags.writeable = False
            object.__setattr__(self, "table", (r, v))

    @property
    def singular(self):
        return self.kind in (COULOMB, YUKAWA)

    @property
    def coulomb_strength(self):
        """Coefficient Z of the -Z/r behaviour at the origin (0 for regular kinds)."""
        return self.strength if self.singular else 0.0

    @property
    def asymptote(self):
        """Limit of the potential as r -> infinity; bound states lie below it."""
        if self.kind == HARMONIC:
            return np.inf
        if self.kind == TABULATED:
            return float(self.table[1][-1])
        return 0.0


def coulomb(strength=1.0):
    return Potential(COULOMB, strength=strength)


def yukawa(mu, strength=1.0):
    return Potential(YUKAWA, strength=strength, mu=mu)


def harmonic(omega=1.0):
    return Potential(HARMONIC, omega=omega)


def free():
    return Potential(FREE, strength=0.0)


def tabulated(r, v):
    return Potential(TABULATED, table=(r, v))


def load_tabulated(path):
    """Read a two-column ``r value`` text file; ``#`` starts a comment."""
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise ValueError(f"{path}: expected 2 columns, found {data.shape[1]}")
    return tabulated(data[:, 0], data[:, 1])


def evaluate(pot, r):
    """Potential energy (hartree) at distance ``r`` (bohr); vectorised over ``r``."""
    r = np.asarray(r, dtype=float)
    if pot.singular and np.any(r <= 0):
        raise ValueError(f"{pot.kind} potential is singular: r must be > 0")
    if pot.kind == COULOMB:
        out = -pot.strength / r
    elif pot.kind == YUKAWA:
        out = -pot.strength * np.exp(-pot.mu * r) / r
    elif pot.kind == HARMONIC:
        out = 0.5 * pot.omega**2 * r**2
    elif pot.kind == TABULATED:
        out = np.interp(r, *pot.table)
    else:
        out = np.zeros_like(r)
    return out if out.ndim else float(out)
