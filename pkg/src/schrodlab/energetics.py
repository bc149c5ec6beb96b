"""Pointwise energy densities of a stationary state and their integrals.

For a wavefunction psi in a potential V (atomic units) the module computes

* ``ke = 1/2 |grad psi|^2``: kinetic-energy density, non-negative everywhere;
* ``c  = -1/2 Re(psi* lap psi)``: the middle term of the stationary
  Schrodinger equation. It has the same integral as ``ke`` but different
  pointwise values;
* ``pe = V |psi|^2``: potential-energy density;
* ``e_field = c + pe``: equals ``E |psi|^2`` for an eigenstate.

Derivatives default to the fourth-order stencils. With second order, the
difference between the two kinetic integrals is dominated by O(h^2)
discretisation error, not by the boundary term.
"""

from dataclasses import dataclass, field

import numpy as np

from .numerics import (
    RADIAL,
    extrapolate_to_origin,
    gradient,
    integrate_volume,
    second_derivative,
)
from .potentials import COULOMB, HARMONIC, evaluate

DECAY_THRESHOLD = 1e-8


class CrossingError(ValueError):
    """Raised when C(r) does not change sign exactly once."""

    def __init__(self, candidates):
        self.candidates = list(candidates)
        super().__init__(
            f"expected one sign change of C(r), found {len(self.candidates)}: {self.candidates}"
        )


def potential_on_grid(pot, grid):
    """V at every node; uniform grids are evaluated at |x| (symmetric potentials)."""
    x = grid.nodes if grid.kind == RADIAL else np.abs(grid.nodes)
    return np.asarray(evaluate(pot, x), dtype=float)


def _decays(psi):
    a = np.abs(psi.values)
    peak = a.max()
    if peak == 0:
        return False
    ends = a[-1] if psi.grid.kind == RADIAL else max(a[0], a[-1])
    return bool(ends <= DECAY_THRESHOLD * peak)


@dataclass(frozen=True)
class EnergyDensities:
    grid: object
    potential: object
    psi2: np.ndarray
    ke: np.ndarray
    c: np.ndarray
    c_imag: np.ndarray
    pe: np.ndarray
    e_field: np.ndarray
    ke_total: float
    c_total: float
    pe_total: float
    e_total: float
    surface_equivalent: bool
    origin: dict = field(default_factory=dict)

    @property
    def surface_term_gap(self):
        """|KE_total - C_total| / KE_total."""
        return abs(self.ke_total - self.c_total) / abs(self.ke_total)

    def at(self, r):
        """Linearly interpolated field values at coordinate ``r``."""
        x = self.grid.nodes
        return {
            name: float(np.interp(r, x, getattr(self, name)))
            for name in ("psi2", "ke", "c", "pe", "e_field")
        }


def energy_densities(psi, pot, order=4):
    """Pointwise KE, C, PE and E fields of ``psi`` in ``pot``, plus their integrals.

    ``e_total`` is ``C_total + PE_total``, the expectation value of the
    Hamiltonian.  ``KE_total`` and ``C_total`` agree when psi decays at the
    grid ends; if it does not, ``surface_equivalent`` is False and both are
    still reported.  On radial grids ``origin`` holds quadratic extrapolations
    of the finite fields (``psi2``, ``ke``, ``e_field``) to r = 0.
    """
    g = psi.grid
    values = psi.values
    grad = gradient(psi, order)
    lap = second_derivative(psi, order)
    psi2 = np.abs(values) ** 2
    ke = 0.5 * np.abs(grad) ** 2
    cc = -0.5 * np.conj(values) * lap
    pe = potential_on_grid(pot, g) * psi2
    c = cc.real
    e_field = c + pe

    ke_total = integrate_volume(ke, g)
    c_total = integrate_volume(c, g)
    pe_total = integrate_volume(pe, g)

    origin = {}
    if g.kind == RADIAL:
        origin = {
            "psi2": float(extrapolate_to_origin(psi2, g)),
            "ke": float(extrapolate_to_origin(ke, g)),
            "e_field": float(extrapolate_to_origin(e_field, g)),
            "extrapolated": True,
        }
    return EnergyDensities(
        grid=g,
        potential=pot,
        psi2=psi2,
        ke=ke,
        c=c,
        c_imag=cc.imag,
        pe=pe,
        e_field=e_field,
        ke_total=ke_total,
        c_total=c_total,
        pe_total=pe_total,
        e_total=c_total + pe_total,
        surface_equivalent=_decays(psi),
        origin=origin,
    )


@dataclass(frozen=True)
class ResidualField:
    values: np.ndarray
    sup_norm: float
    sup_location: float


def residual(psi, pot, energy, order=4):
    """Pointwise ``E psi + 1/2 lap psi - V psi``; zero at every node for an eigenpair.

    Pass the stencil order a solver used to check its own discrete equation
    (``order=2`` for :func:`schrodlab.bound_states.solve_radial`).
    """
    g = psi.grid
    n = (
        energy * psi.values
        + 0.5 * second_derivative(psi, order)
        - potential_on_grid(pot, g) * psi.values
    )
    i = int(np.argmax(np.abs(n)))
    return ResidualField(n, float(np.abs(n[i])), float(g.nodes[i]))


@dataclass(frozen=True)
class Check:
    name: str
    computed: float
    expected: float
    tol: float
    relative: bool = False

    @property
    def deviation(self):
        d = abs(self.computed - self.expected)
        return d / abs(self.expected) if self.relative and self.expected else d

    @property
    def passed(self):
        return bool(self.deviation <= self.tol)


_VIRIAL_EXPONENT = {COULOMB: -1, HARMONIC: 2}


def virial_report(dens, atol=1e-4, rtol=1e-4):
    """Global virial balance and, for Coulomb states, the local identities at the Bohr radius.

    Global: ``2 KE_total - n PE_total = 0`` for ``V ~ r^n`` (Coulomb n = -1,
    harmonic n = 2).  Local, at ``r0 = 1/strength``:
    ``KE(r0) = C(r0)``, ``E(r0) = KE(r0) + PE(r0)`` and ``KE(r0) = -PE(r0)/2``.
    Local checks hold for the 1s state; for other states they are reported
    with whatever deviation they have.
    """
    pot = dens.potential
    checks = []
    n = _VIRIAL_EXPONENT.get(pot.kind)
    if n is not None:
        checks.append(
            Check("virial 2KE - n*PE", 2 * dens.ke_total - n * dens.pe_total, 0.0, atol)
        )
    if pot.kind == COULOMB and dens.grid.kind == RADIAL:
        at = dens.at(1.0 / pot.strength)
        checks += [
            Check("KE(r0) = C(r0)", at["c"], at["ke"], rtol, relative=True),
            Check("E(r0) = KE(r0) + PE(r0)", at["e_field"], at["ke"] + at["pe"], rtol, relative=True),
            Check("KE(r0) = -PE(r0)/2", at["ke"], -0.5 * at["pe"], rtol, relative=True),
        ]
    return checks


def crossing_radii(dens, min_density=1e-12):
    """All sign changes of C, linearly interpolated, ignoring the far tail where |psi|^2 < min_density."""
    x, c = dens.grid.nodes, dens.c
    keep = dens.psi2 > min_density
    pos = c >= 0
    idx = np.nonzero((pos[:-1] != pos[1:]) & keep[:-1] & keep[1:])[0]
    return [float(x[i] - c[i] * (x[i + 1] - x[i]) / (c[i + 1] - c[i])) for i in idx]


def crossing_radius(dens, min_density=1e-12):
    """Radius where C changes sign; raises :class:`CrossingError` unless there is exactly one."""
    found = crossing_radii(dens, min_density)
    if len(found) != 1:
        raise CrossingError(found)
    return found[0]
