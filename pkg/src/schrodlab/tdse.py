"""Split-step (Strang) propagation of the time-dependent Schrodinger equation in 1D.

One step is ``exp(-i V dt/2) exp(-i T dt) exp(-i V dt/2)`` with the kinetic
factor applied exactly in Fourier space. The only time-discretisation error
is therefore the O(dt^2) splitting error. The grid is treated as periodic,
with an optional cos^2 absorbing layer at both ends.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .numerics import UNIFORM, Wavefunction
from .potentials import evaluate


class BoundaryContamination(RuntimeError):
    def __init__(self, step, amplitude):
        self.step = step
        self.amplitude = amplitude
        super().__init__(
            f"|psi| = {amplitude:.2e} at the grid boundary after step {step}; enlarge the grid or enable absorption"
        )


def line_potential(pot, grid, center=0.0, softening=0.0):
    """Sample a radial potential along a line, at ``r = sqrt((x - center)^2 + softening^2)``.

    A non-zero ``softening`` removes the 1/r singularity of Coulomb/Yukawa
    kinds (soft-core model), which 1D grids need.
    """
    x = grid.nodes - center
    r = np.sqrt(x * x + softening * softening) if softening else np.abs(x)
    return np.asarray(evaluate(pot, r), dtype=float)


def gaussian_packet(grid, x0, p0, sigma):
    """Normalised Gaussian ``exp(-(x-x0)^2/(4 sigma^2) + i p0 x)``; sigma is the position spread."""
    x = grid.nodes
    psi = np.exp(-((x - x0) ** 2) / (4.0 * sigma**2) + 1j * p0 * x)
    return Wavefunction(grid, psi).normalized()


def absorbing_mask(grid, fraction=0.1):
    """1 in the interior, falling as cos^2 to 0 over the outer ``fraction`` of each end."""
    n = grid.n
    width = max(1, int(round(fraction * n)))
    mask = np.ones(n)
    ramp = np.cos(0.5 * np.pi * (np.arange(width, 0, -1) / width)) ** 2
    mask[:width] = ramp
    mask[n - width :] = ramp[::-1]
    return mask


@dataclass
class PropagationRun:
    psi0: Wavefunction
    potential: np.ndarray
    dt: float
    steps: int
    stride: int = 1
    absorbing: bool = False
    boundary_tol: float = 1e-4
    times: list = field(default_factory=list)
    snapshots: list = field(default_factory=list)
    observables: list = field(default_factory=list)

    def __post_init__(self):
        g = self.psi0.grid
        if g.kind != UNIFORM:
            raise ValueError("time propagation needs a uniform 1D grid")
        self.potential = np.asarray(self.potential, dtype=float)
        if self.potential.shape != (g.n,):
            raise ValueError("potential samples do not match the grid")
        if self.steps < 0 or self.stride < 1:
            raise ValueError("steps must be >= 0 and stride >= 1")

    @property
    def grid(self):
        return self.psi0.grid

    @property
    def final(self):
        return Wavefunction(self.grid, self.snapshots[-1])

    def table(self, name):
        return np.array([o[name] for o in self.observables])


def _wavenumbers(grid):
    return 2.0 * np.pi * np.fft.fftfreq(grid.n, d=grid.h)


def observables(psi, v, k, x, dx):
    """norm, KE, PE, E = KE + PE, <x>, <p> of grid samples (kinetic terms computed spectrally)."""
    rho = np.abs(psi) ** 2
    phat2 = np.abs(np.fft.fft(psi)) ** 2 * (dx / len(psi))
    ke = 0.5 * float(np.dot(k * k, phat2))
    pe = float(np.dot(v, rho)) * dx
    return {
        "norm": float(rho.sum() * dx),
        "KE": ke,
        "PE": pe,
        "E": ke + pe,
        "x": float(np.dot(x, rho)) * dx,
        "p": float(np.dot(k, phat2)),
    }


def propagate(run):
    """Advance ``run.psi0`` by ``run.steps`` Strang steps, storing every ``stride``-th state.

    The state at t = 0 is always stored.  With ``steps = 0`` the single
    snapshot equals the input exactly.  Without absorption, the run raises
    :class:`BoundaryContamination` as soon as |psi| at either grid end exceeds
    ``boundary_tol``.
    """
    g = run.grid
    x, dx, v, dt = g.nodes, g.h, run.potential, run.dt
    psi = np.array(run.psi0.values, dtype=complex)
    support = np.abs(psi) > 1e-8 * np.abs(psi).max()
    if abs(dt) * np.max(np.abs(v[support]), initial=0.0) >= 0.5:
        warnings.warn("dt * max|V| >= 0.5 over the initial support; potential phase is poorly resolved")
    k = _wavenumbers(g)
    half_v = np.exp(-0.5j * dt * v)
    kin = np.exp(-0.5j * dt * k * k)
    mask = absorbing_mask(g) if run.absorbing else None

    def record(t, state):
        obs = observables(state, v, k, x, dx)
        obs["t"] = t
        run.times.append(t)
        run.snapshots.append(state.copy())
        run.observables.append(obs)

    run.times.clear()
    run.snapshots.clear()
    run.observables.clear()
    record(0.0, psi)
    for step in range(1, run.steps + 1):
        psi = half_v * np.fft.ifft(kin * np.fft.fft(half_v * psi))
        if mask is not None:
            psi *= mask
        else:
            edge = max(abs(psi[0]), abs(psi[-1]))
            if edge > run.boundary_tol:
                raise BoundaryContamination(step, float(edge))
        if step % run.stride == 0 or step == run.steps:
            record(step * dt, psi)
    return run


def reverse(run):
    """A new run starting from ``run``'s final state with the time step negated."""
    return PropagationRun(
        run.final, run.potential, -run.dt, run.steps, run.stride, run.absorbing, run.boundary_tol
    )


def stationary_phase_error(run, energy):
    """Overlap magnitude and phase error of the final state against exp(-i E t) psi0."""
    g = run.grid
    overlap = np.vdot(run.psi0.values, run.snapshots[-1]) * g.h
    t = run.times[-1]
    err = np.angle(overlap * np.exp(1j * energy * t))
    return float(abs(overlap)), float(err)


@dataclass(frozen=True)
class EnergyLedger:
    t: np.ndarray
    ke: np.ndarray
    pe: np.ndarray
    e: np.ndarray
    e_in: float
    max_rel_drift: float
    tol: float

    @property
    def constant(self):
        return bool(self.max_rel_drift < self.tol)

    @property
    def exchanged(self):
        """KE dipped below its initial value at some snapshot (energy moved into PE)."""
        return bool(np.min(self.ke) < self.ke[0])


def scattering_energy_audit(run, tol=1e-5):
    """Per-snapshot KE, PE and E ledger of a completed run, with E checked against E(t=0)."""
    if not run.observables:
        raise ValueError("run has not been propagated")
    t = run.table("t")
    ke, pe = run.table("KE"), run.table("PE")
    e = ke + pe
    e_in = float(e[0])
    drift = float(np.max(np.abs(e - e_in)) / abs(e_in)) if e_in else float(np.max(np.abs(e)))
    return EnergyLedger(t, ke, pe, e, e_in, drift, tol)
