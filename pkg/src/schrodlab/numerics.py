"""Grids, quadrature and finite-difference operators.

Two grid kinds are used throughout the package:

* ``uniform``: nodes ``start, start + h, ..., stop`` with ``h = (stop - start)/(n - 1)``.
* ``radial``: nodes ``h, 2h, ..., r_max`` with ``h = r_max / n``.  The origin is
  not a node, because the Coulomb potential diverges there.  It still takes part
  in the quadrature rule as a node whose integrand is zero. This holds for every
  radial integrand with the ``4 pi r^2`` volume element, and for ``u = r psi``.
  Its weight is kept in ``Grid.origin_weight`` so that
  ``weights.sum() + origin_weight == stop - start``.

Derivative operators default to second order: 3-point centred stencils in the
interior and one-sided second-order stencils at the ends. ``order=4`` selects
the 5-point family, which the energy-density code uses when it compares two
integrals that agree only up to a boundary term.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

UNIFORM = "uniform"
RADIAL = "radial"

UNIT_L2 = "unit-L2"
RAW = "raw"


def _trapezoid_weights(npts, h):
    w = np.full(npts, h)
    w[0] = w[-1] = 0.5 * h
    return w


def _simpson_weights(npts, h):
    """Composite Simpson weights; an odd number of intervals ends with a 3/8 panel."""
    m = npts - 1
    if m < 2:
        return _trapezoid_weights(npts, h)
    w = np.zeros(npts)
    even = m if m % 2 == 0 else m - 3
    if even > 0:
        w[: even + 1 : 2] += 2.0
        w[1:even:2] += 4.0
        w[0] -= 1.0
        w[even] -= 1.0
        w[: even + 1] *= h / 3.0
    if even != m:
        w[even : even + 4] += np.array([1.0, 3.0, 3.0, 1.0]) * (3.0 * h / 8.0)
    return w


_RULES = {"trapezoid": _trapezoid_weights, "simpson": _simpson_weights}


@dataclass(frozen=True)
class Grid:
    """Sampled coordinate axis (atomic units) with quadrature weights."""

    kind: str
    start: float
    stop: float
    n: int
    rule: str = "trapezoid"
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)
    origin_weight: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in (UNIFORM, RADIAL):
            raise ValueError(f"unknown grid kind {self.kind!r}")
        if self.rule not in _RULES:
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if int(self.n) < 3:
            raise ValueError(f"grid needs at least 3 nodes, got {self.n}")
        if not self.stop > self.start:
            raise ValueError("grid stop must exceed start")
        if self.kind == RADIAL and self.start != 0.0:
            raise ValueError("radial grids span (0, r_max]")
        h = self.h
        rule = _RULES[self.rule]
        if self.kind == UNIFORM:
            nodes = self.start + h * np.arange(self.n)
            nodes[-1] = self.stop
            weights = rule(self.n, h)
            origin = 0.0
        else:
            nodes = h * np.arange(1, self.n + 1)
            nodes[-1] = self.stop
            full = rule(self.n + 1, h)
            weights, origin = full[1:], float(full[0])
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "origin_weight", origin)

    @property
    def h(self):
        if self.kind == RADIAL:
            return (self.stop - self.start) / self.n
        return (self.stop - self.start) / (self.n - 1)

    @property
    def volume_element(self):
        """Per-node factor turning a density into an integrand: 4 pi r^2 or 1."""
        if self.kind == RADIAL:
            return 4.0 * np.pi * self.nodes**2
        return np.ones(self.n)

    def refined(self, factor):
        """Same domain and rule with ``factor`` times the node count."""
        return Grid(self.kind, self.start, self.stop, self.n * factor, self.rule)


def uniform_grid(start, stop, n, rule="trapezoid"):
    return Grid(UNIFORM, float(start), float(stop), int(n), rule)


def radial_grid(r_max=40.0, n=4000, rule="simpson"):
    """Radial grid ``h..r_max`` with ``h = r_max/n``; defaults suit hydrogen-like states."""
    return Grid(RADIAL, 0.0, float(r_max), int(n), rule)


@dataclass(frozen=True)
class Wavefunction:
    grid: Grid
    values: np.ndarray
    normalization: str = RAW

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"wavefunction has {values.shape} samples for a grid of {self.grid.n} nodes"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("wavefunction samples must be finite")
        if self.normalization not in (UNIT_L2, RAW):
            raise ValueError(f"unknown normalization tag {self.normalization!r}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def density(self):
        return np.abs(self.values) ** 2

    def norm_squared(self):
        return float(integrate(self.density * self.grid.volume_element, self.grid))

    def normalized(self):
        return Wavefunction(self.grid, self.values / np.sqrt(self.norm_squared()), UNIT_L2)


def integrate(f, grid):
    """Weighted sum of samples over ``grid`` (no volume element applied)."""
    f = np.asarray(f)
    if f.shape != (grid.n,):
        raise ValueError(f"{f.shape[0] if f.ndim else 'scalar'} samples for a grid of {grid.n} nodes")
    if not np.all(np.isfinite(f)):
        raise ValueError("cannot integrate non-finite samples")
    total = np.dot(grid.weights, f)
    return complex(total) if np.iscomplexobj(total) else float(total)


def integrate_volume(density, grid):
    """Integral of a density over space: ``dx`` on uniform grids, ``4 pi r^2 dr`` on radial ones."""
    return integrate(np.asarray(density) * grid.volume_element, grid)


@lru_cache(maxsize=None)
def _stencil(offsets, deriv):
    offsets = np.asarray(offsets, dtype=float)
    npts = len(offsets)
    A = np.array([offsets**k / factorial(k) for k in range(npts)])
    b = np.zeros(npts)
    b[deriv] = 1.0
    w = np.linalg.solve(A, b)
    w.flags.writeable = False
    return w


def finite_difference(values, h, deriv, order=2, left=None):
    """Apply a ``deriv``-th derivative stencil of accuracy ``order`` to uniform samples.

    ``left`` is an optional known value one spacing before the first sample.
    It joins the stencils but is not returned.
    """
    if deriv not in (1, 2) or order not in (2, 4):
        raise ValueError("supported: first/second derivatives at order 2 or 4")
    f = np.asarray(values)
    pad = left is not None
    if pad:
        f = np.concatenate([[left], f])
    N = len(f)
    half = (deriv + order - 1) // 2
    edge = min(deriv + order, N)
    out = np.zeros(N, dtype=np.result_type(f, float))

    w = _stencil(tuple(range(-half, half + 1)), deriv)
    width = 2 * half + 1
    if N >= width:
        for k in range(width):
            out[half : N - half] += w[k] * f[k : N - width + 1 + k]
    for i in list(range(min(half, N))) + list(range(max(N - half, half), N)):
        lo = 0 if i < half else N - edge
        offsets = tuple(range(lo - i, lo + edge - i))
        out[i] = np.dot(_stencil(offsets, deriv), f[lo : lo + edge])
    out /= h**deriv
    return out[1:] if pad else out


def gradient(psi, order=2):
    """d psi / dx (uniform) or d psi / dr (radial)."""
    return finite_difference(psi.values, psi.grid.h, 1, order)


def second_derivative(psi, order=2):
    """psi'' on uniform grids; the full radial Laplacian on radial grids.

    For radial samples the Laplacian of an s-wave is computed as ``(r psi)''/r``.
    ``r psi`` vanishes at the origin, so the stencils near the first node use
    that value instead of a one-sided fallback.
    """
    g = psi.grid
    if g.kind == UNIFORM:
        return finite_difference(psi.values, g.h, 2, order)
    r = g.nodes
    return finite_difference(r * psi.values, g.h, 2, order, left=0.0) / r


def extrapolate_to_origin(values, grid):
    """Quadratic extrapolation to r = 0 from the first three radial nodes."""
    if grid.kind != RADIAL:
        raise ValueError("origin extrapolation applies to radial grids")
    v = np.asarray(values)
    return 3.0 * v[0] - 3.0 * v[1] + v[2]
