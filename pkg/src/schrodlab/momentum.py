"""Plane-wave (momentum-space) decomposition of spherically symmetric states.

Convention (atomic units, symmetric transform)::

    a(p)   = (2 pi)^(-3/2) (4 pi / p) int_0^inf r sin(p r) psi(r) dr
    psi(r) = (2 pi)^(-3/2) (4 pi / r) int_0^inf p sin(p r) a(p) dp

so that ``int |a|^2 d^3p = int |psi|^2 d^3r``.  For hydrogen 1s this gives
``a(p) = (2 sqrt 2 / pi) / (1 + p^2)^2``.

The sine integrals are evaluated by direct quadrature on the radial grid.
No FFT is used.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import sici

from .numerics import RADIAL, Wavefunction, integrate, radial_grid

PREFACTOR = (2.0 * math.pi) ** -1.5 * 4.0 * math.pi
HYDROGEN_A0 = 2.0 * math.sqrt(2.0) / math.pi
TRUNCATION_LEVEL = 1e-6


class DecayError(ValueError):
    pass


@dataclass(frozen=True)
class MomentumAmplitude:
    """a(p) on the radial momentum grid ``(0, p_max]``, plus the series value at p = 0."""

    p_grid: object
    values: np.ndarray
    origin_value: float
    truncated: bool = False
    warnings: tuple = field(default_factory=tuple)

    @property
    def p(self):
        return self.p_grid.nodes

    def norm_squared(self):
        """int |a|^2 4 pi p^2 dp over the sampled range."""
        return float(integrate(np.abs(self.values) ** 2 * self.p_grid.volume_element, self.p_grid))


def hydrogen_amplitude_closed_form(p):
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("momentum magnitude must be non-negative")
    out = HYDROGEN_A0 / (1.0 + p**2) ** 2
    return out if out.ndim else float(out)


def _sine_transform(values, grid, k):
    """(2 pi)^(-3/2) (4 pi / k) int x sin(k x) f(x) dx on a radial grid, with the k -> 0 limit."""
    x = grid.nodes
    w = grid.weights * x * values
    k = np.atleast_1d(np.asarray(k, dtype=float))
    out = np.empty(k.shape, dtype=np.result_type(values, float))
    small = k == 0.0
    if np.any(small):
        out[small] = np.dot(w, x)
    big = ~small
    if np.any(big):
        kb = k[big]
        # chunked to bound the size of the sin(k x) matrix
        step = max(1, 4_000_000 // len(x))
        res = []
        for s in range(0, len(kb), step):
            ks = kb[s : s + step]
            res.append(np.sin(np.outer(ks, x)) @ w / ks)
        out[big] = np.concatenate(res)
    return PREFACTOR * out


def amplitude_at(psi, p):
    """a(p) of a radial wavefunction at arbitrary momenta (p = 0 allowed)."""
    if psi.grid.kind != RADIAL:
        raise ValueError("momentum decomposition needs a radial wavefunction")
    return _sine_transform(psi.values, psi.grid, p)


def decompose(psi, p_max=20.0, n_p=2000, decay=1e-8):
    """Momentum amplitude of a radial s-wave on ``(0, p_max]`` with ``n_p`` bins.

    Raises :class:`DecayError` if |psi(r_max)| exceeds ``decay`` relative to its
    maximum: the truncated sine integral would then be unreliable.  A
    truncation warning is attached when |a(p_max)| > 1e-6 max|a|.
    """
    if psi.grid.kind != RADIAL:
        raise ValueError("momentum decomposition needs a radial wavefunction")
    a = np.abs(psi.values)
    if a[-1] > decay * a.max():
        raise DecayError(
            f"psi(r_max={psi.grid.stop}) = {a[-1]:.3e} does not decay below {decay:g} of its peak"
        )
    pg = radial_grid(p_max, n_p)
    values = amplitude_at(psi, pg.nodes)
    a0 = amplitude_at(psi, 0.0)[0]
    if np.isrealobj(values) or np.max(np.abs(values.imag)) < 1e-10 * np.max(np.abs(values)):
        values = values.real
        a0 = a0.real
    return _with_truncation_check(pg, values, a0)


def _with_truncation_check(pg, values, a0):
    peak = max(np.max(np.abs(values)), abs(a0))
    ratio = abs(values[-1]) / peak if peak else 0.0
    warnings = ()
    if ratio > TRUNCATION_LEVEL:
        warnings = (f"|a(p_max)|/max|a| = {ratio:.2e} exceeds {TRUNCATION_LEVEL:g}; momentum tail truncated",)
    return MomentumAmplitude(pg, values, a0, bool(warnings), warnings)


def momentum_amplitude(p_grid, values, origin_value=None):
    """Wrap user-supplied samples of a(p) on a radial momentum grid."""
    values = np.asarray(values)
    if values.shape != (p_grid.n,):
        raise ValueError("amplitude samples do not match the momentum grid")
    if origin_value is None:
        origin_value = 3.0 * values[0] - 3.0 * values[1] + values[2]
    return _with_truncation_check(p_grid, values, origin_value)


def _power_tail(r, p_max, a_last):
    """Contribution of a(p) ~ a_last (p_max/p)^4 beyond p_max to psi(r).

    Uses int_{p_max}^inf sin(p r) p^-3 dp = r^2 J(p_max r) with
    J(x) = sin x/(2x^2) + cos x/(2x) - (pi/2 - Si(x))/2.
    """
    x = p_max * r
    si, _ = sici(x)
    J = np.sin(x) / (2 * x**2) + np.cos(x) / (2 * x) - 0.5 * (0.5 * np.pi - si)
    return PREFACTOR * a_last * p_max**4 * r * J


def reconstruct(amp, grid, tail="power"):
    """Inverse transform of ``amp`` onto the radial ``grid``.

    With ``tail="power"`` the integral beyond ``p_max`` is added assuming the
    ``p^-4`` fall-off that any s-wave with a cusp at the origin has. This
    matters for hydrogen-like states, where the truncated tail is worth a few
    per cent of psi(0).  ``tail=None`` integrates the samples only.
    """
    if grid.kind != RADIAL:
        raise ValueError("reconstruction target must be a radial grid")
    psi = _sine_transform(amp.values, amp.p_grid, grid.nodes)
    if tail == "power":
        psi = psi + _power_tail(grid.nodes, amp.p_grid.stop, amp.values[-1])
    elif tail is not None:
        raise ValueError(f"unknown tail model {tail!r}")
    return Wavefunction(grid, psi)
