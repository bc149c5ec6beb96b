"""Lowest-order (single static photon exchange) electron scattering off a fixed charge.

The exchanged photon carries no energy (q0 = 0, the source does not recoil),
so its propagator reduces to ``1/|q|^2``.  Screening it as ``1/(q^2 + mu^2)``
keeps every integral finite.  Fourier transforming the screened propagator
gives the Yukawa potential energy ``-exp(-mu r)/r``, which goes to the Coulomb
energy ``-1/r`` as ``mu -> 0``.  The first Born amplitude (atomic units) is

    f(theta) = -2 int_0^inf V(r) r sin(q r)/q dr,   q = 2 p sin(theta/2)

which for Yukawa is ``2 strength / (q^2 + mu^2)``.  Its mu -> 0 limit is the
Rutherford cross-section ``1/(4 p^4 sin^4(theta/2))``.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .numerics import _simpson_weights
from .potentials import COULOMB, TABULATED, YUKAWA, Potential, evaluate, tabulated


class ForwardDivergence(ValueError):
    """Unscreened Coulomb input, or q = 0, where the propagator is singular."""


@dataclass(frozen=True)
class MomentumTransfer:
    p: float
    theta: float
    q0: float = 0.0

    def __post_init__(self):
        if self.q0 != 0.0:
            raise ValueError("a static source transfers no energy: q0 must be 0")
        if self.p <= 0:
            raise ValueError("incident momentum must be positive")

    @property
    def q(self):
        return 2.0 * self.p * math.sin(0.5 * self.theta)


@dataclass(frozen=True)
class ScatteringResult:
    amplitude: float
    method: str
    transfer: MomentumTransfer = None

    @property
    def dcs(self):
        return abs(self.amplitude) ** 2


def momentum_transfer(p, theta):
    return MomentumTransfer(float(p), float(theta))


def propagator_weight(q):
    """1/|q|^2 for a static (q0 = 0) exchanged photon; accepts a magnitude or a MomentumTransfer."""
    if isinstance(q, MomentumTransfer):
        q = q.q
    if q <= 0:
        raise ForwardDivergence("propagator is singular at q = 0 (forward scattering)")
    return 1.0 / (q * q)


def screened_potential(mu, r, strength=1.0):
    """Potential energy from Fourier transforming the screened propagator, by quadrature.

    V(r) = -(2 strength / (pi r)) int_0^inf k sin(k r) / (k^2 + mu^2) dk

    The integral is only conditionally convergent.  It is evaluated with QUADPACK's
    Fourier-weighted routine (QAWF), which is built for this case.  Returns
    the values and the largest quadrature error estimate.
    """
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    if mu <= 0:
        raise ForwardDivergence("screening mu must be positive")
    out = np.empty_like(r)
    worst = 0.0
    for i, ri in enumerate(r):
        val, err = quad(
            lambda k: k / (k * k + mu * mu), 0.0, np.inf, weight="sin", wvar=ri, limlst=200
        )
        out[i] = -2.0 * strength * val / (math.pi * ri)
        worst = max(worst, abs(2.0 * strength * err / (math.pi * ri)))
    return out, worst


def _neville_at_zero(xs, ys):
    """Value at x = 0 of the interpolating polynomial through (xs, ys)."""
    xs = list(map(float, xs))
    p = [np.asarray(y, dtype=float) for y in ys]
    n = len(xs)
    for m in range(1, n):
        p = [(xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]) for i in range(n - m)]
    return p[0]


@dataclass(frozen=True)
class PropagatorLimit:
    potential: Potential
    r: np.ndarray
    per_mu: dict
    quad_error: dict
    max_rel_deviation: float
    deviation_range: tuple


def potential_from_propagator(
    mu_sequence=(0.04, 0.02, 0.01, 0.005),
    r=None,
    strength=1.0,
    check_range=(0.5, 10.0),
):
    """Screened-propagator potentials for each mu and their mu -> 0 extrapolation.

    Each ``V_mu(r)`` comes from :func:`screened_potential`.  The sequence is
    extrapolated to mu = 0 with polynomial (Richardson/Neville) extrapolation
    in mu.  The result is a tabulated potential, plus its largest relative
    deviation from ``-strength/r`` over ``check_range``.
    """
    mus = [float(m) for m in mu_sequence]
    if len(mus) < 3 or any(m <= 0 for m in mus) or any(b >= a for a, b in zip(mus, mus[1:])):
        raise ValueError("mu_sequence must be >= 3 positive, strictly decreasing screenings")
    if r is None:
        r = np.linspace(check_range[0], check_range[1], 96)
    r = np.asarray(r, dtype=float)
    per_mu, errs = {}, {}
    for m in mus:
        per_mu[m], errs[m] = screened_potential(m, r, strength)
    limit = _neville_at_zero(mus, [per_mu[m] for m in mus])
    coul = -strength / r
    sel = (r >= check_range[0]) & (r <= check_range[1])
    dev = float(np.max(np.abs(limit[sel] - coul[sel]) / np.abs(coul[sel]))) if sel.any() else float("nan")
    return PropagatorLimit(tabulated(r, limit), r, per_mu, errs, dev, tuple(check_range))


def _radial_born_integral(pot, q, points_per_period=80, envelope=1e-12):
    """-2/q int V(r) r sin(q r) dr by fixed-step Simpson quadrature.

    The step resolves both the sin(q r) period and the decay length of V.
    The range ends where |V r| drops below ``envelope`` times its peak.
    """
    if pot.kind == YUKAWA:
        decay = 1.0 / pot.mu
        r_end = -math.log(envelope) * decay
        dr = min(2.0 * math.pi / (q * points_per_period), decay / points_per_period)
        n = int(math.ceil(r_end / dr))
        r = np.linspace(0.0, n * dr, n + 1)
        vr = np.empty_like(r)
        vr[0] = -pot.strength
        vr[1:] = evaluate(pot, r[1:]) * r[1:]
    else:
        rt, _ = pot.table
        r_end = float(rt[-1])
        spacing = float(np.min(np.diff(rt)))
        dr = min(2.0 * math.pi / (q * points_per_period), spacing)
        n = int(math.ceil(r_end / dr))
        r = np.linspace(0.0, r_end, n + 1)
        vr = evaluate(pot, r) * r
    w = _simpson_weights(len(r), r[1] - r[0])
    return -2.0 * np.dot(w, vr * np.sin(q * r)) / q


def born_amplitude(pot, p, theta, method="analytic"):
    """First Born amplitude for incident momentum ``p`` at angle ``theta`` (radians).

    ``method="analytic"`` uses the Yukawa closed form.  ``method="quadrature"``
    integrates the radial Born integral and also accepts tabulated potentials.
    Unscreened Coulomb input is refused: its amplitude diverges in the forward
    direction.  Use a Yukawa sequence with mu -> 0 instead.
    """
    if pot.kind == COULOMB or (pot.kind == YUKAWA and pot.mu == 0):
        raise ForwardDivergence(
            "unscreened Coulomb scattering diverges at q -> 0; "
            "use yukawa(mu) and extrapolate mu -> 0 (see rutherford_limit)"
        )
    if pot.kind not in (YUKAWA, TABULATED):
        raise ValueError(f"Born amplitude needs a decaying potential, got {pot.kind}")
    t = momentum_transfer(p, theta)
    q = t.q
    if method == "analytic":
        if pot.kind != YUKAWA:
            raise ValueError("closed form exists for Yukawa only; use method='quadrature'")
        return ScatteringResult(2.0 * pot.strength / (q * q + pot.mu**2), "analytic-yukawa", t)
    if method == "quadrature":
        f = _forward_integral(pot) if q == 0.0 else _radial_born_integral(pot, q)
        return ScatteringResult(float(f), "quadrature", t)
    raise ValueError(f"unknown method {method!r}")


def _forward_integral(pot):
    """-2 int V(r) r^2 dr, the q -> 0 limit of the Born integral."""
    if pot.kind == YUKAWA:
        r_end = -math.log(1e-12) / pot.mu
        n = 20000
        r = np.linspace(0.0, r_end, n + 1)
        vr2 = np.zeros_like(r)
        vr2[1:] = evaluate(pot, r[1:]) * r[1:] ** 2
    else:
        rt, _ = pot.table
        r = np.linspace(0.0, float(rt[-1]), 20001)
        vr2 = evaluate(pot, r) * r**2
    w = _simpson_weights(len(r), r[1] - r[0])
    return -2.0 * np.dot(w, vr2)


def rutherford(p, theta, strength=1.0):
    """Closed-form Rutherford cross-section in atomic units."""
    return strength**2 / (4.0 * p**4 * math.sin(0.5 * theta) ** 4)


def rutherford_limit(p, theta, mu_sequence=(0.04, 0.02, 0.01, 0.005), strength=1.0, method="quadrature"):
    """dsigma/dOmega extrapolated to mu -> 0 from screened Born cross-sections."""
    mus = [float(m) for m in mu_sequence]
    dcs = [born_amplitude(Potential(YUKAWA, strength=strength, mu=m), p, theta, method).dcs for m in mus]
    return float(_neville_at_zero(mus, dcs))
