"""The ten acceptance criteria as executable checks.

Each ``criterion_N()`` returns a list of :class:`Entry`.  ``run_all()`` builds
the verdict report written by ``schrodlab verify``. The test suite calls the
same functions, so both apply identical tolerances.
"""

import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .born import born_amplitude, potential_from_propagator, rutherford_limit
from .bound_states import numerov_eigenvalue, solve_1d, solve_radial
from .energetics import crossing_radius, energy_densities, residual, virial_report
from .momentum import amplitude_at, decompose, hydrogen_amplitude_closed_form
from .numerics import radial_grid, uniform_grid
from .potentials import coulomb, harmonic, yukawa
from .tdse import (
    PropagationRun,
    gaussian_packet,
    line_potential,
    propagate,
    scattering_energy_audit,
    stationary_phase_error,
)
from .units import hartree_to_ev

SCHEMA = 1

# grids pinned for the checks
R_MAX, N_R = 40.0, 4000
N_R_FINE = 8000  # dense-vs-Numerov comparison (dense error ~ h^2/8)
N_R_COARSE = 2000  # convergence-factor pair with N_R
P_MAX, N_P = 20.0, 2000
MU_SEQUENCE = (0.04, 0.02, 0.01, 0.005)


@dataclass(frozen=True)
class Entry:
    name: str
    anchor: str
    relation: str  # "within" | "below" | "above" | "between"
    expected: object
    computed: float
    tol: float
    passed: bool

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name}: computed={self.computed:.6g} {self.relation} {self.expected} (tol {self.tol:g})"


def within(name, anchor, computed, expected, tol):
    computed = float(computed)
    return Entry(name, anchor, "within", expected, computed, tol, bool(abs(computed - expected) <= tol))


def below(name, anchor, computed, bound):
    computed = float(computed)
    return Entry(name, anchor, "below", bound, computed, bound, bool(computed < bound))


def above(name, anchor, computed, bound):
    computed = float(computed)
    return Entry(name, anchor, "above", bound, computed, bound, bool(computed > bound))


def between(name, anchor, computed, lo, hi):
    computed = float(computed)
    return Entry(name, anchor, "between", [lo, hi], computed, hi - lo, bool(lo <= computed <= hi))


_cache = {}


def _ground():
    if "ground" not in _cache:
        _cache["ground"] = solve_radial(coulomb(), 0, 2, radial_grid(R_MAX, N_R))
    return _cache["ground"]


def _densities():
    if "dens" not in _cache:
        _cache["dens"] = energy_densities(_ground()[0].psi, coulomb())
    return _cache["dens"]


def criterion_1():
    E = _ground()[0].energy
    anchor = "hydrogen ground energy -1/2 hartree = -13.6 eV"
    return [
        within("ground energy (hartree)", anchor, E, -0.5, 1e-4),
        within("ground energy (eV)", anchor, hartree_to_ev(E), -13.6, 0.01),
    ]


def criterion_2():
    psi = _ground()[0].psi
    r = psi.grid.nodes
    sel = r <= 20.0
    err = np.max(np.abs(psi.values[sel] - np.exp(-r[sel]) / math.sqrt(math.pi)))
    return [below("1s shape max|psi - exp(-r)/sqrt(pi)| on [h, 20]", "1s eigenfunction exp(-r/r0)/sqrt(pi r0^3)", err, 1e-4)]


def criterion_3():
    psi = _ground()[0].psi
    p = np.linspace(0.0, 10.0, 1001)
    err = np.max(np.abs(amplitude_at(psi, p).real - hydrogen_amplitude_closed_form(p)))
    amp = decompose(psi, P_MAX, N_P)
    anchor = "hydrogen momentum amplitude (2 sqrt2/pi)(1+p^2)^-2"
    return [
        below("max |a_num(p) - a_closed(p)| on [0, 10]", anchor, err, 1e-3),
        within("Parseval int |a|^2 d^3p", "momentum amplitude is normalised", amp.norm_squared(), 1.0, 1e-4),
    ]


def criterion_4():
    d = _densities()
    r = d.grid.nodes
    sel = (r >= 0.1) & (r <= 10.0)
    ke_rel = np.max(np.abs(d.ke[sel] - 0.5 * d.psi2[sel]) / (0.5 * d.psi2[sel]))
    # relative to the magnitude of the two terms making up C, so the zero crossing stays well posed
    c_exact = (1.0 / r - 0.5) * d.psi2
    c_rel = np.max(np.abs(d.c[sel] - c_exact[sel]) / ((1.0 / r[sel] + 0.5) * d.psi2[sel]))
    anchor = "pointwise KE(r), C(r) of the 1s state"
    return [
        below("ke(r) = |psi|^2/2, relative, r in [0.1, 10]", anchor, ke_rel, 1e-4),
        below("c(r) = (1/r - 1/2)|psi|^2, relative, r in [0.1, 10]", anchor, c_rel, 1e-4),
        within("C(r) crossing radius", "C(r) changes sign at r = 2 bohr", crossing_radius(d), 2.0, 1e-3),
    ]


def criterion_5():
    d = _densities()
    anchor = "totals +e^2/2r0 - e^2/r0 = -e^2/2r0; virial at r0"
    out = [
        within("KE_total", anchor, d.ke_total, 0.5, 1e-4),
        within("PE_total", anchor, d.pe_total, -1.0, 1e-4),
        within("E_total", anchor, d.e_total, -0.5, 1e-4),
    ]
    for c in virial_report(d, atol=1e-4, rtol=1e-4):
        if c.relative:
            out.append(below(f"local {c.name} (relative)", anchor, c.deviation, 1e-4))
        else:
            out.append(within(c.name, anchor, c.computed, 0.0, 1e-4))
    return out


def criterion_6():
    d = _densities()
    anchor = "integrated ke and c agree for a decaying state while the fields differ"
    return [
        above("max_r |ke - c|", anchor, np.max(np.abs(d.ke - d.c)), 0.01),
        below("|KE_total - C_total| / KE_total", anchor, d.surface_term_gap, 1e-6),
    ]


def criterion_7():
    s = _ground()[0]
    psi, E = s.psi, s.energy
    peak = np.max(np.abs(psi.values))
    # the solver's own 3-point stencil: the residual it leaves is the discrete equation's
    res = residual(psi, coulomb(), E, order=2)
    wrong = residual(psi, coulomb(), -0.4, order=2)
    dev = np.max(np.abs(wrong.values - (-0.4 + 0.5) * psi.values))
    anchor = "eigenpair satisfies the stationary equation node by node"
    return [
        below("residual sup-norm / (|E| max|psi|)", anchor, res.sup_norm / (abs(E) * peak), 1e-4),
        below("residual at E=-0.4 vs (E - E0) psi", anchor, dev, 1e-3),
    ]


def criterion_8():
    lim = potential_from_propagator(MU_SEQUENCE)
    thetas = np.linspace(math.pi / 12, math.pi, 12)
    pot = yukawa(1.0)
    rel = max(
        abs(born_amplitude(pot, 1.0, t, "quadrature").amplitude - born_amplitude(pot, 1.0, t).amplitude)
        / born_amplitude(pot, 1.0, t).amplitude
        for t in thetas
    )
    anchor = "screened 1/q^2 propagator tends to -1/r as mu -> 0"
    return [
        below("mu->0 potential vs -1/r, relative, r in [0.5, 10]", anchor, lim.max_rel_deviation, 1e-3),
        below("Yukawa Born quadrature vs closed form, relative", anchor, rel, 1e-5),
        within("Rutherford dsigma/dOmega at p=1, theta=pi/2", anchor, rutherford_limit(1.0, math.pi / 2, MU_SEQUENCE), 1.0, 1e-2),
    ]


def _ho_run(steps, dt, stride=None):
    g = uniform_grid(-10.0, 10.0, 1001)
    psi0 = solve_1d(harmonic(), 1, g)[0].psi
    return propagate(PropagationRun(psi0, line_potential(harmonic(), g), dt, steps, stride or steps))


def _scattering_run():
    g = uniform_grid(-100.0, 100.0, 4096)
    packet = gaussian_packet(g, -25.0, 2.0, 3.0)
    barrier = line_potential(yukawa(1.0, strength=-1.0), g, softening=1.0)
    return propagate(PropagationRun(packet, barrier, 0.005, 6000, stride=100, absorbing=True))


def criterion_9():
    long = _ho_run(10_000, 0.01, stride=100)
    drift = np.max(np.abs(long.table("norm") - long.table("norm")[0]))
    period = _ho_run(800, 2 * math.pi / 800)
    _, phase = stationary_phase_error(period, 0.5)
    ledger = scattering_energy_audit(_scattering_run())
    anchor = "time-dependent equation; E_in = KE_total + PE_total during scattering"
    return [
        below("norm drift over 1e4 steps", anchor, drift, 1e-8),
        below("eigenstate phase error over one period (rad)", anchor, abs(phase), 1e-3),
        below("scattering energy ledger drift (relative)", anchor, ledger.max_rel_drift, 1e-5),
    ]


def criterion_10():
    fine = radial_grid(R_MAX, N_R_FINE)
    dense = solve_radial(coulomb(), 0, 2, fine)
    e1 = numerov_eigenvalue(coulomb(), (-0.51, -0.49), fine)
    e2 = numerov_eigenvalue(coulomb(), (-0.135, -0.115), fine)
    coarse = solve_radial(coulomb(), 0, 1, radial_grid(R_MAX, N_R_COARSE))[0].energy
    eig_factor = (coarse + 0.5) / (_ground()[0].energy + 0.5)
    _, ph1 = stationary_phase_error(_ho_run(400, 2 * math.pi / 400), 0.5)
    _, ph2 = stationary_phase_error(_ho_run(800, 2 * math.pi / 800), 0.5)
    anchor = "independent numerical routes agree; second-order convergence"
    return [
        below("dense vs Numerov, n=1", anchor, abs(dense[0].energy - e1), 1e-5),
        below("dense vs Numerov, n=2", anchor, abs(dense[1].energy - e2), 1e-5),
        between("eigensolver error ratio h/(h/2)", anchor, eig_factor, 3.5, 4.5),
        between("propagator phase-error ratio dt/(dt/2)", anchor, ph1 / ph2, 3.5, 4.5),
    ]


CRITERIA = {
    1: ("ground-state energy", criterion_1),
    2: ("eigenfunction shape", criterion_2),
    3: ("momentum amplitude", criterion_3),
    4: ("pointwise energy fields", criterion_4),
    5: ("totals and virial", criterion_5),
    6: ("KE-vs-C separation", criterion_6),
    7: ("residual vanishing", criterion_7),
    8: ("Born/Coulomb correspondence", criterion_8),
    9: ("TDSE properties", criterion_9),
    10: ("numerical-method properties", criterion_10),
}


def run_all():
    """Run every criterion and return the verdict report as a JSON-ready dict."""
    checks = []
    start = time.perf_counter()
    for number, (title, fn) in CRITERIA.items():
        for e in fn():
            d = asdict(e)
            d["pass"] = d.pop("passed")
            d["criterion"] = number
            d["name"] = f"{number}. {title}: {e.name}"
            checks.append(d)
    elapsed = time.perf_counter() - start
    report = {
        "schema": SCHEMA,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "environment": {
            "version": __version__,
            "radial_grid": {"r_max": R_MAX, "n": N_R, "n_fine": N_R_FINE, "n_coarse": N_R_COARSE},
            "momentum_grid": {"p_max": P_MAX, "n": N_P},
            "mu_sequence": list(MU_SEQUENCE),
        },
    }
    return report, elapsed
