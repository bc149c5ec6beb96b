"""schrodlab: numerical checks of the low-energy Coulomb/Schrodinger chain.

Atomic units throughout (hbar = m_e = e = 1); see :mod:`schrodlab.units`.
"""

__version__ = "0.1.0"

from .numerics import Grid, Wavefunction, integrate, integrate_volume, radial_grid, uniform_grid
from .potentials import Potential, coulomb, evaluate, harmonic, tabulated, yukawa
from .bound_states import EigenSolution, ground_state_closed_form, numerov_eigenvalue, solve_radial
from .energetics import energy_densities, residual, virial_report
from .momentum import decompose, hydrogen_amplitude_closed_form, reconstruct

__all__ = [
    "Grid",
    "Wavefunction",
    "integrate",
    "integrate_volume",
    "radial_grid",
    "uniform_grid",
    "Potential",
    "coulomb",
    "evaluate",
    "harmonic",
    "tabulated",
    "yukawa",
    "EigenSolution",
    "ground_state_closed_form",
    "numerov_eigenvalue",
    "solve_radial",
    "energy_densities",
    "residual",
    "virial_report",
    "decompose",
    "hydrogen_amplitude_closed_form",
    "reconstruct",
]
