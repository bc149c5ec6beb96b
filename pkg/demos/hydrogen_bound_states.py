"""
hydrogen_bound_states.py

Lowest s and p levels of hydrogen from the dense tridiagonal solver,
cross-checked against Numerov shooting and the closed-form 1s state.
Everything is in atomic units; eV values use the units helpers.

Run:
    python3 demos/hydrogen_bound_states.py
"""

import math

import numpy as np

from schrodlab import coulomb, numerov_eigenvalue, radial_grid, solve_radial
from schrodlab.units import hartree_to_ev

grid = radial_grid(r_max=60.0, n=6000)

# s states: E_n = -1/(2 n^2)
print("l=0 levels (dense solver)")
for s in solve_radial(coulomb(), l=0, k=3, grid=grid):
    n = s.index + 1
    print(f"  n={n}  E={s.energy:+.7f}  exact={-0.5 / n**2:+.7f}  ({hartree_to_ev(s.energy):+.4f} eV)  nodes={s.nodes}")

# p states start at n = 2
print("l=1 levels")
for s in solve_radial(coulomb(), l=1, k=2, grid=grid):
    n = s.index + 2
    print(f"  n={n}  E={s.energy:+.7f}  exact={-0.5 / n**2:+.7f}")

# An independent route: Numerov shooting inside a bracket
e1 = numerov_eigenvalue(coulomb(), (-0.51, -0.49), grid)
print(f"\nNumerov 1s: {e1:+.10f}")

# The dense solver's error shrinks by ~4 when h halves
print("\nconvergence of the dense 1s energy")
prev = None
for n in (1000, 2000, 4000, 8000):
    err = solve_radial(coulomb(), 0, 1, radial_grid(40.0, n))[0].energy + 0.5
    ratio = f"  ratio {prev / err:.3f}" if prev else ""
    print(f"  h={40.0 / n:.4f}  error={err:.3e}{ratio}")
    prev = err

# shape against exp(-r)/sqrt(pi)
psi = solve_radial(coulomb(), 0, 1, grid)[0].psi
r = grid.nodes
print(f"\nmax |psi - exp(-r)/sqrt(pi)| = {np.max(np.abs(psi.values.real - np.exp(-r) / math.sqrt(math.pi))):.2e}")
