"""
energy_densities.py

Pointwise energy bookkeeping for hydrogen 1s and 2s.

ke(r) = |grad psi|^2 / 2 is never negative. The term that actually appears
in the stationary equation, c(r) = -psi* lap psi / 2, changes sign where
E = V(r). Both integrate to the same kinetic energy, so only the fields
tell them apart.

Run:
    python3 demos/energy_densities.py
"""

import numpy as np

from schrodlab import coulomb, energy_densities, radial_grid, solve_radial, virial_report
from schrodlab.energetics import crossing_radii

grid = radial_grid(r_max=60.0, n=6000)
# the local identities at r0 = 1 bohr belong to the 1s state; 2s reports them as off
states = solve_radial(coulomb(), 0, 2, grid)

for s in states:
    d = energy_densities(s.psi, coulomb())
    print(f"state {s.index + 1}s  E = {s.energy:+.6f}")
    print(f"  KE_total = {d.ke_total:.8f}   C_total = {d.c_total:.8f}   gap {d.surface_term_gap:.1e}")
    print(f"  PE_total = {d.pe_total:.8f}   E_total = {d.e_total:.8f}")
    print(f"  max |ke - c| = {np.max(np.abs(d.ke - d.c)):.4f}")
    print(f"  c(r) changes sign at r = {', '.join(f'{x:.4f}' for x in crossing_radii(d))}")
    for c in virial_report(d):
        print(f"  {'ok ' if c.passed else 'off'} {c.name}: {c.computed:+.6e} vs {c.expected:+.6e}")
    print()

# a few sample rows of the 1s fields
d = energy_densities(states[0].psi, coulomb())
print("    r       ke          c           pe          e")
for r in (0.5, 1.0, 2.0, 3.0, 5.0):
    a = d.at(r)
    print(f"  {r:4.1f}  {a['ke']:+.3e}  {a['c']:+.3e}  {a['pe']:+.3e}  {a['e_field']:+.3e}")
print(f"  r->0 extrapolated ke = {d.origin['ke']:.6f}  (1/(2 pi) = {1 / (2 * np.pi):.6f})")
