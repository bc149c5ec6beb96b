"""
born_coulomb_limit.py

Scattering off a fixed charge at lowest order. The exchanged static photon
has propagator 1/q^2. Screening it to 1/(q^2 + mu^2) and transforming back
gives -exp(-mu r)/r, and the mu -> 0 limit recovers -1/r. The same limit
taken on screened cross-sections gives Rutherford's formula.

Run:
    python3 demos/born_coulomb_limit.py
"""

import math

import numpy as np

from schrodlab.born import born_amplitude, potential_from_propagator, rutherford, rutherford_limit
from schrodlab.potentials import coulomb, evaluate, yukawa

lim = potential_from_propagator(mu_sequence=(0.04, 0.02, 0.01, 0.005))
print("potential from the screened propagator")
for r in (0.5, 1.0, 2.0, 5.0, 10.0):
    i = np.argmin(np.abs(lim.r - r))
    per = "  ".join(f"mu={m:g}: {lim.per_mu[m][i]:+.5f}" for m in sorted(lim.per_mu))
    print(f"  r={lim.r[i]:5.2f}  {per}  ->  {evaluate(lim.potential, lim.r[i]):+.6f}  (-1/r {evaluate(coulomb(), lim.r[i]):+.6f})")
print(f"  largest relative deviation from -1/r: {lim.max_rel_deviation:.1e}")

print("\nYukawa (mu=1) Born amplitude at p=1")
for deg in (30, 60, 90, 120, 180):
    t = math.radians(deg)
    a = born_amplitude(yukawa(1.0), 1.0, t).amplitude
    b = born_amplitude(yukawa(1.0), 1.0, t, "quadrature").amplitude
    print(f"  theta={deg:3d}  closed form {a:.10f}  quadrature {b:.10f}")

print("\nmu -> 0 cross-section against Rutherford, p=1")
for deg in (30, 90, 150):
    t = math.radians(deg)
    print(f"  theta={deg:3d}  extrapolated {rutherford_limit(1.0, t):.6f}  Rutherford {rutherford(1.0, t):.6f}")

# bare Coulomb is refused: the forward amplitude diverges
try:
    born_amplitude(coulomb(), 1.0, 1.0)
except ValueError as exc:
    print(f"\nunscreened input: {exc}")
