"""
momentum_amplitude.py

Expands the numerical 1s state in plane waves. The amplitude a(p) is
compared against the closed form (2 sqrt2 / pi) / (1 + p^2)^2 and the
expansion is inverted again to recover psi(r).

Run:
    python3 demos/momentum_amplitude.py
"""

import numpy as np

from schrodlab import coulomb, decompose, hydrogen_amplitude_closed_form, radial_grid, reconstruct, solve_radial

psi = solve_radial(coulomb(), 0, 1, radial_grid())[0].psi
amp = decompose(psi, p_max=20.0, n_p=2000)

print(f"a(0) = {amp.origin_value:.6f}   closed form {hydrogen_amplitude_closed_form(0.0):.6f}")
for p in (0.5, 1.0, 2.0, 5.0):
    i = np.argmin(np.abs(amp.p - p))
    print(f"a({amp.p[i]:.2f}) = {amp.values[i]:.8f}   closed form {hydrogen_amplitude_closed_form(amp.p[i]):.8f}")

# total probability in momentum space
print(f"\nint |a|^2 d^3p = {amp.norm_squared():.7f}")

# a(p) falls as p^-4, so a(20) is still ~6e-6 of a(0); a warning says so
for w in amp.warnings:
    print("warning:", w)

# inverse transform, with and without the analytic p^-4 tail beyond p_max
for tail in (None, "power"):
    back = reconstruct(amp, psi.grid, tail=tail)
    err = np.max(np.abs(back.values - psi.values))
    print(f"round trip (tail={tail}): max error {err:.2e}")
