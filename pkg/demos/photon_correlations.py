"""
Photon correlations of the spontaneous output
=============================================

With no probe injected, vacuum and mechanical zero-point fluctuations still
produce Stokes and anti-Stokes photons. This computes the normalized
second-order correlation g2(tau) of the full output field at zero
temperature and shows that g2(tau) exceeds g2(0) at finite delay.
"""

import numpy as np

from cavityfwm import aspelmeyer, correlators, cs_violation, steady_state
from cavityfwm import noise

params = aspelmeyer()
taus = np.linspace(0.0, 10e-6, 201)

for p_mw in (1.0, 4.0):
    op = steady_state(params.with_power(p_mw * 1e-3))
    series = correlators(op, 0.0, taus)
    peak_tau, ratio = cs_violation(series)
    print(f"P = {p_mw:g} mW: photon flux {series.n_bar:.3e} /s, "
          f"g2(0) = {series.g2[0]:.3f}, max g2 = {series.g2.max():.3f} "
          f"at {peak_tau * 1e6:.2f} us, ratio {ratio:.2f}")

# Gaussian statistics: g2 = 1 + |g1|^2/n^2 + |A|^2/n^2. At zero delay the
# normal part alone contributes exactly 1, so g2(0) >= 2.
op = steady_state(params)
s = correlators(op, 0.0, [0.0])
print("|g1(0)|/n =", abs(s.g1[0]) / s.n_bar, " |A(0)|/n =", abs(s.A[0]) / s.n_bar)

# Split the output into its Stokes (above the pump) and anti-Stokes parts.
for band in ("stokes", "antistokes"):
    part = noise.band_components(op, 0.0, [0.0], band=band)
    print(f"{band:>10}: flux {part.n_bar:.3e} /s")

# A warm mirror adds thermal phonons and dilutes the correlations.
warm = correlators(op, 1e-3, [0.0])
print(f"T = 1 mK: flux {warm.n_bar:.3e} /s, g2(0) = {warm.g2[0]:.3f}")
