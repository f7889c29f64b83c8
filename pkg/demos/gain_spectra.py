"""
Stokes and anti-Stokes gain
===========================

Sweeps a weak Stokes probe across the mechanical sideband and reports the
reflected Stokes gain G_s, the generated anti-Stokes gain G_as, and the two
quadratures of the Stokes output.
"""

import numpy as np

from cavityfwm import aspelmeyer, steady_state, sweep_response
from cavityfwm.response import default_delta_grid

params = aspelmeyer()

for p_mw in (1.0, 6.9, 20.0, 40.0):
    op = steady_state(params.with_power(p_mw * 1e-3))
    series = sweep_response(op, default_delta_grid(op.omega_m), pump_power=p_mw * 1e-3)
    cols = series.columns()
    x = cols["delta_over_omega_m"]
    i_s, i_as = np.argmax(cols["Gs"]), np.argmax(cols["Gas"])
    print(f"P = {p_mw:4.1f} mW: max G_s = {cols['Gs'][i_s]:.4f} at {x[i_s]:.4f}, "
          f"max G_as = {cols['Gas'][i_as]:.4f} at {x[i_as]:.4f}")

# Without pump the probe is simply reflected: G_s = 1 and nothing is generated.
op0 = steady_state(params.with_power(0.0))
cols = sweep_response(op0, default_delta_grid(op0.omega_m, 11)).columns()
print("no pump, G_s:", np.round(cols["Gs"], 12))
print("no pump, G_as:", cols["Gas"])

# At 1 mW the in-phase quadrature is a symmetric dip around the resonance and
# the out-of-phase quadrature changes sign across it.
op = steady_state(params)
grid = op.omega_m * np.linspace(0.99, 1.01, 9)
cols = sweep_response(op, grid).columns()
for x, vs, vt in zip(cols["delta_over_omega_m"], cols["vs"], cols["vs_tilde"]):
    print(f"  delta/omega_m = {x:.4f}   v_s = {vs:+.5f}   v~_s = {vt:+.5f}")
