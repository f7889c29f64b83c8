"""
Steady state of the pumped cavity
=================================

Builds the membrane-in-cavity parameter set, derives the coupling constant
and the intracavity pump field, and shows how they scale with pump power.
"""

import numpy as np

from cavityfwm import aspelmeyer, coupling_constant, detuning_offset, steady_state

params = aspelmeyer()
print(f"kappa/omega_m = {params.kappa / params.omega_m:.4f}")
print(f"mechanical Q   = {params.mech_quality:.0f}")

# The coupling constant only depends on geometry, mass and wavelength.
chi = coupling_constant(params)
print(f"chi = {chi:.6e}")

# The intracavity photon number grows linearly with pump power, and so does
# the static mirror displacement Q0 = 2 chi |c0|^2.
for p_mw in (1.0, 6.9, 20.0, 40.0):
    op = steady_state(params.with_power(p_mw * 1e-3))
    print(f"P = {p_mw:5.1f} mW  |c0|^2 = {op.n_cav:.4e}  Q0 = {op.Q0:.4e}  "
          f"bare detuning / omega_m = {detuning_offset(op) / op.omega_m:.6f}")

# The effective detuning stays pinned at omega_m: it is an input, and the
# radiation-pressure shift only changes the bare detuning needed to reach it.
op = steady_state(params)
print("effective detuning / omega_m:", op.detuning / op.omega_m)
print("c0 phase (rad):", np.angle(op.c0))
