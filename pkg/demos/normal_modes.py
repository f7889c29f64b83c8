"""
Normal modes versus pump power
==============================

Tracks the four roots of the characteristic polynomial as the pump power
grows. At low power the mechanical and cavity modes share the same
frequency but decay at different rates (lifetime splitting); above a
critical power their frequencies split instead.
"""

import dataclasses

import numpy as np

from cavityfwm import aspelmeyer, critical_power, sweep_roots

params = aspelmeyer()
wm = params.omega_m

powers = np.linspace(0.0, 20e-3, 201)
rootsets = sweep_roots(params, powers)

for p, rs in zip(powers[::40], rootsets[::40]):
    pair = rs.positive_pair()
    text = ", ".join(f"{r.real / wm:+.4f}{r.imag / wm:+.4f}i" for r in pair)
    print(f"P = {p * 1e3:5.1f} mW  Re>0 roots / omega_m: {text}")

# Every root stays in the lower half plane, so all states on the sweep are stable.
print("all stable:", all(rs.stable for rs in rootsets))

# Bisect for the power where the real parts start to separate.
pc = critical_power(params, (1e-3, 10e-3))
print(f"splitting onset: {pc * 1e3:.3f} mW")

# The onset scales as 1/chi^2, i.e. linearly with the mirror mass.
heavy = dataclasses.replace(params, mirror_mass=2 * params.mirror_mass)
print(f"doubled mass:    {critical_power(heavy, (1e-3, 20e-3)) * 1e3:.3f} mW")
