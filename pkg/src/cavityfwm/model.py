"""Physical parameters and the steady-state operating point.

All frequencies are angular (rad/s). The effective detuning is an input:
the static radiation-pressure shift of the mirror is reported through
:func:`detuning_offset` but never solved for self-consistently.
"""

from dataclasses import dataclass, fields, replace

import numpy as np
from scipy import constants as _const

from .errors import InvalidParameterError

# SI-exact since the 2019 redefinition, hence identical in CODATA 2018 and later.
HBAR = _const.hbar  # J s
C_LIGHT = _const.c  # m / s
K_B = _const.k  # J / K

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class PhysicalParams:
    """Laboratory inputs of the pumped optomechanical cavity.

    Parameters
    ----------
    laser_wavelength : float
        Pump wavelength in m.
    cavity_length : float
        Cavity length in m.
    mirror_mass : float
        Effective mass of the movable mirror in kg.
    kappa : float
        Cavity amplitude decay rate through the input mirror, rad/s.
    omega_m : float
        Mechanical angular frequency, rad/s.
    gamma_m : float
        Mechanical momentum damping rate, rad/s.
    detuning : float
        Effective cavity-pump detuning, rad/s.
    pump_power : float
        Pump power in W.
    stokes_power : float
        Injected Stokes power in W. Only a normalization; never enters
        the per-unit-input response functions.
    temperature : float
        Temperature of the mechanical bath in K.
    """

    laser_wavelength: float
    cavity_length: float
    mirror_mass: float
    kappa: float
    omega_m: float
    gamma_m: float
    detuning: float
    pump_power: float = 0.0
    stokes_power: float = 0.0
    temperature: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not np.isfinite(value):
                raise InvalidParameterError(f"{f.name} must be finite, got {value!r}")
        for name in ("laser_wavelength", "cavity_length", "mirror_mass",
                     "kappa", "omega_m", "gamma_m"):
            if getattr(self, name) <= 0:
                raise InvalidParameterError(
                    f"{name} must be strictly positive, got {getattr(self, name)!r}")
        for name in ("pump_power", "stokes_power", "temperature"):
            if getattr(self, name) < 0:
                raise InvalidParameterError(
                    f"{name} must be non-negative, got {getattr(self, name)!r}")

    @property
    def laser_freq(self):
        """Angular frequency of the pump laser, rad/s."""
        return TWO_PI * C_LIGHT / self.laser_wavelength

    @property
    def mech_quality(self):
        return self.omega_m / self.gamma_m

    def with_power(self, pump_power):
        """Copy of these parameters at another pump power (W)."""
        return replace(self, pump_power=float(pump_power))


def aspelmeyer(**overrides):
    """Membrane-in-cavity parameters of the normal-mode-splitting experiment.

    1064 nm pump, 25 mm cavity, 145 ng mirror, kappa/2pi = 215 kHz,
    omega_m/2pi = 947 kHz, gamma_m/2pi = 141 Hz, detuning equal to omega_m.
    Keyword overrides replace individual fields; overriding ``omega_m``
    alone keeps the detuning on the mechanical resonance.
    """
    omega_m = overrides.get("omega_m", TWO_PI * 947e3)
    base = dict(
        laser_wavelength=1064e-9,
        cavity_length=25e-3,
        mirror_mass=145e-12,
        kappa=TWO_PI * 215e3,
        omega_m=omega_m,
        gamma_m=TWO_PI * 141.0,
        detuning=omega_m,
        pump_power=1e-3,
        stokes_power=0.0,
        temperature=0.0,
    )
    base.update(overrides)
    return PhysicalParams(**base)


PRESETS = {"aspelmeyer": aspelmeyer}


def preset(name, **overrides):
    try:
        factory = PRESETS[name]
    except KeyError:
        raise InvalidParameterError(
            f"unknown preset {name!r}; available: {sorted(PRESETS)}") from None
    return factory(**overrides)


def coupling_constant(params):
    """Dimensionless optomechanical coupling constant.

    ``chi = (omega_c / L) * sqrt(hbar / (2 m omega_m)) / omega_m`` with the
    cavity frequency taken as the optical carrier ``2 pi c / lambda``.
    """
    for name in ("cavity_length", "mirror_mass", "omega_m", "laser_wavelength"):
        if getattr(params, name) <= 0:
            raise InvalidParameterError(f"{name} must be strictly positive")
    omega_c = params.laser_freq
    x_zpf = np.sqrt(HBAR / (2.0 * params.mirror_mass * params.omega_m))
    return float(omega_c / params.cavity_length * x_zpf / params.omega_m)


def pump_amplitude(power, kappa, laser_freq):
    """Intracavity drive amplitude ``sqrt(2 kappa P / (hbar omega))``.

    Serves both the pump (``epsilon_l``) and the Stokes probe
    (``|epsilon_s|`` with the Stokes power and frequency).
    """
    if power < 0:
        raise InvalidParameterError(f"power must be non-negative, got {power!r}")
    if kappa <= 0 or laser_freq <= 0:
        raise InvalidParameterError("kappa and laser_freq must be strictly positive")
    return float(np.sqrt(2.0 * kappa * power / (HBAR * laser_freq)))


@dataclass(frozen=True)
class OperatingPoint:
    """Linearization point consumed by every response and noise formula.

    The steady-state amplitudes are derived on access, so replacing
    ``chi`` or ``pump_amp`` (e.g. ``dataclasses.replace(op, chi=0.0)``)
    always yields a self-consistent state.
    """

    chi: float
    pump_amp: float
    detuning: float
    kappa: float
    omega_m: float
    gamma_m: float

    @property
    def c0(self):
        """Intracavity steady-state amplitude."""
        return self.pump_amp / complex(self.kappa, self.detuning)

    @property
    def n_cav(self):
        """Mean intracavity photon number |c0|^2."""
        return self.pump_amp ** 2 / (self.kappa ** 2 + self.detuning ** 2)

    @property
    def Q0(self):
        """Static dimensionless mirror displacement."""
        return 2.0 * self.chi * self.n_cav

    @property
    def P0(self):
        return 0.0

    @property
    def coupling_term(self):
        """The pump-induced constant ``4 omega_m^3 chi^2 Delta |c0|^2``."""
        return 4.0 * self.omega_m ** 3 * self.chi ** 2 * self.detuning * self.n_cav

    @property
    def scale(self):
        """Natural magnitude ``omega_m^3 kappa^2`` of the characteristic denominator."""
        return self.omega_m ** 3 * self.kappa ** 2


def steady_state(params):
    """Operating point for the given parameters."""
    chi = coupling_constant(params)
    eps = pump_amplitude(params.pump_power, params.kappa, params.laser_freq)
    return OperatingPoint(
        chi=chi,
        pump_amp=eps,
        detuning=params.detuning,
        kappa=params.kappa,
        omega_m=params.omega_m,
        gamma_m=params.gamma_m,
    )


def detuning_offset(op):
    """Bare detuning ``omega_c - omega_l`` that yields the effective detuning of ``op``."""
    return op.detuning + op.omega_m * op.chi * op.Q0
