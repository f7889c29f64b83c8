"""Flat ``key = value`` parameter files.

Keys carry their unit in the suffix. Frequencies given in Hz are ordinary
frequencies (``kappa_hz = 215e3`` means kappa / 2pi = 215 kHz) and are
converted to rad/s. Lines starting with ``#`` are comments. An optional
``preset`` key names the base parameter set that the other keys override.

=========================  ==================================
key                        meaning
=========================  ==================================
preset                     base preset (default ``aspelmeyer``)
laser_wavelength_nm        pump wavelength
cavity_length_mm           cavity length
mirror_mass_ng             mirror mass
kappa_hz                   cavity decay rate / 2pi
omega_m_hz                 mechanical frequency / 2pi
gamma_m_hz                 mechanical damping / 2pi
detuning_hz                effective detuning / 2pi
detuning_over_omega_m      effective detuning in units of omega_m
pump_power_mw              pump power
stokes_power_mw            Stokes probe power
temperature_k              bath temperature
=========================  ==================================
"""

import configparser
from pathlib import Path

from .errors import InvalidParameterError
from .model import TWO_PI, preset

# key -> (field, factor to SI)
UNIT_KEYS = {
    "laser_wavelength_nm": ("laser_wavelength", 1e-9),
    "cavity_length_mm": ("cavity_length", 1e-3),
    "mirror_mass_ng": ("mirror_mass", 1e-12),
    "kappa_hz": ("kappa", TWO_PI),
    "omega_m_hz": ("omega_m", TWO_PI),
    "gamma_m_hz": ("gamma_m", TWO_PI),
    "detuning_hz": ("detuning", TWO_PI),
    "pump_power_mw": ("pump_power", 1e-3),
    "stokes_power_mw": ("stokes_power", 1e-3),
    "temperature_k": ("temperature", 1.0),
}


def parse_config(text):
    """Parse config text into ``(preset_name, overrides)`` with SI-valued overrides."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string("[params]\n" + text)
    except configparser.Error as exc:
        raise InvalidParameterError(f"malformed config: {exc}") from None
    entries = dict(parser["params"])
    name = entries.pop("preset", "aspelmeyer").strip()
    rel_detuning = entries.pop("detuning_over_omega_m", None)

    overrides = {}
    for key, raw in entries.items():
        if key not in UNIT_KEYS:
            raise InvalidParameterError(f"unknown config key {key!r}")
        field, factor = UNIT_KEYS[key]
        try:
            overrides[field] = float(raw) * factor
        except ValueError:
            raise InvalidParameterError(f"{key}: not a number: {raw!r}") from None
    if rel_detuning is not None:
        if "detuning" in overrides:
            raise InvalidParameterError("give detuning_hz or detuning_over_omega_m, not both")
        overrides["detuning"] = ("relative", float(rel_detuning))
    return name, overrides


def params_from_config(text):
    name, overrides = parse_config(text)
    rel = overrides.pop("detuning", None)
    if isinstance(rel, tuple):
        base = preset(name, **overrides)
        overrides["detuning"] = rel[1] * base.omega_m
    elif rel is not None:
        overrides["detuning"] = rel
    return preset(name, **overrides)


def load_params(path):
    return params_from_config(Path(path).read_text())
