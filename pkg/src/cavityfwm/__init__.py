"""Radiation-pressure four-wave mixing in cavity optomechanics.

Steady state, stimulated Stokes/anti-Stokes response, normal-mode roots
and spontaneous photon-correlation statistics of a pumped cavity with a
movable mirror.
"""

from .errors import (
    BracketingError,
    CavityFWMError,
    CorrelationUndefinedError,
    InvalidParameterError,
    NumericalFailureError,
    SingularityError,
)
from .model import (
    OperatingPoint,
    PhysicalParams,
    aspelmeyer,
    coupling_constant,
    detuning_offset,
    preset,
    pump_amplitude,
    steady_state,
)
from .response import (
    ResponsePoint,
    SpectrumSeries,
    antistokes_response,
    char_denominator,
    gains_and_quadratures,
    perturbative_antistokes,
    stokes_response,
    sweep_response,
)
from .modes import CharPoly, RootSet, critical_power, expand_char_poly, find_roots, sweep_roots
from .noise import (
    CorrelatorSeries,
    TransferPoint,
    band_components,
    correlators,
    cs_violation,
    output_noise_spectra,
    thermal_kernel,
    transfer_functions,
)

__version__ = "0.1.0"
