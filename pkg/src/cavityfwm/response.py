"""Stimulated response of the output field to a weak Stokes probe.

Every function takes the probe offset ``delta = omega_s - omega_l`` in
rad/s, as a scalar or an array, and broadcasts over it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, SingularityError

# |d| below this fraction of omega_m^3 kappa^2 counts as sitting on a pole.
SINGULARITY_GUARD = 1e-300


def char_denominator(delta, op):
    """Characteristic denominator ``d(delta)`` shared by all response functions."""
    delta = np.asarray(delta, dtype=float)
    mech = (delta + op.omega_m) * (delta - op.omega_m) + 1j * op.gamma_m * delta
    cav = (op.kappa + 1j * (op.detuning - delta)) * (op.kappa - 1j * (op.detuning + delta))
    return op.coupling_term + mech * cav


def char_denominator_alt(omega, op):
    """Same denominator in the factored-cavity form used for the noise transfer functions."""
    omega = np.asarray(omega, dtype=float)
    mech = (omega + op.omega_m) * (omega - op.omega_m) + 1j * op.gamma_m * omega
    return op.coupling_term + mech * ((op.kappa - 1j * omega) ** 2 + op.detuning ** 2)


def check_denominator(d, op):
    if np.any(np.abs(d) < SINGULARITY_GUARD * op.scale):
        raise SingularityError("characteristic denominator vanishes on the requested grid")
    return d


def pump_response(op):
    """Reflected amplitude ``c_l`` at the pump frequency."""
    root2k = np.sqrt(2.0 * op.kappa)
    return root2k * op.c0 - op.pump_amp / root2k


def stokes_response(delta, op):
    """Output amplitude ``c_s`` at the Stokes frequency, per unit Stokes drive."""
    delta = np.asarray(delta, dtype=float)
    d = check_denominator(char_denominator(delta, op), op)
    root2k = np.sqrt(2.0 * op.kappa)
    num = ((op.kappa - 1j * (op.detuning + delta))
           * ((delta + op.omega_m) * (delta - op.omega_m) + 1j * op.gamma_m * delta)
           - 2j * op.omega_m ** 3 * op.chi ** 2 * op.n_cav)
    return root2k * num / d - 1.0 / root2k


def antistokes_response(delta, op):
    """Output amplitude ``c_as`` generated at ``2 omega_l - omega_s``."""
    delta = np.asarray(delta, dtype=float)
    d = check_denominator(char_denominator(delta, op), op)
    root2k = np.sqrt(2.0 * op.kappa)
    return -root2k * 2j * op.omega_m ** 3 * op.chi ** 2 * op.c0 ** 2 / np.conj(d)


def perturbative_antistokes(delta, op):
    """Lowest-order-in-coupling anti-Stokes amplitude.

    Drops the pump-induced term from the denominator, so the result is
    proportional to ``chi^2 * pump_power`` and agrees with
    :func:`antistokes_response` only at very low pump power.
    """
    delta = np.asarray(delta, dtype=float)
    k, D, wm = op.kappa, op.detuning, op.omega_m
    den = ((k + 1j * D) ** 2
           * ((delta + wm) * (delta - wm) - 1j * op.gamma_m * delta)
           * (k - 1j * (D - delta))
           * (k + 1j * (D + delta)))
    return -2.0 * np.sqrt(2.0 * k) * 1j * wm ** 3 * op.chi ** 2 * op.pump_amp ** 2 / den


@dataclass(frozen=True)
class ResponsePoint:
    """Stokes and anti-Stokes response at one (or an array of) probe offsets.

    Gains are output powers per unit Stokes input power; quadratures are
    per square-root of the input power, with the Stokes drive taken real.
    """

    delta: np.ndarray
    c_s: np.ndarray
    c_as: np.ndarray
    Gs: np.ndarray
    Gas: np.ndarray
    vs: np.ndarray
    vs_tilde: np.ndarray


def gains_and_quadratures(delta, op):
    delta = np.asarray(delta, dtype=float)
    c_s = stokes_response(delta, op)
    c_as = antistokes_response(delta, op)
    root2k = np.sqrt(2.0 * op.kappa)
    a_s = root2k * c_s
    return ResponsePoint(
        delta=delta,
        c_s=c_s,
        c_as=c_as,
        Gs=np.abs(a_s) ** 2,
        Gas=np.abs(root2k * c_as) ** 2,
        vs=a_s.real,
        vs_tilde=a_s.imag,
    )


@dataclass(frozen=True)
class SpectrumSeries:
    """Response functions tabulated over a probe-offset grid."""

    omega_m: float
    points: ResponsePoint
    pump_power: float = float("nan")

    COLUMNS = ("delta_over_omega_m", "Gs", "Gas", "vs", "vs_tilde")

    def __len__(self):
        return self.points.delta.size

    @property
    def delta_over_omega_m(self):
        return self.points.delta / self.omega_m

    def columns(self):
        p = self.points
        return {
            "delta_over_omega_m": self.delta_over_omega_m,
            "Gs": p.Gs,
            "Gas": p.Gas,
            "vs": p.vs,
            "vs_tilde": p.vs_tilde,
        }


def default_delta_grid(omega_m, points=2001, lo=0.5, hi=1.5):
    """Probe offsets spanning ``[lo, hi] * omega_m``."""
    return np.linspace(lo, hi, points) * omega_m


def sweep_response(op, delta_grid, pump_power=float("nan")):
    """Evaluate :func:`gains_and_quadratures` over a grid, preserving its order."""
    grid = np.atleast_1d(np.asarray(delta_grid, dtype=float))
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidParameterError("delta grid must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(grid)):
        raise InvalidParameterError("delta grid must be finite")
    return SpectrumSeries(omega_m=op.omega_m, points=gains_and_quadratures(grid, op),
                          pump_power=float(pump_power))
