"""Spontaneous Stokes/anti-Stokes emission: noise transfer, spectra and photon correlations.

Conventions: ``x(t) = (1/2pi) int x(omega) exp(-i omega t) d omega``.
Vacuum input noise is delta-correlated, ``<c_in(t) c_in^+(t')> = delta(t - t')``,
and the mirror's Langevin force has ``<xi(omega) xi(omega')> = 2pi S(omega)
delta(omega + omega')`` with the spectral density of :func:`thermal_kernel`.
The output fluctuation is a linear functional of Gaussian inputs, so the
fourth-order correlation factorizes exactly into second-order ones.
See ``docs/noise_conventions.md`` for the derivation of both kernels.
"""

from dataclasses import dataclass

import numpy as np

from . import quad
from .errors import CorrelationUndefinedError, InvalidParameterError
from .model import HBAR, K_B
from .modes import expand_char_poly, find_roots
from .response import char_denominator_alt, check_denominator

BANDS = ("total", "stokes", "antistokes")


@dataclass(frozen=True)
class TransferPoint:
    """Output response to the mechanical force (V) and to the two vacuum ports (E, F)."""

    omega: np.ndarray
    V: np.ndarray
    E: np.ndarray
    F: np.ndarray


def transfer_functions(omega, op):
    omega = np.asarray(omega, dtype=float)
    d = check_denominator(char_denominator_alt(omega, op), op)
    k, D, wm, chi = op.kappa, op.detuning, op.omega_m, op.chi
    c0 = op.c0
    cav = k - 1j * (omega + D)
    V = -np.sqrt(2.0 * k) * wm ** 2 * chi * 1j * cav * c0 / d
    mech = (omega + wm) * (omega - wm) + 1j * op.gamma_m * omega
    E = 2.0 * k * (-2j * wm ** 3 * chi ** 2 * op.n_cav + mech * cav) / d - 1.0
    F = -4j * k * wm ** 3 * chi ** 2 * c0 ** 2 / d
    return TransferPoint(omega=omega, V=V, E=E, F=F)


def thermal_kernel(omega, T, params):
    """Spectral density of the mirror's quantum Langevin force.

    ``S(omega) = 2 (gamma_m/omega_m) omega [1 + coth(hbar omega / 2 k_B T)]``.
    At ``T = 0`` only positive frequencies survive: ``4 (gamma_m/omega_m) omega``.
    """
    if T < 0:
        raise InvalidParameterError(f"temperature must be non-negative, got {T!r}")
    omega = np.asarray(omega, dtype=float)
    pref = 2.0 * params.gamma_m / params.omega_m
    if T == 0:
        return np.where(omega > 0, 2.0 * pref * omega, 0.0)
    # omega (1 + coth x) = 2 omega / (1 - exp(-2x)): no cancellation for omega < 0
    x2 = HBAR * omega / (K_B * T)
    safe = np.where(x2 == 0, 1.0, x2)
    with np.errstate(over="ignore"):
        ratio = np.where(x2 == 0, 1.0, safe / -np.expm1(-safe))
    return pref * (2.0 * K_B * T / HBAR) * ratio


def output_noise_spectra(omega, op, T):
    """Normal-ordered flux spectrum and anomalous spectrum of the output fluctuations.

    Returns ``(n_spec, a_spec)`` with
    ``<dc^+(t) dc(t+tau)> = (1/2pi) int n_spec(w) exp(-i w tau) dw`` and
    ``<dc(t) dc(t+tau)> = (1/2pi) int a_spec(w) exp(+i w tau) dw``.
    """
    omega = np.asarray(omega, dtype=float)
    tp = transfer_functions(omega, op)
    tm = transfer_functions(-omega, op)
    n_spec = np.abs(tp.V) ** 2 * thermal_kernel(-omega, T, op) + np.abs(tp.F) ** 2
    a_spec = tp.V * tm.V * thermal_kernel(omega, T, op) + tp.E * tm.F
    return n_spec, a_spec


def noise_grid(op, background_points=8001, window_points=801, half_range=8.0,
               window_linewidths=20.0):
    """Integration grid for the noise spectra of ``op``.

    A uniform background over ``+-half_range * omega_m`` plus a window of
    ``window_linewidths`` linewidths around each normal mode; zero is
    pinned as a node because the zero-temperature bath spectrum has a kink
    there.
    """
    roots = find_roots(expand_char_poly(op)).roots
    span = half_range * op.omega_m
    windows = tuple(
        (float(r.real), float(window_linewidths * abs(r.imag)), int(window_points))
        for r in roots
    )
    return quad.GridSpec(background_range=(-span, span), background_points=background_points,
                         windows=windows, anchors=(0.0,))


@dataclass(frozen=True)
class CorrelatorSeries:
    """Delay-domain correlations of the output fluctuations.

    ``g1`` and ``A`` are the unnormalized normal and anomalous two-time
    correlators (photon flux units, 1/s); ``n_bar`` is the equal-time flux.
    """

    taus: np.ndarray
    n_bar: float
    g1: np.ndarray
    A: np.ndarray
    g2: np.ndarray
    band: str = "total"

    COLUMNS = ("tau_us", "g2", "g1_re", "g1_im", "a_re", "a_im")

    def columns(self):
        g1 = self.g1 / self.n_bar
        a = self.A / self.n_bar
        return {
            "tau_us": self.taus * 1e6,
            "g2": self.g2,
            "g1_re": g1.real,
            "g1_im": g1.imag,
            "a_re": a.real,
            "a_im": a.imag,
        }

    def summary(self):
        peak_tau, ratio = cs_violation(self)
        return {
            "n_bar": float(self.n_bar),
            "g2_zero": float(self.g2[_zero_index(self.taus)]),
            "g2_peak": float(np.max(self.g2)),
            "peak_tau_us": float(peak_tau * 1e6),
            "cs_ratio": float(ratio),
        }


def _band_slice(omega, band):
    if band == "total":
        return slice(None)
    if band == "stokes":
        return omega >= 0
    if band == "antistokes":
        return omega <= 0
    raise InvalidParameterError(f"band must be one of {BANDS}, got {band!r}")


def correlate_on(omega, op, T, taus, band="total"):
    """Correlator series from spectra sampled on an explicit frequency grid."""
    omega = np.asarray(omega, dtype=float)
    n_spec, a_spec = output_noise_spectra(omega, op, T)
    sel = _band_slice(omega, band)
    omega, n_spec, a_spec = omega[sel], n_spec[sel], a_spec[sel]

    n_bar = float(quad.integrate(omega, n_spec).real / quad.TWO_PI)
    if not n_bar > 0:
        raise CorrelationUndefinedError(
            "output photon flux is zero (no coupling or no pump); g2 is undefined")
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    g1 = quad.oscillatory_transform(omega, n_spec, taus, sign=-1)
    A = quad.oscillatory_transform(omega, a_spec, taus, sign=+1)
    g2 = 1.0 + (np.abs(g1) ** 2 + np.abs(A) ** 2) / n_bar ** 2
    return CorrelatorSeries(taus=taus, n_bar=n_bar, g1=g1, A=A, g2=g2, band=band)


def band_components(op, T, taus, band="total", grid=None):
    """Correlators of the output restricted to positive (Stokes) or negative
    (anti-Stokes) frequency offsets, or of the full field."""
    spec = grid if grid is not None else noise_grid(op)
    return correlate_on(quad.build_grid(spec), op, T, taus, band)


def converged_correlators(op, T, taus, rel_tol=1e-4, band="total", grid=None):
    """As :func:`band_components`, doubling the grid until g2 changes by less than ``rel_tol``."""
    spec = grid if grid is not None else noise_grid(op)
    return quad.converge(lambda omega: correlate_on(omega, op, T, taus, band), spec,
                         rel_tol=rel_tol, key=lambda s: s.g2)


def correlators(op, T, taus, grid=None):
    """Normalized second-order correlation g2(tau) of the full output field."""
    return band_components(op, T, taus, band="total", grid=grid)


def cross_correlation(op, T, taus, grid=None):
    """Stokes/anti-Stokes cross-correlation ``g2_{s,as}(tau)``.

    The normal-ordered cross term vanishes (disjoint spectral supports), so
    only the anomalous part restricted to positive frequencies remains.
    """
    spec = grid if grid is not None else noise_grid(op)
    omega = quad.build_grid(spec)
    n_spec, a_spec = output_noise_spectra(omega, op, T)
    pos, neg = omega >= 0, omega <= 0
    n_s = quad.integrate(omega[pos], n_spec[pos]).real / quad.TWO_PI
    n_as = quad.integrate(omega[neg], n_spec[neg]).real / quad.TWO_PI
    if not (n_s > 0 and n_as > 0):
        raise CorrelationUndefinedError("a sideband carries no photon flux")
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    pair = quad.oscillatory_transform(omega[pos], a_spec[pos], taus, sign=+1)
    return 1.0 + np.abs(pair) ** 2 / (n_s * n_as)


def _zero_index(taus):
    return int(np.argmin(np.abs(taus)))


def cs_violation(series):
    """Delay of the g2 maximum and its ratio to g2 at zero delay.

    A ratio above 1 means ``g2(tau) > g2(0)`` for some delay, which no
    classical stationary field allows.
    """
    if len(series.g2) == 0:
        raise InvalidParameterError("empty correlator series")
    g2, taus = np.asarray(series.g2), np.asarray(series.taus)
    i = int(np.argmax(g2))
    if taus[i] < 0:
        # prefer the mirror image at positive delay when it is an equal maximum
        j = int(np.argmin(np.abs(taus + taus[i])))
        if g2[j] >= g2[i] * (1 - 1e-6):
            i = j
    return float(taus[i]), float(g2[i] / g2[_zero_index(taus)])
