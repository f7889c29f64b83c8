import dataclasses

import numpy as np
import pytest
import sympy as sp

from cavityfwm import (CorrelationUndefinedError, InvalidParameterError, band_components,
                       correlators, cs_violation, output_noise_spectra, thermal_kernel,
                       transfer_functions)
from cavityfwm import noise, quad
from cavityfwm.modes import expand_char_poly, find_roots
from cavityfwm.noise import CorrelatorSeries

from conftest import g2_series, op_at, uncoupled

# tests/oracles/scalar_oracles.py, 1 mW at omega = omega_m
V_ORACLE = -0.00078554738451118572 + 0.0022513596201257857j
E_ORACLE = -0.99013146270191198 - 0.22476890069942441j
F_ORACLE = -0.097429029354905024 + 0.20380746428189061j


def test_transfer_functions_oracle(op1):
    tp = transfer_functions(op1.omega_m, op1)
    assert tp.V == pytest.approx(V_ORACLE, rel=1e-12)
    assert tp.E == pytest.approx(E_ORACLE, rel=1e-12)
    assert tp.F == pytest.approx(F_ORACLE, rel=1e-12)


def test_transfer_functions_uncoupled(rng, op1):
    op = uncoupled(op1)
    w = rng.uniform(-5, 5, 500) * op.omega_m
    tp = transfer_functions(w, op)
    assert np.all(tp.V == 0) and np.all(tp.F == 0)
    expected = (op.kappa + 1j * (w - op.detuning)) / (op.kappa - 1j * (w - op.detuning))
    assert np.allclose(tp.E, expected, rtol=1e-12, atol=0)
    assert np.allclose(np.abs(tp.E), 1, rtol=0, atol=1e-12)


def test_transfer_functions_without_pump(rng):
    op = op_at(0.0)
    tp = transfer_functions(rng.uniform(-5, 5, 100) * op.omega_m, op)
    assert np.all(tp.V == 0) and np.all(tp.F == 0)


def test_transfer_functions_follow_from_linearized_dynamics():
    """Solve the linearized cavity/mirror equations symbolically and compare."""
    w, k, D, wm, gm, chi = sp.symbols("omega kappa Delta omega_m gamma_m chi", real=True)
    c0 = sp.symbols("c0")
    C, B, Q, xi, a, at = sp.symbols("C B Q xi a at")
    eqs = [
        sp.Eq((k + sp.I * D - sp.I * w) * C, sp.I * wm * chi * c0 * Q + sp.sqrt(2 * k) * a),
        sp.Eq((k - sp.I * D - sp.I * w) * B, -sp.I * wm * chi * sp.conjugate(c0) * Q + sp.sqrt(2 * k) * at),
        sp.Eq((wm ** 2 - w ** 2 - sp.I * gm * w) * Q,
              2 * wm ** 2 * chi * (sp.conjugate(c0) * C + c0 * B) + wm * xi),
    ]
    sol = sp.solve(eqs, [C, B, Q], dict=True)[0]
    out = sp.sqrt(2 * k) * sol[C] - a

    op = op_at(1.0)
    subs = {w: 0.83 * op.omega_m, k: op.kappa, D: op.detuning, wm: op.omega_m,
            gm: op.gamma_m, chi: op.chi, c0: op.c0}
    tp = transfer_functions(0.83 * op.omega_m, op)
    for sym, got in ((xi, tp.V), (a, tp.E), (at, tp.F)):
        want = complex(sp.diff(out, sym).subs(subs).evalf(30))
        assert got == pytest.approx(want, rel=1e-10)


def test_thermal_kernel_zero_temperature(params):
    wm = params.omega_m
    assert thermal_kernel(-wm, 0.0, params) == 0.0
    assert thermal_kernel(wm, 0.0, params) == pytest.approx(4 * params.gamma_m, rel=1e-15)
    assert thermal_kernel(0.0, 0.0, params) == 0.0


@pytest.mark.parametrize("T", [1e-6, 1e-3, 0.1, 4.0, 300.0])
def test_thermal_kernel_detailed_balance(params, T, rng):
    w = rng.uniform(-5, 5, 200) * params.omega_m
    diff = thermal_kernel(w, T, params) - thermal_kernel(-w, T, params)
    assert np.allclose(diff, 4 * params.gamma_m / params.omega_m * w, rtol=1e-9,
                       atol=1e-12 * np.max(np.abs(thermal_kernel(w, T, params))))
    assert np.all(thermal_kernel(w, T, params) >= 0)
    assert np.isfinite(thermal_kernel(0.0, T, params))


def test_thermal_kernel_negative_temperature(params):
    with pytest.raises(InvalidParameterError):
        thermal_kernel(1.0, -1.0, params)


def test_spectra_vanish_without_coupling(op1, rng):
    w = rng.uniform(-5, 5, 300) * op1.omega_m
    n, a = output_noise_spectra(w, uncoupled(op1), 0.0)
    assert np.all(n == 0) and np.all(a == 0)


@pytest.mark.parametrize("power_mw", [1.0, 4.0, 20.0])
@pytest.mark.parametrize("T", [0.0, 0.01, 1.0])
def test_flux_spectrum_nonnegative(power_mw, T):
    op = op_at(power_mw)
    w = quad.build_grid(noise.noise_grid(op, 2001, 101))
    n, _ = output_noise_spectra(w, op, T)
    assert np.all(n >= 0)


def test_flux_spectrum_peaks_at_normal_modes(op1):
    w = quad.build_grid(noise.noise_grid(op1))
    n, _ = output_noise_spectra(w, op1, 0.0)
    roots = find_roots(expand_char_poly(op1)).roots
    interior = (n[1:-1] > n[:-2]) & (n[1:-1] > n[2:]) & (n[1:-1] > 1e-3 * n.max())
    peaks = w[1:-1][interior]
    assert len(peaks) >= 2
    for p in peaks:
        dist = np.abs(p - roots.real)
        j = np.argmin(dist)
        assert dist[j] < abs(roots[j].imag)
    # one of the peaks sits on the strongest resonance
    assert np.min(np.abs(w[np.argmax(n)] - roots.real)) < np.min(np.abs(roots.imag))


def test_correlation_undefined_without_coupling(op1):
    with pytest.raises(CorrelationUndefinedError):
        correlators(uncoupled(op1), 0.0, [0.0, 1e-6])
    with pytest.raises(CorrelationUndefinedError):
        band_components(uncoupled(op1), 0.0, [0.0], band="stokes")
    with pytest.raises(CorrelationUndefinedError):
        correlators(op_at(0.0), 0.0, [0.0])


def test_unknown_band(op1):
    with pytest.raises(InvalidParameterError):
        band_components(op1, 0.0, [0.0], band="blue")


def test_total_band_is_correlators(op1):
    taus = np.linspace(-5e-6, 5e-6, 21)
    a = correlators(op1, 0.0, taus)
    b = band_components(op1, 0.0, taus, band="total")
    assert np.array_equal(a.g2, b.g2) and a.n_bar == b.n_bar


def test_band_fluxes_add_up(op1):
    taus = [0.0]
    total = band_components(op1, 0.0, taus).n_bar
    s = band_components(op1, 0.0, taus, band="stokes").n_bar
    a = band_components(op1, 0.0, taus, band="antistokes").n_bar
    assert s + a == pytest.approx(total, rel=1e-12)
    assert s > 0 and a > 0


def test_gaussian_factorization():
    s = g2_series(1.0)
    expected = 1 + np.abs(s.g1) ** 2 / s.n_bar ** 2 + np.abs(s.A) ** 2 / s.n_bar ** 2
    assert np.allclose(s.g2, expected, rtol=1e-14, atol=0)


@pytest.mark.parametrize("power_mw", [1.0, 4.0])
def test_g2_properties(power_mw):
    s = g2_series(power_mw)
    assert s.g2[np.argmin(np.abs(s.taus))] >= 2
    # g1 is bounded by the flux (Cauchy-Schwarz for the normal-ordered correlator)
    assert np.all(np.abs(s.g1) <= s.n_bar * (1 + 1e-9))
    # symmetry in delay
    assert np.max(np.abs(s.g2 - s.g2[::-1])) < 1e-3


def test_g2_relaxes_to_one_at_long_delay():
    for power_mw in (1.0, 4.0):
        op = op_at(power_mw)
        gamma_eff = np.min(np.abs(find_roots(expand_char_poly(op)).roots.imag))
        s = correlators(op, 0.0, [0.0, 50 / gamma_eff, 80 / gamma_eff])
        assert np.all(np.abs(s.g2[1:] - 1) < 0.05)


def test_g2_converged_under_doubling():
    for power_mw in (1.0, 4.0):
        coarse, fine = g2_series(power_mw), g2_series(power_mw, refine=1)
        i0 = np.argmin(np.abs(coarse.taus))
        assert abs(coarse.g2[i0] / fine.g2[i0] - 1) < 0.005
        assert abs(coarse.g2.max() / fine.g2.max() - 1) < 0.005


def test_converged_correlators_reports_tolerance(op1):
    taus = np.linspace(0, 5e-6, 11)
    series, achieved = noise.converged_correlators(op1, 0.0, taus, rel_tol=1e-3)
    assert achieved <= 1e-3
    assert series.g2.shape == taus.shape


def test_finite_temperature_runs(op1):
    cold = correlators(op1, 0.0, [0.0, 2e-6])
    warm = correlators(op1, 1e-3, [0.0, 2e-6])
    assert warm.n_bar > cold.n_bar
    assert np.all(np.isfinite(warm.g2)) and warm.g2[0] >= 2


def test_cs_violation_constant_series():
    taus = np.linspace(-1, 1, 5)
    s = CorrelatorSeries(taus=taus, n_bar=1.0, g1=np.ones(5), A=np.zeros(5), g2=np.full(5, 2.0))
    peak, ratio = cs_violation(s)
    assert ratio == 1.0


def test_cs_violation_prefers_positive_delay():
    s = g2_series(1.0)
    peak, ratio = cs_violation(s)
    assert peak > 0
    assert ratio == pytest.approx(s.g2.max() / s.g2[np.argmin(np.abs(s.taus))])


def test_cs_ratio_decreases_with_power():
    assert cs_violation(g2_series(4.0))[1] < cs_violation(g2_series(1.0))[1]


def test_cross_correlation(op1):
    g = noise.cross_correlation(op1, 0.0, np.linspace(0, 5e-6, 6))
    assert np.all(g >= 1)


def test_series_columns_and_summary():
    s = g2_series(1.0)
    cols = s.columns()
    assert tuple(cols) == CorrelatorSeries.COLUMNS
    summary = s.summary()
    assert set(summary) == {"n_bar", "g2_zero", "g2_peak", "peak_tau_us", "cs_ratio"}
    assert summary["peak_tau_us"] == pytest.approx(2.1, abs=0.1)
