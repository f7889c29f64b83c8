"""Normal modes: roots of the characteristic quartic and their pump-power dependence.

The characteristic denominator is a degree-4 polynomial in the probe
offset. Its roots are the complex normal-mode frequencies; the pair with
positive real part shows lifetime splitting at low pump power and
normal-mode splitting above a critical power.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import linear_sum_assignment

from .errors import BracketingError, InvalidParameterError, NumericalFailureError
from .model import steady_state

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-8
SPLIT_TOL = 1e-3  # in units of omega_m
TIE_TOL = 1e-9  # in units of omega_m

BRANCHES = ("mechanical-", "cavity-", "mechanical+", "cavity+")


@dataclass(frozen=True)
class CharPoly:
    """Quartic in ascending powers of the offset.

    ``omega_m`` and ``kappa`` only set the scale used to normalize root
    residuals; both default to 1 for dimensionless polynomials.
    """

    coeffs: np.ndarray
    omega_m: float = 1.0
    kappa: float = 1.0

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        acc = np.zeros_like(x) + self.coeffs[-1]
        for a in self.coeffs[-2::-1]:
            acc = acc * x + a
        return acc

    def derivative(self, x):
        dc = P.polyder(self.coeffs)
        x = np.asarray(x, dtype=complex)
        acc = np.zeros_like(x) + dc[-1]
        for a in dc[-2::-1]:
            acc = acc * x + a
        return acc

    def normalized_residual(self, r):
        r = np.asarray(r, dtype=complex)
        scale = self.omega_m ** 3 * self.kappa ** 2 * np.maximum(1.0, np.abs(r / self.omega_m) ** 4)
        return np.abs(self(r)) / scale


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    branch_labels: tuple
    stable: bool
    residuals: np.ndarray

    def by_label(self):
        return dict(zip(self.branch_labels, self.roots))

    def positive_pair(self):
        """The two roots with the largest real parts (the Re > 0 side)."""
        order = np.argsort(self.roots.real, kind="stable")
        pair = self.roots[order[2:]]
        return pair[np.argsort(pair.real, kind="stable")]

    def re_separation(self):
        lo, hi = self.positive_pair()
        return abs(hi.real - lo.real)

    def relabel(self, labels):
        return RootSet(self.roots, tuple(labels), self.stable, self.residuals)


def expand_char_poly(op):
    """Ascending coefficients of the characteristic denominator."""
    mech = np.array([-op.omega_m ** 2, 1j * op.gamma_m, 1.0], dtype=complex)
    cav = np.array([op.kappa ** 2 + op.detuning ** 2, -2j * op.kappa, -1.0], dtype=complex)
    coeffs = P.polymul(mech, cav)
    coeffs[0] += op.coupling_term
    return CharPoly(coeffs=coeffs, omega_m=op.omega_m, kappa=op.kappa)


def _companion(coeffs):
    monic = coeffs[:-1] / coeffs[-1]
    n = monic.size
    mat = np.zeros((n, n), dtype=complex)
    mat[1:, :-1] = np.eye(n - 1)
    mat[:, -1] = -monic
    return mat


def _sort_key(r):
    return (np.sign(r.real), abs(r.real), r.imag)


def find_roots(poly, labels=None, max_newton=50):
    """All roots of ``poly`` from its companion matrix, Newton-polished.

    Roots are returned sorted by (sign of real part, |real part|).
    Raises NumericalFailureError when polishing cannot push every
    normalized residual below ``RESIDUAL_TOL``.
    """
    coeffs = np.asarray(poly.coeffs, dtype=complex)
    if coeffs[-1] == 0:
        raise InvalidParameterError("leading coefficient must be non-zero")
    roots = np.linalg.eigvals(_companion(coeffs))
    for i, r in enumerate(roots):
        res = poly.normalized_residual(r)
        for _ in range(max_newton):
            dp = poly.derivative(r)
            if dp == 0:
                break
            trial = r - poly(r) / dp
            trial_res = poly.normalized_residual(trial)
            if not trial_res < res:
                break
            r, res = trial, trial_res
        roots[i] = r
    roots = np.array(sorted(roots, key=_sort_key))
    residuals = poly.normalized_residual(roots)
    if not np.all(residuals < RESIDUAL_TOL):
        raise NumericalFailureError(
            f"root polishing did not reach residual {RESIDUAL_TOL:g}", history=residuals)
    if labels is None:
        labels = tuple(f"r{i}" for i in range(roots.size))
    return RootSet(roots=roots, branch_labels=tuple(labels),
                   stable=bool(np.all(roots.imag < 0)), residuals=residuals)


def uncoupled_roots(op):
    """Analytic roots of the denominator with the coupling switched off."""
    wm, gm = op.omega_m, op.gamma_m
    w_mech = np.sqrt(complex(wm ** 2 - gm ** 2 / 4.0))
    return {
        "mechanical-": -w_mech - 0.5j * gm,
        "cavity-": -op.detuning - 1j * op.kappa,
        "mechanical+": w_mech - 0.5j * gm,
        "cavity+": op.detuning - 1j * op.kappa,
    }


def _match(prev_roots, prev_labels, new, omega_m):
    cost = np.abs(np.subtract.outer(prev_roots, new.roots))
    rows, cols = linear_sum_assignment(cost)
    assigned = dict(zip(rows, cols))

    tied = []
    for i in range(cost.shape[0]):
        best = np.sort(cost[i])
        if best[1] - best[0] < TIE_TOL * omega_m:
            tied.append(i)
    if len(tied) > 1:
        log.info("branch tracking tie between %s; ordering by imaginary part",
                 [prev_labels[i] for i in tied])
        tied_cols = sorted((assigned[i] for i in tied), key=lambda j: new.roots[j].imag)
        tied_rows = sorted(tied, key=lambda i: prev_roots[i].imag)
        assigned.update(zip(tied_rows, tied_cols))

    labels = [None] * new.roots.size
    for i, j in assigned.items():
        labels[j] = prev_labels[i]
    return new.relabel(labels)


def roots_at(params, power):
    op = steady_state(params.with_power(power))
    return find_roots(expand_char_poly(op))


def sweep_roots(params, power_grid):
    """Root sets along a sorted pump-power grid (W) with continuous branch labels.

    Labels are seeded from the uncoupled analytic roots and carried from one
    power to the next by minimum-distance assignment.
    """
    powers = np.asarray(power_grid, dtype=float)
    if powers.ndim != 1 or powers.size == 0:
        raise InvalidParameterError("power grid must be a non-empty 1-D sequence")
    if np.any(powers < 0) or np.any(np.diff(powers) < 0):
        raise InvalidParameterError("powers must be non-negative and sorted ascending")

    seed = uncoupled_roots(steady_state(params.with_power(powers[0])))
    prev_labels = tuple(seed)
    prev_roots = np.array([seed[k] for k in prev_labels])
    out = []
    for p in powers:
        rs = _match(prev_roots, prev_labels, roots_at(params, p), params.omega_m)
        if not rs.stable:
            log.warning("unstable operating point at pump power %.6g W", p)
        out.append(rs)
        prev_roots, prev_labels = rs.roots, rs.branch_labels
    return out


def critical_power(params, bracket, resolution=1e-6, split_tol=SPLIT_TOL):
    """Pump power (W) at which the Re > 0 root pair starts to split in frequency.

    Bisection on whether the real-part separation exceeds
    ``split_tol * omega_m``; ``bracket`` must straddle the onset.
    """
    lo, hi = (float(b) for b in bracket)
    if not 0 <= lo < hi:
        raise InvalidParameterError("bracket must satisfy 0 <= low < high")
    threshold = split_tol * params.omega_m

    def split(p):
        return roots_at(params, p).re_separation() > threshold

    if split(lo) or not split(hi):
        raise BracketingError(
            f"splitting onset not inside [{lo:g}, {hi:g}] W")
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if split(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def roots_columns(powers, rootsets, omega_m):
    """Long-format table: one row per (power, branch)."""
    rows = {"power_mw": [], "branch": [], "re_over_omega_m": [],
            "im_over_omega_m": [], "stable": []}
    for p, rs in zip(powers, rootsets):
        for label in BRANCHES:
            r = rs.by_label().get(label)
            if r is None:
                continue
            rows["power_mw"].append(p * 1e3)
            rows["branch"].append(label)
            rows["re_over_omega_m"].append(r.real / omega_m)
            rows["im_over_omega_m"].append(r.imag / omega_m)
            rows["stable"].append(rs.stable)
    return rows
