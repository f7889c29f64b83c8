"""Quadrature on resonance-adapted frequency grids.

Spectra in this package are sums of narrow resonances sitting on a broad
background, so grids are built from a coarse background plus dense
windows around each resonance. Fourier transforms to the delay domain use
a Filon-type rule: the integrand is interpolated linearly on each segment
and the oscillating factor is integrated exactly, so accuracy does not
degrade as ``tau * omega`` becomes large.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import InvalidParameterError, NumericalFailureError

TWO_PI = 2.0 * np.pi

_SERIES_CUTOFF = 0.2
_SERIES_TERMS = 14


@dataclass(frozen=True)
class GridSpec:
    """Recipe for a merged frequency grid.

    ``windows`` holds ``(center, width, points)`` triples; ``anchors`` are
    extra abscissae that must be grid nodes (e.g. kinks of the integrand).
    """

    background_range: tuple
    background_points: int
    windows: tuple = ()
    anchors: tuple = field(default=())

    def __post_init__(self):
        lo, hi = self.background_range
        if not lo < hi:
            raise InvalidParameterError("background range must be increasing")
        if self.background_points < 2:
            raise InvalidParameterError("background needs at least 2 points")
        for center, width, points in self.windows:
            if points < 2 or width <= 0:
                raise InvalidParameterError("each window needs width > 0 and >= 2 points")

    def refined(self, factor=2):
        """Same layout with every segment subdivided ``factor`` times (grids nest)."""
        return replace(
            self,
            background_points=(self.background_points - 1) * factor + 1,
            windows=tuple((c, w, (n - 1) * factor + 1) for c, w, n in self.windows),
        )


def build_grid(spec):
    """Strictly increasing union of background, windows and anchors."""
    lo, hi = spec.background_range
    parts = [np.linspace(lo, hi, spec.background_points)]
    for center, width, points in spec.windows:
        a, b = center - 0.5 * width, center + 0.5 * width
        if b <= lo or a >= hi:
            continue
        seg = np.linspace(a, b, points)
        parts.append(seg[(seg >= lo) & (seg <= hi)])
    anchors = np.asarray(spec.anchors, dtype=float)
    parts.append(anchors[(anchors >= lo) & (anchors <= hi)])
    return np.unique(np.concatenate(parts))


def merge_grids(*grids):
    return np.unique(np.concatenate([np.asarray(g, dtype=float) for g in grids]))


def _check_grid(omega, values):
    omega = np.asarray(omega, dtype=float)
    values = np.asarray(values)
    if omega.ndim != 1 or omega.size < 2:
        raise InvalidParameterError("need a 1-D grid with at least 2 points")
    if values.shape[-1] != omega.size:
        raise InvalidParameterError("values and grid lengths differ")
    if not np.all(np.diff(omega) > 0):
        raise InvalidParameterError("grid must be strictly increasing (sorted, no duplicates)")
    return omega, values


def integrate(omega, values):
    """Composite trapezoid rule along the last axis of ``values``."""
    omega, values = _check_grid(omega, values)
    h = np.diff(omega)
    return np.sum(h * (values[..., :-1] + values[..., 1:]), axis=-1) * 0.5


def _filon_weights(theta):
    """Left/right endpoint weights for exact integration of e^{i theta u} times a linear ramp.

    For a unit-length segment, returns ``(alpha, beta)`` with
    ``int_0^1 [(1-u) f0 + u f1] exp(i theta u) du = alpha f0 + beta f1``.
    """
    theta = np.asarray(theta, dtype=float)
    alpha = np.empty(theta.shape, dtype=complex)
    beta = np.empty(theta.shape, dtype=complex)

    small = np.abs(theta) < _SERIES_CUTOFF
    ts = theta[small]
    a_s = np.zeros(ts.shape, dtype=complex)
    b_s = np.zeros(ts.shape, dtype=complex)
    term = np.ones(ts.shape, dtype=complex)  # (i theta)^k / (k+2)!
    term /= 2.0
    for k in range(_SERIES_TERMS):
        a_s += term
        b_s += (k + 1) * term
        term = term * (1j * ts) / (k + 3)
    alpha[small], beta[small] = a_s, b_s

    tl = theta[~small]
    e = np.exp(1j * tl)
    em1 = (e - 1.0) / tl ** 2
    alpha[~small] = 1j / tl - em1
    beta[~small] = -1j * e / tl + em1
    return alpha, beta


def oscillatory_transform(omega, values, taus, sign=-1, max_block=2_000_000):
    """``(1/2pi) * integral f(omega) exp(sign * i * omega * tau) d omega`` for each tau.

    ``values`` may be 1-D or stacked (K, N) to share the oscillatory
    weights between several integrands; the result then has shape (K, M).
    """
    if sign not in (1, -1):
        raise InvalidParameterError("sign must be +1 or -1")
    omega, values = _check_grid(omega, values)
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    stacked = values.ndim == 2
    vals = values if stacked else values[np.newaxis, :]
    h = np.diff(omega)
    f0, f1 = vals[:, :-1], vals[:, 1:]

    out = np.empty((vals.shape[0], taus.size), dtype=complex)
    zero = taus == 0
    if np.any(zero):
        out[:, zero] = (integrate(omega, vals) / TWO_PI)[:, np.newaxis]

    idx = np.flatnonzero(~zero)
    block = max(1, max_block // h.size)
    for start in range(0, idx.size, block):
        sel = idx[start:start + block]
        s = sign * taus[sel][:, np.newaxis]
        alpha, beta = _filon_weights(s * h)
        phase = np.exp(1j * s * omega[:-1]) * h
        wa, wb = phase * alpha, phase * beta
        out[:, sel] = (f0 @ wa.T + f1 @ wb.T) / TWO_PI
    return out if stacked else out[0]


def converge(f, spec, rel_tol=1e-4, max_doublings=6, key=None):
    """Evaluate ``f(grid)`` on successively doubled grids until it settles.

    ``key`` extracts the numbers to compare from whatever ``f`` returns
    (identity by default). Returns ``(value, achieved_tol)`` where
    ``achieved_tol`` is the relative change over the last doubling,
    max-norm for arrays.
    """
    if not rel_tol > 0:
        raise InvalidParameterError("rel_tol must be positive")
    key = key or (lambda v: v)
    prev = f(build_grid(spec))
    history = [prev]
    for _ in range(max_doublings):
        spec = spec.refined()
        value = f(build_grid(spec))
        history.append(value)
        a, b = np.asarray(key(value)), np.asarray(key(prev))
        change = np.max(np.abs(a - b))
        achieved = 0.0 if change == 0 else float(change / np.max(np.abs(a)))
        if achieved <= rel_tol:
            return value, achieved
        prev = value
    raise NumericalFailureError(
        f"no convergence to {rel_tol:g} after {max_doublings} doublings", history=history)
