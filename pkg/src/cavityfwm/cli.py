"""Command-line front end: figure-ready datasets from presets or config files.

Powers are given in mW, probe offsets are reported in units of omega_m and
delays in microseconds.
"""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__, io, modes, noise, quad
from .config import load_params
from .errors import CavityFWMError
from .model import preset, steady_state
from .response import default_delta_grid, sweep_response

log = logging.getLogger("cavityfwm")


def parse_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def parse_sweep(text):
    """``start:stop[:count]`` in mW; ``count`` defaults to 201 (1 if start == stop)."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}") from None
    if len(nums) == 2:
        start, stop = nums
        count = 1 if start == stop else 201
    elif len(nums) == 3:
        start, stop, count = nums[0], nums[1], int(nums[2])
    else:
        raise argparse.ArgumentTypeError(f"sweep must be start:stop[:count], got {text!r}")
    if count < 1 or stop < start or start < 0:
        raise argparse.ArgumentTypeError(f"sweep must be non-negative and ascending: {text!r}")
    return np.linspace(start, stop, count)


def power_tag(p_mw):
    return f"{p_mw:g}mw".replace(".", "p")


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", default="aspelmeyer", help="built-in parameter set")
    common.add_argument("--config", type=Path, help="flat key = value parameter file")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--tol", type=_positive, default=1e-4,
                        help="relative convergence tolerance for quadrature")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="cavityfwm",
        description="Four-wave mixing, normal modes and photon correlations "
                    "in cavity optomechanics.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gain", parents=[common], help="Stokes/anti-Stokes gain and quadratures")
    p.add_argument("--power-mw", type=parse_list, default=[1.0, 6.9, 20.0])
    p.add_argument("--delta-range", type=parse_list, default=[0.5, 1.5],
                   help="probe offset range in units of omega_m, as lo,hi")
    p.add_argument("--points", type=int, default=2001)

    p = sub.add_parser("roots", parents=[common], help="normal-mode roots versus pump power")
    p.add_argument("--power-sweep-mw", type=parse_sweep, default=parse_sweep("0:20:201"))

    p = sub.add_parser("g2", parents=[common], help="photon correlation g2(tau)")
    p.add_argument("--power-mw", type=parse_list, default=[1.0])
    p.add_argument("--temperature-k", type=float, default=None)
    p.add_argument("--tau-max-us", type=_positive, default=30.0)
    p.add_argument("--tau-points", type=int, default=1201,
                   help="samples on the symmetric delay grid [-tau_max, tau_max]")
    p.add_argument("--band", choices=noise.BANDS, default="total")

    p = sub.add_parser("spectrum", parents=[common], help="output noise spectra")
    p.add_argument("--power-mw", type=parse_list, default=[1.0])
    p.add_argument("--temperature-k", type=float, default=None)

    sub.add_parser("repro", parents=[common], help="all figure datasets in one run")
    return parser


def resolve_params(args):
    if args.config is not None:
        return load_params(args.config)
    return preset(args.preset)


def run_gain(params, out, fmt, powers_mw, delta_range=(0.5, 1.5), points=2001):
    lo, hi = delta_range
    summary = []
    for p_mw in powers_mw:
        op = steady_state(params.with_power(p_mw * 1e-3))
        series = sweep_response(op, default_delta_grid(op.omega_m, points, lo, hi),
                                pump_power=p_mw * 1e-3)
        io.write_table(out / f"gain_{power_tag(p_mw)}", series.columns(), fmt)
        cols = series.columns()
        i_s, i_as = int(np.argmax(cols["Gs"])), int(np.argmax(cols["Gas"]))
        entry = {
            "power_mw": p_mw,
            "max_Gs": cols["Gs"][i_s],
            "delta_at_max_Gs": cols["delta_over_omega_m"][i_s],
            "max_Gas": cols["Gas"][i_as],
            "delta_at_max_Gas": cols["delta_over_omega_m"][i_as],
        }
        summary.append(entry)
        print(f"P = {p_mw:g} mW: max Gs = {entry['max_Gs']:.4f} "
              f"at {entry['delta_at_max_Gs']:.4f} omega_m, "
              f"max Gas = {entry['max_Gas']:.4f} at {entry['delta_at_max_Gas']:.4f} omega_m")
    io.write_json(out / "gain_summary.json", summary)
    return summary


def run_roots(params, out, fmt, powers_mw):
    powers = np.asarray(powers_mw, dtype=float) * 1e-3
    rootsets = modes.sweep_roots(params, powers)
    io.write_table(out / "roots", modes.roots_columns(powers, rootsets, params.omega_m), fmt)

    unstable = [p * 1e3 for p, rs in zip(powers, rootsets) if not rs.stable]
    if unstable:
        print(f"warning: unstable operating points at {unstable} mW", file=sys.stderr)

    threshold = modes.SPLIT_TOL * params.omega_m
    split = np.array([rs.re_separation() > threshold for rs in rootsets])
    critical = None
    if split.any() and not split[0]:
        first = int(np.argmax(split))
        critical = modes.critical_power(params, (powers[first - 1], powers[first])) * 1e3
        print(f"normal-mode splitting onset: {critical:.3f} mW")
    else:
        print("normal-mode splitting onset not bracketed by the sweep")
    summary = {"critical_power_mw": critical, "unstable_powers_mw": unstable,
               "branches": list(modes.BRANCHES), "rows": len(powers) * 4}
    io.write_json(out / "roots_summary.json", summary)
    return summary


def _tau_grid(tau_max_us, points):
    return np.linspace(-tau_max_us, tau_max_us, points) * 1e-6


def run_g2(params, out, fmt, powers_mw, temperature=None, tau_max_us=30.0,
           tau_points=1201, band="total", tol=1e-4):
    T = params.temperature if temperature is None else temperature
    taus = _tau_grid(tau_max_us, tau_points)
    summaries = []
    for p_mw in powers_mw:
        op = steady_state(params.with_power(p_mw * 1e-3))
        series, achieved = noise.converged_correlators(op, T, taus, rel_tol=tol, band=band)
        tag = power_tag(p_mw)
        io.write_table(out / f"g2_{tag}", series.columns(), fmt)
        summary = {"power_mw": p_mw, "temperature_k": T, "band": band,
                   "achieved_tol": achieved, **series.summary()}
        io.write_json(out / f"g2_{tag}_summary.json", summary)
        if band == "total":
            cross = noise.cross_correlation(op, T, taus)
            io.write_table(out / f"g2_cross_{tag}", {"tau_us": taus * 1e6, "g2_cross": cross}, fmt)
        summaries.append(summary)
        print(f"P = {p_mw:g} mW: g2(0) = {summary['g2_zero']:.3f}, "
              f"peak g2 = {summary['g2_peak']:.3f} at {summary['peak_tau_us']:.3f} us, "
              f"ratio = {summary['cs_ratio']:.3f}")
    return summaries


def run_spectrum(params, out, fmt, powers_mw, temperature=None):
    T = params.temperature if temperature is None else temperature
    for p_mw in powers_mw:
        op = steady_state(params.with_power(p_mw * 1e-3))
        spec = noise.noise_grid(op)
        omega = quad.build_grid(spec)
        n_spec, a_spec = noise.output_noise_spectra(omega, op, T)
        header = {
            "power_mw": p_mw,
            "temperature_k": T,
            "background_range_over_omega_m": [x / op.omega_m for x in spec.background_range],
            "background_points": spec.background_points,
            "windows": [{"center_over_omega_m": c / op.omega_m,
                         "width_over_omega_m": w / op.omega_m, "points": n}
                        for c, w, n in spec.windows],
        }
        cols = {"omega_over_omega_m": omega / op.omega_m, "n_spec": n_spec,
                "a_re": a_spec.real, "a_im": a_spec.imag}
        tag = power_tag(p_mw)
        io.write_table(out / f"spectrum_{tag}", cols, fmt, meta=header)
        io.write_json(out / f"spectrum_{tag}_grid.json", header)
        print(f"P = {p_mw:g} mW: {omega.size} spectrum samples, "
              f"{len(spec.windows)} resonance windows")


def run_repro(params, out, fmt, tol=1e-4):
    return {
        "roots": run_roots(params, out, fmt, np.linspace(0.0, 20.0, 201)),
        "gain": run_gain(params, out, fmt, [1.0, 6.9, 20.0, 40.0]),
        "g2": run_g2(params, out, fmt, [1.0, 4.0], tol=tol),
    }


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        params = resolve_params(args)
        out = args.out
        out.mkdir(parents=True, exist_ok=True)
        io.write_json(out / "run_meta.json", {
            "version": __version__,
            "argv": list(sys.argv[1:] if argv is None else argv),
            "params": dataclasses.asdict(params),
        })
        fmt = args.format
        if args.command == "gain":
            run_gain(params, out, fmt, args.power_mw, args.delta_range, args.points)
        elif args.command == "roots":
            run_roots(params, out, fmt, args.power_sweep_mw)
        elif args.command == "g2":
            run_g2(params, out, fmt, args.power_mw, args.temperature_k, args.tau_max_us,
                   args.tau_points, args.band, args.tol)
        elif args.command == "spectrum":
            run_spectrum(params, out, fmt, args.power_mw, args.temperature_k)
        elif args.command == "repro":
            summary = run_repro(params, out, fmt, args.tol)
            io.write_json(out / "repro_summary.json", summary)
    except (CavityFWMError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
