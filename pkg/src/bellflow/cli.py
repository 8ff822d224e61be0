"""Command-line front end: report, scan, mc, invert.

Angles are given in radians, either as plain decimals or as pi expressions
("pi", "pi/8", "3pi/8", "2pi/3").  Every artifact embeds a manifest
(command, parameters, tool version, timestamp); apart from the timestamp,
rerunning a command with the same parameters reproduces the output byte
for byte.  Exit codes: 0 success, 2 usage or domain error, 1 internal
error.
"""
from __future__ import annotations

import argparse
import math
import re
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__, kernels
from ._serialize import csv_line, dumps, format_float
from .bell import AngleConfig, BellReport, bell_report
from .dependence import LN2, distribution_from_signed_flow, inverse_degree
from .montecarlo import RNG_FAMILY, run_monte_carlo

_ANGLE_NAMES = ("mu1", "mu2", "nu1", "nu2")
_PI_FORM = re.compile(r"([+-]?\d*\.?\d*)\s*pi\s*(?:/\s*(\d+\.?\d*))?")

SCAN_CSV_HEADER = ("mu1,mu2,nu1,nu2,bell_value,total_flow,"
                   "total_signed_flow,degree_sum,in_u,in_v,in_vs")
REPORT_CSV_HEADER = ("mu1,mu2,nu1,nu2,"
                     "theta_11,theta_12,theta_21,theta_22,"
                     "degree_11,degree_12,degree_21,degree_22,"
                     "bell_value,degree_sum,abs_degree_sum,"
                     "total_flow,total_signed_flow,violates_bell")

# accepted slack beyond |signed flow| = ln 2 for 7-digit rounded inputs
_INVERT_SLACK = 1e-6


class CliError(Exception):
    """Domain or usage error reported with exit code 2."""


def parse_angle(text: str, name: str = "angle") -> float:
    """Parse an angle token: decimal radians or a pi expression."""
    s = str(text).strip().lower()
    m = _PI_FORM.fullmatch(s)
    if m:
        coef_s = m.group(1)
        if coef_s in ("", "+"):
            coef = 1.0
        elif coef_s == "-":
            coef = -1.0
        else:
            try:
                coef = float(coef_s)
            except ValueError:
                raise CliError(f"{name}: cannot parse {text!r}") from None
        value = coef * math.pi
        if m.group(2):
            value /= float(m.group(2))
        return value
    try:
        return float(s)
    except ValueError:
        raise CliError(f"{name}: cannot parse {text!r}") from None


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _manifest(command: str, params: dict, **extra) -> dict:
    m = {"tool": "bellflow", "version": __version__, "command": command,
         "params": params}
    m.update(extra)
    m["timestamp"] = _timestamp()
    return m


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)


def _report_payload(r: BellReport) -> dict:
    cfg = r.config
    return {
        "config": {name: getattr(cfg, name) for name in _ANGLE_NAMES},
        "thetas": [list(row) for row in r.thetas],
        "degrees": [list(row) for row in r.degrees],
        "bell_value": r.bell_value,
        "degree_sum": r.degree_sum,
        "abs_degree_sum": r.abs_degree_sum,
        "total_flow": r.total_flow,
        "total_signed_flow": r.total_signed_flow,
        "violates_bell": r.violates_bell,
    }


def _manifest_csv_comments(manifest: dict) -> list[str]:
    lines = [f"# {manifest['tool']} {manifest['version']} {manifest['command']}"]
    params = " ".join(f"{k}={csv_cell_str(v)}" for k, v in manifest["params"].items())
    lines.append(f"# params: {params}")
    for key in ("rng", "backend"):
        if key in manifest:
            lines.append(f"# {key}: {manifest[key]}")
    lines.append(f"# timestamp: {manifest['timestamp']}")
    return lines


def csv_cell_str(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def cmd_report(args) -> int:
    values = {name: parse_angle(getattr(args, name), name) for name in _ANGLE_NAMES}
    try:
        config = AngleConfig(**values)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    r = bell_report(config)
    params = dict(values)
    params["format"] = args.format
    manifest = _manifest("report", params)
    if args.format == "json":
        text = dumps({"manifest": manifest, "report": _report_payload(r)})
    else:
        row = list(config.as_tuple())
        row += [t for trow in r.thetas for t in trow]
        row += [e for erow in r.degrees for e in erow]
        row += [r.bell_value, r.degree_sum, r.abs_degree_sum,
                r.total_flow, r.total_signed_flow, r.violates_bell]
        lines = _manifest_csv_comments(manifest)
        lines.append(REPORT_CSV_HEADER)
        lines.append(csv_line(row))
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


def _parse_pins(pin_args) -> dict:
    pins: dict[str, float] = {}
    for item in pin_args or ():
        name, sep, raw = item.partition("=")
        name = name.strip()
        if not sep or name not in _ANGLE_NAMES:
            raise CliError(f"--pin expects <name>=<angle> with name in {_ANGLE_NAMES}, got {item!r}")
        value = parse_angle(raw, name)
        if name in pins and pins[name] != value:
            raise CliError(f"conflicting pins for {name}: {pins[name]!r} vs {value!r}")
        pins[name] = value
    return pins


def cmd_scan(args) -> int:
    if args.grid < 2:
        raise CliError(f"--grid must be >= 2, got {args.grid}")
    pins = _parse_pins(args.pin)
    for name, value in pins.items():
        if not 0.0 <= value <= math.pi:
            raise CliError(f"{name}: pinned angle must lie in [0, pi], got {value!r}")

    axes = [np.array([pins[name]]) if name in pins
            else np.linspace(0.0, math.pi, args.grid)
            for name in _ANGLE_NAMES]
    grids = np.meshgrid(*axes, indexing="ij")
    cols = [g.ravel() for g in grids]
    b, abs_sum, sig_sum = kernels.bell_stats(*cols)
    flow = LN2 * abs_sum
    sflow = LN2 * sig_sum
    in_u = np.abs(b) <= 2.0
    in_v = flow <= 2.0 * LN2
    in_vs = sflow >= 0.0

    params = {"grid": args.grid}
    params.update(pins)
    params["format"] = "csv"
    manifest = _manifest("scan", params, backend=kernels.BACKEND)
    lines = _manifest_csv_comments(manifest)
    lines.append(SCAN_CSV_HEADER)
    for i in range(b.shape[0]):
        lines.append(csv_line((
            cols[0][i], cols[1][i], cols[2][i], cols[3][i],
            b[i], flow[i], sflow[i], sig_sum[i],
            bool(in_u[i]), bool(in_v[i]), bool(in_vs[i]),
        )))
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_mc(args) -> int:
    if args.n < 1:
        raise CliError(f"--n must be >= 1, got {args.n}")
    if args.workers < 1:
        raise CliError(f"--workers must be >= 1, got {args.workers}")
    report = run_monte_carlo(args.n, args.seed, workers=args.workers)
    manifest = _manifest(
        "mc",
        {"n": args.n, "seed": args.seed, "format": "json"},
        rng=RNG_FAMILY,
        backend=kernels.BACKEND,
    )
    payload = {
        "n": report.n,
        "seed": report.seed,
        "alpha_hat": report.alpha_hat,
        "beta_hat": report.beta_hat,
        "beta_s_hat": report.beta_s_hat,
        "tau_hat": report.tau_hat,
        "tau_s_hat": report.tau_s_hat,
        "cond_vc_given_u": report.cond_vc_given_u,
        "cond_v_given_uc": report.cond_v_given_uc,
        "cond_vsc_given_u": report.cond_vsc_given_u,
        "cond_vs_given_uc": report.cond_vs_given_uc,
        "undefined_conditionals": list(report.undefined_conditionals),
        "flow_range_in_u": None if report.flow_range_in_u is None
        else list(report.flow_range_in_u),
        "signed_flow_range_in_u": None if report.signed_flow_range_in_u is None
        else list(report.signed_flow_range_in_u),
        "frechet_v": list(report.frechet_v),
        "frechet_vs": list(report.frechet_vs),
        "rng": report.rng,
    }
    _write(dumps({"manifest": manifest, "report": payload}), args.out)
    return 0


def cmd_invert(args) -> int:
    s = parse_angle(args.signed_flow, "signed_flow") if "pi" in str(args.signed_flow) \
        else _parse_float(args.signed_flow, "signed_flow")
    if abs(s) > LN2 + _INVERT_SLACK:
        raise CliError(f"signed_flow must lie in [-ln 2, ln 2] = "
                       f"[-{LN2:.7f}, {LN2:.7f}], got {s!r}")
    s = max(-LN2, min(LN2, s))
    theta = inverse_degree(s / LN2)
    dist = distribution_from_signed_flow(s)
    manifest = _manifest("invert", {"signed_flow": s, "format": "json"})
    payload = {
        "signed_flow": s,
        "theta": theta,
        "distribution": list(dist.as_tuple()),
    }
    _write(dumps({"manifest": manifest, "report": payload}), args.out)
    return 0


def _parse_float(text, name) -> float:
    try:
        return float(text)
    except ValueError:
        raise CliError(f"{name}: cannot parse {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellflow",
        description="Bell functional and information-flow statistics of paired "
                    "polarizer measurements on the two-photon singlet.",
    )
    parser.add_argument("--version", action="version", version=f"bellflow {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="dependence report for one four-angle configuration")
    for name in _ANGLE_NAMES:
        p.add_argument(name, help=f"polarizer angle {name} in [0, pi] (e.g. pi/8, 0.5)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write to file instead of stdout")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("scan", help="CSV of Bell value and flows over an angle grid")
    p.add_argument("--grid", type=int, required=True, help="points per unpinned axis (>= 2)")
    p.add_argument("--pin", action="append", metavar="NAME=ANGLE",
                   help="fix one axis, e.g. --pin mu2=pi/2 (repeatable)")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("mc", help="seeded Monte Carlo estimates over the angle cube")
    p.add_argument("--n", type=int, required=True, help="sample count (>= 1)")
    p.add_argument("--seed", type=int, default=0,
                   help="64-bit RNG seed (default 0, recorded in the manifest)")
    p.add_argument("--workers", type=int, default=1,
                   help="worker threads; the result is worker-count independent")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("invert", help="joint distribution from a signed information flow")
    p.add_argument("signed_flow", help="signed flow in nats, |s| <= ln 2")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_invert)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
