"""Batch front end: spectra, wavefunctions, and Morse-limit sweeps from JSON configs.

All physical quantities are in natural units where the user's chosen mass
scale equals 1.  Results are written as CSV with a JSON mirror; numbers are
formatted to 15 significant digits so that re-emitting a parsed JSON file
reproduces the CSV byte for byte.

Exit codes: 0 success (an empty spectrum is still a success and prints a
note), 2 configuration error, 3 solver failure, 4 requested level absent.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .deformed import PotentialParams, potential_value
from .effective import DiracConstants
from .errors import QdeformError
from .oracle import shoot_eigenvalues
from .solvers import (
    SolverConfig,
    disputed_q_lt_1,
    solve_morse_asymptotic,
    solve_morse_exact,
    solve_q_lt_1,
    spectrum,
)
from .wavefunctions import make_wavefunction

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_NO_LEVEL = 4


class ConfigError(Exception):
    """Raised when the run configuration is missing or malformed."""


def _fmt(x):
    """Format a number to 15 significant digits, round-trip stable."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return "%.15g" % float(x)


def _require(mapping, key, where):
    if key not in mapping:
        raise ConfigError("missing field '%s' in %s" % (key, where))
    return mapping[key]


def load_config(path):
    """Parse a JSON config file into (DiracConstants, PotentialParams, SolverConfig).

    Schema::

        {
          "potential": {"v1": ..., "v2": ..., "alpha": ..., "q": ...},
          "dirac":     {"mass": ..., "c_spin": 0.0},
          "solver":    {"scan_points": 2000, "tol_e": 1e-10, "max_levels": 64}
        }

    The "solver" block and "c_spin" are optional.
    """
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config: %s" % exc)
    except json.JSONDecodeError as exc:
        raise ConfigError("config is not valid JSON: %s" % exc)

    pot = _require(raw, "potential", "config")
    dirac = _require(raw, "dirac", "config")
    try:
        params = PotentialParams(
            v1=float(_require(pot, "v1", "potential")),
            v2=float(_require(pot, "v2", "potential")),
            alpha=float(_require(pot, "alpha", "potential")),
            q=float(_require(pot, "q", "potential")),
        )
        constants = DiracConstants(
            m=float(_require(dirac, "mass", "dirac")),
            c_spin=float(dirac.get("c_spin", 0.0)),
        )
        sol = raw.get("solver", {})
        config = SolverConfig(
            scan_points=int(sol.get("scan_points", 2000)),
            tol_e=float(sol.get("tol_e", 1e-10)),
            max_levels=int(sol.get("max_levels", 64)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc))
    return constants, params, config


def _write_table(columns, rows, out_path, fmt):
    """Write rows as CSV or JSON; when out_path is given, write both mirrors."""
    def to_csv():
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_fmt(v) if not isinstance(v, str) else v
                                  for v in row))
        return "\n".join(lines) + "\n"

    def to_json():
        recs = []
        for row in rows:
            rec = {}
            for key, val in zip(columns, row):
                rec[key] = val if isinstance(val, str) else float(_fmt(val))
            recs.append(rec)
        return json.dumps({"columns": columns, "rows": recs}, indent=2) + "\n"

    if out_path is None:
        sys.stdout.write(to_csv() if fmt == "csv" else to_json())
        return
    base, ext = os.path.splitext(out_path)
    csv_path = out_path if ext == ".csv" else base + ".csv"
    json_path = out_path if ext == ".json" else base + ".json"
    with open(csv_path, "w") as fh:
        fh.write(to_csv())
    with open(json_path, "w") as fh:
        fh.write(to_json())


def _thread_cap():
    """Sweep parallelism from QDEFORM_THREADS; 0 or unset means auto."""
    raw = os.environ.get("QDEFORM_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def cmd_spectrum(args):
    constants, params, config = load_config(args.config)
    levels = spectrum(constants, params, config)

    columns = ["n_r", "E", "E_tilde", "method"]
    rows = [[lv.n_r, lv.energy, lv.e_tilde, lv.method] for lv in levels]

    if args.verify and levels:
        oracle = shoot_eigenvalues(constants, params, n_max=len(levels))
        by_n = {lv.n_r: lv.energy for lv in oracle}
        columns.append("residual_vs_oracle")
        for row, lv in zip(rows, levels):
            row.append(abs(lv.energy - by_n[lv.n_r])
                       if lv.n_r in by_n else float("nan"))

    if args.show_disputed and params.q < 1.0 and params.q > 0.0:
        disputed = disputed_q_lt_1(constants, params, config)
        for lv in disputed:
            row = [lv.n_r, lv.energy, lv.e_tilde, lv.method]
            if args.verify:
                row.append(float("nan"))
            rows.append(row)

    if not levels:
        print("note: no bound states for these parameters", file=sys.stderr)
    _write_table(columns, rows, args.out, args.format)
    return EXIT_OK


def cmd_wavefunction(args):
    constants, params, config = load_config(args.config)
    levels = spectrum(constants, params, config)
    match = [lv for lv in levels if lv.n_r == args.n_r]
    if not match:
        print("error: level n_r=%d not found (spectrum has %d levels)"
              % (args.n_r, len(levels)), file=sys.stderr)
        return EXIT_NO_LEVEL
    wf = make_wavefunction(constants, params, match[0])
    pot = potential_value(wf.radii, params)
    columns = ["r", "F", "G", "potential_value"]
    rows = [[r, f, g, v] for r, f, g, v in
            zip(wf.radii, wf.f_values, wf.g_values, pot)]
    _write_table(columns, rows, args.out, args.format)
    return EXIT_OK


def _levels_at_q(constants, params, config, q):
    p = PotentialParams(params.v1, params.v2, params.alpha, q)
    return solve_q_lt_1(constants, p, config)


def cmd_morse_limit(args):
    constants, params, config = load_config(args.config)
    try:
        q_list = [float(s) for s in args.q_list.split(",") if s.strip()]
    except ValueError as exc:
        raise ConfigError("bad --q-list: %s" % exc)
    if not q_list:
        raise ConfigError("--q-list is empty")
    if any(not (0.0 < q < 1.0) for q in q_list):
        raise ConfigError("all q values must lie in (0, 1)")
    if any(b >= a for a, b in zip(q_list, q_list[1:])):
        raise ConfigError("--q-list must be strictly decreasing")

    morse = PotentialParams(params.v1, params.v2, params.alpha, 0.0)
    exact = solve_morse_exact(constants, morse, config)
    asym = []
    for n in range(len(exact)):
        try:
            asym.append(solve_morse_asymptotic(n, constants, morse, config))
        except QdeformError:
            break

    with ThreadPoolExecutor(max_workers=min(_thread_cap(), len(q_list))) as ex:
        sweeps = list(ex.map(
            lambda q: _levels_at_q(constants, params, config, q), q_list))

    exact_by_n = {lv.n_r: lv.energy for lv in exact}
    columns = ["q", "n_r", "E", "method", "deviation_from_morse"]
    rows = []
    for q, levels in zip(q_list, sweeps):
        for lv in levels:
            dev = (abs(lv.energy - exact_by_n[lv.n_r])
                   if lv.n_r in exact_by_n else float("nan"))
            rows.append([q, lv.n_r, lv.energy, lv.method, dev])
    for lv in exact:
        rows.append([0.0, lv.n_r, lv.energy, lv.method, 0.0])
    for lv in asym:
        dev = (abs(lv.energy - exact_by_n[lv.n_r])
               if lv.n_r in exact_by_n else float("nan"))
        rows.append([0.0, lv.n_r, lv.energy, lv.method, dev])
    _write_table(columns, rows, args.out, args.format)
    return EXIT_OK


def cmd_verify(args):
    """Solve the spectrum twice (analytic and shooting) and report agreement."""
    constants, params, config = load_config(args.config)
    levels = spectrum(constants, params, config)
    if not levels:
        print("note: no bound states for these parameters", file=sys.stderr)
        _write_table(["n_r", "E_analytic", "E_oracle", "abs_diff"], [],
                     args.out, args.format)
        return EXIT_OK
    oracle = shoot_eigenvalues(constants, params, n_max=len(levels))
    by_n = {lv.n_r: lv.energy for lv in oracle}
    columns = ["n_r", "E_analytic", "E_oracle", "abs_diff"]
    rows = []
    worst = 0.0
    for lv in levels:
        e_ref = by_n.get(lv.n_r, float("nan"))
        diff = abs(lv.energy - e_ref)
        worst = max(worst, diff)
        rows.append([lv.n_r, lv.energy, e_ref, diff])
    _write_table(columns, rows, args.out, args.format)
    tol = 1e-6 * constants.m
    if not (worst <= tol):
        print("verify: FAIL (max |dE| = %s exceeds %s)" % (_fmt(worst), _fmt(tol)),
              file=sys.stderr)
        return EXIT_SOLVER
    print("verify: OK (max |dE| = %s)" % _fmt(worst), file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdeform",
        description="Bound states of the s-wave Dirac equation with a "
                    "deformed generalized Poschl-Teller potential.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="JSON config file")
        p.add_argument("--out", default=None,
                       help="output path; writes CSV and a JSON mirror")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="stdout format when --out is omitted")

    p = sub.add_parser("spectrum", help="compute all bound levels")
    common(p)
    p.add_argument("--verify", action="store_true",
                   help="add a residual column against the shooting solver")
    p.add_argument("--show-disputed", action="store_true",
                   help="append levels from the disputed closed-form "
                        "quantization applied outside its validity range")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="export one normalized level")
    common(p)
    p.add_argument("--n-r", type=int, required=True, dest="n_r",
                   help="radial quantum number of the level to export")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("morse-limit", help="q -> 0 convergence sweep")
    common(p)
    p.add_argument("--q-list", required=True,
                   help="comma-separated, strictly decreasing q values in (0,1)")
    p.set_defaults(func=cmd_morse_limit)

    p = sub.add_parser("verify", help="cross-check analytic levels against "
                                      "the independent shooting solver")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    except QdeformError as exc:
        print("solver error: %s" % exc, file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
