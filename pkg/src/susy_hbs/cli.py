"""Command-line front end.

Commands: partner, bound, scatter, area, delta, reproduce. Each can take its
settings from a JSON scenario file (``--scenario``); explicit flags win.

Exit codes: 0 success, 1 a reproduction row failed, 2 invalid input,
3 numerical or I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from .ansatz import HbsAnsatz, make_ansatz
from .area import simon_classify, w2_identity
from .bound_solver import find_bound_states
from .delta_model import DeltaArray, classify_case, delta_bound_states, solve_hbs
from .errors import ConstraintPole, DomainError, HbsError, InvalidParams, NodeDetected, NonPositiveScale
from .numerov import Grid
from .partner import build_pair, scale
from .reproduce import CATEGORIES, FIGURES, figure_pair, reproduce_all
from .scattering import find_r_minima, scan

EXIT_OK, EXIT_ROW_FAILED, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return "%.12g" % v
    return str(v)


def to_csv(rows: list, header: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(r[h]) for h in header])
    return buf.getvalue()


def columns_csv(cols: dict) -> str:
    header = list(cols)
    n = len(next(iter(cols.values())))
    rows = [{h: float(cols[h][i]) for h in header} for i in range(n)]
    return to_csv(rows, header)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(type(o).__name__)


def write_atomic(files: dict):
    """Write all ``{path: text}`` or none of them."""
    staged, done = [], []
    try:
        for path, text in files.items():
            path = Path(path)
            fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
            staged.append((tmp, path))
        for tmp, path in staged:
            os.replace(tmp, path)
            done.append(path)
    except OSError:
        for tmp, _ in staged:
            if os.path.exists(tmp):
                os.unlink(tmp)
        for path in done:
            path.unlink(missing_ok=True)
        raise


def emit(files: dict, out: str | None):
    """Write to ``out`` (a file, or a directory when several files) or stdout."""
    if out is None:
        for text in files.values():
            sys.stdout.write(text)
        return
    out = Path(out)
    if len(files) == 1 and not out.is_dir():
        write_atomic({out: next(iter(files.values()))})
    else:
        if not out.is_dir():
            raise OSError(f"{out} is not a directory")
        write_atomic({out / name: text for name, text in files.items()})


# scenario handling

def load_scenario(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read scenario {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("scenario must be a JSON object")
    if "ansatz" in data and "delta" in data:
        raise UsageError("scenario may hold an ansatz or a delta array, not both")
    return data


def _pick(flag, scenario: dict, *keys, default=None):
    if flag is not None:
        return flag
    node = scenario
    for k in keys:
        if not isinstance(node, dict) or k not in node:
            return default
        node = node[k]
    return node


def grid_from(args, sc: dict) -> Grid:
    L = float(_pick(args.grid_L, sc, "grid", "L", default=12.0))
    n = int(_pick(args.grid_n, sc, "grid", "n_points", default=4801))
    if L <= 0:
        raise UsageError("--grid-L must be positive")
    return Grid.symmetric(L, n)


def ansatz_from(args, sc: dict) -> HbsAnsatz:
    family = _pick(getattr(args, "family", None), sc, "ansatz", "family")
    offset = _pick(getattr(args, "offset", None), sc, "ansatz", "offset")
    if family is None or offset is None:
        raise UsageError("an ansatz needs --family and --offset")
    params = dict(_pick(None, sc, "ansatz", "params", default={}) or {})
    width = getattr(args, "width", None)
    if width is not None:
        params["width"] = width
    return make_ansatz(family, float(offset), params)


def potential_from(args, sc: dict):
    pair = build_pair(ansatz_from(args, sc), grid_from(args, sc))
    side = _pick(args.side, sc, "options", "side", default="minus")
    c = float(_pick(args.scale, sc, "options", "scale", default=1.0))
    pot = scale(pair, side, c).potential
    if _pick(args.negate or None, sc, "options", "negate", default=False):
        pot = -pot
    return pot


# commands

def cmd_partner(args, sc):
    pair = build_pair(ansatz_from(args, sc), grid_from(args, sc))
    cols = pair.columns()
    if args.format == "json":
        return {"pair.json": to_json({k: v for k, v in cols.items()})}
    return {"pair.csv": columns_csv(cols)}


SPECTRUM_HEADER = ["index", "E", "nodes", "residual", "domain_used"]
CURVE_HEADER = ["E", "R", "T", "residual"]


def _spectrum_out(spec, fmt_, name="spectrum"):
    if fmt_ == "json":
        return {f"{name}.json": to_json({"states": spec.rows(), "notes": spec.notes})}
    return {f"{name}.csv": to_csv(spec.rows(), SPECTRUM_HEADER)}


def cmd_bound(args, sc):
    spec = find_bound_states(potential_from(args, sc))
    return _spectrum_out(spec, args.format)


def cmd_scatter(args, sc):
    pot = potential_from(args, sc)
    e_min = float(_pick(args.e_min, sc, "options", "e_min", default=1e-3))
    e_max = float(_pick(args.e_max, sc, "options", "e_max", default=20.0))
    n = int(_pick(args.n_energies, sc, "options", "n_energies", default=400))
    if not 0 < e_min < e_max or n < 3:
        raise UsageError("need 0 < e_min < e_max and at least 3 energies")
    curve = scan(pot, np.geomspace(e_min, e_max, n))
    if args.format == "json":
        return {"curve.json": to_json({
            "points": curve.rows(),
            "peaks": [{"E": p.E, "T": p.T, "half_width": p.half_width, "sharp": p.sharp}
                      for p in curve.candidates],
            "r_minima": [{"E": e, "R": r} for e, r in find_r_minima(curve)],
        })}
    return {"curve.csv": to_csv(curve.rows(), CURVE_HEADER)}


def cmd_area(args, sc):
    report = simon_classify(potential_from(args, sc))
    return {"area.json": to_json(report.to_dict())}


def cmd_delta(args, sc):
    records = sc.get("delta")
    if records is not None and args.u1 is None:
        try:
            arr = DeltaArray.from_records(records)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad delta array: {exc}") from exc
        spec = delta_bound_states(arr)
        return {"delta.json": to_json({"deltas": arr.to_records(),
                                       "bound_states": spec.energies.tolist(),
                                       "node_counts": spec.node_counts.tolist()})}
    u1 = _pick(args.u1, sc, "options", "u1")
    a = float(_pick(args.a, sc, "options", "a", default=1.0))
    if u1 is None:
        raise UsageError("delta needs --u1 (and optionally --a) or a scenario delta array")
    hbs = solve_hbs(float(u1), a)
    spec = delta_bound_states(hbs.array)
    d = hbs.to_dict()
    d["case_description"] = classify_case(hbs.u1, a).description
    d["bound_states"] = spec.energies.tolist()
    return {"delta.json": to_json(d)}


def cmd_reproduce(args, sc):
    panel = _pick(args.figure, sc, "options", "figure")
    if panel is not None:
        panel = panel.lower()
        if panel not in FIGURES:
            raise UsageError(f"--figure must be one of {sorted(FIGURES)}")
        pair = figure_pair(panel)
        files = {f"fig{panel}_pair.csv": columns_csv(pair.columns())}
        for side in ("minus", "plus"):
            spec = find_bound_states(pair.potential(side))
            files[f"fig{panel}_spectrum_{side}.csv"] = to_csv(spec.rows(), SPECTRUM_HEADER)
        ident = w2_identity(pair.ansatz, pair.grid)
        report = simon_classify(pair.potential("minus")).to_dict()
        report["identity"] = ident._asdict()
        files[f"fig{panel}_area.json"] = to_json(report)
        return files
    only = args.only or _pick(None, sc, "options", "only")
    try:
        rows = reproduce_all(only)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    table = "\n".join(r.format() for r in rows) + "\n"
    n_fail = sum(not r.passed for r in rows)
    table += f"{len(rows) - n_fail}/{len(rows)} rows pass\n"
    args._failed = n_fail > 0
    sys.stdout.write(table)
    if args.out is None:
        return {}
    header = ["category", "label", "computed", "expected", "tolerance", "passed", "note"]
    return {"summary.csv": to_csv([r.__dict__ for r in rows], header)}


COMMANDS = {
    "partner": cmd_partner,
    "bound": cmd_bound,
    "scatter": cmd_scatter,
    "area": cmd_area,
    "delta": cmd_delta,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="JSON scenario file; flags override its fields")
    common.add_argument("--grid-L", dest="grid_L", type=float, help="half-width of the window (default 12)")
    common.add_argument("--grid-n", dest="grid_n", type=int, help="odd number of grid points (default 4801)")
    common.add_argument("--out", help="output file, or directory for multi-file results")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("-v", "--verbose", action="store_true")

    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument("--family", choices=("gaussian", "tanh", "erf", "xgauss", "constant"))
    seed.add_argument("--offset", type=float)
    seed.add_argument("--width", type=float)

    pot = argparse.ArgumentParser(add_help=False, parents=[seed])
    pot.add_argument("--side", choices=("minus", "plus"))
    pot.add_argument("--scale", type=float, help="positive factor c for c*V")
    pot.add_argument("--negate", action="store_true", help="use -c*V")

    p = argparse.ArgumentParser(prog="susy-hbs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="task", required=True)
    sub.add_parser("partner", parents=[common, seed], help="tabulate W, W', V-, V+")
    sub.add_parser("bound", parents=[common, pot], help="bound states of (+-c) V")
    sc = sub.add_parser("scatter", parents=[common, pot], help="R(E), T(E) scan")
    sc.add_argument("--e-min", dest="e_min", type=float)
    sc.add_argument("--e-max", dest="e_max", type=float)
    sc.add_argument("--n-energies", dest="n_energies", type=int)
    sub.add_parser("area", parents=[common, pot], help="area and bound-state prediction")
    d = sub.add_parser("delta", parents=[common], help="triple-delta zero-energy state")
    d.add_argument("--u1", type=float)
    d.add_argument("--a", type=float)
    r = sub.add_parser("reproduce", parents=[common], help="recompute the quoted values")
    r.add_argument("--figure", help=f"one of {', '.join(sorted(FIGURES))}")
    r.add_argument("--only", action="append", choices=CATEGORIES)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args._failed = False
    try:
        sc = load_scenario(args.scenario)
        task = sc.get("task", args.task)
        if task != args.task:
            raise UsageError(f"scenario task {task!r} does not match command {args.task!r}")
        out = args.out if args.out is not None else sc.get("out")
        files = COMMANDS[args.task](args, sc)
        if files:
            emit(files, out)
    except (UsageError, InvalidParams, NodeDetected, NonPositiveScale, ConstraintPole, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (HbsError, OSError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_ROW_FAILED if args._failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
