"""Command-line interface emitting CSV or JSON for downstream plotting.

Subcommands
    report           one thermodynamic report for a single state
    energy-curve     normalized energy etc. over a temperature grid
    pressure-curve   face pressures over the average pressure
    merge-adiabatic  temperature and photon-number effect of merging cubes
    merge-isothermal energy supply needed to merge cubes at constant T
    modes            dump of the mode spectrum up to a numeric cutoff

Output is deterministic: floats are printed with 17 significant digits,
lines end with "\n", and repeated runs with the same arguments produce
byte-identical files.  Data goes to --output or stdout; diagnostics and
errors go to stderr.  Exit codes: 0 success, 1 numerical failure
(machine-readable JSON line on stderr), 2 argument errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .constants import CODATA, PhysicalConstants
from .errors import PhotonboxError
from .experiments import (
    adiabatic_merge,
    energy_curve,
    isothermal_merge,
    pressure_curve,
)
from .geometry import CuboidGeometry
from .spectrum import enumerate_modes
from .thermo import AdaptiveCutoff, FixedCutoff, ThermoState, evaluate


def _fmt(value) -> str:
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    return format(float(value), ".17g")


def _grid_type(text: str) -> str:
    return text  # validated later, once spacing is known


def _parse_grid(text: str, spacing: str) -> list[float]:
    """Grid syntax: comma list "a,b,c" or range "start:stop:count"."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:count, got {text!r}")
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if count < 1:
            raise ValueError("range needs at least one point")
        if not (start > 0 and stop > 0):
            raise ValueError("range endpoints must be positive")
        if count == 1:
            return [start]
        if stop <= start:
            raise ValueError("range requires stop > start")
        if spacing == "log":
            ratio = stop / start
            return [start * ratio ** (i / (count - 1)) for i in range(count)]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    values = [float(v) for v in text.split(",") if v.strip()]
    if not values:
        raise ValueError("empty grid")
    if any(v <= 0 for v in values):
        raise ValueError("grid values must be positive")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("grid values must be strictly increasing")
    return values


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cutoff", default="auto",
                        help="'auto' or a numeric frequency cutoff (default auto)")
    parser.add_argument("--tol", type=float, default=1e-6,
                        help="relative tolerance of the adaptive cutoff")
    parser.add_argument("--output", default=None, help="output file (default stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--constants", default=None,
                        help="JSON file overriding physical constants")


def _add_geometry(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x-cm", type=float, default=None)
    parser.add_argument("--y-cm", type=float, default=None)
    parser.add_argument("--z-cm", type=float, default=None)
    parser.add_argument("--alpha", type=float, default=None)
    parser.add_argument("--beta", type=float, default=None)
    parser.add_argument("--edge-cm", type=float, default=None,
                        help="volume scale a in cm when using --alpha/--beta (default 1)")


def _add_temperature(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--temperature-k", type=_grid_type, default=None,
                        help="kelvin grid: comma list or start:stop:count")
    parser.add_argument("--t-reduced", type=_grid_type, default=None,
                        help="reduced-temperature grid: comma list or start:stop:count")
    parser.add_argument("--spacing", choices=("log", "lin"), default="log")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonbox",
        description="Photon gas thermodynamics in a finite cuboid cavity.",
    )
    parser.add_argument("--version", action="version", version=f"photonbox {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="single-state thermodynamic report")
    _add_geometry(p_report)
    _add_temperature(p_report)
    _add_common(p_report)

    p_energy = sub.add_parser("energy-curve", help="normalized energy over a grid")
    _add_geometry(p_energy)
    _add_temperature(p_energy)
    _add_common(p_energy)

    p_pressure = sub.add_parser("pressure-curve", help="face pressure ratios over a grid")
    _add_geometry(p_pressure)
    _add_temperature(p_pressure)
    _add_common(p_pressure)

    for name, helptext in (
        ("merge-adiabatic", "entropy-conserving merge of M cubes"),
        ("merge-isothermal", "constant-temperature merge of M cubes"),
    ):
        p_merge = sub.add_parser(name, help=helptext)
        p_merge.add_argument("--cubes", type=int, required=True, help="number of cubes M")
        p_merge.add_argument("--edge-cm", type=float, default=1.0, help="cube edge in cm")
        _add_temperature(p_merge)
        _add_common(p_merge)

    p_modes = sub.add_parser("modes", help="dump the mode spectrum")
    _add_geometry(p_modes)
    _add_common(p_modes)

    return parser


def _load_constants(args) -> PhysicalConstants:
    if getattr(args, "constants", None):
        return PhysicalConstants.from_file(args.constants)
    return CODATA


def _resolve_geometry(args, parser) -> CuboidGeometry:
    explicit = [args.x_cm, args.y_cm, args.z_cm]
    shape = [args.alpha, args.beta]
    if all(v is not None for v in explicit):
        if any(v is not None for v in shape):
            parser.error("give either --x-cm/--y-cm/--z-cm or --alpha/--beta, not both")
        return CuboidGeometry(args.x_cm, args.y_cm, args.z_cm)
    if any(v is not None for v in explicit):
        parser.error("--x-cm, --y-cm and --z-cm must be given together")
    if all(v is not None for v in shape):
        edge = args.edge_cm if args.edge_cm is not None else 1.0
        if not edge > 0:
            parser.error("--edge-cm must be positive")
        return CuboidGeometry.from_shape(args.alpha, args.beta, edge)
    parser.error("geometry required: --x-cm/--y-cm/--z-cm or --alpha/--beta [--edge-cm]")


def _resolve_t_grid(args, parser, a_cm: float, b_const: float):
    """Reduced-temperature grid plus matching kelvin values."""
    if (args.temperature_k is None) == (args.t_reduced is None):
        parser.error("give exactly one of --temperature-k or --t-reduced")
    try:
        if args.temperature_k is not None:
            kelvin = _parse_grid(args.temperature_k, args.spacing)
            return [tk * a_cm / b_const for tk in kelvin], kelvin
        reduced = _parse_grid(args.t_reduced, args.spacing)
        return reduced, [t * b_const / a_cm for t in reduced]
    except ValueError as exc:
        parser.error(str(exc))


def _resolve_cutoff(args, parser):
    if args.cutoff == "auto":
        try:
            return AdaptiveCutoff(tol=args.tol)
        except ValueError as exc:
            parser.error(str(exc))
    try:
        return FixedCutoff(float(args.cutoff))
    except ValueError:
        parser.error(f"--cutoff must be 'auto' or a number, got {args.cutoff!r}")


def _render(args, constants, header: list[str], rows: list[list]) -> str:
    if args.format == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    meta = {
        "tool": "photonbox",
        "version": __version__,
        "command": args.command,
        "cutoff": args.cutoff,
        "tol": args.tol,
        "constants": {"B_cm_K": constants.B},
    }
    records = [dict(zip(header, row)) for row in rows]
    return json.dumps({"meta": meta, "rows": records}, indent=2) + "\n"


def _cmd_report(args, parser, constants) -> str:
    geom = _resolve_geometry(args, parser)
    t_grid, _ = _resolve_t_grid(args, parser, geom.a, constants.B)
    if len(t_grid) != 1:
        parser.error("report takes exactly one temperature")
    policy = _resolve_cutoff(args, parser)
    r = evaluate(ThermoState(geom, t_grid[0], policy))
    header = ["t", "F_red", "E_red", "S_red", "N", "C_red",
              "px_red", "py_red", "pz_red", "phi", "omega_e"]
    rows = [[r.t, r.f_red, r.e_red, r.s_red, r.n_photons, r.c_red,
             r.p_x_red, r.p_y_red, r.p_z_red, r.phi, r.omega_e]]
    return _render(args, constants, header, rows)


def _cmd_energy_curve(args, parser, constants) -> str:
    geom = _resolve_geometry(args, parser)
    t_grid, _ = _resolve_t_grid(args, parser, geom.a, constants.B)
    policy = _resolve_cutoff(args, parser)
    points = energy_curve(geom.alpha, geom.beta, t_grid, cutoff=policy)
    header = ["t", "phi", "E_red", "S_red", "N", "C_red", "omega_e"]
    rows = [[p.t, p.phi, p.e_red, p.s_red, p.n_photons, p.c_red, p.omega_e]
            for p in points]
    return _render(args, constants, header, rows)


def _cmd_pressure_curve(args, parser, constants) -> str:
    geom = _resolve_geometry(args, parser)
    _, kelvin = _resolve_t_grid(args, parser, geom.a, constants.B)
    policy = _resolve_cutoff(args, parser)
    points = pressure_curve(geom, kelvin, cutoff=policy, constants=constants)
    header = ["T_K", "t", "px_over_pav", "py_over_pav", "pz_over_pav"]
    rows = [[p.temperature_k, p.t, p.px_over_pav, p.py_over_pav, p.pz_over_pav]
            for p in points]
    return _render(args, constants, header, rows)


def _cmd_merge(args, parser, constants, adiabatic: bool) -> str:
    if args.cubes < 1:
        parser.error("--cubes must be >= 1")
    edge = args.edge_cm
    if not edge > 0:
        parser.error("--edge-cm must be positive")
    t_grid, _ = _resolve_t_grid(args, parser, edge, constants.B)
    if adiabatic:
        header = ["t", "T_ratio", "N_ratio"]
        rows = []
        for t in t_grid:
            res = adiabatic_merge(args.cubes, t, edge)
            rows.append([res.t, res.t_ratio, res.n_ratio])
    else:
        header = ["t", "dE_iso"]
        rows = []
        for t in t_grid:
            res = isothermal_merge(args.cubes, t, edge)
            rows.append([res.t, res.de_iso])
    return _render(args, constants, header, rows)


def _cmd_modes(args, parser, constants) -> str:
    geom = _resolve_geometry(args, parser)
    if args.cutoff == "auto":
        parser.error("modes requires a numeric --cutoff")
    cutoff = float(args.cutoff)
    header = ["n_x", "n_y", "n_z", "g", "omega"]
    rows = [[m.n_x, m.n_y, m.n_z, m.g, m.omega]
            for m in enumerate_modes(geom, cutoff)]
    return _render(args, constants, header, rows)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        constants = _load_constants(args)
        if args.command == "report":
            text = _cmd_report(args, parser, constants)
        elif args.command == "energy-curve":
            text = _cmd_energy_curve(args, parser, constants)
        elif args.command == "pressure-curve":
            text = _cmd_pressure_curve(args, parser, constants)
        elif args.command == "merge-adiabatic":
            text = _cmd_merge(args, parser, constants, adiabatic=True)
        elif args.command == "merge-isothermal":
            text = _cmd_merge(args, parser, constants, adiabatic=False)
        elif args.command == "modes":
            text = _cmd_modes(args, parser, constants)
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown command {args.command!r}")
    except (PhotonboxError, ValueError, OSError) as exc:
        sys.stderr.write(json.dumps(
            {"error": type(exc).__name__, "detail": str(exc)}) + "\n")
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
