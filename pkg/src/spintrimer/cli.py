"""Command-line interface.

Two mutually exclusive input families on every subcommand:

* dimensionless: ``--J --J1 --h --T`` — couplings and k_B·T in one common
  energy unit (conventionally units of |J|);
* laboratory:   ``--units real --J-cm1 --J1-cm1 --g --B-tesla --T-kelvin`` —
  wavenumber couplings, Lande factor, tesla, kelvin.

Mixing flags from both families is rejected (exit code 2, like any other
argument error). Output goes to stdout or ``--out``; ``--format`` selects
``text`` (default), ``csv``, or ``json``. Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .negativity import NegativityReport, report_from_elements
from .phases import classify, ground_state
from .reconstruct import (ObservableSet, reconstruction_residuals,
                          rho_from_observables)
from .spectrum import CouplingParams, analytic_spectrum
from .sweep import (K_B_CM1_PER_K, MU_B_CM1_PER_T, REPORT_FIELDS, RealUnits,
                    SweepSpec, SweepTable, max_negativity_over, report_at,
                    run_sweep, threshold_field, threshold_temperature,
                    write_csv, write_json)

_DIMLESS_FLAGS = ("J", "J1", "h", "T")
_REAL_FLAGS = ("J_cm1", "J1_cm1", "g", "B_tesla", "T_kelvin")


@dataclass
class Resolved:
    """Inputs normalized to one energy unit (|J| or cm^-1)."""

    params: CouplingParams
    temperature: float
    real: RealUnits | None

    @property
    def is_real(self) -> bool:
        return self.real is not None

    def kelvin(self, t_energy: float) -> float:
        return t_energy / K_B_CM1_PER_K

    def tesla(self, h_energy: float) -> float:
        return h_energy / (self.real.g * MU_B_CM1_PER_T)


def _add_param_flags(p: argparse.ArgumentParser, with_temperature: bool = True) -> None:
    dl = p.add_argument_group("dimensionless inputs")
    dl.add_argument("--J", type=float, default=None,
                    help="central-peripheral coupling (sets the energy unit)")
    dl.add_argument("--J1", type=float, default=None,
                    help="peripheral-peripheral coupling / |J| (default 0)")
    dl.add_argument("--h", type=float, default=None,
                    help="Zeeman field / |J| (default 0)")
    if with_temperature:
        dl.add_argument("--T", type=float, default=None,
                        help="k_B T / |J| (default 0 = exact ground state)")
    rl = p.add_argument_group("laboratory inputs")
    rl.add_argument("--units", choices=("real",), default=None,
                    help="switch to laboratory units (cm^-1, tesla, kelvin)")
    rl.add_argument("--J-cm1", type=float, default=None, dest="J_cm1")
    rl.add_argument("--J1-cm1", type=float, default=None, dest="J1_cm1")
    rl.add_argument("--g", type=float, default=None, help="Lande g factor")
    rl.add_argument("--B-tesla", type=float, default=None, dest="B_tesla")
    if with_temperature:
        rl.add_argument("--T-kelvin", type=float, default=None, dest="T_kelvin")


def _resolve(args: argparse.Namespace) -> Resolved:
    given_dimless = [f for f in _DIMLESS_FLAGS
                     if getattr(args, f, None) is not None]
    given_real = [f for f in _REAL_FLAGS if getattr(args, f, None) is not None]
    if args.units == "real":
        if given_dimless:
            flags = ", ".join("--" + f for f in given_dimless)
            raise ValueError(f"--units real cannot be combined with {flags}")
        if args.J_cm1 is None or args.g is None:
            raise ValueError("--units real requires --J-cm1 and --g")
        real = RealUnits(J_cm1=args.J_cm1,
                         J1_cm1=args.J1_cm1 or 0.0,
                         g=args.g,
                         B_tesla=args.B_tesla or 0.0,
                         T_kelvin=getattr(args, "T_kelvin", None) or 0.0)
        return Resolved(real.params(), real.temperature_cm1, real)
    if given_real:
        flags = ", ".join("--" + f.replace("_", "-") for f in given_real)
        raise ValueError(f"{flags} requires --units real")
    if args.J is None:
        raise ValueError("--J is required (or use --units real)")
    params = CouplingParams(J=args.J, J1=args.J1 or 0.0, h=args.h or 0.0)
    temperature = getattr(args, "T", None) or 0.0
    if temperature < 0:
        raise ValueError("temperature must be nonnegative")
    return Resolved(params, temperature, None)


def _open_out(args: argparse.Namespace) -> TextIO:
    return open(args.out, "w") if args.out else sys.stdout


def _emit_table(table: SweepTable, args: argparse.Namespace) -> None:
    stream = _open_out(args)
    try:
        if args.format == "json":
            write_json(table, stream)
        else:
            write_csv(table, stream)
    finally:
        if stream is not sys.stdout:
            stream.close()


def _format_scalar(value, spec: str) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    return spec % value


def _emit_record(record: dict, args: argparse.Namespace) -> None:
    """Scalar results: text key=value lines, one-row CSV, or a JSON object."""
    stream = _open_out(args)
    try:
        if args.format == "json":
            json.dump(record, stream, indent=1)
            stream.write("\n")
        elif args.format == "csv":
            cols = list(record)
            stream.write(",".join(cols) + "\n")
            stream.write(",".join(_format_scalar(v, "%.17g")
                                  for v in record.values()) + "\n")
        else:
            for k, v in record.items():
                stream.write(f"{k} = {_format_scalar(v, '%.12g')}\n")
    finally:
        if stream is not sys.stdout:
            stream.close()


def _report_record(rep: NegativityReport, res: Resolved) -> dict:
    rec = {f: getattr(rep, f) for f in REPORT_FIELDS}
    if res.temperature == 0:
        gs = ground_state(res.params)
        rec["class"] = classify(rep).subtype
        rec["ground_state"] = gs.name
        rec["degeneracy"] = float(gs.degeneracy)
    return rec


def _cmd_spectrum(args: argparse.Namespace) -> int:
    res = _resolve(args)
    energy_col = "energy_cm1" if res.is_real else "energy"
    rows = [(e.label, e.s_total, e.sz_total, e.branch, e.energy)
            for e in analytic_spectrum(res.params)]
    table = SweepTable(("label", "s_total", "sz_total", "branch", energy_col),
                       rows)
    if args.format == "text":
        stream = _open_out(args)
        try:
            for label, s, sz, br, en in rows:
                stream.write(f"{label:<14} {energy_col} = {en:.12g}\n")
        finally:
            if stream is not sys.stdout:
                stream.close()
        return 0
    _emit_table(table, args)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    res = _resolve(args)
    rep = report_at(res.params, res.temperature)
    _emit_record(_report_record(rep, res), args)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    res = _resolve(args)
    if res.temperature != 0:
        raise ValueError("classification is defined for the ground state; use T = 0")
    gs = ground_state(res.params)
    rep = report_at(res.params, 0.0)
    rec = {
        "kind": gs.kind,
        "ground_state": gs.name,
        "degeneracy": float(gs.degeneracy),
        "energy_cm1" if res.is_real else "energy": gs.energy,
        "class": classify(rep).subtype,
    }
    _emit_record(rec, args)
    return 0


def _parse_axis(values: Sequence[float] | None, name: str):
    if values is None:
        return None
    lo, hi, n = values
    if n != int(n):
        raise ValueError(f"{name} step count must be an integer")
    return (float(lo), float(hi), int(n))


def _cmd_sweep(args: argparse.Namespace) -> int:
    res = _resolve(args)
    axis1 = _parse_axis(args.axis1, "--axis1")
    axis2 = _parse_axis(args.axis2, "--axis2")
    if axis1 is None:
        raise ValueError("--axis1 LO HI N is required")
    quantities = tuple(args.quantities.split(",")) if args.quantities else REPORT_FIELDS
    if res.is_real:
        # axes arrive in laboratory units; convert to the energy unit
        to_h = res.real.g * MU_B_CM1_PER_T
        if args.mode in ("thermal_map", "t_scan"):
            axis1 = (axis1[0] * K_B_CM1_PER_K, axis1[1] * K_B_CM1_PER_K, axis1[2])
        elif args.mode == "h_scan":
            axis1 = (axis1[0] * to_h, axis1[1] * to_h, axis1[2])
        if axis2 is not None and args.mode in ("gs_map", "thermal_map"):
            axis2 = (axis2[0] * to_h, axis2[1] * to_h, axis2[2])
    spec = SweepSpec(mode=args.mode, J=res.params.J, J1=res.params.J1,
                     h=res.params.h, T=res.temperature,
                     axis1=axis1, axis2=axis2, quantities=quantities)
    table = run_sweep(spec)
    if res.is_real:
        table = _table_to_lab_units(table, res)
    _emit_table(table, args)
    return 0


def _table_to_lab_units(table: SweepTable, res: Resolved) -> SweepTable:
    """Convert coordinate columns back to kelvin/tesla for laboratory input."""
    renames = {"T": "T_kelvin", "h": "B_tesla", "J1": "J1_cm1"}
    columns = tuple(renames.get(c, c) for c in table.columns)
    rows = []
    for row in table.rows:
        row = list(row)
        for i, c in enumerate(table.columns):
            if c == "T":
                row[i] = res.kelvin(row[i])
            elif c == "h":
                row[i] = res.tesla(row[i])
        rows.append(tuple(row))
    return SweepTable(columns, rows)


def _cmd_threshold(args: argparse.Namespace) -> int:
    res = _resolve(args)
    if args.target < 0:
        raise ValueError("--target must be nonnegative")
    if args.over == "temperature":
        result = threshold_temperature(res.params, args.target)
        if res.is_real:
            rec = {"threshold_T_kelvin": res.kelvin(result.value),
                   "found": result.found}
        else:
            rec = {"threshold_T": result.value, "found": result.found}
    else:
        if res.temperature <= 0:
            raise ValueError("field threshold needs a positive fixed temperature")
        result = threshold_field(res.params, args.target, res.temperature)
        if res.is_real:
            rec = {"threshold_B_tesla": res.tesla(result.value),
                   "found": result.found}
        else:
            rec = {"threshold_h": result.value, "found": result.found}
    rec["target"] = args.target
    _emit_record(rec, args)
    return 0


def _cmd_maxneg(args: argparse.Namespace) -> int:
    res = _resolve(args)
    free = tuple(args.free.split(","))
    t_range = h_range = None
    if args.t_range is not None:
        t_range = (float(args.t_range[0]), float(args.t_range[1]))
        if res.is_real:
            t_range = (t_range[0] * K_B_CM1_PER_K, t_range[1] * K_B_CM1_PER_K)
    if args.h_range is not None:
        h_range = (float(args.h_range[0]), float(args.h_range[1]))
        if res.is_real:
            to_h = res.real.g * MU_B_CM1_PER_T
            h_range = (h_range[0] * to_h, h_range[1] * to_h)
    result = max_negativity_over(res.params, free, t_range=t_range,
                                 h_range=h_range, quantity=args.quantity)
    rec = {"max_" + args.quantity: result.value}
    for axis, v in result.location.items():
        if res.is_real:
            if axis == "T":
                rec["at_T_kelvin"] = res.kelvin(v)
            else:
                rec["at_B_tesla"] = res.tesla(v)
        else:
            rec["at_" + axis] = v
    _emit_record(rec, args)
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    res = _resolve(args)
    if res.temperature <= 0:
        raise ValueError("reconstruction needs a positive temperature")
    if res.params.h == 0:
        raise ValueError("reconstruction needs a nonzero field")
    with open(args.observables) as fh:
        obs = ObservableSet.from_json(fh.read())
    beta = 1.0 / res.temperature
    elements = rho_from_observables(obs, beta, res.params.h)
    residuals = reconstruction_residuals(elements, obs)
    rep = report_from_elements(elements)
    rec = {f: getattr(rep, f) for f in REPORT_FIELDS}
    rec["trace_deviation"] = residuals["trace_deviation"]
    rec["max_residual"] = max(v for k, v in residuals.items()
                              if k.startswith("residual_"))
    if args.format == "json":
        rec = {"report": {f: getattr(rep, f) for f in REPORT_FIELDS},
               "elements": dict(sorted(elements.items())),
               "residuals": residuals}
        _emit_record(rec, args)
        return 0
    _emit_record(rec, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spintrimer",
        description="Exact entanglement negativities of the mixed spin-(1,1/2,1) "
                    "Heisenberg trimer.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_temperature: bool = True) -> None:
        _add_param_flags(p, with_temperature)
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--format", choices=("text", "csv", "json"),
                       default="text")

    p = sub.add_parser("spectrum", help="all 18 energy levels with labels")
    common(p, with_temperature=False)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("report", help="negativity report at (J, J1, h, T)")
    common(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("classify", help="ground state and entanglement class")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sweep", help="grid sweep to CSV/JSON")
    common(p)
    p.add_argument("--mode", required=True,
                   choices=("gs_map", "thermal_map", "t_scan", "h_scan"))
    p.add_argument("--axis1", type=float, nargs=3, metavar=("LO", "HI", "N"),
                   help="outer axis: J1 (gs_map), T (thermal_map/t_scan), h (h_scan)")
    p.add_argument("--axis2", type=float, nargs=3, metavar=("LO", "HI", "N"),
                   default=None, help="inner axis: h (gs_map/thermal_map)")
    p.add_argument("--quantities", default=None,
                   help="comma-separated report fields (+ class at T=0)")
    p.set_defaults(func=_cmd_sweep, format="csv")

    p = sub.add_parser("threshold",
                       help="largest T (or h) with n_tri >= target")
    common(p)
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--over", choices=("temperature", "field"),
                   default="temperature")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("maxneg", help="maximize a negativity over T or (T,h)")
    common(p)
    p.add_argument("--free", default="T", choices=("T", "T,h"),
                   help="free axes for the search")
    p.add_argument("--t-range", type=float, nargs=2, metavar=("LO", "HI"),
                   default=None, dest="t_range")
    p.add_argument("--h-range", type=float, nargs=2, metavar=("LO", "HI"),
                   default=None, dest="h_range")
    p.add_argument("--quantity", default="n_tri", choices=REPORT_FIELDS)
    p.set_defaults(func=_cmd_maxneg)

    p = sub.add_parser("reconstruct",
                       help="density matrix and negativities from observables")
    common(p)
    p.add_argument("--observables", required=True,
                   help="path to an observable-set JSON file")
    p.set_defaults(func=_cmd_reconstruct)

    return top


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
