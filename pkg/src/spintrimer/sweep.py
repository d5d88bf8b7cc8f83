"""Batch engine: parameter sweeps, threshold searches, and unit handling.

All library-level quantities are dimensionless: energies (J, J1, h, and
temperature) share one unit and negativities are pure numbers. Laboratory
units enter only through RealUnits, which converts wavenumber couplings,
Lande factor, tesla, and kelvin into that common energy unit (inverse
centimeters) and back.

Temperature convention: report_at treats temperature T as k_B T expressed in
the coupling unit, so beta = 1/T; T = 0 switches to the exact ground-manifold
mixture rather than a large-beta limit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

import numpy as np

from .negativity import NEG_TOL, NegativityReport, full_report
from .phases import classify, ground_state
from .spectrum import CouplingParams

REPORT_FIELDS = ("n_mu_s1", "n_s1_s2", "n_mu_full", "n_s1_full", "n_tri")

K_B_CM1_PER_K = 0.6950348
MU_B_CM1_PER_T = 0.4668645


@dataclass(frozen=True)
class RealUnits:
    """Laboratory description of the trimer: wavenumbers, tesla, kelvin."""

    J_cm1: float
    J1_cm1: float
    g: float
    B_tesla: float
    T_kelvin: float

    @property
    def h_cm1(self) -> float:
        return self.g * MU_B_CM1_PER_T * self.B_tesla

    @property
    def temperature_cm1(self) -> float:
        return K_B_CM1_PER_K * self.T_kelvin

    def params(self) -> CouplingParams:
        return CouplingParams(J=self.J_cm1, J1=self.J1_cm1, h=self.h_cm1)

    def to_dimensionless(self) -> tuple[CouplingParams, float]:
        """(params, temperature) rescaled so |J| = 1; negativities unchanged."""
        scale = abs(self.J_cm1)
        if scale == 0:
            raise ValueError("J = 0 cannot set the energy scale")
        p = CouplingParams(J=self.J_cm1 / scale, J1=self.J1_cm1 / scale,
                           h=self.h_cm1 / scale)
        return p, self.temperature_cm1 / scale


def nickel_copper(B_tesla: float = 0.0, T_kelvin: float = 0.0) -> RealUnits:
    """The heterotrinuclear Ni-Cu-Ni complex: J = 90.3 1/cm, J1 = 0, g = 2.1667."""
    return RealUnits(J_cm1=90.3, J1_cm1=0.0, g=2.1667,
                     B_tesla=B_tesla, T_kelvin=T_kelvin)


def report_at(params: CouplingParams, temperature: float) -> NegativityReport:
    """Negativity report at temperature T (in the coupling unit; T=0 exact)."""
    if not (temperature >= 0 and math.isfinite(temperature)):
        raise ValueError("temperature must be finite and nonnegative")
    if temperature == 0:
        return full_report(params, ground=True)
    return full_report(params, beta=1.0 / temperature)


@dataclass(frozen=True)
class SweepSpec:
    """Grid description for one batch run.

    Axis meaning per mode: gs_map (J1 x h at T = 0), thermal_map (T x h at
    fixed J1), t_scan (T), h_scan (h at fixed T). axis tuples are
    (start, stop, count) with count >= 2, swept inclusive, axis1 outermost.
    """

    mode: str
    J: float
    J1: float = 0.0
    h: float = 0.0
    T: float = 0.0
    axis1: tuple[float, float, int] = (0.0, 1.0, 2)
    axis2: tuple[float, float, int] | None = None
    quantities: tuple[str, ...] = REPORT_FIELDS

    def validate(self) -> None:
        if self.mode not in ("gs_map", "thermal_map", "t_scan", "h_scan"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        needs_axis2 = self.mode in ("gs_map", "thermal_map")
        if needs_axis2 != (self.axis2 is not None):
            raise ValueError(f"mode {self.mode} requires axis2" if needs_axis2
                             else f"mode {self.mode} takes a single axis")
        for ax in (self.axis1, self.axis2):
            if ax is None:
                continue
            lo, hi, n = ax
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError("axis range must be finite")
            if int(n) < 2:
                raise ValueError("axis step count must be at least 2")
        if not math.isfinite(self.J) or self.J == 0:
            raise ValueError("J must be finite and nonzero")
        if self.T < 0:
            raise ValueError("temperature must be nonnegative")
        if self.mode in ("thermal_map", "t_scan") and self.axis1[0] < 0:
            raise ValueError("temperature axis must start at T >= 0")
        allowed = set(REPORT_FIELDS) | {"class"}
        bad = [q for q in self.quantities if q not in allowed]
        if bad:
            raise ValueError(f"unknown quantities {bad}")
        if "class" in self.quantities and not self._zero_temperature_only():
            raise ValueError("entanglement class is defined for T = 0 rows only")

    def _zero_temperature_only(self) -> bool:
        if self.mode == "gs_map":
            return True
        if self.mode == "h_scan":
            return self.T == 0
        return False


@dataclass
class SweepTable:
    """Rectangular sweep output: column names plus row tuples."""

    columns: tuple[str, ...]
    rows: list[tuple]


def _axis_values(ax: tuple[float, float, int]) -> np.ndarray:
    lo, hi, n = ax
    return np.linspace(lo, hi, int(n))


def _row_quantities(rep: NegativityReport, spec: SweepSpec,
                    params: CouplingParams, at_zero_t: bool) -> list:
    out: list = []
    for q in spec.quantities:
        if q == "class":
            out.append(classify(rep).subtype if at_zero_t else "")
        else:
            out.append(getattr(rep, q))
    return out


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the grid row-major (axis1 outer); deterministic and pure."""
    spec.validate()
    rows: list[tuple] = []
    if spec.mode == "gs_map":
        columns = ("J1", "h") + spec.quantities
        for j1 in _axis_values(spec.axis1):
            for h in _axis_values(spec.axis2):
                p = CouplingParams(spec.J, float(j1), float(h))
                rep = report_at(p, 0.0)
                rows.append((float(j1), float(h), *_row_quantities(rep, spec, p, True)))
    elif spec.mode == "thermal_map":
        columns = ("T", "h") + spec.quantities
        for t in _axis_values(spec.axis1):
            for h in _axis_values(spec.axis2):
                p = CouplingParams(spec.J, spec.J1, float(h))
                rep = report_at(p, float(t))
                rows.append((float(t), float(h), *_row_quantities(rep, spec, p, t == 0)))
    elif spec.mode == "t_scan":
        columns = ("T",) + spec.quantities
        for t in _axis_values(spec.axis1):
            p = CouplingParams(spec.J, spec.J1, spec.h)
            rep = report_at(p, float(t))
            rows.append((float(t), *_row_quantities(rep, spec, p, t == 0)))
    else:
        columns = ("h",) + spec.quantities
        for h in _axis_values(spec.axis1):
            p = CouplingParams(spec.J, spec.J1, float(h))
            rep = report_at(p, spec.T)
            rows.append((float(h), *_row_quantities(rep, spec, p, spec.T == 0)))
    return SweepTable(columns=columns, rows=rows)


def _format_cell(v) -> str:
    if isinstance(v, str):
        return v
    return "%.17g" % float(v)


def write_csv(table: SweepTable, stream: TextIO) -> None:
    stream.write(",".join(table.columns) + "\n")
    for row in table.rows:
        stream.write(",".join(_format_cell(v) for v in row) + "\n")


def write_json(table: SweepTable, stream: TextIO) -> None:
    records = [dict(zip(table.columns, row)) for row in table.rows]
    json.dump(records, stream, indent=1)
    stream.write("\n")


@dataclass(frozen=True)
class ThresholdResult:
    """Largest axis value still reaching the target (value 0 if never)."""

    value: float
    found: bool


def _largest_crossing(f: Callable[[float], float], target: float,
                      x_start: float, rel_tol: float = 1e-4) -> ThresholdResult:
    """Largest x > 0 with f(x) >= target, assuming f -> 0 as x -> inf.

    Doubles x_start until f < target, scans a geometric grid downward for the
    highest bracketing interval, then bisects it to relative rel_tol.
    """
    hi = x_start
    for _ in range(200):
        if f(hi) < target:
            break
        hi *= 2.0
    else:
        raise RuntimeError("target never undershot; no decay at large argument")
    lo_floor = hi * 1e-9
    grid = np.geomspace(hi, lo_floor, 400)
    above = None
    for x in grid:
        if f(float(x)) >= target:
            above = float(x)
            break
        hi = float(x)
    if above is None:
        if f(0.0) >= target:
            # reaches the target only in the exact limit; report the floor
            return ThresholdResult(float(grid[-1]), True)
        return ThresholdResult(0.0, False)
    lo = above
    while hi - lo > rel_tol * max(lo, lo_floor):
        mid = 0.5 * (lo + hi)
        if f(mid) >= target:
            lo = mid
        else:
            hi = mid
    return ThresholdResult(0.5 * (lo + hi), True)


def threshold_temperature(params: CouplingParams, target: float,
                          neg_tol: float = NEG_TOL) -> ThresholdResult:
    """Largest temperature (coupling unit) with n_tri >= target.

    target = 0 uses the negativity floor neg_tol; beta -> 0 guarantees decay.
    """
    eff = max(target, neg_tol)
    scale = max(abs(params.J), abs(params.J1), abs(params.h), 1.0)

    def f(t: float) -> float:
        return report_at(params, t).n_tri

    return _largest_crossing(f, eff, x_start=10.0 * scale)


def threshold_field(params: CouplingParams, target: float, temperature: float,
                    neg_tol: float = NEG_TOL) -> ThresholdResult:
    """Largest field h (coupling unit) with n_tri >= target at fixed T.

    The h in params is ignored; saturation guarantees decay at large h.
    """
    eff = max(target, neg_tol)
    scale = max(abs(params.J), abs(params.J1), 1.0)

    def f(h: float) -> float:
        return report_at(CouplingParams(params.J, params.J1, h), temperature).n_tri

    return _largest_crossing(f, eff, x_start=10.0 * scale)


@dataclass(frozen=True)
class MaxResult:
    """Maximum of a report quantity over a search box."""

    value: float
    location: dict[str, float]


def max_negativity_over(
    params_base: CouplingParams,
    free: tuple[str, ...],
    t_range: tuple[float, float] | None = None,
    h_range: tuple[float, float] | None = None,
    quantity: str = "n_tri",
) -> MaxResult:
    """Deterministic zoom-grid maximization over T or (T, h).

    Repeatedly evaluates a fixed grid over the box and shrinks it around the
    argmax (ties resolve to the lowest index) until the box is finer than
    1e-3 |J| on every free axis; bit-reproducible across runs.
    """
    if quantity not in REPORT_FIELDS:
        raise ValueError(f"unknown quantity {quantity!r}")
    if free not in (("T",), ("T", "h")):
        raise ValueError('free axes must be ("T",) or ("T", "h")')
    scale = max(abs(params_base.J), abs(params_base.J1), abs(params_base.h), 1.0)
    resolution = 1e-3 * abs(params_base.J)
    t_lo, t_hi = t_range if t_range is not None else (0.0, 5.0 * scale)
    if t_lo < 0:
        raise ValueError("temperature range must be nonnegative")

    def value_at(t: float, h: float) -> float:
        p = CouplingParams(params_base.J, params_base.J1, h)
        return getattr(report_at(p, t), quantity)

    if free == ("T",):
        h = params_base.h
        while True:
            ts = np.linspace(t_lo, t_hi, 61)
            vals = [value_at(float(t), h) for t in ts]
            i = int(np.argmax(vals))
            if t_hi - t_lo <= resolution:
                return MaxResult(vals[i], {"T": float(ts[i])})
            t_lo, t_hi = float(ts[max(0, i - 1)]), float(ts[min(60, i + 1)])

    h_lo, h_hi = h_range if h_range is not None else (0.0, 3.0 * scale)
    while True:
        ts = np.linspace(t_lo, t_hi, 41)
        hs = np.linspace(h_lo, h_hi, 41)
        vals = np.array([[value_at(float(t), float(h)) for h in hs] for t in ts])
        it, ih = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if t_hi - t_lo <= resolution and h_hi - h_lo <= resolution:
            return MaxResult(float(vals[it, ih]),
                             {"T": float(ts[it]), "h": float(hs[ih])})
        t_lo, t_hi = float(ts[max(0, it - 1)]), float(ts[min(40, it + 1)])
        h_lo, h_hi = float(hs[max(0, ih - 1)]), float(hs[min(40, ih + 1)])
