"""Bidirectional map between the thermal state and nine local observables.

Forward direction: trace the full density matrix against five z-type and four
x-type spin products. Backward direction: invert those traces in closed form,
element by element, using the fixed Boltzmann ratios between the field-flipped
sectors (r+ / r- equals exp(-k beta h) with k = 5, 3, or 1 depending on the
element). The inversion is parameterized by the known (beta, h); it is
singular at h = 0 or beta = 0, where the sector ratios degenerate and the
linear system loses rank.

All exponentials are written in terms of exp(-|beta h|) so the formulas stay
finite at large fields; the h < 0 case is handled by the global spin flip,
which negates the three odd-in-field observables and swaps the +/- sectors.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .density import DensityMatrix, rho_matrix_from_elements
from .negativity import NEG_TOL, NegativityReport, report_from_elements
from .spectrum import spin_half_ops, spin_one_ops

OBSERVABLE_NAMES = ("mz_mu", "mz_s", "c_mus", "c_ss", "c_qss",
                    "x_mus", "x_ss", "x_mixed", "x_quad")

# observables whose defining operator carries an odd number of z factors
_ODD_IN_FIELD = ("mz_mu", "mz_s", "c_qss")


@dataclass(frozen=True)
class ObservableSet:
    """The nine local expectation values that determine the thermal state."""

    mz_mu: float
    mz_s: float
    c_mus: float
    c_ss: float
    c_qss: float
    x_mus: float
    x_ss: float
    x_mixed: float
    x_quad: float

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, record: dict[str, float]) -> "ObservableSet":
        missing = set(OBSERVABLE_NAMES) - set(record)
        extra = set(record) - set(OBSERVABLE_NAMES)
        if missing or extra:
            raise ValueError(f"observable record keys wrong: missing {sorted(missing)}, "
                             f"unexpected {sorted(extra)}")
        return cls(**{k: float(record[k]) for k in OBSERVABLE_NAMES})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ObservableSet":
        return cls.from_dict(json.loads(text))


def _observable_operators() -> dict[str, np.ndarray]:
    """The nine defining operators as 18x18 matrices."""
    mz, mp, mm = spin_half_ops()
    sz, sp, sm = spin_one_ops()
    mx = 0.5 * (mp + mm)
    sx = 0.5 * (sp + sm)
    i2, i3 = np.eye(2), np.eye(3)

    def emb(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
        return np.kron(a, np.kron(b, c))

    return {
        "mz_mu": emb(mz, i3, i3),
        "mz_s": emb(i2, sz, i3),
        "c_mus": emb(mz, sz, i3),
        "c_ss": emb(i2, sz, sz),
        "c_qss": emb(i2, sz @ sz, sz),
        "x_mus": emb(mx, sx, i3),
        "x_ss": emb(i2, sx, sx),
        "x_mixed": emb(mx, sx @ sx, sx),
        "x_quad": emb(i2, sx @ sx, sx @ sx),
    }


def observables_from_rho(rho: DensityMatrix) -> ObservableSet:
    """Evaluate all nine expectation values by direct trace."""
    if rho.dims != (2, 3, 3):
        raise ValueError(f"expected the full (2,3,3) state, got dims {rho.dims}")
    ops = _observable_operators()
    vals = {name: float(np.trace(op @ rho.entries)) for name, op in ops.items()}
    return ObservableSet(**vals)


# r+ / r- Boltzmann exponents per element orbit
RATIO_EXPONENTS: dict[str, int] = {
    "r11": 5, "r22": 3, "r99": 3, "r24": 3, "r2_10": 3,
    "r33": 1, "r55": 1, "r66": 1, "r35": 1, "r37": 1,
    "r3_11": 1, "r3_13": 1, "r5_11": 1, "r68": 1,
}

# how many times each diagonal orbit appears on the diagonal (per sector)
_DIAG_MULT = {"r11": 1, "r22": 2, "r33": 2, "r55": 1, "r66": 2, "r99": 1}


def rho_from_observables(obs: ObservableSet, beta: float, h: float) -> dict[str, float]:
    """Invert the nine observables into all 28 signed matrix elements.

    beta and h are inputs, not fitted. Raises for beta <= 0 or h = 0, where
    the sector-ratio structure the inversion relies on becomes singular.
    """
    if not (beta > 0 and math.isfinite(beta)):
        raise ValueError("reconstruction requires beta > 0")
    if h == 0 or not math.isfinite(h):
        raise ValueError("reconstruction requires h != 0 (field-flip ratios degenerate)")
    if h < 0:
        flipped = {k: (-v if k in _ODD_IN_FIELD else v)
                   for k, v in obs.to_dict().items()}
        mirror = rho_from_observables(ObservableSet(**flipped), beta, -h)
        return {name + ("-" if sign == "+" else "+"): val
                for key, val in mirror.items()
                for name, sign in ((key[:-1], key[-1]),)}

    s = beta * h
    e1 = math.exp(-s)
    e2, e3, e4, e5 = e1 * e1, e1 ** 3, e1 ** 4, e1 ** 5

    M, S, C, Q = obs.mz_mu, obs.mz_s, obs.c_mus, obs.c_qss

    # cascade of shifted auxiliary quantities; each is a finite combination of
    # (1 +/- e^{-ks}) factors so nothing overflows at large s
    A1 = -4.0 * (1.0 - e2)
    C1 = -(A1 * A1 / 4.0) * (1.0 - e1)
    D1 = A1 * C1 * (1.0 + e1) ** 2 / 4.0
    E1 = -A1 * D1 * (1.0 + e2) * (1.0 + e1) / 4.0
    a1 = 2.0 * M * (1.0 + e1) - (1.0 - e1)
    a2 = -S * (1.0 + e1) - 2.0 * C * (1.0 - e1)
    a3 = a1 * (1.0 + e1) - 8.0 * C * (1.0 - e2)
    a4 = -(A1 / 2.0) * (a3 * (1.0 + e2) + a2 * A1 * (1.0 - e1) / 2.0)
    a5 = -(1.0 - e3) * a4 + D1 * Q

    r: dict[str, float] = {}
    r["r11-"] = a5 / E1
    r["r22-"] = -(1.0 + e2) * r["r11-"] + a3 / C1 + a4 / (2.0 * D1)
    r["r33-"] = (0.5 * (1.0 + e4) * r["r11-"]
                 - obs.c_ss / (2.0 * (1.0 + e1))
                 + (1.0 + e2 - e1) * a4 / (2.0 * D1))
    r["r99-"] = e1 * r["r11-"] + a4 / D1
    # last two diagonals from the mu-S1 z correlation and the normalization
    # condition; both stay finite for all s > 0
    r["r66-"] = ((1.0 + e5) * r["r11-"] + (1.0 + e3) * (r["r22-"] - r["r99-"])
                 - 2.0 * C) / (1.0 + e1)
    r["r55-"] = (1.0
                 - (1.0 + e5) * r["r11-"]
                 - 2.0 * (1.0 + e3) * r["r22-"]
                 - 2.0 * (1.0 + e1) * r["r33-"]
                 - 2.0 * (1.0 + e1) * r["r66-"]
                 - (1.0 + e3) * r["r99-"]) / (1.0 + e1)

    # off-diagonal cascade
    rt2 = math.sqrt(2.0)
    r["r2_10-"] = 2.0 * rt2 * obs.x_mixed / (1.0 + e1) ** 3
    r["r3_13-"] = (1.0 + e1 + e2) * r["r2_10-"] - rt2 * obs.x_mus / (1.0 + e1)
    r["r5_11-"] = e1 * r["r2_10-"]
    r["r3_11-"] = e1 * r["r2_10-"] - r["r3_13-"]
    r["r37-"] = (4.0 * obs.x_quad
                 - (1.0 + e5) * r["r11-"]
                 - 4.0 * (1.0 + e3) * r["r22-"]
                 - 2.0 * (1.0 + e1) * r["r33-"]
                 - 4.0 * (1.0 + e1) * r["r55-"]
                 - 4.0 * (1.0 + e1) * r["r66-"]
                 - (1.0 + e3) * r["r99-"]) / (2.0 * (1.0 + e1))
    # remaining pair (r24, r35) from the in-plane pair correlator plus the
    # sector-bridging identity e^{-s} r24 = r35 + r37 + r3_13/sqrt(2)
    lhs = np.array([[e1, -1.0],
                    [(1.0 + e1) * (1.0 + e2), 2.0 * (1.0 + e1)]])
    rhs = np.array([r["r37-"] + r["r3_13-"] / rt2,
                    obs.x_ss + rt2 * (1.0 + e1) * r["r3_13-"]])
    r24, r35 = np.linalg.solve(lhs, rhs)
    r["r24-"], r["r35-"] = float(r24), float(r35)
    r["r68-"] = e1 * r["r24-"] - rt2 * r["r3_13-"]

    for name, k in RATIO_EXPONENTS.items():
        r[name + "+"] = math.exp(-k * s) * r[name + "-"]
    return r


def assemble_rho(elements: dict[str, float]) -> DensityMatrix:
    """Place reconstructed elements into the full 18x18 matrix."""
    return rho_matrix_from_elements(elements)


def reconstruction_residuals(elements: dict[str, float], obs: ObservableSet) -> dict[str, float]:
    """Consistency diagnostics of a reconstructed element map.

    Returns the deviation of the total trace from 1 and, per observable, the
    difference between the input value and the one recomputed from the
    assembled matrix. Inconsistent (non-physical) inputs show up here rather
    than being clamped away.
    """
    trace = sum(_DIAG_MULT[name] * (elements[name + "-"] + elements[name + "+"])
                for name in _DIAG_MULT)
    rho = assemble_rho(elements)
    back = observables_from_rho(rho).to_dict()
    out = {"trace_deviation": abs(trace - 1.0)}
    for name, value in obs.to_dict().items():
        out["residual_" + name] = abs(back[name] - value)
    return out


def negativity_from_observables(obs: ObservableSet, beta: float, h: float,
                                neg_tol: float = NEG_TOL) -> NegativityReport:
    """Full negativity report computed purely from the nine observables."""
    return report_from_elements(rho_from_observables(obs, beta, h), neg_tol)
