"""Bipartite and tripartite negativities of the trimer.

Negativity of a bipartition is the sum of |lambda| over the negative
eigenvalues lambda of the partially transposed state. Four bipartitions are
supported (two after tracing one spin out, two of the full state) plus the
global tripartite measure, the geometric mean of the three bipartite
negativities that split the trimer one-against-the-rest (the two S-against
splits coincide by exchange symmetry, so it uses one of them squared).

Eigenvalues come from closed forms in the matrix elements wherever the block
structure permits (6x6 and 9x9 fully; the 18x18 mu-transpose fully; the 18x18
S1-transpose only for its 1x1 and 3x3 blocks), with a dense eigensolver
covering the rest and serving as fallback near degenerate cubic roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import (
    TS1_FULL_BLOCKS,
    TransposedMatrix,
    Weights,
    ground_weights,
    mu_grid_from_rho_elements,
    omega_from_rho_elements,
    partial_transpose,
    rho_elements,
    rho_matrix_from_elements,
    thermal_weights,
)
from .spectrum import CouplingParams

NEG_TOL = 1e-12


@dataclass(frozen=True)
class NegativityReport:
    """All five negativities of one state."""

    n_mu_s1: float
    n_s1_s2: float
    n_mu_full: float
    n_s1_full: float
    n_tri: float

    def astuple(self) -> tuple[float, float, float, float, float]:
        return (self.n_mu_s1, self.n_s1_s2, self.n_mu_full, self.n_s1_full, self.n_tri)


def _negative_sum(eigs: np.ndarray, neg_tol: float) -> float:
    lam = np.asarray(eigs, dtype=float)
    return abs(float(lam[lam < -neg_tol].sum()))


def negativity_of(matrix: TransposedMatrix, neg_tol: float = NEG_TOL) -> float:
    """Sum of |eigenvalue| over eigenvalues below -neg_tol, block by block."""
    total = 0.0
    for block in matrix.blocks:
        sub = matrix.entries[np.ix_(block, block)]
        total += _negative_sum(np.linalg.eigvalsh(sub), neg_tol)
    return total


def _det3(M: np.ndarray) -> float:
    """Determinant of a 3x3 by cofactor expansion (no LAPACK warnings on
    singular input, and exact for the symbolic zero patterns that arise at
    T = 0)."""
    return float(
        M[0, 0] * (M[1, 1] * M[2, 2] - M[1, 2] * M[2, 1])
        - M[0, 1] * (M[1, 0] * M[2, 2] - M[1, 2] * M[2, 0])
        + M[0, 2] * (M[1, 0] * M[2, 1] - M[1, 1] * M[2, 0])
    )


def _cubic_roots(a: float, b: float, det: float,
                 fallback: np.ndarray | None = None) -> tuple[float, float, float]:
    """Eigenvalues of a symmetric 3x3 from its invariants.

    a is the trace, b the sum of principal 2x2 minors, det the determinant.
    Trigonometric form. The arccos argument loses one digit of root accuracy
    per digit the relative discriminant (p^3 - q^2)/p^3 drops below ~1e-2, so
    anything inside 1e-9 of the degenerate boundary (and the p ~ 0 triple
    point) reverts to the dense solver on the originating block.
    """
    p = (a / 3.0) ** 2 - b / 3.0
    q = (a / 3.0) ** 3 - a * b / 6.0 + det / 2.0
    if p < 1e-20 or p ** 3 - q * q < 1e-9 * p ** 3:
        if fallback is not None:
            lam = np.linalg.eigvalsh(fallback)
            return (float(lam[0]), float(lam[1]), float(lam[2]))
        return (a / 3.0, a / 3.0, a / 3.0)
    theta = math.acos(min(1.0, max(-1.0, q / p ** 1.5)))
    rt = 2.0 * math.sqrt(p)
    return tuple(a / 3.0 + rt * math.cos((theta - 2.0 * math.pi * k) / 3.0)
                 for k in (0, 1, 2))  # type: ignore[return-value]


def _pair_eigs(d1: float, d2: float, off: float) -> tuple[float, float]:
    """Eigenvalues of [[d1, off], [off, d2]], smaller first."""
    half = 0.5 * (d1 + d2)
    rad = 0.5 * math.hypot(d1 - d2, 2.0 * off)
    return (half - rad, half + rad)


def mu_s1_labeled(elements: dict[str, float]) -> dict[str, float]:
    """Closed-form eigenvalues of the mu-transposed (mu,S1) state, labeled.

    Per field sector s: l1 is the decoupled diagonal entry; l2/l3 are the
    2x2 block mixing the sector's corner element with the opposite-sector
    central one. Only l2 can dip negative.
    """
    out: dict[str, float] = {}
    for s, o in (("-", "+"), ("+", "-")):
        out["l1" + s] = elements["w33" + s]
        lo, hi = _pair_eigs(elements["w11" + s], elements["w22" + o], elements["w24" + s])
        out["l2" + s], out["l3" + s] = lo, hi
    return out


def analytic_eigs_mu_s1(elements: dict[str, float]) -> np.ndarray:
    lab = mu_s1_labeled(elements)
    return np.array([lab["l" + str(i) + s] for s in ("-", "+") for i in (1, 2, 3)])


def analytic_eigs_s1_s2(elements: dict[str, float]) -> np.ndarray:
    """Closed-form eigenvalues of the S1-transposed (S1,S2) state.

    One field-even diagonal entry and one 2x2 block each appear twice; the
    remaining three eigenvalues solve the central 3x3 via the trigonometric
    cubic (dense fallback near degeneracies).
    """
    m = elements
    lo, hi = _pair_eigs(m["m22-"], m["m22+"], m["m35"])
    M3 = np.array([[m["m11-"], m["m24-"], m["m37"]],
                   [m["m24-"], m["m55"], m["m24+"]],
                   [m["m37"], m["m24+"], m["m11+"]]])
    a = m["m11-"] + m["m55"] + m["m11+"]
    b = (m["m11-"] * m["m55"] - m["m24-"] ** 2
         + m["m11-"] * m["m11+"] - m["m37"] ** 2
         + m["m55"] * m["m11+"] - m["m24+"] ** 2)
    triple = _cubic_roots(a, b, _det3(M3), fallback=M3)
    return np.array([m["m33"], m["m33"], lo, lo, hi, hi, *triple])


def full_mu_labeled(elements: dict[str, float]) -> dict[str, float]:
    """Closed-form eigenvalues of the mu-transposed full state, labeled l1..l9
    per field sector. Only l3, l5, l8 can be negative."""
    r = elements
    out: dict[str, float] = {}
    for s, o in (("-", "+"), ("+", "-")):
        out["l1" + s] = r["r99" + s]
        out["l2" + s] = r["r66" + s] - r["r68" + s]
        lo, hi = _pair_eigs(r["r11" + s], r["r66" + s] + r["r68" + s],
                            math.sqrt(2.0) * r["r2_10" + s])
        out["l3" + s], out["l4" + s] = lo, hi
        lo, hi = _pair_eigs(r["r22" + s] - r["r24" + s], r["r33" + o] - r["r37" + o],
                            r["r3_11" + s] - r["r3_13" + s])
        out["l5" + s], out["l6" + s] = lo, hi
        out["l7" + s] = r["r33" + o] + r["r37" + o] - r["r35" + o]
        lo, hi = _pair_eigs(r["r22" + s] + r["r24" + s], r["r55" + o] + r["r35" + o],
                            math.sqrt(3.0) * r["r5_11" + s])
        out["l8" + s], out["l9" + s] = lo, hi
    return out


def analytic_eigs_full_mu(elements: dict[str, float]) -> np.ndarray:
    lab = full_mu_labeled(elements)
    return np.array([lab["l" + str(i) + s] for s in ("-", "+") for i in range(1, 10)])


def eigs_full_s1(rho_t: TransposedMatrix) -> np.ndarray:
    """Eigenvalues of the S1-transposed full state.

    The two 1x1 and two 3x3 blocks are handled in closed form (trigonometric
    cubic with dense fallback); the two 5x5 blocks have no closed form and go
    to the dense solver.
    """
    if rho_t.source != "S1|muS2":
        raise ValueError(f"expected an S1-transposed full state, got {rho_t.source!r}")
    T = rho_t.entries
    eigs: list[float] = []
    for block in TS1_FULL_BLOCKS:
        sub = T[np.ix_(block, block)]
        if len(block) == 1:
            eigs.append(float(sub[0, 0]))
        elif len(block) == 3:
            a = float(np.trace(sub))
            b = float(sub[0, 0] * sub[1, 1] - sub[0, 1] ** 2
                      + sub[0, 0] * sub[2, 2] - sub[0, 2] ** 2
                      + sub[1, 1] * sub[2, 2] - sub[1, 2] ** 2)
            eigs.extend(_cubic_roots(a, b, _det3(sub), fallback=sub))
        else:
            eigs.extend(np.linalg.eigvalsh(sub))
    return np.array(eigs)


def tripartite_negativity(n_mu_full: float, n_s1_full: float,
                          neg_tol: float = NEG_TOL) -> float:
    """Geometric mean (n_mu_full * n_s1_full^2)^(1/3), zero if any factor is."""
    if n_mu_full <= neg_tol or n_s1_full <= neg_tol:
        return 0.0
    return math.exp((math.log(n_mu_full) + 2.0 * math.log(n_s1_full)) / 3.0)


def report_from_elements(r: dict[str, float], neg_tol: float = NEG_TOL) -> NegativityReport:
    """All five negativities of a state given by its 28 signed elements."""
    n_mu_s1 = _negative_sum(analytic_eigs_mu_s1(omega_from_rho_elements(r)), neg_tol)
    n_s1_s2 = _negative_sum(analytic_eigs_s1_s2(mu_grid_from_rho_elements(r)), neg_tol)
    n_mu_full = _negative_sum(analytic_eigs_full_mu(r), neg_tol)
    rho = rho_matrix_from_elements(r)
    n_s1_full = _negative_sum(eigs_full_s1(partial_transpose(rho, "S1")), neg_tol)
    return NegativityReport(
        n_mu_s1=n_mu_s1,
        n_s1_s2=n_s1_s2,
        n_mu_full=n_mu_full,
        n_s1_full=n_s1_full,
        n_tri=tripartite_negativity(n_mu_full, n_s1_full, neg_tol),
    )


def report_from_weights(weights: Weights, neg_tol: float = NEG_TOL) -> NegativityReport:
    """All five negativities of a mixture of the fixed eigenvectors."""
    return report_from_elements(rho_elements(weights), neg_tol)


def full_report(
    params: CouplingParams,
    beta: float | None = None,
    *,
    ground: bool = False,
    degeneracy_tol: float | None = None,
    neg_tol: float = NEG_TOL,
) -> NegativityReport:
    """Negativity report of the thermal state at beta, or of the ground state.

    Exactly one temperature spec applies: pass beta >= 0, or ground=True.
    """
    if ground == (beta is not None):
        raise ValueError("pass either beta or ground=True, not both or neither")
    if ground:
        w = ground_weights(params, degeneracy_tol)
    else:
        w = thermal_weights(params, float(beta))  # type: ignore[arg-type]
    return report_from_weights(w, neg_tol)
