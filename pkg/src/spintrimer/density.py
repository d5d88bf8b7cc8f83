"""Density matrices, reductions, and partial transposes for the spin trimer.

Every state handled here is a mixture of the 18 fixed eigenvectors: thermal
states carry Boltzmann weights, zero-temperature states carry an equal weight
on each ground-manifold member. All closed-form matrix elements are therefore
implemented over an arbitrary probability weight vector aligned with
``spectrum.STATE_KEYS``; the per-state coefficients are parameter-independent
constants.

Element naming: the full density matrix has 70 nonzero entries falling into 14
symmetry orbits per field sector. An orbit is labelled ``r<i>_<j>`` (or
``r<ij>`` for single digits) by the smallest 1-based flat position pair of its
positive-S_t^z representative, with a trailing ``-`` for the positive sector
and ``+`` for the field-flipped one (flat -> 17-flat). Reduced-matrix elements
(``w..`` over (mu,S1), ``m..`` over (S1,S2)) are the corresponding partial
sums. The README documents the full position map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .spectrum import (
    STATE_KEYS,
    CouplingParams,
    StateKey,
    analytic_energies,
    state_vector,
)

_R2 = math.sqrt(2.0)

Weights = np.ndarray


def default_degeneracy_tol(params: CouplingParams) -> float:
    """Energy window for treating levels as degenerate."""
    return 1e-9 * max(1.0, abs(params.J), abs(params.J1), abs(params.h))


def thermal_weights(params: CouplingParams, beta: float) -> Weights:
    """Boltzmann weights over STATE_KEYS, ground-energy shifted for safety."""
    if not (beta >= 0 and math.isfinite(beta)):
        raise ValueError("beta must be finite and nonnegative")
    e = analytic_energies(params)
    w = np.exp(-beta * (e - e.min()))
    return w / w.sum()


def ground_weights(params: CouplingParams, degeneracy_tol: float | None = None) -> Weights:
    """Equal weights on all states within degeneracy_tol of the minimum energy."""
    tol = default_degeneracy_tol(params) if degeneracy_tol is None else degeneracy_tol
    if tol <= 0:
        raise ValueError("degeneracy_tol must be positive")
    e = analytic_energies(params)
    mask = e <= e.min() + tol
    return mask / mask.sum()


@dataclass
class DensityMatrix:
    """Real symmetric density matrix with its subsystem dimensions."""

    dims: tuple[int, ...]
    entries: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return int(np.prod(self.dims))

    def validate(self, psd_tol: float = 1e-10) -> None:
        M = self.entries
        if M.shape != (self.size, self.size):
            raise ValueError(f"entries shape {M.shape} does not match dims {self.dims}")
        if abs(np.trace(M) - 1.0) > 1e-12:
            raise ValueError("trace differs from 1 beyond tolerance")
        if np.max(np.abs(M - M.T)) > 1e-12:
            raise ValueError("matrix is not symmetric within tolerance")
        if np.linalg.eigvalsh(M).min() < -psd_tol:
            raise ValueError("matrix has a negative eigenvalue beyond tolerance")


@dataclass
class TransposedMatrix:
    """A partial transpose, with its discovered block decomposition."""

    source: str
    entries: np.ndarray = field(repr=False)
    blocks: tuple[tuple[int, ...], ...] = ()

    @property
    def size(self) -> int:
        return self.entries.shape[0]


def density_matrix_from_weights(weights: Weights) -> DensityMatrix:
    """rho = sum_k w_k |psi_k><psi_k| over the fixed eigenvectors."""
    w = np.asarray(weights, dtype=float)
    if w.shape != (18,) or abs(w.sum() - 1.0) > 1e-12 or w.min() < 0:
        raise ValueError("weights must be 18 nonnegative numbers summing to 1")
    V = np.column_stack([state_vector(k) for k in STATE_KEYS])
    return DensityMatrix(dims=(2, 3, 3), entries=(V * w) @ V.T)


def thermal_density_matrix(params: CouplingParams, beta: float) -> DensityMatrix:
    return density_matrix_from_weights(thermal_weights(params, beta))


def ground_state_density_matrix(
    params: CouplingParams, degeneracy_tol: float | None = None
) -> DensityMatrix:
    return density_matrix_from_weights(ground_weights(params, degeneracy_tol))


def reduce(rho: DensityMatrix, keep: str) -> DensityMatrix:
    """Partial trace of the full (2,3,3) state down to one spin pair.

    keep is one of "muS1", "S1S2", "muS2" (the last exists to expose the
    S1 <-> S2 exchange symmetry; it equals the "muS1" reduction).
    """
    if rho.dims != (2, 3, 3):
        raise ValueError(f"reduce expects the full (2,3,3) state, got {rho.dims}")
    R = rho.entries.reshape(2, 3, 3, 2, 3, 3)
    if keep == "muS1":
        out = np.einsum("mabncb->manc", R).reshape(6, 6)
        dims: tuple[int, ...] = (2, 3)
    elif keep == "muS2":
        out = np.einsum("mabnad->mbnd", R).reshape(6, 6)
        dims = (2, 3)
    elif keep == "S1S2":
        out = np.einsum("mabmcd->abcd", R).reshape(9, 9)
        dims = (3, 3)
    else:
        raise ValueError(f"unknown reduction target {keep!r}")
    return DensityMatrix(dims=dims, entries=out)


def _connected_blocks(M: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Connected components of the exact nonzero pattern, as sorted index sets."""
    n = M.shape[0]
    adj = M != 0.0
    seen = [False] * n
    blocks: list[tuple[int, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.nonzero(adj[i])[0]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(int(j))
        blocks.append(tuple(sorted(comp)))
    return tuple(sorted(blocks))


def partial_transpose(rho: DensityMatrix, part: str) -> TransposedMatrix:
    """Transpose the indices of one subsystem; block structure is discovered."""
    if rho.dims == (2, 3) or rho.dims == (3, 3):
        if rho.dims == (2, 3) and part == "mu":
            source = "mu|S1"
        elif rho.dims == (3, 3) and part == "S1":
            source = "S1|S2"
        else:
            raise ValueError(f"unknown subsystem {part!r} for dims {rho.dims}")
        d0, d1 = rho.dims
        T = rho.entries.reshape(d0, d1, d0, d1).transpose(2, 1, 0, 3).reshape(rho.size, rho.size)
    elif rho.dims == (2, 3, 3):
        R = rho.entries.reshape(2, 3, 3, 2, 3, 3)
        if part == "mu":
            source = "mu|S1S2"
            T = R.transpose(3, 1, 2, 0, 4, 5).reshape(18, 18)
        elif part == "S1":
            source = "S1|muS2"
            T = R.transpose(0, 4, 2, 3, 1, 5).reshape(18, 18)
        else:
            raise ValueError(f"unknown subsystem {part!r} for dims {rho.dims}")
    else:
        raise ValueError(f"unsupported dims {rho.dims}")
    return TransposedMatrix(source=source, entries=T, blocks=_connected_blocks(T))


# Per-state coefficients of the 14 element orbits, written for the
# positive-sector ("-") element; the "+" element uses the S_t^z-flipped keys.
_ElementTable = tuple[tuple[StateKey, float], ...]

RHO_COEFFS: dict[str, _ElementTable] = {
    "r11": (((5, "", 5), 1.0),),
    "r22": (((5, "", 3), 0.4), ((3, "II", 3), 0.1), ((3, "I", 3), 0.5)),
    "r33": (((5, "", 1), 0.1), ((3, "II", 1), 1 / 15), ((3, "I", 1), 1 / 3),
            ((1, "II", 1), 1 / 6), ((1, "I", 1), 1 / 3)),
    "r55": (((5, "", 1), 0.4), ((3, "II", 1), 4 / 15), ((1, "I", 1), 1 / 3)),
    "r66": (((5, "", 1), 0.2), ((3, "II", 1), 0.3), ((3, "I", 1), 1 / 6),
            ((1, "II", 1), 1 / 3)),
    "r99": (((5, "", 3), 0.2), ((3, "II", 3), 0.8)),
    "r24": (((5, "", 3), 0.4), ((3, "II", 3), 0.1), ((3, "I", 3), -0.5)),
    "r2_10": (((5, "", 3), _R2 / 5), ((3, "II", 3), -_R2 / 5)),
    "r35": (((5, "", 1), 0.2), ((3, "II", 1), 2 / 15), ((1, "I", 1), -1 / 3)),
    "r37": (((5, "", 1), 0.1), ((3, "II", 1), 1 / 15), ((3, "I", 1), -1 / 3),
            ((1, "II", 1), -1 / 6), ((1, "I", 1), 1 / 3)),
    "r3_11": (((5, "", 1), _R2 / 10), ((3, "II", 1), -_R2 / 10),
              ((3, "I", 1), _R2 / 6), ((1, "II", 1), -_R2 / 6)),
    "r3_13": (((5, "", 1), _R2 / 10), ((3, "II", 1), -_R2 / 10),
              ((3, "I", 1), -_R2 / 6), ((1, "II", 1), _R2 / 6)),
    "r5_11": (((5, "", 1), _R2 / 5), ((3, "II", 1), -_R2 / 5)),
    "r68": (((5, "", 1), 0.2), ((3, "II", 1), 0.3), ((3, "I", 1), -1 / 6),
            ((1, "II", 1), -1 / 3)),
}

# Where each orbit lives in the 18x18 matrix (0-based, upper triangle of the
# positive sector; symmetric partners and the flipped sector are generated).
RHO_POSITIONS: dict[str, tuple[tuple[int, int], ...]] = {
    "r11": ((0, 0),),
    "r22": ((1, 1), (3, 3)),
    "r33": ((2, 2), (6, 6)),
    "r55": ((4, 4),),
    "r66": ((10, 10), (12, 12)),
    "r99": ((9, 9),),
    "r24": ((1, 3),),
    "r2_10": ((1, 9), (3, 9)),
    "r35": ((2, 4), (4, 6)),
    "r37": ((2, 6),),
    "r3_11": ((2, 10), (6, 12)),
    "r3_13": ((2, 12), (6, 10)),
    "r5_11": ((4, 10), (4, 12)),
    "r68": ((10, 12),),
}


def _flip_key(key: StateKey) -> StateKey:
    return (key[0], key[1], -key[2])


def _weight(weights: Weights, key: StateKey) -> float:
    from .spectrum import KEY_INDEX

    return float(weights[KEY_INDEX[key]])


def rho_elements(weights: Weights) -> dict[str, float]:
    """All 28 signed density-matrix element values for a given mixture."""
    out: dict[str, float] = {}
    for name, table in RHO_COEFFS.items():
        out[name + "-"] = sum(c * _weight(weights, k) for k, c in table)
        out[name + "+"] = sum(c * _weight(weights, _flip_key(k)) for k, c in table)
    return out


def omega_from_rho_elements(r: dict[str, float]) -> dict[str, float]:
    """Partial-trace sums taking full-state elements to (mu,S1) elements."""
    out: dict[str, float] = {}
    for s, o in (("-", "+"), ("+", "-")):
        out["w11" + s] = r["r11" + s] + r["r22" + s] + r["r33" + s]
        out["w22" + s] = r["r22" + s] + r["r55" + s] + r["r66" + o]
        out["w33" + s] = r["r33" + s] + r["r66" + o] + r["r99" + o]
        out["w24" + s] = r["r2_10" + s] + r["r5_11" + s] + r["r3_11" + o]
    return out


def mu_grid_from_rho_elements(r: dict[str, float]) -> dict[str, float]:
    """Partial-trace sums taking full-state elements to (S1,S2) elements."""
    out: dict[str, float] = {}
    for s in ("-", "+"):
        out["m11" + s] = r["r11" + s] + r["r99" + s]
        out["m22" + s] = r["r22" + s] + r["r66" + s]
        out["m24" + s] = r["r24" + s] + r["r68" + s]
    out["m33"] = r["r33-"] + r["r33+"]
    out["m55"] = r["r55-"] + r["r55+"]
    out["m35"] = r["r35-"] + r["r35+"]
    out["m37"] = r["r37-"] + r["r37+"]
    return out


def omega_elements(weights: Weights) -> dict[str, float]:
    """Elements of the (mu,S1) reduced matrix and its mu-transpose blocks."""
    return omega_from_rho_elements(rho_elements(weights))


def mu_grid_elements(weights: Weights) -> dict[str, float]:
    """Elements of the (S1,S2) reduced matrix and its S1-transpose blocks."""
    return mu_grid_from_rho_elements(rho_elements(weights))


def analytic_transposed_elements(
    params: CouplingParams, beta: float, which: str
) -> dict[str, float]:
    """Closed-form element map of a thermal state.

    which is one of "omega" (6x6 mu-transpose of the (mu,S1) reduction),
    "mu_grid" (9x9 S1-transpose of the (S1,S2) reduction), or "rho_full"
    (the 18x18 state itself).
    """
    w = thermal_weights(params, beta)
    if which == "omega":
        return omega_elements(w)
    if which == "mu_grid":
        return mu_grid_elements(w)
    if which == "rho_full":
        return rho_elements(w)
    raise ValueError(f"unknown element family {which!r}")


def rho_matrix_from_elements(elements: dict[str, float]) -> DensityMatrix:
    """Assemble the full 18x18 state from its 28 signed element values."""
    M = np.zeros((18, 18))
    for name, positions in RHO_POSITIONS.items():
        for (i, j) in positions:
            M[i, j] = M[j, i] = elements[name + "-"]
            M[17 - i, 17 - j] = M[17 - j, 17 - i] = elements[name + "+"]
    return DensityMatrix(dims=(2, 3, 3), entries=M)


# Where reduced-matrix elements sit inside the partial transposes; used to
# check the closed forms against numerically constructed matrices.
OMEGA_POSITIONS: dict[str, tuple[tuple[int, int], ...]] = {
    "w11-": ((0, 0),), "w22-": ((1, 1),), "w33-": ((2, 2),),
    "w33+": ((3, 3),), "w22+": ((4, 4),), "w11+": ((5, 5),),
    "w24-": ((0, 4),), "w24+": ((1, 5),),
}

MU_GRID_POSITIONS: dict[str, tuple[tuple[int, int], ...]] = {
    "m11-": ((0, 0),), "m22-": ((1, 1), (3, 3)), "m33": ((2, 2), (6, 6)),
    "m55": ((4, 4),), "m22+": ((5, 5), (7, 7)), "m11+": ((8, 8),),
    "m24-": ((0, 4),), "m24+": ((4, 8),), "m35": ((1, 5), (3, 7)),
    "m37": ((0, 8),),
}

# Expected block index sets of each partial transpose, fixed by the conserved
# combination of spin projections (checked against discovery in the tests).
OMEGA_BLOCKS = ((0, 4), (1, 5), (2,), (3,))
MU_GRID_BLOCKS = ((0, 4, 8), (1, 5), (2,), (3, 7), (6,))
TMU_FULL_BLOCKS = ((0, 10, 12), (1, 3, 11, 13, 15), (2, 4, 6, 14, 16),
                   (5, 7, 17), (8,), (9,))
TS1_FULL_BLOCKS = ((0, 4, 8, 12, 16), (1, 5, 9, 13, 17), (2, 10, 14),
                   (3, 7, 15), (6,), (11,))
