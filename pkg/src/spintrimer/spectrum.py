"""Exact spectrum of the mixed spin-(1,1/2,1) Heisenberg trimer.

The model couples two spin-1 moments S1, S2 to a central spin-1/2 moment mu:

    H = J (S1 + S2) . mu + J1 S1 . S2 - h (S1^z + S2^z + mu^z)

with isotropic exchange, h = g*muB*B the Zeeman energy, and all couplings in a
common energy unit. The 18-dimensional product basis is enumerated with mu
slowest and S2 fastest,

    flat = 9*m + 3*a + b,   m = 1/2 - mu in {0,1},  a = 1 - s1,  b = 1 - s2,

so flat 0 is |mu=+1/2, s1=+1, s2=+1> and flat 17 is |-1/2, -1, -1>. Total spin
S_t in {5/2, 3/2, 1/2} and S_t^z are good quantum numbers; the two S_t = 3/2
and the two S_t = 1/2 multiplets are distinguished by branch labels I and II.
All eigenvectors have fixed, parameter-independent real coefficients, which is
what makes every downstream quantity (density matrices, transposed blocks,
negativities) available in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

LN2 = math.log(2.0)

MU_VALUES = (0.5, -0.5)
SPIN1_VALUES = (1, 0, -1)


@dataclass(frozen=True)
class CouplingParams:
    """Exchange couplings and Zeeman energy, all in one energy unit."""

    J: float
    J1: float
    h: float

    def __post_init__(self) -> None:
        for name in ("J", "J1", "h"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class BasisIndex:
    """One product-basis state |mu, s1, s2| and its flat position."""

    mu: float
    s1: int
    s2: int
    flat: int

    @classmethod
    def from_quantum(cls, mu: float, s1: int, s2: int) -> "BasisIndex":
        m = int(round(0.5 - mu))
        a = 1 - s1
        b = 1 - s2
        return cls(mu=mu, s1=s1, s2=s2, flat=9 * m + 3 * a + b)

    @classmethod
    def from_flat(cls, flat: int) -> "BasisIndex":
        if not 0 <= flat < 18:
            raise ValueError(f"flat index out of range: {flat}")
        m, rest = divmod(flat, 9)
        a, b = divmod(rest, 3)
        return cls(mu=0.5 - m, s1=1 - a, s2=1 - b, flat=flat)


def flat_index(mu: float, s1: int, s2: int) -> int:
    return BasisIndex.from_quantum(mu, s1, s2).flat


# Eigenstate keys: (2*S_t, branch, 2*S_t^z), branch "" for the unique S_t=5/2
# multiplet. Enumeration order is fixed so degenerate manifolds list
# reproducibly.
StateKey = tuple[int, str, int]

STATE_KEYS: tuple[StateKey, ...] = (
    (5, "", 5), (5, "", 3), (5, "", 1), (5, "", -1), (5, "", -3), (5, "", -5),
    (3, "I", 3), (3, "I", 1), (3, "I", -1), (3, "I", -3),
    (3, "II", 3), (3, "II", 1), (3, "II", -1), (3, "II", -3),
    (1, "I", 1), (1, "I", -1),
    (1, "II", 1), (1, "II", -1),
)

KEY_INDEX: dict[StateKey, int] = {k: i for i, k in enumerate(STATE_KEYS)}

_R2 = math.sqrt(2.0)
_S = {n: 1.0 / math.sqrt(n) for n in (2, 3, 5, 6, 10, 15)}

# Fixed eigenvector amplitudes on flat basis positions. Signs are one global
# choice per state; only projectors |psi><psi| enter any physical quantity.
VECTOR_TABLE: dict[StateKey, tuple[tuple[int, float], ...]] = {
    (5, "", 5): ((0, 1.0),),
    (5, "", 3): ((1, _R2 * _S[5]), (3, _R2 * _S[5]), (9, _S[5])),
    (5, "", 1): ((2, _S[10]), (4, 2 * _S[10]), (6, _S[10]), (10, _S[5]), (12, _S[5])),
    (5, "", -1): ((15, _S[10]), (13, 2 * _S[10]), (11, _S[10]), (7, _S[5]), (5, _S[5])),
    (5, "", -3): ((16, _R2 * _S[5]), (14, _R2 * _S[5]), (8, _S[5])),
    (5, "", -5): ((17, 1.0),),
    (3, "I", 3): ((1, -_S[2]), (3, _S[2])),
    (3, "I", 1): ((2, -_S[3]), (6, _S[3]), (10, -_S[6]), (12, _S[6])),
    (3, "I", -1): ((15, _S[3]), (11, -_S[3]), (7, _S[6]), (5, -_S[6])),
    (3, "I", -3): ((16, _S[2]), (14, -_S[2])),
    (3, "II", 3): ((1, -_S[10]), (3, -_S[10]), (9, 2 * _R2 * _S[10])),
    (3, "II", 1): ((2, _S[15]), (4, 2 * _S[15]), (6, _S[15]),
                   (10, -math.sqrt(0.3)), (12, -math.sqrt(0.3))),
    (3, "II", -1): ((15, _S[15]), (13, 2 * _S[15]), (11, _S[15]),
                    (7, -math.sqrt(0.3)), (5, -math.sqrt(0.3))),
    (3, "II", -3): ((16, _S[10]), (14, _S[10]), (8, -2 * _R2 * _S[10])),
    (1, "I", 1): ((2, _S[3]), (4, -_S[3]), (6, _S[3])),
    (1, "I", -1): ((15, _S[3]), (13, -_S[3]), (11, _S[3])),
    (1, "II", 1): ((2, _S[6]), (6, -_S[6]), (10, -_S[3]), (12, _S[3])),
    (1, "II", -1): ((15, _S[6]), (11, -_S[6]), (7, -_S[3]), (5, _S[3])),
}


def state_energy(key: StateKey, params: CouplingParams) -> float:
    """Closed-form eigenenergy of one (2S_t, branch, 2S_t^z) multiplet member."""
    two_s, branch, two_sz = key
    J, J1, h = params.J, params.J1, params.h
    zeeman = -0.5 * two_sz * h
    if two_s == 5:
        return J + J1 + zeeman
    if two_s == 3:
        return (0.5 * J - J1 if branch == "I" else -1.5 * J + J1) + zeeman
    if two_s == 1:
        return (-2.0 * J1 if branch == "I" else -J - J1) + zeeman
    raise ValueError(f"unknown state key {key!r}")


def analytic_energies(params: CouplingParams) -> np.ndarray:
    """All 18 eigenenergies, aligned with STATE_KEYS."""
    return np.array([state_energy(k, params) for k in STATE_KEYS])


def state_vector(key: StateKey) -> np.ndarray:
    """Unit eigenvector of one state as an 18-component real array."""
    v = np.zeros(18)
    for flat, amp in VECTOR_TABLE[key]:
        v[flat] = amp
    return v


def state_label(key: StateKey) -> str:
    two_s, branch, two_sz = key
    sz = f"{'+' if two_sz > 0 else '-'}{abs(two_sz)}/2"
    return f"|{two_s}/2,{sz}>{branch}"


@dataclass
class SpectrumEntry:
    """One exact eigenpair: quantum numbers, energy, and the fixed eigenvector."""

    s_total: float
    sz_total: float
    branch: str
    energy: float
    amplitudes: np.ndarray = field(repr=False)

    @property
    def key(self) -> StateKey:
        return (int(round(2 * self.s_total)), self.branch, int(round(2 * self.sz_total)))

    @property
    def label(self) -> str:
        return state_label(self.key)


def analytic_spectrum(params: CouplingParams) -> list[SpectrumEntry]:
    """All 18 eigenpairs, sorted by energy, ties broken by quantum numbers."""
    entries = [
        SpectrumEntry(
            s_total=0.5 * k[0],
            sz_total=0.5 * k[2],
            branch=k[1],
            energy=state_energy(k, params),
            amplitudes=state_vector(k),
        )
        for k in STATE_KEYS
    ]
    entries.sort(key=lambda e: (e.energy, e.s_total, e.sz_total, e.branch))
    return entries


def spin_half_ops() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(Sz, S+, S-) for spin 1/2 in the (+1/2, -1/2) basis."""
    sz = np.diag([0.5, -0.5])
    sp = np.array([[0.0, 1.0], [0.0, 0.0]])
    return sz, sp, sp.T.copy()


def spin_one_ops() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(Sz, S+, S-) for spin 1 in the (+1, 0, -1) basis."""
    sz = np.diag([1.0, 0.0, -1.0])
    sp = np.zeros((3, 3))
    sp[0, 1] = sp[1, 2] = _R2
    return sz, sp, sp.T.copy()


def _embedded_ops() -> dict[str, np.ndarray]:
    """Each single-site operator lifted to the 18-dimensional product space."""
    i2, i3 = np.eye(2), np.eye(3)
    ops: dict[str, np.ndarray] = {}
    for name, triple, embed in (
        ("mu", spin_half_ops(), lambda m: np.kron(m, np.kron(i3, i3))),
        ("s1", spin_one_ops(), lambda m: np.kron(i2, np.kron(m, i3))),
        ("s2", spin_one_ops(), lambda m: np.kron(i2, np.kron(i3, m))),
    ):
        for suffix, m in zip("zpm", triple):
            ops[f"{name}_{suffix}"] = embed(m)
    return ops


def _dot(o: dict[str, np.ndarray], a: str, b: str) -> np.ndarray:
    """Isotropic A.B from ladder operators; keeps every entry real."""
    return o[f"{a}_z"] @ o[f"{b}_z"] + 0.5 * (
        o[f"{a}_p"] @ o[f"{b}_m"] + o[f"{a}_m"] @ o[f"{b}_p"]
    )


def build_hamiltonian(params: CouplingParams) -> np.ndarray:
    """The 18x18 trimer Hamiltonian in the flat product basis."""
    o = _embedded_ops()
    H = params.J * (_dot(o, "s1", "mu") + _dot(o, "s2", "mu"))
    H += params.J1 * _dot(o, "s1", "s2")
    H -= params.h * (o["mu_z"] + o["s1_z"] + o["s2_z"])
    return H


def _log_cosh(x: float) -> float:
    """log(cosh x), safe for large |x|."""
    ax = abs(x)
    return ax - LN2 + math.log1p(math.exp(-2.0 * ax))


def log_partition_function(params: CouplingParams, beta: float) -> float:
    """log Z from the closed form, grouped by Zeeman multiplets.

    Z = 2 e^{-bJ1} { cosh(5bh/2) e^{-bJ}
                     + cosh(3bh/2) [ 2 e^{bJ/4} cosh(5bJ/4) + e^{-b(J-4J1)/2} ]
                     + cosh(bh/2)  [ 2 e^{bJ/4} cosh(5bJ/4) + e^{3bJ1}
                                     + 2 e^{b(J+8J1)/4} cosh(3bJ/4) ] }

    evaluated entirely in log space so that large beta never overflows.
    """
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    bj = beta * params.J
    bj1 = beta * params.J1
    u = beta * params.h
    shared = LN2 + 0.25 * bj + _log_cosh(1.25 * bj)
    t1 = _log_cosh(2.5 * u) - bj
    t2 = _log_cosh(1.5 * u) + np.logaddexp(shared, -0.5 * (bj - 4.0 * bj1))
    t3 = _log_cosh(0.5 * u) + np.logaddexp(
        np.logaddexp(shared, 3.0 * bj1),
        LN2 + 0.25 * (bj + 8.0 * bj1) + _log_cosh(0.75 * bj),
    )
    return float(LN2 - bj1 + np.logaddexp(np.logaddexp(t1, t2), t3))


def partition_function(params: CouplingParams, beta: float) -> float:
    """Z = sum_i e^{-beta*e_i} over all 18 levels, from the closed form."""
    return math.exp(log_partition_function(params, beta))


def numeric_diagonalize(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dense symmetric eigensolve with a symmetry guard.

    Returns eigenvalues ascending and the orthonormal eigenvector columns.
    """
    M = np.asarray(matrix, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    norm = np.linalg.norm(M)
    if np.linalg.norm(M - M.T) > 1e-12 * max(1.0, norm):
        raise ValueError("matrix is not symmetric within tolerance")
    return np.linalg.eigh(M)
