"""Brute-force numeric reference implementations for the test suite.

Everything here is built from first principles — explicit spin matrices,
dense Kronecker products, numpy eigensolvers, and index-loop partial
transposes — deliberately sharing no code with the package, so agreement
between the two is meaningful evidence of correctness.

Site order matches the package convention: factors are (mu, S1, S2) with the
spin-1/2 slowest, flat index 9*m + 3*a + b.
"""

from __future__ import annotations

import numpy as np

SQ2 = np.sqrt(2.0)

# Spin matrices written out explicitly (z-basis, m decreasing down the diagonal)
MU_Z = np.array([[0.5, 0.0], [0.0, -0.5]])
MU_X = np.array([[0.0, 0.5], [0.5, 0.0]])
MU_Y = np.array([[0.0, -0.5j], [0.5j, 0.0]])
S_Z = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
S_X = np.array([[0.0, SQ2 / 2, 0.0], [SQ2 / 2, 0.0, SQ2 / 2], [0.0, SQ2 / 2, 0.0]])
S_Y = np.array([[0.0, -1j * SQ2 / 2, 0.0],
                [1j * SQ2 / 2, 0.0, -1j * SQ2 / 2],
                [0.0, 1j * SQ2 / 2, 0.0]])

I2 = np.eye(2)
I3 = np.eye(3)


def embed(op_mu: np.ndarray, op_s1: np.ndarray, op_s2: np.ndarray) -> np.ndarray:
    return np.kron(op_mu, np.kron(op_s1, op_s2))


def hamiltonian(J: float, J1: float, h: float) -> np.ndarray:
    """H = J (S1 + S2) . mu + J1 S1 . S2 - h (S1z + S2z + mu_z), dense 18x18."""
    H = np.zeros((18, 18), dtype=complex)
    for a, b in ((MU_X, S_X), (MU_Y, S_Y), (MU_Z, S_Z)):
        H += J * (embed(a, b, I3) + embed(a, I3, b))
    for a in (S_X, S_Y, S_Z):
        H += J1 * embed(I2, a, a)
    H -= h * (embed(MU_Z, I3, I3) + embed(I2, S_Z, I3) + embed(I2, I3, S_Z))
    assert np.abs(H.imag).max() < 1e-14
    return H.real.copy()


def thermal_rho(J: float, J1: float, h: float, beta: float) -> np.ndarray:
    """exp(-beta H)/Z by dense diagonalization, computed with a spectral shift."""
    evals, evecs = np.linalg.eigh(hamiltonian(J, J1, h))
    w = np.exp(-beta * (evals - evals.min()))
    w /= w.sum()
    return (evecs * w) @ evecs.T


def ground_rho(J: float, J1: float, h: float, tol: float = 1e-9) -> np.ndarray:
    """Equal-weight mixture over the degenerate lowest-energy eigenspace."""
    evals, evecs = np.linalg.eigh(hamiltonian(J, J1, h))
    members = evals <= evals.min() + tol
    V = evecs[:, members]
    return (V @ V.T) / V.shape[1]


def partition_sum(J: float, J1: float, h: float, beta: float) -> float:
    """Shifted 18-term Boltzmann sum: sum of exp(-beta (E_k - E_min))."""
    evals = np.linalg.eigvalsh(hamiltonian(J, J1, h))
    return float(np.exp(-beta * (evals - evals.min())).sum())


def _as6(rho18: np.ndarray) -> np.ndarray:
    return rho18.reshape(2, 3, 3, 2, 3, 3)


def reduce_mu_s1(rho18: np.ndarray) -> np.ndarray:
    """Trace out S2 -> 6x6 on (mu, S1), loops only."""
    R = _as6(rho18)
    out = np.zeros((2, 3, 2, 3))
    for m in range(2):
        for a in range(3):
            for n in range(2):
                for c in range(3):
                    out[m, a, n, c] = sum(R[m, a, b, n, c, b] for b in range(3))
    return out.reshape(6, 6)


def reduce_s1_s2(rho18: np.ndarray) -> np.ndarray:
    """Trace out mu -> 9x9 on (S1, S2), loops only."""
    R = _as6(rho18)
    out = np.zeros((3, 3, 3, 3))
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    out[a, b, c, d] = sum(R[m, a, b, m, c, d] for m in range(2))
    return out.reshape(9, 9)


def reduce_mu_s2(rho18: np.ndarray) -> np.ndarray:
    """Trace out S1 -> 6x6 on (mu, S2), loops only."""
    R = _as6(rho18)
    out = np.zeros((2, 3, 2, 3))
    for m in range(2):
        for b in range(3):
            for n in range(2):
                for d in range(3):
                    out[m, b, n, d] = sum(R[m, a, b, n, a, d] for a in range(3))
    return out.reshape(6, 6)


def pt_first_of_two(rho: np.ndarray, d1: int, d2: int) -> np.ndarray:
    """Partial transpose on the first factor of a (d1 x d2) bipartite state."""
    R = rho.reshape(d1, d2, d1, d2)
    out = np.zeros_like(R)
    for i in range(d1):
        for j in range(d2):
            for k in range(d1):
                for l in range(d2):
                    out[i, j, k, l] = R[k, j, i, l]
    return out.reshape(d1 * d2, d1 * d2)


def pt_mu_full(rho18: np.ndarray) -> np.ndarray:
    """Transpose the mu indices of the full state."""
    return pt_first_of_two(rho18, 2, 9)


def pt_s1_full(rho18: np.ndarray) -> np.ndarray:
    """Transpose the S1 indices of the full state."""
    R = _as6(rho18)
    out = np.zeros_like(R)
    for m in range(2):
        for a in range(3):
            for b in range(3):
                for n in range(2):
                    for c in range(3):
                        for d in range(3):
                            out[m, a, b, n, c, d] = R[m, c, b, n, a, d]
    return out.reshape(18, 18)


def negativity(matrix: np.ndarray, neg_tol: float = 1e-12) -> float:
    lam = np.linalg.eigvalsh(matrix)
    return float(abs(lam[lam < -neg_tol].sum()))


def report(J: float, J1: float, h: float, beta: float | None = None,
           ground: bool = False, neg_tol: float = 1e-12) -> dict[str, float]:
    """All five negativities of the thermal (or exact ground) state."""
    rho = ground_rho(J, J1, h) if ground else thermal_rho(J, J1, h, beta)
    n_mu_s1 = negativity(pt_first_of_two(reduce_mu_s1(rho), 2, 3), neg_tol)
    n_s1_s2 = negativity(pt_first_of_two(reduce_s1_s2(rho), 3, 3), neg_tol)
    n_mu_full = negativity(pt_mu_full(rho), neg_tol)
    n_s1_full = negativity(pt_s1_full(rho), neg_tol)
    if n_mu_full <= neg_tol or n_s1_full <= neg_tol:
        n_tri = 0.0
    else:
        n_tri = float(np.exp((np.log(n_mu_full) + 2.0 * np.log(n_s1_full)) / 3.0))
    return {"n_mu_s1": n_mu_s1, "n_s1_s2": n_s1_s2, "n_mu_full": n_mu_full,
            "n_s1_full": n_s1_full, "n_tri": n_tri}


def random_params(rng: np.random.Generator) -> tuple[float, float, float, float]:
    """One acceptance-style random sample: (J, J1, h, beta) with |J| = 1."""
    J = 1.0 if rng.random() < 0.5 else -1.0
    J1 = float(rng.uniform(-2.0, 4.0))
    h = float(rng.uniform(0.0, 3.0))
    beta = float(rng.uniform(0.0, 50.0))
    return J, J1, h, beta
