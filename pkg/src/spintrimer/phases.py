"""Ground-state phase identification and entanglement-type classification.

At zero temperature the trimer is in one of five pure phases or, on the
boundary lines between them (and on the h = 0 axis), in a uniform mixture
over a degenerate manifold. Every degenerate manifold that occurs carries a
fixed catalog name; its negativities are parameter-independent constants
because they are built from eigenvectors with fixed coefficients.

Entanglement types follow the residual-entanglement scheme that labels a
state by (number of entangled bipartitions of one spin against the rest,
number of entangled reduced pairs): 2-3 fully inseparable, 2-2 / 2-1 globally
entangled with one separable reduced pair, 1-1 only pairwise entangled, 0-0
no negativity anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .density import default_degeneracy_tol
from .negativity import NEG_TOL, NegativityReport, report_from_weights
from .spectrum import (
    KEY_INDEX,
    STATE_KEYS,
    CouplingParams,
    SpectrumEntry,
    StateKey,
    analytic_energies,
    analytic_spectrum,
)

CLASS_TOL = 1e-9

_PM3 = (3, 1, -1, -3)
_PM1 = (1, -1)

MANIFOLDS: dict[str, tuple[StateKey, ...]] = {
    "FI^I_5/2-3/2": ((5, "", 5), (3, "I", 3)),
    "FI^II_5/2-3/2": ((5, "", 5), (3, "II", 3)),
    "FI_3/2-3/2": ((3, "I", 3), (3, "II", 3)),
    "FI^I_3/2-1/2": ((3, "I", 3), (1, "I", 1)),
    "FI^II_3/2-1/2": ((3, "II", 3), (1, "II", 1)),
    "FI_1/2-1/2": ((1, "I", 1), (1, "II", 1)),
    "FI_1^1": ((3, "I", 3), (3, "II", 3), (1, "I", 1), (1, "II", 1)),
    "FI_1^2": ((5, "", 5), (3, "I", 3), (3, "II", 3)),
    "FI_0+^1": tuple((3, "II", sz) for sz in _PM3),
    "FI_0+^2": tuple((3, "II", sz) for sz in _PM3) + tuple((1, "II", sz) for sz in _PM1),
    "FI_0+^3": tuple((1, "II", sz) for sz in _PM1),
    "FI_0+^4": tuple((1, "I", sz) for sz in _PM1) + tuple((1, "II", sz) for sz in _PM1),
    "FI_0^5": tuple((1, "I", sz) for sz in _PM1),
    "FI_0-^1": tuple((5, "", sz) for sz in (5, 3, 1, -1, -3, -5)),
    "FI_0-^2": tuple((5, "", sz) for sz in (5, 3, 1, -1, -3, -5))
                + tuple((3, "I", sz) for sz in _PM3),
    "FI_0-^3": tuple((3, "I", sz) for sz in _PM3),
    "FI_0-^4": tuple((3, "I", sz) for sz in _PM3) + tuple((1, "I", sz) for sz in _PM1),
}

# Fixed presentation order for the manifold suite: field-driven boundary
# manifolds first (branch II, then I), then the branch-switch line, then the
# zero-field stacks for each sign of J1.
TABLE3_ORDER: tuple[str, ...] = (
    "FI^II_5/2-3/2", "FI^II_3/2-1/2", "FI^I_5/2-3/2", "FI^I_3/2-1/2",
    "FI_1^2", "FI_3/2-3/2", "FI_1^1", "FI_1/2-1/2",
    "FI_0+^4", "FI_0^5", "FI_0+^3", "FI_0+^2", "FI_0+^1",
    "FI_0-^4", "FI_0-^3", "FI_0-^2", "FI_0-^1",
)

# One parameter point on each manifold's boundary line / axis segment
# (FI_0^5 exists for both signs of J; both points are listed).
CANONICAL_POINTS: dict[str, tuple[CouplingParams, ...]] = {
    "FI^II_5/2-3/2": (CouplingParams(1.0, 0.5, 2.5),),
    "FI^II_3/2-1/2": (CouplingParams(1.0, 0.5, 0.5),),
    "FI^I_5/2-3/2": (CouplingParams(1.0, 1.5, 3.5),),
    "FI^I_3/2-1/2": (CouplingParams(1.0, 1.5, 2.0),),
    "FI_1^2": (CouplingParams(1.0, 1.0, 2.5),),
    "FI_3/2-3/2": (CouplingParams(1.0, 1.0, 2.0),),
    "FI_1^1": (CouplingParams(1.0, 1.0, 1.5),),
    "FI_1/2-1/2": (CouplingParams(1.0, 1.0, 0.75),),
    "FI_0+^4": (CouplingParams(1.0, 1.0, 0.0),),
    "FI_0^5": (CouplingParams(1.0, 2.0, 0.0), CouplingParams(-1.0, 1.0, 0.0)),
    "FI_0+^3": (CouplingParams(1.0, 0.5, 0.0),),
    "FI_0+^2": (CouplingParams(1.0, 0.25, 0.0),),
    "FI_0+^1": (CouplingParams(1.0, 0.1, 0.0),),
    "FI_0-^1": (CouplingParams(-1.0, 0.1, 0.0),),
    "FI_0-^2": (CouplingParams(-1.0, 0.25, 0.0),),
    "FI_0-^3": (CouplingParams(-1.0, 0.4, 0.0),),
    "FI_0-^4": (CouplingParams(-1.0, 0.5, 0.0),),
}

_MEMBERS_TO_NAME: dict[frozenset[StateKey], str] = {
    frozenset(v): k for k, v in MANIFOLDS.items()
}


@dataclass(frozen=True)
class EntanglementClass:
    """Residual-entanglement subtype label."""

    subtype: str


@dataclass
class GroundStateLabel:
    """The zero-temperature state: a pure phase or a named degenerate manifold."""

    kind: str
    name: str
    members: tuple[SpectrumEntry, ...] = field(repr=False)
    degeneracy: int
    energy: float

    @property
    def member_keys(self) -> tuple[StateKey, ...]:
        return tuple(e.key for e in self.members)


def ground_state(params: CouplingParams, degeneracy_tol: float | None = None) -> GroundStateLabel:
    """Identify the ground state, collecting everything degenerate with it."""
    if params.J == 0:
        raise ValueError("J = 0 leaves no trimer coupling; phase labels are undefined")
    tol = default_degeneracy_tol(params) if degeneracy_tol is None else degeneracy_tol
    energies = analytic_energies(params)
    e0 = float(energies.min())
    keys = frozenset(k for k, e in zip(STATE_KEYS, energies) if e <= e0 + tol)
    entries = tuple(e for e in analytic_spectrum(params) if e.key in keys)
    if len(keys) == 1:
        kind, name = "pure", entries[0].label
    elif keys in _MEMBERS_TO_NAME:
        kind, name = "manifold", _MEMBERS_TO_NAME[keys]
    else:
        kind, name = "manifold", "+".join(e.label for e in entries)
    return GroundStateLabel(kind=kind, name=name, members=entries,
                            degeneracy=len(entries), energy=e0)


def manifold_weights(name: str) -> np.ndarray:
    """Uniform mixture weights over a catalog manifold's members."""
    members = MANIFOLDS[name]
    w = np.zeros(len(STATE_KEYS))
    for key in members:
        w[KEY_INDEX[key]] = 1.0 / len(members)
    return w


def manifold_report(name: str, neg_tol: float = NEG_TOL) -> NegativityReport:
    """Negativities of the uniform mixture over a catalog manifold."""
    return report_from_weights(manifold_weights(name), neg_tol)


def classify(report: NegativityReport, tol: float = CLASS_TOL) -> EntanglementClass:
    """Residual-entanglement subtype of a zero-temperature report."""
    tri = report.n_tri > tol
    has_mu_s1 = report.n_mu_s1 > tol
    has_s1_s2 = report.n_s1_s2 > tol
    if tri and has_mu_s1 and has_s1_s2:
        return EntanglementClass("2-3")
    if tri and has_mu_s1:
        return EntanglementClass("2-2")
    if tri and has_s1_s2:
        return EntanglementClass("2-1")
    if not tri and (has_mu_s1 != has_s1_s2):
        return EntanglementClass("1-1")
    if not tri and not has_mu_s1 and not has_s1_s2:
        return EntanglementClass("0-0")
    raise ValueError(f"report pattern outside the observed scheme: {report}")


def table3_suite() -> list[tuple[str, NegativityReport, EntanglementClass]]:
    """Negativity report and class for every cataloged manifold.

    Rows are built directly from the printed member lists (uniform mixtures),
    which sidesteps the overlap of the three boundary lines that share a
    parameter point; CANONICAL_POINTS locates each manifold in the phase
    diagram where a unique point exists.
    """
    out = []
    for name in TABLE3_ORDER:
        rep = manifold_report(name)
        out.append((name, rep, classify(rep)))
    return out


def boundary_lines(J: float, J1: float) -> dict[str, float]:
    """Critical fields (same units as J) of the zero-temperature transitions.

    For J > 0 the relevant pair of lines depends on whether J1 exceeds |J|
    (branch I phases) or not (branch II); the I-II switch itself sits at
    J1 = |J|, returned under "branch_switch" as a J1 value. For J < 0 only
    branch I phases occur. Lines are reported even where the corresponding
    phase window is empty (callers decide applicability).
    """
    if J == 0:
        raise ValueError("J = 0 has no phase boundaries")
    aJ = abs(J)
    if J > 0:
        if J1 >= aJ:
            return {"half_to_three_half": J1 + aJ / 2,
                    "three_half_to_saturated": 2 * J1 + aJ / 2,
                    "branch_switch": aJ}
        return {"half_to_three_half": 2 * J1 - aJ / 2,
                "three_half_to_saturated": 2.5 * aJ,
                "branch_switch": aJ}
    return {"half_to_three_half": J1 - aJ / 2,
            "three_half_to_saturated": 2 * J1 - aJ / 2}
