"""Ground-state catalog, golden table of manifold negativities, classes."""

import numpy as np
import pytest

from spintrimer.negativity import NegativityReport
from spintrimer.phases import (
    CANONICAL_POINTS,
    CLASS_TOL,
    MANIFOLDS,
    TABLE3_ORDER,
    boundary_lines,
    classify,
    ground_state,
    manifold_report,
    table3_suite,
)
from spintrimer.spectrum import STATE_KEYS, CouplingParams, analytic_energies

# Golden values for every degenerate ground-state manifold, as printed to
# three decimals, field order (n_s1_s2, n_mu_s1, n_s1_full, n_mu_full, n_tri)
# plus the inseparability class.
GOLDEN_MANIFOLDS = {
    "FI^II_5/2-3/2": (0.003, 0.034, 0.042, 0.070, 0.049, "2-3"),
    "FI^II_3/2-1/2": (0.046, 0.095, 0.388, 0.436, 0.403, "2-3"),
    "FI^I_5/2-3/2": (0.104, 0.0, 0.104, 0.0, 0.0, "1-1"),
    "FI^I_3/2-1/2": (0.423, 0.0, 0.423, 0.0, 0.0, "1-1"),
    "FI_1^2": (0.028, 0.016, 0.067, 0.047, 0.059, "2-3"),
    "FI_3/2-3/2": (0.083, 0.056, 0.245, 0.200, 0.229, "2-3"),
    "FI_1^1": (0.115, 0.014, 0.244, 0.147, 0.206, "2-3"),
    "FI_1/2-1/2": (0.346, 0.061, 0.702, 0.236, 0.488, "2-3"),
    "FI_0+^4": (0.25, 0.0, 0.5, 0.167, 0.347, "2-1"),
    "FI_0^5": (1.0, 0.0, 1.0, 0.0, 0.0, "1-1"),
    "FI_0+^3": (0.333, 0.0, 0.839, 0.333, 0.617, "2-1"),
    "FI_0+^2": (0.0, 0.111, 0.184, 0.245, 0.202, "2-2"),
    "FI_0+^1": (0.0, 0.166, 0.174, 0.200, 0.182, "2-2"),
    "FI_0-^4": (0.111, 0.0, 0.263, 0.0, 0.0, "1-1"),
    "FI_0-^3": (0.333, 0.0, 0.399, 0.0, 0.0, "1-1"),
    "FI_0-^2": (0.0, 0.0, 0.0, 0.0, 0.0, "0-0"),
    "FI_0-^1": (0.0, 0.0, 0.0, 0.0, 0.0, "0-0"),
}


def test_manifold_suite_matches_golden_table():
    seen = set()
    for name, rep, cls in table3_suite():
        want = GOLDEN_MANIFOLDS[name]
        got = (rep.n_s1_s2, rep.n_mu_s1, rep.n_s1_full, rep.n_mu_full, rep.n_tri)
        for x, w in zip(got, want[:5]):
            assert abs(x - w) <= 0.001, (name, got, want)
        assert cls.subtype == want[5], (name, cls.subtype, want[5])
        seen.add(name)
    assert seen == set(TABLE3_ORDER) == set(GOLDEN_MANIFOLDS)


def test_canonical_points_resolve_to_their_manifolds():
    for name, points in CANONICAL_POINTS.items():
        for p in points:
            label = ground_state(p)
            assert label.kind == "manifold"
            assert label.name == name
            assert label.degeneracy == len(MANIFOLDS[name])


def test_pure_phase_spot_checks():
    for (J, J1, h), want in [
        ((1, 2, 0.5), "|1/2,+1/2>I"),
        ((1, 0.5, 1.5), "|3/2,+3/2>II"),
        ((1, 0.5, 3.0), "|5/2,+5/2>"),
        ((1, 2, 6.0), "|5/2,+5/2>"),
        ((-1, 2, 1.0), "|1/2,+1/2>I"),
        ((-1, 2, 2.0), "|3/2,+3/2>I"),
    ]:
        label = ground_state(CouplingParams(float(J), float(J1), float(h)))
        assert label.kind == "pure"
        assert label.name == want
        assert label.degeneracy == 1


def test_ground_state_agrees_with_direct_minimization():
    rng = np.random.default_rng(41)
    for _ in range(2000):
        J = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.2, 3.0))
        p = CouplingParams(J=J, J1=float(rng.uniform(-2, 4) * abs(J)),
                           h=float(rng.uniform(0, 3) * abs(J)))
        e = analytic_energies(p)
        label = ground_state(p)
        assert abs(label.energy - e.min()) < 1e-13
        tol = 1e-9 * max(1.0, abs(p.J), abs(p.J1), abs(p.h))
        direct = {k for k, ei in zip(STATE_KEYS, e) if ei <= e.min() + tol}
        assert set(label.member_keys) == direct


def test_boundary_lines_are_exact_degeneracies():
    for J, J1 in [(1.0, 2.0), (1.0, 0.5), (-1.0, 2.0), (-1.0, 0.4)]:
        for key, hc in boundary_lines(J, J1).items():
            if key == "branch_switch" or hc <= 0:
                # the branch switch is a degeneracy in J1, not a field boundary
                continue
            below = ground_state(CouplingParams(J, J1, hc - 1e-6))
            on = ground_state(CouplingParams(J, J1, hc))
            above = ground_state(CouplingParams(J, J1, hc + 1e-6))
            assert below.name != above.name, (J, J1, key)
            assert on.kind == "manifold"
            assert on.degeneracy >= 2


def test_classification_covers_all_subtypes():
    assert classify(manifold_report("FI^II_3/2-1/2")).subtype == "2-3"
    assert classify(manifold_report("FI_0+^3")).subtype == "2-1"
    assert classify(manifold_report("FI_0+^2")).subtype == "2-2"
    assert classify(manifold_report("FI_0^5")).subtype == "1-1"
    assert classify(manifold_report("FI_0-^1")).subtype == "0-0"


def test_classification_is_stable_under_sub_tolerance_noise():
    rep = manifold_report("FI_0+^2")
    eps = CLASS_TOL / 10
    bumped = NegativityReport(rep.n_mu_s1 + eps, rep.n_s1_s2 + eps,
                              rep.n_mu_full, rep.n_s1_full, rep.n_tri + eps)
    assert classify(bumped) == classify(rep)


def test_manifold_report_is_deterministic():
    assert manifold_report("FI^II_5/2-3/2") == manifold_report("FI^II_5/2-3/2")
    with pytest.raises(KeyError):
        manifold_report("FI_nonsense")


def test_zero_exchange_is_rejected():
    with pytest.raises(ValueError):
        ground_state(CouplingParams(0.0, 1.0, 0.0))
