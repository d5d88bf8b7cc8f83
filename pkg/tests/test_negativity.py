"""Closed-form negativities against dense eigensolvers and brute force."""

import numpy as np
import pytest

import oracles
from spintrimer.density import (
    ground_weights,
    partial_transpose,
    reduce,
    rho_elements,
    thermal_density_matrix,
    thermal_weights,
)
from spintrimer.negativity import (
    NEG_TOL,
    NegativityReport,
    analytic_eigs_full_mu,
    analytic_eigs_mu_s1,
    analytic_eigs_s1_s2,
    eigs_full_s1,
    full_mu_labeled,
    full_report,
    mu_s1_labeled,
    negativity_of,
    report_from_elements,
    report_from_weights,
    tripartite_negativity,
)
from spintrimer.spectrum import CouplingParams
from spintrimer.density import mu_grid_elements, omega_elements

from test_spectrum import random_params


def _sample(rng):
    p = random_params(rng)
    beta = float(rng.uniform(0.0, 50.0) / abs(p.J))
    return p, beta


def test_closed_form_eigenvalue_families_match_dense_solver():
    rng = np.random.default_rng(31)
    for _ in range(60):
        p, beta = _sample(rng)
        w = thermal_weights(p, beta)
        rho = thermal_density_matrix(p, beta)

        got = np.sort(analytic_eigs_mu_s1(omega_elements(w)))
        want = np.sort(np.linalg.eigvalsh(
            partial_transpose(reduce(rho, "muS1"), "mu").entries))
        assert np.abs(got - want).max() < 1e-10

        got = np.sort(analytic_eigs_s1_s2(mu_grid_elements(w)))
        want = np.sort(np.linalg.eigvalsh(
            partial_transpose(reduce(rho, "S1S2"), "S1").entries))
        assert np.abs(got - want).max() < 1e-10

        got = np.sort(analytic_eigs_full_mu(rho_elements(w)))
        want = np.sort(np.linalg.eigvalsh(partial_transpose(rho, "mu").entries))
        assert np.abs(got - want).max() < 1e-10

        t_s1 = partial_transpose(rho, "S1")
        got = np.sort(eigs_full_s1(t_s1))
        want = np.sort(np.linalg.eigvalsh(t_s1.entries))
        assert np.abs(got - want).max() < 1e-10


def test_only_the_flagged_labels_go_negative():
    rng = np.random.default_rng(32)
    never_negative = []
    for _ in range(200):
        p, beta = _sample(rng)
        w = thermal_weights(p, beta)
        omega = mu_s1_labeled(omega_elements(w))
        never_negative.extend(omega["l" + str(i) + s]
                              for i in (1, 3) for s in ("-", "+"))
        full = full_mu_labeled(rho_elements(w))
        never_negative.extend(full["l" + str(i) + s]
                              for i in (1, 2, 4, 6, 7, 9) for s in ("-", "+"))
    assert min(never_negative) >= -1e-13


def test_negativity_of_matches_brute_force():
    rng = np.random.default_rng(33)
    for _ in range(10):
        p, beta = _sample(rng)
        rho = thermal_density_matrix(p, beta)
        for part in ("mu", "S1"):
            t = partial_transpose(rho, part)
            assert negativity_of(t) == pytest.approx(
                oracles.negativity(t.entries), abs=1e-12)


def test_full_report_matches_oracle():
    rng = np.random.default_rng(34)
    for _ in range(40):
        p, beta = _sample(rng)
        got = full_report(p, beta=beta)
        want = oracles.report(p.J, p.J1, p.h, beta=beta)
        for k, v in want.items():
            assert getattr(got, k) == pytest.approx(v, abs=2e-11)


def test_ground_report_matches_oracle():
    for (J, J1, h) in [(1, 1.5, 0.8), (-1, 1, 1), (1, 0.5, 0.5), (1, 1, 0),
                       (1, 0.25, 0), (-1, 0.25, 0), (1, 2, 6)]:
        got = full_report(CouplingParams(J, J1, h), ground=True)
        want = oracles.report(J, J1, h, ground=True)
        for k, v in want.items():
            assert getattr(got, k) == pytest.approx(v, abs=1e-12)


def test_ground_and_beta_are_mutually_exclusive():
    p = CouplingParams(1.0, 0.5, 0.5)
    with pytest.raises(ValueError):
        full_report(p)
    with pytest.raises(ValueError):
        full_report(p, beta=1.0, ground=True)


def test_pure_state_constants():
    # |1/2,+1/2>I region: maximally entangled spin-1 pair, decoupled spin-1/2
    rep = full_report(CouplingParams(1.0, 1.5, 0.8), ground=True)
    assert rep.n_s1_s2 == pytest.approx(1.0, abs=1e-9)
    assert rep.n_mu_full == pytest.approx(0.0, abs=1e-9)
    assert rep.n_mu_s1 == pytest.approx(0.0, abs=1e-9)
    assert rep.n_tri == 0.0
    # |3/2,+3/2>I region: pair entanglement reduced to one half
    rep = full_report(CouplingParams(-1.0, 1.0, 1.0), ground=True)
    assert rep.n_s1_s2 == pytest.approx(0.5, abs=1e-9)
    assert rep.n_mu_full == pytest.approx(0.0, abs=1e-9)
    assert rep.n_tri == 0.0


def test_infinite_temperature_state_is_separable():
    rep = full_report(CouplingParams(1.0, 1.5, 0.8), beta=0.0)
    assert rep.astuple() == (0.0, 0.0, 0.0, 0.0, 0.0)


def test_tripartite_negativity_is_a_gated_geometric_mean():
    assert tripartite_negativity(0.0, 0.5) == 0.0
    assert tripartite_negativity(0.5, 0.0) == 0.0
    assert tripartite_negativity(NEG_TOL / 2, 0.5) == 0.0
    assert tripartite_negativity(0.2, 0.4) == pytest.approx(
        (0.2 * 0.4 * 0.4) ** (1.0 / 3.0), rel=1e-14)


def test_report_fields_are_never_negative_and_never_minus_zero():
    rng = np.random.default_rng(35)
    for _ in range(40):
        p, beta = _sample(rng)
        rep = full_report(p, beta=beta)
        for v in rep.astuple():
            assert v >= 0.0
            assert not (v == 0.0 and np.signbit(v))


def test_element_and_weight_report_paths_agree():
    rng = np.random.default_rng(36)
    for _ in range(10):
        p, beta = _sample(rng)
        w = thermal_weights(p, beta)
        assert report_from_elements(rho_elements(w)) == report_from_weights(w)
    w = ground_weights(CouplingParams(1.0, 0.5, 0.5))
    assert report_from_elements(rho_elements(w)) == report_from_weights(w)


def test_field_reversal_leaves_all_negativities_unchanged():
    rng = np.random.default_rng(37)
    for _ in range(25):
        p, beta = _sample(rng)
        plus = full_report(p, beta=beta)
        minus = full_report(CouplingParams(p.J, p.J1, -p.h), beta=beta)
        for a, b in zip(plus.astuple(), minus.astuple()):
            assert a == pytest.approx(b, abs=1e-12)


def test_mu_pair_negativities_agree_for_both_peripheral_spins():
    rng = np.random.default_rng(38)
    for _ in range(15):
        p, beta = _sample(rng)
        rho = thermal_density_matrix(p, beta)
        n1 = negativity_of(partial_transpose(reduce(rho, "muS1"), "mu"))
        n2 = negativity_of(partial_transpose(reduce(rho, "muS2"), "mu"))
        assert n1 == pytest.approx(n2, abs=1e-12)


def test_cubic_fallback_handles_degenerate_blocks():
    # h = 0 makes the central 3x3 of the pair transpose field-symmetric and
    # nearly degenerate at strong coupling; closed form must still match.
    for beta in (0.0, 0.5, 5.0, 50.0):
        for (J, J1) in [(1.0, 1.0), (1.0, 0.0), (-1.0, 2.0), (1.0, 4.0)]:
            p = CouplingParams(J, J1, 0.0)
            w = thermal_weights(p, beta)
            rho = thermal_density_matrix(p, beta)
            got = np.sort(analytic_eigs_s1_s2(mu_grid_elements(w)))
            want = np.sort(np.linalg.eigvalsh(
                partial_transpose(reduce(rho, "S1S2"), "S1").entries))
            assert np.abs(got - want).max() < 1e-10


def test_eigs_full_s1_requires_the_right_transpose():
    p = CouplingParams(1.0, 0.5, 0.5)
    rho = thermal_density_matrix(p, 1.0)
    with pytest.raises(ValueError):
        eigs_full_s1(partial_transpose(rho, "mu"))


def test_report_is_an_immutable_record():
    rep = NegativityReport(0.1, 0.2, 0.3, 0.4, 0.25)
    assert rep.astuple() == (0.1, 0.2, 0.3, 0.4, 0.25)
    with pytest.raises(Exception):
        rep.n_tri = 1.0
