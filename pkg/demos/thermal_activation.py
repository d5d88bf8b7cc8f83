"""Entanglement born from heat: tripartite negativity with a dead ground state.

Deep in the composite-singlet phase the three spins carry no tripartite
entanglement at all at T = 0 — the central spin factors out of the ground
state. Warming the system mixes in the branch-II quadruplet, which is
genuinely three-party entangled, so the tripartite negativity switches ON
with temperature, peaks, and then melts away. The switch-on point is
universal: the responsible eigenvalue of the partially transposed state
crosses zero at beta J = (2/3) ln 4 regardless of the peripheral coupling.

Run:  python3 demos/thermal_activation.py
"""

import math

import numpy as np

from spintrimer import (
    CouplingParams,
    SweepSpec,
    max_negativity_over,
    report_at,
    rho_elements,
    run_sweep,
    thermal_weights,
    threshold_temperature,
)
from spintrimer.negativity import full_mu_labeled

p = CouplingParams(J=1.0, J1=1.5, h=0.8)

# ---------------------------------------------------------------------------
# 1. the ground state is tripartite-separable, the thermal state is not
# ---------------------------------------------------------------------------
print(f"couplings: J = {p.J}, J1 = {p.J1}, h = {p.h}")
print()
print(f"{'T':>6} {'n_s1_s2':>9} {'n_mu_full':>10} {'n_s1_full':>10} {'n_tri':>9}")
for T in (0.0, 0.1, 0.2, 0.3, 0.5, 0.8, 1.2, 2.0, 4.0):
    rep = report_at(p, T)
    print(f"{T:6.2f} {rep.n_s1_s2:9.5f} {rep.n_mu_full:10.5f} "
          f"{rep.n_s1_full:10.5f} {rep.n_tri:9.5f}")

peak = max_negativity_over(p, ("T",))
print()
print(f"peak tripartite negativity: {peak.value:.6f} at T = "
      f"{peak.location['T']:.4f}  (exactly 0 at T = 0)")

# ---------------------------------------------------------------------------
# 2. a crude thermometer: where does n_tri fall back through 0.2? 0?
# ---------------------------------------------------------------------------
for target in (0.2, 0.0):
    thr = threshold_temperature(p, target)
    label = "vanishes" if target == 0.0 else f"drops through {target}"
    print(f"n_tri {label} at T = {thr.value:.5f}")

# ---------------------------------------------------------------------------
# 3. the universal switch-on: l5- crosses zero at beta J = (2/3) ln 4
# ---------------------------------------------------------------------------
target_beta = (2.0 / 3.0) * math.log(4.0)
print()
print(f"universal activation point (2/3) ln 4 = {target_beta:.6f}")
for J1 in (1.5, 2.0, 3.0):
    q = CouplingParams(1.0, J1, 0.8)

    def l5(beta):
        return full_mu_labeled(rho_elements(thermal_weights(q, beta)))["l5-"]

    lo, hi = 0.5, 1.5
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if l5(mid) > 0 else (lo, mid)
    print(f"  J1 = {J1}: l5- crosses zero at beta J = {0.5 * (lo + hi):.9f}")

# ---------------------------------------------------------------------------
# 4. the ferromagnetic counterpart never activates
# ---------------------------------------------------------------------------
table = run_sweep(SweepSpec(mode="t_scan", J=-1.0, J1=1.5, h=0.8,
                            axis1=(0.0, 5.0, 101), quantities=("n_tri",)))
biggest = max(row[1] for row in table.rows)
print()
print(f"same scan with J = -1: max n_tri over 101 temperatures = {biggest}")
print("ferromagnetic central coupling produces no thermal activation at all.")
