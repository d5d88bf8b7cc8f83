"""Exact entanglement negativities of the mixed spin-(1,1/2,1) Heisenberg trimer.

A central spin-1/2 coupled symmetrically (J) to two spin-1 sites that are
also coupled to each other (J1), in a field h. Everything is closed-form:
the 18 energy levels, the thermal and ground-state density matrices, their
partial transposes, all bipartite negativities, the global tripartite
negativity, the zero-temperature phase catalog, and the reconstruction of
the full state from nine local expectation values.
"""

from .spectrum import (
    BasisIndex,
    CouplingParams,
    SpectrumEntry,
    StateKey,
    STATE_KEYS,
    analytic_energies,
    analytic_spectrum,
    build_hamiltonian,
    log_partition_function,
    numeric_diagonalize,
    partition_function,
    state_energy,
    state_label,
    state_vector,
)
from .density import (
    DensityMatrix,
    TransposedMatrix,
    ground_state_density_matrix,
    ground_weights,
    mu_grid_elements,
    omega_elements,
    partial_transpose,
    reduce,
    rho_elements,
    rho_matrix_from_elements,
    thermal_density_matrix,
    thermal_weights,
)
from .negativity import (
    NEG_TOL,
    NegativityReport,
    full_report,
    negativity_of,
    report_from_elements,
    report_from_weights,
    tripartite_negativity,
)
from .phases import (
    CLASS_TOL,
    EntanglementClass,
    GroundStateLabel,
    MANIFOLDS,
    TABLE3_ORDER,
    boundary_lines,
    classify,
    ground_state,
    manifold_report,
    table3_suite,
)
from .reconstruct import (
    OBSERVABLE_NAMES,
    ObservableSet,
    negativity_from_observables,
    observables_from_rho,
    reconstruction_residuals,
    rho_from_observables,
)
from .sweep import (
    K_B_CM1_PER_K,
    MU_B_CM1_PER_T,
    MaxResult,
    RealUnits,
    SweepSpec,
    SweepTable,
    ThresholdResult,
    max_negativity_over,
    nickel_copper,
    report_at,
    run_sweep,
    threshold_field,
    threshold_temperature,
    write_csv,
    write_json,
)
from .cli import cli_main

__version__ = "1.0.0"

__all__ = [
    "BasisIndex", "CouplingParams", "SpectrumEntry", "StateKey", "STATE_KEYS",
    "analytic_energies", "analytic_spectrum", "build_hamiltonian",
    "log_partition_function", "numeric_diagonalize", "partition_function",
    "state_energy", "state_label", "state_vector",
    "DensityMatrix", "TransposedMatrix", "ground_state_density_matrix",
    "ground_weights", "mu_grid_elements", "omega_elements",
    "partial_transpose", "reduce", "rho_elements", "rho_matrix_from_elements",
    "thermal_density_matrix", "thermal_weights",
    "NEG_TOL", "NegativityReport", "full_report", "negativity_of",
    "report_from_elements", "report_from_weights", "tripartite_negativity",
    "CLASS_TOL", "EntanglementClass", "GroundStateLabel", "MANIFOLDS",
    "TABLE3_ORDER", "boundary_lines", "classify", "ground_state",
    "manifold_report", "table3_suite",
    "OBSERVABLE_NAMES", "ObservableSet", "negativity_from_observables",
    "observables_from_rho", "reconstruction_residuals", "rho_from_observables",
    "K_B_CM1_PER_K", "MU_B_CM1_PER_T", "MaxResult", "RealUnits", "SweepSpec",
    "SweepTable", "ThresholdResult", "max_negativity_over", "nickel_copper",
    "report_at", "run_sweep", "threshold_field", "threshold_temperature",
    "write_csv", "write_json",
    "cli_main",
]
