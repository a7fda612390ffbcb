"""Nash bargaining resource allocation for wireless-powered relay networks."""

from wprn._core import (
    ConstraintViolation,
    DedicatorSet,
    EnumerationMode,
    FadingModel,
    FeasibilityReport,
    InnerResult,
    LabeledInnerResult,
    NetworkInstance,
    OracleResult,
    PhysicalParams,
    PowerMode,
    ScanReport,
    ScenarioConfig,
    SolveResult,
    SolverConfig,
    Strategy,
    TimeMode,
    TracePoint,
    UtilityReport,
    apply_dedicators,
    balance_gap,
    candidate_sets,
    check_feasible,
    compute_utilities,
    dbm_to_mw,
    endpoint_scan_energy_power,
    generate_scenario,
    grid_oracle,
    instance_from_json,
    instance_to_json,
    mean_path_gain,
    nash_product,
    pair_capacity,
    pair_utility,
    relay_utility,
    solve,
    solve_inner,
    unimodality_scan,
)

__all__ = [
    "ConstraintViolation",
    "DedicatorSet",
    "EnumerationMode",
    "FadingModel",
    "FeasibilityReport",
    "InnerResult",
    "LabeledInnerResult",
    "NetworkInstance",
    "OracleResult",
    "PhysicalParams",
    "PowerMode",
    "ScanReport",
    "ScenarioConfig",
    "SolveResult",
    "SolverConfig",
    "Strategy",
    "TimeMode",
    "TracePoint",
    "UtilityReport",
    "apply_dedicators",
    "balance_gap",
    "candidate_sets",
    "check_feasible",
    "compute_utilities",
    "dbm_to_mw",
    "endpoint_scan_energy_power",
    "generate_scenario",
    "grid_oracle",
    "instance_from_json",
    "instance_to_json",
    "mean_path_gain",
    "nash_product",
    "pair_capacity",
    "pair_utility",
    "relay_utility",
    "solve",
    "solve_inner",
    "unimodality_scan",
]

__version__ = "0.1.0"
