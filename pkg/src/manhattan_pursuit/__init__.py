"""Pursuit-evasion engine for axis-aligned pursuit of +Y-drifting evaders.

A unit-speed pursuer intercepts n evaders in a fixed order by moving parallel
to the X axis until aligned, then parallel to Y until contact.  Each evader
drifts in the +Y direction at a constant speed chosen from [u_min, u_max].
The package provides exact intercept-time computation, the two-pass
cooperative speed-assignment algorithm, exhaustive and sampling search
baselines, closed-form capture-time ceilings for large populations, and a
deterministic Monte Carlo experiment harness.
"""
from .model import (
    ABOVE,
    ABOVE_RECT,
    BELOW,
    COOPERATIVE,
    EPS,
    GREEDY,
    IN_RECT,
    ChainState,
    InterceptRecord,
    Point2,
    PursuitTrace,
    Rectangle,
    Scenario,
    SpeedAssignment,
    SpeedBounds,
    generate_random_scenario,
    require_valid_scenario,
    scenario_from_dict,
    scenario_to_dict,
    validate_scenario,
)
from .intercept import (
    euclidean_intercept_time,
    intercept_time_first,
    intercept_time_next,
    step_simulate,
    total_intercept_time,
)
from .strategy import (
    CASE1,
    CASE2,
    CASE_NONE,
    CooperationCase,
    PassEvent,
    StrategyResult,
    cooperation_case,
    cooperative_speed,
    greedy_assignment,
    greedy_speed_k,
    optimal_single,
    seq_grec,
)
from .search import (
    BRUTE_FORCE_LIMIT,
    GRID_BUDGET,
    METHOD_EXTREMES,
    METHOD_GRID,
    METHOD_SAMPLING,
    SearchReport,
    brute_force_extremes,
    grid_search,
    random_sampling_baseline,
    sample_count,
)
from .tours import (
    EXACT_LIMIT,
    PathResult,
    TourResult,
    convert_point,
    emhp_path,
    fews_bound,
    tmhp_time,
)
from .limits import (
    FIRST_GROUP_FAST,
    FIRST_GROUP_SLOW,
    BoundBreakdown,
    BoundInputs,
    bound_inputs_from_scenario,
    bound_sweep,
    optimal_nmax,
    upper_bound_time,
)
from .experiments import (
    BOUND_CSV_HEADER,
    BRUTE_CUTOFF,
    CSV_HEADER,
    BoundExperimentRow,
    ExperimentConfig,
    ExperimentRow,
    load_experiment_config,
    load_scenario,
    run_experiment_fig3,
    run_experiment_fig4,
    save_bound_results,
    save_results,
    save_scenario,
    trial_seeds,
    two_group_capture_time,
)

__version__ = "0.1.0"

__all__ = [
    "ABOVE", "ABOVE_RECT", "BELOW", "COOPERATIVE", "EPS", "GREEDY", "IN_RECT",
    "CASE1", "CASE2", "CASE_NONE",
    "ChainState", "InterceptRecord", "Point2", "PursuitTrace", "Rectangle",
    "Scenario", "SpeedAssignment", "SpeedBounds",
    "generate_random_scenario", "require_valid_scenario", "scenario_from_dict",
    "scenario_to_dict", "validate_scenario",
    "euclidean_intercept_time", "intercept_time_first", "intercept_time_next",
    "step_simulate", "total_intercept_time",
    "CooperationCase", "PassEvent", "StrategyResult", "cooperation_case",
    "cooperative_speed", "greedy_assignment", "greedy_speed_k",
    "optimal_single", "seq_grec",
    "BRUTE_FORCE_LIMIT", "GRID_BUDGET", "METHOD_EXTREMES", "METHOD_GRID",
    "METHOD_SAMPLING", "EXACT_LIMIT", "FIRST_GROUP_FAST", "FIRST_GROUP_SLOW",
    "SearchReport", "brute_force_extremes", "grid_search",
    "random_sampling_baseline", "sample_count",
    "PathResult", "TourResult", "convert_point", "emhp_path", "fews_bound",
    "tmhp_time",
    "BoundBreakdown", "BoundInputs", "bound_inputs_from_scenario",
    "bound_sweep", "optimal_nmax", "upper_bound_time",
    "BOUND_CSV_HEADER", "BRUTE_CUTOFF", "CSV_HEADER",
    "BoundExperimentRow", "ExperimentConfig", "ExperimentRow",
    "load_experiment_config", "load_scenario", "run_experiment_fig3",
    "run_experiment_fig4", "save_bound_results", "save_results",
    "save_scenario", "trial_seeds", "two_group_capture_time",
    "__version__",
]
