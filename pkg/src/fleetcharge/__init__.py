"""Optimal periodic recharge schedules for heterogeneous robot fleets."""

from .core import (
    OccupancyProfile,
    PhaseAssignment,
    RobotSpec,
    Schedule,
    ValidationReport,
    advance_state,
    charging_indicator,
    density_bound,
    flying_indicator,
    occupancy_profile,
    total_flying,
    validate_schedule,
)
from .errors import DomainError, ResourceLimitError
from .horizon import (
    CandidateSet,
    HorizonPlan,
    apply_plan,
    candidate_set,
    dijkstra_lcm,
    reduce_horizon,
    scheduling_horizon,
)
from .optimizer import (
    MaxFlytimeSolution,
    MinStationsSolution,
    export_model,
    solve_max_flytime,
    solve_min_stations,
)
from .replan import ReplanResult, replan_delayed, residual_capacity
from .tpws import conflict, round_instance, schedule_tpws

__version__ = "0.1.0"
