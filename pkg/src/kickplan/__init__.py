"""kickplan: constraint-aware four-phase kick planning for in-walk humanoid kicks.

The planner solves an analytic bang-bang swing profile (Prepare, Swing,
Continue, Return) under hip torque, velocity, and joint-angle limits,
and schedules the gait step frequency so one support phase spans the
whole kick. The trajectory module turns plans into time series and foot
offsets; the verify module re-checks plans with an independent numeric
integrator and reports feasibility.
"""

from .backend import BACKEND
from .config import ConfigError, KickConfig, load_config, parse_config
from .inertia import leg_inertia, max_kick_acceleration
from .model import (
    KickParams,
    KickPlan,
    LegMassModel,
    ParameterError,
    Phase,
    PhaseSegment,
    TrajectorySample,
    validate_params,
)
from .planner import (
    InfeasibleKickError,
    StepFrequencySchedule,
    clamp_kick_velocity,
    continue_phase,
    plan_kick,
    prepare_phase,
    return_phase,
    schedule_step_frequency,
    swing_profile,
    target_kick_angle,
)
from .trajectory import evaluate, foot_offsets, sample_trajectory
from .verify import (
    LaunchEstimate,
    PlanReport,
    check_plan,
    closed_form_theta,
    estimate_ball_launch,
    integrate_numeric,
    oracle_deviation,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConfigError",
    "InfeasibleKickError",
    "KickConfig",
    "KickParams",
    "KickPlan",
    "LaunchEstimate",
    "LegMassModel",
    "ParameterError",
    "Phase",
    "PhaseSegment",
    "PlanReport",
    "StepFrequencySchedule",
    "TrajectorySample",
    "check_plan",
    "clamp_kick_velocity",
    "closed_form_theta",
    "continue_phase",
    "estimate_ball_launch",
    "evaluate",
    "foot_offsets",
    "integrate_numeric",
    "leg_inertia",
    "load_config",
    "max_kick_acceleration",
    "oracle_deviation",
    "parse_config",
    "plan_kick",
    "prepare_phase",
    "return_phase",
    "sample_trajectory",
    "schedule_step_frequency",
    "swing_profile",
    "target_kick_angle",
    "validate_params",
]
