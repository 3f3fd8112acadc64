"""Independent checks of a kick plan.

This module re-derives plan behavior by routes independent of the
closed-form construction: a brute-force semi-implicit Euler sweep of the
acceleration signal, a feasibility/continuity report, and a coarse
impact-plus-projectile estimate used only to compare kick strength
between plans (never to predict absolute distances).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .model import KickParams, KickPlan, ParameterError, Phase

CONTINUITY_TOL = 1e-9   # [rad] and [rad/s] between adjacent segments
BOUNDARY_TOL = 1e-9     # [rad] and [rad/s] at t = 0 and t = t_k
LIMIT_SLACK = 1e-9      # absorbs closed-form rounding when a limit binds exactly
DEFAULT_ORACLE_DT = 1e-5  # [s]
ORACLE_TOL = 1e-4       # [rad]

STANDARD_GRAVITY = 9.81  # [m/s^2]


@dataclass(frozen=True)
class PlanReport:
    """Feasibility and consistency report for one plan.

    boundary_errors holds |theta(0)|, |omega(0)|, |theta(t_k)|,
    |omega(t_k)|. limit_violations lists (limit_name, excess) pairs for
    theta_min, theta_max, and omega_h_max. The omega_h_max check covers
    the wind-up, strike, and follow-through; the swing-back sweep of the
    return phase is exempt because its timing equation requires the higher
    transient peak whenever theta_ret exceeds theta_sw. max_velocity still
    reports the plan-wide peak. continuity_residuals holds
    (|dtheta|, |domega|) at each interior segment boundary.
    """

    boundary_errors: tuple[float, float, float, float]
    max_velocity: float
    max_acceleration: float
    limit_violations: tuple[tuple[str, float], ...]
    continuity_residuals: tuple[tuple[float, float], ...]

    @property
    def passed(self) -> bool:
        return (
            all(e <= BOUNDARY_TOL for e in self.boundary_errors)
            and all(
                dth <= CONTINUITY_TOL and dom <= CONTINUITY_TOL
                for dth, dom in self.continuity_residuals
            )
            and not self.limit_violations
        )


def _segment_theta_range(seg) -> tuple[float, float]:
    # theta is quadratic in tau: extremes sit at the ends or at the
    # interior stationary point where omega crosses zero.
    lo = min(seg.theta_start, seg.theta_end)
    hi = max(seg.theta_start, seg.theta_end)
    if seg.alpha != 0.0:
        tau = -seg.omega_start / seg.alpha
        if 0.0 < tau < seg.duration:
            theta = seg.theta_at(tau)
            lo = min(lo, theta)
            hi = max(hi, theta)
    return lo, hi


def check_plan(plan: KickPlan, params: KickParams) -> PlanReport:
    """Populate a PlanReport for the plan against the given limits."""
    if not plan.segments:
        return PlanReport((0.0, 0.0, 0.0, 0.0), 0.0, 0.0, (), ())

    first, last = plan.segments[0], plan.segments[-1]
    boundary = (
        abs(first.theta_start),
        abs(first.omega_start),
        abs(last.theta_end),
        abs(last.omega_end),
    )

    continuity = tuple(
        (abs(b.theta_start - a.theta_end), abs(b.omega_start - a.omega_end))
        for a, b in zip(plan.segments, plan.segments[1:])
    )

    theta_lo = math.inf
    theta_hi = -math.inf
    max_velocity = 0.0
    max_velocity_fwd = 0.0
    max_acceleration = 0.0
    for seg in plan.segments:
        lo, hi = _segment_theta_range(seg)
        theta_lo = min(theta_lo, lo)
        theta_hi = max(theta_hi, hi)
        peak = max(abs(seg.omega_start), abs(seg.omega_end))
        max_velocity = max(max_velocity, peak)
        if seg.phase is not Phase.RETURN:
            max_velocity_fwd = max(max_velocity_fwd, peak)
        max_acceleration = max(max_acceleration, abs(seg.alpha))

    violations = []
    if theta_hi > params.theta_max + LIMIT_SLACK:
        violations.append(("theta_max", theta_hi - params.theta_max))
    if theta_lo < params.theta_min - LIMIT_SLACK:
        violations.append(("theta_min", params.theta_min - theta_lo))
    omega_claimed = max(max_velocity_fwd, plan.omega_k)
    if omega_claimed > params.omega_h_max + LIMIT_SLACK:
        violations.append(("omega_h_max", omega_claimed - params.omega_h_max))

    return PlanReport(
        boundary_errors=boundary,
        max_velocity=max_velocity,
        max_acceleration=max_acceleration,
        limit_violations=tuple(violations),
        continuity_residuals=continuity,
    )


def integrate_numeric(
    plan: KickPlan,
    dt: float = DEFAULT_ORACLE_DT,
    theta0: float = 0.0,
    omega0: float = 0.0,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Brute-force semi-implicit Euler sweep of the plan's acceleration signal.

    Integrates the piecewise-constant acceleration from (theta0, omega0)
    and returns (t, theta, omega) arrays including the initial state.
    Segment boundaries are hit exactly by shortening the final substep of
    each segment.
    """
    durations = [seg.duration for seg in plan.segments]
    alphas = [seg.alpha for seg in plan.segments]
    return backend.integrate_segments(durations, alphas, theta0, omega0, dt)


def closed_form_theta(plan: KickPlan, t: np.ndarray) -> np.ndarray:
    """Vectorized closed-form swing angle at the given times.

    Exact boundaries resolve to the later segment, matching the scalar
    evaluation in the trajectory module.
    """
    starts = np.array([seg.t_start for seg in plan.segments])
    theta_s = np.array([seg.theta_start for seg in plan.segments])
    omega_s = np.array([seg.omega_start for seg in plan.segments])
    alpha = np.array([seg.alpha for seg in plan.segments])
    idx = np.clip(np.searchsorted(starts, t, side="right") - 1, 0, len(starts) - 1)
    tau = t - starts[idx]
    return theta_s[idx] + omega_s[idx] * tau + 0.5 * alpha[idx] * tau * tau


def oracle_deviation(plan: KickPlan, dt: float = DEFAULT_ORACLE_DT) -> float:
    """Max |theta_numeric - theta_closed_form| over one integration sweep."""
    t, theta_num, _ = integrate_numeric(plan, dt)
    return float(np.max(np.abs(theta_num - closed_form_theta(plan, t))))


@dataclass(frozen=True)
class LaunchEstimate:
    """Coarse ball-launch figures for relative kick-power comparison.

    The model deliberately ignores drag, spin, foot shape, and rolling:
    it preserves orderings between plans (faster impact means a longer
    estimated kick) and must not be read as a distance prediction.
    """

    v_foot: float   # foot-tip speed at impact [m/s]
    impulse: float  # momentum transferred to the ball [kg m/s]
    v_ball: float   # ball launch speed [m/s]
    range: float    # drag-free projectile range [m]


def estimate_ball_launch(
    omega_k: float,
    z_h: float,
    r_b: float,
    m_ball: float,
    m_eff: float,
    e: float,
    launch_angle: float,
) -> LaunchEstimate:
    """Estimate the ball launch from the kick velocity.

    The foot tip moves at omega_k * (z_h - r_b); a one-dimensional impact
    of the effective striking mass m_eff against the ball mass with
    restitution e gives the launch speed, and a drag-free projectile from
    the ball-center height r_b gives the range. launch_angle must lie in
    [0, pi/2) radians.
    """
    if not omega_k >= 0.0:
        raise ParameterError(f"omega_k must be non-negative (got {omega_k})")
    if not z_h > r_b:
        raise ParameterError(f"z_h must exceed r_b (z_h={z_h}, r_b={r_b})")
    if not m_ball > 0.0:
        raise ParameterError(f"m_ball must be positive (got {m_ball})")
    if not m_eff > 0.0:
        raise ParameterError(f"m_eff must be positive (got {m_eff})")
    if not 0.0 <= e <= 1.0:
        raise ParameterError(f"restitution must lie in [0, 1] (got {e})")
    if not 0.0 <= launch_angle < math.pi / 2.0:
        raise ParameterError(
            f"launch_angle must lie in [0, pi/2) (got {launch_angle})"
        )
    v_foot = omega_k * (z_h - r_b)
    v_ball = (1.0 + e) * m_eff / (m_eff + m_ball) * v_foot
    impulse = m_ball * v_ball
    g = STANDARD_GRAVITY
    v_x = v_ball * math.cos(launch_angle)
    v_z = v_ball * math.sin(launch_angle)
    launch_range = v_x / g * (v_z + math.sqrt(v_z * v_z + 2.0 * g * r_b))
    return LaunchEstimate(
        v_foot=v_foot, impulse=impulse, v_ball=v_ball, range=launch_range
    )
