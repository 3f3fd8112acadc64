"""Closed-form solver for the four-phase kick profile.

The kick is planned as a bang-bang profile in the hip swing angle: wind
up backward to the pre-swing angle when needed (Prepare), accelerate to
the kick velocity so that it is reached exactly at the ball (Swing),
follow through at constant velocity (Continue), then brake past the peak
angle and sweep back to the gait pose (Return). Every interval uses
constant acceleration of magnitude alpha_k or zero, which keeps the whole
plan analytic.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .inertia import leg_inertia, max_kick_acceleration
from .model import (
    KickParams,
    KickPlan,
    LegMassModel,
    ParameterError,
    Phase,
    PhaseSegment,
    validate_params,
)


class InfeasibleKickError(ValueError):
    """The requested kick cannot be realized within the joint limits."""


def target_kick_angle(z_h: float, r_b: float, x_b: float) -> float:
    """Swing angle at which the foot tip meets the ball center [rad].

    Geometry: the foot tip travels on a circle of radius z_h - r_b about
    the hip, and the ball center sits x_b - r_b ahead of the tip's lowest
    point. The result lies in (0, pi/2).
    """
    if not z_h > r_b:
        raise ParameterError(f"z_h must exceed r_b (z_h={z_h}, r_b={r_b})")
    if not x_b > r_b:
        raise ParameterError(f"x_b must exceed r_b (x_b={x_b}, r_b={r_b})")
    return math.atan2(z_h - r_b, x_b - r_b)


def swing_profile(omega_k: float, alpha_k: float) -> tuple[float, float]:
    """Time and angle needed to accelerate from rest to the kick velocity.

    Returns (t_sw, theta_sw) with t_sw = omega_k / alpha_k and
    theta_sw = omega_k^2 / (2 alpha_k).
    """
    if not omega_k > 0.0:
        raise ParameterError(f"omega_k must be positive (got {omega_k})")
    if not alpha_k > 0.0:
        raise ParameterError(f"alpha_k must be positive (got {alpha_k})")
    t_sw = omega_k / alpha_k
    theta_sw = omega_k * omega_k / (2.0 * alpha_k)
    return t_sw, theta_sw


def prepare_phase(
    theta_pre: float, alpha_k: float
) -> tuple[float, tuple[PhaseSegment, ...]]:
    """Wind-up from the gait pose to theta_pre, arriving at rest.

    The motion is split into symmetric acceleration and deceleration
    halves meeting at theta_pre / 2, for a total duration of
    2 sqrt(|theta_pre / alpha_k|). Returns (t_pre, segments); both are
    empty for theta_pre == 0.
    """
    if not alpha_k > 0.0:
        raise ParameterError(f"alpha_k must be positive (got {alpha_k})")
    if theta_pre == 0.0:
        return 0.0, ()
    t_half = math.sqrt(abs(theta_pre / alpha_k))
    a = alpha_k if theta_pre > 0.0 else -alpha_k
    push = PhaseSegment(Phase.PREPARE, 0.0, t_half, 0.0, 0.0, a)
    brake = PhaseSegment(
        Phase.PREPARE, push.t_end, t_half, push.theta_end, push.omega_end, -a
    )
    return 2.0 * t_half, (push, brake)


def continue_phase(
    theta_k: float, theta_ext: float, omega_k: float, t_start: float = 0.0
) -> tuple[float, float, tuple[PhaseSegment, ...]]:
    """Constant-velocity follow-through past the ball.

    Returns (theta_ret, t_ext, segments) with theta_ret = theta_k +
    theta_ext and t_ext = theta_ext / omega_k. No segment is emitted when
    theta_ext == 0.
    """
    if not omega_k > 0.0:
        raise ParameterError(f"omega_k must be positive (got {omega_k})")
    if not theta_ext >= 0.0:
        raise ParameterError(f"theta_ext must be non-negative (got {theta_ext})")
    theta_ret = theta_k + theta_ext
    t_ext = theta_ext / omega_k
    if t_ext == 0.0:
        return theta_ret, 0.0, ()
    seg = PhaseSegment(Phase.CONTINUE, t_start, t_ext, theta_k, omega_k, 0.0)
    return theta_ret, t_ext, (seg,)


def return_phase(
    theta_ret: float,
    theta_sw: float,
    omega_k: float,
    alpha_k: float,
    t_start: float = 0.0,
) -> tuple[float, float, tuple[PhaseSegment, ...]]:
    """Brake past the ball and sweep back down to the gait pose.

    The leg decelerates from omega_k to rest, coasting theta_sw further to
    the peak angle theta_post = theta_ret + theta_sw (the mirror image of
    the swing). It then returns over theta_post in two symmetric halves
    meeting at theta_post / 2, ending at zero angle and zero velocity.
    Returns (theta_post, t_ret, segments) with
    t_ret = t_sw + 2 sqrt(|theta_post / alpha_k|).
    """
    if not theta_sw > 0.0:
        raise ParameterError(f"theta_sw must be positive (got {theta_sw})")
    if not omega_k > 0.0:
        raise ParameterError(f"omega_k must be positive (got {omega_k})")
    if not alpha_k > 0.0:
        raise ParameterError(f"alpha_k must be positive (got {alpha_k})")
    t_sw = omega_k / alpha_k
    theta_post = theta_ret + theta_sw
    t_half = math.sqrt(abs(theta_post / alpha_k))
    t_ret = t_sw + 2.0 * t_half
    brake = PhaseSegment(Phase.RETURN, t_start, t_sw, theta_ret, omega_k, -alpha_k)
    down = PhaseSegment(
        Phase.RETURN, brake.t_end, t_half, brake.theta_end, brake.omega_end, -alpha_k
    )
    settle = PhaseSegment(
        Phase.RETURN, down.t_end, t_half, down.theta_end, down.omega_end, alpha_k
    )
    return theta_post, t_ret, (brake, down, settle)


def clamp_kick_velocity(
    theta_k: float,
    theta_ext: float,
    alpha_k: float,
    theta_max: float,
    omega_h_max: float,
    omega_k_req: float | None = None,
) -> float:
    """Resolve the kick velocity against the actuator and joint limits.

    The result is the smallest of: the requested velocity (or omega_h_max
    when none is requested), the actuator velocity limit omega_h_max, and
    the largest velocity whose post-kick overshoot
    theta_post = theta_k + theta_ext + omega_k^2 / (2 alpha_k) still
    respects theta_max. Resolution order: requested value, actuator cap,
    joint-limit cap.
    """
    if not alpha_k > 0.0:
        raise ParameterError(f"alpha_k must be positive (got {alpha_k})")
    if not omega_h_max > 0.0:
        raise ParameterError(f"omega_h_max must be positive (got {omega_h_max})")
    headroom = theta_max - (theta_k + theta_ext)
    if not headroom > 0.0:
        raise InfeasibleKickError(
            "kick infeasible: joint limit below kick angle "
            f"(theta_max={theta_max}, theta_k + theta_ext={theta_k + theta_ext})"
        )
    joint_cap = math.sqrt(2.0 * alpha_k * headroom)
    requested = omega_h_max if omega_k_req is None else omega_k_req
    return min(requested, omega_h_max, joint_cap)


def plan_kick(
    params: KickParams,
    leg: LegMassModel,
    reduce_acceleration: bool = False,
) -> KickPlan:
    """Solve the complete four-phase kick for the given parameters.

    The swing acceleration is the torque-limited maximum tau_h / I_l and
    the kick velocity is clamped to the actuator and joint limits. When
    the swing distance theta_sw exceeds the kick angle, the plan winds up
    to a negative theta_pre first (Prepare); otherwise the leg accelerates
    from the gait pose and coasts the remaining theta_pre to the ball.
    With reduce_acceleration=True the coast is avoided instead by lowering
    the acceleration until the swing distance covers exactly theta_k
    (wind-up cases are unaffected: they already need the full torque).

    Raises InfeasibleKickError when no kick fits the joint limits.
    """
    p = validate_params(params)
    i_l = leg_inertia(leg)
    alpha_k = max_kick_acceleration(p.tau_h, i_l)
    theta_k = target_kick_angle(p.z_h, p.r_b, p.x_b)
    omega_k = clamp_kick_velocity(
        theta_k, p.theta_ext, alpha_k, p.theta_max, p.omega_h_max, p.omega_k_req
    )
    t_sw, theta_sw = swing_profile(omega_k, alpha_k)
    theta_pre = theta_k - theta_sw
    if abs(theta_pre) <= 1e-12 * max(theta_k, theta_sw):
        theta_pre = 0.0  # rounding noise at the exact tie; avoid sub-ns segments

    if reduce_acceleration and theta_pre > 0.0:
        alpha_k = omega_k * omega_k / (2.0 * theta_k)
        t_sw, theta_sw = swing_profile(omega_k, alpha_k)
        theta_pre = 0.0  # swing distance now covers theta_k by construction

    segments: list[PhaseSegment] = []
    if theta_pre < 0.0:
        # Wind-up branch: swing up backward, then accelerate through the
        # full theta_sw so omega_k is reached exactly at theta_k.
        if theta_pre < p.theta_min:
            raise InfeasibleKickError(
                "prepare swing-up exceeds rear joint limit "
                f"(theta_pre={theta_pre}, theta_min={p.theta_min})"
            )
        t_pre, prep = prepare_phase(theta_pre, alpha_k)
        segments.extend(prep)
        segments.append(
            PhaseSegment(Phase.SWING, t_pre, t_sw, theta_pre, 0.0, alpha_k)
        )
        t_sw_eff = t_sw
    else:
        # No wind-up: accelerate from the gait pose, then coast the
        # remaining theta_pre at omega_k until the ball is reached.
        t_pre = 0.0
        segments.append(PhaseSegment(Phase.SWING, 0.0, t_sw, 0.0, 0.0, alpha_k))
        t_coast = theta_pre / omega_k
        if t_coast > 0.0:
            segments.append(
                PhaseSegment(Phase.SWING, t_sw, t_coast, theta_sw, omega_k, 0.0)
            )
        t_sw_eff = t_sw + t_coast

    t_impact = t_pre + t_sw_eff
    theta_ret, t_ext, cont = continue_phase(
        theta_k, p.theta_ext, omega_k, t_start=t_impact
    )
    segments.extend(cont)
    theta_post, t_ret, ret = return_phase(
        theta_ret, theta_sw, omega_k, alpha_k, t_start=t_impact + t_ext
    )
    segments.extend(ret)
    if theta_post > p.theta_max + 1e-12:  # guarded by the clamp; defensive
        raise InfeasibleKickError(
            "post-kick overshoot exceeds forward joint limit "
            f"(theta_post={theta_post}, theta_max={p.theta_max})"
        )

    t_k = t_pre + t_sw_eff + t_ext + t_ret
    return KickPlan(
        alpha_k=alpha_k,
        omega_k=omega_k,
        theta_k=theta_k,
        theta_sw=theta_sw,
        theta_pre=theta_pre,
        theta_ret=theta_ret,
        theta_post=theta_post,
        t_pre=t_pre,
        t_sw=t_sw_eff,
        t_ext=t_ext,
        t_ret=t_ret,
        t_k=t_k,
        f_g=1.0 / t_k,
        swing_radius=p.z_h - p.r_b,
        segments=tuple(segments),
    )


class StepFrequencySchedule(NamedTuple):
    """Gait frequency for the kick step and for the steps after it [Hz]."""

    kick_step: float
    following_steps: float


def schedule_step_frequency(
    plan: KickPlan, f_nominal: float
) -> StepFrequencySchedule:
    """Slow the gait so one support phase spans the whole kick.

    The kick step runs at exactly 1 / t_k; following steps revert to the
    nominal gait frequency.
    """
    if not f_nominal > 0.0:
        raise ParameterError(f"f_nominal must be positive (got {f_nominal})")
    return StepFrequencySchedule(1.0 / plan.t_k, f_nominal)
