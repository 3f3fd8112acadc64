import dataclasses
import math

import numpy as np
import pytest

from conftest import random_kick_inputs, reference_inputs
from kickplan import (
    InfeasibleKickError,
    ParameterError,
    Phase,
    clamp_kick_velocity,
    continue_phase,
    evaluate,
    plan_kick,
    prepare_phase,
    return_phase,
    schedule_step_frequency,
    swing_profile,
    target_kick_angle,
)


def stepped_end_state(segments, dt=1e-4):
    """Independent small-step sweep of a segment list (oracle).

    Each step applies the constant-acceleration kinematics over dt, so the
    result checks the assembled segments without trusting their closed-form
    end states.
    """
    theta, omega = segments[0].theta_start, segments[0].omega_start
    for seg in segments:
        steps = int(round(seg.duration / dt))
        h = seg.duration / steps if steps else 0.0
        for _ in range(steps):
            theta += omega * h + 0.5 * seg.alpha * h * h
            omega += seg.alpha * h
    return theta, omega


# --- target_kick_angle ------------------------------------------------------

def test_kick_angle_quarter_pi():
    assert target_kick_angle(0.6, 0.1, 0.6) == pytest.approx(math.pi / 4, rel=1e-15)


def test_kick_angle_vanishes_for_distant_ball():
    assert target_kick_angle(0.6, 0.1, 1e9) == pytest.approx(0.0, abs=1e-9)
    assert target_kick_angle(0.6, 0.1, 1e9) > 0.0


def test_kick_angle_reference_geometry():
    # atan2(0.437, 0.21), evaluated independently beforehand
    assert target_kick_angle(0.547, 0.11, 0.32) == pytest.approx(
        1.1228300891162169, rel=1e-12
    )


def test_kick_angle_always_in_first_quadrant():
    rng = np.random.default_rng(3)
    for _ in range(200):
        r_b = rng.uniform(0.01, 0.2)
        angle = target_kick_angle(
            r_b + rng.uniform(0.01, 2.0), r_b, r_b + rng.uniform(0.01, 2.0)
        )
        assert 0.0 < angle < math.pi / 2


def test_kick_angle_rejects_degenerate_geometry():
    with pytest.raises(ParameterError, match="z_h"):
        target_kick_angle(0.1, 0.1, 0.6)
    with pytest.raises(ParameterError, match="x_b"):
        target_kick_angle(0.6, 0.1, 0.1)


# --- swing_profile ----------------------------------------------------------

def test_swing_profile_direct_substitution():
    assert swing_profile(2.0, 8.0) == (0.25, 0.25)


def test_swing_profile_unit_time():
    for a in (0.5, 3.0, 17.0):
        t_sw, theta_sw = swing_profile(a, a)
        assert t_sw == pytest.approx(1.0)
        assert theta_sw == pytest.approx(a / 2.0)


def test_swing_profile_matches_integration():
    t_sw, theta_sw = swing_profile(6.0, 20.0)
    assert (t_sw, theta_sw) == (0.3, pytest.approx(0.9, rel=1e-12))
    # forward-Euler the constant acceleration and compare
    theta = omega = 0.0
    dt = 1e-6
    for _ in range(int(round(t_sw / dt))):
        theta += omega * dt
        omega += 20.0 * dt
    assert theta == pytest.approx(theta_sw, abs=1e-5)
    assert omega == pytest.approx(6.0, abs=1e-9)


def test_swing_profile_rejects_nonpositive_inputs():
    with pytest.raises(ParameterError):
        swing_profile(0.0, 1.0)
    with pytest.raises(ParameterError):
        swing_profile(1.0, -2.0)


# --- prepare_phase ----------------------------------------------------------

def test_prepare_phase_symmetric_wind_up():
    t_pre, segments = prepare_phase(-0.2, 20.0)
    assert t_pre == pytest.approx(0.2, rel=1e-12)
    assert len(segments) == 2
    assert all(seg.phase is Phase.PREPARE for seg in segments)
    mid = segments[0]
    assert mid.theta_end == pytest.approx(-0.1, rel=1e-12)
    assert mid.omega_end == pytest.approx(-2.0, rel=1e-12)
    assert segments[1].theta_end == pytest.approx(-0.2, rel=1e-12)
    assert segments[1].omega_end == pytest.approx(0.0, abs=1e-15)


def test_prepare_phase_skipped_at_zero():
    assert prepare_phase(0.0, 20.0) == (0.0, ())


def test_prepare_phase_end_state_against_oracle():
    t_pre, segments = prepare_phase(-0.45, 18.0)
    assert t_pre == pytest.approx(0.3162277660168379, rel=1e-12)
    theta, omega = stepped_end_state(segments)
    assert theta == pytest.approx(-0.45, abs=1e-6)
    assert omega == pytest.approx(0.0, abs=1e-6)


# --- continue_phase ---------------------------------------------------------

def test_continue_phase_without_extension():
    theta_ret, t_ext, segments = continue_phase(0.8, 0.0, 4.0)
    assert (theta_ret, t_ext, segments) == (0.8, 0.0, ())


def test_continue_phase_substitution():
    theta_ret, t_ext, segments = continue_phase(0.8, 0.2, 4.0, t_start=1.0)
    assert theta_ret == pytest.approx(1.0, rel=1e-12)
    assert t_ext == pytest.approx(0.05, rel=1e-12)
    (seg,) = segments
    assert seg.alpha == 0.0
    assert seg.phase is Phase.CONTINUE
    assert seg.t_start == 1.0


def test_continue_phase_chained_from_reference_geometry():
    theta_k = target_kick_angle(0.547, 0.11, 0.32)
    theta_ret, t_ext, _ = continue_phase(theta_k, 0.15, 6.0)
    assert theta_ret == pytest.approx(1.2728300891162168, rel=1e-12)
    assert t_ext == pytest.approx(0.025, rel=1e-12)


# --- return_phase -----------------------------------------------------------

def test_return_phase_substitution():
    theta_post, t_ret, segments = return_phase(1.0, 0.25, 2.0, 8.0)
    assert theta_post == pytest.approx(1.25, rel=1e-12)
    assert t_ret == pytest.approx(1.0405694150420949, rel=1e-12)
    assert len(segments) == 3
    assert all(seg.phase is Phase.RETURN for seg in segments)


def test_return_phase_degenerate_limit():
    # as the kick velocity vanishes the braking leg disappears and the
    # phase tends to a pure wind-down over theta_ret
    theta_post, t_ret, _ = return_phase(0.9, 1e-12, 1e-6, 20.0)
    assert theta_post == pytest.approx(0.9, rel=1e-9)
    assert t_ret == pytest.approx(2.0 * math.sqrt(0.9 / 20.0), rel=1e-6)


def test_return_phase_end_state_against_oracle():
    theta_post, t_ret, segments = return_phase(0.9, 0.9, 6.0, 20.0)
    assert theta_post == pytest.approx(1.8, rel=1e-12)
    assert t_ret == pytest.approx(0.9, rel=1e-12)
    theta, omega = stepped_end_state(segments)
    assert theta == pytest.approx(0.0, abs=1e-6)
    assert omega == pytest.approx(0.0, abs=1e-6)


# --- clamp_kick_velocity ----------------------------------------------------

def test_clamp_joint_limit_binds():
    # overshoot headroom of 0.9 rad at 20 rad/s^2 caps the kick at 6 rad/s
    assert clamp_kick_velocity(0.8, 0.2, 20.0, 1.9, 8.0) == pytest.approx(
        6.0, rel=1e-12
    )


def test_clamp_velocity_limit_binds():
    assert clamp_kick_velocity(0.8, 0.2, 20.0, 1.9, 2.0) == 2.0


def test_clamp_request_binds():
    assert clamp_kick_velocity(0.8, 0.2, 20.0, 1.9, 8.0, omega_k_req=3.5) == 3.5


def test_clamp_rejects_zero_headroom():
    with pytest.raises(InfeasibleKickError, match="joint limit below kick angle"):
        clamp_kick_velocity(0.8, 0.2, 20.0, 1.0, 8.0)


# --- plan_kick --------------------------------------------------------------

def test_reference_plan_scalars(reference_plan):
    plan = reference_plan
    assert plan.alpha_k == 20.0
    assert plan.omega_k == 6.0
    assert plan.theta_k == pytest.approx(0.7853981633974483, rel=1e-15)
    assert plan.theta_sw == pytest.approx(0.9, rel=1e-12)
    assert plan.theta_pre == pytest.approx(-0.11460183660255174, rel=1e-12)
    assert plan.t_pre == pytest.approx(0.15139474006883577, rel=1e-12)
    assert plan.t_sw == pytest.approx(0.3, rel=1e-15)
    assert plan.t_ext == pytest.approx(0.2 / 6.0, rel=1e-15)
    assert plan.theta_ret == pytest.approx(0.9853981633974483, rel=1e-12)
    assert plan.theta_post == pytest.approx(1.8853981633974483, rel=1e-12)
    assert plan.t_ret == pytest.approx(0.9140681010111905, rel=1e-12)
    assert plan.t_k == pytest.approx(1.3987961744133596, rel=1e-12)
    assert plan.f_g == pytest.approx(0.71490043960078, rel=1e-12)


def test_reference_plan_is_wind_up_branch(reference_plan):
    phases = [seg.phase for seg in reference_plan.segments]
    assert phases == [
        Phase.PREPARE, Phase.PREPARE, Phase.SWING,
        Phase.CONTINUE, Phase.RETURN, Phase.RETURN, Phase.RETURN,
    ]


def test_reference_plan_end_state_against_oracle(reference_plan):
    theta, omega = stepped_end_state(reference_plan.segments)
    assert theta == pytest.approx(0.0, abs=1e-6)
    assert omega == pytest.approx(0.0, abs=1e-6)


def test_coast_branch_has_no_prepare():
    params, leg = reference_inputs()
    params = dataclasses.replace(params, omega_k_req=2.0)
    plan = plan_kick(params, leg)
    phases = [seg.phase for seg in plan.segments]
    assert Phase.PREPARE not in phases
    # exactly one coast sub-segment (constant velocity) before impact
    swing_segs = [seg for seg in plan.segments if seg.phase is Phase.SWING]
    assert len(swing_segs) == 2
    assert swing_segs[0].alpha == plan.alpha_k
    assert swing_segs[1].alpha == 0.0
    # the effective swing time includes the coast so durations sum to t_k
    assert plan.t_sw == pytest.approx(
        2.0 / 20.0 + (plan.theta_k - 0.1) / 2.0, rel=1e-12
    )
    sample = evaluate(plan, plan.t_impact)
    assert sample.theta_l == pytest.approx(plan.theta_k, abs=1e-9)
    assert sample.omega_l == pytest.approx(2.0, abs=1e-9)


def test_exact_tie_emits_no_prepare_and_no_coast():
    params, leg = reference_inputs()
    theta_k = target_kick_angle(params.z_h, params.r_b, params.x_b)
    omega_tie = math.sqrt(2.0 * 20.0 * theta_k)
    params = dataclasses.replace(params, omega_k_req=omega_tie)
    plan = plan_kick(params, leg)
    assert abs(plan.theta_pre) < 1e-14
    assert all(seg.phase is not Phase.PREPARE for seg in plan.segments)
    assert all(seg.duration > 1e-9 for seg in plan.segments)


def test_plan_end_state_is_zero_for_random_inputs():
    rng = np.random.default_rng(42)
    for _ in range(100):
        params, leg = random_kick_inputs(rng)
        plan = plan_kick(params, leg)
        last = plan.segments[-1]
        assert abs(last.theta_end) < 1e-9
        assert abs(last.omega_end) < 1e-9
        assert plan.segments[0].theta_start == 0.0
        assert plan.segments[0].omega_start == 0.0


def test_plan_duration_bookkeeping(reference_plan):
    total = 0.0
    for seg in reference_plan.segments:
        total += seg.duration
    assert abs(total - reference_plan.t_k) < 1e-12
    assert abs(reference_plan.f_g * reference_plan.t_k - 1.0) < 1e-15
    assert reference_plan.theta_ret == reference_plan.theta_k + 0.2
    assert reference_plan.theta_post == reference_plan.theta_ret + reference_plan.theta_sw


def test_plan_rejects_rear_limit_violation():
    params, leg = reference_inputs()
    params = dataclasses.replace(params, theta_min=-0.05)
    with pytest.raises(InfeasibleKickError, match="rear joint limit"):
        plan_kick(params, leg)


def test_plan_rejects_forward_limit_violation():
    params, leg = reference_inputs()
    params = dataclasses.replace(params, theta_max=0.9)
    with pytest.raises(InfeasibleKickError, match="joint limit below kick angle"):
        plan_kick(params, leg)


def test_plan_is_deterministic():
    params, leg = reference_inputs()
    assert plan_kick(params, leg) == plan_kick(params, leg)
    rng = np.random.default_rng(8)
    for _ in range(20):
        p, l = random_kick_inputs(rng)
        assert plan_kick(p, l).to_dict() == plan_kick(p, l).to_dict()


def test_torque_scaling_law():
    # widen the joint window so omega_k stays pinned at the requested value
    # and the plan stays in the wind-up branch for every scale tried
    params, leg = reference_inputs()
    params = dataclasses.replace(params, theta_max=5.0, theta_min=-2.5)
    base = plan_kick(params, leg)
    for c in (0.6, 0.9, 1.1):
        scaled = plan_kick(dataclasses.replace(params, tau_h=c * params.tau_h), leg)
        assert scaled.alpha_k == pytest.approx(c * base.alpha_k, rel=1e-12)
        # omega_k is fixed by the request, so the swing shrinks as 1/c
        assert scaled.omega_k == base.omega_k
        assert scaled.t_sw == pytest.approx(base.t_sw / c, rel=1e-12)
        assert scaled.theta_sw == pytest.approx(base.theta_sw / c, rel=1e-12)


def test_overshoot_monotone_in_kick_velocity():
    params, leg = reference_inputs()
    previous = None
    for omega in (1.0, 2.0, 3.0, 4.0, 5.0, 6.0):
        plan = plan_kick(dataclasses.replace(params, omega_k_req=omega), leg)
        if previous is not None:
            assert plan.theta_post >= previous.theta_post
        previous = plan


def test_swing_time_non_increasing_in_coast_branch():
    # within the no-wind-up branch a faster kick spends less total time
    # reaching the ball (shorter coast dominates the longer ramp)
    params, leg = reference_inputs()
    theta_k = target_kick_angle(params.z_h, params.r_b, params.x_b)
    omega_tie = math.sqrt(2.0 * 20.0 * theta_k)
    previous = None
    for omega in np.linspace(0.5, omega_tie, 8):
        plan = plan_kick(dataclasses.replace(params, omega_k_req=float(omega)), leg)
        assert plan.t_pre == 0.0
        if previous is not None:
            assert plan.t_sw <= previous.t_sw + 1e-12
        previous = plan


def test_reduced_acceleration_mode_removes_coast():
    params, leg = reference_inputs()
    params = dataclasses.replace(params, omega_k_req=2.0)
    plan = plan_kick(params, leg, reduce_acceleration=True)
    assert plan.alpha_k == pytest.approx(
        4.0 / (2.0 * plan.theta_k), rel=1e-12
    )
    assert plan.alpha_k < 20.0
    assert plan.theta_pre == 0.0
    swing_segs = [seg for seg in plan.segments if seg.phase is Phase.SWING]
    assert len(swing_segs) == 1
    assert swing_segs[0].duration == pytest.approx(2.0 * plan.theta_k / 2.0, rel=1e-12)
    sample = evaluate(plan, plan.t_impact)
    assert sample.theta_l == pytest.approx(plan.theta_k, abs=1e-9)
    assert sample.omega_l == pytest.approx(2.0, abs=1e-9)
    last = plan.segments[-1]
    assert abs(last.theta_end) < 1e-9 and abs(last.omega_end) < 1e-9


def test_reduced_acceleration_mode_ignores_wind_up_plans(reference_plan):
    params, leg = reference_inputs()
    assert plan_kick(params, leg, reduce_acceleration=True) == reference_plan


# --- schedule_step_frequency ------------------------------------------------

def test_schedule_reciprocal_identity(reference_plan):
    plan = dataclasses.replace(reference_plan, t_k=1.0)
    assert schedule_step_frequency(plan, 2.4) == (1.0, 2.4)


def test_schedule_slows_gait_into_reported_band(reference_plan):
    # a 1.4286 s kick slows a 2.4 Hz gait to about 0.7 Hz for one step
    plan = dataclasses.replace(reference_plan, t_k=1.4286)
    schedule = schedule_step_frequency(plan, 2.4)
    assert schedule.kick_step == pytest.approx(0.7, abs=1e-4)
    assert schedule.following_steps == 2.4


def test_schedule_matches_plan_frequency(reference_plan):
    schedule = schedule_step_frequency(reference_plan, 2.4)
    assert schedule.kick_step == reference_plan.f_g
