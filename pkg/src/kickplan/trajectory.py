"""Evaluate a kick plan over time and convert swing angles to foot offsets."""

from __future__ import annotations

import math
from typing import Callable

from .model import KickPlan, ParameterError, PhaseSegment, TrajectorySample

# Optional per-sample transform, e.g. to derive a synchronized knee motion
# from theta_l. The library applies it as a pure pass-through.
SampleHook = Callable[[TrajectorySample], TrajectorySample]


def foot_offsets(theta_l: float, z_h: float, r_b: float) -> tuple[float, float]:
    """Sagittal foot-tip offsets (x_o, z_o) for swing angle theta_l [m].

    The tip moves on a circle of radius z_h - r_b about the hip:
    x_o = (z_h - r_b) sin(theta_l), z_o = (z_h - r_b) (1 - cos(theta_l)).
    """
    if not z_h > r_b:
        raise ParameterError(f"z_h must exceed r_b (z_h={z_h}, r_b={r_b})")
    radius = z_h - r_b
    return radius * math.sin(theta_l), radius * (1.0 - math.cos(theta_l))


def _segment_at(plan: KickPlan, t: float) -> PhaseSegment:
    # Half-open [t_start, t_end) ownership so exact boundaries belong to
    # the later segment; the last segment is closed at t_k.
    for seg in plan.segments:
        if t < seg.t_end:
            return seg
    return plan.segments[-1]


def evaluate(plan: KickPlan, t: float, hook: SampleHook | None = None) -> TrajectorySample:
    """Kick state at time t in [0, t_k].

    Locates the containing segment by linear scan (plans have at most a
    handful of segments) and applies the constant-acceleration equations
    of motion from the segment start.
    """
    if not plan.segments:
        raise ValueError("plan has no segments to evaluate")
    if not 0.0 <= t <= plan.t_k:
        raise ValueError(f"t={t} outside the plan interval [0, {plan.t_k}]")
    seg = _segment_at(plan, t)
    tau = t - seg.t_start
    theta = seg.theta_at(tau)
    omega = seg.omega_at(tau)
    x_o = plan.swing_radius * math.sin(theta)
    z_o = plan.swing_radius * (1.0 - math.cos(theta))
    sample = TrajectorySample(
        t=t, theta_l=theta, omega_l=omega, alpha=seg.alpha,
        x_o=x_o, z_o=z_o, phase=seg.phase,
    )
    return hook(sample) if hook is not None else sample


def sample_trajectory(
    plan: KickPlan, dt: float, hook: SampleHook | None = None
) -> list[TrajectorySample]:
    """Sample the plan on a uniform grid plus every segment boundary.

    Samples at t = 0, dt, 2 dt, ... and always includes t_k and the exact
    segment boundary times; timestamps are strictly increasing.
    """
    if not dt > 0.0:
        raise ParameterError(f"dt must be positive (got {dt})")
    times = {i * dt for i in range(int(math.floor(plan.t_k / dt)) + 1)}
    times.update(seg.t_start for seg in plan.segments)
    times.add(plan.t_k)
    grid = sorted(t for t in times if 0.0 <= t <= plan.t_k)
    return [evaluate(plan, t, hook) for t in grid]
