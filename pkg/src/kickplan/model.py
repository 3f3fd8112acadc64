"""Domain types for the four-phase in-walk kick planner.

Units are SI throughout the library: meters, seconds, radians,
newton-meters. The swing angle theta_l is the sagittal leg rotation about
the hip relative to the nominal gait pose. Positive theta_l points in the
kick direction, so the backward wind-up of the prepare phase goes
negative. Degrees appear only at the CLI config boundary.

All types are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class ParameterError(ValueError):
    """A physical parameter violates one of its invariants."""


class Phase(enum.Enum):
    """Kick phase label.

    PREPARE: backward wind-up to the pre-swing angle.
    SWING: accelerated strike toward the ball (includes any constant
        velocity coast to the ball when no wind-up is needed).
    CONTINUE: constant-velocity follow-through past the ball.
    RETURN: braking past the peak angle and the swing back to the gait pose.
    """

    PREPARE = "prepare"
    SWING = "swing"
    CONTINUE = "continue"
    RETURN = "return"


@dataclass(frozen=True)
class KickParams:
    """Physical inputs of a kick plan.

    Attributes
    ----------
    r_b : float
        Ball radius [m].
    x_b : float
        Horizontal distance from the foot tip to the ball center [m].
    z_h : float
        Average hip-origin height over a gait cycle [m].
    tau_h : float
        Available hip torque [N m].
    omega_h_max : float
        Maximum hip angular velocity [rad/s].
    theta_ext : float
        Follow-through extension angle past the ball contact angle [rad], >= 0.
    theta_min, theta_max : float
        Hip swing-angle limits [rad]; theta_min < 0 < theta_max.
    f_nominal : float
        Nominal gait frequency [Hz], restored after the kick step.
    omega_k_req : float or None
        Requested kick velocity [rad/s]; None means "use the maximum
        feasible velocity".
    """

    r_b: float
    x_b: float
    z_h: float
    tau_h: float
    omega_h_max: float
    theta_ext: float
    theta_min: float
    theta_max: float
    f_nominal: float
    omega_k_req: float | None = None

    def __post_init__(self) -> None:
        validate_params(self)


def validate_params(p: KickParams) -> KickParams:
    """Check every KickParams invariant, raising on the first violation.

    Returns the parameters unchanged when they are all satisfied. Each
    violation raises a ParameterError naming the offending field.
    """
    if not p.r_b > 0.0:
        raise ParameterError(f"r_b must be positive (got {p.r_b})")
    if not p.z_h > p.r_b:
        raise ParameterError(f"z_h must exceed r_b (z_h={p.z_h}, r_b={p.r_b})")
    if not p.x_b > p.r_b:
        raise ParameterError(f"x_b must exceed r_b (x_b={p.x_b}, r_b={p.r_b})")
    if not p.tau_h > 0.0:
        raise ParameterError(f"tau_h must be positive (got {p.tau_h})")
    if not p.omega_h_max > 0.0:
        raise ParameterError(f"omega_h_max must be positive (got {p.omega_h_max})")
    if not p.theta_ext >= 0.0:
        raise ParameterError(f"theta_ext must be non-negative (got {p.theta_ext})")
    if not p.theta_min < 0.0:
        raise ParameterError(f"theta_min must be negative (got {p.theta_min})")
    if not p.theta_max > 0.0:
        raise ParameterError(f"theta_max must be positive (got {p.theta_max})")
    if not p.f_nominal > 0.0:
        raise ParameterError(f"f_nominal must be positive (got {p.f_nominal})")
    if p.omega_k_req is not None and not p.omega_k_req > 0.0:
        raise ParameterError(
            f"omega_k_req must be positive when given (got {p.omega_k_req})"
        )
    return p


@dataclass(frozen=True)
class LegMassModel:
    """Point-mass decomposition of the kicking leg about the hip pivot.

    masses holds (mass [kg], distance from the hip pivot [m]) pairs. A
    five-mass decomposition is the usual convention but any number of
    point masses is accepted. At least one mass must sit away from the
    pivot, otherwise the leg inertia degenerates to zero.
    """

    masses: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        pairs = tuple((float(m), float(d)) for m, d in self.masses)
        object.__setattr__(self, "masses", pairs)
        if not pairs:
            raise ParameterError("masses must contain at least one point mass")
        for i, (m, d) in enumerate(pairs):
            if not m > 0.0:
                raise ParameterError(f"masses[{i}]: mass must be positive (got {m})")
            if not d >= 0.0:
                raise ParameterError(
                    f"masses[{i}]: distance must be non-negative (got {d})"
                )
        if not any(d > 0.0 for _, d in pairs):
            raise ParameterError(
                "masses: at least one point mass must sit away from the hip pivot"
            )


@dataclass(frozen=True)
class PhaseSegment:
    """One constant-acceleration interval of the swing-angle profile.

    State within the segment follows the constant-acceleration equations
    of motion from (theta_start, omega_start) at local time
    tau = t - t_start.
    """

    phase: Phase
    t_start: float      # [s]
    duration: float     # [s]
    theta_start: float  # [rad]
    omega_start: float  # [rad/s]
    alpha: float        # [rad/s^2]

    def __post_init__(self) -> None:
        if not self.duration >= 0.0:
            raise ParameterError(
                f"segment duration must be non-negative (got {self.duration})"
            )

    @property
    def t_end(self) -> float:
        return self.t_start + self.duration

    def theta_at(self, tau: float) -> float:
        """Swing angle at local time tau into the segment."""
        return self.theta_start + self.omega_start * tau + 0.5 * self.alpha * tau * tau

    def omega_at(self, tau: float) -> float:
        """Swing velocity at local time tau into the segment."""
        return self.omega_start + self.alpha * tau

    @property
    def theta_end(self) -> float:
        return self.theta_at(self.duration)

    @property
    def omega_end(self) -> float:
        return self.omega_at(self.duration)


PLAN_SCHEMA_VERSION = 1

_PLAN_SCALARS = (
    "alpha_k", "omega_k", "theta_k", "theta_sw", "theta_pre", "theta_ret",
    "theta_post", "t_pre", "t_sw", "t_ext", "t_ret", "t_k", "f_g",
    "swing_radius",
)


@dataclass(frozen=True)
class KickPlan:
    """A fully solved kick: phase angles, durations, and the segment profile.

    Scalar fields mirror the closed-form solution; segments is the ordered
    constant-acceleration profile tiling [0, t_k]. t_sw is the complete
    swing-phase duration, including the constant-velocity coast to the
    ball in the no-wind-up branch, so the phase durations always sum to
    t_k. swing_radius is the hip-to-foot-tip circle radius z_h - r_b used
    to convert swing angles to foot offsets.
    """

    alpha_k: float      # [rad/s^2]
    omega_k: float      # [rad/s]
    theta_k: float      # [rad]
    theta_sw: float     # [rad]
    theta_pre: float    # [rad]
    theta_ret: float    # [rad]
    theta_post: float   # [rad]
    t_pre: float        # [s]
    t_sw: float         # [s]
    t_ext: float        # [s]
    t_ret: float        # [s]
    t_k: float          # [s]
    f_g: float          # [Hz]
    swing_radius: float  # [m]
    segments: tuple[PhaseSegment, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        for name in ("t_pre", "t_sw", "t_ext", "t_ret", "t_k"):
            if not getattr(self, name) >= 0.0:
                raise ParameterError(
                    f"{name} must be non-negative (got {getattr(self, name)})"
                )

    @property
    def t_impact(self) -> float:
        """Time of ball contact: end of the swing phase [s]."""
        return self.t_pre + self.t_sw

    def to_dict(self) -> dict:
        """Serialize to a plain dict (the JSON plan-file schema)."""
        return {
            "schema_version": PLAN_SCHEMA_VERSION,
            **{name: getattr(self, name) for name in _PLAN_SCALARS},
            "segments": [
                {
                    "phase": seg.phase.value,
                    "t_start": seg.t_start,
                    "duration": seg.duration,
                    "theta_start": seg.theta_start,
                    "omega_start": seg.omega_start,
                    "alpha": seg.alpha,
                }
                for seg in self.segments
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KickPlan":
        """Rebuild a plan from its dict form, checking the schema version."""
        version = data.get("schema_version")
        if version != PLAN_SCHEMA_VERSION:
            raise ParameterError(
                f"unsupported plan schema_version {version!r} "
                f"(expected {PLAN_SCHEMA_VERSION})"
            )
        segments = tuple(
            PhaseSegment(
                phase=Phase(seg["phase"]),
                t_start=float(seg["t_start"]),
                duration=float(seg["duration"]),
                theta_start=float(seg["theta_start"]),
                omega_start=float(seg["omega_start"]),
                alpha=float(seg["alpha"]),
            )
            for seg in data["segments"]
        )
        scalars = {name: float(data[name]) for name in _PLAN_SCALARS}
        return cls(segments=segments, **scalars)


@dataclass(frozen=True)
class TrajectorySample:
    """Kick state at one query time.

    x_o and z_o are the sagittal foot-tip offsets from the nominal gait
    pose; the tip moves on a circle of radius z_h - r_b about the hip.
    """

    t: float        # [s]
    theta_l: float  # [rad]
    omega_l: float  # [rad/s]
    alpha: float    # [rad/s^2]
    x_o: float      # [m]
    z_o: float      # [m]
    phase: Phase
