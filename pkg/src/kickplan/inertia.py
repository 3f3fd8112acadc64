"""Kicking-leg inertia about the hip pivot and the torque-limited acceleration."""

from __future__ import annotations

from .model import LegMassModel, ParameterError


def leg_inertia(model: LegMassModel) -> float:
    """Moment of inertia of the point-mass leg about the hip pivot [kg m^2].

    Sum of m_i * d_i^2 over the point masses; strictly positive for any
    valid model.
    """
    return sum(m * d * d for m, d in model.masses)


def max_kick_acceleration(tau_h: float, i_l: float) -> float:
    """Peak swing acceleration tau_h / i_l available at the hip [rad/s^2].

    tau_h is the hip torque [N m] and i_l the leg inertia about the hip
    pivot [kg m^2]; both must be positive.
    """
    if not tau_h > 0.0:
        raise ParameterError(f"tau_h must be positive (got {tau_h})")
    if not i_l > 0.0:
        raise ParameterError(f"leg inertia must be positive (got {i_l})")
    return tau_h / i_l
