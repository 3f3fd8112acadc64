import math

import numpy as np
import pytest

from kickplan import KickParams, LegMassModel, leg_inertia, plan_kick


def random_kick_inputs(rng: np.random.Generator) -> tuple[KickParams, LegMassModel]:
    """Draw one always-feasible (KickParams, LegMassModel) pair.

    Draws mix forced wind-up plans, forced coast plans, and free
    maximum-feasible plans so both planner branches are well represented.
    Accelerations stay in [5, 80] rad/s^2 so the numeric oracle's
    first-order error remains well inside its tolerance, and theta_min is
    placed below any possible wind-up so every draw plans successfully.
    """
    r_b = rng.uniform(0.05, 0.15)
    x_b = r_b + rng.uniform(0.1, 0.7)
    z_h = r_b + rng.uniform(0.2, 0.8)
    theta_k = math.atan2(z_h - r_b, x_b - r_b)
    n_masses = int(rng.integers(3, 7))
    leg = LegMassModel(
        masses=tuple(
            (rng.uniform(0.2, 2.0), rng.uniform(0.05, 0.6)) for _ in range(n_masses)
        )
    )
    i_l = leg_inertia(leg)
    theta_ext = rng.uniform(0.0, 0.3)

    mode = rng.random()
    if mode < 0.4:
        # forced wind-up: request a velocity whose swing distance overshoots
        # theta_k, with both caps placed safely above the request
        alpha_k = rng.uniform(5.0, 18.0)
        speed_ratio = rng.uniform(1.05, 1.6)
    elif mode < 0.8:
        # forced coast: the swing distance falls short of theta_k
        alpha_k = rng.uniform(5.0, 80.0)
        speed_ratio = rng.uniform(0.3, 0.95)
    else:
        # free: no requested velocity, planner uses the maximum feasible
        alpha_k = rng.uniform(5.0, 80.0)
        speed_ratio = None
    tau_h = alpha_k * i_l

    if speed_ratio is None:
        omega_k_req = None
        omega_h_max = rng.uniform(1.0, 8.0)
        headroom = rng.uniform(0.05, 1.0)
    else:
        omega_k_req = speed_ratio * math.sqrt(2.0 * alpha_k * theta_k)
        if speed_ratio < 1.0:
            omega_k_req = min(omega_k_req, 9.0)  # keep hip speeds plausible
        omega_h_max = omega_k_req * rng.uniform(1.02, 1.4)
        headroom = (
            omega_k_req**2 / (2.0 * alpha_k) * rng.uniform(1.05, 1.6)
        )
    theta_max = theta_k + theta_ext + headroom

    requested = omega_h_max if omega_k_req is None else omega_k_req
    omega_k = min(requested, omega_h_max, math.sqrt(2.0 * alpha_k * headroom))
    theta_pre = theta_k - omega_k * omega_k / (2.0 * alpha_k)
    theta_min = min(theta_pre, 0.0) - rng.uniform(0.01, 0.5)

    params = KickParams(
        r_b=r_b,
        x_b=x_b,
        z_h=z_h,
        tau_h=tau_h,
        omega_h_max=omega_h_max,
        theta_ext=theta_ext,
        theta_min=theta_min,
        theta_max=theta_max,
        f_nominal=rng.uniform(1.5, 3.0),
        omega_k_req=omega_k_req,
    )
    return params, leg


def reference_inputs() -> tuple[KickParams, LegMassModel]:
    """The worked reference kick: alpha_k = 20, omega_k = 6, theta_ext = 0.2."""
    params = KickParams(
        r_b=0.1,
        x_b=0.6,
        z_h=0.6,
        tau_h=10.0,
        omega_h_max=8.0,
        theta_ext=0.2,
        theta_min=-1.2,
        theta_max=2.1,
        f_nominal=2.4,
        omega_k_req=6.0,
    )
    leg = LegMassModel(masses=((2.0, 0.5),))  # I_l = 0.5 exactly
    return params, leg


@pytest.fixture
def reference_plan():
    params, leg = reference_inputs()
    return plan_kick(params, leg)
