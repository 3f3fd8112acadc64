"""Integration-kernel backend selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python twin takes over transparently. Set KICKPLAN_PURE_PYTHON=1 in
the environment to force the fallback (used by the backend benchmark).
"""

from __future__ import annotations

import math
import os

import numpy as np

from . import _integrate_py

if os.environ.get("KICKPLAN_PURE_PYTHON"):
    _impl = _integrate_py
    BACKEND = "python"
else:
    try:
        from . import _integrate as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _integrate_py
        BACKEND = "python"


def step_layout(durations, dt: float) -> tuple[np.ndarray, np.ndarray]:
    """Split each duration into full dt steps plus one shortened remainder.

    Returns (n_full, rem) arrays: n_full[i] whole steps of dt, then a
    single step of rem[i] when positive, so integration lands exactly on
    every segment boundary. Remainders below dt * 1e-12 are treated as
    exact multiples and dropped.
    """
    durations = np.asarray(durations, dtype=float)
    n_full = np.empty(durations.shape[0], dtype=np.int64)
    rem = np.empty(durations.shape[0], dtype=float)
    for i, d in enumerate(durations):
        n = math.floor(d / dt)
        r = d - n * dt
        if r < 0.0:  # quotient rounded past the boundary
            n -= 1
            r = d - n * dt
        if r <= dt * 1e-12:
            r = 0.0
        n_full[i] = n
        rem[i] = r
    return n_full, rem


def integrate_segments(durations, alphas, theta0: float, omega0: float,
                       dt: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Semi-implicit Euler sweep of a piecewise-constant acceleration signal.

    durations and alphas describe the acceleration profile segment by
    segment; integration starts from (theta0, omega0) at t = 0. Returns
    (t, theta, omega) arrays that include the initial state and one entry
    per step, with segment boundaries hit exactly via a shortened final
    substep per segment.
    """
    if not dt > 0.0:
        raise ValueError(f"dt must be positive (got {dt})")
    alphas = np.asarray(alphas, dtype=float)
    n_full, rem = step_layout(durations, dt)
    total = 1 + int(n_full.sum()) + int(np.count_nonzero(rem))
    t = np.empty(total)
    theta = np.empty(total)
    omega = np.empty(total)
    written = _impl.integrate_segments(
        n_full, rem, alphas, dt, theta0, omega0, t, theta, omega
    )
    assert written == total
    return t, theta, omega
