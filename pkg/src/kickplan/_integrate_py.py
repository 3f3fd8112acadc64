"""Pure-Python twin of the compiled integration kernel in _integrate.pyx.

The step loop is kept in exact step-for-step correspondence with the
compiled version so both backends produce the same floating-point states.
"""

from __future__ import annotations


def integrate_segments(n_full, rem, alphas, dt, theta0, omega0,
                       t_out, theta_out, omega_out):
    """Fill the output arrays with the integrated (t, theta, omega) series.

    Each segment i runs n_full[i] steps of size dt followed by one step of
    rem[i] when positive, landing exactly on the segment boundary. The
    velocity is updated before the position in every step. Returns the
    number of samples written (including the initial state at index 0).
    """
    t = 0.0
    theta = float(theta0)
    omega = float(omega0)
    dt = float(dt)
    t_out[0] = t
    theta_out[0] = theta
    omega_out[0] = omega
    k = 1
    for i in range(len(alphas)):
        a = float(alphas[i])
        for _ in range(int(n_full[i])):
            omega += a * dt
            theta += omega * dt
            t += dt
            t_out[k] = t
            theta_out[k] = theta
            omega_out[k] = omega
            k += 1
        h = float(rem[i])
        if h > 0.0:
            omega += a * h
            theta += omega * h
            t += h
            t_out[k] = t
            theta_out[k] = theta
            omega_out[k] = omega
            k += 1
    return k
