# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled semi-implicit Euler kernel for piecewise-constant acceleration.

Kept in exact step-for-step correspondence with the pure-Python twin in
_integrate_py so both backends produce the same floating-point states.
"""

from libc.stdint cimport int64_t


def integrate_segments(const int64_t[:] n_full, const double[:] rem,
                       const double[:] alphas, double dt,
                       double theta0, double omega0,
                       double[:] t_out, double[:] theta_out, double[:] omega_out):
    """Fill the output arrays with the integrated (t, theta, omega) series.

    Each segment i runs n_full[i] steps of size dt followed by one step of
    rem[i] when positive, landing exactly on the segment boundary. The
    velocity is updated before the position in every step. Returns the
    number of samples written (including the initial state at index 0).
    """
    cdef double t = 0.0
    cdef double theta = theta0
    cdef double omega = omega0
    cdef double a, h
    cdef Py_ssize_t i, j, n
    cdef Py_ssize_t k = 1

    t_out[0] = t
    theta_out[0] = theta
    omega_out[0] = omega
    for i in range(alphas.shape[0]):
        a = alphas[i]
        n = n_full[i]
        for j in range(n):
            omega += a * dt
            theta += omega * dt
            t += dt
            t_out[k] = t
            theta_out[k] = theta
            omega_out[k] = omega
            k += 1
        h = rem[i]
        if h > 0.0:
            omega += a * h
            theta += omega * h
            t += h
            t_out[k] = t
            theta_out[k] = theta
            omega_out[k] = omega
            k += 1
    return k
