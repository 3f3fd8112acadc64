#!/usr/bin/env python3
"""Benchmark the compiled integration kernel against the pure-Python twin.

Integrates the bundled fixture kick with both backends at the oracle step
size and reports throughput, speedup, and the worst state difference
between the two implementations.

Usage: python benchmarks/bench_backends.py [--dt 1e-5] [--repeat 5]
"""

import argparse
import importlib
import time
from pathlib import Path

import numpy as np

from kickplan import _integrate_py, plan_kick
from kickplan.backend import step_layout
from kickplan.config import load_config

REPO = Path(__file__).resolve().parents[1]
FIXTURE = REPO / "configs" / "nimbro_op2x.cfg"


def load_compiled():
    try:
        return importlib.import_module("kickplan._integrate")
    except ImportError:
        return None


def run(impl, n_full, rem, alphas, dt, total, repeat):
    outputs = [np.empty(total) for _ in range(3)]
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        impl.integrate_segments(n_full, rem, alphas, dt, 0.0, 0.0, *outputs)
        best = min(best, time.perf_counter() - start)
    return best, outputs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dt", type=float, default=1e-5, help="integration step [s]")
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args()

    cfg = load_config(str(FIXTURE))
    plan = plan_kick(cfg.params, cfg.leg)
    durations = [seg.duration for seg in plan.segments]
    alphas = np.array([seg.alpha for seg in plan.segments])
    n_full, rem = step_layout(durations, args.dt)
    total = 1 + int(n_full.sum()) + int(np.count_nonzero(rem))
    print(f"fixture kick: t_k = {plan.t_k:.4f} s, {len(durations)} segments, "
          f"{total - 1} integration steps at dt = {args.dt:g}")

    t_py, out_py = run(_integrate_py, n_full, rem, alphas, args.dt, total, args.repeat)
    print(f"pure python : {t_py * 1e3:9.2f} ms  ({(total - 1) / t_py / 1e6:6.2f} Msteps/s)")

    compiled = load_compiled()
    if compiled is None:
        print("compiled    : extension not built (pip install -e . rebuilds it)")
        return
    t_c, out_c = run(compiled, n_full, rem, alphas, args.dt, total, args.repeat)
    print(f"compiled    : {t_c * 1e3:9.2f} ms  ({(total - 1) / t_c / 1e6:6.2f} Msteps/s)")
    print(f"speedup     : {t_py / t_c:9.1f}x")
    worst = max(float(np.max(np.abs(a - b))) for a, b in zip(out_py, out_c))
    print(f"max |state difference| between backends: {worst:.3e}")


if __name__ == "__main__":
    main()
