"""Command-line front end: solve, sample, check, and estimate kicks.

Exit codes are fixed for scripting: 0 success, 1 config error, 2
infeasible kick, 3 plan-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import ConfigError, KickConfig, load_config
from .model import KickPlan, ParameterError
from .planner import InfeasibleKickError, plan_kick, schedule_step_frequency
from .trajectory import sample_trajectory
from .verify import check_plan, estimate_ball_launch

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INFEASIBLE = 2
EXIT_CHECK = 3

CSV_HEADER = "t,phase,theta_l,omega_l,alpha,x_o,z_o"

_PLAN_FIELDS = (
    ("alpha_k", "rad/s^2"),
    ("omega_k", "rad/s"),
    ("theta_k", "rad"),
    ("theta_pre", "rad"),
    ("theta_sw", "rad"),
    ("theta_ret", "rad"),
    ("theta_post", "rad"),
    ("t_pre", "s"),
    ("t_sw", "s"),
    ("t_ext", "s"),
    ("t_ret", "s"),
    ("t_k", "s"),
    ("f_g", "Hz"),
)


def _fmt(value: float) -> str:
    # Fixed 6 decimals for stable golden-file diffs; scrub negative zero.
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _solve(cfg: KickConfig) -> KickPlan:
    return plan_kick(cfg.params, cfg.leg, reduce_acceleration=cfg.reduce_acceleration)


def cmd_plan(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    plan = _solve(cfg)
    for name, unit in _PLAN_FIELDS:
        print(f"{name:<10} = {_fmt(getattr(plan, name))} {unit}")
    schedule = schedule_step_frequency(plan, cfg.params.f_nominal)
    print(f"{'f_nominal':<10} = {_fmt(schedule.following_steps)} Hz (restored after the kick step)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(plan.to_dict(), fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def _sample_rows(cfg: KickConfig, dt: float) -> list[list[str]]:
    plan = _solve(cfg)
    samples = sample_trajectory(plan, dt)
    return [
        [
            _fmt(s.t), s.phase.value, _fmt(s.theta_l), _fmt(s.omega_l),
            _fmt(s.alpha), _fmt(s.x_o), _fmt(s.z_o),
        ]
        for s in samples
    ]


def cmd_sample(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    if not args.dt > 0.0:
        raise ConfigError(f"--dt must be positive (got {args.dt})")
    rows = _sample_rows(cfg, args.dt)
    if args.format == "csv":
        text = "\n".join([CSV_HEADER] + [",".join(row) for row in rows]) + "\n"
    else:
        keys = CSV_HEADER.split(",")
        records = []
        for row in rows:
            record = dict(zip(keys, row))
            for key in keys:
                if key != "phase":
                    record[key] = float(record[key])
            records.append(record)
        text = json.dumps(records, indent=2) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    if args.plan:
        try:
            with open(args.plan, encoding="utf-8") as fh:
                plan = KickPlan.from_dict(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot load plan file {args.plan}: {exc}", file=sys.stderr)
            return EXIT_CONFIG
    else:
        plan = _solve(cfg)
    report = check_plan(plan, cfg.params)
    names = ("theta_start", "omega_start", "theta_end", "omega_end")
    for name, err in zip(names, report.boundary_errors):
        print(f"boundary_{name}_residual = {err:.3e}")
    if report.continuity_residuals:
        worst_theta = max(r[0] for r in report.continuity_residuals)
        worst_omega = max(r[1] for r in report.continuity_residuals)
    else:
        worst_theta = worst_omega = 0.0
    print(f"continuity_max_dtheta = {worst_theta:.3e} rad")
    print(f"continuity_max_domega = {worst_omega:.3e} rad/s")
    print(f"max_velocity = {_fmt(report.max_velocity)} rad/s")
    print(f"max_acceleration = {_fmt(report.max_acceleration)} rad/s^2")
    if report.limit_violations:
        detail = "; ".join(
            f"{name} exceeded by {excess:.6g}" for name, excess in report.limit_violations
        )
        print(f"limit_violations = {detail}")
    else:
        print("limit_violations = none")
    print(f"result = {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_estimate(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    plan = _solve(cfg)
    estimate = estimate_ball_launch(
        plan.omega_k,
        cfg.params.z_h,
        cfg.params.r_b,
        cfg.ball_mass,
        cfg.effective_strike_mass,
        cfg.restitution,
        cfg.launch_angle,
    )
    print(f"omega_k = {_fmt(plan.omega_k)} rad/s")
    print(f"v_foot  = {_fmt(estimate.v_foot)} m/s")
    print(f"v_ball  = {_fmt(estimate.v_ball)} m/s")
    print(f"impulse = {_fmt(estimate.impulse)} kg m/s")
    print(f"range   = {_fmt(estimate.range)} m")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kickplan",
        description="Plan constraint-aware in-walk kicks and export their trajectories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="solve a kick and print its parameters")
    p_plan.add_argument("config", help="path to a kickplan config file")
    p_plan.add_argument("--out", help="also write the solved plan as JSON")
    p_plan.set_defaults(func=cmd_plan)

    p_sample = sub.add_parser("sample", help="sample the kick trajectory over time")
    p_sample.add_argument("config", help="path to a kickplan config file")
    p_sample.add_argument("--dt", type=float, default=0.01, help="sample spacing in seconds")
    p_sample.add_argument("--out", help="output file (default: stdout)")
    p_sample.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sample.set_defaults(func=cmd_sample)

    p_check = sub.add_parser("check", help="run feasibility and consistency checks")
    p_check.add_argument("config", help="path to a kickplan config file")
    p_check.add_argument("--plan", help="check a serialized plan JSON instead of re-solving")
    p_check.set_defaults(func=cmd_check)

    p_est = sub.add_parser("estimate", help="estimate the ball launch for the solved kick")
    p_est.add_argument("config", help="path to a kickplan config file")
    p_est.set_defaults(func=cmd_estimate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InfeasibleKickError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
