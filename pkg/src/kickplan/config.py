"""Flat key = value config files for the CLI.

One documented schema, versioned by the schema_version key. Angles are
written in degrees and carry an explicit _deg suffix; they are converted
to radians here, once, at the boundary. Everything else is SI. Lines
starting with # (or trailing # comments) are ignored.

See configs/nimbro_op2x.cfg for a complete example.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import KickParams, LegMassModel


class ConfigError(ValueError):
    """The config file is missing, malformed, or fails validation."""


SCHEMA_VERSION = 1


@dataclass(frozen=True)
class KickConfig:
    """Parsed config: planner inputs plus launch-estimator settings."""

    params: KickParams
    leg: LegMassModel
    reduce_acceleration: bool
    ball_mass: float             # [kg]
    effective_strike_mass: float  # [kg]
    restitution: float
    launch_angle: float          # [rad]


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from None


def _parse_float_list(key: str, raw: str) -> list[float]:
    items = [item.strip() for item in raw.split(",") if item.strip()]
    if not items:
        raise ConfigError(f"{key}: expected a comma-separated list of numbers")
    return [_parse_float(key, item) for item in items]


def _parse_bool(key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ConfigError(f"{key}: expected true or false, got {raw!r}")


_REQUIRED_KEYS = (
    "schema_version",
    "ball_radius_m",
    "ball_distance_m",
    "hip_height_m",
    "hip_torque_nm",
    "hip_velocity_max_rps",
    "extension_angle_deg",
    "hip_angle_min_deg",
    "hip_angle_max_deg",
    "nominal_step_freq_hz",
    "leg_masses_kg",
    "leg_mass_offsets_m",
)

_OPTIONAL_KEYS = (
    "kick_velocity_rps",
    "reduce_acceleration",
    "ball_mass_kg",
    "effective_strike_mass_kg",
    "restitution",
    "launch_angle_deg",
)


def parse_config(text: str, source: str = "<config>") -> KickConfig:
    """Parse config text into a KickConfig.

    Raises ConfigError naming the offending key or line for unknown keys,
    duplicates, type errors, and missing required keys. Field-level
    validation errors from the domain types propagate as ParameterError.
    """
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in _REQUIRED_KEYS and key not in _OPTIONAL_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown config key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate config key {key!r}")
        values[key] = raw

    missing = [key for key in _REQUIRED_KEYS if key not in values]
    if missing:
        raise ConfigError(f"{source}: missing required config keys: {', '.join(missing)}")

    version = _parse_float("schema_version", values["schema_version"])
    if version != SCHEMA_VERSION:
        raise ConfigError(
            f"schema_version: unsupported version {values['schema_version']} "
            f"(expected {SCHEMA_VERSION})"
        )

    masses = _parse_float_list("leg_masses_kg", values["leg_masses_kg"])
    offsets = _parse_float_list("leg_mass_offsets_m", values["leg_mass_offsets_m"])
    if len(masses) != len(offsets):
        raise ConfigError(
            "leg_masses_kg and leg_mass_offsets_m must have the same length "
            f"(got {len(masses)} and {len(offsets)})"
        )
    leg = LegMassModel(masses=tuple(zip(masses, offsets)))

    omega_k_req = None
    if "kick_velocity_rps" in values and values["kick_velocity_rps"]:
        omega_k_req = _parse_float("kick_velocity_rps", values["kick_velocity_rps"])

    params = KickParams(
        r_b=_parse_float("ball_radius_m", values["ball_radius_m"]),
        x_b=_parse_float("ball_distance_m", values["ball_distance_m"]),
        z_h=_parse_float("hip_height_m", values["hip_height_m"]),
        tau_h=_parse_float("hip_torque_nm", values["hip_torque_nm"]),
        omega_h_max=_parse_float(
            "hip_velocity_max_rps", values["hip_velocity_max_rps"]
        ),
        theta_ext=math.radians(
            _parse_float("extension_angle_deg", values["extension_angle_deg"])
        ),
        theta_min=math.radians(
            _parse_float("hip_angle_min_deg", values["hip_angle_min_deg"])
        ),
        theta_max=math.radians(
            _parse_float("hip_angle_max_deg", values["hip_angle_max_deg"])
        ),
        f_nominal=_parse_float(
            "nominal_step_freq_hz", values["nominal_step_freq_hz"]
        ),
        omega_k_req=omega_k_req,
    )

    reduce_acceleration = False
    if "reduce_acceleration" in values:
        reduce_acceleration = _parse_bool(
            "reduce_acceleration", values["reduce_acceleration"]
        )

    # Estimator defaults: a size-5 ball and the leg's own mass as the
    # effective striking mass.
    ball_mass = 0.45
    if "ball_mass_kg" in values:
        ball_mass = _parse_float("ball_mass_kg", values["ball_mass_kg"])
    effective_strike_mass = sum(masses)
    if "effective_strike_mass_kg" in values:
        effective_strike_mass = _parse_float(
            "effective_strike_mass_kg", values["effective_strike_mass_kg"]
        )
    restitution = 0.65
    if "restitution" in values:
        restitution = _parse_float("restitution", values["restitution"])
    launch_angle = math.radians(35.0)
    if "launch_angle_deg" in values:
        launch_angle = math.radians(
            _parse_float("launch_angle_deg", values["launch_angle_deg"])
        )

    return KickConfig(
        params=params,
        leg=leg,
        reduce_acceleration=reduce_acceleration,
        ball_mass=ball_mass,
        effective_strike_mass=effective_strike_mass,
        restitution=restitution,
        launch_angle=launch_angle,
    )


def load_config(path: str) -> KickConfig:
    """Read and parse a config file."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    return parse_config(text, source=path)
