"""Solar radio emission model.

The sun contributes three radio-noise components at a receiving antenna:
a quiet background from the featureless solar disc, a slowly varying part
driven by plage activity, and occasional flare bursts.  All flux densities
here are in solar flux units (SFU, 1e-22 W m^-2 Hz^-1); frequencies are
carrier frequencies in GHz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

QUIET_SUN_FLOOR_SFU = 70.0     # activity index at which the varying part vanishes
F10_SANITY_CAP_SFU = 500.0     # above the historically observed range
LARGEST_BURST_SFU = 10_000.0   # upper-bound flare flux
QUIET_FIT_MAX_GHZ = 20.0       # calibration range of the quiet-sun quadratic


class BurstPolicy(Enum):
    """Flare handling: no burst, or the upper-bound flare value."""

    QUIET = "quiet"
    UPPER_BOUND_FLARE = "upper-bound-flare"


@dataclass(frozen=True)
class SolarActivityIndex:
    """10.7 cm (2.8 GHz) solar flux reading, the F10.7 activity proxy."""

    f10_sfu: float

    def __post_init__(self) -> None:
        if self.f10_sfu < QUIET_SUN_FLOOR_SFU:
            raise ValueError(
                f"f10_sfu={self.f10_sfu} below the quiet-sun floor of "
                f"{QUIET_SUN_FLOOR_SFU} SFU (would imply negative varying flux)"
            )
        if self.f10_sfu > F10_SANITY_CAP_SFU:
            raise ValueError(
                f"f10_sfu={self.f10_sfu} above the {F10_SANITY_CAP_SFU} SFU sanity bound"
            )

    @property
    def excess_sfu(self) -> float:
        return self.f10_sfu - QUIET_SUN_FLOOR_SFU


@dataclass(frozen=True)
class SolarFlux:
    """Per-component and integrated solar flux density at one frequency.

    quiet_extrapolated marks results where the quiet-sun quadratic was
    evaluated above its 1-20 GHz fit range; values there lean high and
    reports footnote them.
    """

    quiet_sq: float
    varying_sv: float
    burst_sb: float
    integrated_s: float
    frequency_ghz: float
    quiet_extrapolated: bool = False


def _check_frequency(frequency_ghz: float) -> None:
    if frequency_ghz <= 0:
        raise ValueError(f"frequency must be positive, got {frequency_ghz} GHz")


def _as_index(index: SolarActivityIndex | float) -> SolarActivityIndex:
    if isinstance(index, SolarActivityIndex):
        return index
    return SolarActivityIndex(float(index))


def quiet_flux(frequency_ghz: float) -> float:
    """Quiet-sun component, 26.4 + 12.4 f + 1.11 f^2 SFU.

    The quadratic is fitted for 1-20 GHz and grows too fast above that, but
    it is applied at any positive frequency; callers can consult
    QUIET_FIT_MAX_GHZ to footnote extrapolated values.
    """
    _check_frequency(frequency_ghz)
    f = frequency_ghz
    return 26.4 + 12.4 * f + 1.11 * f * f


def varying_flux(frequency_ghz: float, index: SolarActivityIndex | float) -> float:
    """Slowly varying component, 0.64 (F10 - 70) f^0.4 / (1 + 1.56 ln(f/2.9)^2).

    Natural logarithm; scales linearly with the activity excess above the
    70 SFU quiet floor, so it vanishes at F10 = 70.
    """
    _check_frequency(frequency_ghz)
    idx = _as_index(index)
    f = frequency_ghz
    return 0.64 * idx.excess_sfu * f**0.4 / (1.0 + 1.56 * math.log(f / 2.9) ** 2)


def burst_flux(
    policy: BurstPolicy = BurstPolicy.QUIET,
    override_sfu: float | None = None,
) -> float:
    """Burst component under the given policy: 0 SFU quiet, 10000 SFU flare.

    override_sfu accepts an arbitrary research value, clamped to
    [0, LARGEST_BURST_SFU].
    """
    if override_sfu is not None:
        return min(max(float(override_sfu), 0.0), LARGEST_BURST_SFU)
    if policy is BurstPolicy.QUIET:
        return 0.0
    if policy is BurstPolicy.UPPER_BOUND_FLARE:
        return LARGEST_BURST_SFU
    raise ValueError(f"unknown burst policy: {policy!r}")


def integrated_flux(
    frequency_ghz: float,
    index: SolarActivityIndex | float,
    policy: BurstPolicy = BurstPolicy.QUIET,
    burst_override_sfu: float | None = None,
) -> SolarFlux:
    """All three components plus their sum at one carrier frequency."""
    sq = quiet_flux(frequency_ghz)
    sv = varying_flux(frequency_ghz, index)
    sb = burst_flux(policy, burst_override_sfu)
    return SolarFlux(
        quiet_sq=sq,
        varying_sv=sv,
        burst_sb=sb,
        integrated_s=sq + sv + sb,
        frequency_ghz=frequency_ghz,
        quiet_extrapolated=frequency_ghz > QUIET_FIT_MAX_GHZ,
    )


def inclusive_grid(start: float, stop: float, step: float) -> list[float]:
    """Evenly spaced grid including both endpoints (stop within float slack)."""
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"inverted range: [{start}, {stop}]")
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(count + 1)]


def flux_curve(
    f_min_ghz: float,
    f_max_ghz: float,
    step_ghz: float,
    index: SolarActivityIndex | float,
    policy: BurstPolicy = BurstPolicy.QUIET,
) -> list[SolarFlux]:
    """Sweep integrated_flux over an inclusive frequency grid."""
    if f_min_ghz <= 0:
        raise ValueError(f"f_min must be positive, got {f_min_ghz} GHz")
    idx = _as_index(index)
    grid = inclusive_grid(f_min_ghz, f_max_ghz, step_ghz)
    return [integrated_flux(f, idx, policy) for f in grid]
