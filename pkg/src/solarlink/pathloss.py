"""Large-scale path loss: free-space reference, log-distance and
floating-intercept models, and their least-squares fits.

The log-distance model (LDM) anchors the line to a physical reference loss
at d0 and fits only the path loss exponent n; the floating-intercept model
(FIM) fits both intercept and slope.  Shadow factors are the population RMS
of the fit residuals in dB.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .units import CONSTANTS


class FitError(ValueError):
    """Sample set cannot identify the model parameters."""


@dataclass(frozen=True)
class PathLossSample:
    """One distance-tagged path loss observation."""

    distance_m: float
    path_loss_db: float

    def __post_init__(self) -> None:
        if self.distance_m <= 0:
            raise ValueError(f"distance must be positive, got {self.distance_m} m")
        if not math.isfinite(self.path_loss_db):
            raise ValueError(f"path loss must be finite, got {self.path_loss_db}")


@dataclass(frozen=True)
class LdmFit:
    """Log-distance model parameters: PL(d) = PL(d0) + 10 n log10(d/d0)."""

    ple_n: float
    shadow_sigma_db: float
    reference_distance_m: float
    reference_loss_db: float
    sample_count: int


@dataclass(frozen=True)
class FimFit:
    """Floating-intercept model parameters: PL(d) = alpha + 10 beta log10(d)."""

    alpha_db: float
    beta_slope: float
    shadow_sigma_db: float
    sample_count: int


def fspl_db(distance_m: float, frequency_ghz: float) -> float:
    """Free-space path loss, 20 log10(4 pi d / lambda)."""
    if distance_m <= 0:
        raise ValueError(f"distance must be positive, got {distance_m} m")
    if frequency_ghz <= 0:
        raise ValueError(f"frequency must be positive, got {frequency_ghz} GHz")
    wavelength_m = CONSTANTS.speed_of_light_c / (frequency_ghz * 1e9)
    return 20.0 * math.log10(4.0 * math.pi * distance_m / wavelength_m)


def ldm_predict(distance_m: float, fit: LdmFit) -> float:
    """Mean LDM path loss in dB (shadowing excluded); defined for d >= d0."""
    if distance_m < fit.reference_distance_m:
        raise ValueError(
            f"distance {distance_m} m below the reference distance "
            f"{fit.reference_distance_m} m"
        )
    return fit.reference_loss_db + 10.0 * fit.ple_n * math.log10(
        distance_m / fit.reference_distance_m
    )


def fim_predict(distance_m: float, fit: FimFit) -> float:
    """Mean FIM path loss in dB."""
    if distance_m <= 0:
        raise ValueError(f"distance must be positive, got {distance_m} m")
    return fit.alpha_db + 10.0 * fit.beta_slope * math.log10(distance_m)


def _sample_arrays(samples: Iterable[PathLossSample]) -> tuple[np.ndarray, np.ndarray]:
    pairs = [(s.distance_m, s.path_loss_db) for s in samples]
    if not pairs:
        raise FitError("no samples")
    d = np.array([p[0] for p in pairs], dtype=float)
    pl = np.array([p[1] for p in pairs], dtype=float)
    return d, pl


def fit_ldm(
    samples: Sequence[PathLossSample],
    d0_m: float,
    reference_loss_db: float,
) -> LdmFit:
    """Least-squares PLE through the fixed reference loss at d0.

    Minimizes sum((PL_i - PL0 - 10 n x_i)^2) over n alone, with
    x_i = log10(d_i/d0), giving n = sum(x (PL - PL0)) / (10 sum(x^2)).
    Samples at exactly d0 carry no slope information (x = 0) and drop out of
    both sums; at least two distinct distances strictly beyond d0 are
    required.  Distances below d0 are rejected outright.
    """
    if d0_m <= 0:
        raise ValueError(f"reference distance must be positive, got {d0_m} m")
    d, pl = _sample_arrays(samples)
    if np.any(d < d0_m):
        raise ValueError(
            f"samples below the reference distance {d0_m} m: "
            f"{d[d < d0_m].tolist()}"
        )
    beyond = np.unique(d[d > d0_m])
    if beyond.size < 2:
        raise FitError(
            "need at least two distinct sample distances beyond the reference "
            f"distance, got {beyond.size}"
        )
    x = np.log10(d / d0_m)
    excess = pl - reference_loss_db
    n = float(np.dot(x, excess) / (10.0 * np.dot(x, x)))
    residuals = excess - 10.0 * n * x
    sigma = float(np.sqrt(np.mean(residuals**2)))
    return LdmFit(
        ple_n=n,
        shadow_sigma_db=sigma,
        reference_distance_m=d0_m,
        reference_loss_db=reference_loss_db,
        sample_count=len(d),
    )


def fit_fim(samples: Sequence[PathLossSample]) -> FimFit:
    """Ordinary least squares of PL on 10 log10(d) with a free intercept."""
    d, pl = _sample_arrays(samples)
    if np.unique(d).size < 2:
        raise FitError("need at least two distinct sample distances")
    u = 10.0 * np.log10(d)
    u_mean = u.mean()
    pl_mean = pl.mean()
    du = u - u_mean
    beta = float(np.dot(du, pl - pl_mean) / np.dot(du, du))
    alpha = float(pl_mean - beta * u_mean)
    residuals = pl - alpha - beta * u
    sigma = float(np.sqrt(np.mean(residuals**2)))
    return FimFit(
        alpha_db=alpha,
        beta_slope=beta,
        shadow_sigma_db=sigma,
        sample_count=len(d),
    )


def ple_increase_percent(ple_day: float, ple_night: float) -> float:
    """Relative PLE growth of the day value over the night baseline, in %."""
    if ple_night <= 0 or ple_day <= 0:
        raise ValueError(
            f"path loss exponents must be positive, got day={ple_day}, night={ple_night}"
        )
    return 100.0 * (ple_day - ple_night) / ple_night
