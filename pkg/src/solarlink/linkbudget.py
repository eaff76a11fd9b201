"""Link budget arithmetic for solar-noise-affected radio links.

Covers antenna aperture, the CNR drop caused by solar radio flux entering
the receive antenna, thermal noise, received power, distance-resolved CNR
degradation profiles, coverage range, and the incident solar field
magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .pathloss import fspl_db
from .solar import (
    BurstPolicy,
    SolarActivityIndex,
    SolarFlux,
    integrated_flux,
)
from .units import (
    CONSTANTS,
    dbw_from_dbm,
    linear_from_db,
)

# Apparent optical diameter of the solar disc.  The narrow-beam CNR formula
# strictly assumes the antenna beam is narrower than this; practical mmWave
# horns are wider and the formula is applied regardless, so reports flag it.
SOLAR_DISC_DIAMETER_DEG = 0.53


def wavelength(frequency_ghz: float) -> float:
    """Carrier wavelength in meters."""
    if frequency_ghz <= 0:
        raise ValueError(f"frequency must be positive, got {frequency_ghz} GHz")
    return CONSTANTS.speed_of_light_c / (frequency_ghz * 1e9)


def aperture(frequency_ghz: float, gain_dbi: float) -> float:
    """Effective antenna aperture (lambda^2 / 4 pi) G in m^2."""
    lam = wavelength(frequency_ghz)
    return lam * lam / (4.0 * math.pi) * linear_from_db(gain_dbi)


@dataclass(frozen=True)
class AntennaConfig:
    """Directional antenna described by its gain and half-power beamwidth."""

    gain_dbi: float
    hpbw_deg: float

    def __post_init__(self) -> None:
        if self.hpbw_deg <= 0:
            raise ValueError(f"beamwidth must be positive, got {self.hpbw_deg} deg")

    def aperture_m2(self, frequency_ghz: float) -> float:
        return aperture(frequency_ghz, self.gain_dbi)

    @property
    def wide_beam(self) -> bool:
        """True when the beam exceeds the solar disc diameter."""
        return self.hpbw_deg > SOLAR_DISC_DIAMETER_DEG


@dataclass(frozen=True)
class LinkConfig:
    """Carrier, power, antennas, temperature, bandwidth, reference distance."""

    frequency_ghz: float
    tx_power_dbm: float
    tx_antenna: AntennaConfig
    rx_antenna: AntennaConfig
    system_temp_k: float
    bandwidth_hz: float
    reference_distance_m: float

    def __post_init__(self) -> None:
        if self.frequency_ghz <= 0:
            raise ValueError(f"frequency must be positive, got {self.frequency_ghz} GHz")
        if self.bandwidth_hz < 1:
            raise ValueError(f"bandwidth must be at least 1 Hz, got {self.bandwidth_hz}")
        if self.system_temp_k <= 0:
            raise ValueError(f"system temperature must be positive, got {self.system_temp_k} K")
        if self.reference_distance_m <= 0:
            raise ValueError(
                f"reference distance must be positive, got {self.reference_distance_m} m"
            )

    @property
    def wavelength_m(self) -> float:
        return wavelength(self.frequency_ghz)

    @property
    def tx_aperture_m2(self) -> float:
        return self.tx_antenna.aperture_m2(self.frequency_ghz)

    @property
    def rx_aperture_m2(self) -> float:
        return self.rx_antenna.aperture_m2(self.frequency_ghz)


@dataclass(frozen=True)
class CnrRow:
    """One distance point of a CNR degradation profile."""

    distance_m: float
    prec_dbw: float
    cnr_db: float
    pct_degradation: float
    cumulative_avg_pct: float


@dataclass(frozen=True)
class CnrProfile:
    """Distance-resolved CNR degradation under a fixed solar flux."""

    rows: tuple[CnrRow, ...]
    delta_cnr_db: float


@dataclass(frozen=True)
class CoverageRange:
    """max_range result; the flag marks a threshold unreachable even at d0."""

    distance_m: float
    out_of_coverage_at_reference: bool = False


@dataclass(frozen=True)
class DcnrSeries:
    """CNR-degradation grid: values[i][j] at aet_db[i], frequencies_ghz[j]."""

    aet_db: tuple[float, ...]
    frequencies_ghz: tuple[float, ...]
    values_db: tuple[tuple[float, ...], ...]


def delta_cnr(
    flux: SolarFlux | float,
    frequency_ghz: float,
    rx_gain_dbi: float,
    system_temp_k: float,
) -> float:
    """Decrease in CNR caused by solar flux entering the receive antenna.

    Evaluates 10 log10(1 + 2 pi S A_e / (G k T Omega_s)) with S converted
    from SFU to W m^-2 Hz^-1.  The antenna gain cancels algebraically
    (A_e is proportional to G), so the result depends on the antenna only
    through the carrier wavelength.

    Args:
        flux: SolarFlux record or a plain integrated flux density in SFU
        frequency_ghz: carrier frequency in GHz
        rx_gain_dbi: receive antenna gain in dBi
        system_temp_k: system noise temperature in K

    Returns:
        CNR drop in dB; 0 when the flux is 0.
    """
    integrated_sfu = flux.integrated_s if isinstance(flux, SolarFlux) else float(flux)
    if integrated_sfu < 0:
        raise ValueError(f"integrated flux must be nonnegative, got {integrated_sfu} SFU")
    if system_temp_k <= 0:
        raise ValueError(f"system temperature must be positive, got {system_temp_k} K")
    s_si = integrated_sfu * CONSTANTS.sfu_in_si
    a_e = aperture(frequency_ghz, rx_gain_dbi)
    gain = linear_from_db(rx_gain_dbi)
    ratio = (
        2.0
        * math.pi
        * s_si
        * a_e
        / (gain * CONSTANTS.boltzmann_k * system_temp_k * CONSTANTS.sun_solid_angle_omega_s)
    )
    return 10.0 * math.log10(1.0 + ratio)


def dcnr_curve(
    frequencies_ghz: Sequence[float],
    aet_db_grid: Sequence[float],
    index: SolarActivityIndex | float,
    rx_gain_dbi: float = 24.0,
    policy: BurstPolicy = BurstPolicy.QUIET,
) -> DcnrSeries:
    """CNR degradation versus aperture-to-temperature ratio, per frequency.

    Each abscissa point is A_e/T in dB m^2/K.  Since A_e/G is fixed per
    frequency, a given A_e/T determines the system temperature once the
    antenna gain is fixed; rx_gain_dbi defaults to the 24 dBi measurement
    horns.
    """
    if not frequencies_ghz:
        raise ValueError("at least one frequency is required")
    if not aet_db_grid:
        raise ValueError("at least one A_e/T grid point is required")
    fluxes = [integrated_flux(f, index, policy) for f in frequencies_ghz]
    apertures = [aperture(f, rx_gain_dbi) for f in frequencies_ghz]
    rows = []
    for aet_db in aet_db_grid:
        aet = linear_from_db(aet_db)
        row = tuple(
            delta_cnr(flux, f, rx_gain_dbi, a_e / aet)
            for flux, f, a_e in zip(fluxes, frequencies_ghz, apertures)
        )
        rows.append(row)
    return DcnrSeries(
        aet_db=tuple(aet_db_grid),
        frequencies_ghz=tuple(frequencies_ghz),
        values_db=tuple(rows),
    )


def thermal_noise_dbm(system_temp_k: float, bandwidth_hz: float) -> float:
    """Thermal noise power 10 log10(k T B / 1 mW)."""
    if system_temp_k <= 0:
        raise ValueError(f"system temperature must be positive, got {system_temp_k} K")
    if bandwidth_hz < 1:
        raise ValueError(f"bandwidth must be at least 1 Hz, got {bandwidth_hz}")
    return 10.0 * math.log10(CONSTANTS.boltzmann_k * system_temp_k * bandwidth_hz / 1e-3)


def received_power_dbm(config: LinkConfig, path_loss_db: float) -> float:
    """P_t - PL + G_t + G_r in dBm."""
    if not math.isfinite(path_loss_db):
        raise ValueError(f"path loss must be finite, got {path_loss_db}")
    return (
        config.tx_power_dbm
        - path_loss_db
        + config.tx_antenna.gain_dbi
        + config.rx_antenna.gain_dbi
    )


def cnr_db(config: LinkConfig, path_loss_db: float) -> float:
    """Carrier-to-noise ratio: received power over thermal noise, in dB."""
    return received_power_dbm(config, path_loss_db) - thermal_noise_dbm(
        config.system_temp_k, config.bandwidth_hz
    )


def degradation_profile(
    config: LinkConfig,
    ple: float,
    distances_m: Sequence[float],
    flux: SolarFlux,
    baseline_temp_k: float | None = None,
) -> CnrProfile:
    """Distance-resolved CNR, solar degradation percentage, and running mean.

    Path loss at each distance is the free-space reference at d0 plus
    10 ple log10(d/d0) with zero shadowing.  The percentage at each row is
    100 delta_cnr / CNR; by default the CNR baseline uses the config's own
    (day-time) system temperature, matching how the degradation table is
    constructed.  Passing baseline_temp_k switches the denominator to a
    different (e.g. night-time) temperature.
    """
    if ple <= 0:
        raise ValueError(f"path loss exponent must be positive, got {ple}")
    if not distances_m:
        raise ValueError("at least one distance is required")
    d0 = config.reference_distance_m
    previous = None
    for d in distances_m:
        if d < d0:
            raise ValueError(f"distance {d} m below the reference distance {d0} m")
        if previous is not None and d <= previous:
            raise ValueError("distances must be strictly ascending")
        previous = d
    dcnr = delta_cnr(
        flux, config.frequency_ghz, config.rx_antenna.gain_dbi, config.system_temp_k
    )
    reference_loss = fspl_db(d0, config.frequency_ghz)
    baseline_noise = thermal_noise_dbm(
        baseline_temp_k if baseline_temp_k is not None else config.system_temp_k,
        config.bandwidth_hz,
    )
    rows = []
    pct_sum = 0.0
    for i, d in enumerate(distances_m, start=1):
        path_loss = reference_loss + 10.0 * ple * math.log10(d / d0)
        prec_dbm = received_power_dbm(config, path_loss)
        row_cnr = cnr_db(config, path_loss)
        baseline_cnr = prec_dbm - baseline_noise
        pct = 100.0 * dcnr / baseline_cnr
        pct_sum += pct
        rows.append(
            CnrRow(
                distance_m=d,
                prec_dbw=dbw_from_dbm(prec_dbm),
                cnr_db=row_cnr,
                pct_degradation=pct,
                cumulative_avg_pct=pct_sum / i,
            )
        )
    return CnrProfile(rows=tuple(rows), delta_cnr_db=dcnr)


def max_range(
    config: LinkConfig,
    ple: float,
    cnr_threshold_db: float,
    delta_cnr_db: float = 0.0,
) -> CoverageRange:
    """Largest distance keeping CNR - delta_cnr above the threshold.

    Closed form: d = d0 10^((CNR(d0) - delta_cnr - threshold) / (10 ple)).
    When the threshold is unreachable even at the reference distance the
    result is d0 with the out-of-coverage flag set.
    """
    if ple <= 0:
        raise ValueError(f"path loss exponent must be positive, got {ple}")
    d0 = config.reference_distance_m
    cnr_at_reference = cnr_db(config, fspl_db(d0, config.frequency_ghz))
    headroom_db = cnr_at_reference - delta_cnr_db - cnr_threshold_db
    if headroom_db < 0:
        return CoverageRange(distance_m=d0, out_of_coverage_at_reference=True)
    return CoverageRange(distance_m=d0 * 10.0 ** (headroom_db / (10.0 * ple)))


def esun_field_magnitude(solar_power_density_kw_m2: float) -> float:
    """Incident solar E-field magnitude sqrt(2 eta S_av) in V/m.

    S_av is the solar power density in kW/m^2, converted to W/m^2 before the
    square root.
    """
    if solar_power_density_kw_m2 < 0:
        raise ValueError(
            f"power density must be nonnegative, got {solar_power_density_kw_m2} kW/m^2"
        )
    return math.sqrt(
        2.0 * CONSTANTS.free_space_impedance_eta * solar_power_density_kw_m2 * 1000.0
    )
