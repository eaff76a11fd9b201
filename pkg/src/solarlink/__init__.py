"""Solar-noise-aware mmWave link budgets and path loss model fitting.

The package quantifies how solar radio emissions erode the carrier-to-noise
ratio of outdoor 60 GHz links, propagates that erosion into path loss
exponents, fits log-distance and floating-intercept models to measurement
campaigns, and generates seeded synthetic campaigns for validation.
"""

from .campaign import (
    Campaign,
    IngestResult,
    ReferenceFixture,
    Scenario,
    apply_solar_inflation,
    generate_campaign,
    ingest_csv,
    load_fixture,
    log_uniform_distances,
    write_campaign_csv,
)
from .linkbudget import (
    AntennaConfig,
    CnrProfile,
    CoverageRange,
    LinkConfig,
    aperture,
    cnr_db,
    dcnr_curve,
    degradation_profile,
    delta_cnr,
    esun_field_magnitude,
    max_range,
    received_power_dbm,
    thermal_noise_dbm,
    wavelength,
)
from .pathloss import (
    FimFit,
    FitError,
    LdmFit,
    PathLossSample,
    fim_predict,
    fit_fim,
    fit_ldm,
    fspl_db,
    ldm_predict,
    ple_increase_percent,
)
from .solar import (
    BurstPolicy,
    SolarActivityIndex,
    SolarFlux,
    burst_flux,
    flux_curve,
    integrated_flux,
    quiet_flux,
    varying_flux,
)
from .units import (
    CONSTANTS,
    PhysicalConstants,
    db_from_linear,
    dbm_dbw_convert,
    kelvin_from_celsius,
    linear_from_db,
)

__version__ = "0.1.0"
