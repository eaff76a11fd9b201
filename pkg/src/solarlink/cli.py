"""Command line front end.

Subcommands: flux, dcnr, budget, fit, simulate, report.  Data goes to CSV
files or stdout; diagnostics go to stderr.  Exit codes: 0 success, 1 for
usage or validation problems, 2 for IO or data problems.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .campaign import (
    DISTANCE_RANGES_M,
    CsvFormatError,
    Scenario,
    apply_solar_inflation,
    generate_campaign,
    ingest_csv,
    load_fixture,
    log_uniform_distances,
    write_campaign_csv,
)
from .linkbudget import (
    SOLAR_DISC_DIAMETER_DEG,
    AntennaConfig,
    LinkConfig,
    dcnr_curve,
    degradation_profile,
)
from .pathloss import FitError, fim_predict, fit_fim, fit_ldm, fspl_db, ldm_predict, ple_increase_percent
from .solar import QUIET_FIT_MAX_GHZ, BurstPolicy, SolarActivityIndex, flux_curve, inclusive_grid, integrated_flux
from .units import ABSOLUTE_ZERO_C, kelvin_from_celsius

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

# The bundled degradation profile: free-space slope over the five reference
# distances.  Solar-inflated synthetic campaigns derive their day PLE from it.
REFERENCE_PROFILE_PLE = 2.0
REFERENCE_PROFILE_DISTANCES = (1.0, 10.0, 20.0, 50.0, 100.0)

INFLATION_NOTE = (
    "the %CNR-to-%PLE correspondence used for solar inflation is asserted, "
    "not derived; treat inflated exponents as planning estimates"
)


class UsageError(Exception):
    """Bad command line or configuration input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures at exit code 1
        raise UsageError(message)


@dataclass
class ToolConfig:
    """Flat tool configuration; defaults describe the bundled 60 GHz setup."""

    frequency_ghz: float = 60.0
    tx_power_dbm: float = 10.0
    tx_gain_dbi: float = 24.0
    rx_gain_dbi: float = 24.0
    hpbw_deg: float = 7.3
    d0_m: float = 1.0
    temperature_c: float = 42.0
    f10_sfu: float = 329.0
    burst_policy: str = "quiet"
    bandwidth_hz: float = 1.0
    output_dir: str = "."

    def validate(self) -> None:
        problems = []
        if self.frequency_ghz <= 0:
            problems.append("frequency_ghz: must be positive")
        if not math.isfinite(self.tx_power_dbm):
            problems.append("tx_power_dbm: must be finite")
        if not math.isfinite(self.tx_gain_dbi):
            problems.append("tx_gain_dbi: must be finite")
        if not math.isfinite(self.rx_gain_dbi):
            problems.append("rx_gain_dbi: must be finite")
        if self.hpbw_deg <= 0:
            problems.append("hpbw_deg: must be positive")
        if self.d0_m <= 0:
            problems.append("d0_m: must be positive")
        if self.temperature_c < ABSOLUTE_ZERO_C:
            problems.append("temperature_c: below absolute zero")
        if not 70.0 <= self.f10_sfu <= 500.0:
            problems.append("f10_sfu: must lie in [70, 500]")
        valid_policies = tuple(p.value for p in BurstPolicy)
        if self.burst_policy not in valid_policies:
            problems.append(f"burst_policy: must be one of {valid_policies}")
        if self.bandwidth_hz < 1:
            problems.append("bandwidth_hz: must be at least 1")
        if problems:
            raise UsageError("invalid configuration: " + "; ".join(problems))

    def link_config(self) -> LinkConfig:
        antenna_tx = AntennaConfig(gain_dbi=self.tx_gain_dbi, hpbw_deg=self.hpbw_deg)
        antenna_rx = AntennaConfig(gain_dbi=self.rx_gain_dbi, hpbw_deg=self.hpbw_deg)
        return LinkConfig(
            frequency_ghz=self.frequency_ghz,
            tx_power_dbm=self.tx_power_dbm,
            tx_antenna=antenna_tx,
            rx_antenna=antenna_rx,
            system_temp_k=kelvin_from_celsius(self.temperature_c),
            bandwidth_hz=self.bandwidth_hz,
            reference_distance_m=self.d0_m,
        )

    def activity_index(self) -> SolarActivityIndex:
        return SolarActivityIndex(self.f10_sfu)

    def burst(self) -> BurstPolicy:
        return BurstPolicy(self.burst_policy)


_CONFIG_KEYS = tuple(f.name for f in dataclasses.fields(ToolConfig))
_STRING_KEYS = ("burst_policy", "output_dir")


def load_tool_config(config_path: str | None, overrides: dict) -> ToolConfig:
    """Defaults, then config-file values, then command line overrides."""
    merged: dict = {}
    if config_path:
        with open(config_path, encoding="utf-8") as handle:
            data = json.load(handle)
        if not isinstance(data, dict):
            raise CsvFormatError(f"{config_path}: config must be a flat JSON object")
        unknown = sorted(set(data) - set(_CONFIG_KEYS))
        if unknown:
            raise UsageError(f"{config_path}: unknown configuration keys: {', '.join(unknown)}")
        merged.update(data)
    merged.update({k: v for k, v in overrides.items() if v is not None})
    for key, value in merged.items():
        if key in _STRING_KEYS:
            if not isinstance(value, str):
                raise UsageError(f"invalid configuration: {key}: must be a string")
        else:
            try:
                merged[key] = float(value)
            except (TypeError, ValueError):
                raise UsageError(f"invalid configuration: {key}: not a number: {value!r}")
    cfg = ToolConfig(**merged)
    cfg.validate()
    return cfg


@dataclass
class ReportTable:
    """Formatted text table with a title and optional footnotes."""

    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    footnotes: tuple[str, ...] = ()

    def render(self) -> str:
        widths = [len(col) for col in self.columns]
        for row in self.rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        header = "  ".join(col.ljust(w) for col, w in zip(self.columns, widths))
        lines = [self.title, header, "-" * len(header)]
        for row in self.rows:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        for note in self.footnotes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def _approximation_footnotes(cfg: ToolConfig) -> list[str]:
    notes = []
    if cfg.frequency_ghz > QUIET_FIT_MAX_GHZ:
        notes.append(
            f"quiet-sun flux quadratic evaluated at {cfg.frequency_ghz:g} GHz, above "
            f"its {QUIET_FIT_MAX_GHZ:g} GHz fit range; values lean high"
        )
    if cfg.hpbw_deg > SOLAR_DISC_DIAMETER_DEG:
        notes.append(
            f"antenna beam ({cfg.hpbw_deg:g} deg) is wider than the "
            f"{SOLAR_DISC_DIAMETER_DEG:g} deg solar disc; the narrow-beam CNR "
            "degradation formula is applied regardless"
        )
    return notes


def _fmt(value: float) -> str:
    return format(value, ".6g")


def _output_path(cfg: ToolConfig, out: str | None, default_name: str) -> str:
    path = out if out else os.path.join(cfg.output_dir, default_name)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return path


def _write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_flux(cfg: ToolConfig, args) -> int:
    curve = flux_curve(args.f_min, args.f_max, args.step, cfg.activity_index(), cfg.burst())
    path = _output_path(cfg, args.out, "flux.csv")
    rows = [
        [_fmt(p.frequency_ghz), _fmt(p.quiet_sq), _fmt(p.varying_sv), _fmt(p.burst_sb), _fmt(p.integrated_s)]
        for p in curve
    ]
    _write_csv(path, ["frequency_ghz", "sq_sfu", "sv_sfu", "sb_sfu", "s_sfu"], rows)
    last = curve[-1]
    print(
        f"wrote {len(curve)} flux rows to {path}; "
        f"S({last.frequency_ghz:g} GHz) = {last.integrated_s:.6g} SFU"
    )
    if any(p.quiet_extrapolated for p in curve):
        print(
            f"note: quiet-sun flux quadratic extrapolated above its "
            f"{QUIET_FIT_MAX_GHZ:g} GHz fit range for part of the sweep"
        )
    return EXIT_OK


def cmd_dcnr(cfg: ToolConfig, args) -> int:
    if not args.frequencies:
        raise UsageError("at least one frequency is required")
    grid = inclusive_grid(args.aet_min, args.aet_max, args.step)
    series = dcnr_curve(
        args.frequencies, grid, cfg.activity_index(), cfg.rx_gain_dbi, cfg.burst()
    )
    path = _output_path(cfg, args.out, "dcnr.csv")
    header = ["aet_db_m2_per_k"] + [f"dcnr_db_{f:g}ghz" for f in series.frequencies_ghz]
    rows = [
        [_fmt(aet)] + [_fmt(v) for v in values]
        for aet, values in zip(series.aet_db, series.values_db)
    ]
    _write_csv(path, header, rows)
    print(
        f"wrote {len(rows)} CNR-degradation rows to {path} for "
        f"{len(series.frequencies_ghz)} frequencies"
    )
    for note in _approximation_footnotes(cfg):
        print(f"note: {note}")
    return EXIT_OK


def cmd_budget(cfg: ToolConfig, args) -> int:
    link = cfg.link_config()
    flux = integrated_flux(cfg.frequency_ghz, cfg.activity_index(), cfg.burst())
    profile = degradation_profile(link, args.ple, args.distances, flux)
    table = ReportTable(
        title=(
            f"Solar CNR degradation profile at {cfg.frequency_ghz:g} GHz "
            f"(delta CNR = {profile.delta_cnr_db:.1f} dB)"
        ),
        columns=("d_m", "prec_dbw", "cnr_db", "pct_degradation", "cumulative_avg_pct"),
        rows=tuple(
            (
                f"{row.distance_m:g}",
                f"{row.prec_dbw:.1f}",
                f"{row.cnr_db:.1f}",
                f"{row.pct_degradation:.2f}",
                f"{row.cumulative_avg_pct:.1f}",
            )
            for row in profile.rows
        ),
        footnotes=tuple(_approximation_footnotes(cfg)),
    )
    print(table.render())
    path = _output_path(cfg, args.out, "budget.csv")
    _write_csv(
        path,
        ["distance_m", "prec_dbw", "cnr_db", "pct_degradation", "cumulative_avg_pct"],
        [
            [_fmt(r.distance_m), _fmt(r.prec_dbw), _fmt(r.cnr_db), _fmt(r.pct_degradation), _fmt(r.cumulative_avg_pct)]
            for r in profile.rows
        ],
    )
    print(f"wrote profile to {path}")
    return EXIT_OK


def cmd_fit(cfg: ToolConfig, args) -> int:
    link = cfg.link_config()
    result = ingest_csv(args.csv, link)
    for err in result.row_errors:
        print(f"warning: {args.csv}:{err.line_number}: {err.message}", file=sys.stderr)
    reference_loss = fspl_db(cfg.d0_m, cfg.frequency_ghz)
    models = ("ldm", "fim") if args.model == "both" else (args.model,)
    table_rows = []
    series_rows = []
    fit_failures = []
    for camp in result.campaigns:
        samples = list(camp.samples)
        for model in models:
            try:
                if model == "ldm":
                    fit = fit_ldm(samples, cfg.d0_m, reference_loss)
                    params = f"n={fit.ple_n:.3f}"
                    predict = lambda d, f=fit: ldm_predict(d, f)
                    sigma = fit.shadow_sigma_db
                else:
                    fit = fit_fim(samples)
                    params = f"alpha={fit.alpha_db:.2f} beta={fit.beta_slope:.3f}"
                    predict = lambda d, f=fit: fim_predict(d, f)
                    sigma = fit.shadow_sigma_db
            except FitError as err:
                fit_failures.append(f"{camp.scenario.scenario_id} ({model}): {err}")
                continue
            table_rows.append(
                (
                    camp.scenario.scenario_id,
                    camp.scenario.link_type,
                    camp.scenario.los,
                    model,
                    params,
                    f"{sigma:.2f}",
                    str(len(samples)),
                )
            )
            for sample in samples:
                series_rows.append(
                    [
                        camp.scenario.scenario_id,
                        model,
                        _fmt(sample.distance_m),
                        _fmt(sample.path_loss_db),
                        _fmt(predict(sample.distance_m)),
                    ]
                )
    if table_rows:
        table = ReportTable(
            title=f"Path loss fits ({args.csv})",
            columns=("scenario", "link", "los", "model", "parameters", "sigma_db", "samples"),
            rows=tuple(table_rows),
        )
        print(table.render())
        path = _output_path(cfg, args.series_out, "fit_series.csv")
        _write_csv(path, ["scenario_id", "model", "distance_m", "measured_db", "fitted_db"], series_rows)
        print(f"wrote fitted series to {path}")
    for failure in fit_failures:
        print(f"error: fit failed for {failure}", file=sys.stderr)
    if fit_failures or result.row_errors:
        return EXIT_DATA
    return EXIT_OK


def cmd_simulate(cfg: ToolConfig, args) -> int:
    link = cfg.link_config()
    solar_on = args.solar == "on"
    d_min, d_max = DISTANCE_RANGES_M[args.link_type]
    if args.d_min is not None:
        d_min = args.d_min
    if args.d_max is not None:
        d_max = args.d_max
    weather = args.weather or ("sunny" if solar_on else "night")
    temp_c = args.scenario_temp_c if args.scenario_temp_c is not None else (
        cfg.temperature_c if solar_on else 20.0
    )
    scenario = Scenario(
        scenario_id=args.scenario_id,
        link_type=args.link_type,
        environment=args.environment,
        los=args.los,
        tx_height_m=args.tx_height_m,
        rx_height_m=args.rx_height_m,
        weather=weather,
        temp_c=temp_c,
    )
    generating_ple = args.ple
    if solar_on:
        flux = integrated_flux(cfg.frequency_ghz, cfg.activity_index(), cfg.burst())
        profile = degradation_profile(
            link, REFERENCE_PROFILE_PLE, REFERENCE_PROFILE_DISTANCES, flux
        )
        generating_ple = apply_solar_inflation(args.ple, profile)
    distances = log_uniform_distances(
        d_min, d_max, args.count, np.random.SeedSequence([args.seed, 1])
    )
    camp = generate_campaign(scenario, link, generating_ple, args.sigma, distances, args.seed)
    path = _output_path(cfg, args.out, "campaign.csv")
    write_campaign_csv(camp, path)
    print(
        f"wrote {len(camp.samples)} samples to {path} "
        f"(generating PLE {generating_ple:.4f}, sigma {args.sigma:g} dB, seed {args.seed})"
    )
    if solar_on:
        print(f"note: {INFLATION_NOTE}")
    return EXIT_OK


def _fit_by_scenario(path: str, cfg: ToolConfig, errors_out: list[str]):
    link = cfg.link_config()
    result = ingest_csv(path, link)
    for err in result.row_errors:
        errors_out.append(f"{path}:{err.line_number}: {err.message}")
    reference_loss = fspl_db(cfg.d0_m, cfg.frequency_ghz)
    fits = {}
    for camp in result.campaigns:
        try:
            fits[camp.scenario.scenario_id] = (camp.scenario, fit_ldm(list(camp.samples), cfg.d0_m, reference_loss))
        except FitError as err:
            errors_out.append(f"{path}: {camp.scenario.scenario_id}: {err}")
    return fits


def cmd_report(cfg: ToolConfig, args) -> int:
    if args.fixture:
        return _fixture_report(cfg, args)
    if not args.day or not args.night:
        raise UsageError("report requires --day and --night files (or --fixture)")
    errors: list[str] = []
    day_fits = _fit_by_scenario(args.day, cfg, errors)
    night_fits = _fit_by_scenario(args.night, cfg, errors)
    matched = [sid for sid in day_fits if sid in night_fits]
    for sid in sorted(set(day_fits) ^ set(night_fits)):
        which = "night" if sid in day_fits else "day"
        print(f"warning: scenario {sid!r} missing from the {which} file", file=sys.stderr)
    for message in errors:
        print(f"warning: {message}", file=sys.stderr)
    if not matched:
        print("error: no scenario ids common to both files", file=sys.stderr)
        return EXIT_DATA
    table_rows = []
    csv_rows = []
    for sid in matched:
        scenario, day_fit = day_fits[sid]
        _, night_fit = night_fits[sid]
        increase = ple_increase_percent(day_fit.ple_n, night_fit.ple_n)
        table_rows.append(
            (
                sid,
                scenario.link_type,
                scenario.los,
                f"{day_fit.ple_n:.3f}",
                f"{day_fit.shadow_sigma_db:.2f}",
                f"{night_fit.ple_n:.3f}",
                f"{night_fit.shadow_sigma_db:.2f}",
                f"{increase:.1f}",
            )
        )
        csv_rows.append(
            [
                sid,
                scenario.link_type,
                scenario.los,
                _fmt(day_fit.ple_n),
                _fmt(day_fit.shadow_sigma_db),
                _fmt(night_fit.ple_n),
                _fmt(night_fit.shadow_sigma_db),
                _fmt(increase),
            ]
        )
    table = ReportTable(
        title="Day/night path loss exponent comparison",
        columns=("scenario", "link", "los", "day_ple", "day_sigma", "night_ple", "night_sigma", "pct_increase"),
        rows=tuple(table_rows),
        footnotes=(INFLATION_NOTE,),
    )
    print(table.render())
    path = _output_path(cfg, args.out, "report.csv")
    _write_csv(
        path,
        ["scenario_id", "link_type", "los", "day_ple", "day_sigma_db", "night_ple", "night_sigma_db", "pct_increase"],
        csv_rows,
    )
    print(f"wrote report to {path}")
    return EXIT_DATA if errors else EXIT_OK


def _fixture_report(cfg: ToolConfig, args) -> int:
    fixture = load_fixture()
    table_rows = []
    csv_rows = []
    notes = []
    for pair in fixture.pairs:
        recomputed = ple_increase_percent(pair.day.ple, pair.night.ple)
        table_rows.append(
            (
                pair.label,
                pair.day.los,
                f"{pair.day.ple:.3f}",
                f"{pair.day.sigma_db:.2f}",
                f"{pair.night.ple:.3f}",
                f"{pair.night.sigma_db:.2f}",
                f"{pair.printed_pct_increase:.1f}",
                f"{recomputed:.2f}",
            )
        )
        csv_rows.append(
            [
                pair.label,
                pair.day.los,
                _fmt(pair.day.ple),
                _fmt(pair.day.sigma_db),
                _fmt(pair.night.ple),
                _fmt(pair.night.sigma_db),
                _fmt(pair.printed_pct_increase),
                _fmt(recomputed),
            ]
        )
        if pair.note and pair.note not in notes:
            notes.append(pair.note)
    table = ReportTable(
        title="Bundled day/night reference fits",
        columns=("pair", "los", "day_ple", "day_sigma", "night_ple", "night_sigma", "printed_pct", "recomputed_pct"),
        rows=tuple(table_rows),
        footnotes=tuple(notes),
    )
    print(table.render())
    path = _output_path(cfg, args.out, "report.csv")
    _write_csv(
        path,
        ["pair", "los", "day_ple", "day_sigma_db", "night_ple", "night_sigma_db", "printed_pct", "recomputed_pct"],
        csv_rows,
    )
    print(f"wrote report to {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common_options() -> _Parser:
    common = _Parser(add_help=False)
    group = common.add_argument_group("configuration")
    group.add_argument("--config", metavar="PATH", help="flat JSON config file")
    group.add_argument("--frequency-ghz", type=float, dest="frequency_ghz")
    group.add_argument("--tx-power-dbm", type=float, dest="tx_power_dbm")
    group.add_argument("--tx-gain-dbi", type=float, dest="tx_gain_dbi")
    group.add_argument("--rx-gain-dbi", type=float, dest="rx_gain_dbi")
    group.add_argument("--hpbw-deg", type=float, dest="hpbw_deg")
    group.add_argument("--d0-m", type=float, dest="d0_m")
    group.add_argument("--temperature-c", type=float, dest="temperature_c")
    group.add_argument("--f10-sfu", type=float, dest="f10_sfu")
    group.add_argument("--burst-policy", choices=[p.value for p in BurstPolicy], dest="burst_policy")
    group.add_argument("--bandwidth-hz", type=float, dest="bandwidth_hz")
    group.add_argument("--output-dir", dest="output_dir")
    return common


def build_parser() -> _Parser:
    parser = _Parser(prog="solarlink", description=__doc__)
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("flux", parents=[common], help="solar flux sweep to CSV")
    p.add_argument("--f-min", type=float, default=1.0)
    p.add_argument("--f-max", type=float, default=100.0)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_flux)

    p = sub.add_parser("dcnr", parents=[common], help="CNR degradation vs A_e/T to CSV")
    p.add_argument("--aet-min", type=float, default=-80.0)
    p.add_argument("--aet-max", type=float, default=-50.0)
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--frequencies", type=float, nargs="+", default=[60.0])
    p.add_argument("--out")
    p.set_defaults(func=cmd_dcnr)

    p = sub.add_parser("budget", parents=[common], help="distance-resolved CNR degradation table")
    p.add_argument("--ple", type=float, default=2.0)
    p.add_argument("--distances", type=float, nargs="+", default=list(REFERENCE_PROFILE_DISTANCES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_budget)

    p = sub.add_parser("fit", parents=[common], help="fit path loss models to a campaign CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--model", choices=["ldm", "fim", "both"], default="ldm")
    p.add_argument("--series-out")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("simulate", parents=[common], help="generate a synthetic campaign CSV")
    p.add_argument("--ple", type=float, required=True, help="night-time (baseline) PLE")
    p.add_argument("--sigma", type=float, default=0.0, help="shadow factor in dB")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solar", choices=["on", "off"], default="off")
    p.add_argument("--scenario-id", default="sim")
    p.add_argument("--link-type", choices=list(DISTANCE_RANGES_M), default="backhaul")
    p.add_argument("--los", choices=["LOS", "NLOS"], default="LOS")
    p.add_argument("--environment", default="hilly, some vegetation")
    p.add_argument("--tx-height-m", type=float, default=8.5)
    p.add_argument("--rx-height-m", type=float, default=3.5)
    p.add_argument("--weather", choices=["sunny", "clear-night", "day", "night", "dusty"])
    p.add_argument("--scenario-temp-c", type=float)
    p.add_argument("--d-min", type=float)
    p.add_argument("--d-max", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", parents=[common], help="day/night PLE comparison report")
    p.add_argument("--day")
    p.add_argument("--night")
    p.add_argument("--fixture", action="store_true", help="re-derive the bundled reference table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        overrides = {key: getattr(args, key, None) for key in _CONFIG_KEYS}
        cfg = load_tool_config(args.config, overrides)
        return args.func(cfg, args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (CsvFormatError, FitError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA
    except json.JSONDecodeError as err:
        print(f"error: malformed config file: {err}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main())
