"""Command orchestration shared by the CLI and the HTTP service.

Each command validates its configuration, runs the physics, and returns a
RunReport.  Exit codes: 0 success, 2 invalid configuration, 3 no bound
state (a documented outcome, not a crash), 4 numerical failure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, asdict
from typing import Optional

from . import oracle, spectrum
from .errors import (
    ComplexEnergyError,
    ConfigError,
    NoBoundStateError,
    NumericalError,
    UnsupportedChannelError,
)
from .geometry import SurfaceKind, classify_surface
from .reports import RunReport
from .spectrum import Channel, GammaSign, SaClass, SolveMode

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NO_BOUND_STATE = 3
EXIT_NUMERICAL = 4

COMMANDS = ("classify", "ring", "bound", "oracle", "sweep")
SWEEPABLE = ("alpha", "phi", "mass", "a", "radius")


@dataclass
class RunConfig:
    command: str
    alpha: float = 1.0
    phi: float = 0.0
    mass: float = 1.0
    a: float = 1.0
    radius: float = 1.0
    m: Optional[int] = None
    m_range: Optional[tuple[int, int]] = None
    branch: int = 0
    mode: str = "both"  # closed | root | both
    gamma_sign: str = "minus"
    output_format: str = "json"
    output_path: Optional[str] = None
    grid_n: int = 20000
    a_values: Optional[tuple[float, ...]] = None
    sweep_param: Optional[str] = None
    sweep_start: Optional[float] = None
    sweep_stop: Optional[float] = None
    sweep_count: int = 11

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        for name in ("alpha", "mass", "a", "radius"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.mode not in ("closed", "root", "both"):
            raise ConfigError(f"mode must be closed|root|both, got {self.mode!r}")
        if self.gamma_sign not in ("plus", "minus"):
            raise ConfigError(f"gamma-sign must be plus|minus, got {self.gamma_sign!r}")
        if self.output_format not in ("json", "csv"):
            raise ConfigError(f"format must be json|csv, got {self.output_format!r}")
        if self.branch < 0:
            raise ConfigError(f"branch must be >= 0, got {self.branch}")
        if self.grid_n < 100:
            raise ConfigError(f"grid-n must be >= 100, got {self.grid_n}")
        if self.m_range is not None:
            lo, hi = self.m_range
            if hi < lo:
                raise ConfigError(f"empty m-range {lo}..{hi}")
            if hi - lo > 10000:
                raise ConfigError("m-range too large (limit 10000)")
        if self.command in ("bound", "oracle") and self.m is None and self.m_range is None:
            raise ConfigError(f"{self.command} needs --m or --m-range")
        if self.command in ("classify", "ring") and self.m_range is None and self.m is None:
            raise ConfigError(f"{self.command} needs --m or --m-range")
        if self.a_values is not None and not all(v > 0 for v in self.a_values):
            raise ConfigError("a-values must be positive")
        if self.command == "sweep":
            if self.sweep_param not in SWEEPABLE:
                raise ConfigError(f"sweep-param must be one of {SWEEPABLE}")
            if self.sweep_start is None or self.sweep_stop is None:
                raise ConfigError("sweep needs --sweep-start and --sweep-stop")
            if self.sweep_count < 2:
                raise ConfigError("sweep-count must be >= 2")
            if self.m is None:
                raise ConfigError("sweep needs --m")

    def m_values(self) -> list[int]:
        if self.m_range is not None:
            lo, hi = self.m_range
            return list(range(lo, hi + 1))
        return [self.m if self.m is not None else 0]

    def gamma(self) -> GammaSign:
        return GammaSign.PLUS if self.gamma_sign == "plus" else GammaSign.MINUS

    def echo(self) -> dict:
        cfg = asdict(self)
        cfg["m_range"] = None if self.m_range is None else list(self.m_range)
        cfg["a_values"] = None if self.a_values is None else list(self.a_values)
        return cfg


def run(config: RunConfig) -> RunReport:
    config.validate()
    report = RunReport(run_config=config.echo())
    handler = {
        "classify": _run_classify,
        "ring": _run_ring,
        "bound": _run_bound,
        "oracle": _run_oracle,
        "sweep": _run_sweep,
    }[config.command]
    try:
        handler(config, report)
    except NumericalError as exc:
        report.diagnostics.append({"kind": "numerical_failure", "message": str(exc)})
        report.exit_code = EXIT_NUMERICAL
    return report


def _state_kinds(alpha: float) -> str:
    kind = classify_surface(alpha)
    if kind is SurfaceKind.CONE:
        return "scattering"
    if kind is SurfaceKind.ANTI_CONE:
        return "bound_and_scattering"
    return "plane_free"


def _run_classify(config: RunConfig, report: RunReport) -> None:
    for m in config.m_values():
        ch = spectrum.make_channel(m, config.phi, config.alpha)
        pot = spectrum.generalized_potential(ch)
        delta = pot.delta_shell_coefficient
        report.rows.append(
            {
                "m": m,
                "alpha": config.alpha,
                "phi": config.phi,
                "m_plus_phi": ch.m_plus_phi,
                "geometry": classify_surface(config.alpha).value,
                "lambda_sq": ch.lambda_sq,
                "order_kind": ch.order.kind.value,
                "order_magnitude": ch.order.magnitude,
                "sa_class": ch.sa_class.value,
                "delta_coefficient": delta,
                "delta_sign": "repulsive" if delta > 0 else ("attractive" if delta < 0 else "none"),
                "state_kinds": _state_kinds(config.alpha),
                "source": "closed_form",
            }
        )


def _run_ring(config: RunConfig, report: RunReport) -> None:
    for m in config.m_values():
        energy = spectrum.ring_energy(m, config.phi, config.alpha, config.mass, config.radius)
        report.rows.append(
            {
                "m": m,
                "alpha": config.alpha,
                "phi": config.phi,
                "mass": config.mass,
                "radius": config.radius,
                "energy": energy,
                "source": "closed_form",
            }
        )


def _bound_row(config: RunConfig, state: spectrum.BoundState) -> dict:
    return {
        "m": state.channel.m,
        "alpha": state.channel.alpha,
        "phi": state.channel.phi,
        "mass": state.mass,
        "a": state.core_radius,
        "branch": state.branch,
        "lambda_sq": state.channel.lambda_sq,
        "order_kind": state.channel.order.kind.value,
        "source": state.source.value,
        "energy": state.energy,
        "kappa": state.kappa,
        "kappa_a": state.kappa_a,
        "ma2_energy": state.ma2_energy,
        "residual": state.residual,
        "gamma_sign": None if state.gamma_sign is None else state.gamma_sign.value,
    }


def _solve_bound(config: RunConfig, ch: Channel, mode: SolveMode) -> spectrum.BoundState:
    if ch.sa_class is SaClass.IMAGINARY_ORDER:
        return spectrum.cone_bound_energy(
            ch, config.mass, config.a, branch=config.branch, mode=mode, gamma_sign=config.gamma()
        )
    return spectrum.anticone_bound_energy(ch, config.mass, config.a, mode=mode)


def _run_bound(config: RunConfig, report: RunReport) -> None:
    modes = {
        "closed": [SolveMode.CLOSED_FORM],
        "root": [SolveMode.NUMERIC_ROOT],
        "both": [SolveMode.NUMERIC_ROOT, SolveMode.CLOSED_FORM],
    }[config.mode]
    any_no_bound = False
    for m in config.m_values():
        ch = spectrum.make_channel(m, config.phi, config.alpha)
        results: dict[SolveMode, spectrum.BoundState] = {}
        for mode in modes:
            try:
                state = _solve_bound(config, ch, mode)
            except NoBoundStateError as exc:
                any_no_bound = True
                report.diagnostics.append(
                    {"kind": "no_bound_state", "m": m, "mode": mode.value, "message": exc.reason}
                )
                continue
            except ComplexEnergyError as exc:
                report.diagnostics.append(
                    {
                        "kind": "closed_form_complex",
                        "m": m,
                        "value_re": exc.value.real,
                        "value_im": exc.value.imag,
                        "message": exc.detail,
                    }
                )
                continue
            except UnsupportedChannelError as exc:
                any_no_bound = True
                report.diagnostics.append(
                    {"kind": "unsupported_channel", "m": m, "mode": mode.value, "message": str(exc)}
                )
                continue
            results[mode] = state
            report.rows.append(_bound_row(config, state))
        if SolveMode.NUMERIC_ROOT in results and SolveMode.CLOSED_FORM in results:
            num = results[SolveMode.NUMERIC_ROOT].energy
            clo = results[SolveMode.CLOSED_FORM].energy
            report.diagnostics.append(
                {
                    "kind": "closed_vs_numeric",
                    "m": m,
                    "closed_form_energy": clo,
                    "numeric_root_energy": num,
                    "relative_gap": (clo - num) / abs(num),
                }
            )
    if not report.rows and any_no_bound:
        report.exit_code = EXIT_NO_BOUND_STATE


def _run_oracle(config: RunConfig, report: RunReport) -> None:
    a_values = config.a_values if config.a_values else (config.a, config.a / 2.0, config.a / 4.0)
    any_no_bound = False
    for m in config.m_values():
        ch = spectrum.make_channel(m, config.phi, config.alpha)
        try:
            study = oracle.convergence_study(
                ch,
                config.mass,
                list(a_values),
                policy=oracle.GridPolicy(n=config.grid_n),
                branch=config.branch,
                gamma_sign=config.gamma(),
            )
        except NoBoundStateError as exc:
            any_no_bound = True
            report.diagnostics.append({"kind": "no_bound_state", "m": m, "message": exc.reason})
            continue
        except UnsupportedChannelError as exc:
            any_no_bound = True
            report.diagnostics.append({"kind": "unsupported_channel", "m": m, "message": str(exc)})
            continue
        for row in study.rows:
            report.rows.append(
                {
                    "m": m,
                    "alpha": config.alpha,
                    "phi": config.phi,
                    "mass": config.mass,
                    "a": row.a,
                    "branch": config.branch,
                    "grid_n": config.grid_n,
                    "source": "oracle_grid",
                    "energy": row.grid_energy,
                    "ma2_energy": row.ma2_grid,
                    "matching_energy": row.matching_energy,
                    "matching_ma2_energy": row.ma2_matching,
                    "relative_gap": row.relative_gap,
                }
            )
        report.diagnostics.append(
            {
                "kind": "refinement",
                "m": m,
                "gap_at_n": study.refinement_gaps[0],
                "gap_at_refined_n": study.refinement_gaps[1],
                "improves": study.refinement_improves,
                "ma2_spread_matching": study.ma2_spread_matching,
                "ma2_spread_grid": study.ma2_spread_grid,
            }
        )
    if not report.rows and any_no_bound:
        report.exit_code = EXIT_NO_BOUND_STATE


def _run_sweep(config: RunConfig, report: RunReport) -> None:
    start, stop, count = config.sweep_start, config.sweep_stop, config.sweep_count
    values = [start + (stop - start) * i / (count - 1) for i in range(count)]
    m = config.m if config.m is not None else 0
    for value in values:
        params = {
            "alpha": config.alpha,
            "phi": config.phi,
            "mass": config.mass,
            "a": config.a,
            "radius": config.radius,
        }
        params[config.sweep_param] = value
        if params["alpha"] <= 0 or params["mass"] <= 0 or params["a"] <= 0:
            report.diagnostics.append(
                {"kind": "skipped_value", "value": value, "message": "non-positive parameter"}
            )
            continue
        ch = spectrum.make_channel(m, params["phi"], params["alpha"])
        row = {
            "sweep_param": config.sweep_param,
            "value": value,
            "m": m,
            "alpha": params["alpha"],
            "phi": params["phi"],
            "mass": params["mass"],
            "a": params["a"],
            "lambda_sq": ch.lambda_sq,
            "sa_class": ch.sa_class.value,
            "ring_energy": spectrum.ring_energy(
                m, params["phi"], params["alpha"], params["mass"], params["radius"]
            ),
            "energy": None,
            "ma2_energy": None,
            "source": "numeric_root",
        }
        try:
            if ch.sa_class is SaClass.IMAGINARY_ORDER:
                state = spectrum.cone_bound_energy(
                    ch, params["mass"], params["a"], branch=config.branch,
                    gamma_sign=config.gamma(),
                )
            elif ch.sa_class is SaClass.NEEDS_EXTENSION and params["alpha"] > 1.0:
                state = spectrum.anticone_bound_energy(ch, params["mass"], params["a"])
            else:
                state = None
        except (NoBoundStateError, UnsupportedChannelError) as exc:
            state = None
            report.diagnostics.append(
                {"kind": "no_bound_state", "value": value, "message": str(exc)}
            )
        if state is not None:
            row["energy"] = state.energy
            row["ma2_energy"] = state.ma2_energy
        report.rows.append(row)
