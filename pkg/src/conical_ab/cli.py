"""Command line front end.

Thin client over the run layer: parses flags, executes either in-process
(default) or against a running HTTP service (--server URL), renders the
report as canonical JSON or CSV, and exits with the run's status code
(0 ok, 2 bad config, 3 no bound state, 4 numerical failure).

Set CONICAL_AB_LOG=DEBUG (or INFO, ...) for diagnostic logging.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
from typing import Optional

import httpx

from .errors import ConfigError
from .reports import RunReport
from .runs import EXIT_CONFIG, RunConfig, run

logger = logging.getLogger(__name__)

_M_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _parse_m_range(text: str) -> tuple[int, int]:
    match = _M_RANGE_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"m-range must look like A..B, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _parse_a_values(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"a-values must be comma-separated floats, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conical-ab",
        description="Spectra and bound states of a charged particle on a cone "
        "or anti-cone threaded by a magnetic flux line (hbar = c = 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, radius=False, core=False, sweep=False):
        p.add_argument("--alpha", type=float, required=not sweep, default=1.0 if sweep else None)
        p.add_argument("--phi", type=float, default=0.0)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--m-range", type=_parse_m_range, default=None, metavar="A..B")
        p.add_argument("--mass", type=float, default=1.0)
        if radius:
            p.add_argument("--radius", type=float, default=1.0)
        if core:
            p.add_argument("--a", type=float, default=1.0)
            p.add_argument("--branch", type=int, default=0)
            p.add_argument("--gamma-sign", choices=("plus", "minus"), default="minus")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, metavar="PATH")
        p.add_argument("--server", default=None, metavar="URL",
                       help="run against a conical-ab HTTP service instead of in-process")

    p_classify = sub.add_parser("classify", help="per-channel classification table")
    common(p_classify)
    p_ring = sub.add_parser("ring", help="circular-path spectrum")
    common(p_ring, radius=True)
    p_bound = sub.add_parser("bound", help="bound states (closed form and numeric root)")
    common(p_bound, core=True)
    p_bound.add_argument("--mode", choices=("closed", "root", "both"), default="both")
    p_oracle = sub.add_parser("oracle", help="finite-difference oracle and convergence report")
    common(p_oracle, core=True)
    p_oracle.add_argument("--grid-n", type=int, default=20000)
    p_oracle.add_argument("--a-values", type=_parse_a_values, default=None,
                          metavar="A1,A2,...", help="core radii (default: a, a/2, a/4)")
    p_sweep = sub.add_parser("sweep", help="series over one swept parameter")
    common(p_sweep, radius=True, core=True, sweep=True)
    p_sweep.add_argument("--sweep-param", choices=("alpha", "phi", "mass", "a", "radius"),
                         required=True)
    p_sweep.add_argument("--sweep-start", type=float, required=True)
    p_sweep.add_argument("--sweep-stop", type=float, required=True)
    p_sweep.add_argument("--sweep-count", type=int, default=11)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        alpha=args.alpha if args.alpha is not None else 1.0,
        phi=args.phi,
        mass=args.mass,
        a=getattr(args, "a", 1.0),
        radius=getattr(args, "radius", 1.0),
        m=args.m,
        m_range=args.m_range,
        branch=getattr(args, "branch", 0),
        mode=getattr(args, "mode", "both"),
        gamma_sign=getattr(args, "gamma_sign", "minus"),
        output_format=args.format,
        output_path=args.out,
        grid_n=getattr(args, "grid_n", 20000),
        a_values=getattr(args, "a_values", None),
        sweep_param=getattr(args, "sweep_param", None),
        sweep_start=getattr(args, "sweep_start", None),
        sweep_stop=getattr(args, "sweep_stop", None),
        sweep_count=getattr(args, "sweep_count", 11),
    )


def _remote_payload(config: RunConfig) -> dict:
    payload: dict = {"alpha": config.alpha, "phi": config.phi}
    if config.m_range is not None:
        payload["m_min"], payload["m_max"] = config.m_range
    elif config.m is not None:
        payload["m"] = config.m
    if config.command == "ring":
        payload.update(mass=config.mass, radius=config.radius)
    elif config.command == "bound":
        payload.update(mass=config.mass, a=config.a, branch=config.branch,
                       mode=config.mode, gamma_sign=config.gamma_sign)
    elif config.command == "oracle":
        payload.update(mass=config.mass, a=config.a, branch=config.branch,
                       gamma_sign=config.gamma_sign, grid_n=config.grid_n)
        if config.a_values is not None:
            payload["a_values"] = list(config.a_values)
    elif config.command == "sweep":
        payload = {
            "sweep_param": config.sweep_param,
            "sweep_start": config.sweep_start,
            "sweep_stop": config.sweep_stop,
            "sweep_count": config.sweep_count,
            "alpha": config.alpha,
            "phi": config.phi,
            "mass": config.mass,
            "a": config.a,
            "radius": config.radius,
            "m": config.m if config.m is not None else 0,
            "branch": config.branch,
            "gamma_sign": config.gamma_sign,
        }
    return payload


def _http_client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=600.0)


def run_remote(config: RunConfig, server: str) -> RunReport:
    with _http_client(server) as client:
        resp = client.post(f"/v1/{config.command}", json=_remote_payload(config))
        if resp.status_code == 422:
            raise ConfigError(str(resp.json().get("detail", "invalid configuration")))
        resp.raise_for_status()
        body = resp.json()
    return RunReport(
        run_config=body["run_config"],
        rows=body["rows"],
        diagnostics=body["diagnostics"],
        exit_code=body["exit_code"],
    )


def _merge_m_range(argv: list[str]) -> list[str]:
    # argparse rejects "--m-range -2..2" (value starts with a dash); fold
    # the pair into --m-range=-2..2 so the documented syntax works.
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--m-range" and i + 1 < len(argv) and _M_RANGE_RE.match(argv[i + 1]):
            merged.append(f"--m-range={argv[i + 1]}")
            skip = True
        else:
            merged.append(tok)
    return merged


def main(argv: Optional[list[str]] = None) -> int:
    level = os.environ.get("CONICAL_AB_LOG")
    if level:
        logging.basicConfig(level=level.upper())
    parser = build_parser()
    args = parser.parse_args(_merge_m_range(list(argv if argv is not None else sys.argv[1:])))
    try:
        config = config_from_args(args)
        if args.server:
            report = run_remote(config, args.server)
        else:
            report = run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    rendered = report.render(config.output_format)
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(rendered)
            if not rendered.endswith("\n"):
                fh.write("\n")
    else:
        print(rendered)
    for diag in report.diagnostics:
        logger.info("diagnostic: %s", diag)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
