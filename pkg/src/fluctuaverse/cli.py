"""Command-line front end.

Usage::

    fluctuaverse check [--constants FILE] [--tolerance ID=DEX ...] [--format text|json|csv]
    fluctuaverse simulate --mode exact --mass m_pi --t-end 1e17 --dt 1e15
    fluctuaverse ensemble [--seed S] [--samples S] [--mu VALUE]

Exit status is 0 when every check passes, 1 when a check fails (or a
simulation becomes unstable), 2 for usage and configuration errors.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional, TextIO

import click
import numpy as np

from .constants import ENV_CONSTANTS, Registry, default_registry
from .ensemble import (
    SamplerParams,
    particlet_count_sampler,
    phase_averaged_expectation,
    phase_correlation,
    random_instance,
)
from .errors import ConfigError, FluctuaverseError, IntegrationError, StabilityError, UnknownConstant
from .growth import GrowthParams, Mode, integrate, simulate_stochastic, trajectory_csv
from .relations import RelationReport, run_all

__all__ = ["RunConfig", "cmd_check", "cmd_simulate", "cmd_ensemble", "cli", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    constants_path: Optional[str] = None
    tolerance_overrides: dict = field(default_factory=dict)
    output_format: str = "text"
    sim_params: Optional[GrowthParams] = None
    seed: int = 0
    samples: int = 100_000
    mu: float = 1.0
    draws: int = 10_000
    instances: int = 20

    def validate(self) -> None:
        if self.output_format not in FORMATS:
            raise ConfigError(f"output format must be one of {FORMATS}, got {self.output_format!r}")
        for rid, tol in self.tolerance_overrides.items():
            if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
                raise ConfigError(f"tolerance for {rid!r} must be positive, got {tol!r}")


def load_registry(config: RunConfig) -> Registry:
    return default_registry(config.constants_path)


# -- check -----------------------------------------------------------------


def _render_text(reports: list[RelationReport]) -> str:
    rows = [("relation", "lhs", "rhs", "unit", "gap_dex", "tol_dex", "verdict", "anchor")]
    for r in reports:
        rows.append((
            r.relation_id,
            f"{r.lhs.value:.3e}",
            f"{r.rhs.value:.3e}",
            str(r.lhs.dim) or "1",
            f"{r.gap_dex:.3e}",
            f"{r.tolerance_dex:.3e}",
            r.verdict.value,
            r.paper_anchor,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]) - 1)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) + "  " + row[-1] for row in rows]
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{len(reports)} relations: {n_pass} pass, {len(reports) - n_pass} fail")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _render_json(reports: list[RelationReport]) -> str:
    doc = {
        "relations": [
            {
                "relation_id": r.relation_id,
                "lhs": r.lhs.value,
                "rhs": r.rhs.value,
                "dim": str(r.lhs.dim),
                "gap_dex": r.gap_dex,
                "tolerance_dex": r.tolerance_dex,
                "verdict": r.verdict.value,
                "paper_anchor": r.paper_anchor,
            }
            for r in reports
        ],
        "all_pass": all(r.passed for r in reports),
    }
    return json.dumps(doc, indent=2) + "\n"


def _render_csv(reports: list[RelationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["relation_id", "lhs", "rhs", "dim", "gap_dex", "tolerance_dex", "verdict", "paper_anchor"])
    for r in reports:
        w.writerow([r.relation_id, repr(r.lhs.value), repr(r.rhs.value), str(r.lhs.dim),
                    repr(r.gap_dex), repr(r.tolerance_dex), r.verdict.value, r.paper_anchor])
    return buf.getvalue()


_RENDERERS = {"text": _render_text, "json": _render_json, "csv": _render_csv}


def cmd_check(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        config.validate()
        reports = run_all(config.tolerance_overrides, load_registry(config))
    except (FluctuaverseError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.write(_RENDERERS[config.output_format](reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- simulate --------------------------------------------------------------


def cmd_simulate(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    params = config.sim_params
    if params is None:
        err.write("error: simulate needs growth parameters\n")
        return EXIT_USAGE
    try:
        reg = load_registry(config)
    except (FluctuaverseError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        if params.mode is Mode.STOCHASTIC:
            ens = simulate_stochastic(params, reg)
            text = trajectory_csv(ens.mean_trajectory())
            summary = ens.summary()
        else:
            points = integrate(params, reg)
            text = trajectory_csv(points)
            summary = {"final_N": points[-1].N, "final_sqrt_N": math.sqrt(points[-1].N)}
    except (StabilityError, IntegrationError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    out.write(text)
    out.write(f"# mode={params.mode.value}\n")
    for key, value in summary.items():
        out.write(f"# {key}={value!r}\n")
    return EXIT_OK


# -- ensemble --------------------------------------------------------------


def _ensemble_checks(config: RunConfig) -> list[dict]:
    checks = []
    S = config.samples

    diag = phase_correlation(0, 0, S, config.seed)
    checks.append({"check": "phase_diagonal", "value": diag.real, "bound": 1.0, "pass": diag == 1.0})

    off = abs(phase_correlation(0, 1, S, config.seed))
    bound = 5 / math.sqrt(S)
    checks.append({"check": "phase_offdiagonal_modulus", "value": off, "bound": bound, "pass": off <= bound})

    rng = np.random.default_rng(config.seed)
    worst = 0.0
    for i in range(config.instances):
        inst = random_instance(int(rng.integers(4, 9)), rng)
        worst = max(worst, phase_averaged_expectation(inst, config.draws, config.seed + 1000 + i).z_score)
    checks.append({"check": "coherent_vs_incoherent_max_z", "value": worst, "bound": 3.0, "pass": worst <= 3.0})

    stats = particlet_count_sampler(SamplerParams(mu=config.mu, seed=config.seed, samples=S))
    z = abs(stats.std - stats.theory["std"]) / stats.std_standard_error
    checks.append({"check": "sampler_std_z", "value": z, "bound": 3.0, "pass": z <= 3.0})

    ratio = stats.rms * config.mu
    checks.append({"check": "sampler_spread_times_mu", "value": ratio, "bound": 2.0, "pass": 0.5 <= ratio <= 2.0})
    return checks


def cmd_ensemble(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        if config.samples < 1 or config.draws < 1 or config.instances < 1:
            raise ConfigError("samples, draws and instances must be >= 1")
        if not (math.isfinite(config.mu) and config.mu > 0):
            raise ConfigError(f"mu must be positive, got {config.mu!r}")
        checks = _ensemble_checks(config)
    except (FluctuaverseError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if config.output_format == "json":
        out.write(json.dumps({"checks": checks, "all_pass": all(c["pass"] for c in checks)}, indent=2) + "\n")
    else:
        for c in checks:
            verdict = "PASS" if c["pass"] else "FAIL"
            out.write(f"{verdict}  {c['check']:<30s} value={c['value']:.4e}  bound={c['bound']:.4e}\n")
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


# -- click wiring ----------------------------------------------------------


def _parse_tolerances(items) -> dict[str, float]:
    out = {}
    for item in items:
        rid, eq, val = item.partition("=")
        try:
            if not eq:
                raise ValueError
            out[rid.strip()] = float(val)
        except ValueError:
            raise click.BadParameter(f"expected ID=DEX, got {item!r}", param_hint="--tolerance") from None
    return out


constants_option = click.option(
    "--constants", "constants_path", envvar=ENV_CONSTANTS, default=None, metavar="FILE",
    help=f"Constants override file (default: ${ENV_CONSTANTS}).",
)


@click.group()
def cli():
    """Order-of-magnitude consistency checks and fluctuation simulations."""


@cli.command()
@constants_option
@click.option("--tolerance", "tolerances", multiple=True, metavar="ID=DEX", help="Override one relation's tolerance.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="text", show_default=True)
def check(constants_path, tolerances, output_format):
    """Evaluate every relation in the catalog."""
    config = RunConfig(constants_path, _parse_tolerances(tolerances), output_format)
    sys.exit(cmd_check(config, click.get_text_stream("stdout"), click.get_text_stream("stderr")))


@cli.command()
@constants_option
@click.option("--mode", type=click.Choice([m.value for m in Mode]), required=True)
@click.option("--mass", "mass_symbol", default="m_pi", show_default=True, help="Registry symbol of the particle mass.")
@click.option("--t-end", type=float, required=True, help="End time in seconds.")
@click.option("--dt", type=float, required=True, help="Step in seconds.")
@click.option("--n0", type=float, default=None, help="Initial count (default 0 for exact, 1 otherwise).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--ensemble", "ensemble_size", type=int, default=64, show_default=True)
@click.option("--stride", type=int, default=1, show_default=True, help="Store every STRIDE-th step.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
def simulate(constants_path, mode, mass_symbol, t_end, dt, n0, seed, ensemble_size, stride, out_path):
    """Integrate or sample the sqrt(N) growth law and emit a CSV trajectory."""
    err = click.get_text_stream("stderr")
    try:
        reg = default_registry(constants_path)
        m = reg.value(mass_symbol)
        if n0 is None:
            n0 = 0.0 if mode == Mode.EXACT.value else 1.0
        params = GrowthParams(m, n0, t_end, dt, Mode(mode), seed, ensemble_size, stride)
    except (FluctuaverseError, UnknownConstant, ValueError) as exc:
        err.write(f"error: {exc}\n")
        sys.exit(EXIT_USAGE)
    config = RunConfig(constants_path, seed=seed, sim_params=params)
    if out_path is None:
        sys.exit(cmd_simulate(config, click.get_text_stream("stdout"), err))
    buf = io.StringIO()
    code = cmd_simulate(config, buf, err)
    if code == EXIT_OK:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    sys.exit(code)


@cli.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=100_000, show_default=True)
@click.option("--mu", type=float, default=1.0, show_default=True)
@click.option("--draws", type=int, default=10_000, show_default=True, help="Phase draws per equivalence instance.")
@click.option("--format", "output_format", type=click.Choice(("text", "json")), default="text", show_default=True)
def ensemble(seed, samples, mu, draws, output_format):
    """Random-phase and fluctuation-count statistical checks."""
    config = RunConfig(output_format=output_format, seed=seed, samples=samples, mu=mu, draws=draws)
    sys.exit(cmd_ensemble(config, click.get_text_stream("stdout"), click.get_text_stream("stderr")))


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="fluctuaverse", standalone_mode=True)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else (EXIT_OK if exc.code is None else EXIT_USAGE)
        raise SystemExit(code if code in (EXIT_OK, EXIT_FAIL, EXIT_USAGE) else EXIT_USAGE) from None


if __name__ == "__main__":  # pragma: no cover
    main()
