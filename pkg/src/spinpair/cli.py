"""Command-line front end.

Subcommands map one-to-one onto library capabilities:

* ``sweep``      -- thermodynamic quantities over a geometric temperature grid
* ``chempot``    -- both chemical potentials at a single temperature
* ``compare``    -- line lists of the two models and the energies that tell them apart
* ``spectrum``   -- absorption line positions and multiplicities alone
* ``experiment`` -- seeded photon-stream absorption counts for one model

Running with no subcommand prints the ``chempot`` summary at the default
parameters (alpha = 0.05 meV, T = 0.2 K).  Output goes to stdout or, with
``--output``, to a file; formats are ``csv``, ``json`` and ``tsv-plot``
(two-column files per quantity, for external plotting).  Exit codes:
0 success, 1 usage or validation problem, 2 linewidth too large for the
discrimination argument, 3 output could not be written.  For a fixed
flag set and seed all output is byte-identical between runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .operators import X_MAX, s_coefficient
from .quantum import (
    CouplingParams,
    K_B_MEV_PER_K,
    chemical_potential_qsm,
    entropy_over_k,
    pair_partition_qsm,
    qsm_pattern,
)
from .separable import chemical_potential_lshv, lshv_pattern, pair_log_partition_lshv
from .spectra import (
    ComparisonReport,
    LinewidthTooLarge,
    distinguish,
    simulate_photon_stream,
    transition_lines,
)

#: Exact column set of sweep CSV output, one quantity per column.
CSV_HEADER = (
    "temperature_k,beta_per_mev,x,ln_z_qsm,ln_z_lshv,"
    "mu_qsm_mev,mu_lshv_mev,entropy_over_k,s_coefficient"
)

_FORMATS = ("csv", "json", "tsv-plot")


class CliUsageError(ValueError):
    """Bad flag value or flag combination; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2) on bad flags; route through the usual
    # usage-error path so 2 stays reserved for the linewidth guard.
    def error(self, message: str) -> None:
        raise CliUsageError(message)


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for one invocation."""

    alpha_mev: float = 0.05
    temperature_k: float | None = 0.2
    quantum_limit: bool = False
    t_min_k: float = 0.02
    t_max_k: float = 2.0
    steps: int = 50
    linewidth_mev: float = 0.005
    photons: int = 100000
    seed: int = 0
    model: str | None = None
    photon_mev: float | None = None
    output: str | None = None
    fmt: str | None = None


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Build a RunConfig, rejecting bad values with the offending flag named."""
    alpha = float(getattr(args, "alpha_mev", 0.05))
    if not alpha > 0.0:
        raise CliUsageError(f"--alpha-mev must be positive, got {alpha}")

    quantum = bool(getattr(args, "quantum_limit", False))
    temp = getattr(args, "temp_k", None)
    if quantum:
        if temp is not None:
            raise CliUsageError("--temp-k and --quantum-limit are mutually exclusive")
        temperature = None
    else:
        temperature = 0.2 if temp is None else float(temp)
        if not temperature > 0.0:
            raise CliUsageError(f"--temp-k must be positive, got {temperature}")

    t_min = float(getattr(args, "tmin_k", 0.02))
    t_max = float(getattr(args, "tmax_k", 2.0))
    if not 0.0 < t_min < t_max:
        raise CliUsageError(
            f"--tmin-k must be positive and below --tmax-k, got {t_min} and {t_max}"
        )
    steps = int(getattr(args, "steps", 50))
    if steps < 2:
        raise CliUsageError(f"--steps must be at least 2, got {steps}")

    linewidth = getattr(args, "linewidth_mev", None)
    linewidth = 0.1 * alpha if linewidth is None else float(linewidth)
    if not linewidth > 0.0:
        raise CliUsageError(f"--linewidth-mev must be positive, got {linewidth}")

    photons = int(getattr(args, "photons", 100000))
    if photons < 1:
        raise CliUsageError(f"--photons must be at least 1, got {photons}")

    photon = getattr(args, "photon_mev", None)
    if photon is not None:
        photon = float(photon)
        if not photon > 0.0:
            raise CliUsageError(f"--photon-mev must be positive, got {photon}")

    return RunConfig(
        alpha_mev=alpha,
        temperature_k=temperature,
        quantum_limit=quantum,
        t_min_k=t_min,
        t_max_k=t_max,
        steps=steps,
        linewidth_mev=linewidth,
        photons=photons,
        seed=int(getattr(args, "seed", 0)),
        model=getattr(args, "model", None),
        photon_mev=photon,
        output=getattr(args, "output", None),
        fmt=getattr(args, "format", None),
    )


def beta_from_temperature(t_k: float, flag: str = "--temp-k") -> float:
    """Inverse temperature 1/(k_B T) in 1/meV for a temperature in K."""
    if not t_k > 0.0:
        raise CliUsageError(f"{flag} must be positive, got {t_k}")
    return 1.0 / (K_B_MEV_PER_K * t_k)


# ---------------------------------------------------------------------------
# sweep computation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    """One temperature point; field order matches the CSV columns."""

    temperature_k: float
    beta_per_mev: float
    x: float
    ln_z_qsm: float
    ln_z_lshv: float
    mu_qsm_mev: float
    mu_lshv_mev: float
    entropy_over_k: float
    s_coefficient: float


def _point_row(alpha: float, t_k: float, flag: str = "--temp-k") -> SweepRow:
    beta = beta_from_temperature(t_k, flag)
    x = alpha * beta
    if x > X_MAX:
        raise CliUsageError(
            f"{flag}={t_k} gives x={x:.6g}, beyond the numeric guard x <= {X_MAX}; "
            "raise the temperature or use --quantum-limit"
        )
    params = CouplingParams(alpha=alpha, beta=beta)
    return SweepRow(
        temperature_k=t_k,
        beta_per_mev=beta,
        x=x,
        ln_z_qsm=pair_partition_qsm(x),
        ln_z_lshv=pair_log_partition_lshv(alpha, beta),
        mu_qsm_mev=chemical_potential_qsm(params),
        mu_lshv_mev=chemical_potential_lshv(params),
        entropy_over_k=entropy_over_k(x),
        s_coefficient=s_coefficient(x),
    )


def run_sweep(config: RunConfig) -> list[SweepRow]:
    """Rows at ``steps`` geometrically spaced temperatures in [tmin, tmax]."""
    if not 0.0 < config.t_min_k < config.t_max_k:
        raise CliUsageError(
            f"--tmin-k must be positive and below --tmax-k, "
            f"got {config.t_min_k} and {config.t_max_k}"
        )
    if config.steps < 2:
        raise CliUsageError(f"--steps must be at least 2, got {config.steps}")
    x_top = config.alpha_mev / (K_B_MEV_PER_K * config.t_min_k)
    if x_top > X_MAX:
        raise CliUsageError(
            f"--tmin-k={config.t_min_k} gives x={x_top:.6g}, beyond the numeric "
            f"guard x <= {X_MAX}"
        )
    temperatures = np.geomspace(config.t_min_k, config.t_max_k, config.steps)
    return [_point_row(config.alpha_mev, float(t), "--tmin-k") for t in temperatures]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def fmt12(value: float) -> str:
    """Decimal rendering with 12 significant digits."""
    return f"{float(value):.12g}"


def _j(value: float) -> float:
    # JSON floats go through the same 12-digit rounding as CSV so the two
    # formats agree and output stays byte-stable.
    return float(fmt12(value))


def _json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def sweep_to_csv(rows: list[SweepRow]) -> str:
    """CSV with the canonical header; LF endings, '.' decimal separator."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(fmt12(getattr(row, f.name)) for f in fields(SweepRow)))
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> list[SweepRow]:
    """Inverse of :func:`sweep_to_csv`, for round-trip checks."""
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or unexpected CSV header")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != len(fields(SweepRow)):
            raise ValueError(f"expected {len(fields(SweepRow))} columns, got {len(parts)}")
        rows.append(SweepRow(*(float(p) for p in parts)))
    return rows


def _row_dict(row: SweepRow) -> dict:
    return {f.name: _j(getattr(row, f.name)) for f in fields(SweepRow)}


def _line_dict(line) -> dict:
    return {
        "gap_mev": _j(line.gap),
        "multiplicity": line.multiplicity,
        "from_levels": line.from_label,
        "to_levels": line.to_label,
    }


def report_to_dict(report: ComparisonReport) -> dict:
    return {
        "alpha_mev": _j(report.alpha),
        "beta_per_mev": None if report.beta is None else _j(report.beta),
        "quantum_limit": report.quantum_limit,
        "linewidth_mev": _j(report.linewidth),
        "qsm_lines": [_line_dict(line) for line in report.qsm_lines],
        "lshv_lines": [_line_dict(line) for line in report.lshv_lines],
        "qsm_populations": [_j(p) for p in report.qsm_populations],
        "lshv_populations": [_j(p) for p in report.lshv_populations],
        "discriminating_energies": [
            {"photon_mev": _j(energy), "model": model}
            for energy, model in report.discriminating_energies
        ],
    }


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(text)


def _emit_plot_files(columns: dict[str, list[tuple[float, float]]], path: str | None) -> None:
    """One two-column TSV per named quantity, no header."""
    if path is None:
        raise CliUsageError("--output is required with --format tsv-plot")
    stem = Path(path).with_suffix("")
    for name, pairs in columns.items():
        text = "".join(f"{fmt12(a)}\t{fmt12(b)}\n" for a, b in pairs)
        with open(f"{stem}_{name}.tsv", "w", encoding="ascii", newline="\n") as handle:
            handle.write(text)


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------

def _cmd_sweep(config: RunConfig) -> int:
    rows = run_sweep(config)
    fmt = config.fmt or "csv"
    if fmt == "csv":
        _emit(sweep_to_csv(rows), config.output)
    elif fmt == "json":
        _emit(
            _json_text(
                {"alpha_mev": _j(config.alpha_mev), "rows": [_row_dict(r) for r in rows]}
            ),
            config.output,
        )
    else:
        columns = {
            f.name: [(r.temperature_k, getattr(r, f.name)) for r in rows]
            for f in fields(SweepRow)[1:]
        }
        _emit_plot_files(columns, config.output)
    return 0


def _chempot_values(config: RunConfig) -> dict:
    alpha = config.alpha_mev
    if config.quantum_limit:
        params = CouplingParams(alpha=alpha, quantum_limit=True)
        return {
            "alpha_mev": _j(alpha),
            "quantum_limit": True,
            "temperature_k": None,
            "beta_per_mev": None,
            "x": None,
            "ln_z_qsm": None,
            "ln_z_lshv": None,
            "mu_qsm_mev": _j(chemical_potential_qsm(params)),
            "mu_lshv_mev": _j(chemical_potential_lshv(params)),
            "entropy_over_k": 0.0,
            "s_coefficient": 1.0,
        }
    row = _point_row(alpha, config.temperature_k)
    out: dict = {"alpha_mev": _j(alpha), "quantum_limit": False}
    out.update(_row_dict(row))
    return out


def _cmd_chempot(config: RunConfig) -> int:
    values = _chempot_values(config)
    fmt = config.fmt or "text"
    if fmt == "text":
        lines = []
        for key, value in values.items():
            if value is None:
                continue
            if isinstance(value, bool):
                rendered = "true" if value else "false"
            elif isinstance(value, float):
                rendered = fmt12(value)
            else:
                rendered = str(value)
            lines.append(f"{key} = {rendered}")
        _emit("\n".join(lines) + "\n", config.output)
    elif fmt == "json":
        _emit(_json_text(values), config.output)
    elif fmt == "csv":
        if config.quantum_limit:
            raise CliUsageError(
                "--format csv needs a finite temperature; use --format json "
                "with --quantum-limit"
            )
        row = _point_row(config.alpha_mev, config.temperature_k)
        _emit(sweep_to_csv([row]), config.output)
    else:
        raise CliUsageError("--format tsv-plot is not available for chempot")
    return 0


def _cmd_compare(config: RunConfig) -> int:
    beta = None if config.quantum_limit else beta_from_temperature(config.temperature_k)
    report = distinguish(
        config.alpha_mev,
        beta,
        config.linewidth_mev,
        quantum_limit=config.quantum_limit,
    )
    fmt = config.fmt or "json"
    if fmt == "json":
        _emit(_json_text(report_to_dict(report)), config.output)
    elif fmt == "csv":
        lines = ["photon_mev,absorbing_model"]
        for energy, model in report.discriminating_energies:
            lines.append(f"{fmt12(energy)},{model}")
        _emit("\n".join(lines) + "\n", config.output)
    else:
        columns = {
            "qsm_lines": [(line.gap, float(line.multiplicity)) for line in report.qsm_lines],
            "lshv_lines": [(line.gap, float(line.multiplicity)) for line in report.lshv_lines],
        }
        _emit_plot_files(columns, config.output)
    return 0


def _cmd_spectrum(config: RunConfig) -> int:
    qsm_lines = transition_lines(qsm_pattern(config.alpha_mev))
    lshv_lines = transition_lines(lshv_pattern(config.alpha_mev))
    fmt = config.fmt or "json"
    if fmt == "json":
        _emit(
            _json_text(
                {
                    "alpha_mev": _j(config.alpha_mev),
                    "qsm_lines": [_line_dict(line) for line in qsm_lines],
                    "lshv_lines": [_line_dict(line) for line in lshv_lines],
                }
            ),
            config.output,
        )
    elif fmt == "csv":
        lines = ["model,gap_mev,multiplicity,from_levels,to_levels"]
        for model, model_lines in (("QSM", qsm_lines), ("LSHV", lshv_lines)):
            for line in model_lines:
                lines.append(
                    f"{model},{fmt12(line.gap)},{line.multiplicity},"
                    f"{line.from_label},{line.to_label}"
                )
        _emit("\n".join(lines) + "\n", config.output)
    else:
        columns = {
            "qsm_lines": [(line.gap, float(line.multiplicity)) for line in qsm_lines],
            "lshv_lines": [(line.gap, float(line.multiplicity)) for line in lshv_lines],
        }
        _emit_plot_files(columns, config.output)
    return 0


def _cmd_experiment(config: RunConfig) -> int:
    if config.model not in ("qsm", "lshv"):
        raise CliUsageError(f"--model must be qsm or lshv, got {config.model}")
    if config.photon_mev is None:
        raise CliUsageError("--photon-mev is required for experiment")
    pattern = (
        qsm_pattern(config.alpha_mev)
        if config.model == "qsm"
        else lshv_pattern(config.alpha_mev)
    )
    beta = None if config.quantum_limit else beta_from_temperature(config.temperature_k)
    outcome = simulate_photon_stream(
        pattern,
        beta,
        config.photon_mev,
        config.linewidth_mev,
        config.photons,
        config.seed,
        quantum_limit=config.quantum_limit,
    )
    fmt = config.fmt or "json"
    if fmt == "json":
        _emit(
            _json_text(
                {
                    "model": config.model,
                    "alpha_mev": _j(config.alpha_mev),
                    "photon_mev": _j(config.photon_mev),
                    "linewidth_mev": _j(config.linewidth_mev),
                    "temperature_k": None
                    if config.quantum_limit
                    else _j(config.temperature_k),
                    "quantum_limit": config.quantum_limit,
                    "seed": config.seed,
                    "photons_fired": outcome.photons_fired,
                    "photons_absorbed": outcome.photons_absorbed,
                    "resonant": outcome.resonant,
                    "initial_population": _j(outcome.initial_population),
                }
            ),
            config.output,
        )
    elif fmt == "csv":
        lines = [
            "photons_fired,photons_absorbed,resonant,initial_population",
            f"{outcome.photons_fired},{outcome.photons_absorbed},"
            f"{'true' if outcome.resonant else 'false'},"
            f"{fmt12(outcome.initial_population)}",
        ]
        _emit("\n".join(lines) + "\n", config.output)
    else:
        raise CliUsageError("--format tsv-plot is not available for experiment")
    return 0


# ---------------------------------------------------------------------------
# argument parsing and entry points
# ---------------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha-mev", type=float, default=0.05,
                     help="exchange coupling in meV (default 0.05)")
    sub.add_argument("--output", default=None, help="write to this path instead of stdout")
    sub.add_argument("--format", choices=_FORMATS, default=None,
                     help="output format (default: csv for sweep, text for "
                          "chempot, json otherwise)")


def _add_temperature(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--temp-k", type=float, default=None,
                     help="temperature in K (default 0.2)")
    sub.add_argument("--quantum-limit", action="store_true",
                     help="evaluate the T -> 0 limit instead of a finite temperature")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spinpair",
        description="Thermodynamics and spectroscopy of an exchange-coupled "
                    "spin-1/2 pair: coupled versus separable descriptions.",
    )
    sub = parser.add_subparsers(dest="command")

    sweep = sub.add_parser("sweep", help="temperature sweep of all quantities")
    _add_common(sweep)
    sweep.add_argument("--tmin-k", type=float, default=0.02,
                       help="sweep start temperature in K (default 0.02)")
    sweep.add_argument("--tmax-k", type=float, default=2.0,
                       help="sweep end temperature in K (default 2.0)")
    sweep.add_argument("--steps", type=int, default=50,
                       help="number of geometrically spaced points (default 50)")

    chempot = sub.add_parser("chempot", help="chemical potentials at one temperature")
    _add_common(chempot)
    _add_temperature(chempot)

    compare = sub.add_parser("compare", help="line lists and discriminating energies")
    _add_common(compare)
    _add_temperature(compare)
    compare.add_argument("--linewidth-mev", type=float, default=None,
                         help="resonance half-width in meV (default 0.1*alpha)")

    spectrum = sub.add_parser("spectrum", help="absorption line positions only")
    _add_common(spectrum)

    experiment = sub.add_parser("experiment", help="seeded photon-stream absorption counts")
    _add_common(experiment)
    _add_temperature(experiment)
    experiment.add_argument("--linewidth-mev", type=float, default=None,
                            help="resonance half-width in meV (default 0.1*alpha)")
    experiment.add_argument("--model", choices=("qsm", "lshv"), default=None,
                            help="which level pattern the photons hit")
    experiment.add_argument("--photon-mev", type=float, default=None,
                            help="photon energy in meV")
    experiment.add_argument("--photons", type=int, default=100000,
                            help="number of photons to fire (default 100000)")
    experiment.add_argument("--seed", type=int, default=0,
                            help="random seed (default 0)")

    return parser


_COMMANDS = {
    "sweep": _cmd_sweep,
    "chempot": _cmd_chempot,
    "compare": _cmd_compare,
    "spectrum": _cmd_spectrum,
    "experiment": _cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        command = args.command or "chempot"
        config = config_from_args(args)
        return _COMMANDS[command](config)
    except LinewidthTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main(sys.argv[1:]))
