"""Command-line front end.

Emits CSV or JSON tables for the spectrum, critical points, envelope,
ground-state vectors, and entanglement statistics, plus a ``verify``
command that runs the dense-oracle cross-checks.  Output is byte-for-byte
reproducible: fixed row order, 17 significant digits, LF line endings, no
environment lookups.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size or
resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import analytic, entanglement, verify
from .errors import DegenerateAtCrossing, SizeLimit, XXRingError
from .statevector import ground_state

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3

_DEFAULT_G_MIN = -1.5
_DEFAULT_G_MAX = 1.5
_DEFAULT_STEPS = 61


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: one command plus its validated parameters."""

    command: str
    sites: tuple[int, ...]
    grid: tuple[float, ...]
    fmt: str
    output: str | None
    workers: int
    detail: bool
    single_particle: bool
    modes: bool


def _site_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("at least one site count is required")
    return values


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _csv_text(columns, rows, metadata=None) -> str:
    buffer = io.StringIO()
    for key, value in (metadata or {}).items():
        buffer.write(f"# {key} = {_fmt_cell(value)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_cell(v) for v in row])
    return buffer.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _table_payload(command, params, columns, rows, metadata) -> dict:
    return {
        "command": command,
        "params": params,
        "metadata": metadata or {},
        "rows": [dict(zip(columns, row)) for row in rows],
    }


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _emit_table(config: RunConfig, params, columns, rows, metadata=None) -> None:
    if config.fmt == "csv":
        _write(_csv_text(columns, rows, metadata), config.output)
    else:
        _write(
            _json_text(_table_payload(config.command, params, columns, rows, metadata)),
            config.output,
        )


def _grid_params(config: RunConfig) -> dict:
    if len(config.grid) == 1:
        return {"g": config.grid[0]}
    return {
        "g_min": config.grid[0],
        "g_max": config.grid[-1],
        "steps": len(config.grid),
    }


def _cmd_spectrum(config: RunConfig) -> int:
    n_sites = config.sites[0]
    if config.modes:
        rows = [
            (alpha, k, analytic.mode_cosine(n_sites, alpha, k))
            for alpha in (0.0, 0.5)
            for k in range(n_sites)
        ]
        _emit_table(config, {"sites": n_sites, "modes": True}, ("alpha", "k", "cosine"), rows)
        return EXIT_OK
    params = {"sites": n_sites, **_grid_params(config)}
    if config.single_particle:
        rows = [
            (k, float(g), analytic.single_particle_energy_density(n_sites, k, g))
            for k in range(n_sites)
            for g in config.grid
        ]
        params["single_particle"] = True
        _emit_table(config, params, ("k", "g", "energy"), rows)
        return EXIT_OK
    rows = [
        (n, float(g), analytic.min_energy_density(n_sites, n, g))
        for n in range(n_sites + 1)
        for g in config.grid
    ]
    _emit_table(config, params, ("n", "g", "energy"), rows)
    return EXIT_OK


def _cmd_critical_points(config: RunConfig) -> int:
    n_sites = config.sites[0]
    rows = [(cp.n, cp.g_c) for cp in analytic.critical_points(n_sites)]
    _emit_table(config, {"sites": n_sites}, ("n", "g_c"), rows)
    return EXIT_OK


def _cmd_envelope(config: RunConfig) -> int:
    n_sites = config.sites[0]
    if config.detail:
        rows = []
        for size in range(1, n_sites + 1):
            chi = analytic.finite_size_parameter(size)
            err = analytic.relative_error(size) if size >= 2 else None
            rows.append((size, chi, err))
        _emit_table(
            config,
            {"sites": n_sites, "detail": True},
            ("n_sites", "chi", "relative_error"),
            rows,
        )
        return EXIT_OK
    metadata = {
        "chi": analytic.finite_size_parameter(n_sites),
        "relative_error": analytic.relative_error(n_sites),
    }
    rows = [
        (
            float(g),
            analytic.ground_energy_density(n_sites, g),
            analytic.envelope_energy(n_sites, g),
            analytic.thermodynamic_energy(g),
        )
        for g in config.grid
    ]
    params = {"sites": n_sites, **_grid_params(config)}
    _emit_table(config, params, ("g", "ground", "envelope", "thermodynamic"), rows, metadata)
    return EXIT_OK


def _cmd_ground_state(config: RunConfig) -> int:
    n_sites = config.sites[0]
    g = config.grid[0]
    state = ground_state(n_sites, g)
    n = analytic.ground_sector(n_sites, g)
    triples = [
        (index, float(amp.real), float(amp.imag))
        for index, amp in enumerate(state.amplitudes)
        if index.bit_count() == n
    ]
    params = {"sites": n_sites, "g": float(g)}
    if config.fmt == "csv":
        _write(_csv_text(("index", "re", "im"), triples, {"fermions": n}), config.output)
    else:
        payload = {
            "command": "ground-state",
            "params": params,
            "metadata": {"fermions": n},
            "amplitudes": [[i, re, im] for i, re, im in triples],
        }
        _write(_json_text(payload), config.output)
    return EXIT_OK


def _cmd_entanglement(config: RunConfig) -> int:
    params = {
        "sites": list(config.sites),
        **_grid_params(config),
        "workers": config.workers,
        "detail": config.detail,
    }
    columns = ("n_sites", "g", "n", "mu", "sigma")
    if config.detail:
        columns = columns + ("mask", "pi")
    rows = []
    for n_sites in config.sites:
        if len(config.grid) == 1:
            stats_list = [entanglement.purity_stats(n_sites, config.grid[0])]
        else:
            stats_list = entanglement.entanglement_sweep(
                n_sites,
                config.grid[0],
                config.grid[-1],
                len(config.grid),
                workers=config.workers,
            )
        for stats in stats_list:
            if config.detail:
                rows.extend(
                    (n_sites, stats.g, stats.n, stats.mu, stats.sigma, mask, value)
                    for mask, value in stats.purities
                )
            else:
                rows.append((n_sites, stats.g, stats.n, stats.mu, stats.sigma))
    _emit_table(config, params, columns, rows)
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    n_sites = config.sites[0]
    if n_sites > 10:
        raise SizeLimit(f"the verification suite is limited to 10 sites, got {n_sites}")
    report = verify.run_verification(n_sites)
    payload = {
        "command": "verify",
        "params": {"sites": n_sites},
        "checks": [
            {
                "name": check.name,
                "passed": check.passed,
                "max_deviation": check.max_deviation,
                "tolerance": check.tolerance,
                "detail": check.detail,
            }
            for check in report.checks
        ],
        "passed": report.passed,
    }
    _write(_json_text(payload), config.output)
    if not report.passed:
        failed = ", ".join(c.name for c in report.checks if not c.passed)
        print(f"verification failed: {failed}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "critical-points": _cmd_critical_points,
    "envelope": _cmd_envelope,
    "ground-state": _cmd_ground_state,
    "entanglement": _cmd_entanglement,
    "verify": _cmd_verify,
}

_GRIDLESS = {"critical-points", "verify"}
_SINGLE_G = {"ground-state"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xxring",
        description="Exact spectra, ground states, and entanglement statistics "
        "of the periodic XX chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, sites_list=False, grid=True, workers=False, detail=False):
        if sites_list:
            p.add_argument(
                "--sites",
                type=_site_list,
                required=True,
                help="ring size, or a comma-separated list of sizes",
            )
        else:
            p.add_argument("--sites", type=int, required=True, help="ring size")
        if grid:
            p.add_argument("--g", type=float, help="single field value")
            p.add_argument("--g-min", type=float, help=f"grid start (default {_DEFAULT_G_MIN})")
            p.add_argument("--g-max", type=float, help=f"grid end (default {_DEFAULT_G_MAX})")
            p.add_argument("--steps", type=int, help=f"grid points (default {_DEFAULT_STEPS})")
        p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
        p.add_argument("--output", help="output path (default: stdout)")
        if workers:
            p.add_argument("--workers", type=int, default=1, help="parallel workers for sweeps")
        if detail:
            p.add_argument("--detail", action="store_true", help="emit per-item detail rows")

    p = sub.add_parser("spectrum", help="lowest sector energies over a field grid")
    add_common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--single-particle",
        action="store_true",
        help="emit one-fermion mode energies instead of sector minima",
    )
    group.add_argument(
        "--modes",
        action="store_true",
        help="emit the mode cosines for both momentum offsets (no field grid)",
    )

    p = sub.add_parser("critical-points", help="level-crossing fields g_c(n)")
    add_common(p, grid=False)

    p = sub.add_parser("envelope", help="ground energy, envelope, and infinite-size limit")
    add_common(p, detail=True)

    p = sub.add_parser("ground-state", help="ground-state amplitudes at one field value")
    add_common(p)

    p = sub.add_parser("entanglement", help="balanced-bipartition purity statistics")
    add_common(p, sites_list=True, workers=True, detail=True)

    p = sub.add_parser("verify", help="run the dense-oracle cross-check suite (JSON report)")
    add_common(p, grid=False)

    return parser


def _resolve_config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    command = args.command
    sites = args.sites if isinstance(args.sites, tuple) else (args.sites,)

    if command in _GRIDLESS or getattr(args, "modes", False):
        grid: tuple[float, ...] = ()
    elif args.g is not None:
        if args.g_min is not None or args.g_max is not None or args.steps is not None:
            parser.error("--g cannot be combined with --g-min/--g-max/--steps")
        grid = (args.g,)
    elif command in _SINGLE_G:
        parser.error(f"{command} needs a single field value via --g")
    else:
        g_min = args.g_min if args.g_min is not None else _DEFAULT_G_MIN
        g_max = args.g_max if args.g_max is not None else _DEFAULT_G_MAX
        steps = args.steps if args.steps is not None else _DEFAULT_STEPS
        if steps < 2:
            parser.error(f"--steps must be at least 2, got {steps}")
        if not g_min < g_max:
            parser.error(f"--g-min must be below --g-max, got [{g_min}, {g_max}]")
        grid = tuple(float(x) for x in np.linspace(g_min, g_max, steps))

    workers = getattr(args, "workers", 1)
    if workers < 1:
        parser.error(f"--workers must be at least 1, got {workers}")

    return RunConfig(
        command=command,
        sites=sites,
        grid=grid,
        fmt=args.format,
        output=args.output,
        workers=workers,
        detail=getattr(args, "detail", False),
        single_particle=getattr(args, "single_particle", False),
        modes=getattr(args, "modes", False),
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _resolve_config(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        # Validates the size/coupling domain before any heavy work.
        for n_sites in config.sites:
            analytic.ChainSpec(sites=n_sites, coupling=config.grid[0] if config.grid else 0.0)
        return _HANDLERS[config.command](config)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except DegenerateAtCrossing as exc:
        print(f"error: {exc} (pick a field value off the crossing)", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, XXRingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
