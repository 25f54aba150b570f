"""Command-line front end: reproducible batch runs emitting CSV artifacts.

Subcommands: enumerate (witness sweep), verify (re-validation plus oracle
check of every emitted d), count (both count series plus a growth-slope
fit), falsify-scholz (counterexamples to the imaginary-to-real reflection
direction).  Configuration comes from flags or a key=value config file,
flags winning.  Exit codes: 0 success, 1 internal arithmetic fault,
2 configuration error, 3 verification failure, 4 empty falsification.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .counting import (
    SCHOLZ_BOUND_CAP,
    TRUTH_X_CAP,
    fit_slope,
    honda_count_series,
    scholz_counterexample_search,
    truth_count_series,
    write_counterexamples_csv,
    write_series_csv,
)
from .honda import (
    ConfigurationError,
    EnumConfig,
    HondaWitness,
    enumerate_discriminants,
    read_witnesses_csv,
    validate_witness,
    write_witnesses_csv,
)
from .classnum import three_divides_real_class_number

__all__ = [
    "RunConfig",
    "build_parser",
    "cmd_count",
    "cmd_enumerate",
    "cmd_falsify_scholz",
    "cmd_verify",
    "entrypoint",
    "main",
    "resolve_config",
]

EXIT_OK = 0
EXIT_ARITHMETIC = 1
EXIT_CONFIG = 2
EXIT_VERIFY = 3
EXIT_EMPTY_FALSIFICATION = 4

DEFAULT_CHECKPOINTS = (100, 1_000, 10_000, 100_000, 1_000_000)


@dataclass
class RunConfig:
    x_max: int = 1_000_000
    checkpoints: tuple[int, ...] = DEFAULT_CHECKPOINTS
    truth_x_max: int = 10_000
    scholz_bound: int = 100
    workers: int = 1
    output_dir: Path = Path("out")
    shortcut_only: bool = False

    def enum_config(self) -> EnumConfig:
        return EnumConfig(
            x_cap=max(EnumConfig.x_cap, self.x_max),
            workers=self.workers,
            shortcut_only=self.shortcut_only,
        )


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"not a boolean: {text!r}")


def _parse_checkpoints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigurationError(f"bad checkpoint list: {text!r}") from exc


def _load_config_file(path: Path) -> dict[str, str]:
    if not path.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    values: dict[str, str] = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"bad config line (expected key=value): {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


_FILE_KEYS = {
    "x_max": int,
    "checkpoints": _parse_checkpoints,
    "truth_x_max": int,
    "scholz_bound": int,
    "workers": int,
    "out": Path,
    "shortcut_only": _parse_bool,
}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then config file, then explicit flags; CCS_OUT is the
    output-dir fallback between the file and the built-in default."""
    cfg = RunConfig()
    env_out = os.environ.get("CCS_OUT")
    if env_out:
        cfg.output_dir = Path(env_out)
    if args.config is not None:
        raw = _load_config_file(Path(args.config))
        for key, value in raw.items():
            if key in _FILE_KEYS:
                parse = _FILE_KEYS[key]
            else:
                raise ConfigurationError(f"unknown config key: {key}")
            try:
                parsed = parse(value)
            except (ValueError, ConfigurationError) as exc:
                raise ConfigurationError(f"bad value for {key}: {value!r}") from exc
            if key == "out":
                cfg.output_dir = parsed
            else:
                setattr(cfg, key, parsed)
    if args.x_max is not None:
        cfg.x_max = args.x_max
    if args.checkpoints is not None:
        cfg.checkpoints = _parse_checkpoints(args.checkpoints)
    if args.truth_x_max is not None:
        cfg.truth_x_max = args.truth_x_max
    if args.scholz_bound is not None:
        cfg.scholz_bound = args.scholz_bound
    if args.workers is not None:
        cfg.workers = args.workers
    if args.out is not None:
        cfg.output_dir = Path(args.out)
    if args.shortcut_only is not None:
        cfg.shortcut_only = args.shortcut_only
    _validate_config(cfg, args.command)
    return cfg


def _validate_config(cfg: RunConfig, command: str) -> None:
    if cfg.x_max < 2:
        raise ConfigurationError("x_max must be >= 2")
    if cfg.workers < 1:
        raise ConfigurationError("workers must be >= 1")
    if not cfg.checkpoints:
        raise ConfigurationError("checkpoints must be nonempty")
    if any(b <= a for a, b in zip(cfg.checkpoints, cfg.checkpoints[1:])):
        raise ConfigurationError("checkpoints must be strictly increasing")
    # checkpoints and x_max are only coupled where both drive the same sweep
    if command == "count" and cfg.checkpoints[-1] > cfg.x_max:
        raise ConfigurationError(
            f"checkpoint {cfg.checkpoints[-1]} exceeds x_max={cfg.x_max}"
        )
    if not 2 <= cfg.truth_x_max <= TRUTH_X_CAP:
        raise ConfigurationError(f"truth_x_max must lie in [2, {TRUTH_X_CAP}]")
    if not 2 <= cfg.scholz_bound <= SCHOLZ_BOUND_CAP:
        raise ConfigurationError(f"scholz_bound must lie in [2, {SCHOLZ_BOUND_CAP}]")


def _outdir(cfg: RunConfig) -> Path:
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    return cfg.output_dir


def cmd_enumerate(cfg: RunConfig) -> int:
    """Sweep the witness box up to x_max and write witnesses.csv."""
    t0 = time.perf_counter()
    items = enumerate_discriminants(cfg.x_max, cfg.enum_config())
    path = _outdir(cfg) / "witnesses.csv"
    write_witnesses_csv(items, path)
    print(f"# enumerate: elapsed {time.perf_counter() - t0:.2f}s")
    print(f"witnesses: {len(items)}")
    print(f"wrote: {path}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Re-validate every witness row; oracle-check 3 | h(d) for d <= truth_x_max."""
    path = cfg.output_dir / "witnesses.csv"
    if not path.is_file():
        raise ConfigurationError(f"witness file not found: {path} (run enumerate first)")
    t0 = time.perf_counter()
    try:
        rows = read_witnesses_csv(path)
    except ValueError as exc:
        # a present but unparseable artifact is a verification failure
        print(f"FAIL parsing {path}: {exc}")
        print("checked: 0")
        print("passed: 0")
        print("failed: 1")
        return EXIT_VERIFY
    checked = passed = failed = 0
    for d, m, n, u in rows:
        checked += 1
        result = validate_witness(n=n, u=u, m=m, d=d)
        ok = isinstance(result, HondaWitness)
        if not ok:
            print(f"FAIL row {d},{m},{n},{u}: {result.reason}: {result.detail}")
        elif d <= cfg.truth_x_max:
            ok = three_divides_real_class_number(d)
            if not ok:
                print(f"FAIL row {d},{m},{n},{u}: oracle reports 3 does not divide h({d})")
        if ok:
            passed += 1
        else:
            failed += 1
    print(f"# verify: elapsed {time.perf_counter() - t0:.2f}s")
    print(f"checked: {checked}")
    print(f"passed: {passed}")
    print(f"failed: {failed}")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def cmd_count(cfg: RunConfig) -> int:
    """Write both count series, check domination, print the slope fit."""
    t0 = time.perf_counter()
    outdir = _outdir(cfg)
    honda_series = honda_count_series(cfg.checkpoints, cfg.enum_config())
    write_series_csv(honda_series, outdir / "n_honda.csv")
    window = (cfg.checkpoints[0], cfg.checkpoints[-1])
    try:
        report = fit_slope(honda_series, window)
    except ValueError as exc:
        print(f"# count: elapsed {time.perf_counter() - t0:.2f}s")
        print(f"slope fit failed: {exc}")
        return EXIT_CONFIG
    truth_checkpoints = [x for x in cfg.checkpoints if x <= cfg.truth_x_max]
    truth_series = None
    if truth_checkpoints:
        truth_series = truth_count_series(
            truth_checkpoints, x_max=cfg.truth_x_max, workers=cfg.workers
        )
        write_series_csv(truth_series, outdir / "n_truth.csv")
        honda_at = dict(honda_series.checkpoints)
        for x, truth_count in truth_series.checkpoints:
            if truth_count < honda_at[x]:
                print(f"CONTAINMENT VIOLATED at X={x}: truth {truth_count} < honda {honda_at[x]}")
                return EXIT_VERIFY
    print(f"# count: elapsed {time.perf_counter() - t0:.2f}s")
    print(f"slope: {report.slope:.4f}")
    print(f"intercept: {report.intercept:.4f}")
    print(f"residual_max: {report.residual_max:.4f}")
    print(f"window: {window[0]}..{window[1]}")
    if truth_series is not None:
        print("containment: truth >= honda at all shared checkpoints")
    return EXIT_OK


def cmd_falsify_scholz(cfg: RunConfig) -> int:
    """Search d <= scholz_bound for reflection counterexamples."""
    t0 = time.perf_counter()
    items = scholz_counterexample_search(cfg.scholz_bound, workers=cfg.workers)
    path = _outdir(cfg) / "counterexamples.csv"
    write_counterexamples_csv(items, path)
    print(f"# falsify-scholz: elapsed {time.perf_counter() - t0:.2f}s")
    print(f"counterexamples: {len(items)}")
    print(f"wrote: {path}")
    if not items:
        print(f"no counterexample below {cfg.scholz_bound}: bug or bound too small")
        return EXIT_EMPTY_FALSIFICATION
    return EXIT_OK


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "count": cmd_count,
    "falsify-scholz": cmd_falsify_scholz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccsieve",
        description="3-divisibility of real quadratic class numbers: "
        "witness sieve, oracle verification, growth counts, reflection falsifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in _COMMANDS.items():
        sp = sub.add_parser(name, help=fn.__doc__)
        sp.add_argument("--x-max", type=int, default=None, dest="x_max")
        sp.add_argument("--checkpoints", type=str, default=None, help="comma list of X values")
        sp.add_argument("--truth-x-max", type=int, default=None, dest="truth_x_max")
        sp.add_argument("--scholz-bound", type=int, default=None, dest="scholz_bound")
        sp.add_argument("--workers", type=int, default=None)
        sp.add_argument("--out", type=str, default=None, help="output directory (or env CCS_OUT)")
        sp.add_argument(
            "--shortcut-only",
            action="store_const",
            const=True,
            default=None,
            dest="shortcut_only",
            help="restrict the sweep to pairs with 3|m-1 and 3 not dividing n",
        )
        sp.add_argument("--config", type=str, default=None, help="key=value config file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return _COMMANDS[args.command](cfg)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OverflowError, ArithmeticError) as exc:
        print(f"arithmetic fault: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
