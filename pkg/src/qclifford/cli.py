"""Command-line front end: run suites, diff reports, list checks."""

from __future__ import annotations

import argparse
import sys

from . import report as report_mod
from . import suites as suites_mod
from .qgamma import ActionConvention


class ConfigError(Exception):
    pass


_MODES = ("exact", "numeric", "both")
_CONVENTION_VALUES = tuple(c.value for c in ActionConvention)


def _parse_q_range(text: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError as exc:
        raise ConfigError(f"bad q range {text!r}, expected LO:HI") from exc
    if lo >= hi:
        raise ConfigError("q range must satisfy LO < HI")
    if lo <= 0 <= hi:
        raise ConfigError("q range must exclude 0")
    return lo, hi


def load_config_file(path: str) -> dict:
    """key = value lines; '#' starts a comment; lists are comma separated."""
    values: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, val = (part.strip() for part in line.split("=", 1))
                values[key] = val
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    return values


def _apply_config_file(args: argparse.Namespace, values: dict) -> None:
    """File values fill in anything the command line left at its default."""
    if "suite" in values and not args.suite:
        args.suite = [s.strip() for s in values["suite"].split(",") if s.strip()]
    if "mode" in values and args.mode is None:
        args.mode = values["mode"]
    if "q_samples" in values and args.q_samples is None:
        args.q_samples = int(values["q_samples"])
    if "q_range" in values and args.q_range is None:
        args.q_range = values["q_range"]
    if "seed" in values and args.seed is None:
        args.seed = int(values["seed"])
    if "strict" in values and not args.strict:
        args.strict = values["strict"].lower() in ("1", "true", "yes")
    if "convention" in values and not args.convention:
        args.convention = [
            s.strip() for s in values["convention"].split(",") if s.strip()
        ]
    if "format" in values and args.format is None:
        args.format = values["format"]
    if "out" in values and args.out is None:
        args.out = values["out"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qclifford",
        description="Exact verification suites for deformed Clifford and Hopf algebra identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("verify", help="run verification suites")
    run.add_argument("--suite", action="append", default=None, metavar="S",
                     help="suite name or 'all'; repeatable")
    run.add_argument("--mode", choices=_MODES, default=None)
    run.add_argument("--q-samples", dest="q_samples", type=int, default=None)
    run.add_argument("--q-range", dest="q_range", default=None, metavar="LO:HI")
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--strict", action="store_true", default=False,
                     help="report-status mismatches against targets also fail")
    run.add_argument("--format", choices=("text", "json"), default=None)
    run.add_argument("--out", default=None, metavar="PATH")
    run.add_argument("--convention", action="append", default=None,
                     choices=_CONVENTION_VALUES, help="restrict action conventions")
    run.add_argument("--config", default=None, metavar="PATH",
                     help="key = value file mirroring the flags; flags win")

    diff = sub.add_parser("diff", help="compare two report files")
    diff.add_argument("report_a")
    diff.add_argument("report_b")
    diff.add_argument("--tolerance", type=float, default=0.0)

    sub.add_parser("list-checks", help="print the claims index of all checks")
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.config:
        _apply_config_file(args, load_config_file(args.config))
    suites = args.suite or ["all"]
    mode = args.mode or "both"
    q_samples = args.q_samples if args.q_samples is not None else 8
    seed = args.seed if args.seed is not None else 0
    fmt = args.format or "text"
    q_range = _parse_q_range(args.q_range) if args.q_range else (0.5, 2.0)
    if q_samples < 1:
        raise ConfigError("q_samples must be positive")
    if mode not in _MODES:
        raise ConfigError(f"unknown mode {mode!r}")
    conv_values = args.convention or list(_CONVENTION_VALUES)
    conventions = tuple(ActionConvention(v) for v in conv_values)
    try:
        chosen = suites_mod.resolve_suites(suites)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    ctx = suites_mod.RunContext(
        mode=mode,
        q_samples=q_samples,
        q_range=q_range,
        seed=seed,
        conventions=conventions,
    )
    reports = suites_mod.run_checks(chosen, ctx)
    config_dict = {
        "suites": chosen,
        "mode": mode,
        "q_samples": q_samples,
        "q_range": [report_mod.format_float(q_range[0]), report_mod.format_float(q_range[1])],
        "seed": seed,
        "strict": bool(args.strict),
        "conventions": sorted(c.value for c in conventions),
    }
    if fmt == "json":
        text = report_mod.reports_to_json(config_dict, reports)
    else:
        text = report_mod.format_text(config_dict, reports)
    if args.out:
        try:
            report_mod.write_atomic(args.out, text)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return suites_mod.exit_code(reports, bool(args.strict))


def _cmd_diff(args: argparse.Namespace) -> int:
    try:
        doc_a = report_mod.load_report(args.report_a)
        doc_b = report_mod.load_report(args.report_b)
    except report_mod.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    diffs = report_mod.diff_reports(doc_a, doc_b, args.tolerance)
    for d in diffs:
        print(f"{d.check_id}: {d.kind} {d.a_value!r} -> {d.b_value!r}")
    if not diffs:
        print("no differences")
    return 0 if not diffs else 1


def _cmd_list_checks(_args: argparse.Namespace) -> int:
    defs = suites_mod.registry()
    width = max(len(c.check_id) for c in defs)
    for c in defs:
        print(f"{c.check_id:<{width}s}  [{c.suite}]  {c.description}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "diff":
            return _cmd_diff(args)
        if args.command == "list-checks":
            return _cmd_list_checks(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
