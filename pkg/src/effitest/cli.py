"""Command line entry points: analyze, validate-mc, fixture.

Exit codes: 0 success, 1 input error, 2 config error, 3 internal numeric
failure (including a failing Monte-Carlo battery).
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import AnalysisConfig, CsvSchema, InputSpec, load_config, parse_scheme, with_overrides
from .errors import ConfigurationError, EffitestError, InvalidInputError
from .fixture import DEFAULT_FIXTURE_SEED, write_fixture
from .hpfilter import default_lambda
from .plots import emit_plots
from .report import load_inputs, render, run_analysis
from .simulate import acceptance_battery

OUT_ENV = "EFFITEST_OUT"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="effitest",
                                     description="Weak-form market efficiency test battery")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the full battery and write reports")
    analyze.add_argument("config_path", nargs="?", help="configuration file")
    analyze.add_argument("--config", dest="config_flag", help="configuration file (alternative)")
    analyze.add_argument("--input", action="append", default=None,
                         help="price CSV path (repeat for a second market)")
    analyze.add_argument("--index-name", action="append", default=None,
                         help="label for the matching --input")
    analyze.add_argument("--date-col", default=None)
    analyze.add_argument("--price-col", default=None)
    analyze.add_argument("--scheme", default=None,
                         help="'default', 'single', or 'LABEL=START..END; ...'")
    analyze.add_argument("--acf-mode", choices=["appendix", "paper_table"], default=None)
    analyze.add_argument("--adf-model", choices=["none", "drift", "drift_trend"], default=None)
    analyze.add_argument("--adf-target", choices=["returns", "log_prices"], default=None)
    analyze.add_argument("--hp-lambda", default=None,
                         help="positive number, or daily|monthly|quarterly|annual")
    analyze.add_argument("--formats", default=None, help="comma list from markdown,csv,json")
    analyze.add_argument("--plots", action=argparse.BooleanOptionalAction, default=None)
    analyze.add_argument("--out", default=None, help="output directory")
    analyze.add_argument("--seed", type=int, default=None)

    validate = sub.add_parser("validate-mc", help="run the Monte-Carlo size/power battery")
    validate.add_argument("--seed", type=int, default=42)

    fixture = sub.add_parser("fixture", help="regenerate the bundled synthetic dataset")
    fixture.add_argument("--out", default="fixture")
    fixture.add_argument("--seed", type=int, default=DEFAULT_FIXTURE_SEED)

    return parser


def _config_from_args(args) -> AnalysisConfig:
    path = args.config_path or args.config_flag
    if path:
        config = load_config(path)
    elif args.input:
        config = None
    else:
        raise ConfigurationError("analyze needs a config file or at least one --input")

    overrides = {}
    if args.scheme is not None:
        overrides["scheme"] = parse_scheme(args.scheme)
    for flag, key in (("acf_mode", "acf_mode"), ("adf_model", "adf_model"),
                      ("adf_target", "adf_target"), ("out", "output_dir"),
                      ("plots", "plots"), ("seed", "seed")):
        value = getattr(args, flag)
        if value is not None:
            overrides[key] = value
    if args.hp_lambda is not None:
        try:
            overrides["hp_lambda"] = float(args.hp_lambda)
        except ValueError:
            overrides["hp_lambda"] = default_lambda(args.hp_lambda)
    if args.formats is not None:
        overrides["formats"] = tuple(f.strip() for f in args.formats.split(",") if f.strip())

    if args.input:
        names = args.index_name or []
        if len(names) > len(args.input):
            raise ConfigurationError("more --index-name values than --input values")
        schema = CsvSchema(date_column=args.date_col or "Date", price_column=args.price_col)
        inputs = []
        for i, p in enumerate(args.input):
            name = names[i] if i < len(names) else os.path.splitext(os.path.basename(p))[0]
            inputs.append(InputSpec(path=p, index_name=name, schema=schema))
        overrides["inputs"] = tuple(inputs)

    if config is None:
        return AnalysisConfig(**overrides)
    return with_overrides(config, **overrides)


def _resolve_out(config: AnalysisConfig) -> str:
    return config.output_dir or os.environ.get(OUT_ENV) or "out"


def _cmd_analyze(args) -> int:
    config = _config_from_args(args)
    out_dir = _resolve_out(config)
    loaded = load_inputs(config)
    report = run_analysis(config, loaded)

    os.makedirs(out_dir, exist_ok=True)
    written = []
    for fmt_name in config.formats:
        for fname, payload in render(report, fmt_name).items():
            path = os.path.join(out_dir, fname)
            with open(path, "wb") as fh:
                fh.write(payload)
            written.append(fname)
    if config.plots:
        written += [os.path.join("plots", f) for f in emit_plots(report, loaded, out_dir)]

    for item in loaded:
        ing = item.ingest
        print(f"{item.index_name}: {len(item.prices)} prices "
              f"({ing.rows_dropped} rows dropped), {len(item.returns)} returns")
    for warning in report.warnings:
        print(f"warning: {warning}")
    print(f"wrote {len(written)} files to {out_dir}")

    if config.mc_validate:
        return _run_battery(config.seed)
    return 0


def _run_battery(seed: int) -> int:
    checks = acceptance_battery(seed)
    all_ok = True
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status}  {check.name}: rate={check.rate:.4f} "
              f"target=[{check.lo:.2f}, {check.hi:.2f}]")
        all_ok &= check.passed
    return 0 if all_ok else 3


def _cmd_fixture(args) -> int:
    paths = write_fixture(args.out, args.seed)
    for p in paths:
        print(f"wrote {p}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "validate-mc":
            return _run_battery(args.seed)
        return _cmd_fixture(args)
    except ConfigurationError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except InvalidInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except EffitestError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
