"""Orchestration of the full test battery and report rendering.

``run_analysis`` walks each input through ingest, return computation,
segmentation, and the per-period battery; a failing period becomes a
warning and an empty cell, never a whole-run abort.  Rendering mirrors the
tables of the reference workflow: one table per test kind per index, five
period columns, parenthesized companion values where the layout uses them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .config import AnalysisConfig
from .crossmarket import align, pearson
from .descriptive import DescriptiveStats, TestResult, describe, jarque_bera
from .errors import EffitestError
from .hpfilter import hp_filter
from .ingest import IngestReport, parse_price_csv
from .randomness import AcfResult, RunsResult, acf, ljung_box, runs_test
from .series import PriceSeries, ReturnSeries, compute_returns, segment
from .unitroot import AdfResult, adf_test

__all__ = ["Report", "IndexReport", "PeriodResult", "HpSummary", "LoadedInput",
           "load_inputs", "run_analysis", "render", "report_to_json", "report_from_json"]

Z_CRIT = 1.959963984540054


@dataclass(frozen=True)
class HpSummary:
    """Condensed trend/cycle decomposition results for one period."""

    lam: float
    trend_std: float
    cycle_std: float
    objective_value: float


@dataclass
class PeriodResult:
    label: str
    n: int = 0
    start: str = ""
    end: str = ""
    descriptive: DescriptiveStats | None = None
    jb: TestResult | None = None
    runs_mean: RunsResult | None = None
    runs_zero: RunsResult | None = None
    acf: AcfResult | None = None
    lb: TestResult | None = None
    adf: AdfResult | None = None
    hp: HpSummary | None = None


@dataclass
class IndexReport:
    index_name: str
    n_prices: int
    periods: dict


@dataclass
class Report:
    period_labels: tuple
    indices: list
    correlations: dict | None = None
    warnings: list = field(default_factory=list)
    settings: dict = field(default_factory=dict)


@dataclass
class LoadedInput:
    """Parsed input plus its segmented prices and returns, reused by plots."""

    index_name: str
    prices: PriceSeries
    returns: ReturnSeries
    prices_by_period: dict
    returns_by_period: dict
    ingest: IngestReport


def load_inputs(config: AnalysisConfig) -> list:
    loaded = []
    for spec in config.inputs:
        with open(spec.path, "rb") as fh:
            content = fh.read()
        prices, ingest_report = parse_price_csv(content, spec.schema, spec.index_name)
        returns = compute_returns(prices)
        loaded.append(LoadedInput(
            index_name=spec.index_name,
            prices=prices,
            returns=returns,
            prices_by_period=segment(prices, config.scheme),
            returns_by_period=segment(returns, config.scheme),
            ingest=ingest_report,
        ))
    return loaded


def _try(warnings: list, index: str, label: str, what: str, fn):
    try:
        return fn()
    except EffitestError as exc:
        warnings.append(f"{index}/{label}/{what}: {exc}")
        return None


def _analyze_period(config: AnalysisConfig, item: LoadedInput, label: str,
                    warnings: list) -> PeriodResult:
    rets = item.returns_by_period[label]
    prices = item.prices_by_period[label]
    result = PeriodResult(label=label, n=len(rets))
    if len(rets) == 0:
        warnings.append(f"{item.index_name}/{label}: period is empty")
        return result
    result.start = rets.dates[0].isoformat()
    result.end = rets.dates[-1].isoformat()

    name = item.index_name
    result.descriptive = _try(warnings, name, label, "describe", lambda: describe(rets))
    if result.descriptive is not None:
        result.jb = _try(warnings, name, label, "jarque_bera",
                         lambda: jarque_bera(result.descriptive))
    result.runs_mean = _try(warnings, name, label, "runs_test(mean)",
                            lambda: runs_test(rets, "mean"))
    result.runs_zero = _try(warnings, name, label, "runs_test(zero)",
                            lambda: runs_test(rets, "zero"))
    result.acf = _try(warnings, name, label, "acf",
                      lambda: acf(rets, config.acf_lags, config.acf_mode))
    if result.acf is not None:
        result.lb = _try(warnings, name, label, "ljung_box",
                         lambda: ljung_box(result.acf, len(rets), config.lb_horizon))

    if config.adf_target == "returns":
        adf_input = rets.values
    else:
        adf_input = np.log(prices.values) if len(prices) else np.empty(0)
    result.adf = _try(warnings, name, label, "adf",
                      lambda: adf_test(adf_input, model=config.adf_model,
                                       target=config.adf_target))

    def run_hp():
        decomp = hp_filter(rets.values, config.hp_lambda)
        return HpSummary(
            lam=decomp.lam,
            trend_std=float(np.std(decomp.trend, ddof=1)) if len(rets) > 1 else 0.0,
            cycle_std=float(np.std(decomp.cycle, ddof=1)) if len(rets) > 1 else 0.0,
            objective_value=decomp.objective_value,
        )

    result.hp = _try(warnings, name, label, "hp_filter", run_hp)
    return result


def _correlations(config: AnalysisConfig, loaded: list, warnings: list) -> dict:
    pair = align(loaded[0].prices, loaded[1].prices)
    a_prices, b_prices = pair.as_series()
    a_rets, b_rets = compute_returns(a_prices), compute_returns(b_prices)
    out = {}
    for period in config.scheme.periods:
        label = period.label
        p_keep = [i for i, d in enumerate(pair.dates) if period.contains(d)]
        r_keep = [i for i, d in enumerate(a_rets.dates) if period.contains(d)]
        cell = {"n": len(p_keep), "prices": None, "returns": None}
        name = f"{pair.a_name}~{pair.b_name}"
        if p_keep:
            cell["prices"] = _try(warnings, name, label, "pearson(prices)",
                                  lambda: pearson(pair.a_values[p_keep], pair.b_values[p_keep]))
        if r_keep:
            cell["returns"] = _try(warnings, name, label, "pearson(returns)",
                                   lambda: pearson(a_rets.values[r_keep], b_rets.values[r_keep]))
        out[label] = cell
    return {
        "pair": f"{pair.a_name}~{pair.b_name}",
        "fill_count_a": pair.fill_count_a,
        "fill_count_b": pair.fill_count_b,
        "by_period": out,
    }


def run_analysis(config: AnalysisConfig, loaded: list | None = None) -> Report:
    """Execute the whole battery per the config; deterministic per input.

    Errors inside one period are recorded as warnings; input-level errors
    (unreadable file, bad schema) propagate.
    """
    if loaded is None:
        loaded = load_inputs(config)
    warnings: list = []
    indices = []
    for item in loaded:
        periods = {}
        for period in config.scheme.periods:
            periods[period.label] = _analyze_period(config, item, period.label, warnings)
        indices.append(IndexReport(item.index_name, len(item.prices), periods))

    correlations = None
    if len(loaded) == 2:
        try:
            correlations = _correlations(config, loaded, warnings)
        except EffitestError as exc:
            warnings.append(f"cross-market: {exc}")

    return Report(
        period_labels=tuple(config.scheme.labels),
        indices=indices,
        correlations=correlations,
        warnings=warnings,
        settings={
            "acf_mode": config.acf_mode,
            "adf_model": config.adf_model,
            "adf_target": config.adf_target,
            "hp_lambda": config.hp_lambda,
            "acf_lags": config.acf_lags,
            "lb_horizon": config.lb_horizon,
        },
    )


# ---------------------------------------------------------------- rendering

def fmt(x) -> str:
    """Four fixed decimals; scientific when |x| >= 1e4 or < 1e-3."""
    if x is None:
        return "n/a"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "n/a"
    if x == 0.0:
        return "0.0000"
    if abs(x) >= 1e4 or abs(x) < 1e-3:
        return f"{x:.4e}"
    return f"{x:.4f}"


def _fmt_p_floored(p, star_when_reject=True) -> str:
    """JB-table convention: display floor 1e-4, star marks rejection."""
    if p is None:
        return "n/a"
    star = "*" if (p < 0.05) == star_when_reject else ""
    return ("0.0001" if p < 1e-4 else fmt(p)) + star


def _pair(a, b) -> str:
    return f"{a} ({b})"


def _descriptive_rows(periods: dict, labels) -> list:
    rows = [
        ("Start", [periods[c].start or "n/a" for c in labels]),
        ("End", [periods[c].end or "n/a" for c in labels]),
        ("Observations", [fmt(periods[c].n) for c in labels]),
    ]
    for title, attr in (("Mean returns", "mean"), ("Max. returns", "max"),
                        ("Min. returns", "min"), ("Std. deviation", "std_dev"),
                        ("Skewness", "skewness"), ("Kurtosis", "kurtosis")):
        rows.append((title, [fmt(getattr(periods[c].descriptive, attr, None)
                                 if periods[c].descriptive else None) for c in labels]))
    rows.append(("Jarque-Bera", [fmt(periods[c].jb.statistic) if periods[c].jb else "n/a"
                                 for c in labels]))
    rows.append(("JB p-value", [_fmt_p_floored(periods[c].jb.p_value if periods[c].jb else None)
                                for c in labels]))
    return rows


def _runs_rows(periods: dict, labels) -> list:
    def cell(c, attr):
        m, z = periods[c].runs_mean, periods[c].runs_zero
        if m is None and z is None:
            return "n/a"
        def one(r):
            if r is None:
                return "n/a"
            if attr == "z":
                return fmt(abs(r.z)) + ("" if r.reject_at_5pct else "*")
            if attr == "p_value":
                return fmt(r.p_value)
            return fmt(getattr(r, attr))
        return _pair(one(m), one(z))

    return [
        ("N", [fmt(periods[c].n) for c in labels]),
        ("Nruns", [cell(c, "n_runs") for c in labels]),
        ("n1", [cell(c, "n_above") for c in labels]),
        ("n0", [cell(c, "n_below") for c in labels]),
        ("n2", [cell(c, "n_equal") for c in labels]),
        ("Z", [cell(c, "z") for c in labels]),
        ("p-value", [cell(c, "p_value") for c in labels]),
    ]


def _adf_rows(periods: dict, labels) -> list:
    def get(c, attr):
        a = periods[c].adf
        return fmt(getattr(a, attr)) if a is not None else "n/a"

    return [
        ("ADF Test Statistic", [get(c, "tau") for c in labels]),
        ("p-value", [get(c, "p_value") for c in labels]),
        ("Number of Lags", [get(c, "lags") for c in labels]),
        ("Number of Observations", [get(c, "n_obs") for c in labels]),
    ]


def _acf_rows(periods: dict, labels, max_lag: int) -> list:
    rows = []
    for k in range(1, max_lag + 1):
        cells = []
        for c in labels:
            a = periods[c].acf
            if a is None or a.lags < k:
                cells.append("n/a")
            else:
                cells.append(_pair(fmt(a.rho[k - 1]), fmt(a.t_values[k - 1])))
        rows.append((str(k), cells))

    def stat(c, getter):
        a = periods[c].acf
        return fmt(getter(a)) if a is not None else "n/a"

    rows.append(("Standard Deviation",
                 [stat(c, lambda a: float(np.std(a.rho, ddof=1))) for c in labels]))
    rows.append(("Standard Error",
                 [stat(c, lambda a: a.se_paper_table if a.mode == "paper_table" else a.se_appendix)
                  for c in labels]))

    def q_cell(c):
        lb = periods[c].lb
        if lb is None:
            return "n/a"
        return fmt(lb.statistic) + ("*" if lb.reject_at_5pct else "")

    rows.append(("Ljung-Box Q-Stat", [q_cell(c) for c in labels]))
    rows.append(("p-value", [fmt(periods[c].lb.p_value) if periods[c].lb else "n/a"
                             for c in labels]))
    return rows


def _hp_rows(periods: dict, labels) -> list:
    def get(c, attr):
        h = periods[c].hp
        return fmt(getattr(h, attr)) if h is not None else "n/a"

    return [
        ("Lambda", [get(c, "lam") for c in labels]),
        ("Trend std", [get(c, "trend_std") for c in labels]),
        ("Cycle std", [get(c, "cycle_std") for c in labels]),
        ("Objective", [get(c, "objective_value") for c in labels]),
    ]


def _corr_rows(correlations: dict, labels) -> list:
    by = correlations["by_period"]
    def get(c, key):
        cell = by.get(c)
        return fmt(cell[key]) if cell and cell[key] is not None else "n/a"
    return [
        ("Returns", [get(c, "returns") for c in labels]),
        ("Prices", [get(c, "prices") for c in labels]),
        ("Aligned observations", [fmt(by[c]["n"]) if c in by else "n/a" for c in labels]),
    ]


_LEGENDS = {
    "descriptive": "JB p-value row: display floor 0.0001; * = normality rejected at the 5% level.",
    "runs": ("Cells show mean-reference values with zero-reference in parentheses. "
             "Z is reported as |Z|; * = randomness NOT rejected at the 5% level (|Z| <= 1.96)."),
    "adf": "Unit-root null; p-values clamped to [0.01, 0.99]. Rejection (p < 0.05) indicates stationarity.",
    "acf": ("Cells show rho with its t-value in parentheses; significance threshold |t| > 1.96. "
            "Ljung-Box Q: * = no-autocorrelation null rejected at the 5% level."),
    "hp": "Trend/cycle decomposition of returns at the stated lambda.",
    "correlations": "Pearson correlation of calendar-aligned prices and of returns computed from them.",
}


def _tables_for(report: Report) -> list:
    """(name, kind, rows, title) for every table in layout order."""
    labels = report.period_labels
    out = []
    for idx in report.indices:
        p = idx.periods
        name = idx.index_name
        out.append((f"descriptive_{name}", "descriptive", _descriptive_rows(p, labels),
                    f"Descriptive statistics for the returns of {name}"))
        out.append((f"runs_{name}", "runs", _runs_rows(p, labels),
                    f"Runs tests for the returns of {name} relative to mean (zero)"))
        out.append((f"adf_{name}", "adf", _adf_rows(p, labels),
                    f"ADF test ({report.settings['adf_model']}, on {report.settings['adf_target']}) for {name}"))
        max_lag = max((p[c].acf.lags for c in labels if p[c].acf is not None), default=0)
        out.append((f"acf_{name}", "acf", _acf_rows(p, labels, max_lag),
                    f"Serial correlation coefficients for returns of {name} (t-values, {report.settings['acf_mode']} SE)"))
        out.append((f"hp_{name}", "hp", _hp_rows(p, labels),
                    f"Hodrick-Prescott decomposition summary for returns of {name}"))
    if report.correlations is not None:
        out.append(("correlations", "correlations",
                    _corr_rows(report.correlations, labels),
                    f"Correlations between market prices and returns ({report.correlations['pair']})"))
    return out


def _to_markdown(title: str, rows: list, labels, legend: str) -> bytes:
    lines = [f"## {title}", ""]
    lines.append("| | " + " | ".join(labels) + " |")
    lines.append("|" + "---|" * (len(labels) + 1))
    for row_label, cells in rows:
        lines.append(f"| {row_label} | " + " | ".join(cells) + " |")
    lines += ["", f"Legend: {legend}", ""]
    return "\n".join(lines).encode("utf-8")


def _to_csv(rows: list, labels) -> bytes:
    import csv as _csv
    import io as _io

    buf = _io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(labels))
    for row_label, cells in rows:
        writer.writerow([row_label] + list(cells))
    return buf.getvalue().encode("utf-8")


def render(report: Report, fmt_name: str) -> dict:
    """Render the report to a mapping of file name -> bytes.

    ``markdown`` and ``csv`` produce one file per table; ``json`` produces a
    single ``report.json`` that re-parses to a value-identical report.
    """
    if fmt_name == "json":
        return {"report.json": report_to_json(report)}
    tables = {}
    for name, kind, rows, title in _tables_for(report):
        if fmt_name == "markdown":
            tables[f"{name}.md"] = _to_markdown(title, rows, report.period_labels,
                                                _LEGENDS[kind])
        elif fmt_name == "csv":
            tables[f"{name}.csv"] = _to_csv(rows, report.period_labels)
        else:
            raise EffitestError(f"unknown render format {fmt_name!r}")
    if fmt_name == "markdown" and report.warnings:
        body = "## Warnings\n\n" + "\n".join(f"- {w}" for w in report.warnings) + "\n"
        tables["warnings.md"] = body.encode("utf-8")
    return tables


# ------------------------------------------------------------- JSON codec

def _encode(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, np.ndarray):
        return [float(v) for v in obj]
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if hasattr(obj, "__dataclass_fields__"):
        return {k: _encode(getattr(obj, k)) for k in obj.__dataclass_fields__}
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    raise TypeError(f"cannot encode {type(obj)!r}")


def report_to_json(report: Report) -> bytes:
    payload = _encode(report)
    return (json.dumps(payload, indent=1, sort_keys=False) + "\n").encode("utf-8")


def _decode_period(d: dict) -> PeriodResult:
    def build(cls, data, arrays=()):
        if data is None:
            return None
        kwargs = dict(data)
        for key in arrays:
            kwargs[key] = np.asarray(kwargs[key], dtype=float)
        return cls(**kwargs)

    return PeriodResult(
        label=d["label"], n=d["n"], start=d["start"], end=d["end"],
        descriptive=build(DescriptiveStats, d["descriptive"]),
        jb=build(TestResult, d["jb"]),
        runs_mean=build(RunsResult, d["runs_mean"]),
        runs_zero=build(RunsResult, d["runs_zero"]),
        acf=build(AcfResult, d["acf"], arrays=("rho", "t_values")),
        lb=build(TestResult, d["lb"]),
        adf=build(AdfResult, d["adf"]),
        hp=build(HpSummary, d["hp"]),
    )


def report_from_json(data) -> Report:
    """Inverse of :func:`report_to_json`."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    payload = json.loads(data)
    indices = [
        IndexReport(
            index_name=idx["index_name"],
            n_prices=idx["n_prices"],
            periods={label: _decode_period(p) for label, p in idx["periods"].items()},
        )
        for idx in payload["indices"]
    ]
    return Report(
        period_labels=tuple(payload["period_labels"]),
        indices=indices,
        correlations=payload["correlations"],
        warnings=list(payload["warnings"]),
        settings=dict(payload["settings"]),
    )
