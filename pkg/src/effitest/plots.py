"""SVG figure emission: one set of charts per index and period.

Every chart is a self-contained deterministic SVG built by
:mod:`effitest.svg`; identical input produces identical bytes.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .distributions import normal_icdf
from .errors import EffitestError
from .hpfilter import hp_filter
from .report import Report
from .svg import Canvas

__all__ = ["emit_plots"]


def _date_axis(dates):
    xs = [d.toordinal() for d in dates]
    labels = [(0.0, dates[0].isoformat()), (1.0, dates[-1].isoformat())]
    if len(dates) > 2:
        labels.insert(1, (0.5, dates[len(dates) // 2].isoformat()))
    return xs, labels


def _line_chart(title, dates, values, color):
    xs, labels = _date_axis(dates)
    lo, hi = float(np.min(values)), float(np.max(values))
    pad = 0.05 * (hi - lo if hi > lo else max(abs(hi), 1.0))
    canvas = Canvas(title, (xs[0], xs[-1]), (lo - pad, hi + pad), x_labels=labels)
    canvas.polyline(xs, values, color=color)
    return canvas.render()


def _placeholder(title, message):
    canvas = Canvas(title, (0, 1), (0, 1))
    canvas.note(message)
    return canvas.render()


def _histogram_chart(title, values):
    x = np.asarray(values, dtype=float)
    mu = float(np.mean(x))
    sigma = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
    if sigma == 0.0:
        return _placeholder(title, "zero variance")
    bins = max(10, min(60, int(math.ceil(math.sqrt(x.size)))))
    counts, edges = np.histogram(x, bins=bins, density=True)
    grid = np.linspace(edges[0], edges[-1], 120)
    pdf = np.exp(-0.5 * ((grid - mu) / sigma) ** 2) / (sigma * math.sqrt(2.0 * math.pi))
    top = 1.08 * max(float(counts.max()), float(pdf.max()))
    canvas = Canvas(title, (edges[0], edges[-1]), (0.0, top))
    for i, c in enumerate(counts):
        canvas.bar(edges[i], edges[i + 1], float(c))
    canvas.polyline(grid, pdf, color="#d62728", width=1.5)
    return canvas.render()


def _probability_chart(title, values):
    x = np.sort(np.asarray(values, dtype=float))
    n = x.size
    positions = normal_icdf((np.arange(1, n + 1) - 0.5) / n)
    canvas = Canvas(title, (x[0], x[-1]),
                    (float(positions[0]), float(positions[-1])))
    mu, sigma = float(np.mean(x)), float(np.std(x, ddof=1)) if n > 1 else 0.0
    if sigma > 0:
        # reference line: the fitted normal maps mu + sigma*z onto z
        canvas.polyline([mu + sigma * positions[0], mu + sigma * positions[-1]],
                        [positions[0], positions[-1]], color="#d62728")
    canvas.circles(x, positions)
    return canvas.render()


def _acf_chart(title, acf_result):
    k = acf_result.lags
    rho = acf_result.rho
    se = (acf_result.se_paper_table if acf_result.mode == "paper_table"
          else acf_result.se_appendix)
    band = 1.959963984540054 * se
    top = 1.15 * max(float(np.max(np.abs(rho))), band)
    canvas = Canvas(title, (0, k + 1), (-top, top))
    canvas.hline(0.0)
    canvas.hline(band, color="#d62728", dashed=True)
    canvas.hline(-band, color="#d62728", dashed=True)
    for i in range(k):
        canvas.vline_segment(i + 1, 0.0, float(rho[i]))
    return canvas.render()


def _hp_chart(title, dates, values, lam):
    decomp = hp_filter(values, lam)
    xs, labels = _date_axis(dates)
    lo = float(min(np.min(values), np.min(decomp.trend)))
    hi = float(max(np.max(values), np.max(decomp.trend)))
    pad = 0.05 * (hi - lo if hi > lo else max(abs(hi), 1.0))
    canvas = Canvas(title, (xs[0], xs[-1]), (lo - pad, hi + pad), x_labels=labels)
    canvas.polyline(xs, values, color="#9ecae1")
    canvas.polyline(xs, decomp.trend, color="#d62728", width=1.5)
    return canvas.render()


def emit_plots(report: Report, loaded: list, output_dir: str) -> list:
    """Write the full chart set; returns the sorted relative file names.

    Raises
    ------
    EffitestError
        If the output directory cannot be written.
    """
    plot_dir = os.path.join(output_dir, "plots")
    try:
        os.makedirs(plot_dir, exist_ok=True)
        probe = os.path.join(plot_dir, ".write-probe")
        with open(probe, "wb"):
            pass
        os.remove(probe)
    except OSError as exc:
        raise EffitestError(f"cannot write plots to {plot_dir!r}: {exc}") from None

    emitted = {}
    for item, idx_report in zip(loaded, report.indices):
        name = item.index_name
        for label in report.period_labels:
            prices = item.prices_by_period[label]
            rets = item.returns_by_period[label]
            period_result = idx_report.periods[label]
            tag = f"{name}_{label}"
            if len(prices) >= 2:
                emitted[f"prices_{tag}.svg"] = _line_chart(
                    f"{name} prices, period {label}", prices.dates, prices.values, "#1f77b4")
            if len(rets) >= 2:
                emitted[f"returns_{tag}.svg"] = _line_chart(
                    f"{name} daily returns, period {label}", rets.dates, rets.values, "#2ca02c")
                emitted[f"hist_{tag}.svg"] = _histogram_chart(
                    f"{name} return histogram, period {label}", rets.values)
                emitted[f"pplot_{tag}.svg"] = _probability_chart(
                    f"{name} normal probability plot, period {label}", rets.values)
            if period_result.acf is not None:
                emitted[f"acf_{tag}.svg"] = _acf_chart(
                    f"{name} autocorrelations, period {label}", period_result.acf)
            if period_result.hp is not None and len(rets) >= 4:
                emitted[f"hp_{tag}.svg"] = _hp_chart(
                    f"{name} HP trend of returns, period {label}",
                    rets.dates, rets.values, period_result.hp.lam)

    for fname in sorted(emitted):
        with open(os.path.join(plot_dir, fname), "wb") as fh:
            fh.write(emitted[fname])
    return sorted(emitted)
