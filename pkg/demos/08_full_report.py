"""End-to-end: configuration -> full battery -> rendered tables and charts.

Everything the separate demos show, orchestrated through the library's
report pipeline.  Output lands in demos/demo_out: markdown and CSV tables
shaped like the reference layout (five period columns), a JSON report that
round-trips losslessly, and deterministic SVG charts.

The CLI equivalent is:  effitest analyze demo_data/fixture.conf --out demo_out
"""

import os

from effitest import load_config, load_inputs, emit_plots, render, run_analysis, write_fixture

from _data import DATA_DIR

OUT_DIR = os.path.join(os.path.dirname(__file__), "demo_out")


def main():
    if not os.path.exists(os.path.join(DATA_DIR, "fixture.conf")):
        write_fixture(DATA_DIR)
    config = load_config(os.path.join(DATA_DIR, "fixture.conf"))

    loaded = load_inputs(config)
    report = run_analysis(config, loaded)
    print(f"periods: {report.period_labels}")
    print(f"warnings: {len(report.warnings)}")

    os.makedirs(OUT_DIR, exist_ok=True)
    count = 0
    for fmt_name in ("markdown", "csv", "json"):
        for fname, payload in render(report, fmt_name).items():
            with open(os.path.join(OUT_DIR, fname), "wb") as fh:
                fh.write(payload)
            count += 1
    charts = emit_plots(report, loaded, OUT_DIR)
    print(f"wrote {count} tables and {len(charts)} charts to {OUT_DIR}")

    alpha = report.indices[0].periods
    print("\nADF tau by period (ALPHA):",
          {label: round(p.adf.tau, 2) for label, p in alpha.items() if p.adf})
    print("Ljung-Box p by period (ALPHA):",
          {label: round(p.lb.p_value, 3) for label, p in alpha.items() if p.lb})


if __name__ == "__main__":
    main()
