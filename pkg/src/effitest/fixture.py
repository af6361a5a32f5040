"""Bundled synthetic dataset: two seeded indices on a weekday calendar.

The fixture spans the default scheme's full range so every period is
populated.  Each index drops a different handful of trading days, which
exercises the cross-market forward-fill without introducing warnings.
Regeneration is byte-deterministic for a given seed.
"""

from __future__ import annotations

import datetime as dt
import io
import os

from .simulate import GeneratorSpec, generate, splitmix64

__all__ = ["DEFAULT_FIXTURE_SEED", "FIXTURE_FILES", "build_fixture_rows", "write_fixture"]

DEFAULT_FIXTURE_SEED = 42
FIXTURE_FILES = ("alpha.csv", "beta.csv", "fixture.conf")

_START = dt.date(1996, 1, 1)
_END = dt.date(2016, 4, 8)
_N_DROPPED = 30

_CONF = """\
# Synthetic fixture analysis configuration.
scheme = default
acf_mode = appendix
adf_model = drift_trend
adf_target = returns
hp_lambda = daily
formats = markdown, csv, json
plots = true

[input.1]
path = alpha.csv
index_name = ALPHA

[input.2]
path = beta.csv
index_name = BETA
"""


def _weekdays(start: dt.date, end: dt.date) -> list:
    days = []
    d = start
    one = dt.timedelta(days=1)
    while d <= end:
        if d.weekday() < 5:
            days.append(d)
        d += one
    return days


def build_fixture_rows(seed: int, base_price: float, mean: float, sigma: float) -> list:
    """(date, price) rows for one synthetic index."""
    days = _weekdays(_START, _END)
    rets = generate(GeneratorSpec(kind="iid_gaussian", n=len(days) - 1,
                                  drift=mean, sigma=sigma, seed=seed))
    prices = [base_price]
    for r in rets.tolist():
        prices.append(prices[-1] * (1.0 + r))

    # deterministic market holidays, never the first day
    dropped = set()
    for value in splitmix64(seed ^ 0xD0, 8 * _N_DROPPED).tolist():
        idx = 1 + value % (len(days) - 1)
        dropped.add(idx)
        if len(dropped) >= _N_DROPPED:
            break
    return [(d, p) for i, (d, p) in enumerate(zip(days, prices)) if i not in dropped]


def _csv_bytes(rows) -> bytes:
    buf = io.StringIO()
    buf.write("Date,Close\n")
    for d, p in rows:
        buf.write(f"{d.isoformat()},{p:.6f}\n")
    return buf.getvalue().encode("utf-8")


def write_fixture(out_dir: str, seed: int = DEFAULT_FIXTURE_SEED) -> list:
    """Write alpha.csv, beta.csv, and fixture.conf; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    index_seeds = splitmix64(seed, 2)
    datasets = {
        "alpha.csv": build_fixture_rows(int(index_seeds[0]), base_price=1000.0,
                                        mean=4e-4, sigma=0.015),
        "beta.csv": build_fixture_rows(int(index_seeds[1]), base_price=400.0,
                                       mean=3e-4, sigma=0.011),
    }
    paths = []
    for fname, rows in datasets.items():
        path = os.path.join(out_dir, fname)
        with open(path, "wb") as fh:
            fh.write(_csv_bytes(rows))
        paths.append(path)
    conf_path = os.path.join(out_dir, "fixture.conf")
    with open(conf_path, "wb") as fh:
        fh.write(_CONF.encode("utf-8"))
    paths.append(conf_path)
    return paths
