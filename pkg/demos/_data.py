"""Shared helper: make sure the synthetic dataset exists and load it."""

import os

from effitest import CsvSchema, compute_returns, parse_price_csv, write_fixture

DATA_DIR = os.path.join(os.path.dirname(__file__), "demo_data")


def load_fixture():
    """Two (PriceSeries, ReturnSeries) pairs from the bundled seeded fixture."""
    if not os.path.exists(os.path.join(DATA_DIR, "alpha.csv")):
        write_fixture(DATA_DIR)
    out = {}
    for fname, name in (("alpha.csv", "ALPHA"), ("beta.csv", "BETA")):
        with open(os.path.join(DATA_DIR, fname), "rb") as fh:
            prices, _ = parse_price_csv(fh.read(), CsvSchema(), name)
        out[name] = (prices, compute_returns(prices))
    return out
