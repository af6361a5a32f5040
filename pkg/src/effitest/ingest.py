"""Quote-provider CSV parsing with validation and gap reporting.

Bad rows are dropped and logged in the :class:`IngestReport`, never
interpolated; forward-filling exists only in cross-market alignment where
the methodology prescribes it.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
from dataclasses import dataclass, field

from .errors import InvalidInputError, SchemaError
from .series import PriceSeries

__all__ = ["CsvSchema", "IngestReport", "parse_price_csv", "write_price_csv"]

_PRICE_FALLBACKS = ("Adj Close", "Close")


@dataclass(frozen=True)
class CsvSchema:
    """Column names and value formats of a price CSV export.

    ``price_column=None`` selects ``Adj Close`` when present, else ``Close``.
    ``date_format`` is a ``strptime`` pattern.  Thousands separators are
    rejected, not guessed: a price must parse as a plain decimal number
    using ``decimal_separator``.
    """

    date_column: str = "Date"
    price_column: str | None = None
    date_format: str = "%Y-%m-%d"
    decimal_separator: str = "."

    def __post_init__(self):
        if not self.date_column:
            raise SchemaError("date_column must be non-empty")
        if self.price_column is not None and not self.price_column:
            raise SchemaError("price_column must be non-empty when given")
        if self.price_column is not None and self.price_column == self.date_column:
            raise SchemaError("date and price columns must be distinct")
        if self.decimal_separator not in (".", ","):
            raise SchemaError(f"unsupported decimal separator {self.decimal_separator!r}")


@dataclass
class IngestReport:
    """What happened while parsing: row counts, drops with reasons, range."""

    rows_read: int = 0
    rows_dropped: int = 0
    drop_reasons: list = field(default_factory=list)
    date_range: tuple | None = None
    reordered: bool = False

    def drop(self, row_number: int, reason: str) -> None:
        self.rows_dropped += 1
        self.drop_reasons.append((row_number, reason))


def _parse_price(text: str, sep: str) -> float:
    text = text.strip()
    if not text:
        raise ValueError("empty")
    if sep == ",":
        if "." in text:
            raise ValueError("thousands separator")
        text = text.replace(",", ".")
    elif "," in text:
        raise ValueError("thousands separator")
    value = float(text)
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError("non-finite")
    return value


def parse_price_csv(content, schema: CsvSchema, index_name: str):
    """Parse CSV bytes (or text) into a validated :class:`PriceSeries`.

    Rows with a missing, non-numeric, or non-positive price, or an
    unparseable date, are dropped with a reason.  Duplicate dates keep the
    last occurrence.  Output is sorted ascending by date.

    Returns
    -------
    (PriceSeries, IngestReport)

    Raises
    ------
    SchemaError
        If a named column is absent from the header.
    InvalidInputError
        If no valid rows remain.
    """
    if isinstance(content, bytes):
        text = content.decode("utf-8")
    elif isinstance(content, str):
        text = content
    else:
        raw = content.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise InvalidInputError(f"{index_name}: CSV is empty") from None
    header = [h.strip() for h in header]

    if schema.date_column not in header:
        raise SchemaError(f"{index_name}: missing date column {schema.date_column!r}")
    date_idx = header.index(schema.date_column)

    if schema.price_column is not None:
        if schema.price_column not in header:
            raise SchemaError(f"{index_name}: missing price column {schema.price_column!r}")
        price_idx = header.index(schema.price_column)
    else:
        for candidate in _PRICE_FALLBACKS:
            if candidate in header:
                price_idx = header.index(candidate)
                break
        else:
            raise SchemaError(
                f"{index_name}: no price column among {_PRICE_FALLBACKS}, header is {header}")

    report = IngestReport()
    by_date: dict = {}
    last_date = None
    for row_number, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        report.rows_read += 1
        if len(row) <= max(date_idx, price_idx):
            report.drop(row_number, "too few fields")
            continue
        try:
            d = dt.datetime.strptime(row[date_idx].strip(), schema.date_format).date()
        except ValueError:
            report.drop(row_number, "unparseable date")
            continue
        try:
            price = _parse_price(row[price_idx], schema.decimal_separator)
        except ValueError:
            report.drop(row_number, "non-numeric price")
            continue
        if price <= 0:
            report.drop(row_number, "non-positive price")
            continue
        if d in by_date:
            report.drop(by_date[d][0], "duplicate date (superseded by later row)")
        if last_date is not None and d < last_date:
            report.reordered = True
        last_date = d
        by_date[d] = (row_number, price)

    if not by_date:
        raise InvalidInputError(f"{index_name}: no valid rows in CSV input")

    dates = sorted(by_date)
    prices = [by_date[d][1] for d in dates]
    report.date_range = (dates[0], dates[-1])
    return PriceSeries(index_name, tuple(dates), prices), report


def write_price_csv(series: PriceSeries, date_column: str = "Date",
                    price_column: str = "Close") -> bytes:
    """Serialize a series to CSV bytes that re-parse to an identical series."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([date_column, price_column])
    for d, p in series.observations():
        writer.writerow([d.isoformat(), repr(p)])
    return buf.getvalue().encode("utf-8")
