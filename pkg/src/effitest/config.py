"""Analysis configuration: flat key=value files with [input.N] sections.

The format is deliberately primitive so any tool can write it::

    scheme = default
    acf_mode = appendix
    out = ./results

    [input.1]
    path = data/alpha.csv
    index_name = ALPHA

Keys can be overridden by CLI flags (flags win).  Unknown keys are
rejected rather than ignored.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field, replace

from .errors import ConfigurationError
from .hpfilter import default_lambda
from .ingest import CsvSchema
from .series import Period, PeriodScheme, default_scheme

__all__ = ["InputSpec", "AnalysisConfig", "parse_config_text", "load_config", "parse_scheme"]

FORMATS = ("markdown", "csv", "json")

_TOP_KEYS = {"scheme", "acf_mode", "adf_model", "adf_target", "hp_lambda", "out",
             "formats", "plots", "mc_validate", "acf_lags", "lb_horizon", "seed"}
_INPUT_KEYS = {"path", "index_name", "date_col", "price_col", "date_format", "decimal_sep"}


@dataclass(frozen=True)
class InputSpec:
    path: str
    index_name: str
    schema: CsvSchema = field(default_factory=CsvSchema)


@dataclass(frozen=True)
class AnalysisConfig:
    inputs: tuple = ()
    scheme: PeriodScheme = field(default_factory=default_scheme)
    acf_mode: str = "appendix"
    adf_model: str = "drift_trend"
    adf_target: str = "returns"
    hp_lambda: float = default_lambda("daily")
    output_dir: str | None = None
    formats: tuple = FORMATS
    plots: bool = True
    mc_validate: bool = False
    acf_lags: int = 20
    lb_horizon: int = 20
    seed: int = 42

    def __post_init__(self):
        if not 1 <= len(self.inputs) <= 2:
            raise ConfigurationError(f"need one or two inputs, got {len(self.inputs)}")
        if self.acf_mode not in ("appendix", "paper_table"):
            raise ConfigurationError(f"acf_mode must be appendix|paper_table, got {self.acf_mode!r}")
        if self.adf_model not in ("none", "drift", "drift_trend"):
            raise ConfigurationError(f"adf_model must be none|drift|drift_trend, got {self.adf_model!r}")
        if self.adf_target not in ("returns", "log_prices"):
            raise ConfigurationError(f"adf_target must be returns|log_prices, got {self.adf_target!r}")
        if self.hp_lambda < 0:
            raise ConfigurationError(f"hp_lambda must be nonnegative, got {self.hp_lambda}")
        bad = [f for f in self.formats if f not in FORMATS]
        if bad or not self.formats:
            raise ConfigurationError(f"formats must be a non-empty subset of {FORMATS}, got {self.formats}")
        if self.acf_lags < 1 or self.lb_horizon < 1 or self.lb_horizon > self.acf_lags:
            raise ConfigurationError(
                f"need 1 <= lb_horizon <= acf_lags, got {self.lb_horizon} and {self.acf_lags}")


def _parse_date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text.strip())
    except ValueError:
        raise ConfigurationError(f"bad date {text!r}, expected YYYY-MM-DD") from None


def parse_scheme(text: str) -> PeriodScheme:
    """Scheme from a config value.

    ``default`` is the built-in five-entry scheme; ``single`` is one
    all-encompassing period.  Otherwise semicolon-separated entries
    ``LABEL=START..END`` with a trailing ``*`` on the label marking the
    full-sample entry, e.g. ``Full*=1996-01-01..2016-04-08; I=...``.
    """
    text = text.strip()
    if text == "default":
        return default_scheme()
    if text == "single":
        return PeriodScheme((Period("Full", dt.date.min, dt.date.max, full=True),))
    periods = []
    for entry in text.split(";"):
        entry = entry.strip()
        if not entry:
            continue
        if "=" not in entry:
            raise ConfigurationError(f"bad scheme entry {entry!r}, expected LABEL=START..END")
        label, _, span = entry.partition("=")
        label = label.strip()
        full = label.endswith("*")
        if full:
            label = label[:-1].strip()
        if ".." not in span:
            raise ConfigurationError(f"bad scheme span {span!r}, expected START..END")
        start, _, end = span.partition("..")
        periods.append(Period(label, _parse_date(start), _parse_date(end), full=full))
    if not periods:
        raise ConfigurationError("scheme has no periods")
    try:
        return PeriodScheme(tuple(periods))
    except Exception as exc:
        raise ConfigurationError(f"invalid scheme: {exc}") from None


def _parse_bool(text: str, key: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ConfigurationError(f"{key}: expected a boolean, got {text!r}")


def parse_config_text(text: str) -> AnalysisConfig:
    """Parse config file content.  See the module docstring for the format."""
    top: dict = {}
    inputs: dict = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if not name.startswith("input."):
                raise ConfigurationError(f"line {lineno}: unknown section [{name}]")
            try:
                idx = int(name.split(".", 1)[1])
            except ValueError:
                raise ConfigurationError(f"line {lineno}: bad input section [{name}]") from None
            section = inputs.setdefault(idx, {})
            continue
        if "=" not in line:
            raise ConfigurationError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if section is None:
            if key not in _TOP_KEYS:
                raise ConfigurationError(f"line {lineno}: unknown key {key!r}")
            top[key] = value
        else:
            if key not in _INPUT_KEYS:
                raise ConfigurationError(f"line {lineno}: unknown input key {key!r}")
            section[key] = value
    return build_config(top, [inputs[k] for k in sorted(inputs)])


def build_config(top: dict, input_dicts: list) -> AnalysisConfig:
    """Assemble and validate an AnalysisConfig from raw string maps."""
    specs = []
    for d in input_dicts:
        if "path" not in d:
            raise ConfigurationError(f"input section missing 'path': {d}")
        schema = CsvSchema(
            date_column=d.get("date_col", "Date"),
            price_column=d.get("price_col"),
            date_format=d.get("date_format", "%Y-%m-%d"),
            decimal_separator=d.get("decimal_sep", "."),
        )
        name = d.get("index_name") or d["path"].rsplit("/", 1)[-1].rsplit(".", 1)[0]
        specs.append(InputSpec(path=d["path"], index_name=name, schema=schema))

    kwargs: dict = {"inputs": tuple(specs)}
    if "scheme" in top:
        kwargs["scheme"] = parse_scheme(top["scheme"])
    for key, cast in (("acf_mode", str), ("adf_model", str), ("adf_target", str), ("out", str)):
        if key in top:
            kwargs["output_dir" if key == "out" else key] = cast(top[key])
    if "hp_lambda" in top:
        value = top["hp_lambda"].strip()
        try:
            kwargs["hp_lambda"] = float(value)
        except ValueError:
            kwargs["hp_lambda"] = default_lambda(value)
    if "formats" in top:
        kwargs["formats"] = tuple(f.strip() for f in top["formats"].split(",") if f.strip())
    for key in ("plots", "mc_validate"):
        if key in top:
            kwargs[key] = _parse_bool(top[key], key)
    for key in ("acf_lags", "lb_horizon", "seed"):
        if key in top:
            try:
                kwargs[key] = int(top[key])
            except ValueError:
                raise ConfigurationError(f"{key}: expected an integer, got {top[key]!r}") from None
    try:
        return AnalysisConfig(**kwargs)
    except ConfigurationError:
        raise
    except TypeError as exc:
        raise ConfigurationError(str(exc)) from None


def load_config(path: str) -> AnalysisConfig:
    """Parse a config file; relative input paths resolve against its directory."""
    import os

    try:
        with open(path, "r", encoding="utf-8") as fh:
            config = parse_config_text(fh.read())
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {path!r}: {exc}") from None
    base = os.path.dirname(os.path.abspath(path))
    inputs = tuple(
        spec if os.path.isabs(spec.path)
        else replace(spec, path=os.path.join(base, spec.path))
        for spec in config.inputs
    )
    return replace(config, inputs=inputs)


def with_overrides(config: AnalysisConfig, **overrides) -> AnalysisConfig:
    """New config with the given fields replaced (CLI flags win)."""
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **overrides) if overrides else config
