"""Weak-form market efficiency test battery for daily equity-index series.

The battery covers descriptive moments with the Jarque-Bera normality
test, runs tests relative to the mean and to zero, the autocorrelation
function with Ljung-Box portmanteau statistics, augmented Dickey-Fuller
unit-root tests in three regression variants, Hodrick-Prescott trend/cycle
decomposition, and cross-market calendar alignment with correlation.  A
seeded Monte-Carlo harness validates each test's statistical size and
power.
"""

from .config import AnalysisConfig, InputSpec, load_config, parse_config_text, parse_scheme
from .crossmarket import AlignedPair, align, pearson
from .descriptive import DescriptiveStats, TestResult, describe, jarque_bera
from .distributions import chi2_sf, normal_cdf, normal_icdf
from .errors import (
    AlignmentError,
    ConfigurationError,
    DomainError,
    EffitestError,
    InsufficientDataError,
    InvalidInputError,
    SchemaError,
    SingularDesignError,
    ZeroVarianceError,
)
from .fixture import write_fixture
from .hpfilter import HpDecomposition, default_lambda, hp_filter
from .ingest import CsvSchema, IngestReport, parse_price_csv, write_price_csv
from .plots import emit_plots
from .randomness import (
    AcfResult,
    RunsResult,
    acf,
    acf_from_rho,
    ljung_box,
    paper_table_se,
    runs_test,
    runs_test_from_counts,
)
from .report import Report, load_inputs, render, report_from_json, report_to_json, run_analysis
from .series import (
    Period,
    PeriodScheme,
    PriceSeries,
    ReturnSeries,
    TradingDate,
    compute_returns,
    default_scheme,
    segment,
)
from .simulate import (
    GeneratorSpec,
    SizePowerResult,
    acceptance_battery,
    generate,
    size_power,
    splitmix64,
)
from .unitroot import AdfResult, OlsFit, adf_pvalue, adf_test, default_lag, ols, tau_null_quantiles

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig", "InputSpec", "load_config", "parse_config_text", "parse_scheme",
    "AlignedPair", "align", "pearson",
    "DescriptiveStats", "TestResult", "describe", "jarque_bera",
    "chi2_sf", "normal_cdf", "normal_icdf",
    "EffitestError", "InvalidInputError", "InsufficientDataError", "ZeroVarianceError",
    "SchemaError", "AlignmentError", "ConfigurationError", "SingularDesignError", "DomainError",
    "write_fixture",
    "HpDecomposition", "default_lambda", "hp_filter",
    "CsvSchema", "IngestReport", "parse_price_csv", "write_price_csv",
    "emit_plots",
    "AcfResult", "RunsResult", "acf", "acf_from_rho", "ljung_box", "paper_table_se",
    "runs_test", "runs_test_from_counts",
    "Report", "load_inputs", "render", "report_from_json", "report_to_json", "run_analysis",
    "Period", "PeriodScheme", "PriceSeries", "ReturnSeries", "TradingDate",
    "compute_returns", "default_scheme", "segment",
    "GeneratorSpec", "SizePowerResult", "acceptance_battery", "generate", "size_power",
    "splitmix64",
    "AdfResult", "OlsFit", "adf_pvalue", "adf_test", "default_lag", "ols",
    "tau_null_quantiles",
    "__version__",
]
