"""Weighted quantile correlation goodness-of-fit tests for the logistic family.

Provides the location test statistic nW and the location-scale test
statistic nV, Monte Carlo critical values (finite-n and asymptotic via the
limit-law series), an empirical power harness, and the `logit-gof` CLI.
"""

__version__ = "0.1.0"

from .engine import (
    ASYMPTOTIC,
    CriticalValueTable,
    PowerResult,
    critical_values,
    empirical_power,
    simulate_null_distribution,
)
from .limitlaw import (
    DEFAULT_TRUNCATION,
    EmpiricalDistribution,
    estimate_quantiles,
    sample_limit_v,
    sample_limit_via_bridge,
    sample_limit_w,
)
from .logistic import WeightedMoments, cdf, pdf, quantile, weight, weighted_moments
from .statistics import (
    CoefficientTable,
    DegenerateSampleError,
    Sample,
    TestResult,
    cell_coefficients,
    statistic_v,
    statistic_w,
)

__all__ = [
    "__version__",
    "ASYMPTOTIC",
    "CoefficientTable",
    "CriticalValueTable",
    "DEFAULT_TRUNCATION",
    "DegenerateSampleError",
    "EmpiricalDistribution",
    "PowerResult",
    "Sample",
    "TestResult",
    "WeightedMoments",
    "cdf",
    "cell_coefficients",
    "critical_values",
    "empirical_power",
    "estimate_quantiles",
    "pdf",
    "quantile",
    "sample_limit_v",
    "sample_limit_via_bridge",
    "sample_limit_w",
    "simulate_null_distribution",
    "statistic_v",
    "statistic_w",
    "weight",
    "weighted_moments",
]
