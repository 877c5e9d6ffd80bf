"""Lower cone distribution functions, cone quantiles and halfspace depth for
bivariate data."""

from ._core import (
    Cone,
    DegenerateCone,
    EmptyInput,
    Error,
    InvalidInput,
    InvalidState,
    OutOfRange,
    UnsupportedCone,
    cone_cdf,
    cone_depth,
    cone_quantile,
    level_count,
    oracle_cone_depth,
    oracle_tukey_depth,
    tukey_depth,
    tukey_region,
)

__all__ = [
    "Cone",
    "DegenerateCone",
    "EmptyInput",
    "Error",
    "InvalidInput",
    "InvalidState",
    "OutOfRange",
    "UnsupportedCone",
    "cone_cdf",
    "cone_depth",
    "cone_quantile",
    "level_count",
    "oracle_cone_depth",
    "oracle_tukey_depth",
    "tukey_depth",
    "tukey_region",
]
