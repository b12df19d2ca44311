"""Subgroup mixing experiments on free groups."""

from ._core import (
    ConfigError,
    FreeGroup,
    SearchCapExceeded,
    Subgroup,
    cantor,
    construct_transverse,
    drift,
    estimate_mixing,
    free_product_experiment,
    is_transverse,
    overlap_count,
    power_conjugate_into,
    run_config,
    sample_walk,
    transversality_certificate,
)

__all__ = [
    "ConfigError",
    "FreeGroup",
    "SearchCapExceeded",
    "Subgroup",
    "cantor",
    "construct_transverse",
    "drift",
    "estimate_mixing",
    "free_product_experiment",
    "is_transverse",
    "overlap_count",
    "power_conjugate_into",
    "run_config",
    "sample_walk",
    "transversality_certificate",
]
