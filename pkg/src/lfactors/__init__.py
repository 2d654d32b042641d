"""Exact symbolic calculus for products of local L-factors.

The engine builds normalization factors for intertwining operators, the
discrepancy of each reduced decomposition, and the pole loci of the results.
All arithmetic is on exact rationals.
"""

from __future__ import annotations

__version__ = "0.1.0"

from lfactors.core import L, LFactor, LProduct, atomize, reflect  # noqa: E402
from lfactors.decompositions import Way, WaySpec, discrepancy  # noqa: E402
from lfactors.normalization import (  # noqa: E402
    ALL_CONFIGS,
    GroupType,
    TauConfig,
    alpha_classical,
    alpha_gl,
    beta_classical,
)
from lfactors.params import DiscreteSeriesParam, InvalidParameter, parse_param  # noqa: E402
from lfactors.poles import common_poles, pole_loci, sign_class, strategy_check  # noqa: E402

__all__ = [
    "ALL_CONFIGS",
    "DiscreteSeriesParam",
    "GroupType",
    "InvalidParameter",
    "L",
    "LFactor",
    "LProduct",
    "TauConfig",
    "Way",
    "WaySpec",
    "alpha_classical",
    "alpha_gl",
    "atomize",
    "beta_classical",
    "common_poles",
    "discrepancy",
    "parse_param",
    "pole_loci",
    "reflect",
    "sign_class",
    "strategy_check",
]
