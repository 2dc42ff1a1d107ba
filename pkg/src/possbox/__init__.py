"""Exact event bounds from probability boxes on finite ordered spaces.

The package computes natural-extension upper/lower probabilities of
arbitrary events from a pair of cumulative bounds on a finite totally
preordered space, decides when those bounds act as a possibility measure,
converts in both directions, combines marginal possibility distributions
into joints, and cross-checks every closed form against exact credal-set
optimization.  All arithmetic is rational and exact.
"""

from possbox.chain import SENTINEL, Chain, IntervalUnion, build_chain
from possbox.maxitive import (
    ZeroOneProfile,
    is_maxitive,
    upper_01_both,
    upper_01_lower,
    upper_01_upper,
    zero_one_profile,
)
from possbox.multivariate import (
    MarginalFamily,
    combine_rectangle,
    joint_frechet,
    joint_independent,
    joint_rsi_outer,
    least_conservative_check,
)
from possbox.oracle import (
    check_coherence,
    credal_intersection_equal,
    credal_lower,
    credal_upper,
    credal_upper_classes,
    credal_upper_elements,
    exhaustive_max_preserving,
)
from possbox.pbox import PBox
from possbox.possibility import (
    PossibilityDistribution,
    conjunction_bounds,
    conjunction_decompose,
    pbox_to_possibility,
    possibility_to_pbox,
    zero_one_possibility,
)

__version__ = "0.1.0"

__all__ = [
    "SENTINEL",
    "Chain",
    "IntervalUnion",
    "MarginalFamily",
    "PBox",
    "PossibilityDistribution",
    "ZeroOneProfile",
    "build_chain",
    "check_coherence",
    "combine_rectangle",
    "conjunction_bounds",
    "conjunction_decompose",
    "credal_intersection_equal",
    "credal_lower",
    "credal_upper",
    "credal_upper_classes",
    "credal_upper_elements",
    "exhaustive_max_preserving",
    "is_maxitive",
    "joint_frechet",
    "joint_independent",
    "joint_rsi_outer",
    "least_conservative_check",
    "pbox_to_possibility",
    "possibility_to_pbox",
    "upper_01_both",
    "upper_01_lower",
    "upper_01_upper",
    "zero_one_possibility",
    "zero_one_profile",
    "__version__",
]
