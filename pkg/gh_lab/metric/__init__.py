"""
Finite metric spaces, relations, distortion and the Gromov–Hausdorff oracle.
"""

from gh_lab.metric.distortion import (
    codistortion,
    distortion,
    function_distortion,
    maps_bound,
    relation_from_function,
    relation_from_maps,
)
from gh_lab.metric.helmet import HelmetExtension, helmet_extend, helmet_extend_euclidean
from gh_lab.metric.oracle import GHResult, gh_bruteforce
from gh_lab.metric.space import FiniteMetricSpace, Relation

__all__ = [
    "FiniteMetricSpace",
    "Relation",
    "distortion",
    "function_distortion",
    "codistortion",
    "relation_from_function",
    "relation_from_maps",
    "maps_bound",
    "GHResult",
    "gh_bruteforce",
    "HelmetExtension",
    "helmet_extend",
    "helmet_extend_euclidean",
]
