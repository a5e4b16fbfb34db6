"""
Simplicial complexes: Vietoris–Rips complexes, subdivision, homology and
partition-of-unity points in geometric realizations.
"""

from gh_lab.complexes.homology import BettiVector, f2_homology
from gh_lab.complexes.partition import BarycentricPoint, PartitionOfUnity, partition_of_unity_map
from gh_lab.complexes.simplicial import SimplicialComplex, full_simplex, read_simplices
from gh_lab.complexes.subdivision import Subdivision, barycentric_subdivision
from gh_lab.complexes.vietoris_rips import InducedMap, VRComplex, build_vr, induced_map

__all__ = [
    "BettiVector",
    "f2_homology",
    "BarycentricPoint",
    "PartitionOfUnity",
    "partition_of_unity_map",
    "SimplicialComplex",
    "full_simplex",
    "read_simplices",
    "Subdivision",
    "barycentric_subdivision",
    "InducedMap",
    "VRComplex",
    "build_vr",
    "induced_map",
]
