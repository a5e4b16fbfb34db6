"""
Barycentric subdivision: vertices are simplices, simplices are chains σ_0 ⊂ … ⊂ σ_k.
"""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

from gh_lab.complexes.simplicial import Simplex, SimplicialComplex
from gh_lab.core.config import get_settings
from gh_lab.core.exceptions import BudgetExceededError


class Subdivision(SimplicialComplex):
    """sd(K), remembering which simplex of K each new vertex stands for."""

    def __init__(self, chains: List[Tuple[int, ...]], barycenters: List[Simplex], max_dim: Optional[int]):
        super().__init__(chains, num_vertices=len(barycenters), max_dim=max_dim)
        self.barycenters = barycenters


def barycentric_subdivision(complex_: SimplicialComplex, budget: Optional[int] = None) -> Subdivision:
    """
    Subdivide a complex once.

    Vertex i of the result is the barycenter of complex_.simplices[i]; a
    chain is stored as the sorted indices of its members.

    Raises:
        BudgetExceededError: If the chain count exceeds the budget
    """
    budget = budget if budget is not None else get_settings().simplex_budget
    index = complex_.index
    # chains ending at a simplex, keyed by its index
    ending: Dict[int, List[Tuple[int, ...]]] = {}
    total = 0

    for i, simplex in enumerate(complex_.simplices):
        chains: List[Tuple[int, ...]] = [(i,)]
        for size in range(1, len(simplex)):
            for face in combinations(simplex, size):
                j = index.get(face)
                if j is not None:
                    chains.extend(c + (i,) for c in ending[j])
        ending[i] = chains
        total += len(chains)
        if total > budget:
            raise BudgetExceededError(
                "Barycentric subdivision exceeds the simplex budget",
                details={"budget": budget},
            )

    flat = [c for i in range(len(complex_)) for c in ending[i]]
    # sd(K) is homeomorphic to K, so a skeleton truncated at d keeps exact
    # homology below d; reusing max_dim keeps f2_homology to those degrees
    return Subdivision(flat, list(complex_.simplices), complex_.max_dim)


__all__ = ["Subdivision", "barycentric_subdivision"]
