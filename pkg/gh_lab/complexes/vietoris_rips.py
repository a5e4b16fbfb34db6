"""
Vietoris–Rips complexes of finite metric spaces.

σ is a simplex of VR(X; r) when diam(σ) <= r. The complex is the clique
complex of the r-neighbourhood graph, so simplices are enumerated as cliques
with networkx.
"""

from typing import Dict, List, Optional, Sequence

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

from gh_lab.complexes.simplicial import Simplex, SimplicialComplex
from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import BudgetExceededError, FixedSimplexError, ValidationError
from gh_lab.metric.distortion import function_distortion
from gh_lab.metric.space import FiniteMetricSpace

logger = get_logger("complexes.vietoris_rips")


class VRComplex(SimplicialComplex):
    """
    VR(X; r) enumerated up to a dimension cap.

    Attributes:
        base: The finite metric space X
        scale: r
        tolerance: Slack added to r when comparing distances
    """

    def __init__(self, base: FiniteMetricSpace, scale: float, max_dim: Optional[int],
                 simplices: List[Simplex], tolerance: float):
        super().__init__(simplices, num_vertices=base.size, max_dim=max_dim)
        self.base = base
        self.scale = scale
        self.tolerance = tolerance

    def contains(self, simplex: Sequence[int]) -> bool:
        """Diameter test for σ without consulting the enumerated list."""
        idx = np.asarray(sorted(set(simplex)), dtype=int)
        if idx.size == 0 or idx[0] < 0 or idx[-1] >= self.base.size:
            return False
        return bool(self.base.dist[np.ix_(idx, idx)].max() <= self.scale + self.tolerance)

    def z2_action(self) -> List[int]:
        """
        Simplex involution σ ↦ ι(σ) as a permutation of simplex indices.

        Raises:
            ValidationError: If the base space has no involution
            FixedSimplexError: If some simplex equals its image (the action is not free)
        """
        inv = self.base.involution
        if inv is None:
            raise ValidationError("Base space has no involution")
        image: List[int] = []
        for s in self.simplices:
            mirrored = tuple(sorted(inv[v] for v in s))
            if mirrored == s:
                raise FixedSimplexError(
                    "Simplex is fixed by the involution; scale too large for a free action",
                    details={"simplex": list(s), "scale": self.scale},
                )
            image.append(self.index[mirrored])
        return image


def neighbourhood_graph(base: FiniteMetricSpace, r: float, tolerance: float) -> nx.Graph:
    """Graph on the points with an edge whenever d(i, j) <= r."""
    graph = nx.Graph()
    graph.add_nodes_from(range(base.size))
    rows, cols = np.nonzero(np.triu(base.dist <= r + tolerance, k=1))
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return graph


def build_vr(base: FiniteMetricSpace, r: float, max_dim: int, budget: Optional[int] = None,
             tolerance: Optional[float] = None) -> VRComplex:
    """
    Enumerate VR(base; r) up to dimension max_dim.

    Args:
        base: Finite metric space
        r: Scale (simplices have diameter <= r)
        max_dim: Highest simplex dimension to enumerate
        budget: Simplex-count cap (defaults to GH_LAB_SIMPLEX_BUDGET)
        tolerance: Scale slack (defaults to GH_LAB_TOLERANCE)

    Returns:
        VRComplex with simplices sorted by (dimension, vertices)

    Raises:
        ValidationError: If max_dim < 0 or r < 0
        BudgetExceededError: If more than `budget` simplices are produced
    """
    if max_dim < 0:
        raise ValidationError("max_dim must be >= 0", details={"max_dim": max_dim})
    if r < 0:
        raise ValidationError("Scale must be nonnegative", details={"r": r})
    settings = get_settings()
    budget = budget if budget is not None else settings.simplex_budget
    tolerance = tolerance if tolerance is not None else settings.tolerance

    graph = neighbourhood_graph(base, r, tolerance)
    simplices: List[Simplex] = []
    truncated = False
    # cliques come out in nondecreasing size
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) > max_dim + 1:
            truncated = True
            break
        simplices.append(tuple(sorted(clique)))
        if len(simplices) > budget:
            raise BudgetExceededError(
                "Vietoris–Rips complex exceeds the simplex budget",
                details={"budget": budget, "scale": r, "max_dim": max_dim},
            )

    complex_ = VRComplex(base, r, max_dim if truncated else None, simplices, tolerance)
    logger.debug("VR complex at r=%.6f: f-vector %s", r, complex_.f_vector())
    return complex_


class InducedMap(BaseModel):
    """
    The simplicial map VR(X; r) → VR(Y; r + dis f) induced by a vertex map.

    Attributes:
        images: Image vertex set of every simplex of the source complex
        distortion: dis(f)
        target_scale: r + dis(f)
        max_image_diameter: Largest diameter among the image simplices
        is_odd: Whether f̄ commutes with the involutions (None if not applicable)
    """

    model_config = ConfigDict(frozen=True)

    images: Dict[Simplex, Simplex]
    distortion: float
    target_scale: float
    max_image_diameter: float
    is_odd: Optional[bool] = None

    @property
    def valid(self) -> bool:
        return self.max_image_diameter <= self.target_scale + 1e-9


def induced_map(f: Sequence[int], r: float, x: FiniteMetricSpace, y: FiniteMetricSpace,
                max_dim: int = 2, budget: Optional[int] = None) -> InducedMap:
    """
    Push every simplex of VR(X; r) forward along f and check the image diameters.

    Raises:
        ValidationError: If f is not a total map X → Y
    """
    fm = np.asarray(f, dtype=int)
    dis = function_distortion(fm, x, y)
    source = build_vr(x, r, max_dim, budget=budget)
    images: Dict[Simplex, Simplex] = {}
    worst = 0.0
    for s in source.simplices:
        image = tuple(sorted(set(fm[list(s)].tolist())))
        images[s] = image
        idx = list(image)
        worst = max(worst, float(y.dist[np.ix_(idx, idx)].max()))

    is_odd: Optional[bool] = None
    if x.involution is not None and y.involution is not None:
        ix, iy = x.involution, y.involution
        is_odd = all(
            images[tuple(sorted(ix[v] for v in s))] == tuple(sorted(iy[w] for w in images[s]))
            for s in source.simplices
        )
    return InducedMap(images=images, distortion=dis, target_scale=r + dis,
                      max_image_diameter=worst, is_odd=is_odd)


__all__ = ["VRComplex", "neighbourhood_graph", "build_vr", "InducedMap", "induced_map"]
