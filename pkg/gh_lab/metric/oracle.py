"""
Exact Gromov–Hausdorff distance for tiny finite metric spaces.

d_GH(X, Y) = ½ · min over correspondences R of dis(R). The optimal distortion
is one of the finitely many values |d_X(x,x') − d_Y(y,y')|, so the oracle
binary-searches that candidate list and, for each threshold t, searches for
a correspondence all of whose cells are pairwise t-compatible.
"""

from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import BudgetExceededError
from gh_lab.metric.space import FiniteMetricSpace, Relation

logger = get_logger("metric.oracle")

Cell = Tuple[int, int]


class GHResult(BaseModel):
    """Oracle output: the distance and one optimal correspondence."""

    model_config = ConfigDict(frozen=True)

    value: float
    distortion: float
    correspondence: Relation


class _CoverSearch:
    """Backtracking search for a pairwise-compatible cell set covering all rows and columns."""

    def __init__(self, gap: np.ndarray, m: int, p: int, threshold: float):
        self.m, self.p = m, p
        # compatible[c, c'] for flattened cells c = x * p + y
        self.compatible = gap <= threshold
        self.chosen: List[int] = []

    def _ok(self, cell: int) -> bool:
        row = self.compatible[cell]
        return all(row[c] for c in self.chosen)

    def _next_uncovered(self) -> Optional[Tuple[str, int]]:
        rows = {c // self.p for c in self.chosen}
        for x in range(self.m):
            if x not in rows:
                return "row", x
        cols = {c % self.p for c in self.chosen}
        for y in range(self.p):
            if y not in cols:
                return "col", y
        return None

    def run(self) -> Optional[List[int]]:
        target = self._next_uncovered()
        if target is None:
            return list(self.chosen)
        kind, index = target
        if kind == "row":
            candidates = [index * self.p + y for y in range(self.p)]
        else:
            candidates = [x * self.p + index for x in range(self.m)]
        for cell in candidates:
            if cell in self.chosen or not self._ok(cell):
                continue
            self.chosen.append(cell)
            found = self.run()
            if found is not None:
                return found
            self.chosen.pop()
        return None


def _cell_gaps(x: FiniteMetricSpace, y: FiniteMetricSpace) -> np.ndarray:
    # gap[(a, b), (a', b')] = |d_X(a, a') − d_Y(b, b')|
    m, p = x.size, y.size
    gap = np.abs(x.dist[:, None, :, None] - y.dist[None, :, None, :])
    return gap.reshape(m * p, m * p)


def gh_bruteforce(x: FiniteMetricSpace, y: FiniteMetricSpace, max_cells: Optional[int] = None) -> GHResult:
    """
    Exact d_GH(X, Y) by exhaustive correspondence search.

    Args:
        x: First space
        y: Second space
        max_cells: Budget on |X|·|Y| (defaults to GH_LAB_GH_MAX_CELLS, 25)

    Returns:
        GHResult with value = ½·min dis(R) and an optimal correspondence

    Raises:
        BudgetExceededError: If |X|·|Y| exceeds the budget
    """
    budget = max_cells if max_cells is not None else get_settings().gh_max_cells
    cells = x.size * y.size
    if cells > budget:
        raise BudgetExceededError(
            "Spaces too large for the brute-force Gromov–Hausdorff oracle",
            details={"cells": cells, "max_cells": budget},
        )

    gap = _cell_gaps(x, y)
    candidates = np.unique(gap)

    lo, hi = 0, len(candidates) - 1
    best: Optional[List[int]] = None
    # the full relation X × Y is always feasible at the largest candidate
    while lo < hi:
        mid = (lo + hi) // 2
        found = _CoverSearch(gap, x.size, y.size, float(candidates[mid])).run()
        if found is not None:
            hi, best = mid, found
        else:
            lo = mid + 1
    if best is None:
        best = _CoverSearch(gap, x.size, y.size, float(candidates[lo])).run()

    threshold = float(candidates[lo])
    relation = Relation.of(((c // y.size, c % y.size) for c in best), x.size, y.size)
    logger.debug("gh oracle: %dx%d spaces, distortion %.12g", x.size, y.size, threshold)
    return GHResult(value=threshold / 2.0, distortion=threshold, correspondence=relation)


__all__ = ["GHResult", "gh_bruteforce"]
