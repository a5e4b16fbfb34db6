"""
Simplicial homology with coefficients in the two-element field.

Boundary columns are Python ints used as bitsets (bit i set when the i-th
face of the lower dimension appears). Columns are reduced by lowest-one
elimination and XOR, so rank ∂_d is the number of nonzero reduced columns.
"""

from typing import Dict, List, Sequence

from pydantic import BaseModel, ConfigDict, Field

from gh_lab.complexes.simplicial import Simplex, SimplicialComplex, boundary_faces
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError

logger = get_logger("complexes.homology")


class BettiVector(BaseModel):
    """Betti numbers β_0..β_max_dim over the two-element field."""

    model_config = ConfigDict(frozen=True)

    values: List[int] = Field(description="β_d for d = 0..max_dim")
    max_dim: int

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.values))


def boundary_columns(faces: Sequence[Simplex], cofaces: Sequence[Simplex]) -> List[int]:
    """Bitset columns of ∂ from the span of `cofaces` to the span of `faces`."""
    row_of: Dict[Simplex, int] = {f: i for i, f in enumerate(faces)}
    columns: List[int] = []
    for simplex in cofaces:
        column = 0
        for face in boundary_faces(simplex):
            column |= 1 << row_of[face]
        columns.append(column)
    return columns


def reduce_rank(columns: List[int]) -> int:
    """Rank over the two-element field by lowest-one column reduction."""
    pivots: Dict[int, int] = {}
    rank = 0
    for column in columns:
        while column:
            low = column.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = column
                rank += 1
                break
            column ^= other
    return rank


def boundary_rank(complex_: SimplicialComplex, d: int) -> int:
    """rank ∂_d : C_d → C_{d−1} (zero for d <= 0)."""
    if d <= 0:
        return 0
    faces = complex_.simplices_of_dim(d - 1)
    cofaces = complex_.simplices_of_dim(d)
    if not cofaces:
        return 0
    return reduce_rank(boundary_columns(faces, cofaces))


def f2_homology(complex_: SimplicialComplex, up_to_dim: int) -> BettiVector:
    """
    Betti numbers β_0..β_up_to_dim.

    β_d = f_d − rank ∂_d − rank ∂_{d+1}, so the complex must be complete
    through dimension up_to_dim + 1.

    Raises:
        ValidationError: If up_to_dim < 0 or dimension up_to_dim + 1 was not built
    """
    if up_to_dim < 0:
        raise ValidationError("up_to_dim must be >= 0", details={"up_to_dim": up_to_dim})
    if not complex_.complete_through(up_to_dim + 1):
        raise ValidationError(
            "Dimension not built: homology in degree d needs simplices of dimension d+1",
            details={"up_to_dim": up_to_dim, "max_dim": complex_.max_dim},
        )

    ranks = [boundary_rank(complex_, d) for d in range(up_to_dim + 2)]
    counts = [len(complex_.simplices_of_dim(d)) for d in range(up_to_dim + 1)]
    values = [counts[d] - ranks[d] - ranks[d + 1] for d in range(up_to_dim + 1)]
    logger.debug("Betti numbers %s from f-vector %s", values, counts)
    return BettiVector(values=values, max_dim=up_to_dim)


__all__ = ["BettiVector", "boundary_columns", "reduce_rank", "boundary_rank", "f2_homology"]
