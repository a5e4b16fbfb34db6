"""
Abstract simplicial complexes stored as explicit, sorted simplex lists.
"""

from itertools import combinations
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from gh_lab.core.exceptions import ValidationError

Simplex = Tuple[int, ...]


def sort_simplices(simplices: Iterable[Sequence[int]]) -> List[Simplex]:
    """Canonical order: by dimension, then lexicographically."""
    unique = {tuple(sorted(int(v) for v in s)) for s in simplices}
    return sorted(unique, key=lambda s: (len(s), s))


def boundary_faces(simplex: Simplex) -> List[Simplex]:
    """Codimension-one faces of a simplex."""
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


class SimplicialComplex:
    """
    A finite abstract simplicial complex.

    Attributes:
        simplices: Nonempty vertex tuples, sorted by (dimension, vertices)
        num_vertices: Size of the vertex set 0..num_vertices-1
        max_dim: Dimension up to which the simplex list is complete; None
            when nothing was truncated
    """

    def __init__(self, simplices: Iterable[Sequence[int]], num_vertices: Optional[int] = None,
                 max_dim: Optional[int] = None, check_closed: bool = False):
        self.simplices: List[Simplex] = sort_simplices(simplices)
        self.index: Dict[Simplex, int] = {s: i for i, s in enumerate(self.simplices)}
        top = max((v for s in self.simplices for v in s), default=-1)
        self.num_vertices = num_vertices if num_vertices is not None else top + 1
        self.max_dim = max_dim
        if check_closed:
            self._check_closed()

    def _check_closed(self) -> None:
        for s in self.simplices:
            for face in boundary_faces(s):
                if face and face not in self.index:
                    raise ValidationError("Simplex list is not closed under faces",
                                          details={"simplex": list(s), "missing": list(face)})

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex: Sequence[int]) -> bool:
        return tuple(sorted(simplex)) in self.index

    @property
    def dimension(self) -> int:
        """Largest simplex dimension present (−1 for the empty complex)."""
        return len(self.simplices[-1]) - 1 if self.simplices else -1

    def simplices_of_dim(self, d: int) -> List[Simplex]:
        return [s for s in self.simplices if len(s) == d + 1]

    def f_vector(self) -> List[int]:
        """Simplex counts per dimension, f_0 .. f_dim."""
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def complete_through(self, d: int) -> bool:
        """True if every simplex of dimension <= d is listed."""
        return self.max_dim is None or self.max_dim >= d

    def export_simplices(self, path: Path) -> None:
        """Write one simplex per line as space-separated sorted vertex indices."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(" ".join(map(str, s)) + "\n" for s in self.simplices))


def full_simplex(num_vertices: int) -> SimplicialComplex:
    """All nonempty subsets of 0..num_vertices-1."""
    vertices = range(num_vertices)
    faces = [c for size in range(1, num_vertices + 1) for c in combinations(vertices, size)]
    return SimplicialComplex(faces, num_vertices=num_vertices)


def read_simplices(path: Path) -> SimplicialComplex:
    """Read the export format back (closure is checked)."""
    rows = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip()]
    return SimplicialComplex(([int(v) for v in row] for row in rows), check_closed=True)


__all__ = [
    "Simplex",
    "SimplicialComplex",
    "sort_simplices",
    "boundary_faces",
    "full_simplex",
    "read_simplices",
]
