"""
Distance-matrix files.

Format:
    labels <l_0> <l_1> ... <l_{m-1}>
    d(0,0)
    d(1,0) d(1,1)
    ...                      (row i holds d(i,0) .. d(i,i))
"""

from pathlib import Path

import numpy as np

from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import FileFormatError, ValidationError
from gh_lab.metric.space import FiniteMetricSpace

logger = get_logger("metric.io")


def read_distance_matrix(path: Path) -> FiniteMetricSpace:
    """
    Read a lower-triangular distance-matrix file.

    Raises:
        FileFormatError: On a malformed file or a matrix that is not a metric
    """
    path = Path(path)
    try:
        lines = [ln.split() for ln in path.read_text().splitlines() if ln.strip()]
    except OSError as e:
        raise FileFormatError(f"Cannot read distance matrix: {path}", details={"error": str(e)}) from e

    if not lines or lines[0][0] != "labels":
        raise FileFormatError("Distance matrix must start with a 'labels' header", details={"path": str(path)})
    labels = lines[0][1:]
    rows = lines[1:]
    if len(rows) != len(labels):
        raise FileFormatError(
            "Row count does not match label count",
            details={"labels": len(labels), "rows": len(rows)},
        )

    m = len(labels)
    dist = np.zeros((m, m))
    for i, row in enumerate(rows):
        if len(row) != i + 1:
            raise FileFormatError(f"Row {i} must hold {i + 1} entries", details={"found": len(row)})
        try:
            dist[i, : i + 1] = [float(tok) for tok in row]
        except ValueError as e:
            raise FileFormatError(f"Non-numeric entry in row {i}", details={"error": str(e)}) from e
    dist = np.tril(dist) + np.tril(dist, -1).T

    try:
        space = FiniteMetricSpace(labels=labels, dist=dist)
    except ValidationError as e:
        raise FileFormatError(f"Invalid distance matrix: {e.message}", details=e.details) from e
    logger.debug("read %d-point space from %s", m, path)
    return space


def write_distance_matrix(path: Path, space: FiniteMetricSpace) -> None:
    """Write `space` in the format read by `read_distance_matrix`."""
    path = Path(path)
    out = ["labels " + " ".join(space.labels)]
    for i in range(space.size):
        out.append(" ".join(f"{v:.17g}" for v in space.dist[i, : i + 1]))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out) + "\n")


__all__ = ["read_distance_matrix", "write_distance_matrix"]
