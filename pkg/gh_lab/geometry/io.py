"""
Plain-text point-set files.

Format:
    dim=<n> count=<m> symmetric=<0|1>
    x_1 x_2 ... x_{n+1}        (m lines, whitespace separated)
"""

import re
from pathlib import Path
from typing import Tuple

import numpy as np
from scipy.spatial import cKDTree

from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import FileFormatError

logger = get_logger("geometry.io")

HEADER_PATTERN = re.compile(r"^\s*dim=(\d+)\s+count=(\d+)\s+symmetric=([01])\s*$")
UNIT_TOLERANCE = 1e-9


def is_centrally_symmetric(points: np.ndarray, tol: float = 1e-12) -> bool:
    """True if every row's negation also occurs in `points` (within tol)."""
    if len(points) == 0:
        return True
    tree = cKDTree(points)
    dist, _ = tree.query(-points)
    return bool(np.all(dist <= tol))


def read_points(path: Path) -> Tuple[np.ndarray, bool]:
    """
    Read a point-set file.

    Args:
        path: File to read

    Returns:
        (points, symmetric) with points of shape (count, dim+1)

    Raises:
        FileFormatError: On a malformed header or rows, non-unit points, or
            a symmetric flag the points do not satisfy
    """
    path = Path(path)
    try:
        lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    except OSError as e:
        raise FileFormatError(f"Cannot read point file: {path}", details={"error": str(e)}) from e

    if not lines:
        raise FileFormatError(f"Empty point file: {path}")
    match = HEADER_PATTERN.match(lines[0])
    if not match:
        raise FileFormatError("Malformed point-file header", details={"header": lines[0]})
    dim, count, symmetric = int(match.group(1)), int(match.group(2)), match.group(3) == "1"

    body = lines[1:]
    if len(body) != count:
        raise FileFormatError(
            "Point count does not match header",
            details={"expected": count, "found": len(body)},
        )
    try:
        points = np.array([[float(tok) for tok in ln.split()] for ln in body], dtype=float)
    except ValueError as e:
        raise FileFormatError("Non-numeric coordinate in point file", details={"error": str(e)}) from e

    points = points.reshape(count, -1) if count else np.zeros((0, dim + 1))
    if points.shape[1] != dim + 1:
        raise FileFormatError(
            "Row width does not match dimension",
            details={"dim": dim, "width": points.shape[1]},
        )
    norms = np.linalg.norm(points, axis=1)
    if count and np.max(np.abs(norms - 1.0)) > UNIT_TOLERANCE:
        raise FileFormatError("Point file contains non-unit vectors")
    if symmetric and not is_centrally_symmetric(points):
        raise FileFormatError("File is flagged symmetric but is not closed under negation")

    logger.debug("read %d points of S^%d from %s", count, dim, path)
    return points, symmetric


def write_points(path: Path, points: np.ndarray, symmetric: bool = False) -> None:
    """Write points in the format read by `read_points` (17 significant digits)."""
    path = Path(path)
    points = np.atleast_2d(points)
    dim = points.shape[1] - 1
    out = [f"dim={dim} count={len(points)} symmetric={int(bool(symmetric))}"]
    out.extend(" ".join(f"{c:.17g}" for c in row) for row in points)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out) + "\n")


__all__ = ["read_points", "write_points", "is_centrally_symmetric"]
