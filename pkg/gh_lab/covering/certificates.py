"""
Covering certificates: explicit center sets with a claimed radius bound.

Certificates are upper bounds only. Closed-form bounds come from the
polytope constructions; greedy bounds are the measured radius plus a margin.
"""

import math
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from gh_lab.core.config import get_settings
from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.covering.net import symmetric_net, symmetric_net_of_size
from gh_lab.covering.radius import measure_covering
from gh_lab.geometry.constants import CELL600_COVER_RADIUS, ICOSAHEDRON_COVER_RADIUS, r_n
from gh_lab.geometry.io import is_centrally_symmetric
from gh_lab.geometry.points import canonical_mask
from gh_lab.geometry.polytopes import cell600_vertices, icosahedron_vertices, inscribed_simplex

logger = get_logger("covering.certificates")

Method = Literal["icosahedron", "600cell", "simplex", "greedy", "grid"]

VALIDATION_MARGIN = 2e-3
GREEDY_MARGIN = 1e-2


class SpaceDescriptor(BaseModel):
    """S^n or RP^n."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["sphere", "projective"]
    n: int = Field(ge=0)

    @property
    def symbol(self) -> str:
        return f"S^{self.n}" if self.kind == "sphere" else f"RP^{self.n}"


class ValidationReport(BaseModel):
    """Outcome of re-checking a certificate on fresh samples."""

    model_config = ConfigDict(frozen=True)

    samples: int
    seed: int
    measured_radius: float
    pass_rate: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.pass_rate == 1.0


class CoveringCertificate(BaseModel):
    """
    Centers on S^n (or representatives on RP^n) with a covering-radius bound.

    Attributes:
        space: Which space is covered
        centers: (k, n+1) unit vectors
        radius_bound: Claimed covering radius in radians
        method: Construction tag
        validation: Set by `check_coverage`
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: SpaceDescriptor
    centers: np.ndarray
    radius_bound: float = Field(ge=0.0)
    method: Method
    validation: Optional[ValidationReport] = None

    @property
    def k(self) -> int:
        """Number of centers (projective classes for RP^n)."""
        return len(self.centers)

    @property
    def projective(self) -> bool:
        return self.space.kind == "projective"

    def check_coverage(self, samples: Optional[int] = None, seed: Optional[int] = None,
                       tolerance: float = VALIDATION_MARGIN) -> "CoveringCertificate":
        """
        Re-check the bound on a fresh seeded sample.

        Returns:
            A copy with `validation` filled in
        """
        settings = get_settings()
        seed = settings.seed if seed is None else seed
        measured = measure_covering(self.centers, projective=self.projective, samples=samples,
                                    seed=seed, keep_distances=True)
        within = measured.distances <= self.radius_bound + tolerance
        report = ValidationReport(
            samples=measured.samples,
            seed=seed,
            measured_radius=measured.radius,
            pass_rate=float(np.mean(within)),
            tolerance=tolerance,
        )
        if not report.passed:
            logger.warning("%s certificate on %s failed validation (pass rate %.6f)",
                           self.method, self.space.symbol, report.pass_rate)
        return self.model_copy(update={"validation": report})


def icosahedron_certificate() -> CoveringCertificate:
    """12 icosahedron vertices covering S^2."""
    return CoveringCertificate(
        space=SpaceDescriptor(kind="sphere", n=2),
        centers=icosahedron_vertices(),
        radius_bound=ICOSAHEDRON_COVER_RADIUS,
        method="icosahedron",
    )


def cell600_certificate() -> CoveringCertificate:
    """120 vertices of the 600-cell covering S^3."""
    return CoveringCertificate(
        space=SpaceDescriptor(kind="sphere", n=3),
        centers=cell600_vertices(),
        radius_bound=CELL600_COVER_RADIUS,
        method="600cell",
    )


def simplex_certificate(n: int, symmetric: bool = False) -> CoveringCertificate:
    """
    Vertices of the inscribed simplex covering S^n at radius π − r_n.

    With `symmetric`, the ± closure of the vertices is used instead; its
    radius is measured, since the closed form only covers the plain simplex.
    """
    vertices = inscribed_simplex(n).vertices
    if not symmetric:
        return CoveringCertificate(
            space=SpaceDescriptor(kind="sphere", n=n),
            centers=np.array(vertices),
            radius_bound=math.pi - r_n(n),
            method="simplex",
        )
    closure = np.vstack([vertices, -vertices])
    measured = measure_covering(closure)
    return CoveringCertificate(
        space=SpaceDescriptor(kind="sphere", n=n),
        centers=closure,
        radius_bound=measured.radius + GREEDY_MARGIN,
        method="simplex",
    )


def grid_certificate(m: int) -> CoveringCertificate:
    """
    Regular 2m-gon on S^1 (exactly symmetric), radius π/(2m).

    Raises:
        ValidationError: If m < 1
    """
    if m < 1:
        raise ValidationError("Grid certificate needs m >= 1", details={"m": m})
    theta = math.pi * np.arange(m) / m
    half = np.column_stack([np.cos(theta), np.sin(theta)])
    return CoveringCertificate(
        space=SpaceDescriptor(kind="sphere", n=1),
        centers=np.vstack([half, -half]),
        radius_bound=math.pi / (2 * m),
        method="grid",
    )


def greedy_certificate(n: int, epsilon: Optional[float] = None, size: Optional[int] = None,
                       seed: Optional[int] = None, samples: Optional[int] = None) -> CoveringCertificate:
    """
    Greedy symmetric net on S^n, either at a target radius or with a fixed size.

    The bound is the radius measured on an independent sample plus GREEDY_MARGIN.

    Raises:
        ValidationError: Unless exactly one of epsilon and size is given
    """
    if (epsilon is None) == (size is None):
        raise ValidationError("Give exactly one of epsilon and size for a greedy certificate")
    seed = get_settings().seed if seed is None else seed
    if epsilon is not None:
        centers = symmetric_net(n, epsilon, seed=seed)
    else:
        centers = symmetric_net_of_size(n, size, seed=seed)
    measured = measure_covering(centers, samples=samples, seed=seed + 1)
    return CoveringCertificate(
        space=SpaceDescriptor(kind="sphere", n=n),
        centers=centers,
        radius_bound=measured.radius + GREEDY_MARGIN,
        method="greedy",
    )


def projective_cover_bound(certificate: CoveringCertificate) -> CoveringCertificate:
    """
    Quotient a centrally symmetric sphere certificate to RP^n.

    One representative per ± class is kept (the canonical one, last nonzero
    coordinate positive) and the sphere radius bound carries over unchanged.

    Raises:
        ValidationError: If the certificate is projective already or not symmetric
    """
    if certificate.projective:
        raise ValidationError("Certificate already lives on projective space")
    centers = certificate.centers
    if not is_centrally_symmetric(centers):
        raise ValidationError("Projective quotient needs a centrally symmetric center set")
    reps = centers[canonical_mask(centers)]
    return CoveringCertificate(
        space=SpaceDescriptor(kind="projective", n=certificate.space.n),
        centers=reps,
        radius_bound=certificate.radius_bound,
        method=certificate.method,
    )


class CoveringBound(BaseModel):
    """c_{n,k'} ≥ value for every k' ≥ k, derived from a projective certificate."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    value: float
    method: Method


def lower_bound_from_certificate(certificate: CoveringCertificate) -> CoveringBound:
    """
    Turn a projective certificate with k centers into c_{n,k} ≥ π − 2·radius.

    Raises:
        ValidationError: If the certificate is not on projective space
    """
    if not certificate.projective:
        raise ValidationError("Lower bounds on c_{n,k} need a projective certificate")
    return CoveringBound(
        n=certificate.space.n,
        k=certificate.k,
        value=max(0.0, math.pi - 2.0 * certificate.radius_bound),
        method=certificate.method,
    )


def build_certificate(method: str, n: Optional[int] = None, k: Optional[int] = None,
                      epsilon: Optional[float] = None, seed: Optional[int] = None) -> CoveringCertificate:
    """
    Dispatch on a construction tag.

    Raises:
        ValidationError: On an unknown tag or missing parameters
    """
    if method == "icosahedron":
        return icosahedron_certificate()
    if method in ("600cell", "cell600"):
        return cell600_certificate()
    if method == "simplex":
        if n is None:
            raise ValidationError("simplex construction needs --n")
        return simplex_certificate(n)
    if method == "grid":
        if k is None:
            raise ValidationError("grid construction needs --k (number of centers, even)")
        if k % 2:
            raise ValidationError("grid construction needs an even --k", details={"k": k})
        return grid_certificate(k // 2)
    if method == "greedy":
        if n is None or (k is None and epsilon is None):
            raise ValidationError("greedy construction needs --n and --k or an epsilon")
        return greedy_certificate(n, epsilon=epsilon if k is None else None, size=k, seed=seed)
    raise ValidationError(f"Unknown covering construction: {method}")


__all__ = [
    "Method",
    "SpaceDescriptor",
    "ValidationReport",
    "CoveringCertificate",
    "icosahedron_certificate",
    "cell600_certificate",
    "simplex_certificate",
    "grid_certificate",
    "greedy_certificate",
    "projective_cover_bound",
    "CoveringBound",
    "lower_bound_from_certificate",
    "build_certificate",
]
