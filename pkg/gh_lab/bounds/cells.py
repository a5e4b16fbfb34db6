"""
Certified bounds on c_{n,k} and on 2·d_GH(S^n, S^k).

Lower bounds come from a registry of known facts about c_{n,k}, propagated
by monotonicity: c_{n,k} <= c_{n',k'} whenever n >= n' and k <= k'. Upper
bounds are π (never attained), the hemisphere correspondence on the
superdiagonal, and the cells where the value is known exactly.
"""

import math
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from gh_lab.core.console import get_logger
from gh_lab.core.exceptions import ValidationError
from gh_lab.covering.certificates import (
    CoveringBound,
    CoveringCertificate,
    cell600_certificate,
    grid_certificate,
    icosahedron_certificate,
    lower_bound_from_certificate,
    projective_cover_bound,
    simplex_certificate,
)
from gh_lab.geometry.constants import r_n, t_n
from gh_lab.odd_maps.euclidean import euclidean_gh_lower_bound

logger = get_logger("bounds.cells")

TIE_TOLERANCE = 1e-12
SUPERDIAGONAL_BOUND = 2.0 * math.pi / 3.0
C27_LOWER = math.acos(-1.0 / math.sqrt(5.0))


def c_symbol(n: int, k: int) -> str:
    return f"c_{{{n},{k}}}"


def pi_fraction(numerator: int, denominator: int) -> str:
    """Symbolic label such as '2π/3'."""
    head = "π" if numerator == 1 else f"{numerator}π"
    return head if denominator == 1 else f"{head}/{denominator}"


class KnownFact(BaseModel):
    """
    c_{n,k} >= value (or = value when exact).

    Attributes:
        label: Symbolic form used when the fact is quoted at its own cell
        provenance: Which result the fact comes from
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    k: int = Field(ge=0)
    value: float
    label: str
    provenance: str
    exact: bool = False

    def applies_to(self, n: int, k: int) -> bool:
        """True when monotonicity transfers this fact to c_{n,k}."""
        return n <= self.n and self.k <= k


def _c1_facts(max_k: int) -> Iterable[KnownFact]:
    # c_{1,2ℓ} = c_{1,2ℓ+1} = 2πℓ/(2ℓ+1)
    for ell in range(1, max_k // 2 + 1):
        value = 2.0 * math.pi * ell / (2 * ell + 1)
        label = pi_fraction(2 * ell, 2 * ell + 1)
        yield KnownFact(n=1, k=2 * ell, value=value, label=label, provenance="c_{1,2ℓ} theorem", exact=True)
        if 2 * ell + 1 <= max_k:
            yield KnownFact(n=1, k=2 * ell + 1, value=value, label=label,
                            provenance="c_{1,2ℓ+1} theorem", exact=True)


def _adjacent_facts(max_k: int) -> Iterable[KnownFact]:
    # c_{n,n+1} = c_{n,n+2} = r_n
    for n in range(1, max_k):
        value = r_n(n)
        yield KnownFact(n=n, k=n + 1, value=value, label=f"r_{n}", provenance="c_{n,n+1} theorem", exact=True)
        if n + 2 <= max_k:
            yield KnownFact(n=n, k=n + 2, value=value, label=f"r_{n}", provenance="c_{n,n+2} theorem", exact=True)


def covering_fact(bound: CoveringBound) -> KnownFact:
    """c_{n,k} >= π − 2·cov_{RP^n}(k) from a projective certificate."""
    return KnownFact(n=bound.n, k=bound.k, value=bound.value, label=c_symbol(bound.n, bound.k),
                     provenance=f"RP^{bound.n} covering ({bound.method})")


@lru_cache(maxsize=None)
def default_covering_bounds(max_k: int) -> Tuple[CoveringBound, ...]:
    """
    Projective covering bounds the package can certify itself: the
    icosahedron on RP^2, the 600-cell on RP^3 and regular polygons on RP^1.
    """
    certificates = [icosahedron_certificate(), cell600_certificate()]
    certificates += [grid_certificate(m) for m in range(1, max_k + 1)]
    return tuple(lower_bound_from_certificate(projective_cover_bound(c)) for c in certificates)


def known_facts(max_k: int, covering_bounds: Optional[Sequence[CoveringBound]] = None) -> List[KnownFact]:
    """
    Every fact about c_{n',k'} with k' <= max_k.

    Order matters for ties: the c_{1,·} family precedes the r_n facts so
    that c_{1,2} and c_{1,3} are quoted as 2π/3.
    """
    if covering_bounds is None:
        covering_bounds = default_covering_bounds(max_k)
    facts: List[KnownFact] = [
        KnownFact(n=n, k=n, value=0.0, label="0", provenance="c_{n,n} = 0", exact=True)
        for n in range(max_k + 1)
    ]
    facts += [KnownFact(n=0, k=k, value=math.pi, label="π", provenance="c_{0,k} = π", exact=True)
              for k in range(1, max_k + 1)]
    facts += list(_c1_facts(max_k))
    facts += list(_adjacent_facts(max_k))
    if max_k >= 7:
        facts.append(KnownFact(n=2, k=7, value=C27_LOWER, label=c_symbol(2, 7), provenance="c_{2,7} remark"))
    facts += [covering_fact(b) for b in covering_bounds if b.k <= max_k]
    return facts


class LowerBound(BaseModel):
    """c_{n,k} >= value, with the winning fact."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    value: float
    label: str
    provenance: str
    exact: bool
    source: Tuple[int, int]


def _check_cell(n: int, k: int) -> None:
    if n < 0 or k < n:
        raise ValidationError("Bounds need 0 <= n <= k", details={"n": n, "k": k})


def c_lower(n: int, k: int, covering_bounds: Optional[Sequence[CoveringBound]] = None) -> LowerBound:
    """
    Best certified lower bound on c_{n,k}.

    Ties (within TIE_TOLERANCE) prefer a fact stated at (n, k) itself, then
    exact facts, then registry order. The label is symbolic only when the
    winning fact is exact at (n, k); otherwise it is the symbol c_{n,k}.

    Raises:
        ValidationError: If k < n
    """
    _check_cell(n, k)
    facts = [f for f in known_facts(k, covering_bounds) if f.applies_to(n, k)]
    best = max(f.value for f in facts)
    tied = [f for f in facts if f.value >= best - TIE_TOLERANCE]
    winner = min(
        enumerate(tied),
        key=lambda item: ((item[1].n, item[1].k) != (n, k), not item[1].exact, item[0]),
    )[1]
    located = (winner.n, winner.k) == (n, k)
    exact = located and winner.exact
    return LowerBound(
        n=n,
        k=k,
        value=winner.value,
        label=winner.label if exact else c_symbol(n, k),
        provenance=winner.provenance if located else f"{winner.provenance} at ({winner.n},{winner.k}), monotonicity",
        exact=exact,
        source=(winner.n, winner.k),
    )


class BoundsCell(BaseModel):
    """
    lower <= 2·d_GH(S^n, S^k) <= upper (upper strict when `upper_open`).
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    lower: float
    upper: float
    lower_label: str
    upper_label: str
    lower_provenance: str
    upper_provenance: str
    upper_open: bool = False
    exact: bool = False

    @model_validator(mode="after")
    def check_order(self) -> "BoundsCell":
        if not 0.0 <= self.lower <= self.upper:
            raise ValidationError("Bounds cell has lower > upper",
                                  details={"n": self.n, "k": self.k, "lower": self.lower, "upper": self.upper})
        return self

    def render(self) -> str:
        """Markdown entry: the exact value, or [lower, upper] / [lower, upper)."""
        if self.exact:
            return self.lower_label
        closing = ")" if self.upper_open else "]"
        return f"[{self.lower_label}, {self.upper_label}{closing}"


# 2·d_GH is known exactly here (besides the diagonal)
EXACT_CELLS = {
    (1, 2): (SUPERDIAGONAL_BOUND, "2π/3"),
    (1, 3): (SUPERDIAGONAL_BOUND, "2π/3"),
    (2, 3): (r_n(2), "r_2"),
}


def gh_cell(n: int, k: int, covering_bounds: Optional[Sequence[CoveringBound]] = None) -> BoundsCell:
    """
    Bounds on 2·d_GH(S^n, S^k) with the geodesic metric.

    Raises:
        ValidationError: If k < n
    """
    _check_cell(n, k)
    if n == k:
        return BoundsCell(n=n, k=k, lower=0.0, upper=0.0, lower_label="0", upper_label="0",
                          lower_provenance="c_{n,n} = 0", upper_provenance="identity", exact=True)
    if n == 0:
        return BoundsCell(n=n, k=k, lower=math.pi, upper=math.pi, lower_label="π", upper_label="π",
                          lower_provenance="c_{0,k} = π", upper_provenance="diameter of S^k", exact=True)
    if (n, k) in EXACT_CELLS:
        value, label = EXACT_CELLS[(n, k)]
        return BoundsCell(n=n, k=k, lower=value, upper=value, lower_label=label, upper_label=label,
                          lower_provenance=c_lower(n, k, covering_bounds).provenance,
                          upper_provenance="known exact value", exact=True)

    lower = c_lower(n, k, covering_bounds)
    upper, upper_label, upper_provenance, upper_open = math.pi, "π", "2·d_GH < π", True
    if k == n + 1:
        candidates = [
            (SUPERDIAGONAL_BOUND, "2π/3", "hemisphere correspondence"),
            (t_n(n), f"t_{n}", "prior t_n bound"),
        ]
        upper, upper_label, upper_provenance = min(candidates, key=lambda c: c[0])
        upper_open = False
    return BoundsCell(n=n, k=k, lower=lower.value, upper=upper, lower_label=lower.label,
                      upper_label=upper_label, lower_provenance=lower.provenance,
                      upper_provenance=upper_provenance, upper_open=upper_open)


def euclidean_cell(n: int, k: int, covering_bounds: Optional[Sequence[CoveringBound]] = None) -> BoundsCell:
    """
    Bounds on 2·d_GH between unit spheres with the chord metric:
    lower 2 − 2cos(c_{n,k}/2), upper 2.

    Raises:
        ValidationError: If k < n
    """
    _check_cell(n, k)
    if n == k:
        return BoundsCell(n=n, k=k, lower=0.0, upper=0.0, lower_label="0", upper_label="0",
                          lower_provenance="c_{n,n} = 0", upper_provenance="identity", exact=True)
    c = c_lower(n, k, covering_bounds)
    value = euclidean_gh_lower_bound(c.value)
    return BoundsCell(n=n, k=k, lower=value, upper=2.0, lower_label=f"{value:.6f}", upper_label="2",
                      lower_provenance=f"2 − 2cos(c/2) with {c.provenance}",
                      upper_provenance="d_GH <= 1 for Euclidean unit spheres")


def default_sphere_certificates(n: int) -> List[CoveringCertificate]:
    certificates = [simplex_certificate(n)] if n >= 1 else []
    if n == 2:
        certificates.append(icosahedron_certificate())
    if n == 3:
        certificates.append(cell600_certificate())
    return certificates


def prior_lower_bound(n: int, k: int, sphere_certificates: Optional[Sequence[CoveringCertificate]] = None) -> float:
    """
    The earlier general bound max{r_n, π − 2·cov_{S^n}(k+1)} for comparison.

    A sphere certificate with m <= k+1 centers on S^n contributes π − 2·radius.

    Raises:
        ValidationError: If k <= n
    """
    if n < 0 or k <= n:
        raise ValidationError("Prior bound needs k > n >= 0", details={"n": n, "k": k})
    if n == 0:
        return math.pi
    certificates = default_sphere_certificates(n) if sphere_certificates is None else sphere_certificates
    values = [r_n(n)]
    values += [math.pi - 2.0 * c.radius_bound for c in certificates
               if not c.projective and c.space.n == n and c.k <= k + 1]
    return max(values)


__all__ = [
    "KnownFact",
    "LowerBound",
    "BoundsCell",
    "EXACT_CELLS",
    "c_symbol",
    "pi_fraction",
    "covering_fact",
    "default_covering_bounds",
    "known_facts",
    "c_lower",
    "gh_cell",
    "euclidean_cell",
    "default_sphere_certificates",
    "prior_lower_bound",
]
