"""Numeric kernel: separation angles, radial projection, capacity bounds.

Everything here operates on weighted points confined to annuli around the
origin.  The central quantity is the minimum angle that two points can
subtend at the origin when both lie in the annulus ``r <= rho <= R`` and
their mutual distance is at least ``d``:

    phi(d, r, R) = min( arccos((R^2 + r^2 - d^2) / (2*R*r)),
                        2*arcsin(d / (2*R)) )

valid whenever ``0 <= R - d <= r <= R`` and ``d > 0``.  The first branch is
the law-of-cosines angle for one point on each boundary circle; the second
is the chord angle for both points on the outer circle.  At ``r == R`` the
two branches coincide.

Weighted points come in two kinds: weight-1 points, pairwise at least ``p``
apart and confined to ``p <= rho <= 1+p``, and weight-1/2 points, pairwise
at least ``q = 1/p`` apart and confined to ``1 <= rho <= 1+p``.  Mixed pairs
are at least ``p`` apart.  For a pair of weight-1/2 points the outer radius
can be capped at ``1+q``: projecting both points radially onto ``rho = 1+q``
preserves the subtended angle and keeps their distance at least ``q``, which
is what `radial_project` models.

All angles in public interfaces are degrees; radians appear only as
transient internals.  Certified strict comparisons against 360 degrees use
`CERT_EPSILON_DEG` of slack, four orders of magnitude below the smallest
margin the built-in proof script relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnsupportedClaimError

# A plain float carrying an angle in degrees.
AngleDeg = float

# Slack for certifying "sum strictly exceeds 360 degrees".
CERT_EPSILON_DEG = 1e-6

# Optional extra conservatism: shrink every pair bound by this much before
# summing ("paranoid" mode).
PARANOID_SHRINK_DEG = 1e-9

WEIGHT_ONE = 1.0
WEIGHT_HALF = 0.5
_VALID_WEIGHTS = (WEIGHT_ONE, WEIGHT_HALF)

# Tolerance for annulus containment checks; the proof script stores exact
# constants, so this only absorbs float round-off in derived endpoints.
_ANNULUS_TOL = 1e-9


@dataclass(frozen=True)
class Annulus:
    """The closed region r_lo <= rho <= r_hi around the origin."""

    r_lo: float
    r_hi: float

    def __post_init__(self):
        if not (math.isfinite(self.r_lo) and math.isfinite(self.r_hi)):
            raise DomainError(f"annulus endpoints must be finite, got {self}")
        if not 0 <= self.r_lo <= self.r_hi:
            raise DomainError(
                f"annulus requires 0 <= r_lo <= r_hi, got [{self.r_lo}, {self.r_hi}]"
            )

    def contains(self, rho: float, tol: float = _ANNULUS_TOL) -> bool:
        return self.r_lo - tol <= rho <= self.r_hi + tol

    def encloses(self, other: "Annulus", tol: float = _ANNULUS_TOL) -> bool:
        return self.r_lo - tol <= other.r_lo and other.r_hi <= self.r_hi + tol

    def __str__(self):
        return f"[{self.r_lo:g}, {self.r_hi:g}]"


@dataclass(frozen=True)
class Params:
    """Radius-ratio threshold p > 1 and its reciprocal q = 1/p."""

    p: float = 1.409

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p > 1):
            raise DomainError(f"threshold p must satisfy p > 1, got {self.p}")

    @property
    def q(self) -> float:
        return 1.0 / self.p

    def one_annulus(self) -> Annulus:
        """Habitat of weight-1 points."""
        return Annulus(self.p, 1 + self.p)

    def half_annulus(self) -> Annulus:
        """Habitat of weight-1/2 points."""
        return Annulus(1.0, 1 + self.p)


@dataclass(frozen=True)
class PolarPoint:
    """A point (rho, theta) with theta in degrees, normalized to [0, 360)."""

    rho: float
    theta: float

    def __post_init__(self):
        if self.rho < 0:
            raise DomainError(f"rho must be nonnegative, got {self.rho}")
        theta = self.theta % 360.0
        # A tiny negative theta can wrap to exactly 360.0 in float modulo.
        if theta == 360.0:
            theta = 0.0
        object.__setattr__(self, "theta", theta)


def phi(d: float, r: float, R: float) -> AngleDeg:
    """Lower bound, in degrees, on the angle at the origin between two
    points of the annulus [r, R] whose mutual distance is at least d.

    Preconditions (each violation raises `DomainError` naming the failed
    inequality): d > 0, R - d >= 0, R - d <= r, r <= R.
    """
    if not d > 0:
        raise DomainError(f"phi requires d > 0, got d={d}")
    if not R - d >= 0:
        raise DomainError(f"phi requires R - d >= 0, got R={R}, d={d}")
    if not R - d <= r:
        raise DomainError(f"phi requires R - d <= r, got R={R}, d={d}, r={r}")
    if not r <= R:
        raise DomainError(f"phi requires r <= R, got r={r}, R={R}")
    # Both arguments are within range by the preconditions; clamp only
    # against float round-off at the boundary.
    cos_arg = (R * R + r * r - d * d) / (2.0 * R * r)
    cos_arg = max(-1.0, min(1.0, cos_arg))
    sin_arg = min(1.0, d / (2.0 * R))
    law_of_cosines = math.degrees(math.acos(cos_arg))
    chord_on_outer = math.degrees(2.0 * math.asin(sin_arg))
    return min(law_of_cosines, chord_on_outer)


def radial_project(x: PolarPoint, R: float) -> PolarPoint:
    """Project x onto the circle rho = R if it lies outside; otherwise
    return it unchanged.  The amplitude theta is preserved exactly."""
    if not R > 1:
        raise DomainError(f"radial projection requires R > 1, got {R}")
    if x.rho > R:
        return PolarPoint(R, x.theta)
    return x


BoundClass = tuple[float, Annulus]  # (weight, annulus)


def _check_class(cls: BoundClass, params: Params) -> None:
    weight, annulus = cls
    if weight not in _VALID_WEIGHTS:
        raise DomainError(f"weight must be 1 or 1/2, got {weight}")
    habitat = params.one_annulus() if weight == WEIGHT_ONE else params.half_annulus()
    if not habitat.encloses(annulus):
        raise DomainError(
            f"weight-{weight:g} annulus {annulus} falls outside its habitat {habitat}"
        )


def pair_angle_bound(class_a: BoundClass, class_b: BoundClass, params: Params) -> AngleDeg:
    """Minimum angle subtended at the origin by one point from each class
    when the two are consecutive in the circular ordering.

    With at least one weight-1 point the separation is p and the pair lives
    in the union annulus.  With two weight-1/2 points the separation is q
    and the outer radius is capped at 1+q (radial projection); this regime
    requires min(a, c) <= 1+q and is refused otherwise.
    """
    _check_class(class_a, params)
    _check_class(class_b, params)
    weight_a, ann_a = class_a
    weight_b, ann_b = class_b
    lo = min(ann_a.r_lo, ann_b.r_lo)
    hi = max(ann_a.r_hi, ann_b.r_hi)
    if weight_a == WEIGHT_ONE or weight_b == WEIGHT_ONE:
        return phi(params.p, lo, hi)
    cap = 1 + params.q
    if lo > cap + _ANNULUS_TOL:
        raise UnsupportedClaimError(
            f"both-half pair with min inner radius {lo} > 1+q = {cap}; "
            "no bound is available in this regime"
        )
    return phi(params.q, lo, min(cap, hi))


def capacity_bound(cls: BoundClass, params: Params) -> int:
    """Largest k such that k points of this class can fit in its annulus
    without their consecutive angles exceeding the full circle: the maximal
    k >= 1 with k * pair_angle_bound(cls, cls) <= 360."""
    bound = pair_angle_bound(cls, cls, params)
    k = int(360.0 // bound)
    # Guard the floor against round-off on exact multiples.
    while (k + 1) * bound <= 360.0:
        k += 1
    while k > 1 and k * bound > 360.0:
        k -= 1
    return max(k, 1)
