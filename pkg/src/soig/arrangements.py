"""Circular arrangements of weighted point classes and certified minima.

A configuration is a multiset of labeled point classes.  Sorting the points
by amplitude and summing the pair-angle lower bound over consecutive pairs
gives a lower bound on the total angle around the origin, which is exactly
360 degrees for any realizable configuration.  If the minimum of that sum
over every circular ordering exceeds 360, the configuration is impossible
and the minimizing ordering is the certificate witness.

Two-class configurations (one weight-1 class, one weight-1/2 class) reduce
to compositions [n11, nhh, n1h]: the counts of consecutive same-weight-1,
same-weight-1/2 and mixed pairs.  With m ones and h halves arranged in k
blocks each, the triple is [m-k, h-k, 2k], and the angle sum is affine in
k, so the minimum sits at an extreme block count.  The general case is an
exhaustive search over distinct necklaces of the label multiset.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    CERT_EPSILON_DEG,
    PARANOID_SHRINK_DEG,
    WEIGHT_HALF,
    WEIGHT_ONE,
    AngleDeg,
    Annulus,
    Params,
    pair_angle_bound,
)
from .errors import DomainError, ResourceLimitError

# Exhaustive minimization refuses configurations larger than this.
MAX_ARRANGEMENT_POINTS = 32


@dataclass(frozen=True)
class PointClass:
    """A homogeneous group of points: weight, annulus, count, label."""

    weight: float
    annulus: Annulus
    count: int
    label: str = ""

    def __post_init__(self):
        if self.weight not in (WEIGHT_ONE, WEIGHT_HALF):
            raise DomainError(f"weight must be 1 or 1/2, got {self.weight}")
        if self.count < 0:
            raise DomainError(f"count must be nonnegative, got {self.count}")
        if not self.label:
            object.__setattr__(
                self, "label", "one" if self.weight == WEIGHT_ONE else "half"
            )

    def bound_class(self) -> tuple[float, Annulus]:
        return (self.weight, self.annulus)


class Composition(tuple):
    """Adjacency counts [n11, nhh, n1h] of a two-class circular ordering."""

    __slots__ = ()

    def __new__(cls, n11: int, nhh: int, n1h: int):
        return super().__new__(cls, (n11, nhh, n1h))

    @property
    def n11(self) -> int:
        return self[0]

    @property
    def nhh(self) -> int:
        return self[1]

    @property
    def n1h(self) -> int:
        return self[2]


@dataclass(frozen=True)
class ArrangementCertificate:
    """The minimizing circular arrangement and its angle-sum lower bound."""

    min_sum: AngleDeg
    witness: tuple[str, ...]
    method: str  # "two-class-closed-form" or "exhaustive"
    composition: Composition | None = None

    @property
    def margin(self) -> AngleDeg:
        return self.min_sum - 360.0


@dataclass(frozen=True)
class Certification:
    """Outcome of an impossibility check: `verified` means the minimum
    angle sum exceeds 360 degrees with epsilon slack; otherwise the
    certificate carries the witness arrangement that fails to exceed it."""

    verified: bool
    certificate: ArrangementCertificate


def enumerate_compositions(m: int, h: int) -> list[Composition]:
    """All realizable [n11, nhh, n1h] for m weight-1 and h weight-1/2
    points on a circle, ordered by increasing n11.  k = number of maximal
    same-class blocks ranges over 1..min(m, h) when both counts are
    positive."""
    if m < 0 or h < 0:
        raise DomainError(f"counts must be nonnegative, got m={m}, h={h}")
    if m + h < 2:
        raise DomainError(f"need at least two points for angles, got m+h={m + h}")
    if h == 0:
        return [Composition(m, 0, 0)]
    if m == 0:
        return [Composition(0, h, 0)]
    comps = [Composition(m - k, h - k, 2 * k) for k in range(min(m, h), 0, -1)]
    return comps


def composition_word(m: int, h: int, comp: Composition) -> tuple[str, ...]:
    """A circular word over {"1", "h"} realizing the composition: the block
    structure is one long block of each class followed by alternating
    singletons."""
    if comp not in enumerate_compositions(m, h):
        raise DomainError(f"composition {tuple(comp)} is not realizable for ({m}, {h})")
    if h == 0:
        return ("1",) * m
    if m == 0:
        return ("h",) * h
    k = comp.n1h // 2
    word = ["1"] * (m - k + 1) + ["h"] * (h - k + 1)
    for _ in range(k - 1):
        word += ["1", "h"]
    return tuple(word)


def adjacency_counts(word: tuple[str, ...]) -> Composition:
    """Count consecutive pairs of a circular word over {"1", "h"}."""
    n = len(word)
    n11 = nhh = n1h = 0
    for i in range(n):
        a, b = word[i], word[(i + 1) % n]
        if a == b == "1":
            n11 += 1
        elif a == b == "h":
            nhh += 1
        else:
            n1h += 1
    return Composition(n11, nhh, n1h)


def _shrink(bound: float, paranoid: bool) -> float:
    return bound - PARANOID_SHRINK_DEG if paranoid else bound


def min_sum_two_class(
    ones: PointClass,
    halves: PointClass,
    params: Params,
    paranoid: bool = False,
) -> ArrangementCertificate:
    """Exact minimum angle sum for one weight-1 class and one weight-1/2
    class via composition enumeration.  Either count may be zero."""
    if ones.weight != WEIGHT_ONE or halves.weight != WEIGHT_HALF:
        raise DomainError(
            "min_sum_two_class takes one weight-1 class and one weight-1/2 class"
        )
    m, h = ones.count, halves.count
    if m + h < 2:
        raise DomainError(f"need at least two points, got {m + h}")

    if h == 0:
        b11 = _shrink(pair_angle_bound(ones.bound_class(), ones.bound_class(), params), paranoid)
        comp = Composition(m, 0, 0)
        return ArrangementCertificate(m * b11, (ones.label,) * m, "two-class-closed-form", comp)
    if m == 0:
        bhh = _shrink(pair_angle_bound(halves.bound_class(), halves.bound_class(), params), paranoid)
        comp = Composition(0, h, 0)
        return ArrangementCertificate(h * bhh, (halves.label,) * h, "two-class-closed-form", comp)

    b11 = _shrink(pair_angle_bound(ones.bound_class(), ones.bound_class(), params), paranoid)
    bhh = _shrink(pair_angle_bound(halves.bound_class(), halves.bound_class(), params), paranoid)
    b1h = _shrink(pair_angle_bound(ones.bound_class(), halves.bound_class(), params), paranoid)

    best_sum = None
    best_comp = None
    for comp in enumerate_compositions(m, h):
        total = comp.n11 * b11 + comp.nhh * bhh + comp.n1h * b1h
        if best_sum is None or total < best_sum:
            best_sum, best_comp = total, comp
    # The objective is affine in the block count k, so the minimizer must
    # be extremal; anything else indicates a broken enumeration.
    k_best = best_comp.n1h // 2
    assert k_best in (1, min(m, h)), f"non-extremal minimizing block count {k_best}"

    word = composition_word(m, h, best_comp)
    witness = tuple(ones.label if c == "1" else halves.label for c in word)
    return ArrangementCertificate(best_sum, witness, "two-class-closed-form", best_comp)


def _pair_matrix(classes: list[PointClass], params: Params, paranoid: bool) -> list[list[float]]:
    k = len(classes)
    return [
        [
            _shrink(pair_angle_bound(classes[i].bound_class(), classes[j].bound_class(), params), paranoid)
            for j in range(k)
        ]
        for i in range(k)
    ]


def _active(classes: list[PointClass] | tuple[PointClass, ...]) -> list[PointClass]:
    kept = [c for c in classes if c.count > 0]
    labels = [c.label for c in kept]
    if len(set(labels)) != len(labels):
        raise DomainError(f"class labels must be distinct, got {labels}")
    return kept


def min_sum_general(
    classes: list[PointClass] | tuple[PointClass, ...],
    params: Params,
    paranoid: bool = False,
) -> ArrangementCertificate:
    """Exact minimum angle sum over all distinct circular arrangements of
    the class-label multiset.  Rotations are canonicalized by pinning one
    occurrence of the lexicographically least label to the first slot; ties
    in the minimum resolve to the lexicographically least witness."""
    kept = _active(classes)
    total = sum(c.count for c in kept)
    if total < 2:
        raise DomainError(f"need at least two points, got {total}")
    if total > MAX_ARRANGEMENT_POINTS:
        raise ResourceLimitError(
            f"{total} points exceed the exhaustive-search limit of {MAX_ARRANGEMENT_POINTS}"
        )

    order = sorted(range(len(kept)), key=lambda i: kept[i].label)
    kept = [kept[i] for i in order]
    bounds = _pair_matrix(kept, params, paranoid)
    counts = [c.count for c in kept]

    best_sum: float | None = None
    best_seq: tuple[int, ...] | None = None
    counts[0] -= 1
    seq: list[int] = [0]
    remaining = total - 1

    def recurse(last: int, partial: float) -> None:
        nonlocal best_sum, best_seq, remaining
        if best_sum is not None and partial >= best_sum:
            return
        if remaining == 0:
            s = partial + bounds[last][0]
            t = tuple(seq)
            if best_sum is None or s < best_sum or (s == best_sum and t < best_seq):
                best_sum, best_seq = s, t
            return
        for c in range(len(counts)):
            if counts[c] > 0:
                counts[c] -= 1
                seq.append(c)
                remaining -= 1
                recurse(c, partial + bounds[last][c])
                remaining += 1
                seq.pop()
                counts[c] += 1

    recurse(0, 0.0)
    counts[0] += 1
    witness = tuple(kept[i].label for i in best_seq)
    return ArrangementCertificate(best_sum, witness, "exhaustive")


def evaluate_witness(
    classes: list[PointClass] | tuple[PointClass, ...],
    witness: tuple[str, ...],
    params: Params,
    paranoid: bool = False,
) -> AngleDeg:
    """Re-evaluate a witness arrangement: sum of consecutive pair bounds."""
    by_label = {c.label: c for c in _active(classes)}
    n = len(witness)
    total = 0.0
    for i in range(n):
        a = by_label[witness[i]]
        b = by_label[witness[(i + 1) % n]]
        total += _shrink(pair_angle_bound(a.bound_class(), b.bound_class(), params), paranoid)
    return total


def _is_two_class(kept: list[PointClass]) -> bool:
    weights = sorted(c.weight for c in kept)
    if len(kept) == 1:
        return True
    return len(kept) == 2 and weights == [WEIGHT_HALF, WEIGHT_ONE]


def minimize(
    classes: list[PointClass] | tuple[PointClass, ...],
    params: Params,
    paranoid: bool = False,
) -> ArrangementCertificate:
    """Dispatch: closed form when the active classes are one weight-1 and
    one weight-1/2 group (either possibly absent), exhaustive otherwise."""
    kept = _active(classes)
    if _is_two_class(kept):
        ones = next((c for c in kept if c.weight == WEIGHT_ONE), None)
        halves = next((c for c in kept if c.weight == WEIGHT_HALF), None)
        if ones is None:
            ones = PointClass(WEIGHT_ONE, params.one_annulus(), 0, "one")
        if halves is None:
            halves = PointClass(WEIGHT_HALF, params.half_annulus(), 0, "half")
        return min_sum_two_class(ones, halves, params, paranoid)
    return min_sum_general(kept, params, paranoid)


def certify_impossible(
    classes: list[PointClass] | tuple[PointClass, ...],
    params: Params,
    paranoid: bool = False,
) -> Certification:
    """Certify that no circular arrangement of the classes fits around the
    origin: verified when the minimum angle sum exceeds 360 degrees by more
    than `CERT_EPSILON_DEG`.  A refusal is not a disproof; it carries the
    witness whose bound failed to exceed the circle."""
    certificate = minimize(classes, params, paranoid)
    verified = certificate.min_sum > 360.0 + CERT_EPSILON_DEG
    return Certification(verified, certificate)
