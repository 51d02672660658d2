"""Machine-checkable proof scripts for the 14.5 out-weight bound.

A proof script is a list of claims, each asserting that some configuration
of weighted points in annuli is impossible.  Three claim kinds exist:

* ``capacity``   - a single class of k points cannot fit because
                   k * (self pair bound) exceeds 360 degrees;
* ``arrangement``- a multi-class configuration is impossible because the
                   minimum angle sum over all circular orderings exceeds
                   360 degrees;
* ``chain``      - a configuration of m weight-1 and h weight-1/2 points is
                   impossible by pigeonhole: each step cites a previously
                   verified claim and derives a placement consequence, and
                   the final step reaches a contradiction.

Chain steps are validated, not trusted.  The checker tracks what is known
about the hypothetical configuration (how many weight-1/2 points must sit
inside each inner annulus, where the weight-1 points are confined) and
accepts a step only when the cited impossibility, applied to the tracked
knowledge, forces the stated consequence; the count arithmetic must
re-derive exactly.  Monotonicity makes citing sub-configurations sound: a
sub-multiset of a realizable configuration is realizable, so a certified
impossibility rules out every extension.

The final coverage check confirms that every (m, h) pair with total weight
m + h/2 >= 15 dominates some proven-impossible pair, which is what the
per-vertex bound of 14.5 requires.

Annulus endpoints in scripts may be the symbolic tokens "p", "q", "1+p",
"1+q"; they resolve against the active `Params`, so the same script drives
threshold sweeps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arrangements import (
    ArrangementCertificate,
    Certification,
    PointClass,
    certify_impossible,
)
from .bounds import (
    CERT_EPSILON_DEG,
    WEIGHT_HALF,
    WEIGHT_ONE,
    Annulus,
    Params,
    capacity_bound,
    pair_angle_bound,
)
from .errors import ChainError, DomainError, SoigError, StructuralError

# Expected margins farther than this from the recomputed value are flagged
# as discrepancies (the verdict still uses the recomputed value).
MARGIN_FLAG_TOL_DEG = 0.02

_SYMBOLS = ("p", "q", "1+p", "1+q")
_ENDPOINT_MATCH_TOL = 1e-12

Endpoint = float | str


def resolve_endpoint(value: Endpoint, params: Params) -> float:
    if isinstance(value, str):
        if value == "p":
            return params.p
        if value == "q":
            return params.q
        if value == "1+p":
            return 1 + params.p
        if value == "1+q":
            return 1 + params.q
        raise StructuralError(f"unknown symbolic endpoint {value!r}; allowed: {_SYMBOLS}")
    return float(value)


@dataclass(frozen=True)
class ClassSpec:
    """A point class with possibly symbolic annulus endpoints."""

    weight: float
    lo: Endpoint
    hi: Endpoint
    count: int
    label: str = ""

    def __post_init__(self):
        if self.weight not in (WEIGHT_ONE, WEIGHT_HALF):
            raise StructuralError(f"class weight must be 1 or 1/2, got {self.weight}")
        if self.count < 0:
            raise StructuralError(f"class count must be >= 0, got {self.count}")
        if isinstance(self.lo, str) and self.lo not in _SYMBOLS:
            raise StructuralError(f"unknown endpoint symbol {self.lo!r}")
        if isinstance(self.hi, str) and self.hi not in _SYMBOLS:
            raise StructuralError(f"unknown endpoint symbol {self.hi!r}")
        if not isinstance(self.lo, str) and not isinstance(self.hi, str):
            if not 0 <= float(self.lo) < float(self.hi):
                raise StructuralError(
                    f"degenerate annulus [{self.lo}, {self.hi}] rejected at load time"
                )
        if not self.label:
            object.__setattr__(
                self, "label", "one" if self.weight == WEIGHT_ONE else "half"
            )

    def resolve(self, params: Params) -> PointClass:
        lo = resolve_endpoint(self.lo, params)
        hi = resolve_endpoint(self.hi, params)
        if not lo < hi:
            raise StructuralError(f"annulus [{lo}, {hi}] degenerate after resolution")
        return PointClass(self.weight, Annulus(lo, hi), self.count, self.label)


@dataclass(frozen=True)
class Derivation:
    """Consequence a chain step claims to establish."""

    kind: str  # "halves-at-least" | "ones-within" | "ones-at-least" | "contradiction"
    count: int = 0
    lo: Endpoint = 0.0
    hi: Endpoint = 0.0

    _KINDS = ("halves-at-least", "ones-within", "ones-at-least", "contradiction")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise StructuralError(f"unknown derivation kind {self.kind!r}")


@dataclass(frozen=True)
class ChainStep:
    justification: str
    derives: Derivation
    assumption: str = ""


@dataclass(frozen=True)
class ClaimSpec:
    """One checkable impossibility statement."""

    id: str
    kind: str  # "capacity" | "arrangement" | "chain"
    classes: tuple[ClassSpec, ...] = ()
    steps: tuple[ChainStep, ...] = ()
    covers: tuple[int, int] | None = None
    expected_margin: float | None = None
    expected_floor: float | None = None
    print_precision: int = 2
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("capacity", "arrangement", "chain"):
            raise StructuralError(f"unknown claim kind {self.kind!r}", claim_id=self.id)
        if self.kind == "chain":
            if not self.steps:
                raise StructuralError("chain claim needs steps", claim_id=self.id)
        else:
            if self.steps:
                raise StructuralError(
                    f"{self.kind} claim must not carry steps", claim_id=self.id
                )
            if not self.classes:
                raise StructuralError(
                    f"{self.kind} claim needs classes", claim_id=self.id
                )
        if self.kind == "capacity" and len(self.classes) != 1:
            raise StructuralError(
                "capacity claim takes exactly one class", claim_id=self.id
            )


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    kind: str
    verdict: str  # "verified" | "refused" | "error"
    min_sum: float | None = None
    margin: float | None = None
    method: str = ""
    witness: tuple[str, ...] = ()
    composition: tuple[int, int, int] | None = None
    expected_margin: float | None = None
    margin_discrepancy: bool = False
    reconstruction: float | None = None
    detail: str = ""
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class CoverageResult:
    passed: bool
    uncovered: tuple[int, int] | None
    pairs: tuple[tuple[int, int], ...]
    checked: int
    weight_minimum: float
    m_max: int
    h_max: int


@dataclass(frozen=True)
class VerificationReport:
    p: float
    q: float
    paranoid: bool
    epsilon_deg: float
    results: tuple[ClaimResult, ...]
    coverage: CoverageResult
    overall: str  # "verified" | "refused" | "error"

    @property
    def failing_ids(self) -> tuple[str, ...]:
        return tuple(r.claim_id for r in self.results if r.verdict != "verified")

    @property
    def worst_margin(self) -> float | None:
        margins = [r.margin for r in self.results if r.margin is not None]
        return min(margins) if margins else None

    @property
    def discrepancies(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if r.margin_discrepancy)

    def result(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.claim_id == claim_id:
                return r
        raise KeyError(claim_id)


def _truncate(value: float, decimals: int) -> float:
    scale = 10.0**decimals
    return int(value * scale) / scale


def _reconstruct_printed_sum(
    classes: list[PointClass], certificate: ArrangementCertificate, params: Params, decimals: int
) -> float:
    """Re-derive the printed total the way truncating the per-pair bounds
    to `decimals` places would: sum the truncated bounds along the witness."""
    by_label = {c.label: c for c in classes}
    witness = certificate.witness
    total = 0.0
    for i in range(len(witness)):
        a = by_label[witness[i]]
        b = by_label[witness[(i + 1) % len(witness)]]
        total += _truncate(
            pair_angle_bound(a.bound_class(), b.bound_class(), params), decimals
        )
    return total


def _cross_check(claim: ClaimSpec, min_sum: float, recon: float | None) -> tuple[bool, float | None]:
    """Compare the recomputed minimum against the expected printed value.
    A claim is flagged only when neither the precise value nor the
    truncated-arithmetic reconstruction lands within tolerance."""
    if claim.expected_margin is None:
        if claim.expected_floor is not None and min_sum <= claim.expected_floor:
            return True, recon
        return False, None
    expected_sum = 360.0 + claim.expected_margin
    if abs(min_sum - expected_sum) <= MARGIN_FLAG_TOL_DEG:
        return False, recon
    if recon is not None and abs(recon - expected_sum) <= MARGIN_FLAG_TOL_DEG:
        return False, recon
    return True, recon


# ------------------------------------------------------------------ chains

class _HalfKnowledge:
    """Lower bounds on weight-1/2 point counts inside prefix annuli
    [base_lo, c] and outer annuli [c, base_hi]."""

    def __init__(self, base: Annulus, total: int):
        self.base = base
        self.total = total
        self.prefix: dict[float, int] = {}
        self.outer: dict[float, int] = {}

    def prefix_bound(self, hi: float) -> int:
        best = 0
        if hi >= self.base.r_hi - _ENDPOINT_MATCH_TOL:
            best = self.total
        for cut, k in self.prefix.items():
            if cut <= hi + _ENDPOINT_MATCH_TOL:
                best = max(best, k)
        return best

    def outer_bound(self, lo: float) -> int:
        best = 0
        if lo <= self.base.r_lo + _ENDPOINT_MATCH_TOL:
            best = self.total
        for cut, k in self.outer.items():
            if cut >= lo - _ENDPOINT_MATCH_TOL:
                best = max(best, k)
        return best

    def add_prefix(self, hi: float, k: int) -> None:
        self.prefix[hi] = max(self.prefix.get(hi, 0), k)

    def add_outer(self, lo: float, k: int) -> None:
        self.outer[lo] = max(self.outer.get(lo, 0), k)


def _is_prefix(ann: Annulus, base: Annulus) -> bool:
    return abs(ann.r_lo - base.r_lo) <= _ENDPOINT_MATCH_TOL


def _is_outer(ann: Annulus, base: Annulus) -> bool:
    return abs(ann.r_hi - base.r_hi) <= _ENDPOINT_MATCH_TOL


def _halves_satisfiable(
    requirements: list[PointClass], know: _HalfKnowledge, claim_id: str, step_no: int
) -> None:
    """Raise unless every population consistent with `know` contains the
    required half-point groups disjointly (Hall condition on nested
    prefixes; outer requirements check directly)."""
    prefix_reqs = []
    outer_reqs = []
    for cls in requirements:
        if _is_prefix(cls.annulus, know.base):
            prefix_reqs.append(cls)
        elif _is_outer(cls.annulus, know.base):
            outer_reqs.append(cls)
        else:
            raise ChainError(
                f"step {step_no}: half requirement {cls.annulus} is neither a prefix "
                f"nor an outer slice of {know.base}",
                claim_id=claim_id,
            )
    if prefix_reqs and outer_reqs:
        cutoff = max(c.annulus.r_hi for c in prefix_reqs)
        if min(c.annulus.r_lo for c in outer_reqs) < cutoff - _ENDPOINT_MATCH_TOL:
            raise ChainError(
                f"step {step_no}: overlapping prefix and outer half requirements",
                claim_id=claim_id,
            )
    cumulative = 0
    for cls in sorted(prefix_reqs, key=lambda c: c.annulus.r_hi):
        cumulative += cls.count
        have = know.prefix_bound(cls.annulus.r_hi)
        if cumulative > have:
            raise ChainError(
                f"step {step_no}: needs {cumulative} halves within "
                f"[{know.base.r_lo:g}, {cls.annulus.r_hi:g}] but only {have} are known",
                claim_id=claim_id,
            )
    for cls in outer_reqs:
        have = know.outer_bound(cls.annulus.r_lo)
        if cls.count > have:
            raise ChainError(
                f"step {step_no}: needs {cls.count} halves within {cls.annulus} "
                f"but only {have} are known",
                claim_id=claim_id,
            )


class _ChainChecker:
    def __init__(self, claim: ClaimSpec, params: Params):
        self.claim = claim
        self.params = params
        ones = [c for c in claim.classes if c.weight == WEIGHT_ONE]
        halves = [c for c in claim.classes if c.weight == WEIGHT_HALF]
        if len(ones) != 1 or len(halves) != 1:
            raise StructuralError(
                "chain claim needs exactly one weight-1 and one weight-1/2 class",
                claim_id=claim.id,
            )
        self.m = ones[0].count
        self.h = halves[0].count
        self.ones_base = ones[0].resolve(params).annulus if self.m else params.one_annulus()
        self.half_base = halves[0].resolve(params).annulus if self.h else params.half_annulus()
        self.ones_lo = self.ones_base.r_lo
        self.ones_extra: list[tuple[Annulus, int]] = []
        self.know = _HalfKnowledge(self.half_base, self.h)
        self.contradicted = False

    # -- requirement checks ------------------------------------------------

    def _ones_satisfiable(self, requirements: list[PointClass], step_no: int) -> None:
        for cls in requirements:
            confined = Annulus(self.ones_lo, self.ones_base.r_hi)
            if cls.annulus.encloses(confined, _ENDPOINT_MATCH_TOL) and cls.count <= self.m:
                continue
            if any(
                cls.annulus.encloses(ann, _ENDPOINT_MATCH_TOL) and cls.count <= k
                for ann, k in self.ones_extra
            ):
                continue
            raise ChainError(
                f"step {step_no}: cannot supply {cls.count} weight-1 points in {cls.annulus}",
                claim_id=self.claim.id,
            )

    # -- step handlers -------------------------------------------------------

    def apply(self, step_no: int, step: ChainStep, just: ClaimSpec) -> None:
        if self.contradicted:
            raise ChainError(
                f"step {step_no}: steps after the contradiction", claim_id=self.claim.id
            )
        resolved = [c.resolve(self.params) for c in just.classes]
        ones_req = [c for c in resolved if c.weight == WEIGHT_ONE and c.count > 0]
        half_req = [c for c in resolved if c.weight == WEIGHT_HALF and c.count > 0]
        kind = step.derives.kind
        if kind == "halves-at-least":
            self._apply_halves_at_least(step_no, step, ones_req, half_req)
        elif kind == "ones-within":
            self._apply_ones_within(step_no, step, ones_req, half_req)
        elif kind == "ones-at-least":
            self._apply_ones_at_least(step_no, step, ones_req, half_req)
        elif kind == "contradiction":
            self._ones_satisfiable(ones_req, step_no)
            _halves_satisfiable(half_req, self.know, self.claim.id, step_no)
            self.contradicted = True

    def _conclusion_annulus(self, step: ChainStep) -> Annulus:
        lo = resolve_endpoint(step.derives.lo, self.params)
        hi = resolve_endpoint(step.derives.hi, self.params)
        return Annulus(lo, hi)

    def _apply_halves_at_least(self, step_no, step, ones_req, half_req) -> None:
        if not half_req:
            raise ChainError(
                f"step {step_no}: justification has no weight-1/2 requirement",
                claim_id=self.claim.id,
            )
        self._ones_satisfiable(ones_req, step_no)
        conclusion = self._conclusion_annulus(step)
        base = self.know.base
        if all(_is_prefix(c.annulus, base) for c in half_req):
            pivot_hi = max(c.annulus.r_hi for c in half_req)
            pivot_total = sum(c.count for c in half_req)
            # Sub-requirements strictly inside the pivot must already be known.
            inner = [c for c in half_req if c.annulus.r_hi < pivot_hi - _ENDPOINT_MATCH_TOL]
            _halves_satisfiable(inner, self.know, self.claim.id, step_no)
            expect = Annulus(pivot_hi, base.r_hi)
            derived_count = self.h - pivot_total + 1
            where = "outer"
        elif len(half_req) == 1 and _is_outer(half_req[0].annulus, base):
            pivot = half_req[0]
            expect = Annulus(base.r_lo, pivot.annulus.r_lo)
            derived_count = self.h - pivot.count + 1
            where = "prefix"
        else:
            raise ChainError(
                f"step {step_no}: unsupported half-requirement shape for pigeonhole",
                claim_id=self.claim.id,
            )
        if step.derives.count != derived_count:
            raise ChainError(
                f"step {step_no}: derived count {step.derives.count} does not re-derive; "
                f"pigeonhole gives {derived_count}",
                claim_id=self.claim.id,
            )
        if (
            abs(conclusion.r_lo - expect.r_lo) > _ENDPOINT_MATCH_TOL
            or abs(conclusion.r_hi - expect.r_hi) > _ENDPOINT_MATCH_TOL
        ):
            raise ChainError(
                f"step {step_no}: derived annulus {conclusion} should be {expect}",
                claim_id=self.claim.id,
            )
        if where == "prefix":
            self.know.add_prefix(conclusion.r_hi, derived_count)
        else:
            self.know.add_outer(conclusion.r_lo, derived_count)

    def _apply_ones_within(self, step_no, step, ones_req, half_req) -> None:
        if len(ones_req) != 1 or ones_req[0].count != 1:
            raise ChainError(
                f"step {step_no}: confinement needs a single weight-1 requirement of count 1",
                claim_id=self.claim.id,
            )
        _halves_satisfiable(half_req, self.know, self.claim.id, step_no)
        witness_region = ones_req[0].annulus
        if witness_region.r_lo > self.ones_lo + _ENDPOINT_MATCH_TOL:
            raise ChainError(
                f"step {step_no}: justification covers {witness_region} but weight-1 "
                f"points may sit as low as {self.ones_lo:g}",
                claim_id=self.claim.id,
            )
        conclusion = self._conclusion_annulus(step)
        expect = Annulus(witness_region.r_hi, self.ones_base.r_hi)
        if (
            abs(conclusion.r_lo - expect.r_lo) > _ENDPOINT_MATCH_TOL
            or abs(conclusion.r_hi - expect.r_hi) > _ENDPOINT_MATCH_TOL
        ):
            raise ChainError(
                f"step {step_no}: confinement annulus {conclusion} should be {expect}",
                claim_id=self.claim.id,
            )
        self.ones_lo = max(self.ones_lo, conclusion.r_lo)

    def _apply_ones_at_least(self, step_no, step, ones_req, half_req) -> None:
        if half_req or len(ones_req) != 1:
            raise ChainError(
                f"step {step_no}: existence derivation needs a single weight-1 requirement",
                claim_id=self.claim.id,
            )
        req = ones_req[0]
        if not _is_outer(req.annulus, self.ones_base):
            raise ChainError(
                f"step {step_no}: existence derivation needs an outer weight-1 slice",
                claim_id=self.claim.id,
            )
        if req.count != self.m:
            raise ChainError(
                f"step {step_no}: justification must exclude all {self.m} weight-1 points, "
                f"covers {req.count}",
                claim_id=self.claim.id,
            )
        conclusion = self._conclusion_annulus(step)
        expect = Annulus(self.ones_lo, req.annulus.r_lo)
        derived_count = self.m - req.count + 1
        if step.derives.count != derived_count:
            raise ChainError(
                f"step {step_no}: derived count {step.derives.count} does not re-derive; "
                f"pigeonhole gives {derived_count}",
                claim_id=self.claim.id,
            )
        if (
            abs(conclusion.r_lo - expect.r_lo) > _ENDPOINT_MATCH_TOL
            or abs(conclusion.r_hi - expect.r_hi) > _ENDPOINT_MATCH_TOL
        ):
            raise ChainError(
                f"step {step_no}: existence annulus {conclusion} should be {expect}",
                claim_id=self.claim.id,
            )
        self.ones_extra.append((conclusion, derived_count))


# ------------------------------------------------------------ verification

def verify_claim(
    claim: ClaimSpec,
    params: Params,
    context: dict[str, tuple[ClaimSpec, ClaimResult]] | None = None,
    paranoid: bool = False,
) -> ClaimResult:
    """Verify one claim.  Chain claims need `context` mapping ids of
    earlier claims to their (spec, result) pairs."""
    context = context or {}
    try:
        if claim.kind == "capacity":
            return _verify_capacity(claim, params, paranoid)
        if claim.kind == "arrangement":
            return _verify_arrangement(claim, params, paranoid)
        return _verify_chain(claim, params, context)
    except StructuralError:
        raise
    except SoigError as exc:
        return ClaimResult(
            claim_id=claim.id,
            kind=claim.kind,
            verdict="error",
            detail=str(exc),
            notes=claim.notes,
        )


def _verify_capacity(claim: ClaimSpec, params: Params, paranoid: bool) -> ClaimResult:
    cls = claim.classes[0].resolve(params)
    if cls.count < 1:
        raise StructuralError("capacity claim needs a positive count", claim_id=claim.id)
    cap = capacity_bound(cls.bound_class(), params)
    bound = pair_angle_bound(cls.bound_class(), cls.bound_class(), params)
    if paranoid:
        from .bounds import PARANOID_SHRINK_DEG

        bound -= PARANOID_SHRINK_DEG
    min_sum = cls.count * bound
    margin = min_sum - 360.0
    verified = cls.count > cap and margin > CERT_EPSILON_DEG
    recon = cls.count * _truncate(bound, claim.print_precision)
    flagged, recon = _cross_check(claim, min_sum, recon)
    return ClaimResult(
        claim_id=claim.id,
        kind="capacity",
        verdict="verified" if verified else "refused",
        min_sum=min_sum,
        margin=margin,
        method="capacity",
        witness=(cls.label,) * cls.count,
        expected_margin=claim.expected_margin,
        margin_discrepancy=flagged,
        reconstruction=recon,
        detail="" if verified else f"{cls.count} points fit (capacity {cap})",
        notes=claim.notes,
    )


def _verify_arrangement(claim: ClaimSpec, params: Params, paranoid: bool) -> ClaimResult:
    classes = [c.resolve(params) for c in claim.classes]
    outcome: Certification = certify_impossible(classes, params, paranoid)
    cert = outcome.certificate
    recon = _reconstruct_printed_sum(
        [c for c in classes if c.count > 0], cert, params, claim.print_precision
    )
    flagged, recon = _cross_check(claim, cert.min_sum, recon)
    return ClaimResult(
        claim_id=claim.id,
        kind="arrangement",
        verdict="verified" if outcome.verified else "refused",
        min_sum=cert.min_sum,
        margin=cert.margin,
        method=cert.method,
        witness=cert.witness,
        composition=tuple(cert.composition) if cert.composition else None,
        expected_margin=claim.expected_margin,
        margin_discrepancy=flagged,
        reconstruction=recon,
        detail="" if outcome.verified else "minimum angle sum does not exceed 360",
        notes=claim.notes,
    )


def _verify_chain(
    claim: ClaimSpec, params: Params, context: dict[str, tuple[ClaimSpec, ClaimResult]]
) -> ClaimResult:
    checker = _ChainChecker(claim, params)
    for step_no, step in enumerate(claim.steps, start=1):
        if step.justification not in context:
            raise StructuralError(
                f"step {step_no} cites unknown claim {step.justification!r}",
                claim_id=claim.id,
            )
        just_spec, just_result = context[step.justification]
        if just_result.verdict != "verified":
            return ClaimResult(
                claim_id=claim.id,
                kind="chain",
                verdict="refused",
                detail=f"step {step_no} depends on {step.justification}, "
                f"which is {just_result.verdict}",
                notes=claim.notes,
            )
        checker.apply(step_no, step, just_spec)
    if not checker.contradicted:
        raise StructuralError("chain never reaches a contradiction", claim_id=claim.id)
    return ClaimResult(
        claim_id=claim.id,
        kind="chain",
        verdict="verified",
        method="chain",
        notes=claim.notes,
    )


# -------------------------------------------------------------- coverage

def coverage_check(
    verified_pairs: set[tuple[int, int]] | frozenset[tuple[int, int]],
    weight_minimum: float = 15.0,
    m_max: int = 18,
    h_max: int = 36,
) -> CoverageResult:
    """Every (m, h) with m + h/2 >= weight_minimum on the grid must
    dominate some verified-impossible pair (m' <= m, h' <= h); deleting
    points preserves every constraint, so domination transfers the
    impossibility."""
    pairs = tuple(sorted(verified_pairs))
    checked = 0
    for m in range(m_max + 1):
        for h in range(h_max + 1):
            if m + h / 2.0 < weight_minimum:
                continue
            checked += 1
            if not any(mp <= m and hp <= h for mp, hp in pairs):
                return CoverageResult(False, (m, h), pairs, checked, weight_minimum, m_max, h_max)
    return CoverageResult(True, None, pairs, checked, weight_minimum, m_max, h_max)


# ---------------------------------------------------------------- scripts

def verify_script(
    claims: list[ClaimSpec] | tuple[ClaimSpec, ...],
    params: Params,
    paranoid: bool = False,
) -> VerificationReport:
    ids = [c.id for c in claims]
    dupes = {i for i in ids if ids.count(i) > 1}
    if dupes:
        raise StructuralError(f"duplicate claim ids: {sorted(dupes)}")
    context: dict[str, tuple[ClaimSpec, ClaimResult]] = {}
    results = []
    for claim in claims:
        result = verify_claim(claim, params, context, paranoid)
        context[claim.id] = (claim, result)
        results.append(result)
    covered = {
        c.covers
        for c in claims
        if c.covers is not None and context[c.id][1].verdict == "verified"
    }
    coverage = coverage_check(covered)
    if any(r.verdict == "error" for r in results):
        overall = "error"
    elif all(r.verdict == "verified" for r in results) and coverage.passed:
        overall = "verified"
    else:
        overall = "refused"
    return VerificationReport(
        p=params.p,
        q=params.q,
        paranoid=paranoid,
        epsilon_deg=CERT_EPSILON_DEG,
        results=tuple(results),
        coverage=coverage,
        overall=overall,
    )


def verify_proof(
    params: Params | None = None,
    claims: list[ClaimSpec] | None = None,
    paranoid: bool = False,
) -> VerificationReport:
    """Verify the built-in proof script (or a custom one) at the given
    threshold.  The built-in script verifies at p = 1.409."""
    from .builtin_script import builtin_script

    params = params or Params()
    claims = list(claims) if claims is not None else list(builtin_script())
    return verify_script(claims, params, paranoid)


@dataclass(frozen=True)
class SweepRow:
    p: float
    overall: str
    failing: tuple[str, ...]
    worst_margin: float | None


def sweep_p(
    p_lo: float,
    p_hi: float,
    step: float,
    claims: list[ClaimSpec] | None = None,
    paranoid: bool = False,
) -> list[SweepRow]:
    """Run the verification at every threshold in [p_lo, p_hi] with the
    given step; deterministic row order."""
    if not 1 < p_lo <= p_hi:
        raise DomainError(f"need 1 < p_lo <= p_hi, got [{p_lo}, {p_hi}]")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    count = int(round((p_hi - p_lo) / step))
    values = [round(p_lo + i * step, 12) for i in range(count + 1)]
    if values[-1] > p_hi + 1e-12:
        values.pop()
    rows = []
    for p in values:
        report = verify_proof(Params(p), claims, paranoid)
        rows.append(SweepRow(p, report.overall, report.failing_ids, report.worst_margin))
    return rows


# ------------------------------------------------------- JSON interchange

def _endpoint_to_json(value: Endpoint):
    return value


def script_to_dict(claims: list[ClaimSpec] | tuple[ClaimSpec, ...]) -> dict:
    out = {"format": "soig-proof-script", "version": 1, "claims": []}
    for c in claims:
        entry: dict = {"id": c.id, "kind": c.kind}
        if c.covers is not None:
            entry["covers"] = list(c.covers)
        if c.classes:
            entry["classes"] = [
                {
                    "label": cl.label,
                    "weight": cl.weight,
                    "annulus": [_endpoint_to_json(cl.lo), _endpoint_to_json(cl.hi)],
                    "count": cl.count,
                }
                for cl in c.classes
            ]
        if c.steps:
            entry["steps"] = [
                {
                    "assumption": s.assumption,
                    "justification": s.justification,
                    "derives": _derivation_to_json(s.derives),
                }
                for s in c.steps
            ]
        if c.expected_margin is not None:
            entry["expected_margin"] = c.expected_margin
        if c.expected_floor is not None:
            entry["expected_floor"] = c.expected_floor
        if c.print_precision != 2:
            entry["print_precision"] = c.print_precision
        if c.notes:
            entry["notes"] = list(c.notes)
        out["claims"].append(entry)
    return out


def _derivation_to_json(d: Derivation) -> dict:
    if d.kind == "contradiction":
        return {"kind": d.kind}
    out = {"kind": d.kind, "annulus": [d.lo, d.hi]}
    if d.kind != "ones-within":
        out["count"] = d.count
    return out


def _derivation_from_json(data: dict, claim_id: str) -> Derivation:
    try:
        kind = data["kind"]
    except (TypeError, KeyError):
        raise StructuralError("step derivation needs a 'kind'", claim_id=claim_id) from None
    if kind == "contradiction":
        return Derivation(kind)
    try:
        lo, hi = data["annulus"]
    except (TypeError, KeyError, ValueError):
        raise StructuralError(
            f"derivation {kind!r} needs an 'annulus' [lo, hi]", claim_id=claim_id
        ) from None
    count = data.get("count", 0)
    return Derivation(kind, count=count, lo=lo, hi=hi)


def script_from_dict(data: dict) -> list[ClaimSpec]:
    if not isinstance(data, dict) or data.get("format") != "soig-proof-script":
        raise StructuralError("not a soig proof script (missing format marker)")
    claims = []
    for raw in data.get("claims", []):
        cid = raw.get("id")
        if not cid:
            raise StructuralError("every claim needs an id")
        try:
            classes = tuple(
                ClassSpec(
                    weight=cl["weight"],
                    lo=cl["annulus"][0],
                    hi=cl["annulus"][1],
                    count=cl["count"],
                    label=cl.get("label", ""),
                )
                for cl in raw.get("classes", [])
            )
            steps = tuple(
                ChainStep(
                    justification=s["justification"],
                    derives=_derivation_from_json(s.get("derives"), cid),
                    assumption=s.get("assumption", ""),
                )
                for s in raw.get("steps", [])
            )
        except (TypeError, KeyError, IndexError, ValueError) as exc:
            raise StructuralError(f"malformed field: {exc}", claim_id=cid) from None
        covers = raw.get("covers")
        claims.append(
            ClaimSpec(
                id=cid,
                kind=raw.get("kind", ""),
                classes=classes,
                steps=steps,
                covers=tuple(covers) if covers is not None else None,
                expected_margin=raw.get("expected_margin"),
                expected_floor=raw.get("expected_floor"),
                print_precision=raw.get("print_precision", 2),
                notes=tuple(raw.get("notes", ())),
            )
        )
    return claims


def load_script(path) -> list[ClaimSpec]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StructuralError(f"invalid JSON in proof script {path}: {exc}") from None
    return script_from_dict(data)
