"""Exception hierarchy shared across the package."""


class SoigError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SoigError, ValueError):
    """A value violates a documented precondition (bad angle domain,
    malformed annulus, duplicate points, invalid parameter range)."""


class UnsupportedClaimError(DomainError):
    """A pair-angle bound was requested outside the supported regime
    (two weight-1/2 classes whose inner radii both exceed 1+q)."""


class StructuralError(SoigError, ValueError):
    """A claim or proof script is malformed: wrong fields for its kind,
    unknown justification id, or pigeonhole arithmetic that does not
    re-derive."""

    def __init__(self, message: str, claim_id: str | None = None):
        self.claim_id = claim_id
        if claim_id is not None:
            message = f"claim {claim_id!r}: {message}"
        super().__init__(message)


class ChainError(StructuralError):
    """A chain step cannot be validated against its justification."""


class ResourceLimitError(SoigError, RuntimeError):
    """An exhaustive search was requested beyond the supported size."""


class PointFileError(SoigError, ValueError):
    """A point-set file could not be parsed.  Carries the line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
