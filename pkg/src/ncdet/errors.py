"""Exception hierarchy shared by the library and the CLI.

Every error carries the process exit code the CLI reports for it.
"""

from __future__ import annotations


class NcdetError(ValueError):
    """Base class for all ncdet errors."""

    exit_code = 3
    kind = "error"

    def __init__(self, message: str, *, witness: str | None = None):
        super().__init__(message)
        self.witness = witness

    def to_dict(self) -> dict[str, str | None]:
        """Serialize for the CLI error block."""
        return {"kind": self.kind, "message": str(self), "witness": self.witness}


class ParseError(NcdetError):
    """Malformed matrix/system document or quaternion text."""

    exit_code = 2
    kind = "parse"


class AlgebraMismatchError(NcdetError):
    """Operands belong to different algebras or scalar backends."""

    kind = "algebra-mismatch"


class ShapeError(NcdetError):
    """Operand shapes do not fit the operation."""

    kind = "shape"


class IndexOutOfRangeError(NcdetError):
    """A row/column index lies outside the matrix."""

    kind = "index"


class NotInvertibleError(NcdetError):
    """A quaternion with zero norm was inverted."""

    kind = "not-invertible"


class SingularMatrixError(NcdetError):
    """The double determinant (or Hermitian determinant) is zero."""

    kind = "singular"


class EnumerationLimitError(NcdetError):
    """Direct enumeration refused because n exceeds the configured bound."""

    kind = "enumeration-limit"


class EliminationStallError(NcdetError):
    """No invertible pivot exists among the remaining candidates.

    Only possible in splittable algebras; ``certificate`` holds the remaining
    submatrix whose nonzero entries all have zero norm.
    """

    kind = "elimination-stall"

    def __init__(self, message: str, *, certificate: object = None):
        super().__init__(message, witness=str(certificate) if certificate is not None else None)
        self.certificate = certificate


class UndefinedValueError(NcdetError):
    """A quasideterminant, Hadamard entry or block sub-inverse does not exist."""

    exit_code = 4
    kind = "undefined"


class InternalDisagreementError(NcdetError):
    """Two independent computation paths produced different values."""

    exit_code = 5
    kind = "disagreement"


class NotHermitianError(NcdetError):
    """An operation restricted to Hermitian matrices got another matrix."""

    kind = "not-hermitian"
