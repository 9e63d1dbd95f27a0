# ============================================================================
# Custom Exceptions
# ============================================================================
from typing import Any, Dict, Optional


class TDException(Exception):
    """Base exception for the q-Serre perturbation lab"""
    def __init__(
        self,
        detail: str,
        exit_code: int = 1,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.detail = detail
        self.exit_code = exit_code
        self.error_code = error_code or "TD_ERROR"
        self.details = details or {}
        super().__init__(self.detail)

    def __reduce__(self):
        # Subclass constructors take different arguments; rebuild from state
        return _restore, (type(self), self.args, self.__dict__)


def _restore(cls, args, state):
    exc = cls.__new__(cls, *args)
    exc.args = args
    exc.__dict__.update(state)
    return exc


# ==================== Input / parsing (exit 1) ====================
class InvalidRational(TDException):
    def __init__(self, text: Any):
        super().__init__(
            detail=f"Not a rational number of the form 'p/q' or 'p': {text!r}",
            exit_code=1,
            error_code="INVALID_RATIONAL"
        )


class InvalidQ(TDException):
    def __init__(self, q: Any):
        super().__init__(
            detail=f"q must be a rational with q != 0 and |q| != 1, got {q}",
            exit_code=1,
            error_code="INVALID_Q"
        )


class DimensionMismatch(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=1,
            error_code="DIMENSION_MISMATCH"
        )


class InvalidParameterArray(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=1,
            error_code="INVALID_PARAMETER_ARRAY"
        )


class ThinConstructionError(TDException):
    def __init__(self, message: str = "thin construction requires ζᵢ ≠ 0"):
        super().__init__(
            detail=message,
            exit_code=1,
            error_code="THIN_CONSTRUCTION"
        )


class SchemaError(TDException):
    def __init__(self, message: str, errors: Optional[list] = None):
        super().__init__(
            detail=message,
            exit_code=1,
            error_code="SCHEMA_ERROR",
            details={"errors": errors or []}
        )


# ==================== Structural failures (exit 2) ====================
class SingularMatrix(TDException):
    def __init__(self, what: str = "matrix"):
        super().__init__(
            detail=f"{what} is singular",
            exit_code=2,
            error_code="SINGULAR_MATRIX"
        )


class SpectrumMismatch(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="SPECTRUM_MISMATCH"
        )


class NotSharp(TDException):
    def __init__(self, rank: int):
        super().__init__(
            detail=f"system is not sharp: rank(E*_0) = {rank}, expected 1",
            exit_code=2,
            error_code="NOT_SHARP",
            details={"rank": rank}
        )


class NotADecomposition(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="NOT_A_DECOMPOSITION"
        )


class SplitStructureError(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="SPLIT_STRUCTURE"
        )


class NonGeometricSpectrum(TDException):
    def __init__(self, message: str = "eigenvalues must be q^(2i-d) and dual eigenvalues q^(d-2i); normalize the system first"):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="NON_GEOMETRIC_SPECTRUM"
        )


class PerturbationStructureError(TDException):
    def __init__(self, message: str):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="PERTURBATION_STRUCTURE"
        )


class VerificationFailed(TDException):
    def __init__(self, message: str, failing_axiom: Optional[str] = None):
        super().__init__(
            detail=message,
            exit_code=2,
            error_code="VERIFICATION_FAILED",
            details={"failing_axiom": failing_axiom}
        )
        self.failing_axiom = failing_axiom


# ==================== Fatal (exit 3) ====================
class TheoremMismatch(TDException):
    def __init__(self, t: Any, predicted: bool, actual: bool):
        super().__init__(
            detail=f"theorem violated at t = {t}: predicted {predicted}, actual {actual}",
            exit_code=3,
            error_code="THEOREM_MISMATCH",
            details={"t": str(t), "predicted": predicted, "actual": actual}
        )
