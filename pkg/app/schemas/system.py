# ============================================================================
# System & Parameter-Array File Schemas
# ============================================================================
import logging
from pathlib import Path
from typing import List, Tuple, Type, TypeVar

from pydantic import BaseModel, Field, ValidationError, model_validator

from app.core.exceptions import SchemaError
from app.schemas.linalg import MatrixSchema, RationalStr
from app.services.scalars import QContext, parse_rational
from app.services.tridiagonal import ParallelSystem, ParameterArray

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def load_model(path: str, model: Type[M]) -> M:
    """Read and validate a JSON file, mapping validation failures to SchemaError."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        logger.warning(f"{path} failed validation with {e.error_count()} error(s)")
        raise SchemaError(
            f"{path} is not a valid {model.__name__}",
            errors=e.errors(include_url=False, include_context=False),
        )


def _check_lengths(d: int, **lists: List[str]):
    for name, values in lists.items():
        if len(values) != d + 1:
            raise ValueError(f"{name} must have d + 1 = {d + 1} entries, got {len(values)}")


class SystemFile(BaseModel):
    """{"q", "d", "A", "A_star", "theta", "theta_star"}; idempotents are recomputed on load."""
    q: RationalStr
    d: int = Field(..., ge=0)
    A: MatrixSchema
    A_star: MatrixSchema
    theta: List[RationalStr]
    theta_star: List[RationalStr]

    @model_validator(mode='after')
    def check_dimensions(self) -> 'SystemFile':
        _check_lengths(self.d, theta=self.theta, theta_star=self.theta_star)
        if self.A.rows != self.A.cols or (self.A.rows, self.A.cols) != (self.A_star.rows, self.A_star.cols):
            raise ValueError("A and A_star must be square matrices of the same size")
        return self

    @classmethod
    def from_system(cls, ps: ParallelSystem) -> "SystemFile":
        return cls(
            q=str(ps.q_ctx.q),
            d=ps.d,
            A=MatrixSchema.from_matrix(ps.A),
            A_star=MatrixSchema.from_matrix(ps.A_star),
            theta=[str(v) for v in ps.theta],
            theta_star=[str(v) for v in ps.theta_star],
        )

    def to_system(self) -> ParallelSystem:
        ctx = QContext(q=parse_rational(self.q), d=self.d)
        return ParallelSystem.from_matrices(
            self.A.to_matrix(), self.A_star.to_matrix(), self.theta, self.theta_star, ctx
        )


class ParameterArrayFile(BaseModel):
    q: RationalStr
    d: int = Field(..., ge=0)
    theta: List[RationalStr]
    theta_star: List[RationalStr]
    zeta: List[RationalStr]

    @model_validator(mode='after')
    def check_dimensions(self) -> 'ParameterArrayFile':
        _check_lengths(self.d, theta=self.theta, theta_star=self.theta_star, zeta=self.zeta)
        return self

    @classmethod
    def from_parameter_array(cls, pa: ParameterArray, ctx: QContext) -> "ParameterArrayFile":
        data = pa.to_dict()
        return cls(q=str(ctx.q), **data)

    def to_parameter_array(self) -> Tuple[ParameterArray, QContext]:
        pa = ParameterArray(self.d, tuple(self.theta), tuple(self.theta_star), tuple(self.zeta))
        return pa, QContext(q=parse_rational(self.q), d=self.d)
