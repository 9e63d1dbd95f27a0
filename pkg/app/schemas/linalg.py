# ============================================================================
# Rational, Matrix, Subspace & Polynomial Schemas
# ============================================================================
from typing import List, Optional

from pydantic import AfterValidator, BaseModel, BeforeValidator, Field, model_validator
from typing_extensions import Annotated

from app.core.exceptions import InvalidRational
from app.services.linalg import Matrix, Subspace
from app.services.scalars import Polynomial, format_rational, parse_rational


def _reject_floats(value):
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"rationals must be written as 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return str(value)
    return value


def _canonical(value: str) -> str:
    try:
        return format_rational(parse_rational(value))
    except InvalidRational as e:
        raise ValueError(e.detail)


RationalStr = Annotated[str, BeforeValidator(_reject_floats), AfterValidator(_canonical)]


class MatrixSchema(BaseModel):
    rows: int = Field(..., ge=1)
    cols: int = Field(..., ge=1)
    entries: List[List[RationalStr]]

    @model_validator(mode='after')
    def check_shape(self) -> 'MatrixSchema':
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def from_matrix(cls, M: Matrix) -> "MatrixSchema":
        return cls(
            rows=M.rows,
            cols=M.cols,
            entries=[[str(v) for v in row] for row in M.entries()],
        )

    def to_matrix(self) -> Matrix:
        return Matrix.from_rows(self.entries)


class SubspaceSchema(BaseModel):
    """Canonical basis as an n x k matrix; k = 0 for the zero subspace."""
    rows: int = Field(..., ge=1)
    cols: int = Field(..., ge=0)
    entries: List[List[RationalStr]]

    @model_validator(mode='after')
    def check_shape(self) -> 'SubspaceSchema':
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} basis matrix")
        return self

    @classmethod
    def from_subspace(cls, S: Optional[Subspace]) -> Optional["SubspaceSchema"]:
        if S is None:
            return None
        n = S.ambient_dim
        return cls(
            rows=n,
            cols=S.dim,
            entries=[[str(v[i]) for v in S.vectors] for i in range(n)],
        )

    def to_subspace(self) -> Subspace:
        vectors = [tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)]
        return Subspace.span(vectors, self.rows)


class PolynomialSchema(BaseModel):
    coeffs: List[RationalStr] = Field(default_factory=list)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "PolynomialSchema":
        return cls(coeffs=[str(c) for c in p.coefficients])

    def to_polynomial(self) -> Polynomial:
        return Polynomial(tuple(self.coeffs))
