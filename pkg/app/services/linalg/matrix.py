# ============================================================================
# Dense Exact Matrices
# ============================================================================
"""
Immutable dense matrices over Q.

`Matrix` wraps a sympy `DomainMatrix` over QQ; all heavy lifting (products,
row reduction, null spaces, determinants, inverses, characteristic
polynomials) is delegated to it. Entries cross the API boundary as
`fractions.Fraction`.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from app.core.exceptions import DimensionMismatch, SingularMatrix
from app.services.scalars import Polynomial, RationalLike, parse_rational

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def to_domain(value: RationalLike):
    value = parse_rational(value)
    return QQ(value.numerator, value.denominator)


def from_domain(value) -> Fraction:
    value = QQ.to_sympy(value)
    return Fraction(int(value.p), int(value.q))


class Matrix:
    """Dense rational matrix with at least one row and one column."""

    __slots__ = ("_dm", "_entries")

    def __init__(self, dm: DomainMatrix):
        rows, cols = dm.shape
        if rows < 1 or cols < 1:
            raise DimensionMismatch(f"matrix must have positive shape, got {rows}x{cols}")
        if dm.domain != QQ:
            dm = dm.convert_to(QQ)
        self._dm = dm.to_dense()
        self._entries = None

    # ==================== Constructors ====================
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "Matrix":
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("ragged rows: every row must have the same length")
        data = [[to_domain(v) for v in row] for row in rows]
        return cls(DomainMatrix(data, (len(rows), width), QQ))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]]) -> "Matrix":
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(DomainMatrix.eye(n, QQ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(DomainMatrix.zeros((rows, cols), QQ))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "Matrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, values: Sequence[RationalLike], n: int) -> "Matrix":
        """Square n x n matrix from a row-major vector of length n^2."""
        if len(values) != n * n:
            raise DimensionMismatch(f"expected {n * n} entries, got {len(values)}")
        return cls.from_rows([values[i * n:(i + 1) * n] for i in range(n)])

    # ==================== Shape & entries ====================
    @property
    def shape(self) -> Tuple[int, int]:
        return self._dm.shape

    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def domain_matrix(self) -> DomainMatrix:
        return self._dm

    def entries(self) -> Tuple[Vector, ...]:
        if self._entries is None:
            self._entries = tuple(
                tuple(from_domain(v) for v in row) for row in self._dm.to_list()
            )
        return self._entries

    def flat(self) -> Vector:
        return tuple(v for row in self.entries() for v in row)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries()[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries())

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries() for v in row)

    # ==================== Arithmetic ====================
    def _check_same_shape(self, other: "Matrix", op: str):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot {op} {self.shape} and {other.shape} matrices")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "add")
        return Matrix(self._dm + other._dm)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "subtract")
        return Matrix(self._dm - other._dm)

    def __neg__(self) -> "Matrix":
        return Matrix(-self._dm)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self._dm.matmul(other._dm))

    def __mul__(self, scalar: RationalLike) -> "Matrix":
        if isinstance(scalar, Matrix):
            return self @ scalar
        return Matrix(self._dm * to_domain(scalar))

    __rmul__ = __mul__

    def scale(self, scalar: RationalLike) -> "Matrix":
        return self * scalar

    def shift(self, scalar: RationalLike) -> "Matrix":
        """self - scalar * I"""
        if not self.is_square:
            raise DimensionMismatch(f"shift needs a square matrix, got {self.shape}")
        return self - Matrix.identity(self.rows) * scalar

    def apply(self, vector: Sequence[RationalLike]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} does not fit {self.shape}")
        column = Matrix.from_columns([vector])
        return (self @ column).column(0)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("power needs a square matrix")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    # ==================== Invariants ====================
    def transpose(self) -> "Matrix":
        return Matrix(self._dm.transpose())

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch(f"trace needs a square matrix, got {self.shape}")
        entries = self.entries()
        return sum((entries[i][i] for i in range(self.rows)), Fraction(0))

    def rank(self) -> int:
        return self._dm.rank()

    def determinant(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch(f"determinant needs a square matrix, got {self.shape}")
        return from_domain(self._dm.det())

    def inverse(self) -> "Matrix":
        if self.determinant() == 0:
            raise SingularMatrix()
        return Matrix(self._dm.inv())

    def kernel_basis(self) -> List[Vector]:
        """A basis of {v : Mv = 0} as column vectors (empty when M is injective)."""
        null = self._dm.nullspace()
        return [tuple(from_domain(v) for v in row) for row in null.to_list()]

    def charpoly(self) -> Polynomial:
        if not self.is_square:
            raise DimensionMismatch("characteristic polynomial needs a square matrix")
        coeffs = [from_domain(c) for c in self._dm.charpoly()]
        return Polynomial(tuple(reversed(coeffs)))

    # ==================== Value semantics ====================
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __reduce__(self):
        return (Matrix.from_rows, ([list(row) for row in self.entries()],))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(v) for v in row) for row in self.entries())
        return f"Matrix([{body}])"


# ============================================================================
# Functional surface
# ============================================================================
def mat_mul(left: Matrix, right: Matrix) -> Matrix:
    return left @ right


def mat_add(left: Matrix, right: Matrix) -> Matrix:
    return left + right


def mat_scale(matrix: Matrix, scalar: RationalLike) -> Matrix:
    return matrix * scalar


def trace(matrix: Matrix) -> Fraction:
    return matrix.trace()


def rank(matrix: Matrix) -> int:
    return matrix.rank()


def inverse(matrix: Matrix) -> Matrix:
    return matrix.inverse()


def kernel_basis(matrix: Matrix) -> List[Vector]:
    return matrix.kernel_basis()


def mat_poly_eval(p: Polynomial, A: Matrix) -> Matrix:
    """Horner evaluation of p at the square matrix A."""
    if not A.is_square:
        raise DimensionMismatch(f"polynomial evaluation needs a square matrix, got {A.shape}")
    identity = Matrix.identity(A.rows)
    result = Matrix.zeros(A.rows, A.cols)
    for c in reversed(p.coefficients):
        result = result @ A + identity * c
    return result
