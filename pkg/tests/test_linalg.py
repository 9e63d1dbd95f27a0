# ============================================================================
# Exact Linear Algebra Tests
# ============================================================================
import pickle
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies

from app.core.exceptions import DimensionMismatch, SingularMatrix
from app.services.linalg import (
    Matrix,
    Subspace,
    column_space,
    generated_algebra_dim,
    image,
    invariant_subspace_witness,
    kernel_basis,
    mat_add,
    mat_mul,
    mat_poly_eval,
    mat_scale,
    maps_into,
    rational_eigenvalues,
    subspace_intersect,
    subspace_sum,
)
from app.services.scalars import Polynomial
from tests.conftest import random_matrix

D1_A = [[F(1, 2), 0], [1, 2]]
D1_A_STAR = [[2, 1], [0, F(1, 2)]]


class TestMatrix:
    """Tests for dense exact matrices"""

    def test_from_rows_rejects_ragged(self):
        """Test ragged or empty input is rejected"""
        with pytest.raises(DimensionMismatch):
            Matrix.from_rows([[1, 2], [3]])
        with pytest.raises(DimensionMismatch):
            Matrix.from_rows([])

    def test_product_shape_mismatch(self):
        """Test incompatible products raise"""
        with pytest.raises(DimensionMismatch):
            Matrix.identity(2) @ Matrix.identity(3)

    def test_trace_and_rank(self):
        """Test trace(I₃) = 3 and rank(0) = 0"""
        assert Matrix.identity(3).trace() == 3
        assert Matrix.zeros(2, 2).rank() == 0

    def test_chi_trace(self):
        """Test the χ₁ trace of the d=1 fixture"""
        M = Matrix.from_rows([[0, 0], [1, F(3, 2)]]) @ Matrix.from_rows([[1, F(2, 3)], [0, 0]])
        assert M.trace() == F(2, 3)

    def test_inverse(self):
        """Test exact inverse and singular detection"""
        M = Matrix.from_rows([[1, 1], [0, 1]])
        assert M @ M.inverse() == Matrix.identity(2)
        with pytest.raises(SingularMatrix):
            Matrix.from_rows([[1, 2], [2, 4]]).inverse()

    def test_kernel_basis(self):
        """Test kernel vectors are annihilated"""
        M = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
        kernel = M.kernel_basis()
        assert len(kernel) == 2
        for v in kernel:
            assert M.apply(v) == (0, 0)
        assert Matrix.identity(2).kernel_basis() == []

    def test_equality_and_hash(self):
        """Test value semantics"""
        a = Matrix.from_rows([["1/2", 0], [0, 1]])
        b = Matrix.diagonal([F(1, 2), 1])
        assert a == b
        assert hash(a) == hash(b)

    def test_pickle(self):
        """Test matrices survive pickling for process pools"""
        M = Matrix.from_rows(D1_A)
        assert pickle.loads(pickle.dumps(M)) == M

    def test_function_api(self):
        """Test the function forms against the d=1 pair"""
        A, A_star = Matrix.from_rows(D1_A), Matrix.from_rows(D1_A_STAR)
        assert mat_mul(A, A_star) == Matrix.from_rows([[1, F(1, 2)], [2, 2]])
        assert mat_add(A, A_star) == Matrix.from_rows([[F(5, 2), 1], [1, F(5, 2)]])
        assert mat_scale(A, 2) == Matrix.from_rows([[1, 0], [2, 4]])
        assert mat_scale(A, 0) == Matrix.zeros(2, 2)

    def test_kernel_basis_function(self):
        """Test kernel_basis of a rank-one matrix"""
        M = Matrix.from_rows([[1, 2], [2, 4]])
        kernel = kernel_basis(M)
        assert len(kernel) == 1
        assert M.apply(kernel[0]) == (0, 0)
        assert kernel_basis(Matrix.from_rows(D1_A)) == []

    def test_charpoly_eigenvalues(self):
        """Test rational eigenvalues of the d=1 fixture"""
        assert rational_eigenvalues(Matrix.from_rows(D1_A)) == [F(1, 2), F(2)]


class TestMatPolyEval:
    """Tests for polynomial evaluation at a matrix"""

    def test_identity_polynomial(self):
        """Test p = x gives A"""
        A = Matrix.from_rows(D1_A)
        assert mat_poly_eval(Polynomial.x(), A) == A

    def test_constant_polynomial(self):
        """Test p = 1 gives I"""
        A = Matrix.from_rows(D1_A)
        assert mat_poly_eval(Polynomial.constant(1), A) == Matrix.identity(2)

    def test_shift(self):
        """Test p = x − 1/2"""
        A = Matrix.from_rows(D1_A)
        assert mat_poly_eval(Polynomial.linear_factor(F(1, 2)), A) == Matrix.from_rows([[0, 0], [1, F(3, 2)]])

    def test_non_square(self):
        """Test non-square input is rejected"""
        with pytest.raises(DimensionMismatch):
            mat_poly_eval(Polynomial.x(), Matrix.zeros(2, 3))

    def test_ring_homomorphism(self, rng):
        """Test (p·r)(A) = p(A)·r(A)"""
        for _ in range(5):
            A = random_matrix(rng, 3)
            p = Polynomial(tuple(F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)))
            r = Polynomial(tuple(F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)))
            assert mat_poly_eval(p * r, A) == mat_poly_eval(p, A) @ mat_poly_eval(r, A)


class TestSubspace:
    """Tests for the canonical subspace calculus"""

    e1 = Subspace.span([(1, 0)], 2)
    e2 = Subspace.span([(0, 1)], 2)

    def test_canonical_form(self):
        """Test different spanning sets give equal values"""
        a = Subspace.span([(1, 2, 3), (0, 1, 1)], 3)
        b = Subspace.span([(1, 3, 4), (2, 5, 7), (0, 2, 2)], 3)
        assert a == b
        assert a.dim == 2

    def test_zero_subspace(self):
        """Test the zero subspace is a value"""
        zero = Subspace.zero(2)
        assert zero.dim == 0
        assert Subspace.span([(0, 0)], 2) == zero
        assert zero.basis_matrix() is None

    def test_intersection(self):
        """Test idempotence, full space and transversal lines"""
        full = Subspace.full(2)
        assert subspace_intersect(self.e1, self.e1) == self.e1
        assert subspace_intersect(self.e1, full) == self.e1
        assert subspace_intersect(self.e1, self.e2) == Subspace.zero(2)

    def test_sum(self):
        """Test sums with zero, transversal lines and itself"""
        assert subspace_sum(self.e1, Subspace.zero(2)) == self.e1
        assert subspace_sum(self.e1, self.e2) == Subspace.full(2)
        assert subspace_sum(self.e1, self.e1) == self.e1

    def test_ambient_mismatch(self):
        """Test subspaces of different spaces cannot be combined"""
        with pytest.raises(DimensionMismatch):
            subspace_sum(self.e1, Subspace.full(3))

    def test_maps_into(self):
        """Test invariance checks"""
        assert maps_into(Matrix.identity(2), self.e1, self.e1)
        assert maps_into(Matrix.zeros(2, 2), self.e1, Subspace.zero(2))
        shifted = Matrix.from_rows([[0, 0], [1, F(3, 2)]])
        assert maps_into(shifted, self.e1, self.e2)
        assert not maps_into(shifted, self.e2, self.e1)

    def test_column_space_and_image(self):
        """Test EV as the column space of E"""
        E0 = Matrix.from_rows([[1, 0], [F(-2, 3), 0]])
        assert column_space(E0) == Subspace.span([(3, -2)], 2)
        assert image(E0, Subspace.full(2)) == column_space(E0)

    def test_contains(self):
        """Test membership"""
        line = Subspace.span([(3, -2)], 2)
        assert line.contains((F(-3, 2), 1))
        assert not line.contains((1, 1))
        assert line.is_subspace_of(Subspace.full(2))

    @given(
        strategies.lists(
            strategies.lists(strategies.integers(-3, 3), min_size=4, max_size=4), max_size=4
        ),
        strategies.lists(
            strategies.lists(strategies.integers(-3, 3), min_size=4, max_size=4), max_size=4
        ),
    )
    def test_dimension_formula(self, s, t):
        """Test dim S + dim T = dim(S + T) + dim(S ∩ T)"""
        S, T = Subspace.span(s, 4), Subspace.span(t, 4)
        assert S.dim + T.dim == subspace_sum(S, T).dim + subspace_intersect(S, T).dim
        meet = subspace_intersect(S, T)
        assert meet.is_subspace_of(S) and meet.is_subspace_of(T)


class TestGeneratedAlgebra:
    """Tests for the generated-algebra dimension and the witness search"""

    def test_identity_only(self):
        """Test the algebra of I is the scalars"""
        assert generated_algebra_dim([Matrix.identity(3)]) == 1

    def test_diagonal(self):
        """Test span{I, D} is closed"""
        assert generated_algebra_dim([Matrix.diagonal([1, 2])]) == 2

    def test_fixture_pair_is_full(self):
        """Test the d=1 pair generates all 2x2 matrices"""
        A, A_star = Matrix.from_rows(D1_A), Matrix.from_rows(D1_A_STAR)
        assert generated_algebra_dim([A, A_star]) == 4
        assert invariant_subspace_witness(A, A_star) is None

    def test_shape_mismatch(self):
        """Test generators of different sizes are rejected"""
        with pytest.raises(DimensionMismatch):
            generated_algebra_dim([Matrix.identity(2), Matrix.identity(3)])

    def test_witness_identity_pair(self):
        """Test everything is invariant under (I, I)"""
        W = invariant_subspace_witness(Matrix.identity(2), Matrix.identity(2))
        assert W is not None and W.dim == 1

    def test_witness_at_bad_t(self):
        """Test the witness of the d=1 pair perturbed at t = 9/4"""
        A = Matrix.from_rows(D1_A)
        B_star = Matrix.from_rows([[2, F(9, 4)], [0, F(1, 2)]])
        W = invariant_subspace_witness(A, B_star)
        assert W == Subspace.span([(3, -2)], 2)
        assert generated_algebra_dim([A, B_star]) < 4

    def test_witness_consistency(self, rng):
        """Test witnesses on 50 random 2×2 and 3×3 pairs against the algebra dimension"""
        for k in range(50):
            n = 2 + k % 2
            A = random_matrix(rng, n, bound=2)
            B = random_matrix(rng, n, bound=1)
            triangular = k % 3 == 0
            if triangular:
                # both upper triangular, so span{e₁} is invariant
                A = Matrix.from_rows([[A[i, j] if j >= i else 0 for j in range(n)] for i in range(n)])
                B = Matrix.from_rows([[B[i, j] if j >= i else 0 for j in range(n)] for i in range(n)])
            W = invariant_subspace_witness(A, B)
            full = generated_algebra_dim([A, B]) == n * n
            if W is not None:
                assert 0 < W.dim < n
                assert maps_into(A, W, W) and maps_into(B, W, W)
                assert not full
            if full:
                assert W is None
            if triangular:
                assert not full
