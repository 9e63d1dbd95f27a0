# ============================================================================
# Split Decomposition Tests
# ============================================================================
import pytest

from app.core.exceptions import DimensionMismatch, NotADecomposition, SplitStructureError
from app.services.linalg import Matrix, Subspace
from app.services.scalars import QContext
from app.services.split import (
    check_dimension_equalities,
    check_ladder_inclusions,
    ladder_eigenvalue,
    split_basis,
    split_decomposition,
    verify_split,
)
from app.services.tridiagonal import ParallelSystem, split_sequence


class TestSplitDecomposition:
    """Tests for Uᵢ from eigenspace sums and intersections"""

    def test_d1(self, d1_split):
        """Test the d=1 fixture splits along the standard basis"""
        assert d1_split == (Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2))

    def test_d0(self, d0):
        """Test U₀ = V when d = 0"""
        assert split_decomposition(d0) == (Subspace.full(1),)

    def test_d2_is_standard(self, d2_split):
        """Test the thin d=2 seed splits along the standard basis"""
        assert split_basis(d2_split) == Matrix.identity(3)

    def test_dimension_equalities(self, d1, d2, d1_split, d2_split):
        """Test dim EᵢV = dim E*ᵢV = dim Uᵢ"""
        assert check_dimension_equalities(d1, d1_split)
        assert check_dimension_equalities(d2, d2_split)
        assert sum(u.dim for u in d2_split) == 3

    def test_not_a_decomposition(self):
        """Test a reducible pair with shared eigenvectors is rejected"""
        A = Matrix.diagonal([1, 2])
        A_star = Matrix.diagonal([2, 1])
        ps = ParallelSystem.from_matrices(A, A_star, [1, 2], [1, 2], QContext(q=2))
        with pytest.raises(NotADecomposition):
            split_decomposition(ps)


class TestVerifySplit:
    """Tests for the defining inclusions and partial sums"""

    def test_fixtures(self, d1, d2, d1_split, d2_split, d0):
        """Test computed decompositions verify"""
        assert verify_split(d1, d1_split)
        assert verify_split(d2, d2_split)
        assert verify_split(d0, split_decomposition(d0))

    def test_swapped(self, d1, d1_split):
        """Test swapping the two lines breaks the first inclusion"""
        assert not verify_split(d1, d1_split[::-1])

    def test_wrong_length(self, d1, d1_split):
        """Test the decomposition must have d + 1 parts"""
        with pytest.raises(DimensionMismatch):
            verify_split(d1, d1_split[:1])


class TestLadder:
    """Tests for the ladder eigenvalue"""

    def test_zero_index(self, d1, d1_split):
        """Test the empty ladder acts as the identity"""
        assert ladder_eigenvalue(d1, d1_split, 0) == 1

    def test_d1(self, d1, d1_split):
        """Test ζ₁ = 1 on the d=1 fixture"""
        assert ladder_eigenvalue(d1, d1_split, 1) == 1

    def test_phi5(self, d1_phi5):
        """Test the superdiagonal 5 shows up on the ladder"""
        U = split_decomposition(d1_phi5)
        assert ladder_eigenvalue(d1_phi5, U, 1) == 5

    def test_matches_trace_formula(self, d1, d1_phi5, d2):
        """Test ladder and trace computations of ζ agree"""
        for ps in (d1, d1_phi5, d2):
            U = split_decomposition(ps)
            zeta = split_sequence(ps)
            assert tuple(ladder_eigenvalue(ps, U, i) for i in range(ps.d + 1)) == zeta

    def test_needs_line(self, d1):
        """Test dim U₀ = 1 is required"""
        U = (Subspace.full(2), Subspace.zero(2))
        with pytest.raises(SplitStructureError):
            ladder_eigenvalue(d1, U, 1)

    def test_inclusions(self, d1, d2, d1_split, d2_split):
        """Test repeated raising and lowering stay in the ladder"""
        assert check_ladder_inclusions(d1, d1_split)
        assert check_ladder_inclusions(d2, d2_split)
