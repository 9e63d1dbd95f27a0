# ============================================================================
# Drinfel'd Polynomial Tests
# ============================================================================
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies

from app.core.exceptions import InvalidParameterArray, NonGeometricSpectrum
from app.services.drinfeld import (
    ccond_sides,
    check_ccond_identity,
    drinfeld_poly,
    predict_td,
    rational_bad_t,
)
from app.services.scalars import QContext
from app.services.tridiagonal import ParameterArray, geometric_eigenvalues, parameter_array

Q2 = QContext(q=F(2))
small_fractions = strategies.fractions(min_value=-30, max_value=30, max_denominator=9)


class TestDrinfeldPoly:
    """Tests for the polynomial built from ζ"""

    def test_degree_zero(self):
        """Test ζ = (1) gives P = 1"""
        P = drinfeld_poly([1], Q2)
        assert P.coefficients == (F(1),)
        assert rational_bad_t(P) == []

    def test_d1(self):
        """Test ζ = (1, 1) gives 1 − x"""
        P = drinfeld_poly([1, 1], Q2)
        assert P.coefficients == (F(1), F(-1))
        assert P.to_dict() == {"coeffs": ["1", "-1"]}

    def test_quadratic(self):
        """Test the 1/([2]!)² weight at q = 2"""
        P = drinfeld_poly([1, 2, 3], Q2)
        assert P.coefficients == (F(1), F(-2), F(12, 25))
        assert rational_bad_t(P) == []

    def test_zeta_zero(self):
        """Test ζ₀ ≠ 1 is rejected"""
        with pytest.raises(InvalidParameterArray):
            drinfeld_poly([2, 1], Q2)

    def test_fixture_invariants(self, d1, d1_phi5, d2):
        """Test deg P = d, P(0) = 1 and t = 1 is always good"""
        for ps in (d1, d1_phi5, d2):
            P = drinfeld_poly(parameter_array(ps).zeta, ps.q_ctx)
            assert P.degree == ps.d
            assert P(0) == 1
            assert predict_td(P, 1)

    @given(
        strategies.lists(small_fractions, min_size=0, max_size=4),
        small_fractions,
        small_fractions,
    )
    def test_scaling_law(self, tail, t, x):
        """Test the polynomial of tⁱζᵢ at x equals P(tx)"""
        P = drinfeld_poly([1] + tail, Q2)
        assert P.rescaled(t)(x) == P(t * x)


class TestPredictTD:
    """Tests for the theorem predicate"""

    def test_zero(self):
        assert not predict_td(drinfeld_poly([1, 1], Q2), 0)

    def test_bad_t(self):
        """Test t = 9/4 lands on the root of 1 − x"""
        assert not predict_td(drinfeld_poly([1, 1], Q2), "9/4")

    def test_good_t(self):
        """Test t = 1 evaluates P(4/9) = 5/9"""
        P = drinfeld_poly([1, 1], Q2)
        assert P(F(4, 9)) == F(5, 9)
        assert predict_td(P, 1)


class TestRationalBadT:
    """Tests for rational bad-t enumeration"""

    def test_d1(self):
        assert rational_bad_t(drinfeld_poly([1, 1], Q2)) == [F(9, 4)]

    def test_d2(self, d2):
        """Test P = 1 − x + 4x²/25 has roots 5/4 and 5"""
        P = drinfeld_poly(parameter_array(d2).zeta, d2.q_ctx)
        assert P.coefficients == (F(1), F(-1), F(4, 25))
        assert rational_bad_t(P) == [F(45, 16), F(45, 4)]

    def test_excludes_zero(self):
        """Test a zero root never becomes a bad t"""
        assert F(0) not in rational_bad_t(drinfeld_poly([1, 0, 0], Q2))


class TestCcondIdentity:
    """Tests for the nonvanishing sum against P(1/(q − q⁻¹)²)"""

    def test_degenerate(self):
        """Test d = 0 reduces to 1 = 1"""
        pa = ParameterArray(0, ("1",), ("1",), ("1",))
        assert ccond_sides(pa, Q2) == (1, 1)

    def test_d1(self, d1):
        """Test both sides are −5/4"""
        assert ccond_sides(parameter_array(d1), Q2) == (F(-5, 4), F(-5, 4))

    @pytest.mark.parametrize("q", [F(2), F(3), F(-2), F(1, 3)])
    @given(strategies.lists(small_fractions, min_size=2, max_size=2))
    def test_any_zeta(self, q, tail):
        """Test the identity holds for arbitrary ζ with ζ₀ = 1"""
        ctx = QContext(q=q, d=2)
        theta, theta_star = geometric_eigenvalues(ctx)
        pa = ParameterArray(2, theta, theta_star, (F(1), *tail))
        assert check_ccond_identity(pa, ctx)

    def test_non_geometric(self):
        """Test arithmetic spectra are rejected"""
        pa = ParameterArray(1, ("1", "3"), ("3", "1"), ("1", "1"))
        with pytest.raises(NonGeometricSpectrum):
            ccond_sides(pa, Q2)
