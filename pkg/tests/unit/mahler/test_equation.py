"""
Tests for Mahler Equation Derivation and the Monic Form
"""

import pytest

from src.arith import LaurentUniPoly, PrimeField, UniPoly, upoly_gcd, upoly_series_inv
from src.cli.parser import parse_poly
from src.errors import InvalidInput, MahlerDerivationError
from src.mahler import (
    MahlerEquation,
    algeq_to_mahler,
    compute_rhs,
    frobenius_remainders,
    mahler_residual_ok,
    matrix_rank,
    monicize,
    negative_part_and_h0,
)
from src.oracle import expand_newton


def _poly(p, coeffs):
    return UniPoly(PrimeField(p), tuple(coeffs))


@pytest.fixture
def toy_equation(toy_e):
    return algeq_to_mahler(toy_e)


class TestAlgeqToMahler:
    """Tests for algeq_to_mahler."""

    def test_toy_equation(self, toy_equation):
        """Test K = 2 with c_0 = x^4(1 - x^2 - x^4), c_1 = -(1 + x^4 - 2x^6), c_2 = 1."""
        assert toy_equation.order == 2
        c0, c1, c2 = toy_equation.coeffs
        assert c0 == _poly(5, [0, 0, 0, 0, 1, 0, -1, 0, -1])
        assert c1 == _poly(5, [-1, 0, 0, 0, -1, 0, 2])
        assert c2 == 1
        assert (toy_equation.v0, toy_equation.d0) == (4, 8)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_binomial_family(self, p):
        """Test E = x + (1+y)^(p-1) - 1 gives (x^(p-1) - x^p) f - (1 + x^(p-1) - x^p) f(x^p) + f(x^(p^2))."""
        E = parse_poly(f"x + (1+y)^{p - 1} - 1", p)
        equation = algeq_to_mahler(E)
        tail = [0] * (p - 1) + [1, -1]
        assert equation.order == 2
        assert equation.coeffs[0] == _poly(p, tail)
        assert equation.coeffs[1] == -(_poly(p, [1]) + _poly(p, tail))
        assert equation.coeffs[2] == 1

    def test_cubic_over_f3_degrees(self):
        """Test the cubic over F_3 has order 3 and coefficient degrees 45, 47, 50, 32."""
        E = parse_poly("x - (1+x)*y + x^2*y^2 + (1+x)*y^3", 3)
        equation = algeq_to_mahler(E)
        assert equation.order == 3
        assert equation.degrees == [45, 47, 50, 32]

    def test_residual_vanishes(self, toy_e, toy_equation):
        """Test sum_k c_k f(x^(p^k)) = 0 mod x^500 on the Newton expansion."""
        assert mahler_residual_ok(toy_equation, expand_newton(toy_e, 500))

    def test_residual_on_random_instances(self, make_random_instance):
        """Test the residual on random equations over F_2 and F_3."""
        for seed, p in [(1, 2), (2, 3), (3, 2), (4, 3)]:
            E = make_random_instance(p=p, d=2, h=2, seed=seed)
            equation = algeq_to_mahler(E)
            assert equation.order <= 2
            assert mahler_residual_ok(equation, expand_newton(E, 200))

    def test_minimal_order(self):
        """Test that R_0..R_(K-1) are independent over F_p(x)."""
        E = parse_poly("x - (1+x)*y + x^2*y^2 + (1+x)*y^3", 3)
        equation = algeq_to_mahler(E)
        remainders = frobenius_remainders(E, equation.order)
        assert matrix_rank([r.coeffs for r in remainders]) == equation.order
        with_next = frobenius_remainders(E, equation.order + 1)
        assert matrix_rank([r.coeffs for r in with_next]) == equation.order

    def test_primitive_and_monic(self, make_random_instance):
        """Test that the coefficient tuple has trivial content and monic c_K."""
        E = make_random_instance(p=3, d=3, h=1, seed=5)
        equation = algeq_to_mahler(E)
        assert equation.coeffs[-1].leading == 1
        content = UniPoly.zero(E.field)
        for c in equation.coeffs:
            content = upoly_gcd(content, c)
        assert content == 1

    def test_linear_equation_rejected(self, gf5):
        """Test that deg_y E = 1 is refused."""
        with pytest.raises(InvalidInput):
            algeq_to_mahler(parse_poly("y - x", 5))

    def test_invalid_origin_rejected(self):
        """Test that E(0,0) != 0 is refused."""
        with pytest.raises(InvalidInput):
            algeq_to_mahler(parse_poly("1 + y - y^2", 5))


    def test_repeated_factor(self):
        """Test that a squared factor of E does not force c_0 = 0."""
        # (y - x)(1 + y)^2 over F_5 has the root f = x
        E = parse_poly("(y - x)*(1 + y)^2", 5)
        equation = algeq_to_mahler(E)
        assert equation.order == 2
        assert not equation.coeffs[0].is_zero
        assert mahler_residual_ok(equation, expand_newton(E, 200))

    @pytest.mark.parametrize("text, p", [("y + y^3", 2), ("y + 2*y^2 + y^3", 3), ("y + y^2", 3)])
    def test_x_free_equation(self, text, p):
        """Test that an equation without x, whose root is zero, gets an order-one relation."""
        equation = algeq_to_mahler(parse_poly(text, p))
        assert equation.order == 1
        assert equation.coeffs[0] == _poly(p, [-1])
        assert equation.coeffs[1] == _poly(p, [1])

class TestMahlerEquation:
    """Tests for the MahlerEquation model."""

    def test_zero_trailing_coefficient(self, gf5):
        """Test that c_0 = 0 is refused."""
        with pytest.raises(MahlerDerivationError):
            MahlerEquation(gf5, (UniPoly.zero(gf5), UniPoly.one(gf5)))

    def test_order_at_least_one(self, gf5):
        """Test that a single coefficient is not an equation."""
        with pytest.raises(InvalidInput):
            MahlerEquation(gf5, (UniPoly.one(gf5),))

    def test_to_dict(self, toy_equation):
        """Test the serialized form."""
        data = toy_equation.to_dict()
        assert data["p"] == 5
        assert data["order"] == 2
        assert data["degrees"] == [8, 6, 0]
        assert data["coefficients"][2] == "1"

    def test_monic_state_size_bounds_actual(self, toy_e, toy_equation):
        """Test that the degree-only estimate bounds the built state size."""
        from src.mahler import MahlerPipeline

        pipeline = MahlerPipeline(toy_e, toy_equation)
        assert pipeline.representation_size <= toy_equation.monic_state_size


class TestMonicize:
    """Tests for monicize."""

    def test_toy_coefficients(self, toy_equation):
        """Test a_1 = x^12 (1+x^4-2x^6)(1-x^2-x^4)^3 and a_2 = -x^92 (1-x^2-x^4)^23."""
        a1, a2 = monicize(toy_equation)
        u = _poly(5, [1, 0, -1, 0, -1])
        assert a1 == _poly(5, [1, 0, 0, 0, 1, 0, -2]) * (u ** 3) * _poly(5, [0] * 12 + [1])
        assert a2 == -((u ** 23) * _poly(5, [0] * 92 + [1]))

    def test_order_one_with_unit_c0(self, gf5):
        """Test that K = 1 and c_0 = 1 give a_1 = -c_1."""
        c1 = UniPoly(gf5, (2, 3))
        equation = MahlerEquation(gf5, (UniPoly.one(gf5), c1))
        assert monicize(equation) == [-c1]

    def test_cubic_over_f3_heights(self):
        """Test monic coefficient degrees 92, 365, 1157 for the cubic over F_3."""
        E = parse_poly("x - (1+x)*y + x^2*y^2 + (1+x)*y^3", 3)
        a = monicize(algeq_to_mahler(E))
        assert [int(c.degree) for c in a] == [92, 365, 1157]


class TestNegativePart:
    """Tests for negative_part_and_h0 and compute_rhs."""

    def test_toy_negative_part(self, toy_e, toy_equation):
        """Test g_- = -2x^-1 - x^-3 and h_0 = 0."""
        g_minus, h0 = negative_part_and_h0(toy_e, toy_equation)
        assert g_minus == LaurentUniPoly.from_terms(toy_e.field, {-1: -2, -3: -1})
        assert h0 == 0

    def test_h0_matches_series_division(self, toy_e, toy_equation):
        """Test h_0 = [x^4] f (1 - x^2 - x^4)^(-1) mod x^6."""
        f = expand_newton(toy_e, 6).prefix
        unit = toy_equation.coeffs[0].shift(-4)
        quotient = f.mul_trunc(upoly_series_inv(unit, 6), 6)
        _, h0 = negative_part_and_h0(toy_e, toy_equation)
        assert h0 == quotient[4]

    def test_toy_rhs(self, toy_e, toy_equation):
        """Test spot coefficients of b = -x - x^5 + x^7 + 2x^9 + ... - x^157 - 2x^159."""
        g_minus, _ = negative_part_and_h0(toy_e, toy_equation)
        b = compute_rhs(monicize(toy_equation), g_minus)
        assert b.degree == 159
        assert b.valuation == 1
        assert [b[k] for k in (1, 5, 7, 9, 157, 159)] == [4, 4, 1, 2, 4, 3]

    def test_rhs_of_zero_negative_part(self, toy_equation, gf5):
        """Test that g_- = 0 gives b = 0."""
        assert compute_rhs(monicize(toy_equation), LaurentUniPoly.zero(gf5)).is_zero

    def test_unit_c0_has_no_negative_part(self, catalan_e, gf7):
        """Test v_0 = 0 gives g_- = 0 and h_0 = f(0)/c_0(0) = 0."""
        equation = MahlerEquation(gf7, (UniPoly.constant(gf7, 3), UniPoly.monomial(gf7, 1)))
        g_minus, h0 = negative_part_and_h0(catalan_e, equation)
        assert g_minus.is_zero
        assert h0 == 0
