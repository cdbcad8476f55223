"""
Tests for Fraction-Free Modular Powering in y
"""

import pytest
from sympy import binomial, primerange

from src.arith import (
    BiPoly,
    PrimeField,
    RationalFunction,
    UniPoly,
    bipoly_powmod_y,
    powmod_monomial,
    pseudo_reduce,
    y_gcd,
    y_power_mod,
    y_squarefree_part,
)
from src.cli.parser import parse_poly
from src.errors import DegreeTooSmall, InvalidInput


def _as_bipoly(rem) -> BiPoly:
    """sum_i r_i(x) y^i, the numerator of a remainder."""
    return BiPoly.from_y_coeffs(rem.coeffs[0].field, list(rem.coeffs))


def _power_times_lead(E: BiPoly, D: int, exponent: int) -> BiPoly:
    """lc(E)^exponent * y^D, to be compared with the numerator mod E."""
    fld = E.field
    lead = BiPoly.from_y_coeffs(fld, [E.y_coeffs()[-1]])
    return (lead ** exponent) * BiPoly.from_terms(fld, {(0, D): 1})


class TestPseudoReduce:
    """Tests for pseudo_reduce."""

    def test_step_count(self, gf7):
        """Test that a length-L input needs L - d steps."""
        modulus = [UniPoly(gf7, (c,)) for c in (1, 2, 1)]
        values = [UniPoly.one(gf7)] * 5
        reduced, steps = pseudo_reduce(values, modulus)
        assert steps == 3
        assert len(reduced) == 2

    def test_monic_modulus_is_plain_reduction(self, gf5):
        """Test y^2 mod (y^2 - y - 1) = y + 1."""
        one = UniPoly.one(gf5)
        modulus = [-one, -one, one]
        reduced, _ = pseudo_reduce([UniPoly.zero(gf5), UniPoly.zero(gf5), one], modulus)
        assert reduced == [one, one]


class TestPowmodMonomial:
    """Tests for powmod_monomial and the E-based wrappers."""

    def test_small_exponent_is_monomial(self, toy_e):
        """Test y^1 mod E = y with exponent 0."""
        rem = y_power_mod(toy_e, 1)
        assert rem.exponent == 0
        assert rem.coeffs[1] == 1 and rem.coeffs[0].is_zero

    @pytest.mark.parametrize("D", [3, 4, 7, 25, 125])
    def test_congruence(self, cubic_e, D):
        """Test that E divides lc^e y^D minus the numerator over F_p(x)."""
        rem = bipoly_powmod_y(cubic_e, D)
        assert rem.exponent == D - 3 + 1
        difference = _power_times_lead(cubic_e, D, rem.exponent) - _as_bipoly(rem)
        residue, _ = pseudo_reduce(difference.y_coeffs(), cubic_e.y_coeffs())
        assert all(r.is_zero for r in residue)

    def test_degree_bound(self, cubic_e):
        """Test deg_x r_i <= deg_x(E) (D - d + 1)."""
        D = 49
        rem = bipoly_powmod_y(cubic_e, D)
        assert rem.degree_bound <= int(cubic_e.deg_x) * (D - 3 + 1)

    def test_degree_too_small(self, cubic_e):
        """Test that D < d raises DegreeTooSmall."""
        with pytest.raises(DegreeTooSmall):
            bipoly_powmod_y(cubic_e, 2)

    def test_constant_modulus_rejected(self, gf5):
        """Test that a modulus of y-degree 0 is refused."""
        with pytest.raises(InvalidInput):
            powmod_monomial([UniPoly.one(gf5)], 4)

    @pytest.mark.parametrize("p", list(primerange(2, 101)))
    def test_catalan_identity(self, p):
        """Test [t^1](t^p mod (-x t^2 + t - 1)) = sum binom(2l, l) x^l / x^(p-1)."""
        fld = PrimeField(p)
        modulus = [UniPoly.constant(fld, -1), UniPoly.one(fld), UniPoly.monomial(fld, 1, -1)]
        rem = powmod_monomial(modulus, p)
        assert rem.exponent == p - 1
        central = UniPoly(fld, tuple(int(binomial(2 * l, l)) for l in range(p)))
        got = RationalFunction(rem.coeffs[1], rem.leading ** rem.exponent)
        assert got == RationalFunction(central, UniPoly.monomial(fld, p - 1))


# =============================================================================
# Squarefree Reduction
# =============================================================================


class TestSquarefreePart:
    """Tests for y_gcd and y_squarefree_part."""

    def test_squared_factor_dropped(self):
        """Test (y - x)(1 + y)^2 reduces to (y - x)(1 + y) up to a unit."""
        E = parse_poly("(y - x)*(1 + y)^2", 5)
        reduced = y_squarefree_part(E)
        expected = parse_poly("(y - x)*(1 + y)", 5)
        assert reduced.deg_y == 2
        # same polynomial up to a nonzero constant
        lead = reduced.y_coeffs()[-1][0]
        assert reduced == expected.scale(lead)

    def test_pth_power_factor_dropped(self):
        """Test that (1 + y)^2 over F_2 disappears entirely from y(1 + y)^2."""
        assert y_squarefree_part(parse_poly("y + y^3", 2)) == parse_poly("y", 2)

    def test_squarefree_input_unchanged(self, cubic_e, quartic_e):
        """Test that the worked equations come back as they are."""
        assert y_squarefree_part(cubic_e) is cubic_e
        assert y_squarefree_part(quartic_e) is quartic_e

    def test_gcd_with_content(self):
        """Test that x-content is ignored and the y-part of the gcd is found."""
        a = parse_poly("(1 + x)*(y - x)*(y + 1)", 7)
        b = parse_poly("(y - x)*(y + x)", 7)
        g = BiPoly.from_y_coeffs(PrimeField(7), y_gcd(a.y_coeffs(), b.y_coeffs()))
        assert g.deg_y == 1
        assert g.scale(PrimeField(7).inv(g[0, 1])) == parse_poly("y - x", 7)
