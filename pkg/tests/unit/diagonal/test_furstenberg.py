"""
Tests for the Furstenberg Representation and Pseudo-Sections
"""

import pytest

from src.arith import BiPoly, UniPoly, section_bi
from src.cli.parser import parse_poly
from src.diagonal import DiagonalRep, furstenberg, full_power, pseudo_section
from src.errors import InvalidInput
from src.oracle import expand_newton


def _series_box(a: BiPoly, b: BiPoly, T: int):
    """Coefficients of a/b in the T x T box by bivariate series division."""
    fld = b.field
    inv_b00 = fld.inv(b[0, 0])
    q = [[0] * T for _ in range(T)]
    for i in range(T):
        for j in range(T):
            acc = a[i, j]
            for k, l, c in b.terms():
                if (k, l) != (0, 0) and k <= i and l <= j:
                    acc -= c * q[i - k][j - l]
            q[i][j] = acc * inv_b00 % fld.p
    return q


def _series_diagonal(a: BiPoly, b: BiPoly, T: int) -> UniPoly:
    q = _series_box(a, b, T)
    return UniPoly(b.field, tuple(q[i][i] for i in range(T)))


class TestFurstenberg:
    """Tests for furstenberg."""

    def test_catalan_pair(self, catalan_e, make_bipoly):
        """Test a = y(1 - 2y) and b = 1 - x - y."""
        rep = furstenberg(catalan_e)
        assert rep.a == make_bipoly({(0, 1): 1, (0, 2): -2}, p=7)
        assert rep.b == make_bipoly({(0, 0): 1, (1, 0): -1, (0, 1): -1}, p=7)
        assert rep.b00 == 1

    def test_quartic_pair(self, quartic_e, make_bipoly):
        """Test the pair for the quartic over F_11."""
        rep = furstenberg(quartic_e)
        assert rep.a == make_bipoly(
            {(0, 1): 1, (0, 2): -2, (1, 2): 1, (0, 3): -3, (0, 4): 4, (2, 4): -2, (1, 5): 4},
            p=11,
        )
        assert rep.b == make_bipoly(
            {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1, (0, 2): -1, (0, 3): 1, (2, 3): -1, (1, 4): 1},
            p=11,
        )

    def test_cubic_pair_and_bounds(self, cubic_e, make_bipoly):
        """Test the pair for the cubic over F_7 and d_x = 2, d_y = 4."""
        rep = furstenberg(cubic_e)
        assert rep.a == make_bipoly({(0, 1): -1, (1, 2): -1, (0, 3): 3, (1, 4): 3, (2, 4): 2}, p=7)
        assert rep.b == make_bipoly(
            {(0, 0): -1, (1, 0): 1, (1, 1): -1, (0, 2): 1, (1, 3): 1, (2, 3): 1}, p=7
        )
        assert (rep.d_x, rep.d_y) == (2, 4)
        assert rep.dimension == 15

    def test_degree_bounds(self, make_random_instance):
        """Test d_x <= h and d_y <= d + h."""
        for seed in range(5):
            E = make_random_instance(p=5, d=3, h=2, seed=seed)
            rep = furstenberg(E)
            assert rep.d_x <= E.deg_x
            assert rep.d_y <= E.deg_y + E.deg_x

    @pytest.mark.parametrize("fixture", ["toy_e", "catalan_e", "cubic_e", "quartic_e"])
    def test_diagonal_identity(self, fixture, request):
        """Test Diag(a/b) = f mod x^40."""
        E = request.getfixturevalue(fixture)
        rep = furstenberg(E)
        assert _series_diagonal(rep.a, rep.b, 40) == expand_newton(E, 40).prefix

    def test_invalid_equation(self, make_bipoly):
        """Test that E_y(0,0) = 0 is refused."""
        with pytest.raises(InvalidInput):
            furstenberg(make_bipoly({(1, 0): 1, (0, 2): 1}, p=5))

    def test_linear_equation_accepted(self, make_bipoly):
        """Test that d = 1 still gives a valid pair."""
        rep = furstenberg(make_bipoly({(0, 1): 1, (1, 0): -1}, p=5))
        assert rep.b00 != 0

    def test_zero_b00_rejected(self, gf5):
        """Test that DiagonalRep refuses b(0,0) = 0."""
        one = BiPoly.constant(gf5, 1)
        with pytest.raises(InvalidInput):
            DiagonalRep(one, BiPoly.from_terms(gf5, {(1, 0): 1}), 1, 1, 0)

    def test_to_dict(self, catalan_e):
        """Test the serialized pair."""
        data = furstenberg(catalan_e).to_dict()
        assert data == {"p": 7, "a": "y - 2*y^2", "b": "1 - x - y", "dx": 1, "dy": 2}


class TestFullPower:
    """Tests for full_power and pseudo_section."""

    def test_unit(self, gf7):
        """Test that b = 1 gives B = 1."""
        one = BiPoly.constant(gf7, 1)
        assert full_power(one) == one

    def test_characteristic_two(self, make_bipoly):
        """Test that p = 2 gives B = b."""
        b = make_bipoly({(0, 0): 1, (1, 0): 1, (0, 1): 1}, p=2)
        assert full_power(b) == b

    def test_catalan_multinomial(self, make_bipoly):
        """Test [x^2 y^2] (1 - x - y)^4 = 4! / (0! 2! 2!) = 6 over F_5."""
        b = make_bipoly({(0, 0): 1, (1, 0): -1, (0, 1): -1}, p=5)
        assert full_power(b)[2, 2] == 1

    def test_unit_pseudo_section(self, make_bipoly):
        """Test that B = 1 makes T_r the plain section."""
        v = make_bipoly({(3, 3): 2, (1, 3): 1, (0, 0): 4}, p=3)
        one = BiPoly.constant(v.field, 1)
        assert pseudo_section(v, one, 0) == section_bi(v, 0)

    def test_cubic_t1(self, cubic_e, make_bipoly):
        """Test T_1(x y^2) = y + x y + 6 x y^2 over F_7."""
        rep = furstenberg(cubic_e)
        B = full_power(rep.b)
        result = pseudo_section(make_bipoly({(1, 2): 1}, p=7), B, 1)
        assert result == make_bipoly({(0, 1): 1, (1, 1): 1, (1, 2): 6}, p=7)

    def test_rectangle_is_stable(self, cubic_e, make_bipoly):
        """Test that T_r never leaves the (d_x, d_y) rectangle."""
        rep = furstenberg(cubic_e)
        B = full_power(rep.b)
        for n in range(rep.d_x + 1):
            for m in range(rep.d_y + 1):
                for r in range(7):
                    image = pseudo_section(make_bipoly({(n, m): 1}, p=7), B, r)
                    assert image.is_zero or (image.deg_x <= rep.d_x and image.deg_y <= rep.d_y)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_rational_section_identity(self, p):
        """Test S_r(a/b) = S_r(a b^(p-1)) / b on truncated series."""
        rep = furstenberg(parse_poly("x - (1+x)*y + x^2*y^2 + (1+x)*y^3", p))
        T = 6
        B = full_power(rep.b)
        big = T * p + p
        lhs_full = _series_box(rep.a, rep.b, big)
        for r in range(p):
            numerator = pseudo_section(rep.a, B, r)
            rhs = _series_box(numerator, rep.b, T)
            for i in range(T):
                for j in range(T):
                    assert lhs_full[p * i + r][p * j + r] == rhs[i][j]
