"""
Tests for Bivariate Polynomials and Section Operators
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arith import BiPoly, PrimeField, UniPoly, bipoly_mul, section_bi, section_uni
from src.errors import BadDigit, InvalidInput


def _schoolbook(u: BiPoly, v: BiPoly) -> BiPoly:
    terms = {}
    for i, j, c in u.terms():
        for k, l, e in v.terms():
            terms[i + k, j + l] = terms.get((i + k, j + l), 0) + c * e
    return BiPoly.from_terms(u.field, terms)


class TestBiPoly:
    """Tests for BiPoly construction and inspection."""

    def test_from_terms_and_degrees(self, make_bipoly):
        """Test partial degrees and coefficient access."""
        E = make_bipoly({(1, 0): 1, (0, 1): 1, (0, 3): -1}, p=5)
        assert (E.deg_x, E.deg_y) == (1, 3)
        assert E[0, 3] == 4
        assert E[5, 5] == 0

    def test_zero_normalizes(self, make_bipoly):
        """Test that cancelling terms give the zero polynomial."""
        E = make_bipoly({(2, 2): 5, (0, 0): 0}, p=5)
        assert E.is_zero
        assert str(E) == "0"

    def test_str(self, toy_e):
        """Test the display order: total degree, then x before y."""
        assert str(toy_e) == "x + y - y^3"

    def test_y_coeffs_round_trip(self, cubic_e):
        """Test that y_coeffs and from_y_coeffs are inverse."""
        assert BiPoly.from_y_coeffs(cubic_e.field, cubic_e.y_coeffs()) == cubic_e

    def test_negative_exponent_rejected(self, gf5):
        """Test that from_terms refuses negative exponents."""
        with pytest.raises(InvalidInput):
            BiPoly.from_terms(gf5, {(-1, 0): 1})


class TestBiPolyOperations:
    """Tests for the substitutions and derivatives used by the pipelines."""

    def test_derivative_y(self, toy_e):
        """Test d/dy (x + y - y^3) = 1 - 3y^2."""
        assert toy_e.derivative_y() == BiPoly.from_terms(toy_e.field, {(0, 0): 1, (0, 2): -3})

    def test_shear(self, make_bipoly):
        """Test x -> xy on x^2 y + x."""
        v = make_bipoly({(2, 1): 1, (1, 0): 1}, p=7)
        assert v.shear() == make_bipoly({(2, 3): 1, (1, 1): 1}, p=7)

    def test_div_y_requires_divisibility(self, make_bipoly):
        """Test that div_y rejects a polynomial with a y^0 term."""
        with pytest.raises(InvalidInput):
            make_bipoly({(1, 0): 1}, p=7).div_y()

    def test_eval_y(self, catalan_e):
        """Test E(x, x + x^2) = -2x^3 - x^4 for the Catalan equation."""
        fld = catalan_e.field
        value = catalan_e.eval_y(UniPoly(fld, (0, 1, 1)), 5)
        assert value == UniPoly(fld, (0, 0, 0, -2, -1))

    def test_diagonal(self, make_bipoly):
        """Test extraction of sum c_ii x^i."""
        v = make_bipoly({(0, 0): 1, (1, 1): 2, (2, 1): 3, (2, 2): 4}, p=7)
        assert v.diagonal() == UniPoly(v.field, (1, 2, 4))

    def test_pow_matches_repeated_product(self, catalan_e):
        """Test b^4 against four explicit products."""
        b = catalan_e.shear().div_y()
        assert b ** 4 == b * b * b * b

    @settings(max_examples=40, deadline=None)
    @given(p=st.sampled_from([2, 3, 7, 31]), data=st.data())
    def test_kronecker_matches_schoolbook(self, p, data):
        """Test the Kronecker product against the term-by-term product."""
        fld = PrimeField(p)
        coeff = st.integers(0, p - 1)
        key = st.tuples(st.integers(0, 5), st.integers(0, 5))
        u = BiPoly.from_terms(fld, data.draw(st.dictionaries(key, coeff, max_size=12)))
        v = BiPoly.from_terms(fld, data.draw(st.dictionaries(key, coeff, max_size=12)))
        assert bipoly_mul(u, v) == _schoolbook(u, v)


class TestSections:
    """Tests for section_uni and section_bi."""

    def test_section_of_x(self, gf7):
        """Test S_1 x = 1."""
        assert section_uni(UniPoly.monomial(gf7, 1), 1) == 1

    def test_section_uni_picks_residue_class(self, gf5):
        """Test S_2 keeps coefficients 2, 7, 12 of the input."""
        f = UniPoly(gf5, tuple(range(1, 5)) * 4)
        assert section_uni(f, 2).coeffs == (f[2], f[7], f[12])

    def test_bivariate_section_needs_both_residues(self, make_bipoly):
        """Test S_1(x y^2) = 0 over F_7."""
        assert section_bi(make_bipoly({(1, 2): 1}, p=7), 1).is_zero

    def test_bivariate_section(self, make_bipoly):
        """Test S_1(2 x^8 y + 3 x y^8) = 2x + 3y over F_7."""
        v = make_bipoly({(8, 1): 2, (1, 8): 3}, p=7)
        assert section_bi(v, 1) == make_bipoly({(1, 0): 2, (0, 1): 3}, p=7)

    @pytest.mark.parametrize("r", [-1, 7, 100])
    def test_bad_digit(self, gf7, r):
        """Test that digits outside [0, p) raise BadDigit."""
        with pytest.raises(BadDigit):
            section_uni(UniPoly.one(gf7), r)

    def test_section_commutes_with_diagonal(self, make_random_instance):
        """Test S_r(Diag v) = Diag(S_r v)."""
        E = make_random_instance(p=3, d=4, h=4, seed=3)
        v = E * E
        for r in range(3):
            assert section_uni(v.diagonal(), r) == section_bi(v, r).diagonal()

    def test_frobenius_section(self, gf5):
        """Test S_0(u(x)^p) = u(x) in characteristic p."""
        u = UniPoly(gf5, (1, 2, 0, 4))
        assert section_uni(u ** 5, 0) == u

    @settings(max_examples=30, deadline=None)
    @given(p=st.sampled_from([2, 3, 7, 31]), data=st.data())
    def test_sections_reconstruct(self, p, data):
        """Test f = sum_r x^r (S_r f)(x^p) for deg f <= 500."""
        fld = PrimeField(p)
        f = UniPoly(fld, tuple(data.draw(st.lists(st.integers(0, p - 1), max_size=501))))
        rebuilt = UniPoly.zero(fld)
        for r in range(p):
            rebuilt = rebuilt + UniPoly.monomial(fld, r) * section_uni(f, r).inflate(p)
        assert rebuilt == f

    @settings(max_examples=30, deadline=None)
    @given(p=st.sampled_from([2, 3, 7, 31]), data=st.data())
    def test_frobenius_is_inflation(self, p, data):
        """Test g^p = g(x^p) for deg g <= 100."""
        fld = PrimeField(p)
        g = UniPoly(fld, tuple(data.draw(st.lists(st.integers(0, p - 1), max_size=101))))
        assert g ** p == g.inflate(p)
