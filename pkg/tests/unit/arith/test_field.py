"""
Tests for Prime Field Arithmetic
"""

import pytest

from src.arith import Fp, PrimeField, fp_inv
from src.errors import InvalidInput, ZeroInverse


class TestPrimeField:
    """Tests for PrimeField construction."""

    def test_accepts_prime(self):
        """Test that a prime modulus is accepted."""
        assert PrimeField(9001).p == 9001

    @pytest.mark.parametrize("p", [0, 1, 4, 9, 100])
    def test_rejects_non_prime(self, p):
        """Test that composite and tiny moduli are rejected."""
        with pytest.raises(InvalidInput):
            PrimeField(p)

    def test_rejects_non_integer(self):
        """Test that a float modulus is rejected."""
        with pytest.raises(InvalidInput):
            PrimeField(5.0)

    def test_signed_is_symmetric(self, gf7):
        """Test that display residues lie in (-p/2, p/2]."""
        assert [gf7.signed(v) for v in range(7)] == [0, 1, 2, 3, -3, -2, -1]

    def test_call_reduces(self, gf5):
        """Test that calling the field reduces negative integers."""
        assert gf5(-1).value == 4


class TestFp:
    """Tests for Fp elements."""

    def test_inverse_of_two_mod_five(self, gf5):
        """Test that 2^(-1) = 3 in F_5."""
        assert fp_inv(gf5(2)) == 3

    def test_inverse_of_zero_raises(self, gf5):
        """Test that inverting zero raises ZeroInverse."""
        with pytest.raises(ZeroInverse):
            fp_inv(gf5(0))

    def test_zero_inverse_is_zero_division(self, gf5):
        """Test that ZeroInverse can be caught as ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            gf5(1) / gf5(0)

    def test_arithmetic(self, gf7):
        """Test the field operations against integer arithmetic."""
        a, b = gf7(3), gf7(5)
        assert a + b == 1
        assert a - b == 5
        assert a * b == 1
        assert a / b == 2
        assert -a == 4
        assert a ** 6 == 1
        assert a ** -1 == 5

    def test_int_operands(self, gf7):
        """Test that plain ints combine with Fp on either side."""
        assert 2 + gf7(6) == 1
        assert 10 - gf7(3) == 0
        assert int(gf7(4) * 3) == 5

    def test_mixing_fields_raises(self, gf5, gf7):
        """Test that elements of different fields do not mix."""
        with pytest.raises(InvalidInput):
            gf5(1) + gf7(1)

    def test_residue_out_of_range(self, gf5):
        """Test that a raw residue outside [0, p) is rejected."""
        with pytest.raises(InvalidInput):
            Fp(5, gf5)

    def test_fermat(self, gf11):
        """Test a^(p-1) = 1 for every nonzero a."""
        assert all(gf11(a) ** 10 == 1 for a in range(1, 11))
