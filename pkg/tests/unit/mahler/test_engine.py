"""
Tests for Section Stepping and the Mahler Coefficient Engine
"""

import random

import pytest

from src.arith import UniPoly
from src.errors import BadDigit
from src.mahler import (
    IndexTrace,
    MahlerPipeline,
    SectionState,
    coeff_via_mahler,
    evaluate_state,
    radix_suffix_chain,
    section_step,
)
from src.cli.parser import parse_poly
from src.oracle import expand_newton


@pytest.fixture(scope="module")
def toy_pipeline():
    return MahlerPipeline(parse_poly("x + y - y^3", 5))


def _zero_state(fld, order):
    zero = UniPoly.zero(fld)
    return SectionState(zero, (zero,) * (order + 1))


class TestSectionStep:
    """Tests for section_step and evaluate_state."""

    def test_pure_section(self, toy_pipeline):
        """Test that (a = x, b = 0) steps to (a = 1, b = 0) with r = 1."""
        fld = toy_pipeline.field
        state = _zero_state(fld, toy_pipeline.data.order)
        state = SectionState(UniPoly.monomial(fld, 1), state.b)
        stepped = section_step(state, toy_pipeline.data, 1)
        assert stepped.a == 1
        assert all(c.is_zero for c in stepped.b)

    def test_bad_digit(self, toy_pipeline):
        """Test that r = p raises BadDigit."""
        state = SectionState.series(toy_pipeline.field, toy_pipeline.data.order)
        with pytest.raises(BadDigit):
            section_step(state, toy_pipeline.data, 5)

    def test_degree_bound_on_random_states(self, toy_pipeline):
        """Test that every step keeps all degrees at most D."""
        data = toy_pipeline.data
        fld = data.field
        rng = random.Random(7)

        def rand_poly():
            return UniPoly(fld, tuple(rng.randrange(5) for _ in range(data.D + 1)))

        for _ in range(100):
            state = SectionState(rand_poly(), tuple(rand_poly() for _ in range(data.order + 1)))
            stepped = section_step(state, data, rng.randrange(5))
            assert stepped.degree <= data.D
            assert stepped.b[-1].is_zero

    def test_evaluate_constant_state(self, toy_pipeline):
        """Test that (1; 0, ..., 0) evaluates to 1."""
        fld = toy_pipeline.field
        state = _zero_state(fld, toy_pipeline.data.order)
        assert evaluate_state(SectionState(UniPoly.one(fld), state.b), fld(3)) == 1

    def test_evaluate_series_state(self, toy_pipeline):
        """Test that the state of h itself evaluates to h_0."""
        fld = toy_pipeline.field
        assert evaluate_state(SectionState.series(fld, toy_pipeline.data.order), fld(3)) == 3


class TestMahlerPipeline:
    """Tests for MahlerPipeline and coeff_via_mahler."""

    def test_first_coefficients(self, toy_pipeline):
        """Test f = -x - x^3 + 2x^5 - 2x^7 + 2x^11 + ... over F_5."""
        values = [int(v) for v in toy_pipeline.coefficients(12)]
        assert values == [0, 4, 0, 4, 0, 2, 0, 3, 0, 0, 0, 2]

    def test_h_matches_oracle(self, toy_pipeline, toy_e):
        """Test h_N from section stepping against f/c_0 by series division, N <= 400."""
        n = 420
        f = expand_newton(toy_e, n).prefix
        c0 = toy_pipeline.equation.coeffs[0]
        unit = c0.shift(-c0.valuation)
        g = f.mul_trunc(unit.series_inv(n), n)
        v0 = toy_pipeline.equation.v0
        for N in range(0, 400, 7):
            assert toy_pipeline.h_coefficient(N) == g[N + v0]

    def test_agrees_with_newton(self, toy_pipeline, toy_e):
        """Test f_N for every N <= 400."""
        expected = expand_newton(toy_e, 401).values()
        assert [int(v) for v in toy_pipeline.coefficients(401)] == expected

    def test_h_prefix_matches_single_queries(self, toy_pipeline):
        """Test the shared digit walk against one-index-at-a-time stepping."""
        prefix = toy_pipeline.h_prefix(300)
        assert len(prefix) == 300
        assert prefix == [toy_pipeline.h_coefficient(n) for n in range(300)]
        assert toy_pipeline.h_prefix(0) == []

    @pytest.mark.parametrize("text, p", [("y + 2*y^2 + y^3", 3), ("(y - x)*(1 + y)^2", 5)])
    def test_repeated_factor_equations(self, text, p):
        """Test f_N for N < 200 when E has a squared factor."""
        E = parse_poly(text, p)
        pipeline = MahlerPipeline(E)
        expected = expand_newton(E, 200).values()
        assert [int(v) for v in pipeline.coefficients(200)] == expected
        # both roots (0 and x) vanish far out
        assert pipeline.coefficient(10**6) == 0

    def test_large_index(self, toy_pipeline, toy_e):
        """Test f_1251 against the Newton expansion to x^1252."""
        expected = expand_newton(toy_e, 1252).coefficient(1251)
        assert toy_pipeline.coefficient(1251) == expected

    def test_thirteen_index_fingerprint(self, toy_pipeline):
        """Test which h indices are touched for N = 1251."""
        trace = IndexTrace(radix=5)
        toy_pipeline.coefficient(1251, trace)
        assert trace.evaluated == {1243, 1245, 1247}
        assert trace.all_indices(radix=10) == {
            0, 3, 5, 7, 43, 45, 47, 243, 245, 247, 1243, 1245, 1247,
        }

    def test_base_p_suffix_chains(self, toy_pipeline):
        """Test that the default chains are the base-5 indices the states pass through."""
        trace = IndexTrace(radix=5)
        toy_pipeline.coefficient(1251, trace)
        # 1243 = (14433)_5, 1245 = (14440)_5, 1247 = (14442)_5
        assert trace.all_indices() == {
            0, 2, 3, 18, 20, 22, 118, 120, 122, 618, 620, 622, 1243, 1245, 1247,
        }

    def test_steps_equal_digit_count(self, toy_pipeline):
        """Test one section step per base-p digit of each shifted index."""
        trace = IndexTrace(radix=5)
        toy_pipeline.coefficient(1251, trace)
        assert trace.steps == {1243: 5, 1245: 5, 1247: 5}
        assert trace.section_steps == 15

    def test_small_index_fallback(self, toy_pipeline):
        """Test N <= deg c_0 uses the Newton prefix."""
        trace = IndexTrace(radix=5)
        assert toy_pipeline.coefficient(7, trace) == 3
        assert not trace.evaluated

    def test_index_forms(self, toy_pipeline):
        """Test that str, int and BigIndex indices agree."""
        assert toy_pipeline.coefficient("1251") == toy_pipeline.coefficient(1251)

    def test_entry_point(self, toy_e):
        """Test coeff_via_mahler on N = 1."""
        assert coeff_via_mahler(toy_e, 1) == 4

    def test_random_instances(self, make_random_instance):
        """Test agreement with Newton on random instances over small primes."""
        for seed, p, d in [(11, 2, 2), (12, 3, 2), (13, 2, 3), (14, 2, 2)]:
            E = make_random_instance(p=p, d=d, h=2, seed=seed)
            pipeline = MahlerPipeline(E)
            expected = expand_newton(E, 300).values()
            for N in list(range(40)) + [97, 150, 299]:
                assert int(pipeline.coefficient(N)) == expected[N]


class TestRadixSuffixChain:
    """Tests for radix_suffix_chain."""

    def test_chain(self):
        """Test the decimal suffixes of 1247."""
        assert radix_suffix_chain(1247, 10) == {0, 7, 47, 247, 1247}

    def test_zero(self):
        """Test the chain of zero."""
        assert radix_suffix_chain(0, 10) == {0}
