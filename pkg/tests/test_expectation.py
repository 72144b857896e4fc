"""Tests for exact expectations and the bound constants."""

from fractions import Fraction

import numpy as np
import pytest

from seqc.errors import PreconditionError
from seqc.expectation import (
    asymptotics_report,
    count_by_linear_complexity,
    enumerate_expectations,
    format_3dp,
    linear_count_formula,
    linexp_closed_form,
    linexp_growth_constant,
    linexp_proof_expression,
    m_of_w,
    proof_constants,
    reversal_pair_difference,
    table3,
    table4,
)
from seqc.sweep import bit_reversal_index, linear_complexity_table, norm_table


class TestEnumerateExpectations:
    """Tests for enumerate_expectations."""

    def test_length_two(self):
        """Should give the exact length-2 expectations."""
        row = enumerate_expectations(2)
        assert row.e_rat == Fraction(5, 4)
        assert row.e_rat_sym == 1
        assert row.e_linexp == Fraction(9, 4)
        assert row.e_linexp_sym == Fraction(7, 4)
        assert row.e_lin_sym <= row.e_lin

    def test_only_requested_measures(self):
        """Should leave unrequested measures unset."""
        row = enumerate_expectations(4, ["lin"])
        assert row.e_lin is not None
        assert row.e_rat is None
        assert row.e_2adic is None

    def test_2adic_bounded_by_log_of_rational(self):
        """Should keep the 2-adic mean below log2 of the rational mean."""
        row = enumerate_expectations(6, ["rat", "2adic"])
        assert row.e_2adic_sym <= row.e_2adic
        assert row.e_2adic <= np.log2(float(row.e_rat))

    def test_unknown_measure(self):
        """Should reject an unknown measure name."""
        with pytest.raises(PreconditionError, match="unknown measure"):
            enumerate_expectations(4, ["entropy"])

    @pytest.mark.parametrize("n", [0, 25])
    def test_range_guard(self, n):
        """Should exit 3 on N outside 1..24."""
        with pytest.raises(PreconditionError) as exc:
            enumerate_expectations(n)
        assert exc.value.exit_code == 3

    def test_max_n_from_config(self, monkeypatch):
        """Should honour SEQC_MAX_N."""
        monkeypatch.setenv("SEQC_MAX_N", "6")
        with pytest.raises(PreconditionError):
            enumerate_expectations(7)


class TestGapTables:
    """Tests for the ordinary minus symmetric gap tables."""

    def test_format_3dp(self):
        """Should round half-up and drop trailing zeros."""
        assert format_3dp(Fraction(13, 16)) == "0.813"
        assert format_3dp(Fraction(1, 4)) == "0.25"
        assert format_3dp(Fraction(119, 5)) == "23.8"
        assert format_3dp(Fraction(3)) == "3"

    def test_rational_gap_small(self):
        """Should reproduce the small rational gaps."""
        rows = table3(8)
        assert [r.N for r in rows] == list(range(2, 9))
        assert [r.rounded for r in rows] == ["0.25", "0.5", "0.813", "1.344", "1.922", "2.813", "3.992"]

    def test_linexp_gap_small(self):
        """Should reproduce the small 2^L gaps."""
        rows = table4(9)
        assert [r.rounded for r in rows] == ["0.5", "0.75", "1.625", "2.063", "3.656", "4.453", "7.539", "9.082"]

    def test_table_limits(self):
        """Should refuse N beyond the table range."""
        with pytest.raises(PreconditionError):
            table3(22)
        with pytest.raises(PreconditionError):
            table4(6, n_min=7)

    def test_reversal_pair_difference(self):
        """Should reach the rational gap by pairing each word with its reversal."""
        for n in range(2, 9):
            norms = norm_table(n).astype(np.int64)
            gap = enumerate_expectations(n, ["rat"]).difference("rat")
            assert Fraction(reversal_pair_difference(norms, bit_reversal_index(n)), 1 << n) == gap

    def test_reversal_pair_difference_linexp(self):
        """Should reach the 2^L gap by pairing each word with its reversal."""
        for n in range(2, 13):
            powers = np.left_shift(np.int64(1), linear_complexity_table(n).astype(np.int64))
            gap = enumerate_expectations(n, ["linexp"]).difference("linexp")
            assert Fraction(reversal_pair_difference(powers, bit_reversal_index(n)), 1 << n) == gap


class TestCounting:
    """Tests for counts by linear complexity and the closed forms."""

    def test_formula(self):
        """Should count words by linear complexity."""
        assert [linear_count_formula(3, l) for l in range(4)] == [1, 2, 4, 1]
        assert linear_count_formula(3, 4) == 0

    @pytest.mark.parametrize("n", range(1, 11))
    def test_enumerated_counts(self, n):
        """Should count every word exactly once."""
        counts = count_by_linear_complexity(n)
        assert sum(counts.values()) == 1 << n

    def test_m_of_w(self):
        """Should agree with the closed form (4^(W+1)+2)/6."""
        assert [m_of_w(w) for w in range(4)] == [1, 3, 11, 43]
        with pytest.raises(PreconditionError):
            m_of_w(-1)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_closed_form_matches_enumeration(self, n):
        """Should match the closed form for E_linexp."""
        assert enumerate_expectations(n, ["linexp"]).e_linexp == linexp_closed_form(n)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_proof_expression_misses_zero_word(self, n):
        """Should differ from the closed form by the zero word's 2^-N."""
        assert linexp_closed_form(n) - linexp_proof_expression(n) == Fraction(1, 1 << n)

    def test_growth_constant(self):
        """Should give 11/7 for even N and 8 sqrt(2)/7 for odd N."""
        assert linexp_growth_constant(4) == (Fraction(44, 7), pytest.approx(11 / 7))
        scaled, c = linexp_growth_constant(5)
        assert scaled == Fraction(64, 7)
        assert c == pytest.approx(1.6162, abs=1e-4)

    @pytest.mark.parametrize("n", range(2, 15))
    def test_linear_mean_near_half_n(self, n):
        """Should keep E_lin within 1 of N/2."""
        e_lin = enumerate_expectations(n, ["lin"]).e_lin
        assert abs(e_lin - Fraction(n, 2)) <= 1

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(15, 23))
    def test_linear_mean_near_half_n_long(self, n):
        """Should keep E_lin within 1 of N/2 up to N=22."""
        e_lin = enumerate_expectations(n, ["lin"], threads=2).e_lin
        assert abs(e_lin - Fraction(n, 2)) <= 1


class TestProofConstants:
    """Tests for proof_constants."""

    def test_length_two(self):
        """Should give the exact constants at N=2."""
        c = proof_constants(2)
        assert (c.m1, c.m2, c.k1, c.k2) == (Fraction(1, 4), 0, Fraction(1, 2), 0)

    def test_too_short(self):
        """Should refuse N below 2."""
        with pytest.raises(PreconditionError):
            proof_constants(1)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_bounds_hold(self, n):
        """Should bound both gaps from below."""
        row = enumerate_expectations(n, ["rat", "linexp"])
        c = proof_constants(n)
        assert c.m1 == c.m1_closed
        assert row.difference("rat") >= c.rational_bound
        assert row.difference("linexp") >= c.linexp_bound


class TestAsymptotics:
    """Tests for asymptotics_report."""

    def test_rows(self):
        """Should report every N with the symmetric mean below the full one."""
        rows = asymptotics_report(2, 8)
        assert [r.N for r in rows] == list(range(2, 9))
        assert all(r.sym_below_full for r in rows)
        assert rows[-1].sqrt_space == 16.0
