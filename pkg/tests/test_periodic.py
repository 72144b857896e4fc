"""Tests for GF(2) polynomials and periodic-sequence measures."""

import numpy as np
import pytest

from seqc.aperiodic import linear_complexity_N
from seqc.bitseq import FiniteWord, PeriodicSequence, expand
from seqc.errors import PreconditionError
from seqc.gf2 import Gf2Poly
from seqc.periodic import (
    adic_periodic,
    adic_symmetric_periodic,
    find_valid_T,
    linear_complexity_periodic,
    palindromic_core_value,
    verify_l_sequence_reversal,
    verify_mersenne_maximality,
    verify_palindromic_core,
    verify_prime_construction,
    verify_reverse_linear_equality,
)


class TestGf2Poly:
    """Tests for Gf2Poly arithmetic."""

    def test_mul_and_divmod(self):
        """Should multiply and divide polynomials exactly."""
        a = Gf2Poly(0b111)  # x^2 + x + 1
        b = Gf2Poly(0b11)  # x + 1
        product = a * b
        assert product == Gf2Poly(0b1001)  # x^3 + 1
        q, r = divmod(product, b)
        assert q == a and r.is_zero()

    def test_gcd(self):
        """Should find x^3 + x + 1 as a factor of x^7 + 1."""
        x7 = Gf2Poly.x_pow_minus_one(7)
        assert x7.gcd(Gf2Poly(0b1011)) == Gf2Poly(0b1011)  # x^3 + x + 1 divides x^7 + 1

    def test_degree_and_text(self):
        """Should report degree -1 for zero and print terms highest first."""
        assert Gf2Poly(0).degree == -1
        assert str(Gf2Poly(0b1011)) == "x^3 + x + 1"

    def test_division_by_zero(self):
        """Should raise ZeroDivisionError on division by the zero polynomial."""
        with pytest.raises(ZeroDivisionError):
            divmod(Gf2Poly(3), Gf2Poly(0))


class TestAdicPeriodic:
    """Tests for the 2-adic complexity of periodic sequences."""

    def test_small_prime_example(self):
        """Should give the value-11 sequence maximal connection and its reversal 4095/13."""
        seq = PeriodicSequence.from_natural(11, 12)
        forward, backward, smaller = adic_symmetric_periodic(seq)
        assert forward.connection == 4095
        assert backward.connection == 4095 // 13
        assert smaller == backward.lambda_bits

    def test_zero_and_all_ones(self):
        """Should give constant sequences connection integer 1."""
        assert adic_periodic(PeriodicSequence.from_natural(0, 5)).connection == 1
        assert adic_periodic(PeriodicSequence.from_natural(31, 5)).connection == 1

    def test_l_sequence_reversal(self):
        """Should reproduce connection 19 and reversal connection 171."""
        report = verify_l_sequence_reversal(220752, 18)
        assert report.connection == 19
        assert report.connection_rev == 171
        assert report.reverse_value == 10731
        assert report.ratio == 9
        assert report.reversal_larger


class TestLinearPeriodic:
    """Tests for periodic linear complexity."""

    def test_known_values(self):
        """Should compute L for constant sequences and an m-sequence."""
        assert linear_complexity_periodic(PeriodicSequence.from_natural(0, 6)) == 0
        assert linear_complexity_periodic(PeriodicSequence.from_natural(63, 6)) == 1
        # 1110100 is an m-sequence of x^3 + x + 1
        m_seq = PeriodicSequence(FiniteWord.from_bits([1, 1, 1, 0, 1, 0, 0]))
        assert linear_complexity_periodic(m_seq) == 3

    def test_reverse_equality_exhaustive(self):
        """Should give every sequence of period up to 8 the same L as its reversal."""
        for t in range(1, 9):
            for value in range(1 << t):
                assert verify_reverse_linear_equality(PeriodicSequence(FiniteWord(value, t)))

    def test_matches_berlekamp_massey_on_two_periods(self):
        """Should equal Berlekamp-Massey on two periods for every T <= 8."""
        for t in range(1, 9):
            for value in range(1 << t):
                seq = PeriodicSequence(FiniteWord(value, t))
                assert linear_complexity_periodic(seq) == linear_complexity_N(expand(seq, 2 * t))

    def test_matches_berlekamp_massey_sampled(self):
        """Should equal Berlekamp-Massey on two periods for sampled longer periods."""
        rng = np.random.default_rng(5)
        for t in rng.integers(9, 64, size=40).tolist():
            seq = PeriodicSequence(FiniteWord(int(rng.integers(0, 1 << 62)) & ((1 << t) - 1), t))
            assert linear_complexity_periodic(seq) == linear_complexity_N(expand(seq, 2 * t))


class TestPrimeConstruction:
    """Tests for the prime-prefix construction."""

    def test_p11(self):
        """Should make the p=11 sequence maximal with gap log2(13)."""
        t = find_valid_T(11)
        assert t == 12
        report = verify_prime_construction(11, t)
        assert report.ok
        assert report.connection == (1 << 12) - 1
        assert report.connection == 13 * report.connection_rev

    def test_roles_interchanged(self):
        """Should swap p and q when starting from 13."""
        t = find_valid_T(13)
        report = verify_prime_construction(13, t)
        assert report.q == 11
        assert report.ok

    def test_period_condition_checked(self):
        """Should reject a period that fails the order conditions."""
        with pytest.raises(PreconditionError):
            verify_prime_construction(11, 10)

    def test_palindromic_prime_rejected(self):
        """Should reject a palindromic prime."""
        with pytest.raises(PreconditionError, match="palindromic"):
            find_valid_T(7)

    def test_first_valid_period(self):
        """Should find the smallest period meeting the order conditions."""
        assert find_valid_T(151) == 29
        # q = 247 = 13 * 19 has order lcm(12, 18) = 36
        assert find_valid_T(239) == 36


class TestPalindromicCore:
    """Tests for palindromic-core initial vectors."""

    def test_variant_a_all_shifts(self):
        """Should keep lambda equal to its reversal's under every shift."""
        for shift in range(8):
            report = verify_palindromic_core(9, 4, 8, "A", shift)
            assert report.value == 9 << 4
            assert report.identity_holds
            assert report.lambda_equal

    def test_variant_b_example(self):
        """Should flag the stated reverse value while lambda still matches."""
        report = verify_palindromic_core(7, 2, 8, "B")
        assert report.value == 31
        assert report.reverse_value == 248
        assert report.stated_reverse_value == 199
        assert not report.identity_holds
        assert report.lambda_equal

    def test_variant_b_lambda_can_differ(self):
        """Should allow lambda to differ from its reversal's in variant B."""
        report = verify_palindromic_core(9, 2, 12, "B")
        assert report.value == 39
        assert not report.lambda_equal

    def test_range_checks(self):
        """Should reject an out-of-range or non-palindromic core."""
        with pytest.raises(PreconditionError):
            palindromic_core_value(9, 2, 8, "A")  # needs 2^5 < q < 2^6
        with pytest.raises(PreconditionError):
            palindromic_core_value(11, 2, 8, "A")  # not a palindrome


class TestMersenne:
    """Tests for verify_mersenne_maximality."""

    @pytest.mark.parametrize("t", [2, 3, 5, 7])
    def test_small_periods(self, t):
        """Should find every non-constant sequence maximal for small Mersenne periods."""
        assert verify_mersenne_maximality(t)

    def test_non_mersenne_rejected(self):
        """Should refuse a period whose 2^T - 1 is not prime."""
        with pytest.raises(PreconditionError):
            verify_mersenne_maximality(11)

    @pytest.mark.slow
    def test_period_13_with_workers(self):
        """Should check period 13 across worker processes."""
        assert verify_mersenne_maximality(13, threads=2)
