"""Tests for Pydantic schemas."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from seqc.schemas import (
    ClaimResult,
    ComplexityProfile,
    ExpectationRow,
    FamilyReport,
    PeriodicAdicReport,
    RationalApproximation,
    SuiteReport,
    expectation_tsv_header,
)


class TestRationalApproximation:
    """Tests for RationalApproximation schema."""

    def test_valid_witness(self):
        """Should accept a witness whose f is negative."""
        approx = RationalApproximation(q=1, f=-3, norm=3)
        assert approx.witnesses(13, 4)  # 13 == -3 mod 16

    def test_even_q_rejected(self):
        """Should reject an even q."""
        with pytest.raises(ValidationError):
            RationalApproximation(q=2, f=1, norm=2)

    def test_norm_must_be_max(self):
        """Should require norm == max(q, |f|)."""
        with pytest.raises(ValidationError):
            RationalApproximation(q=3, f=5, norm=3)


class TestComplexityProfile:
    """Tests for ComplexityProfile schema."""

    def test_final_and_text(self):
        """Should expose the last entry and a comma-separated form."""
        profile = ComplexityProfile(entries=[0, 0, 0, 4], recurrence=[0, 0, 0, 0, 1])
        assert profile.final == 4
        assert profile.to_text() == "0,0,0,4"

    def test_empty_profile(self):
        """Should give an empty profile final value 0."""
        assert ComplexityProfile(entries=[]).final == 0


class TestPeriodicAdicReport:
    """Tests for PeriodicAdicReport schema."""

    def test_divisor_times_connection(self):
        """Should require divisor * connection == 2^T - 1."""
        with pytest.raises(ValidationError):
            PeriodicAdicReport(T=4, value=5, modulus=15, divisor=5, connection=5, lambda_bits=2.0)


class TestExpectationRow:
    """Tests for ExpectationRow schema."""

    def test_difference_is_exact(self):
        """Should subtract Fractions and skip missing measures."""
        row = ExpectationRow(N=2, e_rat=Fraction(5, 4), e_rat_sym=Fraction(1))
        assert row.difference("rat") == Fraction(1, 4)
        assert row.difference("lin") is None

    def test_symmetric_above_full_rejected(self):
        """Should reject a symmetric mean above the full one."""
        with pytest.raises(ValidationError):
            ExpectationRow(N=2, e_rat=Fraction(1), e_rat_sym=Fraction(5, 4))

    def test_json_serializes_fractions(self):
        """Should write Fractions as strings."""
        row = ExpectationRow(N=2, e_linexp=Fraction(9, 4), e_linexp_sym=Fraction(7, 4))
        assert row.to_json_dict() == {"N": 2, "e_linexp": "9/4", "e_linexp_sym": "7/4"}

    def test_tsv_columns_match_header(self):
        """Should print one column per header entry."""
        row = ExpectationRow(N=2, e_rat=Fraction(5, 4), e_rat_sym=Fraction(1))
        header = expectation_tsv_header(("rat",))
        assert header == "N\te_rat\te_rat_sym\tdiff_rat"
        assert row.to_tsv_row(("rat",)) == "2\t1.250000\t1.000000\t0.250000"


class TestReports:
    """Tests for family and suite reports."""

    def test_informational_claims_do_not_fail(self):
        """Should ignore informational claims in passed."""
        report = FamilyReport(
            family="palindrome-padded",
            parameters={},
            sequence="1",
            periodic=True,
            claims=[
                ClaimResult(name="identity", passed=False, informational=True),
                ClaimResult(name="lambda", passed=True),
            ],
        )
        assert report.passed
        assert report.to_json_dict()["passed"] is True

    def test_suite_check_counts(self):
        """Should count every check and keep failures."""
        report = SuiteReport(suite="demo")
        assert report.check(True, "fine")
        assert not report.check(False, "broken")
        assert report.checks == 2
        assert report.failures == ["broken"]
        assert not report.passed
