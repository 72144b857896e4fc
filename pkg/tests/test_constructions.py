"""Tests for the explicit sequence families."""

import pytest

from seqc.aperiodic import symmetric_rational_complexity
from seqc.bitseq import FiniteWord, PeriodicSequence, reverse
from seqc.constructions import (
    FAMILIES,
    FamilySpec,
    build,
    iter_tails,
    random_tail,
    reversed_spec,
    verify_family,
)
from seqc.errors import PreconditionError


def _claims(report) -> dict[str, bool]:
    return {c.name: c.passed for c in report.claims}


class TestFamilySpec:
    """Tests for parameter parsing."""

    def test_from_pairs(self):
        """Should parse integers in any base and keep the tail as text."""
        spec = FamilySpec.from_pairs("zero-run", ["N=8", "k=0x5", "tail=01"])
        assert spec.parameters == {"N": 8, "k": 5, "tail": "01"}

    def test_unknown_family(self):
        """Should reject an unknown family."""
        with pytest.raises(PreconditionError, match="unknown family"):
            FamilySpec.from_pairs("gold-code", [])

    def test_malformed_pair(self):
        """Should reject a parameter without '='."""
        with pytest.raises(PreconditionError, match="key=value"):
            FamilySpec.from_pairs("small-prime", ["12"])

    def test_non_integer(self):
        """Should reject a non-integer parameter."""
        with pytest.raises(PreconditionError, match="integer"):
            FamilySpec.from_pairs("small-prime", ["T=twelve"])

    def test_missing_parameter(self):
        """Should name the missing parameter."""
        with pytest.raises(PreconditionError, match="needs parameter T"):
            FamilySpec.from_pairs("small-prime", [])

    def test_bad_tail(self):
        """Should reject a tail with symbols other than 0 and 1."""
        with pytest.raises(PreconditionError, match="tail"):
            FamilySpec.from_pairs("zero-run", ["N=8", "k=5", "tail=012"])

    def test_registry_matches_literal(self):
        """Should register exactly the families of the FamilyName literal."""
        assert set(FAMILIES) == set(FamilySpec.model_fields["family"].annotation.__args__)


class TestTails:
    """Tests for tail helpers."""

    def test_random_tail_reproducible(self):
        """Should return the same bits for the same seed."""
        assert random_tail(16, 7) == random_tail(16, 7)
        assert len(random_tail(16, 7)) == 16
        assert set(random_tail(64, 1)) <= {"0", "1"}

    def test_iter_tails(self):
        """Should list every tail in lexicographic order."""
        assert list(iter_tails(2)) == ["00", "01", "10", "11"]
        assert list(iter_tails(0)) == [""]


class TestPeriodicFamilies:
    """Tests for the periodic families."""

    @pytest.mark.parametrize("t", [12, 24, 36])
    def test_small_prime(self, t):
        """Should pass every claim for valid periods."""
        report = verify_family(FamilySpec(family="small-prime", parameters={"T": t}))
        assert report.periodic
        assert report.passed

    @pytest.mark.parametrize("t", [3, 13, 60])
    def test_small_prime_rejects_period(self, t):
        """Should reject periods outside the family's conditions."""
        with pytest.raises(PreconditionError):
            build(FamilySpec(family="small-prime", parameters={"T": t}))

    @pytest.mark.parametrize("p", [11, 13, 23, 19])
    def test_prime_prefix(self, p):
        """Should pass every claim for tabulated primes."""
        report = verify_family(FamilySpec(family="prime-prefix", parameters={"p": p}))
        assert report.passed

    def test_l_sequence_reversal(self):
        """Should reproduce the published values and the ratio 9."""
        report = verify_family(FamilySpec(family="l-sequence-reversal"))
        assert report.passed
        assert _claims(report)["published values"]
        ratio = next(c for c in report.claims if c.informational)
        assert ratio.values["ratio"] == "9"

    @pytest.mark.parametrize("shift", range(8))
    def test_palindrome_shifted(self, shift):
        """Should keep lambda equal under every shift."""
        spec = FamilySpec(family="palindrome-shifted", parameters={"q_pal": 9, "k": 4, "T": 8, "shift": shift})
        report = verify_family(spec)
        assert report.passed
        assert _claims(report)["stated reverse value"]

    def test_palindrome_padded_example(self):
        """Should build 31 and flag the stated reverse value."""
        spec = FamilySpec(family="palindrome-padded", parameters={"q_pal": 7, "k": 2, "T": 8})
        built = build(spec)
        assert isinstance(built, PeriodicSequence)
        assert built.initial.value == 31
        report = verify_family(spec)
        assert report.passed
        assert not _claims(report)["stated reverse value"]

    def test_palindrome_padded_counterexample(self):
        """Should fail when lambda differs from its reversal's."""
        spec = FamilySpec(family="palindrome-padded", parameters={"q_pal": 9, "k": 2, "T": 12})
        report = verify_family(spec)
        assert not _claims(report)["lambda equals reversal's"]
        assert not report.passed


class TestRunFamilies:
    """Tests for the zero-run and one-run families."""

    def test_zero_run_word(self):
        """Should build 0001 with Lambda 8."""
        built = build(FamilySpec(family="zero-run", parameters={"N": 4, "k": 3}))
        assert isinstance(built, FiniteWord)
        assert built.to_text() == "0001"
        report = verify_family(FamilySpec(family="zero-run", parameters={"N": 4, "k": 3}))
        assert report.claims[0].values["Lambda"] == 8

    def test_one_run_word(self):
        """Should build k ones, a zero, then the tail."""
        built = build(FamilySpec(family="one-run", parameters={"N": 6, "k": 4, "tail": "1"}))
        assert built.to_text() == "111101"

    @pytest.mark.parametrize(
        "family,params",
        [
            ("zero-run", {"N": 8, "k": 3}),
            ("one-run", {"N": 8, "k": 4}),
            ("zero-run", {"N": 8, "k": 8}),
            ("one-run-linear", {"N": 5, "k": 0}),
        ],
    )
    def test_preconditions(self, family, params):
        """Should reject k outside the family's range."""
        with pytest.raises(PreconditionError):
            build(FamilySpec(family=family, parameters=params))

    @pytest.mark.parametrize("family", ["zero-run", "one-run", "zero-run-linear", "one-run-linear"])
    def test_claims_hold_exhaustively(self, family):
        """Should pass every claim for every tail up to N=10."""
        for n in range(3, 11):
            for k in range(1, n):
                if 2 * k < n + (1 if family.startswith("one") else 0):
                    continue
                for tail in iter_tails(n - k - 1):
                    spec = FamilySpec(family=family, parameters={"N": n, "k": k, "tail": tail})
                    report = verify_family(spec)
                    assert report.passed, (n, k, tail, report.claims)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(11, 15))
    def test_zero_run_exhaustive_long(self, n):
        """Should give Lambda = 2^k for every tail with 11 <= N <= 14."""
        for k in range((n + 1) // 2, n):
            for tail in iter_tails(n - k - 1):
                report = verify_family(FamilySpec(family="zero-run", parameters={"N": n, "k": k, "tail": tail}))
                assert report.claims[0].values["Lambda"] == 1 << k, (n, k, tail)
                assert report.passed, (n, k, tail, report.claims)

    @pytest.mark.parametrize("n", range(15, 21))
    def test_zero_run_sampled_tails(self, n):
        """Should give Lambda = 2^k for seeded tails with 15 <= N <= 20."""
        for k in range((n + 1) // 2, n):
            for seed in range(3):
                spec = FamilySpec(family="zero-run", parameters={"N": n, "k": k, "tail": random_tail(n - k - 1, seed)})
                report = verify_family(spec)
                assert report.claims[0].values["Lambda"] == 1 << k, (n, k, seed)
                assert report.passed

    def test_random_tail_claims(self):
        """Should pass with a random tail once k >= N/2."""
        tail = random_tail(20, 3)
        spec = FamilySpec(family="zero-run", parameters={"N": 36, "k": 15, "tail": tail})
        with pytest.raises(PreconditionError):
            build(spec)
        spec = FamilySpec(family="zero-run", parameters={"N": 36, "k": 18, "tail": random_tail(17, 3)})
        assert verify_family(spec).passed

    def test_report_json(self):
        """Should serialise the report to plain JSON types."""
        data = verify_family(FamilySpec(family="zero-run", parameters={"N": 4, "k": 2, "tail": "1"})).to_json_dict()
        assert data["sequence"] == "0011"
        assert data["passed"] is True


class TestReversal:
    """Tests for reports on a sequence and on its reversal."""

    @staticmethod
    def _connections(report) -> tuple[int, int]:
        values = next(c.values for c in report.claims if c.name == "reversal has larger connection")
        return values["connection"], values["connection_rev"]

    def test_reversed_spec(self):
        """Should reverse the value and be an involution."""
        spec = reversed_spec(FamilySpec(family="l-sequence-reversal"))
        assert spec.parameters == {"value": 10731, "T": 18}
        assert reversed_spec(spec).parameters["value"] == 220752

    def test_mirror_image_reports(self):
        """Should swap the two connection integers and flip the comparison."""
        spec = FamilySpec(family="l-sequence-reversal")
        forward = verify_family(spec)
        backward = verify_family(reversed_spec(spec))
        assert backward.sequence == forward.sequence[::-1]
        assert self._connections(forward) == (19, 171)
        assert self._connections(backward) == (171, 19)
        assert _claims(forward)["reversal has larger connection"]
        assert not _claims(backward)["reversal has larger connection"]

    @pytest.mark.parametrize("value", [1, 5, 11, 1000, 65535, 200001])
    def test_mirror_image_any_value(self, value):
        """Should swap the connection integers for any initial vector."""
        spec = FamilySpec(family="l-sequence-reversal", parameters={"value": value})
        forward = verify_family(spec)
        backward = verify_family(reversed_spec(spec))
        assert self._connections(backward) == self._connections(forward)[::-1]

    def test_not_closed_under_reversal(self):
        """Should refuse families whose reversal is not a member."""
        with pytest.raises(PreconditionError, match="not closed under reversal"):
            reversed_spec(FamilySpec(family="small-prime", parameters={"T": 12}))

    def test_zero_run_reversal_swaps_measures(self):
        """Should swap forward and reverse Lambda and keep the symmetric value."""
        for tail in iter_tails(4):
            w = build(FamilySpec(family="zero-run", parameters={"N": 10, "k": 5, "tail": tail}))
            forward, backward, smaller = symmetric_rational_complexity(w)
            rev_backward, rev_forward, rev_smaller = symmetric_rational_complexity(reverse(w))
            assert (forward.norm, backward.norm) == (rev_forward.norm, rev_backward.norm)
            assert smaller == rev_smaller == backward.norm
