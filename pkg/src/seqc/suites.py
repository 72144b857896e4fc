"""Property suites run by ``seqc verify``.

Each suite records every assertion in a :class:`SuiteReport`; a failed
assertion is kept with enough values to reproduce it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from seqc.aperiodic import (
    bm_profile,
    linear_complexity_N,
    rational_complexity,
    rational_complexity_fast,
    satisfies_recurrence,
    shortest_recurrence_bruteforce,
)
from seqc.bitseq import FiniteWord, PeriodicSequence, expand
from seqc.config import get_config
from seqc.constructions import (
    L_SEQUENCE_PERIOD,
    FamilySpec,
    iter_tails,
    random_tail,
    reversed_spec,
    verify_family,
)
from seqc.errors import PreconditionError, PropertyFailure
from seqc.expectation import (
    count_by_linear_complexity,
    enumerate_expectations,
    linear_count_formula,
    linexp_closed_form,
    linexp_proof_expression,
    m_of_w,
    proof_constants,
    reversal_pair_difference,
    table3,
    table4,
)
from seqc.numtheory import enumerate_reversible_pairs
from seqc.observability import log_step_event, timed_step
from seqc.periodic import (
    find_valid_T,
    linear_complexity_periodic,
    verify_mersenne_maximality,
    verify_prime_construction,
    verify_reverse_linear_equality,
)
from seqc.reference import check_gaps, check_pairs, load_table
from seqc.schemas import SuiteReport
from seqc.sweep import bit_reversal_index, linear_complexity_table, norm_table, norms_of

logger = logging.getLogger("seqc.suites")

MERSENNE_EXPONENTS = (2, 3, 5, 7, 13)
LIN_EQ_SYM_EXHAUSTIVE_T = 10
LIN_EQ_SYM_MAX_T = 128
FAMILY_EXHAUSTIVE_N = 14
FAMILY_SAMPLED_N = range(15, 21)
ORACLE_EXHAUSTIVE_N = 14
ORACLE_RANDOM_LENGTHS = range(15, 41)
BM_EXHAUSTIVE_N = 12
BM_PROFILE_N = 16
COUNTING_N = 16
LIN_MEAN_N = range(2, 23)
BOUNDS_N = range(2, 17)


@dataclass
class SuiteDef:
    """A named property suite."""

    description: str
    run: Callable[[SuiteReport, int], None]


def _rng() -> np.random.Generator:
    return np.random.default_rng(get_config().verify.seed)


def _check_periodic_linear(report: SuiteReport, seq: PeriodicSequence) -> None:
    t, value = seq.period, seq.initial.value
    report.check(verify_reverse_linear_equality(seq), f"L(S) != L(S^rev) for T={t}, value={value}")
    report.check(
        linear_complexity_periodic(seq) == linear_complexity_N(expand(seq, 2 * t)),
        f"gcd degree != Berlekamp-Massey on two periods for T={t}, value={value}",
    )


def _lin_eq_sym(report: SuiteReport, threads: int) -> None:
    for t in range(1, LIN_EQ_SYM_EXHAUSTIVE_T + 1):
        for value in range(1 << t):
            _check_periodic_linear(report, PeriodicSequence(FiniteWord(value, t)))
    rng = _rng()
    for _ in range(get_config().verify.random_samples):
        t = int(rng.integers(1, LIN_EQ_SYM_MAX_T + 1))
        value = int.from_bytes(rng.bytes((t + 7) // 8), "little") & ((1 << t) - 1)
        _check_periodic_linear(report, PeriodicSequence(FiniteWord(value, t)))


def _mersenne(report: SuiteReport, threads: int) -> None:
    for t in MERSENNE_EXPONENTS:
        report.check(
            verify_mersenne_maximality(t, threads),
            f"some non-constant sequence of period {t} has connection below 2^{t}-1",
        )


def _prime_construction(report: SuiteReport, threads: int) -> None:
    primes = [row[0] for row in load_table("reversible-primes")["rows"]]
    primes += [row[1] for row in load_table("reversible-primes")["rows"]]
    primes += [row[0] for row in load_table("reversible-composites")["rows"]]
    for p in sorted(set(primes)):
        try:
            t = find_valid_T(p)
        except PreconditionError as e:
            report.notes.append(f"p={p} skipped: {e}")
            continue
        result = verify_prime_construction(p, t)
        report.check(
            result.ok,
            f"p={p}, T={t}: connection {result.connection}, q * connection_rev "
            f"{result.q * result.connection_rev}",
        )


def _check_family(report: SuiteReport, spec: FamilySpec) -> None:
    result = verify_family(spec)
    for claim in result.claims:
        if claim.informational:
            continue
        report.check(claim.passed, f"{spec.family} {spec.parameters}: {claim.name} ({claim.detail})")


def _check_mirror(report: SuiteReport, spec: FamilySpec) -> None:
    forward = verify_family(spec)
    backward = verify_family(reversed_spec(spec))
    pair = [
        next(c.values for c in r.claims if c.name == "reversal has larger connection") for r in (forward, backward)
    ]
    report.check(
        backward.sequence == forward.sequence[::-1]
        and pair[0]["connection"] == pair[1]["connection_rev"]
        and pair[0]["connection_rev"] == pair[1]["connection"],
        f"reports for {spec.parameters} and its reversal are not mirror images",
    )


def _run_families(n: int, k: int) -> list[str]:
    families = []
    if 2 * k >= n:
        families += ["zero-run", "zero-run-linear"]
    if 2 * k >= n + 1:
        families += ["one-run", "one-run-linear"]
    return families


def _families(report: SuiteReport, threads: int) -> None:
    fixed = [
        FamilySpec(family="small-prime", parameters={"T": 12}),
        FamilySpec(family="small-prime", parameters={"T": 36}),
        FamilySpec(family="prime-prefix", parameters={"p": 11}),
        FamilySpec(family="prime-prefix", parameters={"p": 13}),
        FamilySpec(family="l-sequence-reversal"),
        FamilySpec(family="palindrome-padded", parameters={"q_pal": 7, "k": 2, "T": 8}),
    ]
    for spec in fixed:
        _check_family(report, spec)
    for shift in range(8):
        _check_family(
            report,
            FamilySpec(family="palindrome-shifted", parameters={"q_pal": 9, "k": 4, "T": 8, "shift": shift}),
        )
    for n in range(2, FAMILY_EXHAUSTIVE_N + 1):
        for k in range((n + 1) // 2, n):
            for tail in iter_tails(n - k - 1):
                for family in _run_families(n, k):
                    _check_family(report, FamilySpec(family=family, parameters={"N": n, "k": k, "tail": tail}))
    config = get_config().verify
    per_run = max(1, config.random_samples // 1000)
    _check_mirror(report, FamilySpec(family="l-sequence-reversal"))
    for value in _rng().integers(1, 1 << L_SEQUENCE_PERIOD, size=per_run).tolist():
        _check_mirror(report, FamilySpec(family="l-sequence-reversal", parameters={"value": value}))
    for n in FAMILY_SAMPLED_N:
        for k in range((n + 1) // 2, n):
            for i in range(per_run):
                tail = random_tail(n - k - 1, config.seed + i)
                for family in _run_families(n, k):
                    _check_family(report, FamilySpec(family=family, parameters={"N": n, "k": k, "tail": tail}))


def _oracle_equivalence(report: SuiteReport, threads: int) -> None:
    previous = None
    for n in range(1, ORACLE_EXHAUSTIVE_N + 1):
        table = norm_table(n, threads)
        for value in range(1 << n):
            w = FiniteWord(value, n)
            oracle = rational_complexity(w)
            fast = rational_complexity_fast(w)
            report.check(
                fast.norm == oracle.norm and fast.witnesses(value, n),
                f"fast path disagrees on {w.to_text()}: {fast.norm} vs {oracle.norm}",
            )
            report.check(int(table[value]) == oracle.norm, f"norm table disagrees on {w.to_text()}")
        if n > 1:
            # the length n-1 prefix of value v is v mod 2^(n-1)
            prefix = previous[np.arange(1 << n) & ((1 << (n - 1)) - 1)]
            report.check(bool(np.all(table >= prefix)), f"Lambda decreases from N={n - 1} to N={n}")
        rev = bit_reversal_index(n)
        sym = np.minimum(table, table[rev])
        report.check(bool(np.array_equal(sym, sym[rev])), f"symmetric Lambda is not reversal invariant at N={n}")
        previous = table

    rng = _rng()
    per_length = get_config().verify.oracle_samples
    for n in ORACLE_RANDOM_LENGTHS:
        values = rng.integers(0, 1 << n, size=per_length, dtype=np.int64)
        expected = norms_of(values, n)
        for value, norm in zip(values.tolist(), expected.tolist()):
            fast = rational_complexity_fast(FiniteWord(value, n))
            report.check(
                fast.norm == norm and fast.witnesses(value, n),
                f"fast path disagrees on {value}/{n}: {fast.norm} vs {norm}",
            )
        log_step_event("suites", "sampled", suite="oracle-equivalence", N=n, words=per_length)

    for n in range(1, BM_PROFILE_N + 1):
        table = linear_complexity_table(n, threads)
        for value in range(1 << n):
            w = FiniteWord(value, n)
            profile = bm_profile(w)
            legal = all(
                b in (a, i + 1 - a) for i, (a, b) in enumerate(zip([0] + profile.entries, profile.entries))
            )
            report.check(legal, f"illegal jump in profile of {w.to_text()}: {profile.to_text()}")
            report.check(
                satisfies_recurrence(w, profile.recurrence),
                f"recurrence does not generate {w.to_text()}",
            )
            report.check(int(table[value]) == profile.final, f"vectorised L disagrees on {w.to_text()}")
            if n <= BM_EXHAUSTIVE_N:
                report.check(
                    shortest_recurrence_bruteforce(w) == profile.final,
                    f"Berlekamp-Massey disagrees with search on {w.to_text()}",
                )


def _counting(report: SuiteReport, threads: int) -> None:
    for n in range(1, COUNTING_N + 1):
        counts = count_by_linear_complexity(n, threads)
        report.check(
            all(c == linear_count_formula(n, l) for l, c in counts.items()),
            f"word counts by L disagree with the formula at N={n}",
        )
        row = enumerate_expectations(n, ["linexp"], threads)
        closed = linexp_closed_form(n)
        report.check(row.e_linexp == closed, f"E_linexp {row.e_linexp} != closed form {closed} at N={n}")
        report.check(
            closed - linexp_proof_expression(n) == Fraction(1, 1 << n),
            f"closed form minus the asymptotic expression is not 2^-N at N={n}",
        )
        weighted = sum(linear_count_formula(n, l) << l for l in range(n + 1))
        report.check(weighted == closed * (1 << n), f"sum of A_N(L) 2^L != 2^N E_linexp at N={n}")
    for w in range(9):
        m_of_w(w)
        report.checks += 1
    for n in LIN_MEAN_N:
        if n > get_config().expectation.max_n:
            report.notes.append(f"E_lin checked up to N={n - 1} (expectation.max_n)")
            break
        row = enumerate_expectations(n, ["lin"], threads)
        report.check(
            abs(row.e_lin - Fraction(n, 2)) <= 1,
            f"E_lin {float(row.e_lin):.4f} is not within 1 of N/2 at N={n}",
        )


def _bounds(report: SuiteReport, threads: int) -> None:
    for n in BOUNDS_N:
        row = enumerate_expectations(n, ["rat", "linexp"], threads)
        constants = proof_constants(n)
        report.check(
            row.difference("rat") >= constants.rational_bound,
            f"N={n}: rational gap {float(row.difference('rat')):.4f} < M1+M2 "
            f"{float(constants.rational_bound):.4f}",
        )
        report.check(
            row.difference("linexp") >= constants.linexp_bound,
            f"N={n}: linexp gap {float(row.difference('linexp')):.4f} < K1+K2 "
            f"{float(constants.linexp_bound):.4f}",
        )
        rev = bit_reversal_index(n)
        norms = norm_table(n, threads).astype(np.int64)
        # |a - b| = (a + b) - 2 min(a, b), so the pair sum is the gap times 2^N
        report.check(
            Fraction(reversal_pair_difference(norms, rev), 1 << n) == row.difference("rat"),
            f"N={n}: reversal-pair sum disagrees with the rational gap",
        )
        powers = np.left_shift(np.int64(1), linear_complexity_table(n, threads).astype(np.int64))
        report.check(
            Fraction(reversal_pair_difference(powers, rev), 1 << n) == row.difference("linexp"),
            f"N={n}: reversal-pair sum disagrees with the linexp gap",
        )


def _reference(report: SuiteReport, threads: int) -> None:
    for mode, name in (("pp", "reversible-primes"), ("pc", "reversible-composites")):
        check = check_pairs(enumerate_reversible_pairs(2, 8, mode), name, 2, 8)
        report.checks += check.checked
        report.failures.extend(check.mismatches)
        report.notes.extend(check.warnings)
    for rows, name in ((table3(12, threads=threads), "rational-gap"), (table4(14, threads=threads), "linexp-gap")):
        check = check_gaps(rows, name)
        report.checks += check.checked
        report.failures.extend(check.mismatches)


SUITES: dict[str, SuiteDef] = {
    "lin-eq-sym": SuiteDef("L(S) == L(S^rev) for periodic sequences", _lin_eq_sym),
    "mersenne": SuiteDef("maximal 2-adic complexity for Mersenne-prime periods", _mersenne),
    "prime-construction": SuiteDef("prime-prefix construction for every tabulated prime", _prime_construction),
    "families": SuiteDef("claims of every construction family", _families),
    "oracle-equivalence": SuiteDef("fast paths against exhaustive oracles", _oracle_equivalence),
    "counting": SuiteDef("counts by linear complexity and the closed forms", _counting),
    "bounds": SuiteDef("expectation gaps against the family lower bounds", _bounds),
    "reference": SuiteDef("published tables", _reference),
}


def run_suite(name: str, threads: int = 1) -> SuiteReport:
    """Run one suite; property failures raised inside it are recorded, not raised."""
    if name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = SuiteReport(suite=name)
    run = timed_step(f"suite.{name}")(SUITES[name].run)
    try:
        run(report, threads)
    except PropertyFailure as e:
        report.failures.append(str(e))
    log_step_event(
        "suites", "finished", suite=name, checks=report.checks, failures=len(report.failures)
    )
    return report
