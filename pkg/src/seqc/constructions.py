"""Explicit sequence families and the claims made about each of them.

Every family has a builder, which validates parameters and returns the
word or periodic sequence, and a verifier, which recomputes the relevant
measures and checks each stated (in)equality separately.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field

from seqc.aperiodic import bm_profile, linear_complexity_N, rational_complexity_fast
from seqc.bitseq import FiniteWord, PeriodicSequence, from_natural, reverse
from seqc.errors import PreconditionError
from seqc.numtheory import is_prime, mult_order_2
from seqc.periodic import (
    adic_symmetric_periodic,
    prime_prefix_vector,
    find_valid_T,
    palindromic_core_value,
    verify_l_sequence_reversal,
    verify_palindromic_core,
    verify_prime_construction,
)
from seqc.schemas import ClaimResult, FamilyReport

logger = logging.getLogger("seqc.constructions")

FamilyName = Literal[
    "small-prime",
    "prime-prefix",
    "zero-run",
    "one-run",
    "zero-run-linear",
    "one-run-linear",
    "l-sequence-reversal",
    "palindrome-shifted",
    "palindrome-padded",
]

Built = Union[FiniteWord, PeriodicSequence]

L_SEQUENCE_VALUE = 220752
L_SEQUENCE_PERIOD = 18


class FamilySpec(BaseModel):
    """A family name with its integer (and tail) parameters."""

    family: FamilyName
    parameters: dict[str, Union[int, str]] = Field(default_factory=dict)

    @classmethod
    def from_pairs(cls, family: str, pairs: list[str]) -> "FamilySpec":
        """Parse ``key=value`` pairs; integers where they parse, text otherwise (tails)."""
        if family not in FAMILIES:
            raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
        params: dict[str, Union[int, str]] = {}
        for pair in pairs:
            key, sep, raw = pair.partition("=")
            if not sep or not key:
                raise PreconditionError(f"expected key=value, got {pair!r}")
            if key == "tail":
                params[key] = raw
                continue
            try:
                params[key] = int(raw, 0)
            except ValueError:
                raise PreconditionError(f"parameter {key} must be an integer, got {raw!r}")
        spec = cls(family=family, parameters=params)
        build(spec)
        return spec

    def get(self, name: str, default: Optional[int] = None) -> int:
        value = self.parameters.get(name, default)
        if value is None:
            raise PreconditionError(f"family {self.family} needs parameter {name}")
        if not isinstance(value, int):
            raise PreconditionError(f"parameter {name} must be an integer, got {value!r}")
        return value

    def tail(self, length: int) -> FiniteWord:
        """Tail bits s_{k+1}..s_{N-1}; all zeros when not given."""
        raw = self.parameters.get("tail", "0" * length)
        if isinstance(raw, int):
            return from_natural(raw, length)
        if len(raw) != length or set(raw) - {"0", "1"}:
            raise PreconditionError(f"tail must be {length} bits of 0/1, got {raw!r}")
        return FiniteWord.from_bits(int(c) for c in raw)


@dataclass
class FamilyDef:
    """Builder, verifier and a one-line description of a family."""

    description: str
    parameters: tuple[str, ...]
    builder: Callable[[FamilySpec], Built]
    verifier: Callable[[FamilySpec, Built], list[ClaimResult]]


def random_tail(length: int, seed: int) -> str:
    """Reproducible random tail bits."""
    rng = np.random.default_rng(seed)
    return "".join(str(int(b)) for b in rng.integers(0, 2, size=length))


def iter_tails(length: int) -> Iterator[str]:
    """All tails of the given length in lexicographic order."""
    for bits in product("01", repeat=length):
        yield "".join(bits)


def _claim(name: str, passed: bool, informational: bool = False, **values) -> ClaimResult:
    detail = ", ".join(f"{k}={v}" for k, v in values.items())
    return ClaimResult(name=name, passed=bool(passed), detail=detail, informational=informational, values=values)


# --- periodic families ---


def _build_small_prime(spec: FamilySpec) -> PeriodicSequence:
    t = spec.get("T")
    if t < 4:
        raise PreconditionError(f"small-prime needs T >= 4, got {t}")
    if t % 12 != 0 or t % 10 == 0:
        raise PreconditionError(f"small-prime needs T == 0 mod 12 and T != 0 mod 10, got {t}")
    return PeriodicSequence(from_natural(11, t))


def _verify_small_prime(spec: FamilySpec, seq: PeriodicSequence) -> list[ClaimResult]:
    t = seq.period
    forward, backward, _ = adic_symmetric_periodic(seq)
    modulus = (1 << t) - 1
    return [
        _claim("value", seq.initial.value == 11, value=seq.initial.value),
        _claim(
            "reverse value",
            backward.value == 13 << (t - 4),
            reverse_value=backward.value,
            expected=13 << (t - 4),
        ),
        _claim("maximal", forward.connection == modulus, connection=forward.connection),
        _claim(
            "gap is log2(13)",
            forward.connection == 13 * backward.connection,
            connection=forward.connection,
            connection_rev=backward.connection,
        ),
    ]


def _prime_prefix_period(spec: FamilySpec) -> int:
    p = spec.get("p")
    t = spec.parameters.get("T")
    return find_valid_T(p) if t is None else spec.get("T")


def _build_prime_prefix(spec: FamilySpec) -> PeriodicSequence:
    p = spec.get("p")
    t = _prime_prefix_period(spec)
    # recomputes orders and rejects T outside the order conditions
    verify_prime_construction(p, t)
    return PeriodicSequence(prime_prefix_vector(p, t))


def _verify_prime_prefix(spec: FamilySpec, seq: PeriodicSequence) -> list[ClaimResult]:
    report = verify_prime_construction(spec.get("p"), seq.period)
    modulus = (1 << report.T) - 1
    return [
        _claim("maximal", report.connection == modulus, connection=report.connection, T=report.T),
        _claim(
            "gap is log2(q)",
            report.connection == report.q * report.connection_rev,
            q=report.q,
            connection_rev=report.connection_rev,
        ),
        _claim(
            "order conditions",
            report.T % report.ord_q == 0 and report.T % report.ord_p != 0,
            ord_p=report.ord_p,
            ord_q=report.ord_q,
        ),
    ]


def _build_l_sequence(spec: FamilySpec) -> PeriodicSequence:
    t = spec.get("T", L_SEQUENCE_PERIOD)
    value = spec.get("value", L_SEQUENCE_VALUE)
    return PeriodicSequence(from_natural(value, t))


def _verify_l_sequence(spec: FamilySpec, seq: PeriodicSequence) -> list[ClaimResult]:
    report = verify_l_sequence_reversal(seq.initial.value, seq.period)
    r = report.connection
    is_l_sequence = r > 2 and is_prime(r) and mult_order_2(r) == r - 1 and seq.period % (r - 1) == 0
    claims = [
        _claim("connection is a prime with 2 primitive", is_l_sequence, connection=r),
        _claim(
            "reversal has larger connection",
            report.reversal_larger,
            connection=r,
            connection_rev=report.connection_rev,
        ),
        _claim(
            "connection divides reversal's",
            report.ratio is not None,
            informational=True,
            ratio=None if report.ratio is None else str(report.ratio),
        ),
    ]
    if seq.initial.value == L_SEQUENCE_VALUE and seq.period == L_SEQUENCE_PERIOD:
        claims.append(
            _claim(
                "published values",
                report.reverse_value == 10731 and r == 19 and report.connection_rev == 171,
                reverse_value=report.reverse_value,
            )
        )
    return claims


def _build_palindrome(variant: Literal["A", "B"]) -> Callable[[FamilySpec], PeriodicSequence]:
    def builder(spec: FamilySpec) -> PeriodicSequence:
        t = spec.get("T")
        value = palindromic_core_value(spec.get("q_pal"), spec.get("k"), t, variant)
        return PeriodicSequence(from_natural(value, t))

    return builder


def _verify_palindrome(variant: Literal["A", "B"]) -> Callable[[FamilySpec, PeriodicSequence], list[ClaimResult]]:
    def verifier(spec: FamilySpec, seq: PeriodicSequence) -> list[ClaimResult]:
        q_pal, k = spec.get("q_pal"), spec.get("k")
        report = verify_palindromic_core(q_pal, k, seq.period, variant, spec.get("shift", 0))
        expected = q_pal << k if variant == "A" else (1 << k) - 1 + (q_pal << k)
        return [
            _claim("value", report.value == expected, value=report.value, expected=expected),
            _claim(
                "stated reverse value",
                report.identity_holds,
                informational=variant == "B",
                reverse_value=report.reverse_value,
                stated=report.stated_reverse_value,
            ),
            _claim(
                "lambda equals reversal's",
                report.lambda_equal,
                connection=report.connection,
                connection_rev=report.connection_rev,
                shift=report.shift,
            ),
        ]

    return verifier


# --- finite-word families ---


def _run_word(spec: FamilySpec, lead: int) -> FiniteWord:
    """``k`` copies of ``lead``, the other bit, then the tail."""
    n, k = spec.get("N"), spec.get("k")
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k={k} must satisfy 1 <= k <= N-1 = {n - 1}")
    head = FiniteWord.ones(k) if lead else FiniteWord.zeros(k)
    marker = FiniteWord(1 - lead, 1)
    return head.concat(marker).concat(spec.tail(n - k - 1))


def _build_zero_run(spec: FamilySpec) -> FiniteWord:
    n, k = spec.get("N"), spec.get("k")
    if 2 * k < n:
        raise PreconditionError(f"zero-run needs k >= N/2, got k={k}, N={n}")
    return _run_word(spec, 0)


def _build_one_run(spec: FamilySpec) -> FiniteWord:
    n, k = spec.get("N"), spec.get("k")
    if 2 * k < n + 1:
        raise PreconditionError(f"one-run needs k >= (N+1)/2, got k={k}, N={n}")
    return _run_word(spec, 1)


def _verify_zero_run(spec: FamilySpec, w: FiniteWord) -> list[ClaimResult]:
    n, k = w.length, spec.get("k")
    full = rational_complexity_fast(w).norm
    rev = reverse(w)
    backward = rational_complexity_fast(rev).norm
    f = rev.value
    sym = min(full, backward)
    return [
        _claim("Lambda(S) = 2^k", full == 1 << k, Lambda=full),
        _claim("Lambda(S^rev) <= f", backward <= f, Lambda_rev=backward, f=f),
        _claim("f < 2^(N-k) <= 2^(N/2)", f < 1 << (n - k) and 2 * (n - k) <= n, f=f),
        _claim(
            "Lambda_sym = Lambda(S^rev) < 2^(N/2) <= Lambda(S)",
            sym == backward and backward * backward < 1 << n and 1 << n <= full * full,
            Lambda_sym=sym,
        ),
    ]


def _verify_one_run(spec: FamilySpec, w: FiniteWord) -> list[ClaimResult]:
    n, k = w.length, spec.get("k")
    full = rational_complexity_fast(w).norm
    prefix = rational_complexity_fast(w.prefix(k + 1)).norm
    backward = rational_complexity_fast(reverse(w)).norm
    bound = 1 << (n - k)
    return [
        _claim("Lambda(S_(k+1)) >= 2^(k-1) + 1", prefix >= (1 << (k - 1)) + 1, Lambda_prefix=prefix),
        _claim("Lambda(S) >= Lambda(S_(k+1))", full >= prefix, Lambda=full),
        _claim("Lambda(S^rev) <= 2^(N-k) < Lambda(S)", backward <= bound < full, Lambda_rev=backward),
        _claim("Lambda_sym <= 2^(N-k)", min(full, backward) <= bound, Lambda_sym=min(full, backward)),
    ]


def _verify_zero_run_linear(spec: FamilySpec, w: FiniteWord) -> list[ClaimResult]:
    n, k = w.length, spec.get("k")
    profile = bm_profile(w).entries
    full = profile[-1]
    backward = linear_complexity_N(reverse(w))
    sym = min(full, backward)
    return [
        _claim("L(S_k) = 0", profile[k - 1] == 0, L_k=profile[k - 1]),
        _claim("L(S) >= L(S_(k+1)) = k + 1", profile[k] == k + 1 and full >= k + 1, L=full),
        _claim("L(S^rev) <= N - k", backward <= n - k, L_rev=backward),
        _claim(
            "2^L - 2^L_sym >= 2^(k+1) - 2^(N-k)",
            (1 << full) - (1 << sym) >= (1 << (k + 1)) - (1 << (n - k)),
            L_sym=sym,
        ),
    ]


def _verify_one_run_linear(spec: FamilySpec, w: FiniteWord) -> list[ClaimResult]:
    n, k = w.length, spec.get("k")
    profile = bm_profile(w).entries
    full = profile[-1]
    backward = linear_complexity_N(reverse(w))
    sym = min(full, backward)
    return [
        _claim("L(S_k) = 1", profile[k - 1] == 1, L_k=profile[k - 1]),
        _claim("L(S) >= L(S_(k+1)) = k", profile[k] == k and full >= k, L=full),
        _claim("L(S^rev) <= N - k + 1", backward <= n - k + 1, L_rev=backward),
        _claim(
            "2^L - 2^L_sym >= 2^k - 2^(N-k+1)",
            (1 << full) - (1 << sym) >= (1 << k) - (1 << (n - k + 1)),
            L_sym=sym,
        ),
    ]


FAMILIES: dict[str, FamilyDef] = {
    "small-prime": FamilyDef(
        "period-T sequence with initial value 11", ("T",), _build_small_prime, _verify_small_prime
    ),
    "prime-prefix": FamilyDef(
        "non-palindromic prime p padded with zeros to period T",
        ("p", "T"),
        _build_prime_prefix,
        _verify_prime_prefix,
    ),
    "zero-run": FamilyDef(
        "k zeros, a one, then a tail", ("N", "k", "tail"), _build_zero_run, _verify_zero_run
    ),
    "one-run": FamilyDef(
        "k ones, a zero, then a tail", ("N", "k", "tail"), _build_one_run, _verify_one_run
    ),
    "zero-run-linear": FamilyDef(
        "zero-run word under linear complexity",
        ("N", "k", "tail"),
        _build_zero_run,
        _verify_zero_run_linear,
    ),
    "one-run-linear": FamilyDef(
        "one-run word under linear complexity",
        ("N", "k", "tail"),
        _build_one_run,
        _verify_one_run_linear,
    ),
    "l-sequence-reversal": FamilyDef(
        "period-18 l-sequence with connection 19 and its reversal",
        ("value", "T"),
        _build_l_sequence,
        _verify_l_sequence,
    ),
    "palindrome-shifted": FamilyDef(
        "2^k times an odd palindrome filling the top T-k bits",
        ("q_pal", "k", "T", "shift"),
        _build_palindrome("A"),
        _verify_palindrome("A"),
    ),
    "palindrome-padded": FamilyDef(
        "k ones followed by an odd palindrome",
        ("q_pal", "k", "T", "shift"),
        _build_palindrome("B"),
        _verify_palindrome("B"),
    ),
}


def build(spec: FamilySpec) -> Built:
    """The word or periodic sequence of the family, after precondition checks."""
    return FAMILIES[spec.family].builder(spec)


def reversed_spec(spec: FamilySpec) -> FamilySpec:
    """Spec of the reversed sequence.

    Only l-sequence-reversal takes the sequence itself as a parameter, so it
    is the one family closed under reversal.
    """
    if spec.family != "l-sequence-reversal":
        raise PreconditionError(f"{spec.family} is not closed under reversal")
    seq = build(spec)
    return FamilySpec(family=spec.family, parameters={"value": seq.reversed().initial.value, "T": seq.period})


def verify_family(spec: FamilySpec) -> FamilyReport:
    """Build the sequence and check each claim of its family."""
    family = FAMILIES[spec.family]
    built = family.builder(spec)
    claims = family.verifier(spec, built)
    periodic = isinstance(built, PeriodicSequence)
    word = built.initial if periodic else built
    report = FamilyReport(
        family=spec.family,
        parameters=dict(spec.parameters),
        sequence=word.to_text(),
        periodic=periodic,
        claims=claims,
    )
    for claim in claims:
        if not claim.passed and not claim.informational:
            logger.warning("%s: claim failed: %s (%s)", spec.family, claim.name, claim.detail)
    return report

