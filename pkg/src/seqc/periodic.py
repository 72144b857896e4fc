"""Periodic-case measures and the checks built on them.

2-adic complexity of a T-periodic sequence:
    lambda(S) = log2((2^T - 1) / gcd(2^T - 1, S_T(2)))
Linear complexity:
    L(S) = deg((x^T - 1) / gcd(x^T - 1, S_T(x)))

All comparisons are made on the exact connection integers; ``lambda_bits``
is for display.
"""

import logging
from fractions import Fraction
from typing import Literal, Optional

import numpy as np

from seqc.bitseq import FiniteWord, PeriodicSequence, from_natural, reverse, rotate
from seqc.errors import PreconditionError
from seqc.gf2 import Gf2Poly
from seqc.numtheory import gcd, is_palindromic, is_prime, mult_order_2, reverse_bits
from seqc.observability import timed_step
from seqc.schemas import (
    LSequenceReport,
    PalindromicCoreReport,
    PeriodicAdicReport,
    PrimeConstructionReport,
    log2_exact,
)
from seqc.sweep import run_chunks

logger = logging.getLogger("seqc.periodic")

MERSENNE_EXHAUSTIVE_MAX_T = 17


def adic_periodic(p: PeriodicSequence) -> PeriodicAdicReport:
    """2-adic complexity report of a periodic sequence."""
    t = p.period
    modulus = (1 << t) - 1
    value = p.initial.value
    divisor = gcd(modulus, value)
    connection = modulus // divisor
    return PeriodicAdicReport(
        T=t,
        value=value,
        modulus=modulus,
        divisor=divisor,
        connection=connection,
        lambda_bits=log2_exact(connection),
    )


def adic_symmetric_periodic(
    p: PeriodicSequence,
) -> tuple[PeriodicAdicReport, PeriodicAdicReport, float]:
    """Reports for ``p`` and its reversal, and the smaller lambda."""
    forward = adic_periodic(p)
    backward = adic_periodic(p.reversed())
    smaller = forward if forward.connection <= backward.connection else backward
    return forward, backward, smaller.lambda_bits


def linear_complexity_periodic(p: PeriodicSequence) -> int:
    """Degree of (x^T - 1) / gcd(x^T - 1, S_T(x)) over GF(2)."""
    modulus = Gf2Poly.x_pow_minus_one(p.period)
    divisor = modulus.gcd(Gf2Poly.from_word(p.initial))
    return (modulus // divisor).degree


def verify_reverse_linear_equality(p: PeriodicSequence) -> bool:
    """L(S) == L(S^rev); a False result means a defect."""
    forward = linear_complexity_periodic(p)
    backward = linear_complexity_periodic(p.reversed())
    if forward != backward:
        logger.error("linear complexity differs under reversal: %s (%d vs %d)", p.initial, forward, backward)
    return forward == backward


def _require_non_palindromic_prime(p_prime: int) -> int:
    if p_prime < 3 or p_prime % 2 == 0 or not is_prime(p_prime):
        raise PreconditionError(f"{p_prime} is not an odd prime")
    if is_palindromic(p_prime):
        raise PreconditionError(f"{p_prime} is palindromic in base 2")
    return reverse_bits(p_prime)


def prime_prefix_vector(p_prime: int, t: int) -> FiniteWord:
    """Initial vector (s_0, ..., s_{t-1}, 0, ..., 0) with S_T(2) = p."""
    if t < p_prime.bit_length():
        raise PreconditionError(
            f"period {t} is shorter than the {p_prime.bit_length()} bits of {p_prime}"
        )
    return from_natural(p_prime, t)


def verify_prime_construction(p_prime: int, t: int) -> PrimeConstructionReport:
    """Check maximal complexity of the prime-prefix sequence and the log2(q) gap.

    The orders of 2 are recomputed here. ``ok`` holds iff
    connection(S) == 2^T - 1 and connection(S) == q * connection(S^rev).
    """
    q = _require_non_palindromic_prime(p_prime)
    ord_p = mult_order_2(p_prime)
    ord_q = mult_order_2(q)
    if t % ord_q != 0:
        raise PreconditionError(f"T={t} is not a multiple of ord_q(2)={ord_q} (q={q})")
    if t % ord_p == 0:
        raise PreconditionError(f"T={t} is a multiple of ord_p(2)={ord_p} (p={p_prime})")

    seq = PeriodicSequence(prime_prefix_vector(p_prime, t))
    forward, backward, _ = adic_symmetric_periodic(seq)
    modulus = (1 << t) - 1
    ok = forward.connection == modulus and forward.connection == q * backward.connection
    return PrimeConstructionReport(
        p=p_prime,
        q=q,
        T=t,
        ord_p=ord_p,
        ord_q=ord_q,
        connection=forward.connection,
        connection_rev=backward.connection,
        lambda_bits=forward.lambda_bits,
        lambda_rev_bits=backward.lambda_bits,
        ok=ok,
    )


def find_valid_T(p_prime: int, k_max: int = 64) -> int:
    """Smallest T = k * ord_q(2), 1 <= k <= k_max, with ord_p(2) not dividing T."""
    q = _require_non_palindromic_prime(p_prime)
    ord_p = mult_order_2(p_prime)
    ord_q = mult_order_2(q)
    if ord_q % ord_p == 0:
        raise PreconditionError(
            f"ord_p(2)={ord_p} divides ord_q(2)={ord_q}: no multiple of ord_q works for p={p_prime}"
        )
    t_bits = p_prime.bit_length()
    for k in range(1, k_max + 1):
        t = k * ord_q
        if t >= t_bits and t % ord_p != 0:
            return t
    raise PreconditionError(f"no valid period for p={p_prime} with k <= {k_max}")


def palindromic_core_value(q_pal: int, k: int, t: int, variant: Literal["A", "B"]) -> int:
    """S_T(2) of the palindromic-core vector, after range checks."""
    if q_pal < 1 or q_pal % 2 == 0 or not is_palindromic(q_pal):
        raise PreconditionError(f"{q_pal} is not an odd base-2 palindrome")
    if k < 0 or k >= t:
        raise PreconditionError(f"k={k} must satisfy 0 <= k < T={t}")
    match variant:
        case "A":
            if not (1 << (t - k - 1)) < q_pal < (1 << (t - k)):
                raise PreconditionError(
                    f"variant A needs 2^(T-k-1) < q_pal < 2^(T-k), got q_pal={q_pal}, T={t}, k={k}"
                )
            return q_pal << k
        case "B":
            if not q_pal < (1 << (t - k - 1)):
                raise PreconditionError(
                    f"variant B needs q_pal < 2^(T-k-1), got q_pal={q_pal}, T={t}, k={k}"
                )
            return (1 << k) - 1 + (q_pal << k)
        case _:
            raise PreconditionError(f"unknown variant {variant!r}")


def verify_palindromic_core(
    q_pal: int, k: int, t: int, variant: Literal["A", "B"], shift: int = 0
) -> PalindromicCoreReport:
    """Compare lambda of a palindromic-core vector (cyclically shifted) with its reversal.

    ``stated_reverse_value`` is the closed form q_pal (A) or
    q_pal + 2^(T-k)(2^k - 1) (B); ``identity_holds`` says whether the true
    reversal equals it. ``lambda_equal`` is the checked outcome.
    """
    value = palindromic_core_value(q_pal, k, t, variant)
    word = from_natural(value, t)
    reverse_value = reverse(word).value
    stated = q_pal if variant == "A" else q_pal + (((1 << k) - 1) << (t - k))

    shifted = PeriodicSequence(rotate(word, shift))
    forward, backward, _ = adic_symmetric_periodic(shifted)
    return PalindromicCoreReport(
        variant=variant,
        q_pal=q_pal,
        k=k,
        T=t,
        shift=shift,
        value=value,
        reverse_value=reverse_value,
        stated_reverse_value=stated,
        identity_holds=reverse_value == stated,
        connection=forward.connection,
        connection_rev=backward.connection,
        lambda_equal=forward.connection == backward.connection,
    )


def verify_l_sequence_reversal(value: int, t: int) -> LSequenceReport:
    """Connection integers of a periodic sequence and its reversal.

    ``ratio`` is connection(S^rev) / connection(S) when that is an integer.
    """
    seq = PeriodicSequence(from_natural(value, t))
    forward, backward, _ = adic_symmetric_periodic(seq)
    ratio: Optional[Fraction] = None
    if backward.connection % forward.connection == 0:
        ratio = Fraction(backward.connection, forward.connection)
    return LSequenceReport(
        T=t,
        value=value,
        reverse_value=seq.reversed().initial.value,
        connection=forward.connection,
        connection_rev=backward.connection,
        ratio=ratio,
        reversal_larger=backward.connection > forward.connection,
    )


def _coprime_chunk(start: int, stop: int, modulus: int) -> bool:
    values = np.arange(start, stop, dtype=np.int64)
    return bool(np.all(np.gcd(values, modulus) == 1))


@timed_step("periodic.mersenne")
def verify_mersenne_maximality(t: int, threads: int = 1) -> bool:
    """Every non-constant T-periodic sequence has connection integer 2^T - 1."""
    modulus = (1 << t) - 1
    if not is_prime(t) or not is_prime(modulus):
        raise PreconditionError(f"2^{t} - 1 is not a Mersenne prime")
    if t > MERSENNE_EXHAUSTIVE_MAX_T:
        raise PreconditionError(
            f"exhaustive check is limited to T <= {MERSENNE_EXHAUSTIVE_MAX_T}, got {t}"
        )
    # non-constant initial vectors are exactly the values 1 .. 2^T - 2
    results = run_chunks(_coprime_chunk, 1, modulus, threads, modulus)
    return all(results)
