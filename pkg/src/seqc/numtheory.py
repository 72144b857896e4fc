"""Integer utilities: gcd, orders of 2, primality, base-2 reversal and reversible pairs."""

import logging
import math
import random
from functools import lru_cache

import gmpy2

from seqc.config import get_config
from seqc.errors import PreconditionError
from seqc.observability import timed_step
from seqc.schemas import ReversiblePair, ThetaReport

logger = logging.getLogger("seqc.numtheory")

DETERMINISTIC_PRIME_BOUND = 1 << 64
GMP_THRESHOLD = 1 << 64

# Strong-pseudoprime bases that are deterministic below each bound
_MR_BASES = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (DETERMINISTIC_PRIME_BOUND, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals, not both zero."""
    if a < 0 or b < 0:
        raise PreconditionError("gcd arguments must be non-negative")
    if a == 0 and b == 0:
        raise PreconditionError("gcd(0, 0) is undefined")
    return int(gmpy2.gcd(a, b))


def powmod(a: int, b: int, c: int) -> int:
    """(a ** b) % c, delegating to gmpy2 for operands of 64 bits and more."""
    if max(a, b, c) < GMP_THRESHOLD:
        return pow(a, b, c)
    return int(gmpy2.powmod(a, b, c))


def _strong_probable_prime(n: int, d: int, r: int, a: int) -> bool:
    x = powmod(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def primality(n: int) -> tuple[bool, bool]:
    """Primality of ``n`` as ``(is_prime, probabilistic)``.

    Deterministic below 2^64; above that a seeded randomized test whose
    error is below 4^-rounds, with ``probabilistic`` set.
    """
    if n < 2:
        return False, False
    for p in _SMALL_PRIMES:
        if n == p:
            return True, False
        if n % p == 0:
            return False, False

    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1

    if n < DETERMINISTIC_PRIME_BOUND:
        bases = next(b for bound, b in _MR_BASES if n < bound)
        return all(_strong_probable_prime(n, d, r, a) for a in bases), False

    config = get_config().primality
    rng = random.Random(config.seed ^ n.bit_length())
    for _ in range(config.rounds):
        if not _strong_probable_prime(n, d, r, rng.randrange(2, n - 1)):
            return False, False
    return True, True


def is_prime(n: int) -> bool:
    """True iff ``n`` is prime (see :func:`primality` for the large-n caveat)."""
    return primality(n)[0]


def _pollard_rho(n: int, budget: int) -> int | None:
    """A non-trivial factor of odd composite ``n``, or None when the budget runs out."""
    for c in range(1, 20):
        x = y = 2
        d = 1
        steps = 0
        while d == 1 and steps < budget:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = int(gmpy2.gcd(abs(x - y), n))
            steps += 1
        if 1 < d < n:
            return d
        if steps >= budget:
            return None
    return None


def factorize(n: int, budget: int | None = None) -> dict[int, int] | None:
    """Prime factorization as ``{prime: exponent}``, or None if the budget is exceeded."""
    if n < 1:
        raise PreconditionError(f"cannot factor {n}")
    if budget is None:
        budget = get_config().order.factor_budget
    factors: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = _pollard_rho(m, budget)
        if d is None:
            logger.warning("factoring budget exceeded for a %d-bit cofactor", m.bit_length())
            return None
        stack += [d, m // d]
    return factors


def _carmichael(factors: dict[int, int]) -> int:
    lam = 1
    for p, e in factors.items():
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def mult_order_2(m: int) -> int:
    """Smallest o >= 1 with 2^o == 1 (mod m), for odd m >= 3."""
    if m < 3 or m % 2 == 0:
        raise PreconditionError(f"multiplicative order of 2 needs odd m >= 3, got {m}")
    loop_limit = get_config().order.loop_limit

    if m < loop_limit:
        o, x = 1, 2
        while x != 1:
            x = (x << 1) % m
            o += 1
        return o

    factors = factorize(m)
    if factors is not None:
        exponent = _carmichael(factors)
        exponent_factors = factorize(exponent)
        if exponent_factors is not None:
            o = exponent
            for r in exponent_factors:
                while o % r == 0 and powmod(2, o // r, m) == 1:
                    o //= r
            assert o <= m - 1
            return o

    logger.warning("falling back to the doubling loop for a %d-bit modulus", m.bit_length())
    o, x = 1, 2
    while x != 1:
        if o >= loop_limit:
            raise PreconditionError(
                f"order of 2 modulo a {m.bit_length()}-bit integer not found within "
                f"{loop_limit} steps"
            )
        x = (x << 1) % m
        o += 1
    return o


def is_order_minimal(o: int, m: int) -> bool:
    """2^o == 1 (mod m) and 2^(o/r) != 1 for every prime r dividing o."""
    if powmod(2, o, m) != 1:
        return False
    factors = factorize(o) or {}
    return all(powmod(2, o // r, m) != 1 for r in factors)


def reverse_bits(p: int) -> int:
    """Reverse the base-2 digit string of odd ``p``."""
    if p < 1 or p % 2 == 0:
        raise PreconditionError(f"base-2 reversal needs an odd positive integer, got {p}")
    return int(format(p, "b")[::-1], 2)


def is_palindromic(p: int) -> bool:
    """True iff odd ``p`` equals its base-2 reversal."""
    return reverse_bits(p) == p


def _check_bit_range(t_min: int, t_max: int, upper: int) -> None:
    if not 2 <= t_min <= t_max <= upper:
        raise PreconditionError(
            f"bit lengths must satisfy 2 <= t_min <= t_max <= {upper}, got {t_min}..{t_max}"
        )


def _odd_candidates(t: int) -> range:
    """Odd integers strictly between 2^(t-1) and 2^t."""
    return range((1 << (t - 1)) + 1, 1 << t, 2)


@timed_step("numtheory.pairs")
def enumerate_reversible_pairs(t_min: int, t_max: int, mode: str) -> list[ReversiblePair]:
    """Primes p with t_min..t_max bits and their base-2 reversals q.

    ``prime-prime`` keeps pairs with q prime and p < q.
    ``prime-composite`` keeps every prime p whose reversal is composite.
    """
    _check_bit_range(t_min, t_max, 64)
    match mode:
        case "prime-prime" | "pp":
            want_prime_q = True
        case "prime-composite" | "pc":
            want_prime_q = False
        case _:
            raise PreconditionError(f"unknown pair mode {mode!r}")

    pairs: list[ReversiblePair] = []
    for t in range(t_min, t_max + 1):
        for p in _odd_candidates(t):
            p_prime, p_prob = primality(p)
            if not p_prime:
                continue
            q = reverse_bits(p)
            if q == p:
                continue
            q_prime, q_prob = primality(q)
            if want_prime_q and not (q_prime and p < q):
                continue
            if not want_prime_q and q_prime:
                continue
            pairs.append(
                ReversiblePair(
                    p=p,
                    q=q,
                    ord_p=mult_order_2(p),
                    ord_q=mult_order_2(q),
                    q_is_prime=q_prime,
                    probabilistic=p_prob or q_prob,
                )
            )
    logger.debug("found %d %s pairs for %d..%d bits", len(pairs), mode, t_min, t_max)
    return pairs


@lru_cache(maxsize=None)
def _palindromes(t: int) -> tuple[int, ...]:
    """All odd t-bit palindromes, built from their first half."""
    if t == 1:
        return (1,)
    half = (t + 1) // 2
    result = []
    # leading and trailing bits are 1; choose the inner digits of the first half
    for inner in range(1 << max(half - 1, 0)):
        first = format((1 << (half - 1)) | inner, f"0{half}b") if half > 1 else "1"
        mirrored = first[: t // 2][::-1]
        result.append(int(first + mirrored, 2))
    return tuple(sorted(set(result)))


def count_palindromic_primes(t: int) -> int:
    """Number of palindromic primes with exactly t bits; never more than 2^(t/2)."""
    _check_bit_range(t, t, 40)
    count = sum(1 for p in _palindromes(t) if 1 << (t - 1) < p and is_prime(p))
    assert count <= 2 ** (t / 2)
    return count


def theta(t: int) -> ThetaReport:
    """Count t-bit primes whose base-2 reversal is also prime.

    Palindromic primes are included and every prime is counted once, so a
    pair p != q contributes 2.
    """
    _check_bit_range(t, t, 40)
    count = 0
    palindromic = 0
    for p in _odd_candidates(t):
        if not is_prime(p):
            continue
        q = reverse_bits(p)
        if q == p:
            palindromic += 1
            count += 1
        elif is_prime(q):
            count += 1
    return ThetaReport(
        t=t,
        count=count,
        palindromic=palindromic,
        heuristic=3 * 2 ** (t - 1) / t**2,
    )
