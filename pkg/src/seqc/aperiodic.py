"""Finite-word measures: rational complexity, 2-adic complexity, linear complexity.

Rational complexity of S_N:
    Lambda(S_N) = min max(q, |f|) over odd q > 0 with q * S_N(2) == f (mod 2^N)
and lambda(S_N) = log2(Lambda(S_N)).

Linear complexity L(S_N) is the length of the shortest recurrence
sum_{l=0}^{L} c_l s_{n+l} = 0 (c_L = 1) generating the word, found with
Berlekamp-Massey.
"""

import logging
import math
from typing import Optional

from seqc.bitseq import FiniteWord, reverse
from seqc.config import get_config
from seqc.errors import PreconditionError
from seqc.schemas import ComplexityProfile, RationalApproximation

logger = logging.getLogger("seqc.aperiodic")

Vector = tuple[int, int]


def _require_nonempty(w: FiniteWord, minimum: int = 1) -> None:
    if w.length < minimum:
        raise PreconditionError(f"word length must be at least {minimum}, got {w.length}")


def least_residue(x: int, n: int) -> int:
    """Representative of x mod 2^n in (-2^(n-1), 2^(n-1)]."""
    r = x & ((1 << n) - 1)
    if r > 1 << (n - 1):
        r -= 1 << n
    return r


def rational_complexity(w: FiniteWord) -> RationalApproximation:
    """Exact rational complexity by scanning odd q upwards.

    For each q the best f is the least residue of q*s. The scan stops once
    q reaches the best norm, since every later candidate has norm >= q.
    The witness has the smallest q among minimizers.
    """
    _require_nonempty(w)
    n, s = w.length, w.value
    best_q, best_f = 1, least_residue(s, n)
    best_norm = max(1, abs(best_f))
    q = 3
    while q < best_norm:
        f = least_residue(q * s, n)
        norm = max(q, abs(f))
        if norm < best_norm:
            best_q, best_f, best_norm = q, f, norm
        q += 2
    return RationalApproximation(q=best_q, f=best_f, norm=best_norm)


def _dot(u: Vector, v: Vector) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _gauss_reduce(u: Vector, v: Vector) -> tuple[Vector, Vector]:
    """Lagrange-Gauss reduction: |b1| <= |b2| and |<b1,b2>| <= |b1|^2 / 2."""
    if _dot(u, u) > _dot(v, v):
        u, v = v, u
    while True:
        uu = _dot(u, u)
        m = (2 * _dot(u, v) + uu) // (2 * uu)  # nearest integer to <u,v>/<u,u>
        v = (v[0] - m * u[0], v[1] - m * u[1])
        if _dot(v, v) >= uu:
            return u, v
        u, v = v, u


class _Best:
    """Smallest sup norm seen so far, ties broken towards smaller q."""

    def __init__(self, s: int, n: int):
        self.s, self.n = s, n
        self.q, self.f = 1, least_residue(s, n)
        self.norm = max(1, abs(self.f))

    def offer(self, q: int) -> None:
        if q % 2 == 0:
            return
        q = abs(q)
        f = least_residue(q * self.s, self.n)
        norm = max(q, abs(f))
        if norm < self.norm or (norm == self.norm and q < self.q):
            self.q, self.f, self.norm = q, f, norm


def _breakpoints(b1: Vector, b2: Vector, b: int) -> list[tuple[int, int]]:
    """Kinks of a -> max(|a q1 + b q2|, |a f1 + b f2|), as (numerator, denominator)."""
    (q1, f1), (q2, f2) = b1, b2
    points = []
    if q1:
        points.append((-b * q2, q1))
    if f1:
        points.append((-b * f2, f1))
    if q1 != f1:
        points.append((b * (f2 - q2), q1 - f1))
    if q1 != -f1:
        points.append((-b * (q2 + f2), q1 + f1))
    return points


def rational_complexity_fast(w: FiniteWord, radius: Optional[int] = None) -> RationalApproximation:
    """Rational complexity through the lattice {(q, f) : f == q*s mod 2^N}.

    The basis (1, s), (0, 2^N) is Gauss-reduced and small combinations
    a*b1 + b*b2 with |a|, |b| <= radius give an upper bound B. Any vector
    beating B has |b| * 2^N / |b1| < sqrt(2) * B; for each such b the sup
    norm is convex in a, so only integers next to its kinks are tried.
    The norm is therefore exact; the witness is any minimizer found.
    """
    _require_nonempty(w)
    if radius is None:
        radius = get_config().fast_path.radius
    n, s = w.length, w.value
    det = 1 << n
    b1, b2 = _gauss_reduce((1, s), (0, det))
    best = _Best(s, n)

    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            best.offer(a * b1[0] + b * b2[0])

    b1_sq = _dot(b1, b1)
    b = 1
    while b * b * det * det < 2 * best.norm * best.norm * b1_sq:
        for num, den in _breakpoints(b1, b2, b):
            a0 = num // den
            for a in range(a0 - 2, a0 + 4):
                best.offer(a * b1[0] + b * b2[0])
        b += 1

    return RationalApproximation(q=best.q, f=best.f, norm=best.norm)


def adic_complexity_N(w: FiniteWord) -> float:
    """log2 of the rational complexity."""
    return math.log2(rational_complexity(w).norm)


def symmetric_rational_complexity(
    w: FiniteWord,
) -> tuple[RationalApproximation, RationalApproximation, int]:
    """Witnesses for ``w`` and its reversal, and the smaller norm."""
    _require_nonempty(w, minimum=2)
    forward = rational_complexity(w)
    backward = rational_complexity(reverse(w))
    return forward, backward, min(forward.norm, backward.norm)


def bm_profile(w: FiniteWord) -> ComplexityProfile:
    """Berlekamp-Massey in one pass, recording L(S_n) for n = 1..N.

    The connection polynomial C(x) = 1 + c_1 x + ... is kept as an int; the
    reported recurrence is its reciprocal so that the last coefficient is 1.
    """
    _require_nonempty(w)
    s = w.value
    c, b = 1, 1  # current and previous connection polynomials
    l, m = 0, 1
    entries = []
    for n in range(w.length):
        d = 0
        poly = c
        i = 0
        while poly and i <= l:
            if poly & 1:
                d ^= (s >> (n - i)) & 1
            poly >>= 1
            i += 1
        if d:
            if 2 * l <= n:
                prev = c
                c ^= b << m
                l = n + 1 - l
                b = prev
                m = 1
            else:
                c ^= b << m
                m += 1
        else:
            m += 1
        entries.append(l)
    recurrence = [(c >> (l - j)) & 1 for j in range(l + 1)]
    return ComplexityProfile(entries=entries, recurrence=recurrence)


def linear_complexity_N(w: FiniteWord) -> int:
    """Length of the shortest linear recurrence generating ``w``."""
    return bm_profile(w).final


def symmetric_linear_complexity_N(w: FiniteWord) -> int:
    """Smaller linear complexity of ``w`` and its reversal."""
    _require_nonempty(w)
    return min(linear_complexity_N(w), linear_complexity_N(reverse(w)))


def satisfies_recurrence(w: FiniteWord, recurrence: list[int]) -> bool:
    """True iff sum_l c_l s_{n+l} == 0 for n = 0..N-L-1 (c_L must be 1)."""
    l = len(recurrence) - 1
    if recurrence[-1] != 1:
        return False
    bits = w.bits
    for n in range(w.length - l):
        acc = 0
        for j, c in enumerate(recurrence):
            acc ^= c & bits[n + j]
        if acc:
            return False
    return True


def shortest_recurrence_bruteforce(w: FiniteWord) -> int:
    """Smallest L for which some recurrence with c_L = 1 generates ``w``.

    Tries every coefficient vector in increasing L; exponential, for tests.
    """
    bits = w.bits
    length = w.length
    for l in range(length + 1):
        for coeffs in range(1 << l):
            ok = True
            for n in range(length - l):
                acc = bits[n + l]
                for j in range(l):
                    if (coeffs >> j) & 1:
                        acc ^= bits[n + j]
                if acc:
                    ok = False
                    break
            if ok:
                return l
    return length
