"""Expected complexities over all words of length N.

Sums of Lambda, L and 2^L are exact integers turned into Fractions with
denominator 2^N; only the log-scale (2-adic) means are floats, summed in a
fixed pairwise order. Symmetric values read the reversed word's entry from
the same table through a bit-reversal index.
"""

import logging
import math
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

import numpy as np

from seqc.config import get_config
from seqc.errors import PreconditionError, PropertyFailure
from seqc.observability import timed_step
from seqc.schemas import (
    ALL_MEASURES,
    AsymptoticsRow,
    ExpectationRow,
    Measure,
    ProofConstants,
)
from seqc.sweep import bit_reversal_index, linear_complexity_table, norm_table, pairwise_sum

logger = logging.getLogger("seqc.expectation")

RATIONAL_GAP_MAX_N = 21
LINEXP_GAP_MAX_N = 22
COUNTING_MAX_N = 20


class GapRow(NamedTuple):
    """Ordinary minus symmetric expectation at one N."""

    N: int
    exact: Fraction
    rounded: str


def _check_n(n: int, low: int = 1, high: Optional[int] = None) -> None:
    if high is None:
        high = get_config().expectation.max_n
    if not low <= n <= high:
        raise PreconditionError(f"N must satisfy {low} <= N <= {high}, got {n}")


def _parse_measures(measures: Iterable[str] | None) -> tuple[Measure, ...]:
    if measures is None:
        return ALL_MEASURES
    chosen = []
    for m in measures:
        if m not in ALL_MEASURES:
            raise PreconditionError(f"unknown measure {m!r}; choose from {', '.join(ALL_MEASURES)}")
        chosen.append(m)
    return tuple(m for m in ALL_MEASURES if m in chosen)


def reversal_pair_difference(table: np.ndarray, rev: np.ndarray) -> int:
    """Sum of |v(w) - v(rev w)| over unordered pairs {w, rev w} with w != rev w.

    Equals sum(v) - sum(min(v, v o rev)); an independent route to the gaps.
    """
    idx = np.flatnonzero(np.arange(table.size) < rev)
    a = table[idx].astype(np.int64)
    b = table[rev[idx]].astype(np.int64)
    return int(np.abs(a - b).sum())


@timed_step("expectation.enumerate")
def enumerate_expectations(
    n: int, measures: Iterable[str] | None = None, threads: int = 1
) -> ExpectationRow:
    """Exact expectations over {0,1}^N for the requested measures and their symmetric forms."""
    _check_n(n)
    chosen = _parse_measures(measures)
    space = 1 << n
    rev = bit_reversal_index(n)
    row: dict = {"N": n}

    if "rat" in chosen or "2adic" in chosen:
        norms = norm_table(n, threads).astype(np.int64)
        sym = np.minimum(norms, norms[rev])
        if "rat" in chosen:
            row["e_rat"] = Fraction(int(norms.sum()), space)
            row["e_rat_sym"] = Fraction(int(sym.sum()), space)
        if "2adic" in chosen:
            row["e_2adic"] = pairwise_sum(np.log2(norms)) / space
            row["e_2adic_sym"] = pairwise_sum(np.log2(sym)) / space

    if "lin" in chosen or "linexp" in chosen:
        lc = linear_complexity_table(n, threads).astype(np.int64)
        lc_sym = np.minimum(lc, lc[rev])
        if "lin" in chosen:
            row["e_lin"] = Fraction(int(lc.sum()), space)
            row["e_lin_sym"] = Fraction(int(lc_sym.sum()), space)
        if "linexp" in chosen:
            row["e_linexp"] = Fraction(_exp_sum(lc, n), space)
            row["e_linexp_sym"] = Fraction(_exp_sum(lc_sym, n), space)

    return ExpectationRow(**row)


def _exp_sum(lc: np.ndarray, n: int) -> int:
    """Exact sum of 2^L over a table of linear complexities."""
    counts = np.bincount(lc, minlength=n + 1)
    return sum(int(c) << l for l, c in enumerate(counts))


def format_3dp(x: Fraction) -> str:
    """Round half-up to 3 decimals and drop trailing zeros ("23.8", "0.25")."""
    with localcontext() as ctx:
        ctx.prec = 50
        d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(
            Decimal("0.001"), rounding=ROUND_HALF_UP
        )
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _gap_rows(measure: Measure, n_min: int, n_max: int, threads: int) -> list[GapRow]:
    rows = []
    for n in range(n_min, n_max + 1):
        row = enumerate_expectations(n, [measure], threads)
        diff = row.difference(measure)
        rows.append(GapRow(n, diff, format_3dp(diff)))
    return rows


def table3(n_max: int, n_min: int = 2, threads: int = 1) -> list[GapRow]:
    """E_rat - E_rat_sym for N = n_min..n_max."""
    _check_n(n_max, 2, RATIONAL_GAP_MAX_N)
    _check_n(n_min, 2, n_max)
    return _gap_rows("rat", n_min, n_max, threads)


def table4(n_max: int, n_min: int = 2, threads: int = 1) -> list[GapRow]:
    """E_linexp - E_linexp_sym for N = n_min..n_max."""
    _check_n(n_max, 2, LINEXP_GAP_MAX_N)
    _check_n(n_min, 2, n_max)
    return _gap_rows("linexp", n_min, n_max, threads)


def linear_count_formula(n: int, l: int) -> int:
    """Number of length-n words with linear complexity exactly l."""
    if l == 0:
        return 1
    if not 1 <= l <= n:
        return 0
    return 1 << min(2 * l - 1, 2 * n - 2 * l)


def count_by_linear_complexity(n: int, threads: int = 1) -> dict[int, int]:
    """Enumerated number of words per linear complexity, checked against the formula."""
    _check_n(n, 1, COUNTING_MAX_N)
    counts = np.bincount(linear_complexity_table(n, threads).astype(np.int64), minlength=n + 1)
    result = {l: int(c) for l, c in enumerate(counts)}
    bad = [l for l, c in result.items() if c != linear_count_formula(n, l)]
    if bad or sum(result.values()) != 1 << n:
        raise PropertyFailure(f"word counts by linear complexity disagree at N={n}, L={bad}")
    return result


def m_of_w(w: int) -> int:
    """Number of words with linear complexity at most W (for W <= N/2)."""
    if w < 0:
        raise PreconditionError(f"W must be non-negative, got {w}")
    closed = (4 ** (w + 1) + 2) // 6
    partial = 1 + sum(1 << (2 * l - 1) for l in range(1, w + 1))
    if closed != partial:
        raise PropertyFailure(f"(4^(W+1)+2)/6 != partial count at W={w}")
    return closed


def linexp_closed_form(n: int) -> Fraction:
    """Exact E_linexp, including the zero word's term 2^-N."""
    if n < 1:
        raise PreconditionError(f"N must be at least 1, got {n}")
    half = n // 2
    total = 1
    total += sum(1 << (3 * l - 1) for l in range(1, half + 1))
    total += sum(1 << (2 * n - l) for l in range(half + 1, n + 1))
    return Fraction(total, 1 << n)


def linexp_growth_constant(n: int) -> tuple[Fraction, float]:
    """c with E_linexp = c 2^(N/2) + O(1): 11/7 for even N, 8 sqrt(2)/7 for odd N.

    Returned as the exact value of c * 2^(N/2) and the float c.
    """
    if n % 2 == 0:
        return Fraction(11, 7) * (1 << (n // 2)), 11 / 7
    return Fraction(8, 7) * (1 << ((n + 1) // 2)), 8 * math.sqrt(2) / 7


def linexp_proof_expression(n: int) -> Fraction:
    """c 2^(N/2) - 1 - (4/7) 2^-N, which leaves out the zero word."""
    scaled, _ = linexp_growth_constant(n)
    return scaled - 1 - Fraction(4, 7) / (1 << n)


def proof_constants(n: int) -> ProofConstants:
    """Exact lower-bound constants for the expectation gaps.

    m1 + m2 bounds E_rat - E_rat_sym (zero-run and one-run families);
    k1 + k2 bounds E_linexp - E_linexp_sym.
    """
    if n < 2:
        raise PreconditionError(f"N must be at least 2, got {n}")
    space = 1 << n
    lo = (n + 1) // 2  # ceil(N/2)
    lo_strict = (n + 2) // 2  # ceil((N+1)/2)

    m1 = Fraction(
        sum((1 << k) << (n - k - 1) for k in range(lo, n))
        - sum(range(1, 1 << (n // 2))),
        space,
    )
    m1_closed = Fraction(n - 2, 4) + Fraction(1, 1 << (lo + 1))
    if m1 != m1_closed:
        raise PropertyFailure(f"M1 defining sum {m1} != closed form {m1_closed} at N={n}")

    m2 = Fraction(
        sum((1 << (n - k - 1)) * ((1 << (k - 1)) + 1 - (1 << (n - k))) for k in range(lo_strict, n)),
        space,
    )
    k1 = Fraction(
        sum((1 << (n - 1 - k)) * ((1 << (k + 1)) - (1 << (n - k))) for k in range(lo, n)),
        space,
    )
    k2 = Fraction(
        sum((1 << (n - k - 1)) * ((1 << k) - (1 << (n - k + 1))) for k in range(lo_strict, n)),
        space,
    )
    if n <= 24 and abs(k1 - Fraction(n, 2)) > 2:
        raise PropertyFailure(f"K1={float(k1):.3f} is not within 2 of N/2 at N={n}")
    return ProofConstants(N=n, m1=m1, m1_closed=m1_closed, m2=m2, k1=k1, k2=k2)


def asymptotics_report(n_min: int, n_max: int, threads: int = 1) -> list[AsymptoticsRow]:
    """Finite-N values next to the asymptotic terms; report only.

    Asserts nothing beyond E_sym <= E for the rational and linear measures.
    log is base 2.
    """
    _check_n(n_min, 2)
    _check_n(n_max, n_min)
    rows = []
    for n in range(n_min, n_max + 1):
        e = enumerate_expectations(n, ["rat", "2adic", "lin"], threads)
        sym_ok = e.e_rat_sym <= e.e_rat and e.e_lin_sym <= e.e_lin
        if not sym_ok:
            raise PropertyFailure(f"symmetric expectation exceeds ordinary one at N={n}")
        root = 2 ** (n / 2)
        rows.append(
            AsymptoticsRow(
                N=n,
                e_rat=float(e.e_rat),
                e_rat_sym=float(e.e_rat_sym),
                e_2adic=e.e_2adic,
                e_2adic_sym=e.e_2adic_sym,
                e_lin=float(e.e_lin),
                e_lin_sym=float(e.e_lin_sym),
                half_n_minus_log=n / 2 - math.log2(n),
                sqrt_space=root,
                gap_ratio=float(e.e_rat - e.e_rat_sym) / root,
                rat_known_lower=2 ** (n / 2 - 1) + (n - 5) / 4,
                adic_known_lower=n / 2 - 1,
                sym_below_full=sym_ok,
            )
        )
    return rows
