"""Whole-space sweeps over {0,1}^N with numpy.

A word is identified with its value S_N(2) in [0, 2^N), so per-word tables
are arrays indexed by value. Work is split into contiguous value ranges
that may run in worker processes; results are concatenated in range order,
which keeps every table independent of the partitioning.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

import numpy as np

from seqc.observability import log_step_event, timed_step

logger = logging.getLogger("seqc.sweep")

MIN_CHUNK = 1 << 12
CHUNKS_PER_WORKER = 4


def chunk_bounds(start: int, stop: int, chunks: int) -> list[tuple[int, int]]:
    """Split [start, stop) into at most ``chunks`` contiguous ranges."""
    total = stop - start
    if total <= 0:
        return []
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    bounds = []
    lo = start
    for i in range(chunks):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def run_chunks(func: Callable[..., Any], start: int, stop: int, threads: int, *args: Any) -> list:
    """Apply ``func(lo, hi, *args)`` to contiguous ranges; results in range order.

    ``func`` must be a module-level function so worker processes can import it.
    """
    total = stop - start
    if threads <= 1 or total <= MIN_CHUNK:
        return [func(start, stop, *args)]
    chunks = min(threads * CHUNKS_PER_WORKER, max(1, total // MIN_CHUNK))
    bounds = chunk_bounds(start, stop, chunks)
    log_step_event("sweep", "dispatching", chunks=len(bounds), workers=threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(func, lo, hi, *args) for lo, hi in bounds]
        return [f.result() for f in futures]


def bit_reversal_index(n: int) -> np.ndarray:
    """rev[v] = value of the reversed n-bit word with value v."""
    values = np.arange(1 << n, dtype=np.int64)
    rev = np.zeros_like(values)
    for i in range(n):
        rev |= ((values >> i) & 1) << (n - 1 - i)
    return rev


def norms_of(values: np.ndarray, n: int) -> np.ndarray:
    """Rational complexity of each n-bit word in ``values``.

    Same scan as the per-word oracle, run on all active words at once;
    a word leaves the active set when the next q reaches its best norm.
    Needs q * s to fit in int64, which holds for n <= 40.
    """
    s = np.asarray(values, dtype=np.int64)
    mask, half, full = (1 << n) - 1, 1 << (n - 1), 1 << n
    r = s & mask
    best = np.maximum(1, np.where(r > half, full - r, r))
    q = 3
    active = np.flatnonzero(best > q)
    while active.size:
        r = (q * s[active]) & mask
        norm = np.maximum(q, np.where(r > half, full - r, r))
        best[active] = np.minimum(best[active], norm)
        q += 2
        active = active[best[active] > q]
    return best


def norm_chunk(start: int, stop: int, n: int) -> np.ndarray:
    """Rational complexity of every n-bit word with value in [start, stop)."""
    return norms_of(np.arange(start, stop, dtype=np.int64), n).astype(np.int32)


@timed_step("sweep.norms")
def norm_table(n: int, threads: int = 1) -> np.ndarray:
    """Rational complexity indexed by word value, for all 2^n words."""
    parts = run_chunks(norm_chunk, 0, 1 << n, threads, n)
    return np.concatenate(parts)


def linear_complexity_chunk(start: int, stop: int, n: int) -> np.ndarray:
    """Linear complexity of every n-bit word with value in [start, stop).

    Berlekamp-Massey on all words at once, tracking s*B and s*C as shifted
    integers so that each discrepancy is a single bit test.
    """
    s = np.arange(start, stop, dtype=np.uint64)
    sb = s.copy()
    sc = s.copy()
    deg = np.zeros(s.shape, dtype=np.int64)
    m = np.zeros(s.shape, dtype=np.uint64)
    one = np.uint64(1)
    for k in range(n):
        disc = ((sc >> m) & one).astype(bool)
        m += one
        sc = np.where(disc, sc >> m, sc)
        m[disc] = 0
        swap = disc & (2 * deg <= k)
        new_sb = np.where(swap, sc, sb)
        new_sc = np.where(swap, sb, sc)
        deg = np.where(swap, k + 1 - deg, deg)
        sb = new_sb
        sc = np.where(disc, new_sc ^ new_sb, new_sc)
    return deg.astype(np.int8)


@timed_step("sweep.linear")
def linear_complexity_table(n: int, threads: int = 1) -> np.ndarray:
    """Linear complexity indexed by word value, for all 2^n words."""
    parts = run_chunks(linear_complexity_chunk, 0, 1 << n, threads, n)
    return np.concatenate(parts)


def pairwise_sum(values: np.ndarray) -> float:
    """Float sum by a fixed balanced pairwise reduction.

    The array is right-padded with zeros to a power of two and halved
    until one element remains, so the result depends only on the values.
    """
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        return 0.0
    size = 1 << (data.size - 1).bit_length()
    buf = np.zeros(size, dtype=np.float64)
    buf[: data.size] = data
    while buf.size > 1:
        buf = buf[0::2] + buf[1::2]
    return float(buf[0])
