"""Published reference tables and the comparisons against them."""

import logging
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterable, Literal

import yaml

from seqc.errors import PreconditionError
from seqc.schemas import ReversiblePair, TableCheck

logger = logging.getLogger("seqc.reference")

REFERENCE_DIR = Path(__file__).parent

TableName = Literal["reversible-primes", "reversible-composites", "rational-gap", "linexp-gap"]
PAIR_TABLES: dict[str, TableName] = {"pp": "reversible-primes", "pc": "reversible-composites"}
GAP_TABLES: dict[str, TableName] = {"rat": "rational-gap", "linexp": "linexp-gap"}


@lru_cache(maxsize=None)
def _load_all() -> dict[str, Any]:
    return yaml.safe_load((REFERENCE_DIR / "published.yml").read_text())


def load_table(name: TableName) -> dict[str, Any]:
    """Load a published table by name.

    Raises:
        PreconditionError: If no table has that name
    """
    tables = _load_all()
    if name not in tables:
        raise PreconditionError(f"no published table {name!r}")
    return tables[name]


def check_pairs(computed: list[ReversiblePair], name: TableName, t_min: int, t_max: int) -> TableCheck:
    """Compare enumerated pairs with a published pair table over the shared bit range.

    Complete tables must match row for row. Incomplete ones must appear as an
    ordered subsequence; extra computed rows and listed ord_p errata are warnings.
    """
    table = load_table(name)
    low, high = table["bits"]
    lo, hi = max(t_min, low), min(t_max, high)
    result = TableCheck(table=name)
    published = [r for r in table["rows"] if lo <= r[0].bit_length() <= hi]
    rows = [c for c in computed if lo <= c.p.bit_length() <= hi]
    errata = set(table.get("ord_p_errata", []))

    if table["complete"]:
        if [(c.p, c.q) for c in rows] != [(r[0], r[1]) for r in published]:
            result.mismatches.append(
                f"pairs differ: computed {[c.p for c in rows]}, published {[r[0] for r in published]}"
            )
            return result
        matched = list(zip(rows, published))
    else:
        matched = []
        position = 0
        for row in published:
            found = next((i for i in range(position, len(rows)) if rows[i].p == row[0]), None)
            if found is None:
                result.mismatches.append(f"p={row[0]}: published row not computed (or out of order)")
                continue
            for extra in rows[position:found]:
                result.warnings.append(f"p={extra.p}: computed row not in published table")
            matched.append((rows[found], row))
            position = found + 1
        for extra in rows[position:]:
            result.warnings.append(f"p={extra.p}: computed row not in published table")

    for pair, (p, q, ord_p, ord_q) in matched:
        result.checked += 1
        if pair.q != q:
            result.mismatches.append(f"p={p}: q computed {pair.q}, published {q}")
        if pair.ord_q != ord_q:
            result.mismatches.append(f"p={p}: ord_q computed {pair.ord_q}, published {ord_q}")
        if p in errata:
            if pair.ord_p == ord_p:
                result.mismatches.append(f"p={p}: ord_p listed as erratum but matches ({ord_p})")
            else:
                result.warnings.append(f"p={p}: published ord_p {ord_p} is wrong, true order {pair.ord_p}")
        elif pair.ord_p != ord_p:
            result.mismatches.append(f"p={p}: ord_p computed {pair.ord_p}, published {ord_p}")
    return result


def check_gaps(rows: Iterable[tuple], name: TableName) -> TableCheck:
    """|computed - printed| <= tolerance for every N present in both.

    Each row starts with (N, exact difference); extra fields are ignored.
    """
    table = load_table(name)
    tolerance = Fraction(table["tolerance"])
    printed = {int(n): Fraction(v) for n, v in table["values"].items()}
    result = TableCheck(table=name)
    for row in rows:
        n, exact = row[0], row[1]
        if n not in printed:
            result.warnings.append(f"N={n}: no published value")
            continue
        result.checked += 1
        if abs(exact - printed[n]) > tolerance:
            result.mismatches.append(f"N={n}: computed {float(exact):.4f}, published {table['values'][n]}")
    return result
