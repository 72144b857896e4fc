"""Pydantic schemas for computed reports."""

import math
from fractions import Fraction
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

Measure = Literal["rat", "2adic", "lin", "linexp"]
ALL_MEASURES: tuple[Measure, ...] = ("rat", "2adic", "lin", "linexp")


class RationalApproximation(BaseModel):
    """Witness (q, f) for the rational complexity of a finite word."""

    model_config = ConfigDict(frozen=True)

    q: int
    f: int
    norm: int

    @model_validator(mode="after")
    def _check_witness(self) -> "RationalApproximation":
        if self.q < 1 or self.q % 2 == 0:
            raise ValueError(f"q must be odd and positive, got {self.q}")
        if self.norm != max(self.q, abs(self.f)):
            raise ValueError(f"norm {self.norm} != max(q, |f|) = {max(self.q, abs(self.f))}")
        return self

    def witnesses(self, value: int, length: int) -> bool:
        """True iff q * value == f (mod 2^length)."""
        return (self.q * value - self.f) % (1 << length) == 0


class ComplexityProfile(BaseModel):
    """Linear complexity profile L(S_1), ..., L(S_N) and the final recurrence.

    ``recurrence`` lists c_0..c_L of sum_l c_l s_{n+l} = 0 with c_L = 1.
    """

    model_config = ConfigDict(frozen=True)

    entries: list[int]
    recurrence: list[int] = Field(default_factory=lambda: [1])

    @property
    def final(self) -> int:
        return self.entries[-1] if self.entries else 0

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.entries)


class PeriodicAdicReport(BaseModel):
    """2-adic complexity of a periodic sequence."""

    model_config = ConfigDict(frozen=True)

    T: int
    value: int
    modulus: int
    divisor: int
    connection: int
    lambda_bits: float

    @model_validator(mode="after")
    def _check_factorization(self) -> "PeriodicAdicReport":
        if self.divisor * self.connection != self.modulus:
            raise ValueError("divisor * connection must equal 2^T - 1")
        return self


class ReversiblePair(BaseModel):
    """A prime p with its base-2 reversal q and both orders of 2."""

    p: int
    q: int
    ord_p: int
    ord_q: int
    q_is_prime: bool
    probabilistic: bool = False

    def to_tsv_row(self) -> str:
        return f"{self.p}\t{self.q}\t{self.ord_p}\t{self.ord_q}"


PAIR_TSV_HEADER = "p\tq\tord_p\tord_q"


class ThetaReport(BaseModel):
    """Count of t-bit primes whose reversal is prime."""

    t: int
    count: int
    palindromic: int
    heuristic: float  # 3 * 2^(t-1) / t^2, a conjectured estimate only


class PrimeConstructionReport(BaseModel):
    """Result of checking the non-palindromic prime construction."""

    p: int
    q: int
    T: int
    ord_p: int
    ord_q: int
    connection: int
    connection_rev: int
    lambda_bits: float
    lambda_rev_bits: float
    ok: bool


class PalindromicCoreReport(BaseModel):
    """Comparison of lambda for a palindromic-core initial vector and its reversal."""

    variant: Literal["A", "B"]
    q_pal: int
    k: int
    T: int
    shift: int = 0
    value: int
    reverse_value: int
    stated_reverse_value: int
    identity_holds: bool
    connection: int
    connection_rev: int
    lambda_equal: bool


class LSequenceReport(BaseModel):
    """Connection integers of a sequence and of its reversal."""

    T: int
    value: int
    reverse_value: int
    connection: int
    connection_rev: int
    ratio: Optional[Fraction] = None
    reversal_larger: bool

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @field_serializer("ratio")
    def _ser_ratio(self, v: Optional[Fraction]) -> Optional[str]:
        return None if v is None else str(v)


def _fraction_str(v: Optional[Fraction]) -> Optional[str]:
    return None if v is None else str(v)


class ExpectationRow(BaseModel):
    """Expected values over all words of length N.

    Fraction fields are exact; the 2-adic means are floats.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int
    e_rat: Optional[Fraction] = None
    e_rat_sym: Optional[Fraction] = None
    e_lin: Optional[Fraction] = None
    e_lin_sym: Optional[Fraction] = None
    e_linexp: Optional[Fraction] = None
    e_linexp_sym: Optional[Fraction] = None
    e_2adic: Optional[float] = None
    e_2adic_sym: Optional[float] = None

    @field_serializer("e_rat", "e_rat_sym", "e_lin", "e_lin_sym", "e_linexp", "e_linexp_sym")
    def _ser_fraction(self, v: Optional[Fraction]) -> Optional[str]:
        return _fraction_str(v)

    @model_validator(mode="after")
    def _check_order(self) -> "ExpectationRow":
        for full, sym in (
            ("e_rat", "e_rat_sym"),
            ("e_lin", "e_lin_sym"),
            ("e_linexp", "e_linexp_sym"),
            ("e_2adic", "e_2adic_sym"),
        ):
            a, b = getattr(self, full), getattr(self, sym)
            if a is not None and b is not None:
                if b < 0 or b > a:
                    raise ValueError(f"{sym} must lie in [0, {full}]")
        return self

    def difference(self, measure: Measure) -> Optional[Fraction | float]:
        """Ordinary minus symmetric expectation for one measure."""
        full = getattr(self, f"e_{measure}")
        sym = getattr(self, f"e_{measure}_sym")
        if full is None or sym is None:
            return None
        return full - sym

    def to_tsv_row(self, measures: tuple[Measure, ...]) -> str:
        cells = [str(self.N)]
        for m in measures:
            full, sym = getattr(self, f"e_{m}"), getattr(self, f"e_{m}_sym")
            diff = self.difference(m)
            cells += [_cell(full), _cell(sym), _cell(diff)]
        return "\t".join(cells)

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)


def expectation_tsv_header(measures: tuple[Measure, ...]) -> str:
    cells = ["N"]
    for m in measures:
        cells += [f"e_{m}", f"e_{m}_sym", f"diff_{m}"]
    return "\t".join(cells)


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return f"{float(v):.6f}"
    return f"{v:.6f}"


class ProofConstants(BaseModel):
    """Lower-bound constants for the ordinary/symmetric expectation gaps."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    N: int
    m1: Fraction
    m1_closed: Fraction
    m2: Fraction
    k1: Fraction
    k2: Fraction

    @field_serializer("m1", "m1_closed", "m2", "k1", "k2")
    def _ser(self, v: Fraction) -> str:
        return str(v)

    @property
    def rational_bound(self) -> Fraction:
        return self.m1 + self.m2

    @property
    def linexp_bound(self) -> Fraction:
        return self.k1 + self.k2


class AsymptoticsRow(BaseModel):
    """One report-only row comparing finite-N values with the asymptotic terms."""

    N: int
    e_rat: float
    e_rat_sym: float
    e_2adic: float
    e_2adic_sym: float
    e_lin: float
    e_lin_sym: float
    half_n_minus_log: float  # N/2 - log2(N)
    sqrt_space: float  # 2^(N/2)
    gap_ratio: float  # (e_rat - e_rat_sym) / 2^(N/2)
    rat_known_lower: float  # 2^(N/2-1) + (N-5)/4
    adic_known_lower: float  # N/2 - 1
    sym_below_full: bool

    @classmethod
    def header(cls) -> str:
        return "\t".join(cls.model_fields)

    def to_tsv_row(self) -> str:
        return "\t".join(
            f"{v:.6f}" if isinstance(v, float) else str(v) for v in self.model_dump().values()
        )


class ClaimResult(BaseModel):
    """One checked (in)equality with the values it was checked on."""

    name: str
    passed: bool
    detail: str = ""
    informational: bool = False
    values: dict[str, Any] = Field(default_factory=dict)


class FamilyReport(BaseModel):
    """Claims checked for one constructed sequence."""

    family: str
    parameters: dict[str, Any]
    sequence: str
    periodic: bool
    claims: list[ClaimResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims if not c.informational)

    def to_json_dict(self) -> dict:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return data


class TableCheck(BaseModel):
    """Outcome of comparing computed rows with a published table."""

    table: str
    checked: int = 0
    mismatches: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


class SuiteReport(BaseModel):
    """Result of one verification suite."""

    suite: str
    checks: int = 0
    failures: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> bool:
        """Count one assertion; remember ``message`` if it fails."""
        self.checks += 1
        if not condition:
            self.failures.append(message)
        return condition

    def to_json_dict(self) -> dict:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return data


def log2_exact(n: int) -> float:
    """log2 of a positive integer of any size."""
    if n < 1:
        raise ValueError("log2 of a non-positive integer")
    return math.log2(n)
