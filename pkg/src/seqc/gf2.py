"""Polynomials over GF(2) packed into integers.

The polynomial b_n x^n + ... + b_1 x + b_0 corresponds to the integer
b_n 2^n + ... + b_1 2 + b_0. Addition is XOR; division reduces by
degree-aligned XOR.
"""

from dataclasses import dataclass

from seqc.bitseq import FiniteWord

ZERO_DEGREE = -1  # sentinel for the zero polynomial


@dataclass(frozen=True, slots=True)
class Gf2Poly:
    """Polynomial over GF(2). Bit i of ``bits`` is the coefficient of x^i."""

    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient vector must be non-negative")

    @classmethod
    def from_word(cls, w: FiniteWord) -> "Gf2Poly":
        """S(x) = sum of s_n x^n."""
        return cls(w.value)

    @classmethod
    def x_pow_minus_one(cls, t: int) -> "Gf2Poly":
        """x^t - 1, which over GF(2) is x^t + 1."""
        return cls((1 << t) | 1)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1 if self.bits else ZERO_DEGREE

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        a, b = self.bits, other.bits
        if a < b:
            a, b = b, a
        c = 0
        while b:
            if b & 1:
                c ^= a
            a <<= 1
            b >>= 1
        return Gf2Poly(c)

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a, b = self.bits, other.bits
        db = other.degree
        q = 0
        while a and a.bit_length() - 1 >= db:
            shift = a.bit_length() - 1 - db
            q |= 1 << shift
            a ^= b << shift
        return Gf2Poly(q), Gf2Poly(a)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return divmod(self, other)[1]

    def gcd(self, other: "Gf2Poly") -> "Gf2Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)
