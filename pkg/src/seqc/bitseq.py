"""Finite binary words and periodic sequences.

A word (s_0, ..., s_{N-1}) is stored packed in a Python int whose bit n is
s_n, together with its explicit length, so leading and trailing zeros are
kept. The text form writes s_0 first.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

from seqc.errors import PreconditionError, SequenceParseError


@dataclass(frozen=True, slots=True)
class FiniteWord:
    """A binary word of explicit length. ``value`` bit n holds s_n."""

    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise PreconditionError(f"word length must be >= 0, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise PreconditionError(
                f"value {self.value} does not fit in {self.length} bits"
            )

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "FiniteWord":
        value = 0
        length = 0
        for n, bit in enumerate(bits):
            if bit not in (0, 1):
                raise PreconditionError(f"bit {n} is {bit!r}, expected 0 or 1")
            value |= bit << n
            length = n + 1
        return cls(value, length)

    @classmethod
    def zeros(cls, length: int) -> "FiniteWord":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "FiniteWord":
        return cls((1 << length) - 1, length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, n: int) -> int:
        if n < 0:
            n += self.length
        if not 0 <= n < self.length:
            raise IndexError(f"index {n} out of range for length {self.length}")
        return (self.value >> n) & 1

    def __iter__(self) -> Iterator[int]:
        value = self.value
        for _ in range(self.length):
            yield value & 1
            value >>= 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def prefix(self, n: int) -> "FiniteWord":
        """The first ``n`` symbols s_0..s_{n-1}."""
        if not 0 <= n <= self.length:
            raise PreconditionError(f"prefix length {n} outside 0..{self.length}")
        return FiniteWord(self.value & ((1 << n) - 1), n)

    def concat(self, other: "FiniteWord") -> "FiniteWord":
        return FiniteWord(self.value | (other.value << self.length), self.length + other.length)

    def is_palindrome(self) -> bool:
        return reverse(self) == self

    def to_text(self) -> str:
        return "".join("1" if bit else "0" for bit in self)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, slots=True)
class PeriodicSequence:
    """Sequence with s_{n+T} = s_n, given by its initial vector of length T."""

    initial: FiniteWord

    def __post_init__(self) -> None:
        if self.initial.length < 1:
            raise PreconditionError("period T must be at least 1")

    @property
    def period(self) -> int:
        return self.initial.length

    @classmethod
    def from_natural(cls, value: int, period: int) -> "PeriodicSequence":
        return cls(from_natural(value, period))

    def reversed(self) -> "PeriodicSequence":
        """Sequence whose initial vector is the reversed initial vector."""
        return PeriodicSequence(reverse(self.initial))


def reverse(w: FiniteWord) -> FiniteWord:
    """Return (s_{N-1}, ..., s_0)."""
    if w.length == 0:
        return w
    # format() writes s_{N-1} first; reading it backwards puts s_0 at the top bit
    text = format(w.value, f"0{w.length}b")
    return FiniteWord(int(text[::-1], 2), w.length)


def evaluate2(w: FiniteWord) -> int:
    """S_N(2) = sum of s_n 2^n."""
    return w.value


def from_natural(v: int, n: int) -> FiniteWord:
    """Inverse of :func:`evaluate2` for words of length ``n``."""
    if v < 0:
        raise PreconditionError(f"value must be non-negative, got {v}")
    if v >> n:
        raise PreconditionError(f"value {v} does not fit in {n} bits (need v < 2^{n})")
    return FiniteWord(v, n)


def expand(p: PeriodicSequence, n: int) -> FiniteWord:
    """Materialize s_0..s_{n-1} of a periodic sequence."""
    if n < 0:
        raise PreconditionError(f"length must be >= 0, got {n}")
    t = p.period
    copies, rest = divmod(n, t)
    value = 0
    for j in range(copies):
        value |= p.initial.value << (j * t)
    value |= (p.initial.value & ((1 << rest) - 1)) << (copies * t)
    return FiniteWord(value, n)


def rotate(w: FiniteWord, r: int) -> FiniteWord:
    """Cyclic shift: result[n] = w[(n + r) mod N]."""
    if w.length == 0:
        return w
    r %= w.length
    mask = (1 << w.length) - 1
    return FiniteWord(((w.value >> r) | (w.value << (w.length - r))) & mask, w.length)


def parse_sequence(text: str) -> FiniteWord:
    """Parse a word from text.

    Accepted forms:
        ``0110``          bits, s_0 first
        ``nat:v/N`` or ``v/N``  decimal value with explicit length
    """
    raw = text.strip()
    if not raw:
        raise SequenceParseError("empty sequence", position=0)

    body = raw
    offset = 0
    if raw.startswith("nat:"):
        body = raw[4:]
        offset = 4
    elif raw.startswith("bits:"):
        return _parse_bits(raw[5:], offset=5)

    if "/" in body:
        value_text, _, length_text = body.partition("/")
        if not value_text.isdigit():
            raise SequenceParseError(f"invalid natural {value_text!r}", position=offset)
        if not length_text.isdigit():
            raise SequenceParseError(
                f"invalid length {length_text!r}", position=offset + len(value_text) + 1
            )
        value, length = int(value_text), int(length_text)
        if value >> length:
            raise SequenceParseError(
                f"value {value} does not fit in {length} bits", position=offset
            )
        return FiniteWord(value, length)

    if offset:
        raise SequenceParseError("nat form needs an explicit length as v/N", position=len(raw))
    return _parse_bits(raw)


def _parse_bits(text: str, offset: int = 0) -> FiniteWord:
    if not text:
        raise SequenceParseError("empty sequence", position=offset)
    value = 0
    for n, ch in enumerate(text):
        if ch == "1":
            value |= 1 << n
        elif ch != "0":
            raise SequenceParseError(f"unexpected character {ch!r}", position=offset + n)
    return FiniteWord(value, len(text))
