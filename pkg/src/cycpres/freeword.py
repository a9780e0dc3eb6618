"""Words in the free group F_n on x_0, ..., x_{n-1}.

A letter is stored as an integer code ``2*i + (1 if inverse else 0)`` so that
the natural integer order is x0 < x0^-1 < x1 < x1^-1 < ...  and inversion of a
letter is ``code ^ 1``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class WordError(ValueError):
    """Raised for malformed word text or words that violate a precondition."""


class Letter(NamedTuple):
    index: int
    exponent: int


class SignClass(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    MIXED = "mixed"


class AlternationClass(enum.Enum):
    ALTERNATING = "alternating"
    CYCLICALLY_ALTERNATING = "cyclically_alternating"
    NON_ALTERNATING = "non_alternating"


def letter_code(index: int, exponent: int) -> int:
    return 2 * index + (1 if exponent < 0 else 0)


@dataclass(frozen=True, order=True)
class Word:
    rank: int
    codes: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be positive, got {self.rank}")
        top = 2 * self.rank
        for c in self.codes:
            if not 0 <= c < top:
                raise WordError(f"letter code {c} out of range for rank {self.rank}")

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[tuple[int, int]]) -> "Word":
        return cls(rank, tuple(letter_code(i % rank, e) for i, e in letters))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(c >> 1, -1 if c & 1 else 1) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.rank != self.rank:
            raise WordError("cannot concatenate words of different rank")
        return Word(self.rank, self.codes + other.codes)

    def __pow__(self, p: int) -> "Word":
        return Word(self.rank, self.codes * p)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({self.rank}, {format_word(self)!r})"


@dataclass(frozen=True)
class RootDecomposition:
    root: Word
    power: int


_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?\Z")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``"x0 x2^-1 x3"``-style text; subscripts are reduced mod ``rank``.

    Tokens are separated by spaces or dots.  ``x3^-2`` expands to two copies of
    x3^-1 and ``x3^0`` to nothing.  No free reduction is performed.
    """
    if rank < 1:
        raise WordError(f"rank must be positive, got {rank}")
    codes: list[int] = []
    for token in re.split(r"[ .]+", text.strip()):
        if not token:
            continue
        m = _TOKEN.match(token)
        if m is None:
            raise WordError(f"bad token {token!r}")
        index = int(m.group(1)) % rank
        e = int(m.group(2)) if m.group(2) is not None else 1
        codes.extend([letter_code(index, e)] * abs(e))
    return Word(rank, tuple(codes))


def format_code(code: int) -> str:
    return f"x{code >> 1}^-1" if code & 1 else f"x{code >> 1}"


def format_word(w: Word) -> str:
    return " ".join(format_code(c) for c in w.codes)


def is_reduced(w: Word) -> bool:
    c = w.codes
    return all(c[j] != c[j + 1] ^ 1 for j in range(len(c) - 1))


def is_cyclically_reduced(w: Word) -> bool:
    if not w.codes:
        return True
    return is_reduced(w) and w.codes[0] != w.codes[-1] ^ 1


def root(w: Word) -> RootDecomposition:
    """Return ``(v, p)`` with ``w = v^p`` and ``p`` maximal."""
    if not w.codes:
        raise WordError("the empty word has no root")
    if not is_cyclically_reduced(w):
        raise WordError(f"{w} is not cyclically reduced")
    c = w.codes
    k = len(c)
    for d in range(1, k + 1):
        if k % d == 0 and c[:d] * (k // d) == c:
            return RootDecomposition(Word(w.rank, c[:d]), k // d)
    raise AssertionError("unreachable")


def is_proper_power(w: Word) -> bool:
    return root(w).power > 1


def shift(w: Word, h: int) -> Word:
    """Apply theta^h: x_i -> x_{i+h} (mod rank)."""
    n = w.rank
    h %= n
    if h == 0:
        return w
    return Word(n, tuple(((((c >> 1) + h) % n) << 1) | (c & 1) for c in w.codes))


def cyclic_permute(w: Word, s: int) -> Word:
    """Apply phi^s: rotate the letters left by ``s``."""
    k = len(w.codes)
    if k == 0:
        return w
    s %= k
    return Word(w.rank, w.codes[s:] + w.codes[:s])


def invert(w: Word) -> Word:
    return Word(w.rank, tuple(c ^ 1 for c in reversed(w.codes)))


def sign_class(w: Word) -> SignClass:
    if not w.codes:
        raise WordError("sign class of the empty word is undefined")
    neg = sum(c & 1 for c in w.codes)
    if neg == 0:
        return SignClass.POSITIVE
    if neg == len(w.codes):
        return SignClass.NEGATIVE
    return SignClass.MIXED


def alternation_class(w: Word) -> AlternationClass:
    c = w.codes
    k = len(c)
    if k < 2:
        raise WordError("alternation class needs a word of length at least 2")
    if any((c[j] & 1) == (c[j + 1] & 1) for j in range(k - 1)):
        return AlternationClass.NON_ALTERNATING
    if (c[-1] & 1) == (c[0] & 1):
        return AlternationClass.ALTERNATING
    return AlternationClass.CYCLICALLY_ALTERNATING


def is_alternating(w: Word) -> bool:
    """True for alternating and cyclically alternating words."""
    return alternation_class(w) is not AlternationClass.NON_ALTERNATING


def exponent_sums(w: Word) -> list[int]:
    sums = [0] * w.rank
    for c in w.codes:
        sums[c >> 1] += -1 if c & 1 else 1
    return sums


def subscript_gcd(w: Word) -> int:
    """gcd of the rank and all cyclic consecutive subscript differences."""
    idx = [c >> 1 for c in w.codes]
    g = w.rank
    for j in range(len(idx)):
        g = math.gcd(g, (idx[(j + 1) % len(idx)] - idx[j]) % w.rank)
    return g
