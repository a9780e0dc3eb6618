"""Cyclic presentations P_n(w), truncations and redundancy classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .freeword import (
    Word,
    WordError,
    cyclic_permute,
    format_word,
    invert,
    is_cyclically_reduced,
    root,
    shift,
)


class PresentationError(ValueError):
    pass


class RedundancyKind(enum.Enum):
    CONCISE = "concise"
    ORIENTABLE_REDUNDANT = "orientable_redundant"
    NON_ORIENTABLE = "non_orientable"


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    w: Word

    def __post_init__(self):
        if self.n < 1:
            raise PresentationError(f"n must be positive, got {self.n}")
        if self.w.rank != self.n:
            raise PresentationError(f"word has rank {self.w.rank}, expected {self.n}")
        if not self.w.codes:
            raise PresentationError("defining word must be non-empty")
        if not is_cyclically_reduced(self.w):
            raise PresentationError(f"defining word {self.w} is not cyclically reduced")

    @property
    def relators(self) -> list[Word]:
        return [shift(self.w, i) for i in range(self.n)]

    def __str__(self) -> str:
        return f"P_{self.n}({format_word(self.w)})"


@dataclass(frozen=True)
class Truncation:
    n: int
    t: int
    w: Word

    def __post_init__(self):
        if not 1 <= self.t <= self.n:
            raise PresentationError(f"truncation size {self.t} outside [1, {self.n}]")

    @property
    def relators(self) -> list[Word]:
        return [shift(self.w, i) for i in range(self.t)]

    @property
    def deficiency(self) -> int:
        return self.n - self.t


@dataclass(frozen=True)
class PeriodDecomposition:
    """w = u theta^h(u) theta^2h(u) ... with n/gcd(n, h) factors."""

    u: Word
    h: int

    @property
    def period_length(self) -> int:
        return len(self.u)

    @property
    def copies(self) -> int:
        return self.u.rank // math.gcd(self.u.rank, self.h)

    def expand(self) -> Word:
        return Word(self.u.rank, sum((shift(self.u, i * self.h).codes for i in range(self.copies)), ()))


@dataclass(frozen=True)
class RedundancyReport:
    n: int
    word: Word
    root: Word
    root_power: int
    kind: RedundancyKind
    period: PeriodDecomposition
    refinement_size: int
    rotation: Optional[int] = None
    half_word: Optional[Word] = None

    @property
    def deficiency(self) -> int:
        return self.n - self.refinement_size

    @property
    def orientable(self) -> bool:
        return self.kind is not RedundancyKind.NON_ORIENTABLE

    @property
    def redundant(self) -> bool:
        return self.kind is not RedundancyKind.CONCISE

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "word": format_word(self.word),
            "kind": self.kind.value,
            "root_power": self.root_power,
            "period": {"u": format_word(self.period.u), "h": self.period.h},
        }
        if self.rotation is not None:
            out["rotation"] = self.rotation
            out["half_word"] = format_word(self.half_word)
        out["refinement_t"] = self.refinement_size
        out["deficiency"] = self.deficiency
        return out


def make_presentation(n: int, w: Word) -> CyclicPresentation:
    return CyclicPresentation(n, w)


def period_candidates(w: Word) -> list[PeriodDecomposition]:
    """Every (u, h) with h in [1, n) for which w = prod theta^{ih}(u)."""
    n = w.rank
    k = len(w)
    found = []
    for h in range(1, n):
        copies = n // math.gcd(n, h)
        if k % copies:
            continue
        cand = PeriodDecomposition(Word(n, w.codes[: k // copies]), h)
        if cand.expand() == w:
            found.append(cand)
    return found


def find_period(P: CyclicPresentation) -> PeriodDecomposition:
    """Shortest u (ties: smallest h) with w = prod_{i} theta^{ih}(u).

    Returns (w, 0) when no proper shift of w is a cyclic permutation of w.
    """
    if root(P.w).power > 1:
        raise PresentationError(f"{P.w} is a proper power; pass its root")
    found = period_candidates(P.w)
    if not found:
        return PeriodDecomposition(P.w, 0)
    return min(found, key=lambda d: (len(d.u), d.h))


def _rotations(w: Word) -> set[tuple[int, ...]]:
    c = w.codes
    return {c[s:] + c[:s] for s in range(len(c))}


def is_nonorientable(w: Word) -> bool:
    """Some shift of w is a cyclic permutation of w^-1 (exhaustive search)."""
    inverse_rotations = _rotations(invert(w))
    return any(shift(w, h).codes in inverse_rotations for h in range(w.rank))


def _normal_form(w: Word) -> Optional[tuple[int, Word]]:
    n = w.rank
    k = len(w)
    if n % 2 or k % 2:
        return None
    for s in range(k):
        r = cyclic_permute(w, s)
        u = Word(n, r.codes[: k // 2])
        if (u * invert(shift(u, n // 2))) == r:
            return s, u
    return None


def nonorientable_normal_form(P: CyclicPresentation) -> tuple[int, Word]:
    """Least s and u with phi^s(w) = u theta^{n/2}(u)^-1."""
    nf = _normal_form(P.w) if is_nonorientable(P.w) else None
    if nf is None:
        raise PresentationError(f"{P} is orientable")
    return nf


def classify_redundancy(P: CyclicPresentation) -> RedundancyReport:
    rd = root(P.w)
    v = rd.root
    period = find_period(CyclicPresentation(P.n, v))
    if is_nonorientable(P.w):
        s, u = nonorientable_normal_form(P)
        return RedundancyReport(
            P.n, P.w, v, rd.power, RedundancyKind.NON_ORIENTABLE, period, P.n // 2, s, u
        )
    if period.h != 0:
        return RedundancyReport(
            P.n, P.w, v, rd.power, RedundancyKind.ORIENTABLE_REDUNDANT, period, math.gcd(P.n, period.h)
        )
    return RedundancyReport(P.n, P.w, v, rd.power, RedundancyKind.CONCISE, period, P.n)


def concise_refinement(P: CyclicPresentation) -> Truncation:
    return Truncation(P.n, classify_redundancy(P).refinement_size, P.w)


def _cyclic_key(w: Word) -> tuple[int, ...]:
    c = w.codes
    return min((c[s:] + c[:s] for s in range(len(c))), default=())


def _free_reduce(codes: Sequence[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def freely_redundant_oracle(relators: Sequence[Word]) -> set[int]:
    """Indices of relators that are freely trivial or a cyclic permutation of an
    earlier kept relator or of its inverse.  Kept relators are the lowest-index
    representatives, matching the truncation convention."""
    kept: set[tuple[int, ...]] = set()
    redundant = set()
    for j, r in enumerate(relators):
        if not _free_reduce(r.codes):
            redundant.add(j)
            continue
        if not is_cyclically_reduced(r):
            raise WordError(f"relator {r} is not cyclically reduced")
        key = _cyclic_key(r)
        if key in kept or _cyclic_key(invert(r)) in kept:
            redundant.add(j)
        else:
            kept.add(key)
    return redundant
