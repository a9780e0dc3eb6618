"""Named presentations with known classifications, used by the self-test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .freeword import Word, parse_word
from .presentation import CyclicPresentation, PeriodDecomposition, RedundancyKind


@dataclass(frozen=True)
class SpecialFixture:
    label: str
    presentation: CyclicPresentation
    triple: tuple[int, int, int]
    kind: RedundancyKind
    checker: str


@dataclass(frozen=True)
class MicroFixture:
    label: str
    presentation: CyclicPresentation
    kind: RedundancyKind
    rotation: Optional[int] = None


def _word(n: int, text: str) -> Word:
    return parse_word(text, n)


def _product(n: int, u: str, h: int) -> Word:
    return PeriodDecomposition(_word(n, u), h).expand()


def _p(n: int, w: Word) -> CyclicPresentation:
    return CyclicPresentation(n, w)


OR = RedundancyKind.ORIENTABLE_REDUNDANT
NO = RedundancyKind.NON_ORIENTABLE
CO = RedundancyKind.CONCISE

SPECIAL_FIXTURES: tuple[SpecialFixture, ...] = (
    SpecialFixture("a-i", _p(7, _product(7, "x0 x0 x1", 4)), (3, 21, 1), OR, "orientable-positive-3"),
    SpecialFixture("a-ii", _p(14, _word(14, "x0 x1 x10 x7 x8 x3")), (3, 6, 2), OR, "orientable-positive-3"),
    SpecialFixture("a-iii", _p(21, _product(21, "x0 x2 x7", 3)), (3, 21, 3), OR, "orientable-positive-3"),
    SpecialFixture("b-1", _p(9, _word(9, "x0 x1 x5 x3 x4 x8 x6 x7 x2")), (2, 9, 3), OR, "orientable-positive-2"),
    SpecialFixture(
        "b-2",
        _p(8, _word(8, "x0 x1 x3 x6 x2 x3 x5 x0 x4 x5 x7 x2 x6 x7 x1 x4")),
        (2, 16, 1), OR, "orientable-positive-2",
    ),
    SpecialFixture(
        "c", _p(8, _word(8, "x0 x1^-1 x6 x3^-1 x4 x5^-1 x2 x7^-1")), (2, 8, 2), OR, "orientable-alternating-2"
    ),
    SpecialFixture(
        "d",
        _p(8, _word(8, "x0 x2^-1 x4 x7 x6 x0^-1 x2 x5 x4 x6^-1 x0 x3 x2 x4^-1 x6 x1")),
        (2, 16, 2), OR, "orientable-mixed-2",
    ),
    SpecialFixture(
        "e", _p(6, _word(6, "x0 x1^-1 x0 x3^-1 x4 x3^-1")), (2, 6, 2), NO, "nonorientable-alternating-2"
    ),
    SpecialFixture(
        "f",
        _p(12, _word(12, "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1")),
        (2, 12, 2), NO, "nonorientable-nonalternating-2",
    ),
)

MICRO_FIXTURES: tuple[MicroFixture, ...] = (
    MicroFixture("P2(x0x1)", _p(2, _word(2, "x0 x1")), OR),
    MicroFixture("P3(x0x1)", _p(3, _word(3, "x0 x1")), CO),
    MicroFixture("P2(x0x1^-1)", _p(2, _word(2, "x0 x1^-1")), NO, 0),
    MicroFixture("P4(x0x2^-1x3x1^-1)", _p(4, _word(4, "x0 x2^-1 x3 x1^-1")), NO, 1),
)


def special_fixture(label: str) -> SpecialFixture:
    for f in SPECIAL_FIXTURES:
        if f.label == label:
            return f
    raise KeyError(label)
