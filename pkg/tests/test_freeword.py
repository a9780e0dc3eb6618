from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cycpres.freeword import (
    AlternationClass,
    SignClass,
    Word,
    WordError,
    alternation_class,
    cyclic_permute,
    exponent_sums,
    format_word,
    invert,
    is_cyclically_reduced,
    is_reduced,
    parse_word,
    root,
    shift,
    sign_class,
    subscript_gcd,
)

from conftest import W, cr_words, words


def test_parse_and_format_round_trip():
    w = W(8, "x0 x2^-1 x4 x7")
    assert w.codes == (0, 5, 8, 14)
    assert format_word(w) == "x0 x2^-1 x4 x7"


def test_parse_expands_powers_and_dots():
    assert W(5, "x3^-2") == W(5, "x3^-1 x3^-1")
    assert W(5, "x1.x2  x3^0") == W(5, "x1 x2")
    assert W(5, "x1^3") == W(5, "x1 x1 x1")


def test_parse_reduces_subscripts():
    assert W(4, "x5 x4") == W(4, "x1 x0")


@pytest.mark.parametrize("text", ["y0", "x", "x1^", "x1^a", "x-1"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(WordError):
        parse_word(text, 3)


def test_rank_must_be_positive():
    with pytest.raises(WordError):
        Word(0, ())
    with pytest.raises(WordError):
        Word(2, (4,))


def test_cyclic_reduction_examples():
    assert not is_cyclically_reduced(W(3, "x0 x1^-1 x0^-1"))
    assert is_cyclically_reduced(W(4, "x0 x2^-1 x3 x1^-1"))
    assert not is_cyclically_reduced(W(1, "x0 x0^-1"))
    assert not is_reduced(W(1, "x0 x0^-1"))
    assert is_cyclically_reduced(Word(3, ()))


def test_root_examples():
    r = root(W(2, "x0 x1^-1 x0 x1^-1"))
    assert (r.root, r.power) == (W(2, "x0 x1^-1"), 2)
    r = root(W(14, "x0 x1 x10 x7 x8 x3"))
    assert r.power == 1
    r = root(W(1, "x0 x0 x0"))
    assert (r.root, r.power) == (W(1, "x0"), 3)


def test_root_errors():
    with pytest.raises(WordError):
        root(Word(2, ()))
    with pytest.raises(WordError):
        root(W(3, "x0 x1 x0^-1"))


def test_shift_examples():
    assert shift(W(3, "x0 x1"), 1) == W(3, "x1 x2")
    assert shift(W(8, "x0 x2^-1 x4 x7"), 6) == W(8, "x6 x0^-1 x2 x5")


def test_cyclic_permute_and_invert_examples():
    assert cyclic_permute(W(4, "x0 x2^-1 x3 x1^-1"), 1) == W(4, "x2^-1 x3 x1^-1 x0")
    assert invert(W(3, "x0 x2^-1")) == W(3, "x2 x0^-1")
    assert invert(Word(3, ())) == Word(3, ())


def test_sign_class_examples():
    assert sign_class(W(6, "x0 x1 x5")) is SignClass.POSITIVE
    assert sign_class(W(6, "x1^-1 x3^-1")) is SignClass.NEGATIVE
    assert sign_class(W(6, "x0 x1^-1")) is SignClass.MIXED
    with pytest.raises(WordError):
        sign_class(Word(2, ()))


def test_alternation_class_examples():
    assert alternation_class(W(8, "x0 x1^-1 x6 x3^-1")) is AlternationClass.CYCLICALLY_ALTERNATING
    assert alternation_class(W(6, "x0 x1^-1 x0")) is AlternationClass.ALTERNATING
    assert alternation_class(W(6, "x0 x0 x1")) is AlternationClass.NON_ALTERNATING
    with pytest.raises(WordError):
        alternation_class(W(6, "x0"))


def test_exponent_sums_and_subscript_gcd():
    assert exponent_sums(W(3, "x0 x1^-1 x0 x2")) == [2, -1, 1]
    assert subscript_gcd(W(4, "x0 x2 x0 x2")) == 2
    assert subscript_gcd(W(14, "x0 x1 x10 x7 x8 x3")) == 1


@given(words(), st.integers(-20, 20), st.integers(-20, 20))
def test_shift_is_an_action(w, a, b):
    assert len(shift(w, a)) == len(w)
    assert shift(shift(w, a), b) == shift(w, a + b)
    assert shift(w, w.rank) == w


@given(words(min_k=1), st.integers(-20, 20), st.integers(-20, 20))
def test_shift_and_rotation_commute(w, h, s):
    assert cyclic_permute(shift(w, h), s) == shift(cyclic_permute(w, s), h)
    assert cyclic_permute(w, len(w)) == w


@given(words(min_k=1), st.integers(0, 20))
def test_classes_are_shift_invariant(w, h):
    assert sign_class(shift(w, h)) is sign_class(w)
    if len(w) >= 2:
        assert alternation_class(shift(w, h)) is alternation_class(w)


@given(words())
def test_invert_is_an_involution(w):
    assert invert(invert(w)) == w


@given(cr_words())
def test_invert_preserves_cyclic_reduction_and_swaps_sign(w):
    assert is_cyclically_reduced(invert(w))
    swap = {SignClass.POSITIVE: SignClass.NEGATIVE, SignClass.NEGATIVE: SignClass.POSITIVE}
    sc = sign_class(w)
    assert sign_class(invert(w)) is swap.get(sc, sc)


@given(cr_words())
def test_root_reconstructs(w):
    r = root(w)
    assert r.root ** r.power == w
    assert len(w) % len(r.root) == 0
    assert root(r.root).power == 1


@given(cr_words(max_k=3), st.integers(2, 3))
def test_shift_rotation_coincidence_passes_to_root(v, p):
    w = v ** p
    for h in range(w.rank):
        for r in range(len(w)):
            lhs = shift(w, h) == cyclic_permute(w, r)
            rhs = shift(v, h) == cyclic_permute(v, r % len(v))
            assert lhs == rhs


@given(words())
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w), w.rank) == w
