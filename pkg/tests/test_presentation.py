from __future__ import annotations

import math

import pytest
from hypothesis import assume, given

from cycpres.fixtures import special_fixture
from cycpres.freeword import Word, cyclic_permute, invert, is_proper_power, shift
from cycpres.presentation import (
    CyclicPresentation,
    PresentationError,
    RedundancyKind,
    classify_redundancy,
    concise_refinement,
    find_period,
    freely_redundant_oracle,
    is_nonorientable,
    make_presentation,
    nonorientable_normal_form,
    period_candidates,
)
from cycpres.stargraph import build_star_graph

from conftest import P, W, cr_words


def test_make_presentation():
    p = make_presentation(2, W(2, "x0 x1"))
    assert p.relators == [W(2, "x0 x1"), W(2, "x1 x0")]
    assert len(P(3, "x0 x1").relators) == 3
    assert str(p) == "P_2(x0 x1)"


@pytest.mark.parametrize(
    "n, word",
    [(2, Word(2, (0, 1))), (2, Word(2, ())), (3, Word(2, (0, 2))), (0, Word(1, (0,)))],
)
def test_make_presentation_errors(n, word):
    with pytest.raises((PresentationError, ValueError)):
        make_presentation(n, word)


def test_find_period_examples():
    d = find_period(P(14, "x0 x1 x10 x7 x8 x3"))
    assert (d.u, d.h) == (W(14, "x0 x1 x10"), 7)
    d = find_period(P(9, "x0 x1 x5 x3 x4 x8 x6 x7 x2"))
    assert (d.u, d.h) == (W(9, "x0 x1 x5"), 3)
    d = find_period(P(3, "x0 x1"))
    assert (d.u, d.h) == (W(3, "x0 x1"), 0)


def test_find_period_rejects_proper_powers():
    with pytest.raises(PresentationError):
        find_period(P(2, "x0 x1 x0 x1"))


def test_classify_examples():
    r = classify_redundancy(P(2, "x0 x1^-1"))
    assert (r.kind, r.rotation, r.half_word) == (RedundancyKind.NON_ORIENTABLE, 0, W(2, "x0"))
    r = classify_redundancy(P(4, "x0 x2^-1 x3 x1^-1"))
    assert (r.kind, r.rotation, r.half_word) == (RedundancyKind.NON_ORIENTABLE, 1, W(4, "x2^-1 x3"))
    r = classify_redundancy(P(14, "x0 x1 x10 x7 x8 x3"))
    assert (r.kind, r.period.h, r.refinement_size) == (RedundancyKind.ORIENTABLE_REDUNDANT, 7, 7)
    assert classify_redundancy(P(2, "x0 x1")).kind is RedundancyKind.ORIENTABLE_REDUNDANT
    assert classify_redundancy(P(3, "x0 x1")).kind is RedundancyKind.CONCISE


def test_normal_form_examples():
    assert nonorientable_normal_form(P(6, "x0 x1^-1 x0 x3^-1 x4 x3^-1")) == (0, W(6, "x0 x1^-1 x0"))
    assert nonorientable_normal_form(P(4, "x0 x2^-1 x3 x1^-1")) == (1, W(4, "x2^-1 x3"))
    s, u = nonorientable_normal_form(special_fixture("f").presentation)
    assert (s, u) == (0, W(12, "x0 x2^-1 x4 x7 x2 x1"))
    with pytest.raises(PresentationError):
        nonorientable_normal_form(P(3, "x0 x1"))


def test_concise_refinement_examples():
    assert concise_refinement(special_fixture("a-i").presentation).t == 1
    assert concise_refinement(P(4, "x0 x2^-1 x3 x1^-1")).t == 2
    t = concise_refinement(P(3, "x0 x1"))
    assert (t.t, t.deficiency) == (3, 0)


def test_oracle_examples():
    assert freely_redundant_oracle(P(2, "x0 x1").relators) == {1}
    assert freely_redundant_oracle(P(3, "x0 x1").relators) == set()
    assert freely_redundant_oracle(P(2, "x0 x1^-1").relators) == {1}


def test_p2_square_is_concise():
    # {x0^2, x1^2} has no freely redundant relator.
    p = P(2, "x0 x0")
    assert freely_redundant_oracle(p.relators) == set()
    assert classify_redundancy(p).kind is RedundancyKind.CONCISE


def test_report_json_schema():
    out = classify_redundancy(P(4, "x0 x2^-1 x3 x1^-1")).to_json()
    assert out == {
        "n": 4,
        "word": "x0 x2^-1 x3 x1^-1",
        "kind": "non_orientable",
        "root_power": 1,
        "period": {"u": "x0 x2^-1 x3 x1^-1", "h": 0},
        "rotation": 1,
        "half_word": "x2^-1 x3",
        "refinement_t": 2,
        "deficiency": 2,
    }
    assert "rotation" not in classify_redundancy(P(3, "x0 x1")).to_json()


@given(cr_words())
def test_kind_agrees_with_oracle(w):
    assume(not is_proper_power(w))
    p = CyclicPresentation(w.rank, w)
    concise = classify_redundancy(p).kind is RedundancyKind.CONCISE
    assert concise == (not freely_redundant_oracle(p.relators))


@given(cr_words())
def test_nonorientable_search_is_exhaustive(w):
    brute = any(
        shift(w, h) == cyclic_permute(invert(w), t) for h in range(w.rank) for t in range(len(w))
    )
    assert is_nonorientable(w) == brute


def _in_normal_form(w: Word) -> bool:
    n = w.rank
    u = Word(n, w.codes[: len(w) // 2])
    return u * invert(shift(u, n // 2)) == w


@given(cr_words())
def test_report_invariants(w):
    p = CyclicPresentation(w.rank, w)
    r = classify_redundancy(p)
    n = p.n
    if r.kind is RedundancyKind.NON_ORIENTABLE:
        assert n % 2 == 0 and len(w) % 2 == 0
        assert cyclic_permute(w, r.rotation) == r.half_word * invert(shift(r.half_word, n // 2))
        assert not any(_in_normal_form(cyclic_permute(w, s)) for s in range(r.rotation))
        assert r.refinement_size == n // 2
    elif r.kind is RedundancyKind.ORIENTABLE_REDUNDANT:
        assert r.period.h != 0 and math.gcd(n, r.period.h) < n
        assert r.refinement_size == math.gcd(n, r.period.h)
    else:
        assert r.refinement_size == n
    assert r.period.expand() == r.root
    assert len(r.period.u) * r.period.copies == len(r.root)


@given(cr_words())
def test_refinement_is_concise_and_keeps_star_graph(w):
    assume(not is_proper_power(w))
    p = CyclicPresentation(w.rank, w)
    t = concise_refinement(p)
    assert freely_redundant_oracle(t.relators) == set()
    assert build_star_graph(t.relators, p.n) == build_star_graph(p.relators, p.n)


@given(cr_words())
def test_period_shift_is_unique_for_each_length(w):
    assume(not is_proper_power(w))
    lengths = [len(d.u) for d in period_candidates(w)]
    assert len(lengths) == len(set(lengths))


@given(cr_words())
def test_period_form_survives_rotation(w):
    assume(not is_proper_power(w))
    base = find_period(CyclicPresentation(w.rank, w))
    for s in range(len(w)):
        d = find_period(CyclicPresentation(w.rank, cyclic_permute(w, s)))
        assert len(d.u) == len(base.u)
        assert math.gcd(w.rank, d.h) == math.gcd(w.rank, base.h)


@given(cr_words())
def test_period_is_minimal(w):
    assume(not is_proper_power(w))
    d = find_period(CyclicPresentation(w.rank, w))
    n, k = w.rank, len(w)
    for h in range(1, n):
        copies = n // math.gcd(n, h)
        if k % copies == 0:
            u = Word(n, w.codes[: k // copies])
            if Word(n, sum((shift(u, i * h).codes for i in range(copies)), ())) == w:
                assert len(u) >= len(d.u)
