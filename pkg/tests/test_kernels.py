from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from cycpres import kernels
from cycpres.freeword import Word, cyclic_permute, invert, is_cyclically_reduced, shift

from conftest import cr_words, to_nx

BACKENDS = kernels.available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def impl(request):
    return BACKENDS[request.param]


def test_compiled_backend_is_built():
    assert "cython" in BACKENDS, "run `pip install -e . --no-build-isolation` to build the extension"


def test_backend_selection_honours_env(monkeypatch):
    import importlib

    monkeypatch.setenv("CYCPRES_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("CYCPRES_PURE_PYTHON")
        importlib.reload(kernels)


def _orbit_min(w: Word) -> tuple[int, ...]:
    out = []
    for v in (w, invert(w)):
        for h in range(w.rank):
            for s in range(len(w)):
                out.append(cyclic_permute(shift(v, h), s).codes)
    return min(out)


@given(cr_words(max_n=5, max_k=6))
def test_canonical_form_is_orbit_minimum(w):
    for impl in BACKENDS.values():
        assert impl.canonical_form(w.codes, w.rank) == _orbit_min(w)


@given(cr_words(max_n=5, max_k=6))
def test_is_canonical_agrees(w):
    expected = _orbit_min(w) == w.codes
    for impl in BACKENDS.values():
        assert impl.is_canonical(w.codes, w.rank) == expected


def _brute(n, k, cyclically_reduced, canonical, positive):
    letters = range(0, 2 * n, 2) if positive else range(2 * n)
    out = []
    for codes in itertools.product(letters, repeat=k):
        w = Word(n, codes)
        if cyclically_reduced and not is_cyclically_reduced(w):
            continue
        if canonical and _orbit_min(w) != codes:
            continue
        out.append(codes)
    return out


@pytest.mark.parametrize("n, k", [(1, 3), (2, 2), (2, 4), (3, 3), (4, 3)])
@pytest.mark.parametrize("flags", [(True, True, False), (True, False, False), (False, False, False), (True, True, True)])
def test_enumerate_prefix_matches_brute_force(impl, n, k, flags):
    cr, canon, pos = flags
    got = [tuple(c) for c in impl.enumerate_prefix(n, k, (), cr, canon, pos)]
    assert got == _brute(n, k, cr, canon, pos)


def test_enumerate_prefix_small_examples(impl):
    reps = [tuple(c) for c in impl.enumerate_prefix(2, 2, (), True, True)]
    for text in ([0, 0], [0, 2], [0, 3]):
        assert tuple(text) in reps
    assert [tuple(c) for c in impl.enumerate_prefix(3, 1, (), True, True)] == [(0,)]


def test_enumerate_prefix_rejects_negative_prefix_when_positive(impl):
    assert list(impl.enumerate_prefix(3, 3, (0, 3), True, True, True)) == []


def test_backends_enumerate_identically():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for n, k in [(3, 5), (5, 4), (6, 3)]:
        for prefix in [(), (0,), (0, 2), (0, 5)]:
            for flags in [(True, True, False), (True, True, True), (True, False, False)]:
                a = [tuple(c) for c in py.enumerate_prefix(n, k, prefix, *flags)]
                b = [tuple(c) for c in cy.enumerate_prefix(n, k, prefix, *flags)]
                assert a == b


@given(cr_words(max_n=6, max_k=6))
def test_star_edges_agree(w):
    relators = [shift(w, i).codes for i in range(w.rank)]
    results = [sorted(map(tuple, impl.star_edges(relators, w.rank))) for impl in BACKENDS.values()]
    assert all(r == results[0] for r in results)


@st.composite
def graphs(draw):
    nv = draw(st.integers(1, 12))
    edges = draw(st.lists(st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)), max_size=20))
    return nv, sorted((min(u, v), max(u, v)) for u, v in edges)


@given(graphs())
def test_girth_agrees_with_networkx(g):
    nv, edges = g
    from cycpres.stargraph import LabeledMultigraph

    from conftest import nx_girth

    expected = nx_girth(LabeledMultigraph.build(range(nv), edges))
    for impl in BACKENDS.values():
        got = impl.girth(nv, edges)
        assert (float("inf") if got < 0 else got) == expected


@given(graphs())
def test_eccentricities_agree_with_networkx(g):
    nv, edges = g
    from cycpres.stargraph import LabeledMultigraph

    G = to_nx(LabeledMultigraph.build(range(nv), edges))
    expected = [0] * nv
    for comp in nx.connected_components(G):
        sub = nx.Graph(G.subgraph(comp))
        for v, e in nx.eccentricity(sub).items():
            expected[v] = e
    for impl in BACKENDS.values():
        assert list(impl.eccentricities(nv, edges)) == expected


def test_benchmark_script_runs():
    import json
    import pathlib
    import subprocess
    import sys

    script = pathlib.Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    proc = subprocess.run([sys.executable, str(script), "--repeat", "1", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    rows = json.loads(proc.stdout)
    assert rows and all("python" in r for r in rows)
