from __future__ import annotations

import os

from hypothesis import settings, strategies as st

from cycpres.freeword import Word, is_cyclically_reduced, parse_word
from cycpres.presentation import CyclicPresentation

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def W(n: int, text: str) -> Word:
    return parse_word(text, n)


def P(n: int, text: str) -> CyclicPresentation:
    return CyclicPresentation(n, parse_word(text, n))


@st.composite
def words(draw, max_n: int = 8, max_k: int = 8, min_k: int = 0, n=None):
    n = draw(st.integers(1, max_n)) if n is None else n
    codes = draw(st.lists(st.integers(0, 2 * n - 1), min_size=min_k, max_size=max_k))
    return Word(n, tuple(codes))


@st.composite
def cr_words(draw, max_n: int = 6, max_k: int = 6):
    """Non-empty cyclically reduced words."""
    w = draw(words(max_n=max_n, max_k=max_k, min_k=1))
    codes = list(w.codes)
    # Drop letters until no adjacent or wrap-around cancellation remains.
    out: list[int] = []
    for c in codes:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    while len(out) > 1 and out[0] == out[-1] ^ 1:
        out = out[1:-1]
    if not out:
        out = [codes[0]]
    v = Word(w.rank, tuple(out))
    assert is_cyclically_reduced(v)
    return v


def to_nx(G):
    """networkx multigraph with the same vertices and edge multiset."""
    import networkx as nx

    g = nx.MultiGraph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    return g


def from_nx(g):
    from cycpres.stargraph import LabeledMultigraph

    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return LabeledMultigraph.build(range(len(nodes)), [(pos[u], pos[v]) for u, v in g.edges()])


def nx_girth(G) -> float:
    """Independent girth: loops count 1, parallel pairs 2, else the simple-graph girth."""
    import math
    from collections import Counter

    import networkx as nx

    if any(u == v for u, v in G.edges):
        return 1
    if any(c > 1 for c in Counter(G.edges).values()):
        return 2
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    return nx.girth(g)


def nx_star_graph(n: int, w: Word):
    """Star graph built straight from the symmetrized closure with networkx.

    Vertices are (i, +1) for x_i and (i, -1) for x_i^-1.  Assumes w is not a
    proper power, so the closure of its shifts has no repeated words.
    """
    import networkx as nx

    letters = [(c >> 1, -1 if c & 1 else 1) for c in w.codes]
    closure = set()
    for h in range(n):
        r = tuple(((i + h) % n, e) for i, e in letters)
        inv = tuple((i, -e) for i, e in reversed(r))
        for b in (r, inv):
            closure.update(b[s:] + b[:s] for s in range(len(b)))
    counts: dict = {}
    for c in closure:
        x, y = c[0], (c[1 % len(c)][0], -c[1 % len(c)][1])
        e = tuple(sorted([x, y]))
        counts[e] = counts.get(e, 0) + 1
    G = nx.MultiGraph()
    G.add_nodes_from([(i, s) for s in (1, -1) for i in range(n)])
    for e, c in counts.items():
        G.add_edges_from([e] * (c // 2))
    return G


def nx_special_triple(n: int, w: Word):
    """The special triple straight from the definition, or None."""
    import networkx as nx

    G = nx_star_graph(n, w)
    if len(w) < 3 or min(d for _, d in G.degree()) < 3:
        return None
    if any(u == v for u, v in G.edges()) or nx.number_of_edges(G) != nx.number_of_edges(nx.Graph(G)):
        return None
    comps = [nx.Graph(G.subgraph(c)) for c in nx.connected_components(G)]
    if not all(nx.is_bipartite(c) for c in comps):
        return None
    m = nx.diameter(comps[0])
    if any(nx.diameter(c) != m or nx.girth(c) != 2 * m for c in comps):
        return None
    if m < 2 or (m == 2 and len(w) < 4):
        return None
    if not all(nx.is_isomorphic(comps[0], c) for c in comps[1:]):
        return None
    return (m, len(w), len(comps))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(RESULTS, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(RESULTS[name])
