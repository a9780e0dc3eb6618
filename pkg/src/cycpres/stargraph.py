"""Star graphs of cyclic presentations, circulant graphs and graph metrics.

Star-graph vertices are letter codes: x_i is ``2*i`` and x_i^-1 is ``2*i + 1``.
"""

from __future__ import annotations

import enum
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional, Sequence

from . import kernels
from .freeword import Word, WordError, invert, is_cyclically_reduced, shift
from .presentation import (
    CyclicPresentation,
    RedundancyKind,
    RedundancyReport,
    _normal_form,
)

MAX_ISO_VERTICES = 64


class StarGraphError(ValueError):
    pass


class GraphSizeError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledMultigraph:
    """Undirected multigraph; loops and parallel edges allowed.

    ``edges`` is kept sorted with ``u <= v`` in every pair, so equality of two
    graphs is equality of labelled edge multisets.  ``rank`` is set for star
    graphs (vertex labels x_i / x_i^-1) and ``None`` for plain graphs.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    rank: Optional[int] = None

    @classmethod
    def build(cls, vertices, edges, rank=None) -> "LabeledMultigraph":
        vs = tuple(sorted(vertices))
        known = set(vs)
        es = []
        for u, v in edges:
            if u not in known or v not in known:
                raise StarGraphError(f"edge ({u}, {v}) uses an undeclared vertex")
            es.append((u, v) if u <= v else (v, u))
        return cls(vs, tuple(sorted(es)), rank)

    def label(self, v: int) -> str:
        if self.rank is None:
            return f"v{v}"
        return f"x{v >> 1}-" if v & 1 else f"x{v >> 1}"

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbours(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj

    def components(self) -> list[tuple[int, ...]]:
        adj = self.neighbours()
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        comp.append(v)
                        queue.append(v)
            comps.append(tuple(sorted(comp)))
        return comps

    def subgraph(self, vertices: Sequence[int]) -> "LabeledMultigraph":
        keep = set(vertices)
        return LabeledMultigraph(
            tuple(sorted(keep)),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
            self.rank,
        )

    def _indexed(self) -> tuple[int, list[tuple[int, int]]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return len(self.vertices), [(pos[u], pos[v]) for u, v in self.edges]


def _positive(i: int, n: int) -> int:
    return 2 * (i % n)


def _negative(i: int, n: int) -> int:
    return 2 * (i % n) + 1


def star_vertices(n: int) -> range:
    return range(2 * n)


def build_star_graph(relators: Sequence[Word], n: int) -> LabeledMultigraph:
    """Star graph from the symmetrized closure of ``relators``.

    Roots and redundant relators are absorbed automatically: the closure is a
    set of distinct cyclic words and inverse pairs contribute one edge.
    """
    for r in relators:
        if r.rank != n:
            raise StarGraphError(f"relator {r} has rank {r.rank}, expected {n}")
        if not is_cyclically_reduced(r):
            raise WordError(f"relator {r} is not cyclically reduced")
    edges = kernels.star_edges([r.codes for r in relators], n)
    return LabeledMultigraph(tuple(star_vertices(n)), tuple(edges), n)


def star_graph(P: CyclicPresentation) -> LabeledMultigraph:
    return build_star_graph(P.relators, P.n)


class Flavor(enum.Enum):
    ORIENTABLE = "orientable"
    NON_ORIENTABLE = "non_orientable"


@dataclass(frozen=True)
class DifferenceMultisets:
    """Subscript-difference multisets, each a sorted tuple of residues mod n.

    For the non-orientable flavour ``A`` and ``B`` are the augmented multisets
    and ``A_prime``/``B_prime`` the ones read off the half word alone.
    """

    flavor: Flavor
    n: int
    l_u: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    Qplus: tuple[int, ...]
    Qminus: tuple[int, ...]
    h: Optional[int] = None
    A_prime: Optional[tuple[int, ...]] = None
    B_prime: Optional[tuple[int, ...]] = None
    eps_iota: int = 1
    eps_tau: int = 1

    @property
    def Q(self) -> tuple[int, ...]:
        return tuple(sorted(self.Qplus + self.Qminus))

    @property
    def alternating(self) -> bool:
        """Q is empty: u cyclically alternating (orientable) or alternating."""
        return not self.Qplus and not self.Qminus

    def eq2_residue(self) -> int:
        return (sum(self.A) + sum(self.B) + sum(self.Qplus) - sum(self.Qminus)) % self.n

    def eq2_holds(self) -> bool:
        if self.flavor is not Flavor.ORIENTABLE:
            raise StarGraphError("the congruence applies to the orientable flavour")
        return self.eq2_residue() == self.h % self.n


def _bin_pairs(codes: Sequence[int], n: int):
    A, B, Qp, Qm = [], [], [], []
    for x, y in zip(codes, codes[1:]):
        i, j = x >> 1, y >> 1
        if not x & 1 and y & 1:
            A.append((j - i) % n)
        elif x & 1 and not y & 1:
            B.append((j - i) % n)
        elif not x & 1:
            Qp.append((j - i) % n)
        else:
            Qm.append((i - j) % n)
    return tuple(sorted(A)), tuple(sorted(B)), tuple(sorted(Qp)), tuple(sorted(Qm))


def difference_multisets(report: RedundancyReport, n: int) -> DifferenceMultisets:
    if report.n != n:
        raise StarGraphError(f"report is for n={report.n}, not {n}")
    if report.kind is RedundancyKind.NON_ORIENTABLE:
        nf = _normal_form(report.root)
        if nf is None:
            raise StarGraphError(f"{report.root} has no non-orientable normal form")
        u = nf[1]
        A1, B1, Qp, Qm = _bin_pairs(u.codes, n)
        half = n // 2
        e_iota = -1 if u.codes[0] & 1 else 1
        e_tau = -1 if u.codes[-1] & 1 else 1
        if e_iota == e_tau:
            A, B = A1 + (half,), B1 + (half,)
        elif e_iota == 1:
            A, B = A1, B1 + (half, half)
        else:
            A, B = A1 + (half, half), B1
        return DifferenceMultisets(
            Flavor.NON_ORIENTABLE, n, len(u), tuple(sorted(A)), tuple(sorted(B)), Qp, Qm,
            None, A1, B1, e_iota, e_tau,
        )
    u, h = report.period.u, report.period.h
    codes = u.codes + shift(Word(n, u.codes[:1]), h).codes
    A, B, Qp, Qm = _bin_pairs(codes, n)
    return DifferenceMultisets(
        Flavor.ORIENTABLE, n, len(u), A, B, Qp, Qm, h,
        eps_iota=-1 if u.codes[0] & 1 else 1, eps_tau=-1 if u.codes[-1] & 1 else 1,
    )


def structural_star_graph(ms: DifferenceMultisets, n: int, l_u: int) -> LabeledMultigraph:
    """Star graph assembled from the difference multisets alone."""
    if ms.n != n or ms.l_u != l_u:
        raise StarGraphError("multisets do not belong to this (n, l(u))")
    edges = []
    if ms.flavor is Flavor.ORIENTABLE:
        A, B = ms.A, ms.B
        if len(A) + len(B) + len(ms.Q) != l_u:
            raise StarGraphError("multisets are not root data: sizes do not add up to l(u)")
    else:
        A, B = ms.A_prime, ms.B_prime
        if len(A) + len(B) + len(ms.Q) + 1 != l_u:
            raise StarGraphError("multisets are not root data: sizes do not add up to l(u)")
    for i in range(n):
        for a in A:
            edges.append((_positive(i, n), _positive(i + a, n)))
        for b in B:
            edges.append((_negative(i, n), _negative(i + b, n)))
        for q in ms.Q:
            edges.append((_positive(i, n), _negative(i + q, n)))
    if ms.flavor is Flavor.NON_ORIENTABLE:
        half = n // 2
        for _ in range(len(ms.A) - len(ms.A_prime)):
            edges.extend((_positive(i, n), _positive(i + half, n)) for i in range(half))
        for _ in range(len(ms.B) - len(ms.B_prime)):
            edges.extend((_negative(i, n), _negative(i + half, n)) for i in range(half))
    return LabeledMultigraph.build(star_vertices(n), edges, n)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[frozenset[int], ...]
    d_A: int
    d_B: int
    d: Optional[int] = None
    q0: Optional[int] = None


def _gcd(n: int, values) -> int:
    return reduce(math.gcd, (v % n for v in values), n)


def predicted_components(ms: DifferenceMultisets) -> ComponentDecomposition:
    """Vertex partition the structure theorems predict for the star graph."""
    n = ms.n
    d_A = _gcd(n, ms.A)
    d_B = _gcd(n, ms.B)
    if ms.alternating:
        comps = [frozenset(_positive(j + t * d_A, n) for t in range(n // d_A)) for j in range(d_A)]
        comps += [frozenset(_negative(j + t * d_B, n) for t in range(n // d_B)) for j in range(d_B)]
        return ComponentDecomposition(tuple(comps), d_A, d_B)
    Q = ms.Q
    q0 = Q[0]
    d = _gcd(n, list(ms.A) + list(ms.B) + [q - q0 for q in Q])
    comps = [
        frozenset(
            [_positive(j + t * d, n) for t in range(n // d)]
            + [_negative(j + t * d + q0, n) for t in range(n // d)]
        )
        for j in range(d)
    ]
    return ComponentDecomposition(tuple(comps), d_A, d_B, d, q0)


def circulant(n: int, A: Sequence[int]) -> LabeledMultigraph:
    if n < 2:
        raise StarGraphError("circulant graphs need n >= 2")
    edges = [(i, (i + a) % n) for a in A for i in range(n)]
    return LabeledMultigraph.build(range(n), edges)


def circulant_prime(n: int, A: Sequence[int]) -> LabeledMultigraph:
    """circ_n(A) with every n/2 chord present once per occurrence of n/2 in A."""
    if n < 2:
        raise StarGraphError("circulant graphs need n >= 2")
    edges = []
    for a in A:
        a %= n
        top = n // 2 if (n % 2 == 0 and a == n // 2) else n
        edges.extend((i, (i + a) % n) for i in range(top))
    return LabeledMultigraph.build(range(n), edges)


@dataclass(frozen=True)
class GraphMetrics:
    girth: float
    diameter_per_component: tuple[int, ...]
    is_bipartite: bool
    regular_degree: Optional[int]
    component_count: int
    degree_sequence: tuple[int, ...]

    @property
    def diameter(self) -> float:
        if self.component_count != 1:
            return math.inf
        return self.diameter_per_component[0]


def girth(G: LabeledMultigraph) -> float:
    nv, edges = G._indexed()
    g = kernels.girth(nv, edges)
    return math.inf if g < 0 else g


def is_bipartite(G: LabeledMultigraph) -> bool:
    adj = G.neighbours()
    colour: dict[int, int] = {}
    for u, v in G.edges:
        if u == v:
            return False
    for s in G.vertices:
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in colour:
                    colour[v] = colour[u] ^ 1
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def metrics(G: LabeledMultigraph) -> GraphMetrics:
    nv, edges = G._indexed()
    ecc = kernels.eccentricities(nv, edges)
    pos = {v: i for i, v in enumerate(G.vertices)}
    comps = G.components()
    diameters = tuple(max(ecc[pos[v]] for v in comp) for comp in comps)
    degs = G.degrees()
    values = set(degs.values())
    return GraphMetrics(
        girth=girth(G),
        diameter_per_component=diameters,
        is_bipartite=is_bipartite(G),
        regular_degree=values.pop() if len(values) == 1 else None,
        component_count=len(comps),
        degree_sequence=tuple(sorted(degs.values(), reverse=True)),
    )


# -- isomorphism ------------------------------------------------------------


def _multiplicity(G: LabeledMultigraph) -> list[Counter]:
    nv, edges = G._indexed()
    mult = [Counter() for _ in range(nv)]
    for u, v in edges:
        mult[u][v] += 1
        if u != v:
            mult[v][u] += 1
    return mult


def _distance_profile(mult: list[Counter]) -> list[tuple[int, ...]]:
    nv = len(mult)
    out = []
    for s in range(nv):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in mult[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        out.append(tuple(sorted(Counter(dist.values()).items())))
    return out


def _refine(mult_g, mult_h):
    """Joint colour refinement of two graphs; returns colour lists."""
    sig_g = [(sum(m.values()) + m[i], m[i], p) for i, (m, p) in enumerate(zip(mult_g, _distance_profile(mult_g)))]
    sig_h = [(sum(m.values()) + m[i], m[i], p) for i, (m, p) in enumerate(zip(mult_h, _distance_profile(mult_h)))]
    while True:
        table = {s: c for c, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        col_g = [table[s] for s in sig_g]
        col_h = [table[s] for s in sig_h]
        new_g = [(col_g[i], tuple(sorted((col_g[j], k) for j, k in m.items()))) for i, m in enumerate(mult_g)]
        new_h = [(col_h[i], tuple(sorted((col_h[j], k) for j, k in m.items()))) for i, m in enumerate(mult_h)]
        if len(set(new_g) | set(new_h)) == len(table):
            return col_g, col_h
        sig_g, sig_h = new_g, new_h


def are_isomorphic(G: LabeledMultigraph, H: LabeledMultigraph) -> bool:
    """Label-blind multigraph isomorphism by colour refinement plus backtracking."""
    for X in (G, H):
        if len(X.vertices) > MAX_ISO_VERTICES:
            raise GraphSizeError(f"isomorphism test capped at {MAX_ISO_VERTICES} vertices")
    if len(G.vertices) != len(H.vertices) or len(G.edges) != len(H.edges):
        return False
    if sorted(G.degrees().values()) != sorted(H.degrees().values()):
        return False
    mult_g, mult_h = _multiplicity(G), _multiplicity(H)
    col_g, col_h = _refine(mult_g, mult_h)
    if Counter(col_g) != Counter(col_h):
        return False
    nv = len(mult_g)
    if nv == 0:
        return True
    class_size = Counter(col_g)
    # Visit vertices so that each new one is adjacent to the mapped set when possible.
    order: list[int] = []
    placed = set()
    remaining = sorted(range(nv), key=lambda v: (class_size[col_g[v]], v))
    for start in remaining:
        if start in placed:
            continue
        placed.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(mult_g[u], key=lambda v: (class_size[col_g[v]], v)):
                if v not in placed:
                    placed.add(v)
                    queue.append(v)
    by_colour: dict[int, list[int]] = {}
    for v in range(nv):
        by_colour.setdefault(col_h[v], []).append(v)
    mapping = [-1] * nv
    used = [False] * nv

    def extend(pos: int) -> bool:
        if pos == nv:
            return True
        v = order[pos]
        for cand in by_colour[col_g[v]]:
            if used[cand]:
                continue
            if mult_g[v][v] != mult_h[cand][cand]:
                continue
            ok = True
            for u in order[:pos]:
                if mult_g[v].get(u, 0) != mult_h[cand].get(mapping[u], 0):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = cand
            used[cand] = True
            if extend(pos + 1):
                return True
            mapping[v] = -1
            used[cand] = False
        return False

    return extend(0)


# -- recognition ------------------------------------------------------------


class GraphKind(enum.Enum):
    COMPLETE_BIPARTITE = "complete_bipartite"
    PROJECTIVE_PLANE_INCIDENCE = "projective_plane_incidence"
    OTHER = "other"


@dataclass(frozen=True)
class Recognition:
    kind: GraphKind
    param: Optional[int] = None

    def describe(self) -> str:
        if self.kind is GraphKind.COMPLETE_BIPARTITE:
            return f"K_{{{self.param},{self.param}}}"
        if self.kind is GraphKind.PROJECTIVE_PLANE_INCIDENCE:
            return "Heawood" if self.param == 2 else f"projective plane of order {self.param}"
        return "other"


def _parts(G: LabeledMultigraph) -> Optional[tuple[set[int], set[int]]]:
    if not is_bipartite(G):
        return None
    adj = G.neighbours()
    colour = {G.vertices[0]: 0} if G.vertices else {}
    queue = deque(colour)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in colour:
                colour[v] = colour[u] ^ 1
                queue.append(v)
    left = {v for v, c in colour.items() if c == 0}
    return left, set(G.vertices) - left


def recognize(G: LabeledMultigraph) -> Recognition:
    """Classify a connected graph as K_{l,l}, a projective-plane incidence graph, or other."""
    if len(G.components()) != 1:
        return Recognition(GraphKind.OTHER)
    parts = _parts(G)
    if parts is None:
        return Recognition(GraphKind.OTHER)
    left, right = parts
    l = len(left)
    if len(right) == l and len(G.edges) == l * l and len(set(G.edges)) == l * l:
        return Recognition(GraphKind.COMPLETE_BIPARTITE, l)
    m = metrics(G)
    r = m.regular_degree
    if r is not None and r >= 3 and len(set(G.edges)) == len(G.edges):
        q = r - 1
        if len(G.vertices) == 2 * (q * q + q + 1) and m.girth == 6 and m.diameter == 3:
            return Recognition(GraphKind.PROJECTIVE_PLANE_INCIDENCE, q)
    return Recognition(GraphKind.OTHER)


# -- export -----------------------------------------------------------------

_PALETTE = (
    "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
    "cyan4", "gold3", "gray40", "navy",
)


def _dot_order(G: LabeledMultigraph) -> list[int]:
    if G.rank is None:
        return list(G.vertices)
    return sorted(G.vertices, key=lambda v: (v & 1, v >> 1))


def to_dot(G: LabeledMultigraph, name: str = "star") -> str:
    comp_of = {}
    for idx, comp in enumerate(G.components()):
        for v in comp:
            comp_of[v] = idx
    lines = [f"graph {name} {{"]
    for v in _dot_order(G):
        shape = "box" if (G.rank is not None and v & 1) else "circle"
        colour = _PALETTE[comp_of[v] % len(_PALETTE)]
        lines.append(f'  "{G.label(v)}" [shape={shape}, color={colour}];')
    for u, v in G.edges:
        lines.append(f'  "{G.label(u)}" -- "{G.label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _finite(x: float):
    return None if x == math.inf else int(x)


def graph_to_json(G: LabeledMultigraph) -> dict:
    m = metrics(G)
    return {
        "n": G.rank if G.rank is not None else len(G.vertices),
        "edges": [[G.label(u), G.label(v)] for u, v in G.edges],
        "girth": _finite(m.girth),
        "diameter": list(m.diameter_per_component),
        "components": m.component_count,
        "regular": m.regular_degree,
        "bipartite": m.is_bipartite,
    }
