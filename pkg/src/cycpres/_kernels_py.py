"""Pure-Python hot kernels.

Words are tuples of letter codes (``2*i + inverse_bit``).  Graphs are given as
a vertex count plus a list of ``(u, v)`` edge pairs with ``u <= v``.  The
compiled module ``_kernels`` exports the same functions with the same
semantics; ``cycpres.kernels`` picks one at import time.
"""

from collections import deque

BACKEND = "python"


def _root_length(w):
    k = len(w)
    for d in range(1, k + 1):
        if k % d == 0 and w[:d] * (k // d) == w:
            return d
    return k


def canonical_form(w, n):
    """Least word, in code order, among shifts, rotations and inverses of w."""
    k = len(w)
    if k == 0:
        return ()
    inv = tuple(c ^ 1 for c in reversed(w))
    best = None
    for base in (w, inv):
        for s in range(k):
            if base[s] & 1:
                continue
            h = n - (base[s] >> 1)
            cand = tuple(
                ((((base[(s + j) % k] >> 1) + h) % n) << 1) | (base[(s + j) % k] & 1)
                for j in range(k)
            )
            if best is None or cand < best:
                best = cand
    return best


def is_canonical(w, n):
    k = len(w)
    if k == 0:
        return True
    if w[0] != 0:
        return False
    inv = tuple(c ^ 1 for c in reversed(w))
    for base in (w, inv):
        for s in range(k):
            b0 = base[s]
            if b0 & 1:
                continue
            h = n - (b0 >> 1)
            for j in range(k):
                c = base[(s + j) % k]
                c = ((((c >> 1) + h) % n) << 1) | (c & 1)
                if c != w[j]:
                    if c < w[j]:
                        return False
                    break
    return True


def _prefix_ok(buf, m, n):
    # Rotations starting at a positive letter must not undercut the prefix.
    for p in range(1, m):
        c0 = buf[p]
        if c0 & 1:
            continue
        h = n - (c0 >> 1)
        for j in range(m - p):
            c = buf[p + j]
            c = ((((c >> 1) + h) % n) << 1) | (c & 1)
            if c != buf[j]:
                if c < buf[j]:
                    return False
                break
    return True


def enumerate_prefix(n, k, prefix, cyclically_reduced, canonical, positive=False):
    """All length-k words extending ``prefix`` in increasing code order.

    With ``cyclically_reduced`` only cyclically reduced words are produced;
    with ``canonical`` only orbit-least representatives are produced; with
    ``positive`` only letters x_i (never x_i^-1) are used.
    """
    out = []
    m0 = len(prefix)
    if m0 > k:
        return out
    buf = list(prefix) + [0] * (k - m0)
    top = 2 * n
    if positive and any(c & 1 for c in buf[:m0]):
        return out
    if cyclically_reduced:
        for j in range(m0 - 1):
            if buf[j + 1] == buf[j] ^ 1:
                return out
    if canonical:
        if m0 and buf[0] != 0:
            return out
        if not _prefix_ok(buf, m0, n):
            return out

    def leaf():
        if k and cyclically_reduced and buf[k - 1] == buf[0] ^ 1:
            return
        w = tuple(buf)
        if canonical and not is_canonical(w, n):
            return
        out.append(w)

    if m0 == k:
        leaf()
        return out
    # iterative DFS over positions m0 .. k-1
    pos = m0
    choice = [-1] * (k + 1)
    while pos >= m0:
        c = choice[pos] + 1
        placed = False
        while c < top:
            if pos == 0 and canonical and c != 0:
                c = top
                break
            if positive and c & 1:
                c += 1
                continue
            if cyclically_reduced and pos > 0 and c == buf[pos - 1] ^ 1:
                c += 1
                continue
            buf[pos] = c
            if canonical and not _prefix_ok(buf, pos + 1, n):
                c += 1
                continue
            placed = True
            break
        if not placed:
            choice[pos] = -1
            pos -= 1
            continue
        choice[pos] = c
        if pos == k - 1:
            leaf()
        else:
            pos += 1
    return out


def star_edges(relators, n):
    """Edge list of the star graph of the given cyclically reduced relators.

    Vertices are letter codes.  One edge x - y per inverse pair of words
    ``x y^-1 ...`` in the symmetrized closure; returned sorted.
    """
    closure = set()
    for r in relators:
        if not r:
            continue
        d = _root_length(r)
        v = tuple(r[:d])
        inv = tuple(c ^ 1 for c in reversed(v))
        for base in (v, inv):
            for s in range(d):
                closure.add(base[s:] + base[:s])
    counts = {}
    for word in closure:
        x = word[0]
        y = word[1 % len(word)] ^ 1
        e = (x, y) if x <= y else (y, x)
        counts[e] = counts.get(e, 0) + 1
    edges = []
    for e in sorted(counts):
        c = counts[e]
        if c & 1:
            raise ValueError(f"unpaired star-graph edge {e}")
        edges.extend([e] * (c // 2))
    return edges


def _simple_adjacency(nv, edges):
    adj = [[] for _ in range(nv)]
    seen = set()
    for u, v in edges:
        if u == v or (u, v) in seen:
            continue
        seen.add((u, v))
        adj[u].append(v)
        adj[v].append(u)
    return adj


def girth(nv, edges):
    """Length of the shortest reduced closed path; -1 if there is none."""
    if any(u == v for u, v in edges):
        return 1
    if len(set(map(tuple, edges))) < len(edges):
        return 2
    adj = _simple_adjacency(nv, edges)
    best = -1
    dist = [-1] * nv
    parent = [-1] * nv
    for s in range(nv):
        for i in range(nv):
            dist[i] = -1
        dist[s] = 0
        parent[s] = -1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best != -1 and 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    g = dist[u] + dist[v] + 1
                    if best == -1 or g < best:
                        best = g
    return best


def eccentricities(nv, edges):
    """Per-vertex eccentricity within its own connected component."""
    adj = _simple_adjacency(nv, edges)
    ecc = [0] * nv
    dist = [-1] * nv
    for s in range(nv):
        for i in range(nv):
            dist[i] = -1
        dist[s] = 0
        queue = deque([s])
        far = 0
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du > far:
                far = du
            for v in adj[u]:
                if dist[v] == -1:
                    dist[v] = du + 1
                    queue.append(v)
        ecc[s] = far
    return ecc
