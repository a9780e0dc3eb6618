# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef int _root_length(int *w, int k):
    cdef int d, j
    for d in range(1, k + 1):
        if k % d:
            continue
        for j in range(d, k):
            if w[j] != w[j - d]:
                break
        else:
            return d
    return k


cdef int *_to_buf(object seq, int extra) except NULL:
    cdef int k = len(seq)
    cdef int *buf = <int *> malloc((k + extra + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int j = 0
    for c in seq:
        buf[j] = c
        j += 1
    return buf


cdef inline int _shifted(int c, int h, int n):
    return ((((c >> 1) + h) % n) << 1) | (c & 1)


cdef int _compare_orbit(int *w, int *inv, int k, int n, int *best, bint early_exit):
    """Scan the orbit; with early_exit return 0 as soon as something beats w.

    Without early_exit, ``best`` ends up holding the orbit minimum.
    """
    cdef int side, s, j, c, h, b0
    cdef int *base
    for side in range(2):
        base = w if side == 0 else inv
        for s in range(k):
            b0 = base[s]
            if b0 & 1:
                continue
            h = n - (b0 >> 1)
            for j in range(k):
                c = _shifted(base[(s + j) % k], h, n)
                if c != best[j]:
                    if c < best[j]:
                        if early_exit:
                            return 0
                        for j in range(k):
                            best[j] = _shifted(base[(s + j) % k], h, n)
                    break
    return 1


def canonical_form(w, int n):
    cdef int k = len(w)
    if k == 0:
        return ()
    cdef int *buf = _to_buf(w, 0)
    cdef int *inv = <int *> malloc(k * sizeof(int))
    cdef int *best = <int *> malloc(k * sizeof(int))
    cdef int j
    try:
        for j in range(k):
            inv[j] = buf[k - 1 - j] ^ 1
            best[j] = 2 * n
        _compare_orbit(buf, inv, k, n, best, False)
        return tuple([best[j] for j in range(k)])
    finally:
        free(buf)
        free(inv)
        free(best)


cdef bint _is_canonical(int *w, int *inv, int k, int n):
    cdef int j
    if k == 0:
        return True
    if w[0] != 0:
        return False
    for j in range(k):
        inv[j] = w[k - 1 - j] ^ 1
    return _compare_orbit(w, inv, k, n, w, True) == 1


def is_canonical(w, int n):
    cdef int k = len(w)
    if k == 0:
        return True
    cdef int *buf = _to_buf(w, 0)
    cdef int *inv = <int *> malloc(k * sizeof(int))
    try:
        return _is_canonical(buf, inv, k, n)
    finally:
        free(buf)
        free(inv)


cdef bint _prefix_ok(int *buf, int m, int n):
    cdef int p, j, c, h, c0
    for p in range(1, m):
        c0 = buf[p]
        if c0 & 1:
            continue
        h = n - (c0 >> 1)
        for j in range(m - p):
            c = _shifted(buf[p + j], h, n)
            if c != buf[j]:
                if c < buf[j]:
                    return False
                break
    return True


def enumerate_prefix(int n, int k, prefix, bint cyclically_reduced, bint canonical, bint positive=False):
    out = []
    cdef int m0 = len(prefix)
    if m0 > k:
        return out
    cdef int top = 2 * n
    cdef int *buf = <int *> malloc((k + 1) * sizeof(int))
    cdef int *inv = <int *> malloc((k + 1) * sizeof(int))
    cdef int *choice = <int *> malloc((k + 1) * sizeof(int))
    cdef int j, pos, c
    cdef bint placed
    try:
        for j in range(k + 1):
            buf[j] = 0
            choice[j] = -1
        j = 0
        for c in prefix:
            buf[j] = c
            j += 1
        if positive:
            for j in range(m0):
                if buf[j] & 1:
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
        if m0 == k:
            if _leaf_ok(buf, inv, k, n, cyclically_reduced, canonical):
                out.append(tuple([buf[j] for j in range(k)]))
            return out
        pos = m0
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
                if _leaf_ok(buf, inv, k, n, cyclically_reduced, canonical):
                    out.append(tuple([buf[j] for j in range(k)]))
            else:
                pos += 1
        return out
    finally:
        free(buf)
        free(inv)
        free(choice)


cdef bint _leaf_ok(int *buf, int *inv, int k, int n, bint cyclically_reduced, bint canonical):
    if k and cyclically_reduced and buf[k - 1] == buf[0] ^ 1:
        return False
    if canonical and not _is_canonical(buf, inv, k, n):
        return False
    return True


def star_edges(relators, int n):
    cdef int k, d, s, j, x, y, side
    cdef int *r
    cdef int *base
    cdef int *inv
    closure = set()
    for rel in relators:
        k = len(rel)
        if k == 0:
            continue
        r = _to_buf(rel, 0)
        inv = <int *> malloc(k * sizeof(int))
        try:
            d = _root_length(r, k)
            for j in range(d):
                inv[j] = r[d - 1 - j] ^ 1
            for side in range(2):
                base = r if side == 0 else inv
                for s in range(d):
                    closure.add(tuple([base[(s + j) % d] for j in range(d)]))
        finally:
            free(r)
            free(inv)
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


cdef int _build_csr(int nv, edges, int **offsets_out, int **targets_out) except -1:
    """Simple-graph CSR adjacency (loops and duplicate edges dropped)."""
    seen = set()
    pairs = []
    for e in edges:
        u, v = e
        if u == v or (u, v) in seen:
            continue
        seen.add((u, v))
        pairs.append((u, v))
    cdef int m = len(pairs)
    cdef int *deg = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *offsets = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *targets = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int i, a, b
    for i in range(nv + 1):
        deg[i] = 0
    for p in pairs:
        a, b = p
        deg[a] += 1
        deg[b] += 1
    offsets[0] = 0
    for i in range(nv):
        offsets[i + 1] = offsets[i] + deg[i]
        deg[i] = offsets[i]
    for p in pairs:
        a, b = p
        targets[deg[a]] = b
        deg[a] += 1
        targets[deg[b]] = a
        deg[b] += 1
    free(deg)
    offsets_out[0] = offsets
    targets_out[0] = targets
    return 0


def girth(int nv, edges):
    cdef int *offsets
    cdef int *targets
    cdef int *dist
    cdef int *parent
    cdef int *queue
    cdef int best = -1
    cdef int s, i, head, tail, u, v, t, g
    for e in edges:
        if e[0] == e[1]:
            return 1
    if len(set(map(tuple, edges))) < len(edges):
        return 2
    _build_csr(nv, edges, &offsets, &targets)
    dist = <int *> malloc((nv + 1) * sizeof(int))
    parent = <int *> malloc((nv + 1) * sizeof(int))
    queue = <int *> malloc((nv + 1) * sizeof(int))
    try:
        for s in range(nv):
            for i in range(nv):
                dist[i] = -1
            dist[s] = 0
            parent[s] = -1
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            while head < tail:
                u = queue[head]
                head += 1
                if best != -1 and 2 * dist[u] + 1 >= best:
                    break
                for t in range(offsets[u], offsets[u + 1]):
                    v = targets[t]
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        queue[tail] = v
                        tail += 1
                    elif parent[u] != v:
                        g = dist[u] + dist[v] + 1
                        if best == -1 or g < best:
                            best = g
        return best
    finally:
        free(offsets)
        free(targets)
        free(dist)
        free(parent)
        free(queue)


def eccentricities(int nv, edges):
    cdef int *offsets
    cdef int *targets
    _build_csr(nv, edges, &offsets, &targets)
    cdef int *dist = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((nv + 1) * sizeof(int))
    cdef int s, i, head, tail, u, v, t, far
    ecc = [0] * nv
    try:
        for s in range(nv):
            for i in range(nv):
                dist[i] = -1
            dist[s] = 0
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            far = 0
            while head < tail:
                u = queue[head]
                head += 1
                if dist[u] > far:
                    far = dist[u]
                for t in range(offsets[u], offsets[u + 1]):
                    v = targets[t]
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        queue[tail] = v
                        tail += 1
            ecc[s] = far
        return ecc
    finally:
        free(offsets)
        free(targets)
        free(dist)
        free(queue)
