"""Hot numeric kernels.

Every kernel exists twice: a loop implementation that numba compiles
(``*_loops``) and a vectorised numpy implementation (``*_numpy``). The public
names at the bottom dispatch on :data:`folbkit._accel.HAVE_NUMBA`. Both
variants must return identical results; ``tests/test_kernels.py`` pins that.
"""

import numpy as np

from ._accel import HAVE_NUMBA, jit

# ---------------------------------------------------------------- distances


def _apsp_loops(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if dist[s, w] < 0:
                    dist[s, w] = du + 1
                    queue[tail] = w
                    tail += 1
    return dist


def _apsp_numpy(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int32)
    a = adj.astype(np.int32)
    frontier = np.eye(n, dtype=bool)
    reached = frontier.copy()
    dist[frontier] = 0
    d = 0
    while frontier.any():
        d += 1
        frontier = ((frontier.astype(np.int32) @ a) > 0) & ~reached
        reached |= frontier
        dist[frontier] = d
    return dist


# ------------------------------------------------------- four-point condition


def _four_point_loops(dist):
    # twice the Gromov hyperbolicity and the lexicographically least
    # quadruple attaining it
    n = dist.shape[0]
    best = 0
    wit = np.zeros(4, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    s1 = dist[a, b] + dist[c, d]
                    s2 = dist[a, c] + dist[b, d]
                    s3 = dist[a, d] + dist[b, c]
                    if s1 < s2:
                        s1, s2 = s2, s1
                    if s2 < s3:
                        s2, s3 = s3, s2
                    if s1 < s2:
                        s1, s2 = s2, s1
                    gap = s1 - s2
                    if gap > best:
                        best = gap
                        wit[0] = a
                        wit[1] = b
                        wit[2] = c
                        wit[3] = d
    return best, wit


def _four_point_numpy(dist):
    n = dist.shape[0]
    d = dist.astype(np.int64)
    best = 0
    wit = np.zeros(4, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            s1 = d[a, b] + d  # indexed [c, d]
            s2 = d[a][:, None] + d[b][None, :]
            s3 = d[a][None, :] + d[b][:, None]
            stack = np.sort(np.stack([s1, s2, s3]), axis=0)
            gap = stack[2] - stack[1]
            g = int(gap.max())
            if g > best:
                best = g
                c, dd = np.unravel_index(int(np.argmax(gap)), gap.shape)
                wit[:] = (a, b, c, dd)
    return best, wit


# --------------------------------------------------------------- axioms 4-7


def _ib4_loops(r):
    m = r.shape[0]
    for u in range(m):
        for v in range(m):
            for w in range(m):
                if not r[u, w, v]:
                    continue
                for x in range(m):
                    if r[u, x, w] and not r[u, x, v]:
                        return np.array([u, v, w, x], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


def _ib5_loops(r):
    m = r.shape[0]
    for u in range(m):
        for v in range(m):
            for w in range(m):
                if not r[u, v, w]:
                    continue
                for x in range(m):
                    if r[u, v, x] and r[u, w, x] and not r[v, w, x]:
                        return np.array([u, v, w, x], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


def _ib6_loops(r, e):
    m = r.shape[0]
    for u in range(m):
        for u2 in range(m):
            if not e[u, u2]:
                continue
            for v in range(m):
                if not r[u, u2, v]:
                    continue
                for v2 in range(m):
                    if e[v, v2] and r[u2, u, v2] and r[u, v2, v] and not r[u2, v, v2]:
                        return np.array([u, u2, v, v2], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


def _ib7_loops(r, e):
    m = r.shape[0]
    for u in range(m):
        for u2 in range(m):
            if not e[u, u2]:
                continue
            for v in range(m):
                if not r[u, u2, v]:
                    continue
                for v2 in range(m):
                    if (e[v, v2] and not r[u, v2, v] and not r[u2, v, v2]
                            and not r[u, u2, v2]):
                        return np.array([u, u2, v, v2], dtype=np.int64)
    return np.empty(0, dtype=np.int64)


def _first(mask):
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return np.empty(0, dtype=np.int64)
    return idx[0].astype(np.int64)


def edges_of_relation(r):
    """E_B as a boolean matrix: u != v and nothing strictly between them."""
    m = r.shape[0]
    u, x, v = np.ogrid[:m, :m, :m]
    strictly_inside = r & (x != u) & (x != v)
    e = ~strictly_inside.any(axis=1)
    np.fill_diagonal(e, False)
    return e


def _ib4_numpy(r):
    m = r.shape[0]
    u, v, w, x = np.ogrid[:m, :m, :m, :m]
    return _first(r[u, w, v] & r[u, x, w] & ~r[u, x, v])


def _ib5_numpy(r):
    m = r.shape[0]
    u, v, w, x = np.ogrid[:m, :m, :m, :m]
    return _first(r[u, v, x] & r[u, w, x] & r[u, v, w] & ~r[v, w, x])


def _ib6_numpy(r, e):
    m = r.shape[0]
    u, u2, v, v2 = np.ogrid[:m, :m, :m, :m]
    return _first(e[u, u2] & e[v, v2] & r[u2, u, v2] & r[u, u2, v] & r[u, v2, v] & ~r[u2, v, v2])


def _ib7_numpy(r, e):
    m = r.shape[0]
    u, u2, v, v2 = np.ogrid[:m, :m, :m, :m]
    return _first(e[u, u2] & e[v, v2] & r[u, u2, v] & ~r[u, v2, v] & ~r[u2, v, v2] & ~r[u, u2, v2])


# ------------------------------------------------------- subgraph embedding


def _embed_loops(gadj, gdist, gdeg, hadj, hdist, hdeg, isometric):
    """Lexicographically least injective map of pattern h into g.

    ``isometric`` nonzero demands equal distances; otherwise the image must be
    an induced copy. ``hdist`` entries of -1 (disconnected pattern) disable
    the distance bound for that pair.
    """
    n = gadj.shape[0]
    p = hadj.shape[0]
    f = np.full(p, -1, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    if p == 0:
        return f
    if p > n:
        return np.empty(0, dtype=np.int64)
    i = 0
    cand = np.zeros(p, dtype=np.int64)
    while i >= 0:
        if i == p:
            return f
        c = cand[i]
        placed = False
        while c < n:
            if not used[c] and gdeg[c] >= hdeg[i]:
                ok = True
                for j in range(i):
                    a = f[j]
                    if isometric:
                        if gdist[c, a] != hdist[i, j]:
                            ok = False
                            break
                    else:
                        if gadj[c, a] != hadj[i, j]:
                            ok = False
                            break
                        hd = hdist[i, j]
                        if hd >= 0 and gdist[c, a] > hd:
                            ok = False
                            break
                if ok:
                    f[i] = c
                    used[c] = True
                    cand[i] = c + 1
                    placed = True
                    break
            c += 1
        if placed:
            i += 1
            if i < p:
                cand[i] = 0
        else:
            cand[i] = 0
            i -= 1
            if i >= 0:
                used[f[i]] = False
                f[i] = -1
    return np.empty(0, dtype=np.int64)


# ------------------------------------------------------------------ dispatch

if HAVE_NUMBA:
    _apsp_jit = jit(_apsp_loops)
    _four_point_jit = jit(_four_point_loops)
    _ib_jit = {4: jit(_ib4_loops), 5: jit(_ib5_loops), 6: jit(_ib6_loops), 7: jit(_ib7_loops)}
    _embed_jit = jit(_embed_loops)

_ib_numpy = {4: _ib4_numpy, 5: _ib5_numpy, 6: _ib6_numpy, 7: _ib7_numpy}


def csr(adj):
    n = adj.shape[0]
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(adj.sum(axis=1))
    indices = np.nonzero(adj)[1].astype(np.int64)
    return indptr, indices


def apsp(adj, use_numba=None):
    """All-pairs hop distances; -1 marks unreachable pairs."""
    use_numba = HAVE_NUMBA if use_numba is None else use_numba
    if use_numba:
        indptr, indices = csr(adj)
        return _apsp_jit(indptr, indices, adj.shape[0])
    return _apsp_numpy(adj)


def four_point(dist, use_numba=None):
    """Return (2 * delta*, witness quadruple) for a distance matrix."""
    use_numba = HAVE_NUMBA if use_numba is None else use_numba
    if dist.shape[0] == 0:
        return 0, (0, 0, 0, 0)
    fn = _four_point_jit if use_numba else _four_point_numpy
    best, wit = fn(np.ascontiguousarray(dist, dtype=np.int64))
    return int(best), tuple(int(t) for t in wit)


def axiom_witness(r, k, use_numba=None):
    """Lexicographically least counterexample to axiom IB``k`` (k in 4..7)."""
    use_numba = HAVE_NUMBA if use_numba is None else use_numba
    fn = _ib_jit[k] if use_numba else _ib_numpy[k]
    r = np.ascontiguousarray(r, dtype=np.bool_)
    if k in (6, 7):
        wit = fn(r, edges_of_relation(r))
    else:
        wit = fn(r)
    return tuple(int(t) for t in wit) if len(wit) else None


def embed(gadj, gdist, hadj, hdist, isometric, use_numba=None):
    use_numba = HAVE_NUMBA if use_numba is None else use_numba
    gadj = np.ascontiguousarray(gadj, dtype=np.bool_)
    hadj = np.ascontiguousarray(hadj, dtype=np.bool_)
    gdist = np.ascontiguousarray(gdist, dtype=np.int64)
    hdist = np.ascontiguousarray(hdist, dtype=np.int64)
    gdeg = gadj.sum(axis=1).astype(np.int64)
    hdeg = hadj.sum(axis=1).astype(np.int64)
    fn = _embed_jit if use_numba else _embed_loops
    f = fn(gadj, gdist, gdeg, hadj, hdist, hdeg, 1 if isometric else 0)
    if len(f) != hadj.shape[0]:
        return None
    return tuple(int(t) for t in f)
