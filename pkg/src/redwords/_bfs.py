"""Exact diameter engine for large sparse graphs.

Distances come from plain breadth-first searches; the work is in choosing
few enough sources.  The driver keeps a per-vertex upper bound
min_s(d(s, v) + ecc(s)) and repeatedly scans from the vertex with the
largest bound (Takes-Kosters style).  Graphs whose eccentricities are
nearly constant defeat that pruning, so after a fixed number of rounds the
driver switches to batched eccentricity computation over every remaining
candidate, which is an exhaustive max-eccentricity pass.

All entry points are exact; numba acceleration is used when available and
falls back to vectorized numpy otherwise.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit, prange, set_num_threads

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is normally present
    HAVE_NUMBA = False

__all__ = ["csr_arrays", "bfs_distances", "exact_diameter", "HAVE_NUMBA"]

_TK_ROUND_LIMIT = 1024
_BATCH = 4096


def csr_arrays(n: int, edges) -> tuple[np.ndarray, np.ndarray]:
    """Adjacency of an undirected graph in CSR form: (indptr, indices)."""
    if len(edges) == 0:
        return np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int32)
    e = np.asarray(edges, dtype=np.int32)
    rows = np.concatenate([e[:, 0], e[:, 1]])
    cols = np.concatenate([e[:, 1], e[:, 0]])
    order = np.argsort(rows, kind="stable")
    rows, cols = rows[order], cols[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, rows + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, cols.astype(np.int32)


def _bfs_numpy(indptr: np.ndarray, indices: np.ndarray, src: int, n: int) -> np.ndarray:
    dist = np.full(n, -1, dtype=np.int32)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int32)
    lev = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        offs = np.repeat(starts, counts)
        within = np.arange(total, dtype=np.int64) - np.repeat(
            np.cumsum(counts) - counts, counts
        )
        nbrs = indices[offs + within]
        nbrs = nbrs[dist[nbrs] < 0]
        if nbrs.size == 0:
            break
        nbrs = np.unique(nbrs)
        lev += 1
        dist[nbrs] = lev
        frontier = nbrs
    return dist


if HAVE_NUMBA:

    @njit(cache=True)
    def _bfs_numba(indptr, indices, src, n):  # pragma: no cover - jitted
        dist = np.full(n, -1, np.int32)
        queue = np.empty(n, np.int32)
        head = 0
        tail = 1
        queue[0] = src
        dist[src] = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
        return dist

    @njit(cache=True, parallel=True)
    def _ecc_batch_numba(indptr, indices, sources, n):  # pragma: no cover
        m = sources.shape[0]
        out = np.empty(m, np.int32)
        for si in prange(m):
            src = sources[si]
            dist = np.full(n, -1, np.int32)
            queue = np.empty(n, np.int32)
            head = 0
            tail = 1
            queue[0] = src
            dist[src] = 0
            best = 0
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u]
                for k in range(indptr[u], indptr[u + 1]):
                    v = indices[k]
                    if dist[v] < 0:
                        dist[v] = du + 1
                        queue[tail] = v
                        tail += 1
            best = 0
            for v in range(n):
                if dist[v] > best:
                    best = dist[v]
            out[si] = best
        return out


def bfs_distances(indptr: np.ndarray, indices: np.ndarray, src: int, n: int) -> np.ndarray:
    """Distance vector from one source; -1 marks unreachable vertices."""
    if HAVE_NUMBA and n > 2048:
        return _bfs_numba(indptr, indices, src, n)
    return _bfs_numpy(indptr, indices, src, n)


def _ecc_batch(indptr, indices, sources, n, threads):
    if HAVE_NUMBA:
        if threads:
            set_num_threads(max(1, threads))
        return _ecc_batch_numba(indptr, indices, sources, n)
    return np.array(
        [int(_bfs_numpy(indptr, indices, int(s), n).max()) for s in sources],
        dtype=np.int32,
    )


def exact_diameter(
    indptr: np.ndarray,
    indices: np.ndarray,
    n: int,
    threads: int | None = None,
    candidates: np.ndarray | None = None,
) -> int:
    """Exact diameter of a connected undirected graph in CSR form.

    ``candidates`` may restrict the eccentricity search to a vertex subset
    known to attain the maximum (e.g. one representative per orbit of a
    graph automorphism); every vertex still participates in distances.
    """
    if n <= 1:
        return 0
    if candidates is None:
        candidates = np.arange(n, dtype=np.int64)
    in_cand = np.zeros(n, dtype=bool)
    in_cand[candidates] = True
    ubound = np.full(n, np.int32(2_000_000_000), dtype=np.int64)
    processed = np.zeros(n, dtype=bool)
    lb = 0

    def scan(src: int) -> np.ndarray:
        dist = bfs_distances(indptr, indices, src, n)
        if int(dist.min()) < 0:
            raise ValueError("graph is not connected")
        return dist

    def open_candidates() -> np.ndarray:
        return np.flatnonzero(in_cand & ~processed & (ubound > lb))

    # double sweep: a far vertex from an arbitrary start, then its antipode
    d = scan(0)
    a = int(np.argmax(d))
    d = scan(a)
    ecc_a = int(d.max())
    lb = ecc_a
    processed[a] = True
    np.minimum(ubound, d.astype(np.int64) + ecc_a, out=ubound)
    ubound[a] = ecc_a

    open_before = n
    src = int(np.argmax(d * in_cand))
    for round_no in range(1, _TK_ROUND_LIMIT + 1):
        if processed[src]:
            break
        d = scan(src)
        ecc = int(d.max())
        lb = max(lb, ecc)
        processed[src] = True
        np.minimum(ubound, d.astype(np.int64) + ecc, out=ubound)
        ubound[src] = ecc
        cand = open_candidates()
        if cand.size == 0:
            return lb
        if round_no % 64 == 0:
            # eccentricity-flat graphs defeat the bound pruning; bail out
            if cand.size > 0.95 * open_before:
                break
            open_before = cand.size
        src = int(cand[np.argmax(ubound[cand])])

    # pruning stalled: finish every remaining candidate in parallel batches
    remaining = open_candidates().astype(np.int32)
    pos = 0
    while pos < remaining.size:
        batch = remaining[pos : pos + _BATCH]
        eccs = _ecc_batch(indptr, indices, batch, n, threads)
        m = int(eccs.max()) if eccs.size else 0
        if m > lb:
            lb = m
            # a growing lb may rule out later batches entirely
            rest = remaining[pos + len(batch) :]
            rest = rest[ubound[rest] > lb]
            remaining = np.concatenate([remaining[: pos + len(batch)], rest])
        pos += len(batch)
    return lb
