"""Numpy reference lane for the hot kernels.

Every function here has a compiled twin in ``_fast.pyx`` with the same
signature and semantics; integer outputs match exactly, float outputs to
roundoff. Graphs arrive as CSR arrays: ``indptr`` (int64, n+1) and
``indices`` (int32, 2m) with sorted neighbor lists.
"""

import numpy as np


def gather_rows(indptr, indices, rows):
    """Concatenate the neighbor slices of ``rows`` into one array."""
    rows = np.asarray(rows, dtype=np.int64)
    lengths = indptr[rows + 1] - indptr[rows]
    nonzero = lengths > 0
    rows, lengths = rows[nonzero], lengths[nonzero]
    total = int(lengths.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    starts = indptr[rows]
    # standard multi-slice trick: cumsum over per-row step offsets
    pos = np.ones(total, dtype=np.int64)
    pos[0] = starts[0]
    bounds = np.cumsum(lengths)[:-1]
    pos[bounds] = starts[1:] - starts[:-1] - lengths[:-1] + 1
    np.cumsum(pos, out=pos)
    return indices[pos]


def neighbor_sums(indptr, indices, x):
    """out[i] = sum of x over the neighbors of i (adjacency matvec)."""
    seg = np.concatenate(([0.0], np.cumsum(x[indices])))
    return seg[indptr[1:]] - seg[indptr[:-1]]


def neighbors_in_mask(indptr, indices, mask, rows):
    """Per-row count of neighbors v with mask[v] True."""
    rows = np.asarray(rows, dtype=np.int64)
    hits = mask[gather_rows(indptr, indices, rows)]
    seg = np.concatenate(([0], np.cumsum(hits, dtype=np.int64)))
    lengths = indptr[rows + 1] - indptr[rows]
    # gather_rows drops empty rows, so rebuild boundaries over all rows
    ends = np.cumsum(lengths)
    starts = ends - lengths
    return seg[ends] - seg[starts]


def crossing_edges(indptr, indices, mask):
    """Number of edges with exactly one endpoint inside ``mask``."""
    members = np.nonzero(mask)[0]
    if members.size == 0:
        return 0
    nbrs = gather_rows(indptr, indices, members)
    return int(np.count_nonzero(~mask[nbrs]))


def bfs_reach(indptr, indices, sources, max_hops=-1):
    """Boolean mask of nodes within ``max_hops`` of ``sources`` (-1: no cap)."""
    n = indptr.shape[0] - 1
    mask = np.zeros(n, dtype=bool)
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    mask[frontier] = True
    hops = 0
    while frontier.size and hops != max_hops:
        nbrs = gather_rows(indptr, indices, frontier)
        nbrs = nbrs[~mask[nbrs]]
        if nbrs.size == 0:
            break
        mask[nbrs] = True
        frontier = np.unique(nbrs).astype(np.int64)
        hops += 1
    return mask


def sweep_trace(indptr, indices, degrees, order):
    """Cut and volume of every prefix of ``order``.

    Returns int64 arrays (cut, vol) where entry k-1 describes the prefix of
    length k. An edge with prefix ranks a < b crosses exactly the prefixes
    of length a+1 .. b.
    """
    n = order.shape[0]
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    src = np.repeat(np.arange(n), np.diff(indptr))
    dst = indices
    once = src < dst
    ra = rank[src[once]]
    rb = rank[dst[once]]
    lo = np.minimum(ra, rb)
    hi = np.maximum(ra, rb)
    delta = np.zeros(n + 1, dtype=np.int64)
    np.add.at(delta, lo + 1, 1)
    np.add.at(delta, hi + 1, -1)
    cut = np.cumsum(delta)[1:]
    vol = np.cumsum(degrees[order])
    return cut, vol


def distance_moments(indptr, indices):
    """(sum of pairwise distances, diameter, all_reached) via all-pairs BFS.

    Distances are counted once per unordered pair; ``all_reached`` is False
    for disconnected graphs, in which case the other values only cover
    reachable pairs.
    """
    n = indptr.shape[0] - 1
    total = 0
    diameter = 0
    reached_pairs = 0
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        frontier = np.array([s], dtype=np.int64)
        d = 0
        while frontier.size:
            d += 1
            nbrs = gather_rows(indptr, indices, frontier)
            nbrs = nbrs[dist[nbrs] < 0]
            if nbrs.size == 0:
                break
            frontier = np.unique(nbrs).astype(np.int64)
            dist[frontier] = d
        seen = dist >= 0
        total += int(dist[seen].sum())
        reached_pairs += int(np.count_nonzero(seen)) - 1
        if np.count_nonzero(seen):
            diameter = max(diameter, int(dist[seen].max()))
    all_reached = reached_pairs == n * (n - 1)
    return total // 2, diameter, all_reached


def jacobi_eigh(a, tol=1e-13, max_sweeps=60):
    """Eigendecomposition of a dense symmetric matrix by cyclic Jacobi.

    Returns eigenvalues ascending and the matching eigenvector columns.
    ``tol`` is relative to the Frobenius norm of the input.
    """
    a = np.array(a, dtype=np.float64, order="C")
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    threshold = tol * scale
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-3 * threshold / n:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    w = a.diagonal().copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]
