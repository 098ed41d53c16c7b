"""Interval and circular-arc recognition for small graphs.

Everything here is exhaustive and meant for graphs of at most a handful of
vertices: the oracles only ever ask about graphs with n <= 7.

Two independent interval tests are provided.  :func:`is_interval_graph`
orders maximal cliques so that each vertex occupies a contiguous run;
:func:`interval_model` inserts endpoints one vertex at a time.  Circular-arc
graphs are recognized by the same insertion idea on a cyclic sequence.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from .graph import Graph, _bits, pair_index

__all__ = [
    "maximal_cliques",
    "is_interval_graph",
    "interval_model",
    "circular_arc_model",
    "is_circular_arc_graph",
    "arc_model_graph",
    "graph_classes",
    "labeled_masks",
]


def maximal_cliques(g: Graph) -> list[int]:
    """Maximal cliques as bitsets (Bron-Kerbosch with pivoting)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (g.rows[u] & p).bit_count())
        for v in _bits(p & ~g.rows[pivot]):
            expand(r | 1 << v, p & g.rows[v], x & g.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return out


def is_interval_graph(g: Graph) -> bool:
    """Search for a linear order of maximal cliques with contiguous vertex runs."""
    if g.n <= 3:
        return True
    cliques = maximal_cliques(g)
    if len(cliques) > g.n:
        return False

    def place(remaining: list[int], prev: int, closed: int) -> bool:
        if not remaining:
            return True
        for i, c in enumerate(remaining):
            if c & closed:
                continue
            if place(remaining[:i] + remaining[i + 1:], c, closed | (prev & ~c)):
                return True
        return False

    return place(cliques, 0, 0)


def interval_model(g: Graph) -> list[tuple[int, int]] | None:
    """Exhaustive endpoint-order search for an interval model.

    Returns closed integer intervals ``(lo, hi)`` with distinct endpoints in
    ``0..2n-1`` realizing ``g``, or ``None``.
    """
    n = g.n
    if n == 0:
        return []
    seq: list[tuple[int, int]] = []  # (vertex, 0=left/1=right)

    def consistent(v: int) -> bool:
        where = {tok: i for i, tok in enumerate(seq)}
        lv, rv = where[(v, 0)], where[(v, 1)]
        for u in range(v):
            lu, ru = where[(u, 0)], where[(u, 1)]
            meet = not (ru < lv or rv < lu)
            if meet != g.has_edge(u, v):
                return False
        return True

    def insert(v: int) -> bool:
        if v == n:
            return True
        size = len(seq)
        for i in range(size + 1):
            seq.insert(i, (v, 0))
            for j in range(i + 1, size + 2):
                seq.insert(j, (v, 1))
                if consistent(v) and insert(v + 1):
                    return True
                seq.pop(j)
            seq.pop(i)
        return False

    if not insert(0):
        return None
    where = {tok: i for i, tok in enumerate(seq)}
    return [(where[(v, 0)], where[(v, 1)]) for v in range(n)]


def _arcs_disjoint(size: int, sa: int, ea: int, sb: int, eb: int) -> bool:
    # arc a runs clockwise sa -> ea; b is disjoint iff it sits inside the gap ea -> sa
    off_sb = (sb - ea) % size
    off_eb = (eb - ea) % size
    off_sa = (sa - ea) % size
    return 0 < off_sb < off_eb < off_sa


def arc_model_graph(arcs: list[tuple[int, int]], size: int) -> Graph:
    """Intersection graph of clockwise arcs ``(start, end)`` on ``size`` points."""
    n = len(arcs)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            cu = _arc_points(arcs[u], size)
            if cu & _arc_points(arcs[v], size):
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def _arc_points(arc: tuple[int, int], size: int) -> set[int]:
    s, e = arc
    return {(s + t) % size for t in range((e - s) % size + 1)}


def circular_arc_model(g: Graph) -> list[tuple[int, int]] | None:
    """Exhaustive search over cyclic endpoint orders.

    Vertices are inserted lowest degree first (disjointness prunes hardest); the first
    arc is pinned to fix rotation.  Returns clockwise arcs ``(start, end)``
    with distinct endpoints on a circle of ``2n`` points, or ``None``.
    """
    n = g.n
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (g.degree(v), v))
    seq: list[tuple[int, int]] = [(order[0], 0), (order[0], 1)]

    def consistent(k: int) -> bool:
        v = order[k]
        size = len(seq)
        where = {tok: i for i, tok in enumerate(seq)}
        sv, ev = where[(v, 0)], where[(v, 1)]
        for u in order[:k]:
            su, eu = where[(u, 0)], where[(u, 1)]
            meet = not _arcs_disjoint(size, su, eu, sv, ev)
            if meet != g.has_edge(u, v):
                return False
        return True

    def insert(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        size = len(seq)
        # index 0 and index len(seq) are the same cyclic gap; use 1..len(seq)
        for i in range(1, size + 1):
            seq.insert(i, (v, 0))
            for j in range(1, size + 2):
                seq.insert(j, (v, 1))
                if consistent(k) and insert(k + 1):
                    return True
                seq.pop(j)
            seq.pop(i)
        return False

    if not insert(1):
        return None
    where = {tok: i for i, tok in enumerate(seq)}
    return [(where[(v, 0)], where[(v, 1)]) for v in range(n)]


def is_circular_arc_graph(g: Graph) -> bool:
    return circular_arc_model(g) is not None


# -- labeled graph classes -------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _perm_pair_map(n: int) -> np.ndarray:
    """``out[p, e]`` = index of pair ``e`` after applying permutation ``p``."""
    pairs = [(i, j) for j in range(n) for i in range(j)]
    perms = list(itertools.permutations(range(n)))
    out = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for a, p in enumerate(perms):
        for e, (i, j) in enumerate(pairs):
            out[a, e] = pair_index(p[i], p[j])
    return out


def orbit(n: int, mask: int) -> np.ndarray:
    """All labeled masks isomorphic to ``mask`` (sorted, unique)."""
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return np.array([0], dtype=np.int64)
    bits = np.array([mask >> e & 1 for e in range(nbits)], dtype=np.int64)
    weights = np.left_shift(np.int64(1), _perm_pair_map(n))
    return np.unique((weights * bits).sum(axis=1))


@functools.lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[tuple[int, np.ndarray], ...]:
    """Isomorphism classes of n-vertex graphs as ``(representative, orbit)``.

    The representative is the smallest mask of its orbit; every labeled
    graph appears in exactly one orbit.
    """
    if n > 7:
        raise ValueError("class enumeration is limited to n <= 7")
    total = 1 << (n * (n - 1) // 2)
    seen = np.zeros(total, dtype=bool)
    out = []
    ptr = 0
    while ptr < total:
        free = np.flatnonzero(~seen[ptr:ptr + 65536])
        if not free.size:
            ptr += 65536
            continue
        rep = ptr + int(free[0])
        members = orbit(n, rep)
        seen[members] = True
        out.append((rep, members))
        ptr = rep + 1
    return tuple(out)


@functools.lru_cache(maxsize=None)
def labeled_masks(n: int, kind: str) -> np.ndarray:
    """Sorted masks of all labeled n-vertex graphs of the given kind.

    ``kind`` is ``"interval"`` or ``"circular-arc"``.  The recognizer runs
    once per isomorphism class and the verdict is spread over the orbit.
    """
    test = {"interval": is_interval_graph, "circular-arc": is_circular_arc_graph}[kind]
    parts = [members for rep, members in graph_classes(n) if test(Graph.from_mask(n, rep))]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.sort(np.concatenate(parts))
