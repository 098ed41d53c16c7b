"""Exact chromatic number by DSATUR-style branch and bound."""

from __future__ import annotations

from .errors import BudgetExceeded, OracleBudget
from .graph import Graph, _bits


def greedy_clique(g: Graph) -> int:
    """Size of a clique grown greedily from every start vertex."""
    best = 1 if g.n else 0
    for start in range(g.n):
        cand = g.rows[start]
        size = 1
        while cand:
            v = max(_bits(cand), key=lambda w: (g.rows[w] & cand).bit_count())
            size += 1
            cand &= g.rows[v]
        best = max(best, size)
    return best


def _dsatur_upper(g: Graph) -> int:
    color = [0] * g.n
    for _ in range(g.n):
        v = max(
            (w for w in range(g.n) if not color[w]),
            key=lambda w: (len({color[u] for u in _bits(g.rows[w])} - {0}), g.degree(w), -w),
        )
        used = {color[u] for u in _bits(g.rows[v])}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return max(color, default=0)


def is_colorable(g: Graph, k: int, node_limit: int = 10**7) -> bool:
    """Decide k-colorability by backtracking on the most saturated vertex."""
    n = g.n
    if n == 0:
        return True
    if k <= 0:
        return False
    color = [0] * n
    # forbidden[v] = bitset of colors already used by neighbors of v
    forbidden = [0] * n
    nodes = 0
    full = (1 << (k + 1)) - 2

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if not color[v]:
                kk = (forbidden[v].bit_count(), g.rows[v].bit_count())
                if kk > key:
                    best, key = v, kk
        return best

    def solve(done: int, used: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded("chromatic search node limit reached")
        v = pick()
        avail = full & ~forbidden[v]
        # symmetry: try at most one color not used so far
        tried_new = False
        for c in _bits(avail):
            if c > used:
                if tried_new:
                    continue
                tried_new = True
            saved = []
            color[v] = c
            for u in _bits(g.rows[v]):
                if not color[u] and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    saved.append(u)
            ok = all(full & ~forbidden[u] for u in saved)
            if ok and solve(done + 1, max(used, c)):
                return True
            for u in saved:
                forbidden[u] &= ~(1 << c)
            color[v] = 0
        return False

    return solve(0, 0)


def exact_chromatic_number(g: Graph, budget: OracleBudget | None = None) -> int:
    budget = budget or OracleBudget(max_n=16)
    if g.n > budget.max_n:
        raise BudgetExceeded(
            f"n={g.n} exceeds max_n={budget.max_n}",
            {"lower": greedy_clique(g), "upper": _dsatur_upper(g)},
        )
    if g.n == 0:
        return 0
    lo, hi = greedy_clique(g), _dsatur_upper(g)
    while lo < hi:
        if is_colorable(g, lo, budget.max_candidates):
            return lo
        lo += 1
    return hi
