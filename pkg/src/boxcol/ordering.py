"""Linear orders, weak/strong r-reachability and coloring numbers.

Conventions: position 0 is the smallest vertex of an order.  A vertex is
always reachable from itself, so reachable sets contain ``v`` and the
coloring number of an edgeless graph is 1.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, OracleBudget
from .graph import Graph, _bits

__all__ = [
    "LinearOrder",
    "ReachMode",
    "degeneracy_order",
    "reachable_set",
    "reachable_sets",
    "reachable_set_by_paths",
    "coloring_number_under_order",
    "exact_coloring_number",
]


class ReachMode(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class LinearOrder:
    sequence: tuple[int, ...]
    position: tuple[int, ...]

    def __post_init__(self):
        n = len(self.sequence)
        if len(self.position) != n or sorted(self.sequence) != list(range(n)):
            raise ValueError("sequence must be a permutation of 0..n-1")
        if any(self.position[v] != i for i, v in enumerate(self.sequence)):
            raise ValueError("position is not the inverse of sequence")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> LinearOrder:
        seq = tuple(int(v) for v in seq)
        pos = [0] * len(seq)
        for i, v in enumerate(seq):
            if not 0 <= v < len(seq):
                raise ValueError("sequence must be a permutation of 0..n-1")
            pos[v] = i
        return cls(seq, tuple(pos))

    @classmethod
    def identity(cls, n: int) -> LinearOrder:
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self) -> int:
        return len(self.sequence)

    def less(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def before_masks(self) -> list[int]:
        """``out[v]`` = bitset of vertices strictly smaller than ``v``."""
        out = [0] * len(self.sequence)
        acc = 0
        for v in self.sequence:
            out[v] = acc
            acc |= 1 << v
        return out


def degeneracy_order(g: Graph) -> tuple[LinearOrder, int]:
    """Smallest-last order and the degeneracy ``k``.

    Repeatedly removes a minimum-degree vertex (smallest id on ties); the
    first vertex removed goes to the last position.  Every vertex then has
    at most ``k`` neighbors before it.
    """
    alive = (1 << g.n) - 1
    removed = []
    k = 0
    for _ in range(g.n):
        best, best_deg = -1, g.n
        for v in _bits(alive):
            d = (g.rows[v] & alive).bit_count()
            if d < best_deg:
                best, best_deg = v, d
        k = max(k, best_deg)
        removed.append(best)
        alive &= ~(1 << best)
    return LinearOrder.from_sequence(removed[::-1]), k


def _check_args(g: Graph, order: LinearOrder, r: int) -> None:
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} vertices, graph has {g.n}")
    if r < 0:
        raise ValueError("r must be non-negative")


def reachable_sets(g: Graph, order: LinearOrder, mode: ReachMode, r: int) -> list[int]:
    """Bitset of r-reachable vertices for every ``v`` at once.

    Weak: ``u`` reaches into ``v``'s set iff ``v`` is within distance ``r``
    of ``u`` in the subgraph induced by vertices ``>= u``; one BFS per
    ``u`` fills column ``u`` of every set.  Strong: BFS from ``v`` through
    internal vertices ``> v`` for ``r-1`` layers, then one final step to
    any neighbor ``<= v``.
    """
    _check_args(g, order, r)
    n = g.n
    rows = g.rows
    before = order.before_masks()
    full = (1 << n) - 1
    out = [1 << v for v in range(n)]
    if r == 0 or n == 0:
        return out
    if mode is ReachMode.WEAK:
        for u in range(n):
            allowed = full & ~before[u]
            seen = frontier = 1 << u
            for _ in range(r):
                nxt = 0
                for w in _bits(frontier):
                    nxt |= rows[w]
                frontier = nxt & allowed & ~seen
                if not frontier:
                    break
                seen |= frontier
            for v in _bits(seen):
                out[v] |= 1 << u
    else:
        for v in range(n):
            upper = full & ~before[v] & ~(1 << v)
            seen = frontier = 1 << v
            for _ in range(r - 1):
                nxt = 0
                for w in _bits(frontier):
                    nxt |= rows[w]
                frontier = nxt & upper & ~seen
                if not frontier:
                    break
                seen |= frontier
            last = 0
            for w in _bits(seen):
                last |= rows[w]
            out[v] |= last & before[v]
    return out


def reachable_set(g: Graph, order: LinearOrder, mode: ReachMode, r: int, v: int) -> set[int]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    return set(_bits(reachable_sets(g, order, mode, r)[v]))


def reachable_set_by_paths(
    g: Graph, order: LinearOrder, mode: ReachMode, r: int, v: int
) -> set[int]:
    """Reference implementation by enumerating simple paths from ``v``."""
    _check_args(g, order, r)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    pos = order.position
    found = {v}

    def extend(walk: list[int]) -> None:
        u = walk[-1]
        if u != v and all(pos[u] <= pos[w] for w in walk):
            if mode is ReachMode.WEAK or all(pos[v] <= pos[w] for w in walk[:-1]):
                found.add(u)
        if len(walk) - 1 == r:
            return
        for w in g.neighbors(u):
            if w not in walk:
                walk.append(w)
                extend(walk)
                walk.pop()

    extend([v])
    return found


def coloring_number_under_order(g: Graph, order: LinearOrder, mode: ReachMode, r: int) -> int:
    """Largest reachable-set size over all vertices (0 for the empty graph)."""
    return max((s.bit_count() for s in reachable_sets(g, order, mode, r)), default=0)


def exact_coloring_number(
    g: Graph,
    mode: ReachMode,
    r: int,
    budget: OracleBudget | None = None,
) -> tuple[int, LinearOrder]:
    """Minimum of :func:`coloring_number_under_order` over all orders.

    Orders are scanned in lexicographic order of their sequences, so the
    witness is the lexicographically least optimal order.  The scan stops
    early once it meets the lower bound ``degeneracy + 1`` (``r >= 1``).
    """
    budget = budget or OracleBudget(max_n=9, max_candidates=10**7)
    if r < 0:
        raise ValueError("r must be non-negative")
    order0, k = degeneracy_order(g)
    if g.n > budget.max_n:
        raise BudgetExceeded(
            f"n={g.n} exceeds max_n={budget.max_n}",
            {"upper": coloring_number_under_order(g, order0, mode, r)},
        )
    if g.n == 0:
        return 0, LinearOrder.identity(0)
    lower = 1 if r == 0 else k + 1
    best, witness = g.n + 1, None
    for count, seq in enumerate(itertools.permutations(range(g.n))):
        if count >= budget.max_candidates:
            raise BudgetExceeded(
                f"more than {budget.max_candidates} orders",
                {"lower": lower, "upper": best, "witness": list(witness.sequence)},
            )
        order = LinearOrder.from_sequence(seq)
        val = coloring_number_under_order(g, order, mode, r)
        if val < best:
            best, witness = val, order
            if best == lower:
                break
    return best, witness
