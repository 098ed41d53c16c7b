"""Conflict graphs, greedy colorings and 2-reachability certificates.

A certificate is an order together with a coloring in which no vertex
shares its color with another vertex 2-reachable from it.  In weak mode it
feeds the 2c interval construction, in strong mode the 3c circular-arc
construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .chromatic import exact_chromatic_number
from .errors import BudgetExceeded, OracleBudget
from .graph import Graph, _bits
from .ordering import LinearOrder, ReachMode, degeneracy_order, reachable_sets

__all__ = [
    "VertexColoring",
    "ColoringCertificate",
    "conflict_graph",
    "conflict_graph_from_reachability",
    "greedy_color_along",
    "make_certificate",
    "validate_certificate",
    "exact_wcol_star2",
]


@dataclass(frozen=True)
class VertexColoring:
    """Colors ``1..c`` indexed by vertex; every color is used."""

    colors: tuple[int, ...]

    def __post_init__(self):
        used = set(self.colors)
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError(f"colors must be exactly 1..c, got {sorted(used)}")

    @classmethod
    def of(cls, colors: Sequence[int]) -> VertexColoring:
        return cls(tuple(int(c) for c in colors))

    @property
    def c(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> list[list[int]]:
        """Vertices of each color, ``classes()[i-1]`` for color ``i``."""
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, col in enumerate(self.colors):
            out[col - 1].append(v)
        return out


@dataclass(frozen=True)
class ColoringCertificate:
    order: LinearOrder
    coloring: VertexColoring
    mode: ReachMode

    @property
    def c(self) -> int:
        return self.coloring.c


def conflict_graph(g: Graph, order: LinearOrder, mode: ReachMode) -> Graph:
    """G plus the pairs that are 2-reachable through a common neighbor.

    Weak mode adds ``uw`` for every chain ``u < v < w`` with ``uv, vw`` in
    E and ``xy`` for every ``x < y < z`` with ``xz, yz`` in E.  Strong mode
    adds only the second kind.
    """
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} vertices, graph has {g.n}")
    before = order.before_masks()
    rows = list(g.rows)
    for v in range(g.n):
        early = g.rows[v] & before[v]
        late = g.rows[v] & ~before[v]
        for x in _bits(early):
            rows[x] |= early & ~(1 << x)
        if mode is ReachMode.WEAK:
            for u in _bits(early):
                rows[u] |= late
            for w in _bits(late):
                rows[w] |= early
    return Graph(g.n, tuple(rows))


def conflict_graph_from_reachability(g: Graph, order: LinearOrder, mode: ReachMode) -> Graph:
    """Same graph as :func:`conflict_graph`, read off the reachable sets."""
    reach = reachable_sets(g, order, mode, 2)
    rows = [0] * g.n
    for v, s in enumerate(reach):
        s &= ~(1 << v)
        rows[v] |= s
        for u in _bits(s):
            rows[u] |= 1 << v
    return Graph(g.n, tuple(rows))


def greedy_color_along(h: Graph, order: LinearOrder) -> VertexColoring:
    """First-fit coloring of ``h`` visiting vertices in ``order``."""
    color = [0] * h.n
    for v in order.sequence:
        used = {color[u] for u in _bits(h.rows[v])}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return VertexColoring(tuple(color))


def make_certificate(
    g: Graph, mode: ReachMode, order: LinearOrder | None = None
) -> ColoringCertificate:
    """Greedy certificate along ``order`` (default: degeneracy order of g)."""
    if order is None:
        order, _ = degeneracy_order(g)
    h = conflict_graph(g, order, mode)
    return ColoringCertificate(order, greedy_color_along(h, order), mode)


def validate_certificate(
    g: Graph, cert: ColoringCertificate
) -> tuple[bool, tuple[int, int] | None]:
    """Check the certificate directly against the 2-reachable sets.

    Returns ``(True, None)`` or ``(False, (u, v))`` where ``u != v`` is
    2-reachable from ``v`` and has the same color.  Vertices ``v`` are
    scanned in id order and ``u`` in increasing id.
    """
    if len(cert.order) != g.n or len(cert.coloring.colors) != g.n:
        raise ValueError(
            f"certificate covers {len(cert.order)} vertices, graph has {g.n}"
        )
    colors = cert.coloring.colors
    reach = reachable_sets(g, cert.order, cert.mode, 2)
    for v in range(g.n):
        for u in _bits(reach[v] & ~(1 << v)):
            if colors[u] == colors[v]:
                return False, (u, v)
    return True, None


def exact_wcol_star2(g: Graph, budget: OracleBudget | None = None) -> int:
    """Minimum over all orders of the chromatic number of the weak conflict graph.

    Stops as soon as it meets ``chi(g)``, which bounds every conflict graph
    from below since each contains ``g``.
    """
    budget = budget or OracleBudget(max_n=7, max_candidates=10**6)
    if g.n > budget.max_n:
        cert = make_certificate(g, ReachMode.WEAK)
        raise BudgetExceeded(f"n={g.n} exceeds max_n={budget.max_n}", {"upper": cert.c})
    if g.n == 0:
        return 0
    lower = exact_chromatic_number(g)
    best = g.n
    seen: dict[tuple[int, ...], int] = {}
    for count, seq in enumerate(itertools.permutations(range(g.n))):
        if count >= budget.max_candidates:
            raise BudgetExceeded(
                f"more than {budget.max_candidates} orders", {"lower": lower, "upper": best}
            )
        h = conflict_graph(g, LinearOrder.from_sequence(seq), ReachMode.WEAK)
        chi = seen.get(h.rows)
        if chi is None:
            chi = seen[h.rows] = exact_chromatic_number(h)
        if chi < best:
            best = chi
            if best == lower:
                break
    return best
