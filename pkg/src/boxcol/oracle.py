"""Exact brute-force values at desk scale.

Boxicity and circular dimension are computed as minimum set covers: every
non-edge of ``g`` must be missing from at least one factor, and the factors
range over all interval (resp. circular-arc) supergraphs of ``g``.  Complete
graphs get 0 for both (the empty intersection).
"""

from __future__ import annotations

import numpy as np

from .chromatic import exact_chromatic_number
from .coloring import make_certificate
from .errors import BudgetExceeded, OracleBudget
from .graph import Graph, _bits
from .ordering import ReachMode
from .recognition import is_interval_graph, labeled_masks

__all__ = [
    "OracleBudget",
    "enumerate_interval_supergraphs",
    "enumerate_circular_arc_supergraphs",
    "exact_boxicity",
    "boxicity_cover",
    "exact_circular_dimension",
    "circular_dimension_cover",
    "exact_chromatic_number",
    "min_cover",
]

BOX_BUDGET = OracleBudget(max_n=6, max_candidates=10**6)
CDIM_BUDGET = OracleBudget(max_n=6, max_candidates=10**6)


def _supergraph_masks(g: Graph, kind: str, budget: OracleBudget) -> np.ndarray:
    if g.n > budget.max_n or g.n > 7:
        raise BudgetExceeded(f"n={g.n} exceeds max_n={min(budget.max_n, 7)}")
    pool = labeled_masks(g.n, kind)
    target = np.int64(g.mask)
    return pool[(pool & target) == target]


def enumerate_interval_supergraphs(g: Graph, budget: OracleBudget | None = None) -> list[Graph]:
    budget = budget or OracleBudget(max_n=7)
    return [Graph.from_mask(g.n, int(m)) for m in _supergraph_masks(g, "interval", budget)]


def enumerate_circular_arc_supergraphs(
    g: Graph, budget: OracleBudget | None = None
) -> list[Graph]:
    budget = budget or OracleBudget(max_n=6)
    return [Graph.from_mask(g.n, int(m)) for m in _supergraph_masks(g, "circular-arc", budget)]


def min_cover(universe: int, sets: list[int], max_nodes: int = 10**6) -> list[int]:
    """Smallest list of ``sets`` whose union contains ``universe``.

    Iterative deepening; each level branches on the lowest uncovered element
    over the sets containing it, largest first.  Sets that are subsets of
    another set are dropped first.
    """
    if not universe:
        return []
    sets = sorted({s & universe for s in sets if s & universe}, key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in sets:
        if not any(s & t == s for t in kept):
            kept.append(s)
    if not kept:
        raise ValueError("universe cannot be covered")
    by_elem: dict[int, list[int]] = {}
    for s in kept:
        for e in _bits(s):
            by_elem.setdefault(e, []).append(s)
    if any(e not in by_elem for e in _bits(universe)):
        raise ValueError("universe cannot be covered")
    biggest = kept[0].bit_count()
    nodes = 0

    def search(left: int, k: int, chosen: list[int]) -> list[int] | None:
        nonlocal nodes
        if not left:
            return list(chosen)
        if k == 0 or left.bit_count() > k * biggest:
            return None
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded("cover search node limit reached", {"upper": None})
        low = (left & -left).bit_length() - 1
        for s in by_elem[low]:
            chosen.append(s)
            found = search(left & ~s, k - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    for k in range(1, len(kept) + 1):
        found = search(universe, k, [])
        if found is not None:
            return found
    raise AssertionError("unreachable: the kept sets cover the universe")


def _full_mask(n: int) -> int:
    return (1 << (n * (n - 1) // 2)) - 1


def _cover(g: Graph, kind: str, budget: OracleBudget) -> list[Graph]:
    nonedges = _full_mask(g.n) & ~g.mask
    cands = _supergraph_masks(g, kind, budget)
    if len(cands) > budget.max_candidates:
        raise BudgetExceeded(f"{len(cands)} candidate factors exceed the budget")
    factor_of: dict[int, int] = {}
    for m in np.unique(cands):
        factor_of.setdefault(nonedges & ~int(m), int(m))
    chosen = min_cover(nonedges, list(factor_of), budget.max_candidates)
    return [Graph.from_mask(g.n, factor_of[s]) for s in chosen]


def _box_lower(g: Graph) -> int:
    if g.n <= 12 and not is_interval_graph(g):
        return 2
    return 1


def _box_upper(g: Graph) -> int:
    return min(2 * make_certificate(g, ReachMode.WEAK).c, g.n // 2)


def boxicity_cover(g: Graph, budget: OracleBudget | None = None) -> list[Graph]:
    """Interval supergraphs of ``g`` (a minimum number) intersecting to ``g``."""
    budget = budget or BOX_BUDGET
    if g.is_complete():
        return []
    try:
        return _cover(g, "interval", budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), {"lower": _box_lower(g), "upper": _box_upper(g)}) from None


def exact_boxicity(g: Graph, budget: OracleBudget | None = None) -> int:
    return len(boxicity_cover(g, budget))


def circular_dimension_cover(g: Graph, budget: OracleBudget | None = None) -> list[Graph]:
    """Circular-arc supergraphs of ``g`` (a minimum number) intersecting to ``g``."""
    budget = budget or CDIM_BUDGET
    if g.is_complete():
        return []
    try:
        return _cover(g, "circular-arc", budget)
    except BudgetExceeded as exc:
        upper = min(3 * make_certificate(g, ReachMode.STRONG).c, _box_upper(g))
        raise BudgetExceeded(str(exc), {"lower": 1, "upper": upper}) from None


def exact_circular_dimension(g: Graph, budget: OracleBudget | None = None) -> int:
    return len(circular_dimension_cover(g, budget))
