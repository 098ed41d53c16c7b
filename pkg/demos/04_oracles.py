"""Exact values on tiny graphs, and how the constructions compare.

The oracles enumerate every interval (or circular-arc) supergraph and solve
a set cover over the non-edges.  Past their size limit they raise
BudgetExceeded carrying whatever bounds are cheap to certify.
"""

from __future__ import annotations

from collections import Counter

from boxcol.coloring import exact_wcol_star2
from boxcol.errors import BudgetExceeded
from boxcol.graph import Graph, cycle, gnp
from boxcol.oracle import exact_boxicity, exact_circular_dimension
from boxcol.ordering import ReachMode, exact_coloring_number
from boxcol.recognition import graph_classes


def main():
    gaps = Counter()
    for rep, _ in graph_classes(5):
        g = Graph.from_mask(5, rep)
        box = exact_boxicity(g)
        gaps[2 * exact_wcol_star2(g) - box] += 1
    print("slack 2 wcol*_2 - box over 5-vertex classes:", dict(sorted(gaps.items())))

    for n in (4, 5, 6):
        g = cycle(n)
        col2, order = exact_coloring_number(g, ReachMode.STRONG, 2)
        print(f"C{n}: box={exact_boxicity(g)} cdim={exact_circular_dimension(g)} col_2={col2} via {order.sequence}")

    try:
        exact_boxicity(gnp(10, 0.4, 3))
    except BudgetExceeded as exc:
        print("n=10:", exc.bounds)


if __name__ == "__main__":
    main()
