"""Poset dimension next to boxicity.

The adjacency poset of a graph puts a copy V' above V and relates u < w'
for every edge uw.  Its dimension is bounded in terms of the boxicity and
chromatic number of the graph; the audit checks that on small inputs.
"""

from __future__ import annotations

from boxcol.graph import Graph, complete, cycle
from boxcol.poset import (
    adjacency_poset,
    audit_dimension_inequalities,
    comparability_graph,
    cover_graph,
    exact_poset_dimension,
    standard_example,
)
from boxcol.recognition import graph_classes


def main():
    for k in (2, 3, 4):
        print(f"dim(S{k}) =", exact_poset_dimension(standard_example(k)))

    q = adjacency_poset(cycle(4))
    print("C4 adjacency poset: height", q.height(), "strict pairs", len(q.strict_pairs()))
    print("cover graph == comparability graph:", cover_graph(q) == comparability_graph(q))

    print(audit_dimension_inequalities(complete(2)).to_json())
    for rep, _ in graph_classes(4):
        r = audit_dimension_inequalities(Graph.from_mask(4, rep))
        lhs = r.dim_adjacency_poset
        print(f"mask {rep:>2}: dim={lhs} box={r.box} chi={r.chi} passed={r.passed}")


if __name__ == "__main__":
    main()
