"""K_2m minus a perfect matching as a single circular-arc graph.

Its boxicity is m (the largest possible for 2m vertices) while one family
of arcs suffices: put 2m points on a circle and let each vertex cover m
consecutive points, so only antipodal vertices miss each other.
"""

from __future__ import annotations

from boxcol.circular_rep import circular_intersection_graph, circular_model_complete_minus_pm
from boxcol.graph import complete_minus_pm
from boxcol.oracle import exact_boxicity, exact_circular_dimension


def main():
    model = circular_model_complete_minus_pm(5)
    for v in range(10):
        covered = sorted(model.covered(v))
        print(f"vertex {v}: points {covered}")
    print("K10 minus PM:", model.circle_graph() == complete_minus_pm(5))

    line = model.to_circular_system()
    print("cut open:", [a.to_json() for a in line.arcs])
    print("same graph:", circular_intersection_graph([line]) == complete_minus_pm(5))

    for m in (2, 3):
        g = complete_minus_pm(m)
        print(f"m={m}: box={exact_boxicity(g)}, cdim={exact_circular_dimension(g)}")


if __name__ == "__main__":
    main()
