"""Certified interval and circular-arc intersection representations.

Builds 2c interval systems from weak 2-coloring certificates and 3c
circular-arc systems from strong ones, and ships exhaustive oracles
(boxicity, circular dimension, chromatic number, coloring numbers, poset
dimension) to check the surrounding inequalities on small graphs.
"""

from .circular_rep import (
    CircularSystem,
    CoInterval,
    Interval,
    build_circular_systems,
    circular_intersection_graph,
    circular_model_complete_minus_pm,
    verify_circular_representation,
)
from .coloring import (
    ColoringCertificate,
    VertexColoring,
    conflict_graph,
    exact_wcol_star2,
    greedy_color_along,
    make_certificate,
    validate_certificate,
)
from .errors import BudgetExceeded, CertificateError, FormatError, OracleBudget
from .graph import (
    Graph,
    complement,
    generate,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .interval_rep import (
    IntervalSystem,
    build_interval_systems,
    interval_intersection_graph,
    verify_representation,
)
from .oracle import (
    enumerate_interval_supergraphs,
    exact_boxicity,
    exact_chromatic_number,
    exact_circular_dimension,
)
from .ordering import (
    LinearOrder,
    ReachMode,
    coloring_number_under_order,
    degeneracy_order,
    exact_coloring_number,
    reachable_set,
)
from .pipeline import Representation, represent
from .poset import (
    Poset,
    adjacency_poset,
    audit_dimension_inequalities,
    comparability_graph,
    exact_poset_dimension,
)

__version__ = "0.1.0"
