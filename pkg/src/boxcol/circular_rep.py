"""Circular-arc systems from strong certificates.

Arcs live on the line ``1..n`` and are either an interval ``[lo, hi]`` or a
co-interval ``{x <= j} | {x >= k}``; the circle is the line with its two
ends glued, so both kinds induce the same intersection graphs as arcs.

The 3c systems for a strong certificate are the 2c interval systems of
:mod:`boxcol.interval_rep` followed, for each color class ``v_1 < ... <
v_l``, by one system where ``v_j`` is the point ``j`` and another vertex
becomes the point ``n`` (no neighbor in the class), ``[j, n]`` (exactly
one neighbor ``v_j``) or the co-interval ``(j, k)`` spanned by its two
smallest class neighbors ``v_j, v_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .coloring import ColoringCertificate
from .graph import Graph, complete_minus_pm
from .interval_rep import (
    IntervalSystem,
    Verification,
    _class_sequences,
    _require_valid,
    compare_graphs,
    forward_and_reversed,
)
from .ordering import ReachMode

__all__ = [
    "Interval",
    "CoInterval",
    "CircularSystem",
    "CircleModel",
    "build_circular_systems",
    "circular_intersection_graph",
    "verify_circular_representation",
    "circular_model_complete_minus_pm",
]


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def to_json(self) -> dict:
        return {"type": "interval", "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class CoInterval:
    """Closed complement ``{x <= j} | {x >= k}`` of the open interval ``(j, k)``."""

    j: int
    k: int

    def __post_init__(self):
        if not self.j < self.k:
            raise ValueError(f"co-interval needs j < k, got ({self.j}, {self.k})")

    def to_json(self) -> dict:
        return {"type": "cointerval", "j": self.j, "k": self.k}


Arc = Union[Interval, CoInterval]


def arcs_meet(a: Arc, b: Arc) -> bool:
    if isinstance(a, CoInterval) and isinstance(b, CoInterval):
        return True
    if isinstance(a, CoInterval):
        a, b = b, a
    if isinstance(b, CoInterval):
        return a.lo <= b.j or a.hi >= b.k
    return a.lo <= b.hi and b.lo <= a.hi


@dataclass(frozen=True)
class CircularSystem:
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        n = len(self.arcs)
        for v, arc in enumerate(self.arcs):
            if isinstance(arc, Interval):
                if not 1 <= arc.lo <= arc.hi <= n:
                    raise ValueError(f"vertex {v}: interval [{arc.lo}, {arc.hi}] not within [1, {n}]")
            elif isinstance(arc, CoInterval):
                if not 1 <= arc.j < arc.k <= n:
                    raise ValueError(f"vertex {v}: co-interval ({arc.j}, {arc.k}) not within [1, {n}]")
            else:
                raise TypeError(f"vertex {v}: not an arc: {arc!r}")

    @classmethod
    def from_interval_system(cls, s: IntervalSystem) -> CircularSystem:
        return cls(tuple(Interval(a, b) for a, b in zip(s.lo, s.hi)))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def overlap_matrix(self) -> np.ndarray:
        co = np.array([isinstance(a, CoInterval) for a in self.arcs], dtype=bool)
        a = np.array([x.j if isinstance(x, CoInterval) else x.lo for x in self.arcs])
        b = np.array([x.k if isinstance(x, CoInterval) else x.hi for x in self.arcs])
        ii = (a[:, None] <= b[None, :]) & (a[None, :] <= b[:, None])
        # row interval [a, b] against column co-interval (j, k)
        ic = (a[:, None] <= a[None, :]) | (b[:, None] >= b[None, :])
        out = np.where(co[:, None] & co[None, :], True, ii)
        out = np.where(~co[:, None] & co[None, :], ic, out)
        out = np.where(co[:, None] & ~co[None, :], ic.T, out)
        return out

    def to_json(self) -> list[dict]:
        return [arc.to_json() for arc in self.arcs]


def _third_system(g: Graph, members: Sequence[int]) -> CircularSystem:
    n = g.n
    index = {v: j for j, v in enumerate(members, 1)}
    arcs: list[Arc] = []
    for v in range(n):
        j = index.get(v)
        if j is not None:
            arcs.append(Interval(j, j))
            continue
        hits = sorted(index[u] for u in g.neighbors(v) if u in index)
        if not hits:
            arcs.append(Interval(n, n))
        elif len(hits) == 1:
            arcs.append(Interval(hits[0], n))
        else:
            arcs.append(CoInterval(hits[0], hits[1]))
    return CircularSystem(tuple(arcs))


def build_circular_systems(g: Graph, cert: ColoringCertificate) -> list[CircularSystem]:
    """3c circular-arc systems whose intersection graph is exactly ``g``."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    _require_valid(g, cert, ReachMode.STRONG)
    classes = _class_sequences(cert)
    pairs = [forward_and_reversed(g, members) for members in classes]
    plain = [f for f, _ in pairs] + [r for _, r in pairs]
    return [CircularSystem.from_interval_system(s) for s in plain] + [
        _third_system(g, members) for members in classes
    ]


def circular_intersection_graph(
    systems: Sequence[CircularSystem | IntervalSystem], n: int | None = None
) -> Graph:
    """Pairs whose arcs meet in every system; empty list gives K_n."""
    systems = [
        CircularSystem.from_interval_system(s) if isinstance(s, IntervalSystem) else s
        for s in systems
    ]
    if not systems:
        if n is None:
            raise ValueError("vertex count needed for an empty list of systems")
        return Graph.from_adjacency(~np.eye(n, dtype=bool))
    sizes = {s.n for s in systems}
    if len(sizes) != 1 or (n is not None and sizes != {n}):
        raise ValueError(f"systems disagree on vertex count: {sorted(sizes)}")
    adj = np.logical_and.reduce([s.overlap_matrix() for s in systems])
    np.fill_diagonal(adj, False)
    return Graph.from_adjacency(adj)


def verify_circular_representation(
    g: Graph, systems: Sequence[CircularSystem | IntervalSystem]
) -> Verification:
    if any(s.n != g.n for s in systems):
        raise ValueError("system size does not match the graph")
    return compare_graphs(g, circular_intersection_graph(systems, g.n))


@dataclass(frozen=True)
class CircleModel:
    """Arcs of ``m`` consecutive positions on a circle of ``2m`` positions.

    Circle vertex ``i`` covers ``i, i+1, ..., i+m-1 (mod 2m)``, so only the
    antipodal arcs ``i`` and ``i+m`` are disjoint.  ``relabel[i]`` maps circle
    vertex ``i`` to the id used by :func:`boxcol.graph.complete_minus_pm`
    (antipodes become the matched pair ``2i, 2i+1``).
    """

    m: int
    starts: tuple[int, ...]
    relabel: tuple[int, ...]

    @property
    def size(self) -> int:
        return 2 * self.m

    def covered(self, v: int) -> frozenset[int]:
        return frozenset((self.starts[v] + t) % self.size for t in range(self.m))

    def circle_graph(self) -> Graph:
        """Intersection graph computed by set intersection on the circle."""
        cov = [self.covered(v) for v in range(self.size)]
        return Graph.from_edges(
            self.size,
            (
                (self.relabel[u], self.relabel[v])
                for u in range(self.size)
                for v in range(u + 1, self.size)
                if cov[u] & cov[v]
            ),
        )

    def to_circular_system(self) -> CircularSystem:
        """The same arcs cut open at the gap between positions 2m-1 and 0.

        Position ``p`` becomes line point ``p + 1``; a wrapping arc becomes a
        co-interval.  Vertices are listed under the matched-pair labels.
        """
        size = self.size
        arcs: list[Arc | None] = [None] * size
        for v, s in enumerate(self.starts):
            end = s + self.m - 1
            if end < size:
                arc: Arc = Interval(s + 1, end + 1)
            else:
                arc = CoInterval(end - size + 1, s + 1)
            arcs[self.relabel[v]] = arc
        return CircularSystem(tuple(arcs))


def circular_model_complete_minus_pm(m: int) -> CircleModel:
    """One-system circular-arc model of K_{2m} minus a perfect matching."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    relabel = tuple(2 * i if i < m else 2 * (i - m) + 1 for i in range(2 * m))
    model = CircleModel(m, tuple(range(2 * m)), relabel)
    # guard: both evaluation routes must reproduce the target graph
    target = complete_minus_pm(m)
    if model.circle_graph() != target:
        raise AssertionError("circle model does not induce K_2m minus a perfect matching")
    if circular_intersection_graph([model.to_circular_system()]) != target:
        raise AssertionError("line form of the circle model disagrees with the circle")
    return model
