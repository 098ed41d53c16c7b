"""Interval systems from weak certificates and interval intersection graphs.

For each color ``i`` with class ``v_1 < ... < v_l`` (under the certificate
order) two systems are built on the grid ``1..n``:

* forward: ``v_j`` is the point ``j``; any other vertex with a neighbor in
  the class becomes ``[k, n]`` for its first such neighbor ``v_k``, and
  every remaining vertex is the point ``n``;
* reversed: ``v_j`` is the point ``l - j + 1``; a vertex with neighbors in
  the class becomes ``[l - k + 1, n]`` for its last such neighbor ``v_k``.

Forward systems come first (colors 1..c), then reversed ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .coloring import ColoringCertificate, validate_certificate
from .errors import CertificateError
from .graph import Graph
from .ordering import ReachMode

__all__ = [
    "IntervalSystem",
    "build_interval_systems",
    "interval_intersection_graph",
    "verify_representation",
    "Verification",
]


@dataclass(frozen=True)
class IntervalSystem:
    """One closed integer interval ``[lo[v], hi[v]]`` per vertex, within ``[1, n]``."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        n = len(self.lo)
        if len(self.hi) != n:
            raise ValueError("lo and hi must have the same length")
        for v, (a, b) in enumerate(zip(self.lo, self.hi)):
            if not 1 <= a <= b <= n:
                raise ValueError(f"vertex {v}: interval [{a}, {b}] not within [1, {n}]")

    @classmethod
    def of(cls, pairs: Sequence[tuple[int, int]]) -> IntervalSystem:
        return cls(tuple(int(a) for a, _ in pairs), tuple(int(b) for _, b in pairs))

    @property
    def n(self) -> int:
        return len(self.lo)

    def intervals(self) -> list[tuple[int, int]]:
        return list(zip(self.lo, self.hi))

    def overlap_matrix(self) -> np.ndarray:
        lo = np.asarray(self.lo)
        hi = np.asarray(self.hi)
        return (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in zip(self.lo, self.hi)]


@dataclass(frozen=True)
class Verification:
    """Outcome of comparing a representation against its target graph.

    On failure ``pair`` is the smallest offending pair and ``kind`` is
    ``"missing"`` (an edge of g is separated by some system) or
    ``"excess"`` (a non-edge of g is separated by no system).
    """

    ok: bool
    pair: tuple[int, int] | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _class_sequences(cert: ColoringCertificate) -> list[list[int]]:
    pos = cert.order.position
    return [sorted(cls, key=pos.__getitem__) for cls in cert.coloring.classes()]


def forward_and_reversed(
    g: Graph, members: Sequence[int]
) -> tuple[IntervalSystem, IntervalSystem]:
    """The two systems for one color class listed in increasing order."""
    n = g.n
    ell = len(members)
    index = {v: j for j, v in enumerate(members, 1)}
    fwd_lo, fwd_hi = [n] * n, [n] * n
    rev_lo, rev_hi = [n] * n, [n] * n
    for v in range(n):
        j = index.get(v)
        if j is not None:
            fwd_lo[v] = fwd_hi[v] = j
            rev_lo[v] = rev_hi[v] = ell - j + 1
            continue
        hits = [index[u] for u in g.neighbors(v) if u in index]
        if hits:
            fwd_lo[v] = min(hits)
            rev_lo[v] = ell - max(hits) + 1
    return (
        IntervalSystem(tuple(fwd_lo), tuple(fwd_hi)),
        IntervalSystem(tuple(rev_lo), tuple(rev_hi)),
    )


def _require_valid(g: Graph, cert: ColoringCertificate, mode: ReachMode) -> None:
    if cert.mode is not mode:
        raise CertificateError(f"expected a {mode.value} certificate, got {cert.mode.value}")
    ok, bad = validate_certificate(g, cert)
    if not ok:
        u, v = bad
        raise CertificateError(
            f"vertex {u} is {mode.value}ly 2-reachable from {v} and shares its color", bad
        )


def build_interval_systems(g: Graph, cert: ColoringCertificate) -> list[IntervalSystem]:
    """2c interval systems whose intersection graph is exactly ``g``."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    _require_valid(g, cert, ReachMode.WEAK)
    pairs = [forward_and_reversed(g, members) for members in _class_sequences(cert)]
    return [f for f, _ in pairs] + [r for _, r in pairs]


def interval_intersection_graph(systems: Sequence[IntervalSystem], n: int | None = None) -> Graph:
    """Pairs whose intervals meet in every system.

    An empty list gives the complete graph on ``n`` vertices, so ``n`` is
    required in that case.
    """
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


def compare_graphs(g: Graph, got: Graph) -> Verification:
    for u in range(g.n):
        diff = g.rows[u] ^ got.rows[u]
        diff >>= u + 1
        if diff:
            v = u + 1 + ((diff & -diff).bit_length() - 1)
            return Verification(False, (u, v), "missing" if g.has_edge(u, v) else "excess")
    return Verification(True)


def verify_representation(g: Graph, systems: Sequence[IntervalSystem]) -> Verification:
    if any(s.n != g.n for s in systems):
        raise ValueError("system size does not match the graph")
    return compare_graphs(g, interval_intersection_graph(systems, g.n))
