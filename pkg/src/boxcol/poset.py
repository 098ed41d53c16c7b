"""Finite posets, adjacency posets and exact dimension.

``Poset.up[a]`` is the bitset of all ``b`` with ``a <= b`` (reflexive).
Dimension is found from linear extensions: a family of extensions is a
realizer iff every critical pair ``(a, b)`` appears reversed (``b`` before
``a``) in one of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .chromatic import exact_chromatic_number
from .errors import BudgetExceeded, FormatError, OracleBudget
from .graph import Graph, _bits
from .oracle import exact_boxicity
from .recognition import is_interval_graph

__all__ = [
    "Poset",
    "parse_poset",
    "chain",
    "antichain",
    "standard_example",
    "adjacency_poset",
    "comparability_graph",
    "cover_graph",
    "linear_extensions",
    "critical_pairs",
    "exact_poset_dimension",
    "dimension_by_definition",
    "all_posets",
    "audit_dimension_inequalities",
    "AuditReport",
    "InequalityCheck",
]


@dataclass(frozen=True)
class Poset:
    m: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.m:
            raise ValueError(f"expected {self.m} up-sets, got {len(self.up)}")
        full = (1 << self.m) - 1
        for a, row in enumerate(self.up):
            if row & ~full:
                raise ValueError(f"element {a} relates to something outside 0..{self.m - 1}")
            if not row >> a & 1:
                raise ValueError(f"not reflexive at {a}")
            for b in _bits(row & ~(1 << a)):
                if self.up[b] >> a & 1:
                    raise ValueError(f"not antisymmetric: {a} <= {b} <= {a}")
                if self.up[b] & ~row:
                    raise ValueError(f"not transitive through {a} <= {b}")

    @classmethod
    def from_relations(cls, m: int, less: Iterable[tuple[int, int]]) -> Poset:
        """Transitive closure of the strict relations ``a < b``."""
        up = [1 << a for a in range(m)]
        for a, b in less:
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"relation ({a}, {b}) outside 0..{m - 1}")
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for a in range(m):
                new = up[a]
                for b in _bits(up[a]):
                    new |= up[b]
                if new != up[a]:
                    up[a], changed = new, True
        return cls(m, tuple(up))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def less(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def down(self, a: int) -> int:
        return sum(1 << b for b in range(self.m) if self.up[b] >> a & 1)

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.m) for b in _bits(self.up[a] & ~(1 << a))]

    def dual(self) -> Poset:
        return Poset(self.m, tuple(self.down(a) for a in range(self.m)))

    def height(self) -> int:
        """Number of elements in a longest chain."""
        memo: dict[int, int] = {}

        def longest_from(a: int) -> int:
            if a not in memo:
                memo[a] = 1 + max(
                    (longest_from(b) for b in _bits(self.up[a] & ~(1 << a))), default=0
                )
            return memo[a]

        return max((longest_from(a) for a in range(self.m)), default=0)

    def is_chain(self) -> bool:
        return all(self.comparable(a, b) for a in range(self.m) for b in range(a))

    def relabel(self, perm: list[int]) -> Poset:
        return Poset.from_relations(self.m, ((perm[a], perm[b]) for a, b in self.strict_pairs()))


def parse_poset(text: str) -> Poset:
    """Poset text format: a line ``m`` then ``a b`` lines meaning ``a < b``."""
    lines = [
        (i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)
    ]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise FormatError("empty poset description")
    try:
        m = int(lines[0][1])
    except ValueError:
        raise FormatError(f"line {lines[0][0]}: expected element count") from None
    rels = []
    for i, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {i}: expected 'a b', got {ln!r}")
        a, b = int(parts[0]), int(parts[1])
        if not (a < m and b < m) or a == b:
            raise FormatError(f"line {i}: bad relation {a} < {b}")
        rels.append((a, b))
    try:
        return Poset.from_relations(m, rels)
    except ValueError as exc:
        raise FormatError(f"relations do not form a poset: {exc}") from None


def chain(m: int) -> Poset:
    return Poset.from_relations(m, ((i, i + 1) for i in range(m - 1)))


def antichain(m: int) -> Poset:
    return Poset(m, tuple(1 << a for a in range(m)))


def standard_example(k: int) -> Poset:
    """S_k: minimal ``0..k-1``, maximal ``k..2k-1``, ``i < k+j`` iff ``i != j``."""
    return Poset.from_relations(2 * k, ((i, k + j) for i in range(k) for j in range(k) if i != j))


def adjacency_poset(g: Graph) -> Poset:
    """Height-2 poset on ``V`` (ids ``0..n-1``) and ``V'`` (ids ``n..2n-1``).

    ``u < n + w`` iff ``uw`` is an edge; nothing else is strictly related.
    """
    n = g.n
    up = [1 << u | (g.rows[u] << n) for u in range(n)] + [1 << (n + w) for w in range(n)]
    return Poset(2 * n, tuple(up))


def comparability_graph(p: Poset) -> Graph:
    return Graph.from_edges(p.m, p.strict_pairs())


def cover_graph(p: Poset) -> Graph:
    """Hasse diagram as an undirected graph."""
    edges = []
    for a, b in p.strict_pairs():
        between = p.up[a] & p.down(b) & ~(1 << a) & ~(1 << b)
        if not between:
            edges.append((a, b))
    return Graph.from_edges(p.m, edges)


def linear_extensions(p: Poset, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """All linear extensions, each listed from smallest to largest."""
    below = [p.down(a) & ~(1 << a) for a in range(p.m)]
    seq: list[int] = []
    count = 0

    def rec(placed: int) -> Iterator[tuple[int, ...]]:
        nonlocal count
        if len(seq) == p.m:
            count += 1
            if limit is not None and count > limit:
                raise BudgetExceeded(f"more than {limit} linear extensions")
            yield tuple(seq)
            return
        for a in range(p.m):
            if not placed >> a & 1 and below[a] & ~placed == 0:
                seq.append(a)
                yield from rec(placed | 1 << a)
                seq.pop()

    yield from rec(0)


def incomparable_pairs(p: Poset) -> list[tuple[int, int]]:
    """Ordered pairs ``(a, b)`` with ``a != b`` incomparable."""
    return [(a, b) for a in range(p.m) for b in range(p.m) if a != b and not p.comparable(a, b)]


def critical_pairs(p: Poset) -> list[tuple[int, int]]:
    """Incomparable ``(a, b)`` with ``down(a) <= down(b)`` and ``up(b) <= up(a)`` (strict sets)."""
    out = []
    downs = [p.down(a) & ~(1 << a) for a in range(p.m)]
    ups = [p.up[a] & ~(1 << a) for a in range(p.m)]
    for a, b in incomparable_pairs(p):
        if downs[a] & ~downs[b] == 0 and ups[b] & ~ups[a] == 0:
            out.append((a, b))
    return out


def _reversible(p: Poset, pairs: list[tuple[int, int]]) -> bool:
    """Is there one linear extension putting ``b`` before ``a`` for every pair?"""
    succ = [p.up[a] & ~(1 << a) for a in range(p.m)]
    for a, b in pairs:
        succ[b] |= 1 << a
    indeg = [0] * p.m
    for a in range(p.m):
        for b in _bits(succ[a]):
            indeg[b] += 1
    ready = [a for a in range(p.m) if indeg[a] == 0]
    seen = 0
    while ready:
        a = ready.pop()
        seen += 1
        for b in _bits(succ[a]):
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    return seen == p.m


def _dimension_bounds(p: Poset) -> dict[str, int]:
    if p.is_chain():
        return {"lower": min(p.m, 1), "upper": min(p.m, 1)}
    return {"lower": 2, "upper": max(2, p.m // 2)}


def exact_poset_dimension(p: Poset, budget: OracleBudget | None = None) -> int:
    """Smallest realizer size.

    Extensions are reduced to the set of critical pairs they reverse; the
    search picks extensions one at a time (branching on the lowest
    unreversed critical pair) and closes the last slot with a direct
    feasibility test instead of scanning all extensions again.
    """
    budget = budget or OracleBudget(max_n=8, max_candidates=10**6)
    if p.m > budget.max_n:
        raise BudgetExceeded(f"m={p.m} exceeds max_n={budget.max_n}", _dimension_bounds(p))
    if p.m == 0:
        return 0
    crit = critical_pairs(p)
    if not crit:
        return 1
    index = {pair: i for i, pair in enumerate(crit)}
    masks: set[int] = set()
    try:
        for ext in linear_extensions(p, budget.max_candidates):
            pos = {a: i for i, a in enumerate(ext)}
            masks.add(sum(1 << index[(a, b)] for a, b in crit if pos[b] < pos[a]))
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), _dimension_bounds(p)) from None
    by_pair: dict[int, list[int]] = {
        i: sorted((s for s in masks if s >> i & 1), key=lambda s: -s.bit_count())
        for i in range(len(crit))
    }
    full = (1 << len(crit)) - 1

    def search(left: int, k: int) -> bool:
        if not left:
            return True
        if k == 1:
            return _reversible(p, [crit[i] for i in _bits(left)])
        low = (left & -left).bit_length() - 1
        return any(search(left & ~s, k - 1) for s in by_pair[low])

    k = 2
    while not search(full, k):
        k += 1
    return k


def dimension_by_definition(p: Poset, max_m: int = 6) -> int:
    """Reference value: fewest extensions whose intersection is ``p``.

    Tries every k-subset of linear extensions and checks that each
    incomparable ordered pair is reversed somewhere.  Tiny posets only.
    """
    if p.m > max_m:
        raise BudgetExceeded(f"m={p.m} exceeds max_m={max_m}")
    exts = list(linear_extensions(p))
    inc = incomparable_pairs(p)
    pos = [{a: i for i, a in enumerate(e)} for e in exts]
    for k in range(1, len(exts) + 1):
        for combo in itertools.combinations(range(len(exts)), k):
            if all(any(pos[c][b] < pos[c][a] for c in combo) for a, b in inc):
                return k
    return 0


def all_posets(m: int) -> list[Poset]:
    """One poset per isomorphism class on ``m`` elements.

    Every poset has a natural labeling (a linear extension), so it suffices
    to scan relations contained in ``{(i, j): i < j}``.
    """
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    perms = list(itertools.permutations(range(m)))
    seen: set[tuple] = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[e] for e in range(len(pairs)) if bits >> e & 1}
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
            continue
        key = min(tuple(sorted((q[a], q[b]) for a, b in rel)) for q in perms)
        if key in seen:
            continue
        seen.add(key)
        out.append(Poset.from_relations(m, rel))
    return out


@dataclass(frozen=True)
class InequalityCheck:
    """``lhs <= rhs``; ``holds`` is ``None`` when it could not be decided."""

    name: str
    lhs: int
    rhs: int
    holds: bool | None
    exact: bool = True

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class AuditReport:
    n: int
    dim_adjacency_poset: int | None
    box: int | None
    chi: int | None
    checks: tuple[InequalityCheck, ...] = field(default=())
    complete: bool = True

    @property
    def passed(self) -> bool:
        return all(c.holds is not False for c in self.checks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim_adjacency_poset": self.dim_adjacency_poset,
            "box": self.box,
            "chi": self.chi,
            "checks": [c.to_json() for c in self.checks],
            "complete": self.complete,
            "passed": self.passed,
        }


def _box_or_lower_bound(g: Graph) -> tuple[int, bool]:
    try:
        return exact_boxicity(g), True
    except BudgetExceeded:
        if g.is_complete():
            return 0, True
        return (1 if is_interval_graph(g) else 2), False


def audit_dimension_inequalities(g: Graph, budget: OracleBudget | None = None) -> AuditReport:
    """Check two dimension/boxicity inequalities on the adjacency poset of ``g``.

    * ``dim(Q) <= 2 box(g) + chi(g) + 4`` for the adjacency poset ``Q``;
    * ``dim(Q) <= 2 box(G_Q)`` for its comparability graph ``G_Q``.

    When ``box(G_Q)`` is beyond the boxicity oracle a lower bound is used
    (1 for interval graphs, 2 otherwise); the check then passes only if the
    bound already certifies it, else ``holds`` is ``None`` and the report is
    marked incomplete.
    """
    budget = budget or OracleBudget(max_n=4)
    if g.n > budget.max_n:
        return AuditReport(g.n, None, None, None, (), complete=False)
    q = adjacency_poset(g)
    dim = exact_poset_dimension(q)
    box = exact_boxicity(g)
    chi = exact_chromatic_number(g)
    checks = [InequalityCheck("dim(Q) <= 2 box(G) + chi(G) + 4", dim, 2 * box + chi + 4, dim <= 2 * box + chi + 4)]
    gq_box, exact = _box_or_lower_bound(comparability_graph(q))
    if exact or dim <= 2 * gq_box:
        holds = dim <= 2 * gq_box
    else:
        holds = None
    checks.append(InequalityCheck("dim(Q) <= 2 box(G_Q)", dim, 2 * gq_box, holds, exact))
    return AuditReport(g.n, dim, box, chi, tuple(checks), complete=holds is not None)
