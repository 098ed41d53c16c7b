"""Simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is stored as one Python integer bitset per vertex.  Graphs are
immutable; every operation returns a new :class:`Graph`.

Edge-pair indexing
    Unordered pairs ``{i, j}`` with ``i < j`` are numbered
    ``j*(j-1)//2 + i``.  This is the column-major upper-triangle order used
    by graph6, so :attr:`Graph.mask` and the graph6 bit body list the same
    pairs in the same order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FormatError, UnsupportedSizeError

__all__ = [
    "Graph",
    "SplitMix64",
    "pair_index",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "parse_graph",
    "complement",
    "generate",
    "path",
    "cycle",
    "complete",
    "edgeless",
    "star",
    "complete_minus_pm",
    "gnp",
]


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertex set ``{0, ..., n-1}``.

    ``rows[v]`` is the neighborhood of ``v`` as a bitset.  Construction
    checks symmetry, irreflexivity and range.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        rows = [0] * n
        for j in range(1, n):
            base = j * (j - 1) // 2
            for i in range(j):
                if mask >> (base + i) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        rows = []
        for v in range(a.shape[0]):
            row = 0
            for u in np.flatnonzero(a[v]):
                row |= 1 << int(u)
            rows.append(row)
        return cls(a.shape[0], tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.rows[u] >> v & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def mask(self) -> int:
        """Edge set as a bitset over pair indices."""
        m = 0
        for u, v in self.edges():
            m |= 1 << pair_index(u, v)
        return m

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


# -- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise UnsupportedSizeError(f"graph6 encoding supports n <= 258047, got {n}")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no trailing newline)."""
    head = _encode_n(g.n)
    nbits = g.n * (g.n - 1) // 2
    mask = g.mask
    out = []
    for start in range(0, nbits, 6):
        group = 0
        for k in range(6):
            group <<= 1
            if start + k < nbits and mask >> (start + k) & 1:
                group |= 1
        out.append(chr(63 + group))
    return head + "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 record.

    An optional ``>>graph6<<`` header and surrounding whitespace are
    ignored.  Errors report the offending byte offset within the record.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 record", 0)
    if s.startswith(":") or s.startswith("&"):
        raise FormatError("sparse6/digraph6 records are not supported", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside the graph6 range 63..126", i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise FormatError("truncated size header", len(vals))
        if vals[1] == 63:
            raise FormatError("8-byte size headers (n > 258047) are not supported", 1)
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise FormatError(f"truncated bit body: need {need} bytes, got {len(body)}", len(vals))
    if len(body) > need:
        raise FormatError(f"{len(body) - need} trailing bytes after bit body", pos + need)
    mask = 0
    for k in range(nbits):
        if body[k // 6] >> (5 - k % 6) & 1:
            mask |= 1 << k
    if need and body[-1] & ((1 << (6 * need - nbits)) - 1):
        raise FormatError("non-zero padding bits", pos + need - 1)
    return Graph.from_mask(n, mask)


# -- edge lists --------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a line ``n`` then one ``u v`` per line.

    Vertices are 0-based.  Blank lines and ``#`` comments are skipped;
    duplicate and reversed pairs collapse to one edge.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise FormatError("empty edge list")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise FormatError(f"line {lineno}: expected vertex count, got {first!r}") from None
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def sniff_format(text: str) -> str:
    """Return ``"edgelist"`` or ``"graph6"``.

    A graph6 record never contains ASCII digits (bytes 63..126), so a
    first non-comment line that is a plain integer means edge list.
    """
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return "edgelist" if line.lstrip("-").isdigit() else "graph6"
    return "graph6"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


# -- deterministic randomness -------------------------------------------------

_M64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014).

    ``state += 0x9E3779B97F4A7C15``; output is the state passed through
    ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2**64).
    ``random()`` takes the top 53 bits of the next output as a float in
    ``[0, 1)``; ``below(k)`` is ``next() % k``.
    """

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        return self.next() % k


# -- generators ----------------------------------------------------------------


def _check_n(n: int, least: int = 0) -> None:
    if not isinstance(n, (int, np.integer)) or n < least:
        raise ValueError(f"vertex count must be an integer >= {least}, got {n!r}")


def path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check_n(n, 3)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def edgeless(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    _check_n(n, 1)
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_minus_pm(m: int) -> Graph:
    """K_{2m} minus the perfect matching {2i, 2i+1}."""
    _check_n(m, 1)
    n = 2 * m
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2)
    )


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) drawn from :class:`SplitMix64`.

    Pairs are visited as ``for u in range(n): for v in range(u+1, n)`` and
    each is kept iff the next ``random()`` draw is ``< p``.
    """
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "edgeless": edgeless,
    "star": star,
    "complete_minus_pm": complete_minus_pm,
    "gnp": gnp,
}

_SPEC_RE = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")


def generate(family: str, *params) -> Graph:
    """Build a named family member.

    Accepts either ``generate("cycle", 5)`` or a single spec string such as
    ``generate("gnp(10, 0.3, 7)")``.
    """
    if not params:
        m = _SPEC_RE.match(family)
        if m is None:
            raise ValueError(f"cannot parse family spec {family!r}")
        family = m.group(1)
        params = tuple(
            float(tok) if any(c in tok for c in ".eE") else int(tok)
            for tok in (t.strip() for t in m.group(2).split(","))
            if tok
        )
    try:
        build = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {family}: {exc}") from None
