"""Small simple graphs stored as bit-row adjacency masks.

Vertices are integers ``0..n-1``.  The adjacency matrix is kept as one
integer bitmask per vertex, which makes degree, connectivity and subset
queries cheap for the orders (n <= 12) this library targets.  Graph
values are immutable: every "mutating" operation returns a new graph,
so they are safe to share between worker processes.

The module also implements the standard graph6 text encoding (short
form, n <= 62) used for input and output of graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_ORDER = 12

_G6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``rows[v]`` is the neighbor bitmask of v."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.rows) != n:
            raise GraphError("number of adjacency rows does not match order")
        for v, row in enumerate(self.rows):
            if row < 0 or row >> n:
                raise GraphError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for u in range(n):
            for v in range(u + 1, n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")

    # -- queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        row = self.rows[v]
        return [u for u in range(self.order) if row >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [
            (u, v)
            for u in range(self.order)
            for v in range(u + 1, self.order)
            if self.rows[u] >> v & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edge_degree(self, u: int, v: int) -> int:
        """Number of edges sharing an endpoint with edge uv."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return self.degree(u) + self.degree(v) - 2

    def is_connected(self) -> bool:
        full = (1 << self.order) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                nxt |= self.rows[v]
                rest &= rest - 1
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    # -- copy-on-write mutation ---------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"cannot add a loop at vertex {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    # -- triangle-mask interop ----------------------------------------

    def triangle_mask(self) -> int:
        """Upper-triangle bits packed into one int.

        Bit k encodes the pair (i, j), i < j, with k = j(j-1)/2 + i --
        the same column-major pair order graph6 uses.
        """
        mask = 0
        k = 0
        for j in range(1, self.order):
            for i in range(j):
                if self.rows[i] >> j & 1:
                    mask |= 1 << k
                k += 1
        return mask

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range 0..{self.order - 1}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(order={self.order}, edges={self.edges()})"


def from_edges(order: int, edges) -> Graph:
    """Build a graph from an explicit edge list.

    Rejects loops, duplicate edges and out-of-range endpoints, naming
    the offending edge in the error.
    """
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def from_triangle_mask(order: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.triangle_mask`."""
    rows = [0] * order
    k = 0
    for j in range(1, order):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(order, tuple(rows))


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph(order, tuple(full ^ (1 << v) for v in range(order)))


# -- graph6 -----------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode a graph in the short graph6 form (header byte n+63)."""
    n = g.order
    if n > 62:  # unreachable with MAX_ORDER = 12, kept for the contract
        raise Graph6Error(f"short graph6 form supports n <= 62, got {n}")
    mask = g.triangle_mask()
    nbits = n * (n - 1) // 2
    chars = [chr(n + 63)]
    for start in range(0, nbits, 6):
        group = 0
        for off in range(6):
            k = start + off
            bit = mask >> k & 1 if k < nbits else 0
            group = group << 1 | bit
        chars.append(chr(group + 63))
    return "".join(chars)


def decode_graph6(text: str) -> Graph:
    """Parse a short-form graph6 string, reporting the bad position on error."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 input")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(
            f"byte 0: order {n} outside the supported range 1..{MAX_ORDER}"
        )
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise Graph6Error(
            f"byte {min(len(s), expected)}: expected {expected} bytes for order {n}, "
            f"got {len(s)}"
        )
    mask = 0
    for pos, ch in enumerate(s[1:], start=1):
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise Graph6Error(f"byte {pos}: character {ch!r} outside graph6 alphabet")
        for off in range(6):
            k = (pos - 1) * 6 + off
            bit = group >> (5 - off) & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error(f"byte {pos}: nonzero padding bit")
                continue
            if bit:
                mask |= 1 << k
    return from_triangle_mask(n, mask)
