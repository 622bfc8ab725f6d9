"""Immutable simple graphs stored as per-vertex neighbour bitsets, plus graph6 I/O."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64
GRAPH6_MAX_N = 62
GRAPH6_HEADER = b">>graph6<<"


class GraphError(ValueError):
    """Raised for invalid vertices or edges."""


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; edge edits return new graphs. ``adj[v]`` is an
    int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits above vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        g._n = n
        g._adj = adj
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def nonedges(self) -> Iterator[tuple[int, int]]:
        full = (1 << self._n) - 1
        for u in range(self._n):
            missing = ~self._adj[u] & full & ~((1 << (u + 1)) - 1)
            for v in bits(missing):
                yield u, v

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if self._adj[u] >> v & 1:
            return self
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self._n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if not self._adj[u] >> v & 1:
            return self
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(adj))

    def add_vertex(self, neighborhood: int) -> Graph:
        """Append vertex ``n`` joined to the vertex set ``neighborhood`` (a bitmask)."""
        n = self._n
        if n + 1 > MAX_VERTICES:
            raise GraphError(f"cannot exceed {MAX_VERTICES} vertices")
        if neighborhood >> n:
            raise GraphError("neighbourhood mentions vertices that do not exist")
        bit = 1 << n
        adj = tuple(row | bit if neighborhood >> v & 1 else row for v, row in enumerate(self._adj))
        return Graph._trusted(n + 1, adj + (neighborhood,))

    def delete_vertex(self, v: int) -> Graph:
        """Remove ``v``; vertices above it shift down by one."""
        self._check_vertex(v)
        low = (1 << v) - 1
        adj = []
        for u, row in enumerate(self._adj):
            if u != v:
                adj.append((row & low) | (row >> (v + 1) << v))
        return Graph._trusted(self._n - 1, tuple(adj))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self._n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * n
        for v, row in enumerate(self._adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph._trusted(n, tuple(adj))

    def induced_edges(self, mask: int) -> int:
        """Number of edges with both ends in the vertex set ``mask``."""
        return sum((self._adj[v] & mask).bit_count() for v in bits(mask)) // 2


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from an edge list; repeated pairs collapse to one edge."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphError(f"invalid edge ({u}, {v}): loops are not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return make_graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return make_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return make_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(a, b)
    a_mask = (1 << a.n) - 1
    b_mask = ((1 << b.n) - 1) << a.n
    adj = [row | (b_mask if v < a.n else a_mask) for v, row in enumerate(u.adj)]
    return Graph(u.n, adj)


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """Return ``(min degree, max degree, degree sequence sorted descending)``."""
    if g.n == 0:
        raise GraphError("degree statistics are undefined for the empty graph")
    seq = sorted((row.bit_count() for row in g.adj), reverse=True)
    return seq[-1], seq[0], seq


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Bitset of vertices adjacent to both ``u`` and ``v``."""
    g._check_vertex(u)
    g._check_vertex(v)
    return g.adj[u] & g.adj[v]


# graph6 -------------------------------------------------------------------


def _pack6(bitstring: int, nbits: int) -> bytes:
    pad = -nbits % 6
    value = bitstring << pad
    ngroups = (nbits + pad) // 6
    return bytes(((value >> (6 * (ngroups - 1 - i))) & 63) + 63 for i in range(ngroups))


def upper_triangle_bits(g: Graph) -> int:
    """Upper-triangle adjacency as an integer, first graph6 bit most significant."""
    value = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            value = value << 1 | (row >> i & 1)
    return value


def to_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 (short form only, no header, no newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"unsupported size: graph6 short form covers n <= {GRAPH6_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    return bytes([n + 63]) + _pack6(upper_triangle_bits(g), nbits)


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record. A leading ``>>graph6<<`` header and trailing newline are ignored."""
    if isinstance(data, str):
        data = bytes(min(ord(c), 255) for c in data)
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    data = data[base:].rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 record", base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c!r} outside the range 63..126", base + i)
    n = data[0] - 63
    if n == 63:
        raise Graph6Error("unsupported size: long-form graph6 headers (n > 62) are not accepted", base)
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) - 1 != ngroups:
        raise Graph6Error(
            f"malformed length: n={n} needs {ngroups} data bytes, found {len(data) - 1}",
            base + min(len(data), 1 + ngroups),
        )
    value = 0
    for c in data[1:]:
        value = value << 6 | (c - 63)
    pad = ngroups * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + len(data) - 1)
    value >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph._trusted(n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Functional form of :meth:`Graph.add_edge`."""
    return g.add_edge(u, v)
