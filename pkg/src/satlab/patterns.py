"""Forbidden-pattern detection and the saturation predicate.

Patterns are complete bipartite graphs ``K_{s,t}`` and cliques ``K_k``.
Containment is always as a (not necessarily induced) subgraph: ``K_{s,t}``
is present iff some ``s`` vertices share at least ``t`` common neighbours.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, bits


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    kind: str  # "biclique" or "clique"
    s: int = 0
    t: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind == "biclique":
            if not 1 <= self.s <= self.t:
                raise PatternError(f"biclique needs 1 <= s <= t, got s={self.s}, t={self.t}")
            if self.s + self.t < 3:
                raise PatternError("pattern order must be at least 3")
        elif self.kind == "clique":
            if self.k < 3:
                raise PatternError(f"clique needs k >= 3, got {self.k}")
        else:
            raise PatternError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def biclique(cls, s: int, t: int) -> Pattern:
        return cls("biclique", s=s, t=t)

    @classmethod
    def clique(cls, k: int) -> Pattern:
        return cls("clique", k=k)

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Parse ``"k2,3"``-style bicliques and ``"k4"``-style cliques (case-insensitive)."""
        m = re.fullmatch(r"\s*k(\d+)(?:\s*,\s*(\d+))?\s*", text, re.IGNORECASE)
        if not m:
            raise PatternError(f"cannot parse pattern {text!r}; expected e.g. 'k2,3' or 'k3'")
        a = int(m.group(1))
        if m.group(2) is None:
            return cls.clique(a)
        b = int(m.group(2))
        return cls.biclique(min(a, b), max(a, b))

    @property
    def order(self) -> int:
        return self.s + self.t if self.kind == "biclique" else self.k

    def __str__(self) -> str:
        if self.kind == "biclique":
            return f"k{self.s},{self.t}"
        return f"k{self.k}"


K23 = Pattern.biclique(2, 3)


@dataclass(frozen=True)
class SaturationVerdict:
    is_free: bool
    is_saturated: bool
    failing_nonedge: tuple[int, int] | None = None
    pattern_witness: tuple[int, ...] | None = None


def _lowest(mask: int, count: int) -> list[int]:
    out = []
    for v in bits(mask):
        if len(out) == count:
            break
        out.append(v)
    return out


def _find_clique(adj: tuple[int, ...], cand: int, size: int) -> list[int] | None:
    """Lexicographically first ``size``-clique inside the vertex set ``cand``."""
    if size == 0:
        return []
    if cand.bit_count() < size:
        return None
    for v in bits(cand):
        # only later vertices, so each clique is found in increasing order
        rest = cand & adj[v] & ~((1 << (v + 1)) - 1)
        sub = _find_clique(adj, rest, size - 1)
        if sub is not None:
            return [v] + sub
    return None


def _biclique_witness(g: Graph, s: int, t: int) -> tuple[int, ...] | None:
    adj = g.adj
    n = g.n
    full = (1 << n) - 1
    best = None
    for group in combinations(range(n), s):
        common = full
        for v in group:
            common &= adj[v]
        if common.bit_count() >= t:
            cand = tuple(sorted(group + tuple(_lowest(common, t))))
            if best is None or cand < best:
                best = cand
    return best


def _pair_scan_witness(g: Graph, t: int) -> tuple[int, ...] | None:
    adj = g.adj
    best = None
    for u in range(g.n):
        au = adj[u]
        for v in range(u + 1, g.n):
            common = au & adj[v]
            if common.bit_count() >= t:
                cand = tuple(sorted([u, v] + _lowest(common, t)))
                if best is None or cand < best:
                    best = cand
    return best


def contains_pattern(g: Graph, p: Pattern) -> tuple[int, ...] | None:
    """Return the lexicographically first vertex set of a copy of ``p`` in ``g``, or ``None``."""
    if g.n < p.order:
        return None
    if p.kind == "clique":
        found = _find_clique(g.adj, (1 << g.n) - 1, p.k)
        return tuple(found) if found is not None else None
    if p.s == 2:
        return _pair_scan_witness(g, p.t)
    return _biclique_witness(g, p.s, p.t)


def is_free(g: Graph, p: Pattern) -> bool:
    """Fast boolean form of ``contains_pattern(g, p) is None``."""
    if g.n < p.order:
        return True
    adj = g.adj
    if p.kind == "clique":
        return _find_clique(adj, (1 << g.n) - 1, p.k) is None
    if p.s == 1:
        return all(row.bit_count() < p.t for row in adj)
    if p.s == 2:
        t = p.t
        n = g.n
        for u in range(n):
            au = adj[u]
            if au.bit_count() < t:
                continue
            for v in range(u + 1, n):
                if (au & adj[v]).bit_count() >= t:
                    return False
        return True
    return _biclique_witness(g, p.s, p.t) is None


def _kst_through(adj: tuple[int, ...], s: int, t: int, u: int, v: int) -> bool:
    # a copy using the new edge uv with u on the s-side: u together with s-1
    # other neighbours of v share >= t-1 old common neighbours besides v
    others = adj[v] & ~(1 << u)
    if others.bit_count() < s - 1:
        return False
    base = adj[u] & ~(1 << v)
    if s == 1:
        return base.bit_count() >= t - 1
    if s == 2:
        if base.bit_count() < t - 1:
            return False
        for w in bits(others):
            if (base & adj[w]).bit_count() >= t - 1:
                return True
        return False
    for group in combinations(list(bits(others)), s - 1):
        common = base
        for w in group:
            common &= adj[w]
        if common.bit_count() >= t - 1:
            return True
    return False


def _creates(adj: tuple[int, ...], p: Pattern, u: int, v: int) -> bool:
    if p.kind == "clique":
        return _find_clique(adj, adj[u] & adj[v], p.k - 2) is not None
    return _kst_through(adj, p.s, p.t, u, v) or _kst_through(adj, p.s, p.t, v, u)


def creates_pattern_incremental(g: Graph, p: Pattern, u: int, v: int, check: bool = False) -> bool:
    """Whether adding the nonedge ``uv`` to the ``p``-free graph ``g`` creates a copy of ``p``.

    Only copies through the new edge are searched. With ``check=True`` the
    preconditions are verified first (slow).
    """
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"invalid vertex pair ({u}, {v})")
    if check:
        if g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is already an edge")
        if not is_free(g, p):
            raise PatternError(f"graph already contains {p}")
    return _creates(g.adj, p, u, v)


def first_failing_nonedge(g: Graph, p: Pattern) -> tuple[int, int] | None:
    """First nonedge (lexicographic) whose addition creates no copy of ``p``; assumes ``g`` is ``p``-free."""
    adj = g.adj
    for u, v in g.nonedges():
        if not _creates(adj, p, u, v):
            return (u, v)
    return None


def is_saturated(g: Graph, p: Pattern) -> SaturationVerdict:
    witness = contains_pattern(g, p)
    if witness is not None:
        return SaturationVerdict(False, False, None, witness)
    failing = first_failing_nonedge(g, p)
    return SaturationVerdict(True, failing is None, failing, None)


def is_saturated_fast(g: Graph, p: Pattern) -> bool:
    """Boolean saturation test for a graph already known to be ``p``-free."""
    return first_failing_nonedge(g, p) is None
