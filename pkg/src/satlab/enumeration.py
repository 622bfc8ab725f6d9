"""Isomorph-free generation of pattern-free graphs and exact sat(n, P) search.

Graphs are grown one vertex at a time. A child is kept only when its new
vertex lies in the automorphism orbit of the child's designated deletion
vertex: the maximum-degree vertex that comes last in canonical order. Since
pattern-freeness is hereditary, every pattern-free class on ``n`` vertices
is reached exactly once from its unique parent class.
"""

from __future__ import annotations

import os
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_labelling
from .graph import Graph, _pack6, bits, make_graph
from .patterns import Pattern, _find_clique, is_saturated_fast

ENUM_MAX_N = 10
DEFAULT_NODE_BUDGET = 10**8
MODES = ("minimum-only", "all-saturated")


class SearchError(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    """Raised when the search tree outgrows the node budget; carries progress."""

    def __init__(self, nodes: int, visited: int):
        super().__init__(f"node budget exhausted after {nodes} nodes ({visited} classes visited)")
        self.nodes = nodes
        self.visited = visited


def default_node_budget() -> int:
    env = os.environ.get("SATLAB_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


def _through_new_vertex(adj: tuple[int, ...], p: Pattern, x: int) -> bool:
    """Whether the graph has a copy of ``p`` that uses vertex ``x``."""
    nx_ = adj[x]
    if p.kind == "clique":
        return _find_clique(adj, nx_, p.k - 1) is not None
    s, t = p.s, p.t
    others = [w for w in range(len(adj)) if w != x]
    # x on the s-side
    if s == 1:
        if nx_.bit_count() >= t:
            return True
    elif nx_.bit_count() >= t:
        for group in combinations(others, s - 1):
            common = nx_
            for w in group:
                common &= adj[w]
            if common.bit_count() >= t:
                return True
    # x on the t-side: an s-subset of N(x) with >= t common neighbours
    if nx_.bit_count() >= s:
        for group in combinations(list(bits(nx_)), s):
            common = -1
            for w in group:
                common &= adj[w]
            if common.bit_count() >= t:
                return True
    return False


def _children(parent: Graph, p: Pattern, degrees: list[int]) -> list[tuple[Graph, bytes]]:
    """Accepted children of ``parent`` with their canonical graph6 codes, in generation order."""
    k = parent.n
    out = []
    seen: set[int] = set()
    maxdeg = max(degrees) if degrees else 0
    nbits = (k + 1) * k // 2
    head = bytes([k + 1 + 63])
    for size in range(k + 1):
        # the new vertex must end up with maximum degree
        if size < maxdeg:
            continue
        # members of the neighbourhood gain a degree and must stay <= size
        pool = [w for w in range(k) if degrees[w] < size]
        for combo in combinations(pool, size) if len(pool) >= size else ():
            mask = 0
            for w in combo:
                mask |= 1 << w
            child = parent.add_vertex(mask)
            if _through_new_vertex(child.adj, p, k):
                continue
            lab = canonical_labelling(child)
            if lab.code in seen:
                continue
            top = [w for w in range(k + 1) if child.adj[w].bit_count() == size]
            if len(top) > 1:
                pos = {v: i for i, v in enumerate(lab.order)}
                last = max(top, key=pos.__getitem__)
                if lab.orbits[last] != lab.orbits[k]:
                    continue
            seen.add(lab.code)
            out.append((child, head + _pack6(lab.code, nbits)))
    return out


class _Walker:
    def __init__(self, n: int, p: Pattern, visitor: Callable[[Graph, bytes], None], budget: int):
        self.n = n
        self.p = p
        self.visitor = visitor
        self.budget = budget
        self.nodes = 0
        self.visited = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.nodes - 1, self.visited)

    def walk(self, g: Graph, code: bytes) -> None:
        if g.n == self.n:
            self.visited += 1
            self.visitor(g, code)
            return
        degrees = [row.bit_count() for row in g.adj]
        for child, ccode in _children(g, self.p, degrees):
            self._tick()
            self.walk(child, ccode)


def _root() -> tuple[Graph, bytes]:
    return make_graph(1), b"@"


def enumerate_pattern_free(
    n: int,
    pattern: Pattern,
    visitor: Callable[[Graph, bytes], None],
    node_budget: int | None = None,
    max_n: int = ENUM_MAX_N,
) -> int:
    """Call ``visitor(graph, canonical_code)`` once per isomorphism class of ``pattern``-free graphs on ``n`` vertices.

    Returns the number of classes visited. Raises :class:`BudgetExhausted`
    if more than ``node_budget`` augmentation nodes would be needed.
    """
    if not 1 <= n <= max_n:
        raise SearchError(f"enumeration supports 1 <= n <= {max_n}, got {n}")
    budget = default_node_budget() if node_budget is None else node_budget
    walker = _Walker(n, pattern, visitor, budget)
    g, code = _root()
    walker._tick()
    walker.walk(g, code)
    return walker.visited


# search ---------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    n: int
    pattern: Pattern
    mode: str = "minimum-only"
    worker_count: int = 1
    node_budget: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise SearchError(f"n must be >= 1, got {self.n}")
        if self.n > ENUM_MAX_N:
            raise SearchError(f"exact search supports n <= {ENUM_MAX_N}, got {self.n}")
        if self.worker_count < 1:
            raise SearchError("worker_count must be >= 1")
        if self.mode not in MODES:
            raise SearchError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass
class SearchReport:
    n: int
    pattern: Pattern
    mode: str
    min_edges: int | None
    witnesses: list[bytes]
    saturated_count: int
    classes: int
    nodes: int
    complete: bool
    saturated: list[bytes] | None = None
    wall_time: float = 0.0

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "pattern": str(self.pattern),
            "mode": self.mode,
            "min_edges": self.min_edges,
            "witnesses": [w.decode("ascii") for w in self.witnesses],
            "saturated_count": self.saturated_count,
            "classes": self.classes,
            "nodes": self.nodes,
        }
        if self.saturated is not None:
            out["saturated"] = [w.decode("ascii") for w in self.saturated]
        if include_timing:
            out["seconds"] = round(self.wall_time, 3)
        out["complete"] = self.complete
        return out


@dataclass
class _UnitResult:
    min_edges: int | None = None
    witnesses: list[bytes] = field(default_factory=list)
    saturated: list[bytes] = field(default_factory=list)
    saturated_count: int = 0
    classes: int = 0
    nodes: int = 0
    exhausted: bool = False

    def merge(self, other: _UnitResult) -> _UnitResult:
        if other.min_edges is not None and (self.min_edges is None or other.min_edges < self.min_edges):
            self.min_edges = other.min_edges
            self.witnesses = list(other.witnesses)
        elif other.min_edges is not None and other.min_edges == self.min_edges:
            self.witnesses.extend(other.witnesses)
        self.saturated.extend(other.saturated)
        self.saturated_count += other.saturated_count
        self.classes += other.classes
        self.nodes += other.nodes
        self.exhausted = self.exhausted or other.exhausted
        return self


def _explore_unit(args: tuple) -> _UnitResult:
    start, n, pattern, keep_all, budget = args
    res = _UnitResult()

    def visit(g: Graph, code: bytes) -> None:
        res.classes += 1
        if not is_saturated_fast(g, pattern):
            return
        res.saturated_count += 1
        if keep_all:
            res.saturated.append(code)
        m = g.num_edges()
        if res.min_edges is None or m < res.min_edges:
            res.min_edges = m
            res.witnesses = [code]
        elif m == res.min_edges:
            res.witnesses.append(code)

    walker = _Walker(n, pattern, visit, budget)
    try:
        walker.walk(*start)
    except BudgetExhausted:
        res.exhausted = True
    res.nodes = walker.nodes
    return res


def _frontier(n: int, pattern: Pattern, depth: int) -> tuple[list[tuple[Graph, bytes]], int]:
    """Nodes at ``depth`` vertices, in deterministic generation order, plus nodes spent reaching them."""
    level = [_root()]
    nodes = 1
    while level[0][0].n < depth:
        nxt = []
        for g, _ in level:
            nxt.extend(_children(g, pattern, [row.bit_count() for row in g.adj]))
        nodes += len(nxt)
        level = nxt
        if not level:
            break
    return level, nodes


SPLIT_DEPTH = 5


def min_sat_edges(config: SearchConfig) -> SearchReport:
    """Exact sat(n, P) by filtering every P-free class for saturation."""
    t0 = time.perf_counter()
    budget = default_node_budget() if config.node_budget is None else config.node_budget
    depth = min(config.n, SPLIT_DEPTH)
    frontier, spent = _frontier(config.n, config.pattern, depth)
    keep_all = config.mode == "all-saturated"
    total = _UnitResult(nodes=spent, exhausted=spent > budget)
    if not total.exhausted:
        units = [(start, config.n, config.pattern, keep_all, budget) for start in frontier]
        if config.worker_count > 1 and len(units) > 1:
            with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
                results = list(pool.map(_explore_unit, units))
        else:
            results = []
            for unit in units:
                r = _explore_unit(unit)
                results.append(r)
                if total.nodes + sum(x.nodes for x in results) > budget:
                    break
        for r in results:
            total.merge(r)
        if total.nodes > budget:
            total.exhausted = True
    complete = not total.exhausted
    report = SearchReport(
        n=config.n,
        pattern=config.pattern,
        mode=config.mode,
        min_edges=total.min_edges if complete else None,
        witnesses=sorted(total.witnesses) if complete else [],
        saturated_count=total.saturated_count if complete else 0,
        classes=total.classes if complete else 0,
        nodes=total.nodes if complete else budget,
        complete=complete,
        saturated=sorted(total.saturated) if keep_all and complete else (None if not keep_all else []),
        wall_time=time.perf_counter() - t0,
    )
    return report


@dataclass(frozen=True)
class TheoremRow:
    n: int
    oracle: int | None
    expected: int
    match: bool
    complete: bool = True

    def to_json(self) -> dict:
        return {"n": self.n, "oracle": self.oracle, "expected": self.expected, "match": self.match,
                "complete": self.complete}


def verify_theorem(max_n: int, jobs: int = 1, node_budget: int | None = None,
                   pattern: Pattern | None = None) -> list[TheoremRow]:
    """Compare the exhaustive sat(n, K_{2,3}) with ``2n - 3`` for ``5 <= n <= max_n``."""
    if max_n < 5:
        raise SearchError(f"the K_2,3 saturation formula is stated for n >= 5, got max_n={max_n}")
    if max_n > ENUM_MAX_N:
        raise SearchError(f"exact search supports n <= {ENUM_MAX_N}, got {max_n}")
    pattern = pattern or Pattern.biclique(2, 3)
    rows = []
    for n in range(5, max_n + 1):
        rep = min_sat_edges(SearchConfig(n, pattern, worker_count=jobs, node_budget=node_budget))
        expected = 2 * n - 3
        rows.append(TheoremRow(n, rep.min_edges, expected, rep.complete and rep.min_edges == expected,
                               rep.complete))
    return rows
