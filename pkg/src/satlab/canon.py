"""Canonical labelling by individualisation and refinement.

The canonical code of a graph is the smallest graph6 upper-triangle bit
string over all labellings reachable in the search tree of ordered
equitable partitions. Automorphisms are discovered whenever two leaves give
the same code and are used to skip isomorphic subtrees; the discovered
automorphisms generate the full group, so vertex orbits come out exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _pack6

CANON_MAX_N = 12


class UnsupportedSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Labelling:
    code: int  # upper-triangle bits, first graph6 bit most significant
    order: tuple[int, ...]  # order[i] = original vertex placed at position i
    orbits: tuple[int, ...]  # orbits[v] = smallest vertex in the Aut-orbit of v

    def position(self, v: int) -> int:
        return self.order.index(v)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))
    for perm in gens:
        for v in range(n):
            a, b = _find(parent, v), _find(parent, perm[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [_find(parent, v) for v in range(n)]


def canonical_labelling(g: Graph) -> Labelling:
    n = g.n
    adj = g.adj
    if n == 0:
        return Labelling(0, (), ())
    deg_cells: dict[int, list[int]] = {}
    for v in range(n):
        deg_cells.setdefault(adj[v].bit_count(), []).append(v)
    cells = _refine(adj, [deg_cells[d] for d in sorted(deg_cells)])

    best_code = -1
    best_order: list[int] = []
    auts: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best_code, best_order
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            order = [cell[0] for cell in cells]
            code = _code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                auts.append(tuple(perm))
            return
        cell = cells[target]
        explored: list[int] = []
        seen_auts = -1
        roots: list[int] = []
        for v in cell:
            if explored:
                if len(auts) != seen_auts:
                    seen_auts = len(auts)
                    stab = [p for p in auts if all(p[x] == x for x in prefix)]
                    roots = _orbit_roots(n, stab)
                if any(roots[v] == roots[u] for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(adj, split), prefix + [v])

    search(cells, [])
    roots = _orbit_roots(n, auts)
    return Labelling(best_code, tuple(best_order), tuple(roots))


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph (no size check)."""
    n = g.n
    lab = canonical_labelling(g)
    return bytes([n + 63]) + _pack6(lab.code, n * (n - 1) // 2)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant graph6 code: equal iff the graphs are isomorphic."""
    if g.n > CANON_MAX_N:
        raise UnsupportedSizeError(f"canonical form supports n <= {CANON_MAX_N}, got {g.n}")
    return canonical_code(g)


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labelling(g)
    perm = [0] * g.n
    for pos, v in enumerate(lab.order):
        perm[v] = pos
    return g.relabel(perm)


def automorphism_orbits(g: Graph) -> list[list[int]]:
    lab = canonical_labelling(g)
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(lab.orbits):
        groups.setdefault(r, []).append(v)
    return [groups[r] for r in sorted(groups)]
