"""Slow, independent reference implementations used only by the tests.

Nothing here touches bitsets or the refinement-based canonical labelling;
graphs are plain sets of frozenset edges.
"""

from itertools import combinations, permutations


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def naive_nbrs(n, edges):
    nb = {v: set() for v in range(n)}
    for e in edges:
        a, b = tuple(e)
        nb[a].add(b)
        nb[b].add(a)
    return nb


def naive_contains_biclique(n, edges, s, t):
    nb = naive_nbrs(n, edges)
    for group in combinations(range(n), s):
        common = set(range(n))
        for v in group:
            common &= nb[v]
        if len(common) >= t:
            return True
    return False


def naive_contains_clique(n, edges, k):
    nb = naive_nbrs(n, edges)
    return any(all(b in nb[a] for a, b in combinations(c, 2)) for c in combinations(range(n), k))


def naive_contains(n, edges, kind, a, b=None):
    if kind == "biclique":
        return naive_contains_biclique(n, edges, a, b)
    return naive_contains_clique(n, edges, a)


def naive_saturated(n, edges, kind, a, b=None):
    if naive_contains(n, edges, kind, a, b):
        return False
    for pair in combinations(range(n), 2):
        e = frozenset(pair)
        if e not in edges and not naive_contains(n, edges | {e}, kind, a, b):
            return False
    return True


def all_labelled(n):
    pairs = [frozenset(p) for p in combinations(range(n), 2)]
    for mask in range(1 << len(pairs)):
        yield {pairs[i] for i in range(len(pairs)) if mask >> i & 1}


def brute_canon(n, edges):
    """Smallest upper-triangle bit string over all n! relabellings."""
    best = None
    order = [(i, j) for j in range(1, n) for i in range(j)]
    for perm in permutations(range(n)):
        inv = [0] * n
        for v, p in enumerate(perm):
            inv[p] = v
        code = tuple(1 if frozenset((inv[i], inv[j])) in edges else 0 for i, j in order)
        if best is None or code < best:
            best = code
    return best


def naive_graph6(n, edges):
    """Direct transcription of the graph6 byte layout, bit by bit."""
    bitlist = [1 if frozenset((i, j)) in edges else 0 for j in range(1, n) for i in range(j)]
    while len(bitlist) % 6:
        bitlist.append(0)
    out = [n + 63]
    for k in range(0, len(bitlist), 6):
        v = 0
        for b in bitlist[k : k + 6]:
            v = 2 * v + b
        out.append(v + 63)
    return bytes(out)
