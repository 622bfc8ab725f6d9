"""Structural predicates that every K_{2,3}-saturated graph satisfies.

The checkers never assume saturation: they evaluate the predicate on any
graph and report the first counterexample, which makes them usable as
diagnostics on near-miss graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, GraphError, bits


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    alpha: int | None = None
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out: dict = {"check": self.check}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.passed:
            out["result"] = "pass"
        else:
            out["result"] = "fail"
            out["counterexample"] = self.counterexample
        return out


def _check_alpha(g: Graph, alpha: int) -> None:
    if not 0 <= alpha < g.n:
        raise GraphError(f"alpha={alpha} out of range for n={g.n}")


def check_p1(g: Graph) -> CheckResult:
    """Every nonedge a1a2 has some b in N(a_i) sharing two neighbours with the other endpoint."""
    adj = g.adj
    for a1, a2 in g.nonedges():
        if not (_p1_side(adj, a1, a2) or _p1_side(adj, a2, a1)):
            return CheckResult("p1", False, counterexample={"nonedge": [a1, a2]})
    return CheckResult("p1", True)


def _p1_side(adj: tuple[int, ...], ai: int, other: int) -> bool:
    target = adj[other]
    return any((adj[b] & target).bit_count() >= 2 for b in bits(adj[ai]))


def check_c2(g: Graph, alpha: int) -> CheckResult:
    """For every y outside N[alpha]: y shares two neighbours with some x in N(alpha),
    or y is adjacent to a common neighbour of two distinct vertices of N(alpha)."""
    _check_alpha(g, alpha)
    adj = g.adj
    xs = list(bits(adj[alpha]))
    # vertices lying in N(x_i) ∩ N(x_j) for some i != j
    doubly = 0
    for i, xi in enumerate(xs):
        for xj in xs[i + 1 :]:
            doubly |= adj[xi] & adj[xj]
    outside = ((1 << g.n) - 1) & ~adj[alpha] & ~(1 << alpha)
    for y in bits(outside):
        ny = adj[y]
        if len(xs) == 1:
            if (ny & adj[xs[0]]).bit_count() < 2:
                return CheckResult("c2", False, alpha, {"y": y, "clause": "degree-one"})
            continue
        if any((ny & adj[x]).bit_count() >= 2 for x in xs):
            continue
        if ny & doubly:
            continue
        return CheckResult("c2", False, alpha, {"y": y})
    return CheckResult("c2", True, alpha)


@dataclass(frozen=True)
class AlphaPartition:
    """Split of V relative to ``alpha``.

    ``v1`` is N[alpha] plus the vertices with exactly two neighbours in
    N(alpha); ``u2`` the remaining vertices with exactly one; ``u3`` the rest.
    Weights are stored doubled so they stay integral.
    """

    alpha: int
    v1: frozenset[int]
    u2: frozenset[int]
    u3: frozenset[int]
    omega_doubled: dict[int, int] = field(default_factory=dict)

    def omega(self, b: int) -> Fraction:
        return Fraction(self.omega_doubled[b], 2)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "v1": sorted(self.v1),
            "u2": sorted(self.u2),
            "u3": sorted(self.u3),
            "omega": {str(b): self.omega_doubled[b] / 2 for b in sorted(self.u2)},
        }


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def alpha_partition(g: Graph, alpha: int) -> AlphaPartition:
    _check_alpha(g, alpha)
    adj = g.adj
    na = adj[alpha]
    closed = na | 1 << alpha
    v1 = closed
    u2 = 0
    for v in range(g.n):
        if closed >> v & 1:
            continue
        c = (adj[v] & na).bit_count()
        if c == 2:
            v1 |= 1 << v
        elif c == 1:
            u2 |= 1 << v
    u3 = ((1 << g.n) - 1) & ~v1 & ~u2
    omega2 = {b: 2 * (adj[b] & v1).bit_count() + (adj[b] & u2).bit_count() for b in bits(u2)}
    return AlphaPartition(alpha, frozenset(bits(v1)), frozenset(bits(u2)), frozenset(bits(u3)), omega2)


def check_c3(g: Graph, alpha: int) -> CheckResult:
    """Weight bound for U_2 vertices hanging off a sparse x*, and the U_3 neighbour count."""
    part = alpha_partition(g, alpha)
    adj = g.adj
    na = adj[alpha]
    u2 = _mask(part.u2)
    u3 = _mask(part.u3)

    for xs in bits(na):
        if (adj[xs] & na).bit_count() > 1:
            continue
        for y in part.u2:
            if adj[y] & na != 1 << xs:
                continue
            w2 = part.omega_doubled[y]
            if w2 < 3:
                return CheckResult("c3", False, alpha,
                                   {"clause": "a", "y": y, "x_star": xs, "omega": w2 / 2})
            if w2 == 3:
                ny_u2 = adj[y] & u2
                ok = False
                if ny_u2.bit_count() == 1:
                    for x in bits(na & adj[xs]):
                        if adj[x] & ny_u2:
                            ok = True
                            break
                if not ok:
                    return CheckResult("c3", False, alpha,
                                       {"clause": "a-tight", "y": y, "x_star": xs, "omega": 1.5})

    for z in part.u3:
        outside = (adj[z] & ~u3).bit_count()
        hit = sum(1 for x in bits(na) if adj[z] & adj[x] & u2)
        if outside < 1 + hit:
            return CheckResult("c3", False, alpha,
                               {"clause": "b", "z": z, "outside_u3": outside, "required": 1 + hit})
    return CheckResult("c3", True, alpha)


def lambda_stat(g: Graph) -> int | None:
    """Minimum number of edges inside N(alpha) over degree-3 vertices alpha; ``None`` if there are none."""
    values = [g.induced_edges(row) for row in g.adj if row.bit_count() == 3]
    return min(values) if values else None


def run_checks(g: Graph, checks: list[str], alpha: int | None = None) -> list[CheckResult]:
    """Run ``p1``/``c2``/``c3``; C2 and C3 go over every vertex unless ``alpha`` is given."""
    out = []
    alphas = range(g.n) if alpha is None else [alpha]
    for name in checks:
        if name == "p1":
            out.append(check_p1(g))
        elif name in ("c2", "c3"):
            fn = check_c2 if name == "c2" else check_c3
            for a in alphas:
                out.append(fn(g, a))
        else:
            raise ValueError(f"unknown check {name!r}; choose from p1, c2, c3")
    return out
