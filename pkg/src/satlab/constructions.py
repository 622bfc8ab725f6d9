"""Apex constructions of minimum K_{2,3}-saturated graphs.

Each family is a universal vertex joined to a small block (K_1, K_2 or P_4)
plus a 2-regular graph with no 4-cycle, i.e. a disjoint union of cycles of
length 3 or at least 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, complete_graph, disjoint_union, join, make_graph, path_graph

# block attached next to the apex, and the number of non-apex vertices it uses
FAMILY_BLOCKS = {"A": 1, "B": 2, "C": 4}
FAMILY_OFFSETS = {fam: size + 1 for fam, size in FAMILY_BLOCKS.items()}
FAMILY_NAMES = {"A": "K_1*(K_1+H)", "B": "K_1*(K_2+H)", "C": "K_1*(P_4+H)"}


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionRecipe:
    family: str
    n: int
    cycles: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.family not in FAMILY_OFFSETS:
            raise InfeasibleError(f"unknown family {self.family!r}")
        if self.n < 5:
            raise InfeasibleError(f"constructions need n >= 5, got {self.n}")
        if sum(self.cycles) != self.n - FAMILY_OFFSETS[self.family]:
            raise InfeasibleError("cycle lengths do not add up to the size of H")
        if any(c != 3 and c < 5 for c in self.cycles):
            raise InfeasibleError("every cycle must have length 3 or at least 5")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "cycles": list(self.cycles)}


def cycle_partition(m: int) -> list[int]:
    """Cycle lengths (each 3 or >= 5) summing to ``m``: triangles plus at most one 5- or 7-cycle."""
    if m < 0:
        raise InfeasibleError(f"negative order {m}")
    if m in (1, 2, 4):
        raise InfeasibleError(f"no 2-regular C_4-free graph has {m} vertices")
    r = m % 3
    if r == 0:
        return [3] * (m // 3)
    if r == 2:
        return [5] + [3] * ((m - 5) // 3)
    return [7] + [3] * ((m - 7) // 3)


def _cycles_graph(lengths: list[int] | tuple[int, ...]) -> Graph:
    edges = []
    start = 0
    for length in lengths:
        edges += [(start + i, start + (i + 1) % length) for i in range(length)]
        start += length
    return make_graph(start, edges)


def build_h(m: int) -> Graph:
    """2-regular graph on ``m`` vertices without a 4-cycle; cycles occupy consecutive indices."""
    return _cycles_graph(cycle_partition(m))


def _feasible(n: int, family: str) -> bool:
    return n - FAMILY_OFFSETS[family] not in (1, 2, 4) and n - FAMILY_OFFSETS[family] >= 0


def enumerate_feasible_families(n: int) -> list[ConstructionRecipe]:
    if n < 5:
        raise InfeasibleError(f"constructions need n >= 5, got {n}")
    return [
        ConstructionRecipe(fam, n, tuple(cycle_partition(n - FAMILY_OFFSETS[fam])))
        for fam in FAMILY_OFFSETS
        if _feasible(n, fam)
    ]


def build_from_recipe(recipe: ConstructionRecipe) -> Graph:
    size = FAMILY_BLOCKS[recipe.family]
    block = path_graph(4) if recipe.family == "C" else complete_graph(size)
    return join(complete_graph(1), disjoint_union(block, _cycles_graph(recipe.cycles)))


def build_extremal(n: int, family: str | None = None) -> tuple[Graph, ConstructionRecipe]:
    """Build a K_{2,3}-saturated graph with ``2n - 3`` edges; apex is vertex 0.

    Without ``family`` the first feasible of A, B, C is used.
    """
    if n < 5:
        raise InfeasibleError(f"constructions need n >= 5, got {n}")
    if family is None:
        recipes = enumerate_feasible_families(n)
        recipe = recipes[0]
    else:
        family = family.upper()
        if family not in FAMILY_OFFSETS:
            raise InfeasibleError(f"unknown family {family!r}; choose A, B or C")
        h = n - FAMILY_OFFSETS[family]
        if not _feasible(n, family):
            raise InfeasibleError(
                f"family {family} = {FAMILY_NAMES[family]} needs n-{FAMILY_OFFSETS[family]} "
                f"not in {{1, 2, 4}}, but n-{FAMILY_OFFSETS[family]} = {h}"
            )
        recipe = ConstructionRecipe(family, n, tuple(cycle_partition(h)))
    return build_from_recipe(recipe), recipe


def clique_sat_graph(n: int, k: int) -> Graph:
    """``K_{k-2} * I_{n-k+2}``, the classical minimum K_k-saturated graph."""
    if k < 3 or n < k - 2:
        raise GraphError(f"need k >= 3 and n >= k - 2, got n={n}, k={k}")
    return join(complete_graph(k - 2), make_graph(n - k + 2))
