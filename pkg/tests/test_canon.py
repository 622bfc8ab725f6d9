import itertools
import random

import pytest

from satlab.canon import (
    UnsupportedSizeError,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    canonical_labelling,
)
from satlab.graph import complete_graph, cycle_graph, empty_graph, from_graph6, make_graph, path_graph

from conftest import random_graph
from oracles import all_labelled, brute_canon, edge_set


def test_p3_labellings_agree():
    codes = {canonical_form(path_graph(3).relabel(p)) for p in itertools.permutations(range(3))}
    assert len(codes) == 1


def test_c5_random_permutation():
    rng = random.Random(1)
    p = list(range(5))
    rng.shuffle(p)
    assert canonical_form(cycle_graph(5).relabel(p)) == canonical_form(cycle_graph(5))


def test_eleven_classes_on_four_vertices():
    brute = {brute_canon(4, e) for e in all_labelled(4)}
    ours = {canonical_form(make_graph(4, [tuple(x) for x in e])) for e in all_labelled(4)}
    assert len(brute) == 11
    assert len(ours) == len(brute)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_same_partition_as_brute_force(n):
    pairs = {}
    for e in all_labelled(n):
        ours = canonical_form(make_graph(n, [tuple(x) for x in e]))
        pairs.setdefault(brute_canon(n, e), set()).add(ours)
    # one of our codes per brute-force class, and no code shared between classes
    assert all(len(v) == 1 for v in pairs.values())
    assert len({next(iter(v)) for v in pairs.values()}) == len(pairs)


def test_invariance_random():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randint(1, 8)
        g = random_graph(rng, n)
        p = list(range(n))
        rng.shuffle(p)
        assert canonical_form(g) == canonical_form(g.relabel(p))


def test_invariance_symmetric_graphs_up_to_twelve():
    rng = random.Random(0)
    for n in range(1, 13):
        for g in (empty_graph(n), complete_graph(n), path_graph(n)) + ((cycle_graph(n),) if n >= 3 else ()):
            p = list(range(n))
            rng.shuffle(p)
            assert canonical_form(g) == canonical_form(g.relabel(p))


def test_code_decodes_to_isomorphic_graph():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9))
        code = canonical_form(g)
        h = from_graph6(code)
        assert h == canonical_graph(g)
        assert h.num_edges() == g.num_edges()
        assert canonical_form(h) == code


def test_unsupported_size():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(empty_graph(13))


def _brute_orbits(g):
    n = g.n
    es = edge_set(g)
    auts = [p for p in itertools.permutations(range(n))
            if {frozenset((p[a], p[b])) for a, b in map(tuple, es)} == es]
    orbits = {frozenset(p[v] for p in auts) for v in range(n)}
    return sorted(sorted(o) for o in orbits)


def test_orbits_match_brute_force():
    assert automorphism_orbits(path_graph(5)) == [[0, 4], [1, 3], [2]]
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6))
        assert automorphism_orbits(g) == _brute_orbits(g)


def test_labelling_order_is_permutation():
    g = cycle_graph(7)
    lab = canonical_labelling(g)
    assert sorted(lab.order) == list(range(7))
    assert set(lab.orbits) == {0}
