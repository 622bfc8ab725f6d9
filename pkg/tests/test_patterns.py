import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satlab.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    make_graph,
    star_graph,
)
from satlab.patterns import (
    K23,
    Pattern,
    PatternError,
    contains_pattern,
    creates_pattern_incremental,
    is_free,
    is_saturated,
)

from conftest import random_graph
from oracles import all_labelled, naive_contains, naive_saturated

PATTERNS = [Pattern.biclique(2, 3), Pattern.biclique(2, 2), Pattern.biclique(1, 3), Pattern.biclique(3, 3),
            Pattern.biclique(2, 4), Pattern.clique(3), Pattern.clique(4)]


def _naive_args(p):
    return ("biclique", p.s, p.t) if p.kind == "biclique" else ("clique", p.k)


@pytest.mark.parametrize(
    "text, expected",
    [("k2,3", Pattern.biclique(2, 3)), ("K2,2", Pattern.biclique(2, 2)), ("k1,3", Pattern.biclique(1, 3)),
     ("k3", Pattern.clique(3)), ("K4", Pattern.clique(4)), ("k3,2", Pattern.biclique(2, 3))],
)
def test_parse(text, expected):
    assert Pattern.parse(text) == expected


@pytest.mark.parametrize("text", ["k2", "k1,1", "c4", "k2,3,4", ""])
def test_parse_rejects(text):
    with pytest.raises(PatternError):
        Pattern.parse(text)


def test_str_roundtrip():
    for p in PATTERNS:
        assert Pattern.parse(str(p)) == p


def test_contains_examples():
    assert contains_pattern(complete_bipartite(2, 3), K23) == (0, 1, 2, 3, 4)
    assert contains_pattern(cycle_graph(5), K23) is None
    assert contains_pattern(complete_graph(5), K23) is not None
    assert contains_pattern(star_graph(5), Pattern.biclique(1, 3)) == (0, 1, 2, 3)
    assert contains_pattern(star_graph(5), K23) is None
    assert contains_pattern(complete_graph(4), Pattern.clique(4)) == (0, 1, 2, 3)


def test_witness_is_lexicographically_first():
    # two K_{2,2} copies; vertex 0 belongs only to the second one
    g = make_graph(6, [(1, 2), (2, 3), (3, 4), (4, 1), (0, 5), (5, 3), (3, 0)])
    assert contains_pattern(g, Pattern.biclique(2, 2)) == (1, 2, 3, 4)


@pytest.mark.parametrize("p", PATTERNS, ids=str)
def test_detector_matches_naive_all_small_graphs(p):
    for n in range(1, 6):
        for edges in all_labelled(n):
            g = make_graph(n, [tuple(e) for e in edges])
            expected = naive_contains(n, edges, *_naive_args(p))
            assert (contains_pattern(g, p) is not None) == expected
            assert is_free(g, p) == (not expected)


def test_pair_scan_equals_generic_for_s2():
    # generic s-subset path versus the specialised pair scan, n <= 6
    from satlab.patterns import _biclique_witness, _pair_scan_witness

    for n in range(1, 7):
        for edges in all_labelled(n) if n <= 5 else []:
            g = make_graph(n, [tuple(e) for e in edges])
            for t in (2, 3):
                assert _pair_scan_witness(g, t) == _biclique_witness(g, 2, t)
    rng = random.Random(3)
    for _ in range(3000):
        g = random_graph(rng, 6)
        for t in (2, 3):
            assert _pair_scan_witness(g, t) == _biclique_witness(g, 2, t)


def test_k2t_free_iff_pairs_have_few_common_neighbours():
    rng = random.Random(11)
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 6))
        for t in (2, 3):
            few = all((g.adj[u] & g.adj[v]).bit_count() <= t - 1 for u, v in itertools.combinations(range(g.n), 2))
            assert few == (contains_pattern(g, Pattern.biclique(2, t)) is None)


def test_saturation_examples():
    a = join(complete_graph(1), disjoint_union(complete_graph(1), cycle_graph(3)))
    v = is_saturated(a, K23)
    assert v.is_free and v.is_saturated and v.failing_nonedge is None

    v = is_saturated(complete_graph(4), K23)
    assert v.is_free and v.is_saturated

    v = is_saturated(empty_graph(5), K23)
    assert v.is_free and not v.is_saturated and v.failing_nonedge == (0, 1)

    for n in range(3, 12):
        assert is_saturated(star_graph(n), Pattern.clique(3)).is_saturated

    v = is_saturated(complete_graph(5), K23)
    assert not v.is_free and not v.is_saturated and v.pattern_witness is not None


def test_verdict_invariants():
    rng = random.Random(2)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 7))
        for p in PATTERNS:
            v = is_saturated(g, p)
            if v.is_saturated:
                assert v.is_free
            has_nonedge = next(g.nonedges(), None) is not None
            assert (v.failing_nonedge is not None) == (v.is_free and not v.is_saturated and has_nonedge)
            assert (v.pattern_witness is not None) == (not v.is_free)


@pytest.mark.parametrize("p", [K23, Pattern.biclique(2, 2), Pattern.clique(3), Pattern.clique(4)], ids=str)
def test_saturation_matches_naive(p):
    for n in range(1, 6):
        for edges in all_labelled(n):
            g = make_graph(n, [tuple(e) for e in edges])
            assert is_saturated(g, p).is_saturated == naive_saturated(n, edges, *_naive_args(p))


def test_incremental_examples():
    k = complete_bipartite(2, 3)
    minus = k.remove_edge(0, 2)
    assert creates_pattern_incremental(minus, K23, 0, 2)
    e5 = empty_graph(5)
    assert not any(creates_pattern_incremental(e5, K23, u, v) for u, v in e5.nonedges())


def test_incremental_precondition_checks():
    with pytest.raises(GraphError):
        creates_pattern_incremental(cycle_graph(5), K23, 0, 1, check=True)
    with pytest.raises(PatternError):
        creates_pattern_incremental(complete_graph(5).remove_edge(0, 1), K23, 0, 1, check=True)
    with pytest.raises(GraphError):
        creates_pattern_incremental(cycle_graph(5), K23, 2, 2)


@pytest.mark.parametrize("p", PATTERNS, ids=str)
def test_incremental_agrees_with_full_recheck(p):
    rng = random.Random(hash(str(p)) % 1000)
    done = 0
    while done < 10_000 // len(PATTERNS) + 1:
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.uniform(0.1, 0.6))
        if contains_pattern(g, p) is not None:
            continue
        nonedges = list(g.nonedges())
        if not nonedges:
            continue
        u, v = rng.choice(nonedges)
        full = contains_pattern(g.add_edge(u, v), p) is not None
        assert creates_pattern_incremental(g, p, u, v) == full
        done += 1


@settings(max_examples=200)
@given(st.integers(2, 8), st.integers(0, 2**28 - 1), st.integers(0, 2**20))
def test_monotone_under_edge_addition(n, mask, pick):
    pairs = list(itertools.combinations(range(n), 2))
    g = make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
    u, v = pairs[pick % len(pairs)]
    for p in PATTERNS:
        if contains_pattern(g, p) is not None:
            assert contains_pattern(g.add_edge(u, v), p) is not None


def test_saturated_means_edge_maximal():
    rng = random.Random(9)
    for _ in range(400):
        g = random_graph(rng, rng.randint(2, 7))
        for p in (K23, Pattern.clique(3)):
            if is_saturated(g, p).is_saturated:
                for u, v in g.nonedges():
                    assert contains_pattern(g.add_edge(u, v), p) is not None
