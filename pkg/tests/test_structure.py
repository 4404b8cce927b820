import math
import random

import pytest

from conftest import balloon_star, cycle_graph
from oracles import cut_edges_by_deletion, girth_oracle
from subreg.families import k4 as make_k4, petersen
from subreg.multigraph import Multigraph, connected_components
from subreg.oracle import enumerate_subcubic, random_cubic_multigraph, random_subcubic_multigraph
from subreg.structure import (
    SuppressionError,
    analyze_structure,
    find_cut_edges,
    girth,
    is_balloon,
    one_deficit,
    suppress_threads,
)


def test_cut_edges_path(path3):
    assert find_cut_edges(path3) == [0, 1]


def test_cut_edges_parallel_class_never_bridge(triple):
    assert find_cut_edges(triple) == []
    double_path = Multigraph(3, ((0, 1), (0, 1), (1, 2)))
    assert find_cut_edges(double_path) == [2]


def test_cut_edges_balloon_star():
    G = balloon_star()
    assert find_cut_edges(G) == cut_edges_by_deletion(G) == [0, 5, 10]


def test_cut_edges_loops_ignored():
    G = Multigraph(2, ((0, 0), (0, 1), (1, 1)))
    assert find_cut_edges(G) == [1]


def test_cut_edges_match_deletion_oracle_exhaustive():
    for n in range(1, 6):
        for G in enumerate_subcubic(n):
            assert find_cut_edges(G) == cut_edges_by_deletion(G), G


def test_cut_edges_match_deletion_oracle_random():
    rng = random.Random(11)
    for _ in range(300):
        G = random_subcubic_multigraph(rng.randint(1, 20), rng, edge_prob=rng.random())
        assert find_cut_edges(G) == cut_edges_by_deletion(G)


def test_one_deficit(k4):
    assert one_deficit(k4) == 0
    assert one_deficit(Multigraph(1)) == 3
    assert one_deficit(cycle_graph(5)) == 5
    with pytest.raises(ValueError):
        one_deficit(Multigraph(2, ((0, 1),) * 4))


def test_tree_identity():
    # a subcubic tree: (d + c - 1) / 2 == n
    tree = Multigraph(6, ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5)))
    d, c = one_deficit(tree), len(find_cut_edges(tree))
    assert (d + c - 1) / 2 == tree.n


def test_is_balloon(k4):
    three = Multigraph(3, ((0, 2), (2, 1), (0, 1), (0, 1)))
    assert is_balloon(three)
    five = Multigraph(5, ((0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert is_balloon(five)
    assert not is_balloon(cycle_graph(4))
    assert not is_balloon(k4)


def test_girth_examples(triple, k4):
    assert girth(triple) == 2
    assert girth(k4) == 3
    assert girth(Multigraph(1, ((0, 0),))) == 1
    assert girth(Multigraph(3, ((0, 1), (1, 2)))) == math.inf


def test_girth_petersen():
    G = petersen()
    # frozen from the networkx girth oracle
    assert girth_oracle(G) == 5
    assert girth(G) == 5


def test_girth_matches_oracle_random():
    rng = random.Random(3)
    for _ in range(200):
        G = random_subcubic_multigraph(rng.randint(1, 16), rng, edge_prob=rng.uniform(0.5, 1))
        assert girth(G) == girth_oracle(G)


def test_structure_report(path3):
    rep = analyze_structure(path3)
    assert (rep.n, rep.m, rep.c, rep.d) == (3, 2, 2, 5)
    assert rep.d == 3 * rep.n - 2 * rep.m


def test_suppress_balloon():
    # K4 with edge 0-1 subdivided by vertex 4
    G = Multigraph(5, ((0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    W, tm = suppress_threads(G)
    assert W.graph.n == 4 and W.graph.is_cubic()
    assert sorted(W.weights) == [1, 1, 1, 1, 1, 2]
    assert W.total_weight == G.m == 7
    (long,) = [t for t in tm.threads if t.internal]
    assert long.internal == (4,)


def test_suppress_identity_on_cubic(k4):
    W, tm = suppress_threads(k4)
    assert sorted(W.graph.edges) == sorted(k4.edges)
    assert W.weights == (1,) * 6


def test_suppress_theta():
    # two hubs 0, 1 joined by three paths of length 2
    G = Multigraph(5, ((0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)))
    W, tm = suppress_threads(G)
    assert W.graph.edges == ((0, 1),) * 3
    assert W.weights == (2, 2, 2)


def test_suppress_expand_reproduces_edges():
    rng = random.Random(8)
    done = 0
    while done < 100:
        G = random_subcubic_multigraph(rng.randint(4, 18), rng, edge_prob=0.95)
        degs = G.degrees()
        if (G.n < 2 or any(k < 2 for k in degs) or all(k == 2 for k in degs)
                or find_cut_edges(G) or analyze_structure(G).two_edge_connected_components.__len__() != 1):
            continue
        W, tm = suppress_threads(G)
        assert tm.expand(range(W.graph.m)) == list(range(G.m))
        assert find_cut_edges(W.graph) == []
        for t in tm.threads:
            assert all(G.degree(v) == 2 for v in t.internal)
        done += 1


@pytest.mark.parametrize(
    "G",
    [
        cycle_graph(4),
        Multigraph(3, ((0, 1), (1, 2))),
        balloon_star(),
    ],
)
def test_suppress_rejects(G):
    with pytest.raises(SuppressionError):
        suppress_threads(G)


def test_cut_edge_count_bound_for_cubic_simple_graphs():
    # c <= (n - 7) / 3 for connected simple cubic graphs on n >= 7 vertices
    from subreg.families import build_tree_with_balloons

    for t in (1, 2, 3, 4):
        G = build_tree_with_balloons(t, 3)
        c = len(find_cut_edges(G))
        assert c == (G.n - 7) / 3  # the extremal trees attain it
    rng = random.Random(5)
    seen = 0
    while seen < 150:
        n = rng.randrange(8, 24, 2)
        G = random_cubic_multigraph(n, rng, bridgeless=False)
        if len({tuple(sorted(e)) for e in G.edges}) < G.m:
            continue
        if len(connected_components(G)) != 1:
            continue
        assert len(find_cut_edges(G)) <= (n - 7) / 3
        seen += 1


def test_k4_is_not_a_balloon_but_subdivision_is():
    from subreg.families import make_balloon

    assert is_balloon(make_balloon(make_k4(), 0))
