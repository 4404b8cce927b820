import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import balloon_star, cycle_graph
from oracles import f2_by_cycle_search
from subreg import bound_omitted, classify_equality, extract
from subreg.extract import (
    BALLOON,
    G_FAMILY,
    NON_EXTREMAL,
    SINGLE_VERTEX,
    TWO_REGULAR,
    augment_with_balloons,
    validate_two_regular,
)
from subreg.families import GFamilySpec, build_G_family, k33, petersen
from subreg.multigraph import Multigraph, disjoint_union
from subreg.oracle import brute_force_f2, random_cubic_multigraph, random_subcubic_multigraph
from subreg.structure import find_cut_edges


def test_bound_omitted_examples():
    assert bound_omitted(4, 6, 0) == 0  # K4: d=0, c=0 -> max(0, -1)
    assert bound_omitted(3, 2, 2) == 3  # path: d=5, c=2
    assert bound_omitted(1, 0, 0) == 1
    with pytest.raises(ValueError):
        bound_omitted(2, 4, 0)


def test_k4(k4):
    H, cert = extract(k4)
    assert len(H) == 4
    assert cert.achieved_omitted == 0 and cert.bound_omitted == 0
    assert not cert.equality  # d + c - 1 = -1
    assert cert.classes == [NON_EXTREMAL]


def test_triple_edge(triple):
    H, cert = extract(triple)
    assert len(H) == 2 and len(H.cycles) == 1


def test_single_vertex():
    H, cert = extract(Multigraph(1))
    assert len(H) == 0
    assert cert.equality and cert.classes == [SINGLE_VERTEX]
    H, cert = extract(Multigraph(1, ((0, 0),)))
    assert len(H) == 1 and cert.bound_omitted == 0


def test_cycle_taken_whole():
    H, cert = extract(cycle_graph(6))
    assert len(H) == 6
    assert cert.classes == [TWO_REGULAR]
    assert cert.bound_omitted == 2 and not cert.bound_attained


def test_path(path3):
    H, cert = extract(path3)
    assert len(H) == 0
    assert cert.bound_omitted == cert.achieved_omitted == 3
    assert cert.equality
    assert cert.classes == [SINGLE_VERTEX] * 3


def test_balloon_star():
    G = balloon_star()
    H, cert = extract(G)
    # cubic with three cut-edges: omit (0 + 3 - 1) // 2 = 1, the centre
    assert (cert.d, cert.c) == (0, 3)
    assert cert.bound_omitted == cert.achieved_omitted == 1
    assert len(H) == 9
    assert cert.classes == [SINGLE_VERTEX, BALLOON, BALLOON, BALLOON]
    assert cert.equality
    assert brute_force_f2(G).f2_exact == 9


def test_g_family_member():
    member = build_G_family(GFamilySpec(k33(), 3))
    H, cert = extract(member.graph)
    assert cert.d == 3 and cert.c == 0
    assert len(H) == member.graph.n - 1
    assert cert.classes == [G_FAMILY]
    assert cert.equality


def test_d2_always_two_factor():
    # d = 2 and bridgeless: bound is floor(1/2) = 0, so a 2-factor must exist
    rng = random.Random(12)
    seen = 0
    while seen < 100:
        G = random_cubic_multigraph(rng.randrange(4, 17, 2), rng)
        e = rng.randrange(G.m)
        u, v = G.edges[e]
        if u == v:
            continue
        # subdivide twice: two new 2-vertices, still bridgeless
        edges = list(G.edges)
        a, b = G.n, G.n + 1
        edges[e] = (u, a)
        edges += [(a, b), (b, v)]
        K = Multigraph(G.n + 2, tuple(edges))
        H, cert = extract(K)
        assert cert.d == 2 and cert.c == 0
        assert len(H) == K.n
        seen += 1


def test_disjoint_union_adds_up(k4, triple):
    G = disjoint_union(k4, triple)
    H, cert = extract(G)
    assert len(H) == 6


def test_classify_equality_rejects_disconnected(k4):
    G = disjoint_union(k4, k4)
    _, cert = extract(G)
    with pytest.raises(ValueError):
        classify_equality(G, cert)


def test_classify_equality_matches_extract():
    G = balloon_star()
    _, cert = extract(G)
    again = classify_equality(G, cert)
    assert again == cert


def test_augment_with_balloons():
    member = build_G_family(GFamilySpec(k33(), 3))
    aug, cuts = augment_with_balloons(member.graph)
    assert aug.is_cubic()
    assert aug.n == member.graph.n + 9
    assert sorted(find_cut_edges(aug)) == sorted(cuts)


def test_petersen_has_no_two_factor_but_large_subgraph():
    H, cert = extract(petersen())
    # two 5-cycles form a 2-factor of the Petersen graph
    assert len(H) == 10


def _random_graph(seed, n, p):
    return random_subcubic_multigraph(n, random.Random(seed), edge_prob=p)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.floats(0.2, 1.0))
def test_soundness_and_bound(seed, n, p):
    G = _random_graph(seed, n, p)
    H, cert = extract(G)
    assert validate_two_regular(G, H) == []
    assert G.n - len(H) <= cert.bound_omitted
    assert len(H) <= brute_force_f2(G).f2_exact


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 9), st.floats(0.3, 1.0))
def test_f2_oracles_agree(seed, n, p):
    G = _random_graph(seed, n, p)
    assert brute_force_f2(G).f2_exact == f2_by_cycle_search(G)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 24).filter(lambda k: k % 2 == 0))
def test_bridgeless_cubic_has_two_factor(seed, n):
    G = random_cubic_multigraph(n, random.Random(seed))
    H, cert = extract(G)
    assert len(H) == n


def test_deterministic():
    G = _random_graph(77, 14, 0.9)
    assert extract(G) == extract(G)
