"""Cut-edges, 1-deficit, balloons, girth and thread suppression."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .multigraph import (
    Multigraph,
    Subgraph,
    check_subcubic,
    connected_components,
    induced_subgraph,
)


def find_cut_edges(G: Multigraph) -> list[int]:
    """Sorted identifiers of all cut-edges.

    The DFS skips the *edge* it arrived by rather than the parent vertex, so a
    parallel copy of the tree edge counts as a back edge and parallel classes
    never yield bridges. Loops are ignored.
    """
    n = G.n
    ends = G.edges
    incidence = G._incidence
    disc = [-1] * n
    low = [0] * n
    bridges = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        # frames: [vertex, edge used to enter, next incidence position]
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v = frame[0]
            inc = incidence[v]
            pos = frame[2]
            if pos < len(inc):
                frame[2] = pos + 1
                e = inc[pos]
                if e == frame[1]:
                    continue
                a, b = ends[e]
                if a == b:
                    continue
                w = b if a == v else a
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append([w, e, 0])
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        bridges.append(frame[1])
    return sorted(bridges)


def one_deficit(G: Multigraph) -> int:
    check_subcubic(G)
    return 3 * G.n - 2 * G.m


def is_bridgeless(G: Multigraph) -> bool:
    return not find_cut_edges(G)


def two_edge_connected_components(G: Multigraph) -> list[list[int]]:
    """Components left after deleting every cut-edge."""
    return connected_components(G, skip_edges=find_cut_edges(G))


def is_balloon(G: Multigraph) -> bool:
    """Connected, bridgeless, one vertex of degree 2 and the rest of degree 3."""
    if G.n == 0 or len(connected_components(G)) != 1:
        return False
    degs = sorted(G.degrees())
    if degs[0] != 2 or (G.n > 1 and degs[1] != 3) or degs[-1] > 3:
        return False
    return is_bridgeless(G)


def is_two_connected_subcubic(G: Multigraph) -> bool:
    """2-connectivity for subcubic multigraphs.

    In a subcubic graph any cut vertex sends a single edge into one of its
    blocks, so 2-connected means connected and bridgeless; the two-vertex
    triple edge is bridgeless but not 2-connected and is excluded by n >= 3.
    """
    return G.n >= 3 and G.is_subcubic() and len(connected_components(G)) == 1 and is_bridgeless(G)


def girth(G: Multigraph) -> float:
    """Shortest cycle length: a loop is 1, a parallel pair is 2, forests give ``math.inf``."""
    if any(u == v for u, v in G.edges):
        return 1
    seen = set()
    for u, v in G.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            return 2
        seen.add(key)
    best = math.inf
    for s in range(G.n):
        dist = [-1] * G.n
        via = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for e in G.incident(v):
                if e == via[v]:
                    continue
                w = G.other(e, v)
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    via[w] = e
                    queue.append(w)
                else:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def post_cut_pieces(G: Multigraph, cuts=None) -> list[Subgraph]:
    """Components of ``G`` minus its cut-edges, each as a standalone subgraph."""
    if cuts is None:
        cuts = find_cut_edges(G)
    cut_set = set(cuts)
    pieces = []
    for comp in connected_components(G, skip_edges=cut_set):
        members = set(comp)
        eids = [e for e, (u, _) in enumerate(G.edges) if u in members and e not in cut_set]
        pieces.append(induced_subgraph(G, comp, eids))
    return pieces


@dataclass(frozen=True)
class StructureReport:
    n: int
    m: int
    c: int
    d: int
    cut_edges: tuple[int, ...]
    two_edge_connected_components: tuple[tuple[int, ...], ...]
    balloon_flags: tuple[bool, ...]


def analyze_structure(G: Multigraph) -> StructureReport:
    cuts = find_cut_edges(G)
    comps = connected_components(G, skip_edges=cuts)
    flags = [is_balloon(piece.graph) for piece in post_cut_pieces(G, cuts)]
    return StructureReport(
        n=G.n,
        m=G.m,
        c=len(cuts),
        d=one_deficit(G),
        cut_edges=tuple(cuts),
        two_edge_connected_components=tuple(tuple(c) for c in comps),
        balloon_flags=tuple(flags),
    )


# -- thread suppression ------------------------------------------------------


@dataclass(frozen=True)
class WeightedCubicGraph:
    graph: Multigraph
    weights: tuple[int, ...]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)


@dataclass(frozen=True)
class Thread:
    edges: tuple[int, ...]  # original edge ids, walking from ``start`` to ``end``
    internal: tuple[int, ...]  # original 2-vertices strictly inside the thread
    start: int
    end: int


@dataclass(frozen=True)
class ThreadMap:
    threads: tuple[Thread, ...]  # indexed by weighted-edge id
    vertex_map: tuple[int, ...]  # suppressed vertex -> original vertex

    def expand(self, weighted_edges) -> list[int]:
        """Original edge ids covered by the given weighted edges."""
        out = []
        for e in weighted_edges:
            out.extend(self.threads[e].edges)
        return sorted(out)


class SuppressionError(ValueError):
    pass


def suppress_threads(G: Multigraph) -> tuple[WeightedCubicGraph, ThreadMap]:
    """Replace every thread through 2-vertices by one edge weighted by its length.

    Requires a connected, bridgeless graph with degrees in {2, 3} and at least
    one 3-vertex. Suppressed vertices are the 3-vertices in increasing order;
    weighted edges are numbered in the order their threads are first met when
    scanning 3-vertices and their incident edges by identifier.
    """
    degs = G.degrees()
    if G.n == 0 or len(connected_components(G)) != 1:
        raise SuppressionError("graph must be connected and non-empty")
    if any(d not in (2, 3) for d in degs):
        raise SuppressionError("degrees must lie in {2, 3}")
    if all(d == 2 for d in degs):
        raise SuppressionError("2-regular graphs have no 3-vertex to anchor threads")
    if find_cut_edges(G):
        raise SuppressionError("graph has a cut-edge")

    cubic = [v for v in range(G.n) if degs[v] == 3]
    local = {v: i for i, v in enumerate(cubic)}
    used = [False] * G.m
    threads = []
    new_edges = []
    weights = []
    for s in cubic:
        for e0 in G.incident(s):
            if used[e0]:
                continue
            path = [e0]
            internal = []
            used[e0] = True
            v = G.other(e0, s)
            e = e0
            while degs[v] == 2:
                internal.append(v)
                nxt = [f for f in G.incident(v) if f != e]
                e = nxt[0]
                used[e] = True
                path.append(e)
                v = G.other(e, v)
            if v == s:
                raise SuppressionError("thread closes into a loop; graph has a cut-edge")
            threads.append(Thread(tuple(path), tuple(internal), s, v))
            new_edges.append((local[s], local[v]))
            weights.append(len(path))
    H = Multigraph(len(cubic), tuple(new_edges))
    assert H.is_cubic() and not find_cut_edges(H)
    assert sum(weights) == G.m
    return WeightedCubicGraph(H, tuple(weights)), ThreadMap(tuple(threads), tuple(cubic))
