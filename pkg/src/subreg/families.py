"""Generators for the graphs that attain the bound.

Balloons (including the smallest one of each girth, built from stored cage
graphs), cubic trees with a balloon at every leaf, and the family built from a
2-connected cubic bipartite multigraph by deleting one vertex and exploding
some of the remaining vertices of its part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .multigraph import Multigraph, induced_subgraph, parse_multigraph
from .structure import (
    find_cut_edges,
    girth,
    is_balloon,
    is_two_connected_subcubic,
    one_deficit,
)

# g -> order of the smallest balloon of girth g, i.e. h(3, g) + 1
CAGE_BALLOON_ORDERS = {
    2: 3,
    3: 5,
    4: 7,
    5: 11,
    6: 15,
    7: 25,
    8: 31,
    9: 59,
    10: 71,
    11: 113,
    12: 127,
}

_CAGE_FILES = {
    2: "triple_edge.mg",
    3: "k4.mg",
    4: "k33.mg",
    5: "petersen.mg",
    6: "heawood.mg",
    7: "mcgee.mg",
    8: "tutte_coxeter.mg",
}
STORED_GIRTHS = tuple(sorted(_CAGE_FILES))


class ConstructionError(ValueError):
    pass


def load_cage(g: int) -> Multigraph:
    """The stored (3, g)-cage, for 2 <= g <= 8."""
    if g not in _CAGE_FILES:
        raise ConstructionError(f"no stored cage for girth {g}; stored girths are {STORED_GIRTHS}")
    text = resources.files("subreg.data.cages").joinpath(_CAGE_FILES[g]).read_bytes()
    return parse_multigraph(text)


def triple_edge() -> Multigraph:
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def k4() -> Multigraph:
    return load_cage(3)


def k33() -> Multigraph:
    """K3,3 with parts {0, 1, 2} and {3, 4, 5}."""
    return load_cage(4)


def petersen() -> Multigraph:
    return load_cage(5)


def cube_q3() -> Multigraph:
    """The 3-cube; vertex ``i`` is the bit string of ``i``."""
    edges = [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)]
    return Multigraph(8, tuple(sorted(edges)))


def doubled_c4() -> Multigraph:
    """A 4-cycle with two opposite edges duplicated."""
    return Multigraph(4, ((0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)))


NAMED_GRAPHS = {
    "triple-edge": triple_edge,
    "k4": k4,
    "k33": k33,
    "petersen": petersen,
    "q3": cube_q3,
    "doubled-c4": doubled_c4,
}


def _require_cubic_bridgeless(G: Multigraph, what: str) -> None:
    if not G.is_cubic():
        raise ConstructionError(f"{what} must be cubic")
    if find_cut_edges(G):
        raise ConstructionError(f"{what} must be bridgeless")


# -- balloons ------------------------------------------------------------------


def make_balloon(base: Multigraph, e: int) -> Multigraph:
    """Subdivide edge ``e`` of a bridgeless cubic graph.

    Edge ``e = (u, v)`` becomes ``(u, s)`` and a new last edge ``(s, v)``,
    where ``s = base.n`` is the new vertex.
    """
    _require_cubic_bridgeless(base, "balloon base")
    if not 0 <= e < base.m:
        raise ConstructionError(f"unknown edge {e}")
    u, v = base.edges[e]
    if u == v:
        raise ConstructionError("cannot subdivide a loop")
    s = base.n
    edges = list(base.edges)
    edges[e] = (u, s)
    edges.append((s, v))
    B = Multigraph(base.n + 1, tuple(edges))
    assert is_balloon(B)
    return B


def smallest_balloon(g: int) -> Multigraph:
    """Smallest balloon of girth ``g``: the (3, g)-cage with one edge subdivided.

    The subdivided edge is the smallest identifier whose subdivision keeps
    the girth at ``g``, i.e. the first edge not lying on every shortest cycle.
    """
    cage = load_cage(g)
    for e in range(cage.m):
        B = make_balloon(cage, e)
        if girth(B) == g:
            return B
    raise ConstructionError(f"every edge of the girth-{g} cage lies on all shortest cycles")


def build_tree_with_balloons(t: int, g: int) -> Multigraph:
    """Cubic graph: a caterpillar with ``t`` internal vertices on a path and a
    smallest girth-``g`` balloon hung at each of its ``t + 2`` leaves.

    Internal vertices are ``0..t-1``; balloons follow in leaf order, each
    attached through its 2-vertex. There are ``2t + 1`` cut-edges.
    """
    if t < 1:
        raise ConstructionError("need at least one internal vertex")
    balloon = smallest_balloon(g)
    hub = balloon.degrees().index(2)
    edges = [(i, i + 1) for i in range(t - 1)]
    leaves = []
    for i in range(t):
        spare = 3 - (i > 0) - (i < t - 1)
        leaves.extend([i] * spare)
    assert len(leaves) == t + 2
    n = t
    for anchor in leaves:
        edges.append((anchor, n + hub))
        edges.extend((n + a, n + b) for a, b in balloon.edges)
        n += balloon.n
    G = Multigraph(n, tuple(edges))
    assert G.is_cubic() and len(find_cut_edges(G)) == 2 * t + 1
    return G


# -- explosion and the extremal family -------------------------------------------


def _explode(
    G: Multigraph, y: int, F: Multigraph, z: int, pairing=(0, 1, 2)
) -> tuple[Multigraph, dict[int, int], dict[int, int]]:
    if not 0 <= y < G.n or G.degree(y) != 3:
        raise ConstructionError(f"vertex {y} must have degree 3 in the host graph")
    if any(G.is_loop(e) for e in G.incident(y)):
        raise ConstructionError(f"vertex {y} carries a loop")
    _require_cubic_bridgeless(F, "explosion graph F")
    if not is_two_connected_subcubic(F):
        raise ConstructionError("explosion graph F must be 2-connected (the triple edge is not)")
    if not 0 <= z < F.n:
        raise ConstructionError(f"vertex {z} not in F")
    if sorted(pairing) != [0, 1, 2]:
        raise ConstructionError(f"pairing {pairing!r} is not a bijection of three edges")

    ys = [G.other(e, y) for e in G.incident(y)]
    zs = [F.other(e, z) for e in F.incident(z)]
    gmap = {}
    for v in range(G.n):
        if v != y:
            gmap[v] = len(gmap)
    fmap = {}
    for v in range(F.n):
        if v != z:
            fmap[v] = len(gmap) + len(fmap)
    edges = [(gmap[a], gmap[b]) for a, b in G.edges if y not in (a, b)]
    edges += [(fmap[a], fmap[b]) for a, b in F.edges if z not in (a, b)]
    edges += [(gmap[ys[i]], fmap[zs[pairing[i]]]) for i in range(3)]
    return Multigraph(len(gmap) + len(fmap), tuple(edges)), gmap, fmap


def explode(G: Multigraph, y: int, F: Multigraph, z: int, pairing=(0, 1, 2)) -> Multigraph:
    """Replace ``y`` of ``G`` and ``z`` of ``F`` by three edges joining their neighbourhoods.

    ``pairing[i] = j`` joins the far end of the ``i``-th edge at ``y`` to the
    far end of the ``j``-th edge at ``z`` (edges at a vertex in identifier
    order). Vertices of ``G - y`` come first in their old order, then those of
    ``F - z``.
    """
    return _explode(G, y, F, z, pairing)[0]


@dataclass(frozen=True)
class Explosion:
    F: Multigraph
    z: int = 0
    pairing: tuple[int, int, int] = (0, 1, 2)


@dataclass(frozen=True)
class GFamilySpec:
    H: Multigraph
    y_hat: int
    explosions: dict[int, Explosion] = field(default_factory=dict)


@dataclass(frozen=True)
class GFamilyMember:
    graph: Multigraph
    spec: GFamilySpec
    X: tuple[int, ...]  # part of H not containing y_hat, in result indices
    Y_kept: tuple[int, ...]  # unexploded vertices of Y - y_hat, in result indices
    two_vertices: tuple[int, ...]  # former neighbours of y_hat
    blobs: tuple[tuple[int, ...], ...]  # vertices of F - z for each explosion, by y


def bipartition(G: Multigraph) -> tuple[list[int], list[int]] | None:
    """Parts of a connected bipartite graph (part of vertex 0 first), or ``None``."""
    if G.n == 0:
        return [], []
    color = [-1] * G.n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for e in G.incident(v):
            w = G.other(e, v)
            if color[w] == -1:
                color[w] = 1 - color[v]
                stack.append(w)
            elif color[w] == color[v]:
                return None
    if -1 in color:
        return None
    return [v for v in range(G.n) if color[v] == 0], [v for v in range(G.n) if color[v] == 1]


def build_G_family(spec: GFamilySpec) -> GFamilyMember:
    H, y_hat = spec.H, spec.y_hat
    if not H.is_cubic():
        raise ConstructionError("H must be cubic")
    if not is_two_connected_subcubic(H):
        raise ConstructionError("H must be 2-connected")
    parts = bipartition(H)
    if parts is None:
        raise ConstructionError("H must be bipartite")
    if not 0 <= y_hat < H.n:
        raise ConstructionError(f"y_hat={y_hat} is not a vertex of H")
    Y, X = parts if y_hat in parts[0] else parts[::-1]
    rest = [v for v in range(H.n) if v != y_hat]
    base = induced_subgraph(H, rest)
    if not is_two_connected_subcubic(base.graph):
        raise ConstructionError(f"H - {y_hat} must be 2-connected")
    for y in spec.explosions:
        if y not in Y or y == y_hat:
            raise ConstructionError(f"explosion target {y} must lie in Y - y_hat")

    # position[v] = current index of original H vertex v (None once exploded)
    position: dict[int, int | None] = {v: i for i, v in enumerate(base.vertex_map)}
    G = base.graph
    blobs: dict[int, list[int]] = {}
    for y in sorted(spec.explosions):
        ex = spec.explosions[y]
        G, gmap, fmap = _explode(G, position[y], ex.F, ex.z, ex.pairing)
        for v, p in position.items():
            position[v] = None if p is None or p not in gmap else gmap[p]
        position[y] = None
        for k in blobs:
            blobs[k] = [gmap[p] for p in blobs[k]]
        blobs[y] = sorted(fmap.values())

    two_vertices = tuple(sorted(position[v] for v in H.neighbors(y_hat)))
    member = GFamilyMember(
        graph=G,
        spec=spec,
        X=tuple(sorted(position[x] for x in X)),
        Y_kept=tuple(sorted(position[y] for y in Y if y != y_hat and position[y] is not None)),
        two_vertices=two_vertices,
        blobs=tuple(tuple(blobs[y]) for y in sorted(blobs)),
    )
    degs = G.degrees()
    if one_deficit(G) != 3 or find_cut_edges(G) or sorted(v for v in range(G.n) if degs[v] == 2) != list(two_vertices):
        raise ConstructionError("construction did not produce a bridgeless graph with three 2-vertices")
    return member


# -- the incompatibility example ---------------------------------------------------


@dataclass(frozen=True)
class BadGraph:
    graph: Multigraph
    X: tuple[int, ...]
    Y: tuple[int, ...]
    x: int  # endpoint in X of the doubled edge
    y: int  # endpoint in Y of the doubled edge


def badgraph() -> BadGraph:
    """K2,3 with one edge replaced by a thread of length 3 whose middle edge is doubled.

    K2,3 has parts {a, b} (degree 3) and {p, q, r}; the edge b-r becomes
    b-x=y-r. The result is bipartite with X = {p, q, r, x}, Y = {a, b, y}.
    Vertices: p=0, q=1, r=2, x=3, a=4, b=5, y=6.
    """
    p, q, r, x, a, b, y = range(7)
    edges = ((a, p), (a, q), (a, r), (b, p), (b, q), (b, x), (x, y), (x, y), (y, r))
    return BadGraph(Multigraph(7, edges), X=(p, q, r, x), Y=(a, b, y), x=x, y=y)
