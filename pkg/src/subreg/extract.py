"""Large 2-regular subgraphs of subcubic multigraphs with a certified bound.

``extract`` works component by component. A component with a cut-edge is
split on its smallest cut-edge and both sides are handled independently. A
bridgeless component is handled according to its 1-deficit ``d``:

* ``d = 0``  delete a perfect matching of the cubic graph;
* ``d = 1, 2`` suppress threads, delete a perfect matching avoiding the
  weighted edges that carry 2-vertices, expand back;
* ``d = 3``  hang a 3-vertex balloon on each 2-vertex; a perfect matching of
  the resulting cubic graph restricts to a 2-factor. If there is none the
  component is extremal and the next case applies;
* ``d >= 3`` suppress threads and delete a minimum-weight perfect matching of
  the weighted cubic graph, which keeps at least 2/3 of the edges.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from .matching import max_matching, min_weight_perfect_matching, perfect_matching_avoiding
from .multigraph import Multigraph, Subgraph, check_subcubic, connected_components, induced_subgraph
from .structure import find_cut_edges, is_balloon, one_deficit, post_cut_pieces, suppress_threads

log = logging.getLogger(__name__)

SINGLE_VERTEX = "single-vertex"
BALLOON = "balloon"
G_FAMILY = "G-family"
TWO_REGULAR = "two-regular"
NON_EXTREMAL = "non-extremal"
EXTREMAL_CLASSES = frozenset({SINGLE_VERTEX, BALLOON, G_FAMILY})


class ExtractionError(RuntimeError):
    """An internal consistency check of the extraction failed."""


@dataclass(frozen=True)
class TwoRegularSubgraph:
    cycles: tuple[tuple[int, ...], ...]
    covered: tuple[int, ...]

    @property
    def edge_ids(self) -> list[int]:
        return sorted(e for cyc in self.cycles for e in cyc)

    def __len__(self) -> int:
        return len(self.covered)


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    m: int
    c: int
    d: int
    bound_omitted: int
    achieved_omitted: int
    bound_attained: bool  # achieved_omitted == bound_omitted
    equality: bool  # achieved f2 == n - (d + c - 1) / 2 exactly
    component_classes: tuple[tuple[tuple[int, ...], str], ...] = ()

    @property
    def classes(self) -> list[str]:
        return [cls for _, cls in self.component_classes]


def bound_omitted(n: int, m: int, c: int) -> int:
    """``max(0, floor((d + c - 1) / 2))`` with ``d = 3n - 2m``."""
    d = 3 * n - 2 * m
    if d < 0:
        raise ValueError(f"negative 1-deficit {d}: not a subcubic multigraph")
    return max(0, (d + c - 1) // 2)


def cycles_from_edges(G: Multigraph, eids) -> TwoRegularSubgraph:
    """Split an edge set in which every touched vertex has degree 2 into cycles."""
    eids = sorted(set(eids))
    inc: dict[int, list[int]] = {}
    for e in eids:
        u, v = G.edges[e]
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    for v, es in inc.items():
        if len(es) != 2:
            raise ExtractionError(f"vertex {v} has degree {len(es)} in the edge set")
    used = set()
    cycles = []
    for e0 in eids:
        if e0 in used:
            continue
        u, v = G.edges[e0]
        start = min(u, v)
        cyc = [e0]
        used.add(e0)
        if u != v:
            cur, prev = G.other(e0, start), e0
            while cur != start:
                nxt = inc[cur][0] if inc[cur][0] != prev else inc[cur][1]
                cyc.append(nxt)
                used.add(nxt)
                cur, prev = G.other(nxt, cur), nxt
        cycles.append(tuple(cyc))
    return TwoRegularSubgraph(tuple(cycles), tuple(sorted(inc)))


def validate_two_regular(G: Multigraph, H: TwoRegularSubgraph) -> list[str]:
    """Problems with ``H`` as a 2-regular subgraph of ``G``; empty when valid."""
    problems = []
    deg: dict[int, int] = {}
    seen = set()
    for cyc in H.cycles:
        if not cyc:
            problems.append("empty cycle")
            continue
        for e in cyc:
            if not 0 <= e < G.m:
                problems.append(f"edge {e} not in graph")
                continue
            if e in seen:
                problems.append(f"edge {e} used twice")
            seen.add(e)
            u, v = G.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        # consecutive edges must share a vertex and close up
        if all(0 <= e < G.m for e in cyc) and len(cyc) > 1:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not set(G.edges[a]) & set(G.edges[b]):
                    problems.append(f"edges {a} and {b} are not consecutive on a cycle")
    for v, k in deg.items():
        if k != 2:
            problems.append(f"vertex {v} has degree {k}")
    if tuple(sorted(deg)) != tuple(H.covered):
        problems.append("covered set does not match cycle vertices")
    if len(H.covered) != len(seen):
        problems.append("vertex count differs from edge count")
    return problems


BALLOON3 = Multigraph(3, ((0, 1), (1, 2), (1, 2), (2, 0)))


def augment_with_balloons(G: Multigraph) -> tuple[Multigraph, list[int]]:
    """Hang a 3-vertex balloon by a new cut-edge on every 2-vertex of ``G``.

    Original vertices and edges keep their identifiers. Returns the new graph
    and the identifiers of the new cut-edges, one per 2-vertex in order.
    """
    edges = list(G.edges)
    n = G.n
    cut_edges = []
    for v, dv in enumerate(G.degrees()):
        if dv != 2:
            continue
        s, p, q = n, n + 1, n + 2
        cut_edges.append(len(edges))
        edges.append((v, s))
        edges.extend([(s, p), (p, q), (p, q), (q, s)])
        n += 3
    return Multigraph(n, tuple(edges)), cut_edges


def _augmented_perfect_matching(G: Multigraph) -> list[int] | None:
    aug, _ = augment_with_balloons(G)
    M = max_matching(aug)
    if 2 * len(M) != aug.n:
        return None
    return [e for e in M if e < G.m]


def _bridgeless_piece(P: Multigraph) -> list[int]:
    """2-regular subgraph of a connected bridgeless piece, as local edge ids."""
    if P.n == 1:
        return list(range(P.m))  # a loop, or nothing
    degs = P.degrees()
    if all(k == 2 for k in degs):
        return list(range(P.m))
    d = one_deficit(P)
    if d == 0:
        M = max_matching(P)
        if 2 * len(M) != P.n:
            raise ExtractionError("bridgeless cubic component without a perfect matching")
        drop = set(M)
    elif d in (1, 2):
        W, threads = suppress_threads(P)
        forbidden = [i for i, t in enumerate(threads.threads) if t.internal]
        res = perfect_matching_avoiding(W.graph, forbidden)
        if res.matching is None:
            raise ExtractionError("no perfect matching avoiding the subdivided edges")
        keep = [i for i in range(W.graph.m) if i not in set(res.matching)]
        return threads.expand(keep)
    else:
        if d == 3:
            M = _augmented_perfect_matching(P)
            if M is not None:
                return [e for e in range(P.m) if e not in set(M)]
        W, threads = suppress_threads(P)
        M = min_weight_perfect_matching(W.graph, W.weights)
        if M is None:
            raise ExtractionError("suppressed cubic graph has no perfect matching")
        if 3 * sum(W.weights[e] for e in M) > W.total_weight:
            raise ExtractionError("min-weight perfect matching exceeds 1/3 of the total weight")
        keep = [i for i in range(W.graph.m) if i not in set(M)]
        return threads.expand(keep)
    return [e for e in range(P.m) if e not in drop]


def _split(S: Subgraph, e: int) -> list[Subgraph]:
    G = S.graph
    rest = [f for f in range(G.m) if f != e]
    parts = []
    for comp in connected_components(G, skip_edges=(e,)):
        members = set(comp)
        inner = induced_subgraph(G, comp, [f for f in rest if G.edges[f][0] in members])
        parts.append(
            Subgraph(
                inner.graph,
                tuple(S.vertex_map[v] for v in inner.vertex_map),
                tuple(S.edge_map[f] for f in inner.edge_map),
            )
        )
    return parts


def _extract_connected(
    S: Subgraph, cuts: list[int] | None = None, classes: list | None = None
) -> list[int]:
    """Edge ids (in the coordinates of ``S.edge_map``) of a 2-regular subgraph.

    The bridgeless pieces reached by splitting are the components left after
    deleting all cut-edges; if ``classes`` is given each is classified into it.
    """
    chosen: list[int] = []
    work = [(S, find_cut_edges(S.graph) if cuts is None else cuts)]
    while work:
        piece, cuts = work.pop()
        G = piece.graph
        if cuts:
            e = cuts[0]
            sides = _split(piece, e)
            if len(sides) != 2:
                raise ExtractionError("cut-edge did not split the component in two")
            d = one_deficit(G)
            ds = [one_deficit(s.graph) for s in sides]
            # a bridge of the piece stays a bridge of whichever side holds it
            rest = {piece.edge_map[f] for f in cuts[1:]}
            side_cuts = [[i for i, f in enumerate(s.edge_map) if f in rest] for s in sides]
            cs = [len(x) for x in side_cuts]
            if d != ds[0] + ds[1] - 2 or len(cuts) != cs[0] + cs[1] + 1:
                raise ExtractionError(
                    f"certificate arithmetic failed at split on edge {piece.edge_map[e]}: "
                    f"d={d}, sides d={ds}; c={len(cuts)}, sides c={cs}"
                )
            work.extend(reversed(list(zip(sides, side_cuts))))
            continue
        if classes is not None:
            classes.append((piece.vertex_map, _classify_piece(G)))
        local = _bridgeless_piece(G)
        omitted = G.n - len({v for f in local for v in G.edges[f]})
        if omitted > bound_omitted(G.n, G.m, 0):
            raise ExtractionError(f"bridgeless piece omits {omitted} > bound")
        chosen.extend(piece.edge_map[f] for f in local)
    return chosen


def _classify_piece(P: Multigraph) -> str:
    if P.n == 1:
        return SINGLE_VERTEX
    if all(k == 2 for k in P.degrees()):
        return TWO_REGULAR
    if is_balloon(P):
        return BALLOON
    if one_deficit(P) == 3 and not find_cut_edges(P) and _augmented_perfect_matching(P) is None:
        return G_FAMILY
    return NON_EXTREMAL


def component_classes(G: Multigraph) -> list[tuple[tuple[int, ...], str]]:
    """Class of every component of ``G`` after deleting its cut-edges."""
    return [(piece.vertex_map, _classify_piece(piece.graph)) for piece in post_cut_pieces(G)]


def _exact_equality(d: int, c: int, achieved_omitted: int) -> bool:
    k = d + c - 1
    return k >= 0 and k % 2 == 0 and achieved_omitted == k // 2


def classify_equality(G: Multigraph, cert: BoundCertificate) -> BoundCertificate:
    """Fill in the per-component classes and the exact-equality flag."""
    if len(connected_components(G)) > 1:
        raise ValueError("classify_equality expects a connected graph; apply it per component")
    return replace(
        cert,
        component_classes=tuple(component_classes(G)),
        equality=_exact_equality(cert.d, cert.c, cert.achieved_omitted),
    )


def extract(G: Multigraph) -> tuple[TwoRegularSubgraph, BoundCertificate]:
    """A 2-regular subgraph omitting at most ``max(0, floor((d + c - 1) / 2))`` vertices."""
    check_subcubic(G)
    chosen: list[int] = []
    classes: list[tuple[tuple[int, ...], str]] = []
    all_cuts = find_cut_edges(G)
    cut_set = set(all_cuts)
    for comp in connected_components(G):
        sub = induced_subgraph(G, comp)
        local_cuts = [i for i, e in enumerate(sub.edge_map) if e in cut_set]
        chosen.extend(_extract_connected(sub, local_cuts, classes))
    classes.sort(key=lambda item: item[0][0])
    H = cycles_from_edges(G, chosen)
    problems = validate_two_regular(G, H)
    if problems:
        raise ExtractionError("; ".join(problems))

    c = len(all_cuts)
    d = one_deficit(G)
    bound = bound_omitted(G.n, G.m, c)
    achieved = G.n - len(H)
    if achieved > bound:
        raise ExtractionError(f"omitted {achieved} vertices, bound is {bound}")
    cert = BoundCertificate(
        n=G.n,
        m=G.m,
        c=c,
        d=d,
        bound_omitted=bound,
        achieved_omitted=achieved,
        bound_attained=achieved == bound,
        equality=_exact_equality(d, c, achieved),
        component_classes=tuple(classes),
    )
    log.debug("extract: %s", cert)
    return H, cert
