"""Matching machinery: maximum matchings, exact min-weight perfect matchings,
forbidden-edge perfect matchings, Gallai-Edmonds decomposition and Tutte sets.

Matchings are returned as sorted lists of edge identifiers. Loops never
belong to a matching. Among parallel edges the smallest identifier is used.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .multigraph import Multigraph, connected_components
from .structure import is_bridgeless


class LemmaViolation(RuntimeError):
    """A 2-edge-connected cubic graph of even order had no perfect matching
    avoiding two given edges. This must never happen."""


class MatchingCertificateError(RuntimeError):
    """Internal optimality certificate failed."""


# -- unweighted maximum matching (Edmonds' blossom algorithm) ----------------


def _simple_adjacency(G: Multigraph, excluded: frozenset[int] = frozenset()):
    """Neighbour lists without loops/parallel copies, plus the pair -> edge map."""
    adj: list[list[int]] = [[] for _ in range(G.n)]
    pair_edge: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(G.edges):
        if u == v or u in excluded or v in excluded:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in pair_edge:
            pair_edge[key] = eid
            adj[u].append(v)
            adj[v].append(u)
    return adj, pair_edge


def _find_augmenting(root: int, adj, mate: list[int]) -> bool:
    """Grow an alternating tree from ``root``; augment ``mate`` in place if possible."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    u = to
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def _mate_array(G: Multigraph, excluded: frozenset[int] = frozenset()):
    adj, pair_edge = _simple_adjacency(G, excluded)
    mate = [-1] * G.n
    for v in range(G.n):
        if v in excluded or mate[v] != -1:
            continue
        for w in adj[v]:
            if mate[w] == -1:
                mate[v], mate[w] = w, v
                break
    for v in range(G.n):
        if v not in excluded and mate[v] == -1 and adj[v]:
            _find_augmenting(v, adj, mate)
    return mate, adj, pair_edge


def _mate_to_edges(mate: Sequence[int], pair_edge: Mapping[tuple[int, int], int]) -> list[int]:
    return sorted(pair_edge[(u, w)] for u, w in enumerate(mate) if w > u)


def matching_number(G: Multigraph, excluded: Iterable[int] = ()) -> int:
    """Size of a maximum matching of ``G`` minus the ``excluded`` vertices."""
    mate, _, _ = _mate_array(G, frozenset(excluded))
    return sum(1 for u, w in enumerate(mate) if w > u)


def max_matching(G: Multigraph, certify: bool = False) -> list[int]:
    """Maximum-cardinality matching.

    With ``certify`` the Tutte-Berge witness from the Gallai-Edmonds
    decomposition is checked against the matching size.
    """
    mate, _, pair_edge = _mate_array(G)
    M = _mate_to_edges(mate, pair_edge)
    if certify:
        ge = gallai_edmonds(G)
        if G.n - 2 * len(M) != ge.deficiency:
            raise MatchingCertificateError("Tutte-Berge witness disagrees with matching size")
    return M


def is_matching(G: Multigraph, M: Iterable[int]) -> bool:
    seen = set()
    for e in M:
        u, v = G.edges[e]
        if u == v or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_perfect_matching(G: Multigraph, M: Iterable[int]) -> bool:
    M = list(M)
    return is_matching(G, M) and 2 * len(M) == G.n


# -- exact minimum-weight perfect matching ------------------------------------


def min_weight_perfect_matching(G: Multigraph, weights: Sequence[int]) -> list[int] | None:
    """Minimum-weight perfect matching, or ``None`` when none exists.

    Ties are broken towards the lexicographically smallest sorted edge-id
    list. The tie-break is folded into a single exact integer cost: for two
    matchings of equal size the smaller sorted id list is the one holding the
    smallest id of the symmetric difference, which is exactly the one with the
    larger sum of ``2**(m-1-id)``. Search is depth-first branch and bound,
    branching on the free vertex with the fewest options and bounding by half
    the sum of each free vertex's cheapest remaining edge.
    """
    if len(weights) != G.m:
        raise ValueError("need one weight per edge")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    n = G.n
    if n % 2:
        return None
    if n == 0:
        return []
    if 2 * matching_number(G) < n:
        return None

    m = G.m
    scale = 1 << m
    best_pair: dict[tuple[int, int], tuple[int, int]] = {}
    for eid, (u, v) in enumerate(G.edges):
        if u == v:
            continue
        cost = weights[eid] * scale + scale - (1 << (m - 1 - eid))
        key = (u, v) if u < v else (v, u)
        if key not in best_pair or cost < best_pair[key][0]:
            best_pair[key] = (cost, eid)
    options: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for (u, v), (cost, eid) in best_pair.items():
        options[u].append((cost, v, eid))
        options[v].append((cost, u, eid))
    for opts in options:
        opts.sort()

    free = [True] * n
    chosen: list[int] = []
    best_cost = None
    best_set: list[int] | None = None

    def search(cur: int, remaining: int) -> None:
        nonlocal best_cost, best_set
        if remaining == 0:
            if best_cost is None or cur < best_cost:
                best_cost, best_set = cur, list(chosen)
            return
        lower2 = 0
        pick = -1
        pick_count = n + 1
        for v in range(n):
            if not free[v]:
                continue
            count = 0
            cheapest = None
            for cost, w, _ in options[v]:
                if free[w]:
                    if cheapest is None:
                        cheapest = cost
                    count += 1
            if count == 0:
                return
            lower2 += cheapest
            if count < pick_count:
                pick, pick_count = v, count
        if best_cost is not None and 2 * cur + lower2 >= 2 * best_cost:
            return
        free[pick] = False
        for cost, w, eid in options[pick]:
            if not free[w]:
                continue
            free[w] = False
            chosen.append(eid)
            search(cur + cost, remaining - 2)
            chosen.pop()
            free[w] = True
        free[pick] = True

    search(0, n)
    return sorted(best_set) if best_set is not None else None


@dataclass(frozen=True)
class AvoidingResult:
    matching: list[int] | None
    guarantee_applies: bool  # 2-edge-connected cubic, even order, <= 2 forbidden edges

    @property
    def found(self) -> bool:
        return self.matching is not None


def perfect_matching_avoiding(G: Multigraph, forbidden: Iterable[int]) -> AvoidingResult:
    """Perfect matching disjoint from ``forbidden``.

    Solved as a min-weight perfect matching with weight 1 on forbidden edges
    and 0 elsewhere; accepted only at weight 0. Raises ``LemmaViolation`` if
    the forbidden-edge guarantee for cubic graphs applies but fails.
    """
    forbidden = set(forbidden)
    for e in forbidden:
        if not 0 <= e < G.m:
            raise KeyError(f"unknown edge identifier {e}")
    weights = [1 if e in forbidden else 0 for e in range(G.m)]
    guarantee = (
        G.n % 2 == 0
        and G.n > 0
        and len(forbidden) <= 2
        and G.is_cubic()
        and len(connected_components(G)) == 1
        and is_bridgeless(G)
    )
    M = min_weight_perfect_matching(G, weights)
    if M is not None and any(e in forbidden for e in M):
        M = None
    if M is None and guarantee:
        raise LemmaViolation(
            f"no perfect matching avoiding {sorted(forbidden)} in a 2-edge-connected cubic "
            f"graph with n={G.n}, edges={list(G.edges)}"
        )
    return AvoidingResult(M, guarantee)


# -- Gallai-Edmonds decomposition, Tutte sets, factor-criticality -------------


def components_after_removing(G: Multigraph, S: Iterable[int]) -> list[list[int]]:
    """Vertex sets of the components of ``G - S``."""
    S = set(S)
    out = []
    seen = set(S)
    for s in range(G.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for e in G.incident(v):
                w = G.other(e, v)
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def odd_component_count(G: Multigraph, S: Iterable[int]) -> int:
    return sum(1 for c in components_after_removing(G, S) if len(c) % 2)


@dataclass(frozen=True)
class GallaiEdmondsDecomposition:
    A: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]
    components_of_D: tuple[tuple[int, ...], ...]
    deficiency: int
    matching: tuple[int, ...]  # the maximum matching the decomposition was built from


def _missable_vertices(G: Multigraph) -> tuple[list[bool], list[int], list[int]]:
    """Per-vertex test nu(G - v) == nu(G).

    An exposed vertex is trivially missable. For ``v`` matched to ``u``,
    ``M - uv`` has size nu - 1 in ``G - v`` and any augmenting path for it must
    end at ``u``, so one alternating search from ``u`` decides the test.
    """
    mate, adj, pair_edge = _mate_array(G)
    missable = [False] * G.n
    for v in range(G.n):
        u = mate[v]
        if u == -1:
            missable[v] = True
            continue
        trial = list(mate)
        trial[v] = trial[u] = -1
        sub_adj = [[w for w in nbrs if w != v] if x != v else [] for x, nbrs in enumerate(adj)]
        missable[v] = _find_augmenting(u, sub_adj, trial)
    return missable, mate, _mate_to_edges(mate, pair_edge)


def gallai_edmonds(G: Multigraph) -> GallaiEdmondsDecomposition:
    missable, mate, M = _missable_vertices(G)
    D = [v for v in range(G.n) if missable[v]]
    dset = set(D)
    A = sorted({w for v in D for w in G.neighbors(v) if w not in dset})
    aset = set(A)
    C = [v for v in range(G.n) if v not in dset and v not in aset]
    comps = [tuple(c) for c in components_after_removing(G, A + C)]
    deficiency = G.n - 2 * len(M)
    odd = sum(1 for c in components_after_removing(G, A) if len(c) % 2)
    if odd - len(A) != deficiency:
        raise MatchingCertificateError(
            f"o(G-A) - |A| = {odd - len(A)} but n - 2|M| = {deficiency}"
        )
    return GallaiEdmondsDecomposition(
        A=tuple(A),
        C=tuple(C),
        D=tuple(D),
        components_of_D=tuple(comps),
        deficiency=deficiency,
        matching=tuple(M),
    )


def is_factor_critical(G: Multigraph) -> bool:
    """``G - v`` has a perfect matching for every vertex ``v``."""
    if G.n % 2 == 0:
        return False
    target = (G.n - 1) // 2
    return all(matching_number(G, excluded=(v,)) == target for v in range(G.n))


@dataclass(frozen=True)
class TutteCertificate:
    S: tuple[int, ...]
    odd_component_count: int

    @property
    def surplus(self) -> int:
        return self.odd_component_count - len(self.S)


def is_tutte_set(G: Multigraph, S: Iterable[int]) -> bool:
    S = set(S)
    return odd_component_count(G, S) >= len(S) + 2


def tutte_set(G: Multigraph, minimal: bool = False) -> TutteCertificate | None:
    """A Tutte set certifying that ``G`` has no perfect matching, or ``None`` if it has one.

    Starts from ``A`` of the Gallai-Edmonds decomposition. With ``minimal``,
    vertices are dropped (smallest first, repeated until stable) whenever that
    does not lower ``o(G - S) - |S|``.
    """
    if G.n % 2:
        raise ValueError("tutte_set expects a graph of even order")
    ge = gallai_edmonds(G)
    if ge.deficiency == 0:
        return None
    S = list(ge.A)
    surplus = odd_component_count(G, S) - len(S)
    if minimal:
        changed = True
        while changed:
            changed = False
            for x in list(S):
                trial = [s for s in S if s != x]
                t_surplus = odd_component_count(G, trial) - len(trial)
                if t_surplus >= surplus:
                    S, surplus = trial, t_surplus
                    changed = True
    return TutteCertificate(tuple(S), surplus + len(S))


def neighbors_in_distinct_components(G: Multigraph, S: Iterable[int]) -> bool:
    """Every ``x`` in ``S`` sends its edges to pairwise distinct components of ``G - S``."""
    S = set(S)
    where = {}
    for idx, comp in enumerate(components_after_removing(G, S)):
        for v in comp:
            where[v] = idx
    for x in S:
        targets = []
        for e in G.incident(x):
            w = G.other(e, x)
            if w in S:
                return False
            targets.append(where[w])
        if len(set(targets)) != len(targets):
            return False
    return True
