"""Exhaustive ground truth at desk scale.

Everything here is deliberately naive: exact f2 by backtracking over edges,
a second f2 oracle over vertex subsets, labeled enumeration of small subcubic
multigraphs, brute-force matching counts, and seeded random generators.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass, field

from .extract import (
    EXTREMAL_CLASSES,
    BoundCertificate,
    ExtractionError,
    TwoRegularSubgraph,
    bound_omitted,
    cycles_from_edges,
    extract,
    validate_two_regular,
)
from .matching import LemmaViolation, MatchingCertificateError
from .multigraph import Multigraph, check_subcubic, connected_components, serialize_multigraph
from .structure import find_cut_edges, is_bridgeless, one_deficit

ORACLE_SIZE_LIMIT = 16
ENUMERATION_LIMIT = 8


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    f2_exact: int
    witness: TwoRegularSubgraph
    bound: int
    bound_holds: bool
    equality_exact: bool


def _max_two_regular_edges(G: Multigraph) -> list[int]:
    """Lexicographically smallest edge set of maximum size with all degrees in {0, 2}.

    Edges are decided in identifier order, include before exclude. A vertex
    fails when its degree passes 2, or it has degree 1 with too few undecided
    edges left. The upper bound counts vertices at degree 2 plus those that
    can still reach 2.
    """
    n, m = G.n, G.m
    ends = [G.edges[e] for e in range(m)]
    # a loop adds 2 to one vertex
    remaining = [0] * n
    for u, v in ends:
        remaining[u] += 1 if u != v else 2
        if u != v:
            remaining[v] += 1
    deg = [0] * n
    chosen: list[int] = []
    best: list[int] = []
    best_size = -1

    def upper_bound() -> int:
        total = 0
        for v in range(n):
            if deg[v] == 2 or (deg[v] < 2 and deg[v] + remaining[v] >= 2):
                total += 1
        return total

    def rec(i: int) -> None:
        nonlocal best, best_size
        if upper_bound() <= best_size:
            return
        if i == m:
            size = sum(1 for k in deg if k == 2)
            if size > best_size:
                best_size, best = size, list(chosen)
            return
        u, v = ends[i]
        loop = u == v
        # include
        if (loop and deg[u] == 0) or (not loop and deg[u] < 2 and deg[v] < 2):
            if loop:
                deg[u] += 2
                remaining[u] -= 2
            else:
                deg[u] += 1
                deg[v] += 1
                remaining[u] -= 1
                remaining[v] -= 1
            chosen.append(i)
            if _still_feasible(u, v):
                rec(i + 1)
            chosen.pop()
            if loop:
                deg[u] -= 2
                remaining[u] += 2
            else:
                deg[u] -= 1
                deg[v] -= 1
                remaining[u] += 1
                remaining[v] += 1
        # exclude
        if loop:
            remaining[u] -= 2
        else:
            remaining[u] -= 1
            remaining[v] -= 1
        if _still_feasible(u, v):
            rec(i + 1)
        if loop:
            remaining[u] += 2
        else:
            remaining[u] += 1
            remaining[v] += 1

    def _still_feasible(u: int, v: int) -> bool:
        for x in (u, v):
            if deg[x] == 1 and remaining[x] == 0:
                return False
        return True

    rec(0)
    return best


def brute_force_f2(G: Multigraph, limit: int | None = ORACLE_SIZE_LIMIT) -> OracleReport:
    """Exact f2 by exhaustive search; ``limit=None`` lifts the size guard."""
    if limit is not None and G.n > limit:
        raise OracleLimitError(f"n={G.n} exceeds the oracle limit {limit}; pass limit=None to force")
    check_subcubic(G)
    witness = cycles_from_edges(G, _max_two_regular_edges(G))
    f2 = len(witness)
    c = len(find_cut_edges(G))
    d = one_deficit(G)
    bound = bound_omitted(G.n, G.m, c)
    k = d + c - 1
    return OracleReport(
        f2_exact=f2,
        witness=witness,
        bound=bound,
        bound_holds=G.n - f2 <= bound,
        equality_exact=k >= 0 and k % 2 == 0 and G.n - f2 == k // 2,
    )


def _has_two_factor_on(G: Multigraph, verts: frozenset[int]) -> bool:
    """Whether the subgraph induced on ``verts`` has a spanning 2-regular subgraph."""
    eids = [e for e, (u, v) in enumerate(G.edges) if u in verts and v in verts]
    deg = dict.fromkeys(verts, 0)

    def rec(i: int) -> bool:
        if i == len(eids):
            return all(k == 2 for k in deg.values())
        u, v = G.edges[eids[i]]
        add = 2 if u == v else 1
        if deg[u] + add <= 2 and deg[v] + add <= 2:
            deg[u] += add
            if u != v:
                deg[v] += add
            if rec(i + 1):
                return True
            deg[u] -= add
            if u != v:
                deg[v] -= add
        return rec(i + 1)

    return rec(0)


def f2_by_vertex_subsets(G: Multigraph, limit: int = 10) -> int:
    """Second, independent f2 oracle: largest vertex subset whose induced
    subgraph has a 2-factor."""
    if G.n > limit:
        raise OracleLimitError(f"n={G.n} exceeds {limit}")
    for size in range(G.n, 0, -1):
        for verts in itertools.combinations(range(G.n), size):
            if _has_two_factor_on(G, frozenset(verts)):
                return size
    return 0


def has_two_factor(G: Multigraph) -> bool:
    return _has_two_factor_on(G, frozenset(range(G.n)))


# -- brute-force matching oracles ---------------------------------------------


def all_perfect_matchings(G: Multigraph) -> Iterator[list[int]]:
    """Every perfect matching as a sorted edge-id list (parallel edges distinct)."""
    used = [False] * G.n
    chosen: list[int] = []

    def rec() -> Iterator[list[int]]:
        try:
            v = used.index(False)
        except ValueError:
            yield sorted(chosen)
            return
        used[v] = True
        for e in G.incident(v):
            w = G.other(e, v)
            if w == v or used[w]:
                continue
            used[w] = True
            chosen.append(e)
            yield from rec()
            chosen.pop()
            used[w] = False
        used[v] = False

    if G.n % 2 == 0:
        yield from rec()


def brute_matching_number(G: Multigraph, excluded=()) -> int:
    """Maximum matching size by exhaustive recursion over vertices."""
    alive = [v not in set(excluded) for v in range(G.n)]

    def rec(start: int) -> int:
        v = start
        while v < G.n and not alive[v]:
            v += 1
        if v >= G.n:
            return 0
        alive[v] = False
        best = rec(v + 1)  # v stays unmatched
        for e in G.incident(v):
            w = G.other(e, v)
            if w != v and alive[w]:
                alive[w] = False
                best = max(best, 1 + rec(v + 1))
                alive[w] = True
        alive[v] = True
        return best

    return rec(0)


# -- enumeration and random graphs ---------------------------------------------


def enumerate_subcubic(
    n: int,
    *,
    connected: bool = False,
    loops: bool = True,
    max_multiplicity: int = 3,
) -> Iterator[Multigraph]:
    """Every subcubic multigraph on labeled vertices ``0..n-1``, exactly once.

    Slots are the loops ``(i, i)`` (multiplicity at most 1) and pairs
    ``(i, j)``, ``i < j`` (multiplicity up to ``max_multiplicity``), decided in
    lexicographic order with multiplicity counting upward.
    """
    if n > ENUMERATION_LIMIT:
        raise OracleLimitError(f"enumeration limited to n <= {ENUMERATION_LIMIT}")
    if not 0 <= max_multiplicity <= 3:
        raise ValueError("max_multiplicity must be in 0..3")
    slots = []
    for i in range(n):
        if loops:
            slots.append((i, i))
        for j in range(i + 1, n):
            slots.append((i, j))
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec(k: int) -> Iterator[Multigraph]:
        if k == len(slots):
            G = Multigraph(n, tuple(edges))
            if not connected or len(connected_components(G)) <= 1:
                yield G
            return
        i, j = slots[k]
        # once the slots of vertex i are past, its degree is final; prune
        # disconnected branches cheaply only at the end
        cap = 1 if i == j else max_multiplicity
        for mult in range(cap + 1):
            add = 2 * mult if i == j else mult
            if deg[i] + (add if i == j else mult) > 3 or (i != j and deg[j] + mult > 3):
                break
            if i == j:
                deg[i] += add
            else:
                deg[i] += mult
                deg[j] += mult
            edges.extend([(i, j)] * mult)
            yield from rec(k + 1)
            del edges[len(edges) - mult:]
            if i == j:
                deg[i] -= add
            else:
                deg[i] -= mult
                deg[j] -= mult

    yield from rec(0)


def random_cubic_multigraph(
    n: int, rng: random.Random, *, bridgeless: bool = True, loops: bool = False, tries: int = 10_000
) -> Multigraph:
    """Random connected cubic multigraph by stub pairing, rejecting until the
    requested properties hold."""
    if n % 2 or n < 2:
        raise ValueError("cubic multigraphs need an even, positive number of vertices")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = tuple((stubs[k], stubs[k + 1]) for k in range(0, len(stubs), 2))
        G = Multigraph(n, edges)
        if not loops and any(u == v for u, v in edges):
            continue
        if len(connected_components(G)) != 1:
            continue
        if bridgeless and not is_bridgeless(G):
            continue
        return G
    raise RuntimeError("rejection sampling did not produce a graph")


def random_subcubic_multigraph(n: int, rng: random.Random, *, edge_prob: float = 0.6) -> Multigraph:
    """Random subcubic multigraph: stub pairing, then drop each edge with
    probability ``1 - edge_prob`` and any edge that would break the degree cap."""
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    deg = [0] * n
    edges = []
    for k in range(0, len(stubs) - 1, 2):
        u, v = stubs[k], stubs[k + 1]
        if rng.random() >= edge_prob:
            continue
        add_u = 2 if u == v else 1
        if deg[u] + add_u > 3 or (u != v and deg[v] + 1 > 3):
            continue
        deg[u] += add_u
        if u != v:
            deg[v] += 1
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


# -- end-to-end theorem check ---------------------------------------------------


@dataclass
class TheoremReport:
    graph: Multigraph
    passed: bool = True
    failures: list[str] = field(default_factory=list)
    certificate: BoundCertificate | None = None
    extracted: TwoRegularSubgraph | None = None
    oracle: OracleReport | None = None

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def counterexample(self) -> str:
        lines = ["# counterexample", *(f"# {f}" for f in self.failures)]
        if self.certificate is not None:
            lines.append(f"# certificate: {self.certificate}")
        if self.extracted is not None:
            lines.append(f"# extracted cycles: {self.extracted.cycles}")
        if self.oracle is not None:
            lines.append(f"# oracle witness: {self.oracle.witness.cycles}")
        return "\n".join(lines) + "\n" + serialize_multigraph(self.graph)


def check_theorem(
    G: Multigraph, *, use_oracle: bool = True, oracle_limit: int | None = ORACLE_SIZE_LIMIT
) -> TheoremReport:
    """Run ``extract`` and (within limits) the oracle; collect any violation."""
    report = TheoremReport(G)
    try:
        check_subcubic(G)
    except ValueError as exc:
        report.fail(str(exc))
        return report
    try:
        H, cert = extract(G)
    except (ExtractionError, LemmaViolation, MatchingCertificateError) as exc:
        report.fail(f"{type(exc).__name__}: {exc}")
        return report
    report.extracted, report.certificate = H, cert
    problems = validate_two_regular(G, H)
    for p in problems:
        report.fail(f"invalid subgraph: {p}")
    if cert.achieved_omitted > cert.bound_omitted:
        report.fail(f"extract omitted {cert.achieved_omitted} > bound {cert.bound_omitted}")
    connected = len(connected_components(G)) <= 1
    if connected and G.n > 0:
        all_extremal = all(cls in EXTREMAL_CLASSES for cls in cert.classes)
        if cert.equality != all_extremal:
            report.fail(
                f"equality={cert.equality} but component classes are {cert.classes}"
            )
    if use_oracle and (oracle_limit is None or G.n <= oracle_limit):
        rep = brute_force_f2(G, limit=None)
        report.oracle = rep
        if not rep.bound_holds:
            report.fail(f"oracle f2={rep.f2_exact} violates bound {rep.bound}")
        if len(H) > rep.f2_exact:
            report.fail(f"extract covers {len(H)} > oracle f2 {rep.f2_exact}")
        if connected and G.n > 0 and rep.equality_exact != cert.equality:
            report.fail(
                f"oracle exact equality {rep.equality_exact} disagrees with extract {cert.equality}"
            )
    return report
