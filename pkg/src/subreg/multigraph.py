"""Multigraph data model and the ``.mg`` text exchange format.

Vertices are dense indices ``0..n-1``. Edges are stored as an ordered tuple of
endpoint pairs and identified by their position in that tuple. A loop is an
edge ``(v, v)`` and contributes 2 to the degree of ``v``; parallel edges are
simply repeated pairs.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field


class MultigraphFormatError(ValueError):
    """Raised when ``.mg`` text cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    _incidence: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {eid} = ({u}, {v}) has an endpoint outside [0, {self.n})")
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_incidence", tuple(tuple(x) for x in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge identifiers incident to ``v`` in increasing order (a loop once)."""
        return self._incidence[v]

    def other(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if u == v else u

    def is_loop(self, eid: int) -> bool:
        u, v = self.edges[eid]
        return u == v

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return sum(2 if self.is_loop(e) else 1 for e in self._incidence[v])

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        """Neighbour multiset of ``v`` (loops excluded), in edge order."""
        return [self.other(e, v) for e in self._incidence[v] if not self.is_loop(e)]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees())

    def __str__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def degree(G: Multigraph, v: int) -> int:
    return G.degree(v)


def check_subcubic(G: Multigraph) -> None:
    for v, d in enumerate(G.degrees()):
        if d > 3:
            raise ValueError(f"vertex {v} has degree {d} > 3; graph is not subcubic")


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MultigraphFormatError(f"expected two integers, got {line!r}", lineno)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise MultigraphFormatError(f"expected two integers, got {line!r}", lineno) from None
    if a < 0 or b < 0:
        raise MultigraphFormatError(f"negative value in {line!r}", lineno)
    return a, b


def parse_multigraph(text: str | bytes) -> Multigraph:
    """Parse ``.mg`` text: a header ``n m`` followed by exactly ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored anywhere.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MultigraphFormatError("missing header line 'n m'") from None
    n, m = _parse_pair(header, lineno)
    edges = []
    for lineno, line in lines:
        u, v = _parse_pair(line, lineno)
        if len(edges) == m:
            raise MultigraphFormatError(f"header declares {m} edges but more lines follow", lineno)
        if u >= n or v >= n:
            raise MultigraphFormatError(f"endpoint out of range [0, {n}) in {line!r}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise MultigraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def serialize_multigraph(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_mg(path) -> Multigraph:
    with open(path, "rb") as fh:
        return parse_multigraph(fh.read())


def write_mg(G: Multigraph, path, comment: str | None = None) -> None:
    text = serialize_multigraph(G)
    if comment:
        text = "".join(f"# {c}\n" for c in comment.splitlines()) + text
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def delete_edges(G: Multigraph, F: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Remove the edges ``F``; returns the new graph and the old->new id map."""
    drop = set(F)
    for e in drop:
        if not 0 <= e < G.m:
            raise KeyError(f"unknown edge identifier {e}")
    remap: dict[int, int] = {}
    kept = []
    for eid, uv in enumerate(G.edges):
        if eid not in drop:
            remap[eid] = len(kept)
            kept.append(uv)
    return Multigraph(G.n, tuple(kept)), remap


@dataclass(frozen=True)
class Subgraph:
    """A graph cut out of a parent graph, with maps back to parent indices."""

    graph: Multigraph
    vertex_map: tuple[int, ...]  # local vertex -> parent vertex
    edge_map: tuple[int, ...]  # local edge -> parent edge


def induced_subgraph(
    G: Multigraph, vertices: Iterable[int], edges: Iterable[int] | None = None
) -> Subgraph:
    """Subgraph on ``vertices`` (sorted) keeping the given edges, or all induced ones.

    Local identifiers preserve the parent order, so "smallest identifier"
    tie-breaks agree between parent and child.
    """
    vs = sorted(set(vertices))
    local = {v: i for i, v in enumerate(vs)}
    if edges is None:
        eids = [e for e, (u, v) in enumerate(G.edges) if u in local and v in local]
    else:
        eids = sorted(set(edges))
        for e in eids:
            u, v = G.edges[e]
            if u not in local or v not in local:
                raise ValueError(f"edge {e} leaves the vertex set")
    sub = Multigraph(len(vs), tuple((local[G.edges[e][0]], local[G.edges[e][1]]) for e in eids))
    return Subgraph(sub, tuple(vs), tuple(eids))


def connected_components(G: Multigraph, skip_edges: Iterable[int] = ()) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest member."""
    skip = set(skip_edges)
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for e in G.incident(v):
                if e in skip:
                    continue
                w = G.other(e, v)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Multigraph) -> bool:
    return len(connected_components(G)) <= 1


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return Multigraph(offset, tuple(edges))
