"""Graphviz DOT rendering of a graph and an extracted 2-regular subgraph."""

from __future__ import annotations

from .extract import TwoRegularSubgraph
from .multigraph import Multigraph

PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "teal")
STYLES = ("bold", "bold", "bold", "bold", "dashed", "dashed", "dashed", "dashed")


def to_dot(G: Multigraph, H: TwoRegularSubgraph | None = None, name: str = "G") -> str:
    """Each cycle of ``H`` gets its own colour/style; omitted vertices are greyed out."""
    cycle_of = {}
    if H is not None:
        for idx, cyc in enumerate(H.cycles):
            for e in cyc:
                cycle_of[e] = idx
    covered = set(H.covered) if H is not None else set(range(G.n))
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(G.n):
        if v in covered:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [color=gray, fontcolor=gray, style=dashed];')
    for e, (u, v) in enumerate(G.edges):
        if e in cycle_of:
            k = cycle_of[e] % len(PALETTE)
            attrs = f'color={PALETTE[k]}, style={STYLES[k]}, penwidth=2, label="c{cycle_of[e]}"'
        else:
            attrs = "color=gray"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
