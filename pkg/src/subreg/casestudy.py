"""Scripted check of the graph showing that a simple bipartite base and
factor-critical pieces cannot always be had at the same time."""

from __future__ import annotations

from dataclasses import dataclass, field

from .extract import augment_with_balloons, extract
from .families import badgraph
from .matching import (
    components_after_removing,
    gallai_edmonds,
    is_factor_critical,
    is_tutte_set,
    neighbors_in_distinct_components,
    odd_component_count,
    tutte_set,
)
from .multigraph import induced_subgraph
from .oracle import brute_force_f2, has_two_factor


@dataclass
class Claim:
    text: str
    holds: bool
    detail: str = ""


@dataclass
class CaseStudy:
    name: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.claims)

    def add(self, text: str, holds: bool, detail: str = "") -> None:
        self.claims.append(Claim(text, bool(holds), detail))

    def lines(self) -> list[str]:
        out = [f"case study: {self.name}"]
        for c in self.claims:
            mark = "ok  " if c.holds else "FAIL"
            out.append(f"  [{mark}] {c.text}" + (f"  ({c.detail})" if c.detail else ""))
        out.append("all claims hold" if self.passed else "some claims FAILED")
        return out


def _pieces_factor_critical(G, S) -> bool:
    return all(is_factor_critical(induced_subgraph(G, comp).graph)
               for comp in components_after_removing(G, S))


def _base_is_simple(G, S) -> bool:
    """Whether the bipartite graph between ``S`` and the components of
    ``G - S`` has no repeated edge (the hidden vertex adds none)."""
    where = {}
    for idx, comp in enumerate(components_after_removing(G, S)):
        for v in comp:
            where[v] = idx
    for s in S:
        targets = [where[G.other(e, s)] for e in G.incident(s) if G.other(e, s) in where]
        if len(targets) != len(set(targets)):
            return False
    return True


def badgraph_case_study() -> CaseStudy:
    bg = badgraph()
    G = bg.graph
    X = list(bg.X)
    X_minus = [v for v in X if v != bg.x]
    study = CaseStudy("badgraph")

    degs = G.degrees()
    study.add("G has 1-deficit 3 and no cut-edge",
              3 * G.n - 2 * G.m == 3 and not extract(G)[1].c,
              f"n={G.n}, m={G.m}")
    study.add("the 2-vertices of G are exactly the three vertices of X other than x",
              sorted(v for v in range(G.n) if degs[v] == 2) == X_minus)
    oracle = brute_force_f2(G)
    study.add("G has no 2-factor", not has_two_factor(G))
    study.add("f2(G) = n - 1", oracle.f2_exact == G.n - 1, f"f2={oracle.f2_exact}")
    H, cert = extract(G)
    study.add("extract covers n - 1 vertices", len(H) == G.n - 1, f"classes={cert.classes}")

    aug, _ = augment_with_balloons(G)
    for label, S in (("X", X), ("X - {x}", X_minus)):
        o = odd_component_count(aug, S)
        study.add(f"{label} is a Tutte set of the augmented graph",
                  is_tutte_set(aug, S), f"|S|={len(S)}, o(G'-S)={o}")

    ge = gallai_edmonds(aug)
    study.add("every maximum matching of the augmented graph covers X",
              set(X) <= set(ge.A) | set(ge.C), f"A={list(ge.A)}")
    study.add("with S = X the pieces of G - X are factor-critical",
              _pieces_factor_critical(G, X))
    study.add("with S = X the bipartite base is not simple (doubled edge xy)",
              not _base_is_simple(G, X))
    study.add("with S = X - {x} the bipartite base is simple",
              _base_is_simple(G, X_minus))
    study.add("with S = X - {x} some piece of G - S is not factor-critical",
              not _pieces_factor_critical(G, X_minus))
    minimal = tutte_set(aug, minimal=True)
    study.add("the minimal Tutte set is X - {x}",
              minimal is not None and sorted(minimal.S) == X_minus,
              f"S={list(minimal.S) if minimal else None}")
    study.add("members of the minimal Tutte set see distinct components",
              minimal is not None and neighbors_in_distinct_components(aug, minimal.S))
    return study
