"""``subreg`` command line: analyze, bound, extract, generate, verify, casestudy.

Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys

from .casestudy import badgraph_case_study
from .dot import to_dot
from .extract import BoundCertificate, ExtractionError, bound_omitted, extract
from .families import (
    NAMED_GRAPHS,
    STORED_GIRTHS,
    ConstructionError,
    Explosion,
    GFamilySpec,
    build_G_family,
    build_tree_with_balloons,
    smallest_balloon,
)
from .matching import LemmaViolation, gallai_edmonds
from .multigraph import Multigraph, MultigraphFormatError, connected_components, read_mg, serialize_multigraph
from .oracle import (
    ENUMERATION_LIMIT,
    ORACLE_SIZE_LIMIT,
    check_theorem,
    enumerate_subcubic,
    random_subcubic_multigraph,
)
from .structure import analyze_structure, girth

DEFAULT_SEED = 20190520
EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("subreg")


class UsageError(Exception):
    pass


def certificate_text(cert: BoundCertificate) -> str:
    lines = [
        f"n: {cert.n}",
        f"m: {cert.m}",
        f"c: {cert.c}",
        f"d: {cert.d}",
        f"bound: {cert.bound_omitted}",
        f"achieved: {cert.achieved_omitted}",
        f"equality: {str(cert.equality).lower()}",
        f"classes: {','.join(cert.classes)}",
    ]
    return "\n".join(lines) + "\n"


def _load_graph(spec: str) -> Multigraph:
    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]()
    return read_mg(spec)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _fmt_girth(g) -> str:
    return "inf" if g == float("inf") else str(g)


def cmd_analyze(args) -> int:
    G = read_mg(args.file)
    rep = analyze_structure(G)
    print(f"n: {rep.n}")
    print(f"m: {rep.m}")
    print(f"c: {rep.c}")
    print(f"d: {rep.d}")
    print(f"girth: {_fmt_girth(girth(G))}")
    print(f"components: {len(connected_components(G))}")
    print(f"cut-edges: {' '.join(map(str, rep.cut_edges)) or '-'}")
    for comp, flag in zip(rep.two_edge_connected_components, rep.balloon_flags):
        tag = "balloon" if flag else "-"
        print(f"piece {' '.join(map(str, comp))}: {tag}")
    ge = gallai_edmonds(G)
    print(f"gallai-edmonds A: {' '.join(map(str, ge.A)) or '-'}")
    print(f"gallai-edmonds C: {' '.join(map(str, ge.C)) or '-'}")
    print(f"gallai-edmonds D: {' '.join(map(str, ge.D)) or '-'}")
    print(f"deficiency: {ge.deficiency}")
    return EXIT_OK


def cmd_bound(args) -> int:
    G = read_mg(args.file)
    rep = analyze_structure(G)
    b = bound_omitted(G.n, G.m, rep.c)
    print(f"n={rep.n} m={rep.m} c={rep.c} d={rep.d}")
    print(f"bound {b}")
    print(f"f2 >= {G.n - b}")
    return EXIT_OK


def cmd_extract(args) -> int:
    G = read_mg(args.file)
    try:
        H, cert = extract(G)
    except (ExtractionError, LemmaViolation) as exc:
        print(f"extraction check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    print(f"omitted {cert.achieved_omitted} / bound {cert.bound_omitted}")
    print(f"covered {len(H)} of {G.n} vertices in {len(H.cycles)} cycles")
    for cyc in H.cycles:
        print("cycle " + " ".join(map(str, cyc)))
    print(f"equality: {str(cert.equality).lower()}")
    print(f"classes: {','.join(cert.classes)}")
    if args.dot:
        _write(to_dot(G, H), args.dot)
    if args.cert:
        _write(certificate_text(cert), args.cert)
    return EXIT_OK


def _parse_explosion(text: str) -> tuple[int, Explosion]:
    # y=F:z where F is a named graph or a .mg path
    try:
        y_text, rest = text.split("=", 1)
        f_text, z_text = rest.rsplit(":", 1) if ":" in rest else (rest, "0")
        y, z = int(y_text), int(z_text)
    except ValueError:
        raise UsageError(f"bad --explode value {text!r}; expected y=F:z") from None
    return y, Explosion(_load_graph(f_text), z)


def cmd_generate(args) -> int:
    if args.family == "balloon":
        G = smallest_balloon(args.girth)
        note = f"smallest balloon of girth {args.girth}"
    elif args.family == "tree":
        G = build_tree_with_balloons(args.internal, args.girth)
        note = f"cubic tree with {args.internal} internal vertices, girth-{args.girth} balloons at the leaves"
    else:
        H = _load_graph(args.base)
        explosions = dict(_parse_explosion(x) for x in args.explode)
        member = build_G_family(GFamilySpec(H, args.yhat, explosions))
        G = member.graph
        note = f"extremal d=3 member from base {args.base}, y_hat={args.yhat}, X={list(member.X)}"
    text = serialize_multigraph(G)
    if args.comment:
        text = f"# {note}\n" + text
    _write(text, args.output)
    return EXIT_OK


def _report_failure(rep) -> None:
    sys.stdout.write(rep.counterexample())


def cmd_verify(args) -> int:
    if args.file is None and args.enumerate is None and not args.random:
        raise UsageError("verify needs a file, --enumerate N or --random K")
    failures = 0
    checked = 0
    if args.file is not None:
        G = read_mg(args.file)
        rep = check_theorem(G, use_oracle=args.oracle, oracle_limit=None if args.force else ORACLE_SIZE_LIMIT)
        checked += 1
        if rep.passed:
            cert = rep.certificate
            line = f"ok: omitted {cert.achieved_omitted} / bound {cert.bound_omitted}"
            if rep.oracle is not None:
                line += f"; oracle f2 = {rep.oracle.f2_exact}"
            print(line)
        else:
            failures += 1
            _report_failure(rep)
    if args.enumerate is not None:
        if not 0 <= args.enumerate <= ENUMERATION_LIMIT:
            raise UsageError(f"--enumerate must be in 0..{ENUMERATION_LIMIT}")
        for n in range(1, args.enumerate + 1):
            count = 0
            for G in enumerate_subcubic(n, connected=True, loops=not args.no_loops,
                                        max_multiplicity=args.max_multiplicity):
                rep = check_theorem(G, use_oracle=True)
                count += 1
                if not rep.passed:
                    failures += 1
                    _report_failure(rep)
            checked += count
            print(f"n={n}: {count} connected graphs checked")
    if args.random:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            n = rng.randint(1, args.max_n)
            G = random_subcubic_multigraph(n, rng, edge_prob=rng.uniform(0.3, 1.0))
            rep = check_theorem(G, use_oracle=n <= ORACLE_SIZE_LIMIT)
            checked += 1
            if not rep.passed:
                failures += 1
                _report_failure(rep)
        print(f"random: {args.random} graphs checked (seed {args.seed})")
    print(f"{checked} checked, {failures} failed")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def cmd_casestudy(args) -> int:
    study = badgraph_case_study()
    print("\n".join(study.lines()))
    return EXIT_OK if study.passed else EXIT_CHECK_FAILED


def _default_seed() -> int:
    env = os.environ.get("SUBREG_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"SUBREG_SEED must be an integer, got {env!r}") from None


def build_parser(default_seed: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subreg", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=default_seed,
                   help="seed for randomized checks (default %(default)s, or $SUBREG_SEED)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="structural report: n, m, c, d, girth, balloons, Gallai-Edmonds")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bound", help="the guaranteed number of omitted vertices")
    b.add_argument("file")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("extract", help="construct a large 2-regular subgraph")
    e.add_argument("file")
    e.add_argument("--dot", metavar="FILE", help="write a DOT drawing of the result")
    e.add_argument("--cert", metavar="FILE", help="write the certificate as key: value lines")
    e.set_defaults(func=cmd_extract)

    g = sub.add_parser("generate", help="write an extremal graph in .mg format")
    g.add_argument("-o", "--output", metavar="FILE")
    g.add_argument("--comment", action="store_true", help="prepend a '#' line describing the graph")
    gsub = g.add_subparsers(dest="family", required=True)
    gb = gsub.add_parser("balloon")
    gb.add_argument("--girth", type=int, required=True, choices=STORED_GIRTHS)
    gt = gsub.add_parser("tree")
    gt.add_argument("--internal", type=int, required=True)
    gt.add_argument("--girth", type=int, default=3, choices=STORED_GIRTHS)
    gg = gsub.add_parser("gfamily")
    gg.add_argument("--base", required=True, help="k33, q3, another named graph, or a .mg file")
    gg.add_argument("--yhat", type=int, default=None,
                    help="vertex of the base to delete (default: last vertex)")
    gg.add_argument("--explode", action="append", default=[], metavar="y=F:z",
                    help="explode y with graph F (named or .mg file) at its vertex z")
    for q in (gb, gt, gg):
        q.add_argument("-o", "--output", metavar="FILE", default=argparse.SUPPRESS)
        q.add_argument("--comment", action="store_true", default=argparse.SUPPRESS)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check the bound on a file, exhaustively, or on random graphs")
    v.add_argument("file", nargs="?")
    v.add_argument("--oracle", action="store_true", help="also run the exhaustive f2 oracle")
    v.add_argument("--force", action="store_true", help="lift the oracle size limit")
    v.add_argument("--enumerate", type=int, metavar="N",
                   help="check every connected subcubic multigraph with 1..N vertices")
    v.add_argument("--no-loops", action="store_true")
    v.add_argument("--max-multiplicity", type=int, default=3, choices=(1, 2, 3))
    v.add_argument("--random", type=int, default=0, metavar="K", help="check K seeded random graphs")
    v.add_argument("--max-n", type=int, default=14)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("casestudy", help="reproduce a documented example")
    c.add_argument("name", choices=("badgraph",))
    c.set_defaults(func=cmd_casestudy)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_seed())
    except UsageError as exc:
        print(f"subreg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "family", None) == "gfamily" and args.yhat is None:
        args.yhat = _load_graph(args.base).n - 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"subreg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, MultigraphFormatError, ConstructionError, ValueError) as exc:
        print(f"subreg: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
