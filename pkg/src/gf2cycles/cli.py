"""Command-line front end: ``gf2cycles census|decompose|verify``.

Standard output carries one JSON document; progress and timings go to
standard error.  Exit status: 0 ok, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Any, Sequence

from . import cellular as cel
from . import cycles as cyc
from . import homology as hom
from . import hyper
from .graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    components,
    cycle,
    path,
    read_edge_list,
    tilde_complete,
    triod,
    wheel,
)
from .products import CellComplex, deleted_square_graph, named_cycle, square_graph


class UsageError(Exception):
    pass


_SPECS = [
    (re.compile(r"^Ktilde(\d+)$"), lambda m: tilde_complete(int(m[1]))),
    (re.compile(r"^K(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^K(\d+)$"), lambda m: complete(int(m[1]))),
    (re.compile(r"^C(\d+)$"), lambda m: cycle(int(m[1]))),
    (re.compile(r"^P(\d+)$"), lambda m: path(int(m[1]))),
    (re.compile(r"^W(\d+)$"), lambda m: wheel(int(m[1]))),
    (re.compile(r"^triod$"), lambda m: triod()),
]


def parse_spec(text: str) -> Graph:
    """``K<n>``, ``K<m>,<n>``, ``C<n>``, ``P<n>``, ``W<n>``, ``Ktilde<n>``, ``triod`` or ``@<path>``."""
    text = text.strip()
    if text.startswith("@"):
        try:
            return read_edge_list(text[1:])
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc.strerror}") from None
        except GraphError as exc:
            raise UsageError(f"bad edge list {text[1:]}: {exc}") from None
    for pat, build in _SPECS:
        m = pat.match(text)
        if m:
            try:
                return build(m)
            except GraphError as exc:
                raise UsageError(str(exc)) from None
    raise UsageError(f"unknown graph spec {text!r}")


def count(exponent: int) -> dict[str, Any]:
    """A power of two as exponent, ``2^k`` string, and decimal string when small."""
    out: dict[str, Any] = {"exponent": exponent, "value": f"2^{exponent}"}
    if exponent <= 64:
        out["decimal"] = str(1 << exponent)
    return out


def _graph_head(g: Graph) -> dict[str, Any]:
    return {"V": g.V, "E": g.E, "N": components(g)[0]}


# census ----------------------------------------------------------------------


def census_graph(g: Graph, args) -> dict[str, Any]:
    cs = cyc.cycle_space(g)
    return {"subject": f"graph {g.name}", **_graph_head(g),
            "dimensions": {"cycles": cs.dimension}, "counts": {"cycles": count(cs.dimension)}}


def census_square(g: Graph, args, deleted: bool) -> dict[str, Any]:
    pg = deleted_square_graph(g) if deleted else square_graph(g)
    bs = hom.boundary_space(pg)
    q = hom.h1_mod_boundaries(pg, bs)
    sym = hom.symmetric_h1(pg, bs)
    dims = {
        "cycles": q.cycle_dimension,
        "mod_boundaries": q.dimension,
        "boundary_rank": bs.rank,
        "boundary_dependencies": len(bs.cells) - bs.rank,
        "symmetric_cycles": sym.symmetric_cycles,
        "symmetric_mod_symmetrized_boundaries": sym.quotient,
    }
    kind = "deleted square" if deleted else "square"
    return {"subject": f"{kind} of {g.name}", "factor": _graph_head(g), **_graph_head(pg.graph),
            "dimensions": dims, "counts": {k: count(v) for k, v in dims.items()
                                           if k in ("cycles", "mod_boundaries", "symmetric_cycles")}}


def census_cells(g: Graph, args, deleted: bool) -> dict[str, Any]:
    cx = CellComplex(g, deleted=deleted)
    ker = cel.two_cycle_kernel(cx)
    sym = cel.symmetric_two_cycles(cx)
    dims: dict[str, Any] = {
        "cells": len(cx),
        "two_cycles": ker.nrows,
        "symmetric_two_cycles": sym.dimension,
        "symmetric_in_symmetrized_torus_span": sym.in_span_dimension,
    }
    try:
        span = cel.vertex_disjoint_torus_span(g, args.max_cycles)
        full_dim = cel.two_cycle_space(g).dimension
        from .gf2 import rank

        dims["vertex_disjoint_torus_span"] = rank(span) if span.nrows else 0
        dims["full_two_cycles"] = full_dim
    except cel.EnumerationLimitError:
        dims["vertex_disjoint_torus_span"] = None
    extra: dict[str, Any] = {}
    if deleted and len(cx):
        allc = cx.all_cells()
        extra["whole_complex_is_two_cycle"] = cel.is_cellular_2cycle(allc)
    kind = "deleted cells" if deleted else "cells"
    return {"subject": f"{kind} of {g.name}", **_graph_head(g), "dimensions": dims,
            "counts": {"two_cycles": count(ker.nrows), "symmetric_two_cycles": count(sym.dimension)},
            **extra}


def census_hypergraph(path_: str, args) -> dict[str, Any]:
    try:
        h = hyper.read_hypergraph(path_)
    except OSError as exc:
        raise UsageError(f"cannot read {path_}: {exc.strerror}") from None
    except hyper.HypergraphError as exc:
        raise UsageError(f"bad hypergraph file {path_}: {exc}") from None
    p = hyper.betti_profile(h)
    return {"subject": f"hypergraph {h.name}", "V": p.V, "E": p.E, "F": p.F,
            "betti": [p.b0, p.b1, p.b2], "euler_holds": p.euler_holds,
            "connected": hyper.is_connected(h), "counts": {"two_cycles": count(p.b2)}}


# decompose -------------------------------------------------------------------


def _labels(g: Graph, edges) -> list[str]:
    return [g.edge_label(e) for e in edges]


def decompose(args) -> tuple[dict[str, Any], int]:
    kind = args.kind
    rest = args.params
    if kind == "tori":
        if len(rest) != 1:
            raise UsageError("usage: decompose tori <spec> [--deleted]")
        g = parse_spec(rest[0])
        cx = CellComplex(g, deleted=args.deleted)
        c = cx.all_cells()
        if not cel.is_cellular_2cycle(c):
            return {"subject": f"{cx.name}", "two_cycle": False, "terms": []}, 1
        dec = cel.decompose_into_tori(c)
        terms = [[g.edge_label(s), g.edge_label(t)] for s, t in dec.terms]
        q = len(cyc.cycle_space(g).cotree)
        return {"subject": cx.name, "two_cycle": True, "coordinates": q * q,
                "terms": terms, "term_count": len(terms)}, 0
    if kind == "triangles":
        if len(rest) < 4:
            raise UsageError("usage: decompose triangles K<n> v1 v2 v3 ...")
        g = parse_spec(rest[0])
        try:
            c = g.walk(*rest[1:], closed=True)
            tri = cyc.decompose_triangles_complete(c)
        except (GraphError, cyc.NotACycleError) as exc:
            raise UsageError(str(exc)) from None
        return {"subject": f"closed walk in {g.name}",
                "triangles": [[g.labels[v] for v in t] for t in tri]}, 0
    if kind == "tetrahedra":
        if len(rest) != 1:
            raise UsageError("usage: decompose tetrahedra <hypergraph file>")
        try:
            h = hyper.read_hypergraph(rest[0])
            out = hyper.d_cycle_decompose(h.faces, 2, h.vertex_count)
        except OSError as exc:
            raise UsageError(f"cannot read {rest[0]}: {exc.strerror}") from None
        except (hyper.HypergraphError, hyper.NotACycleError) as exc:
            raise UsageError(str(exc)) from None
        return {"subject": f"faces of {h.name}", "tetrahedra": [list(t) for t in out]}, 0
    if kind == "boundaries":
        if len(rest) < 3 or rest[0] not in ("square", "deleted-square"):
            raise UsageError("usage: decompose boundaries square|deleted-square <spec> <cycle kind> <args...>")
        g = parse_spec(rest[1])
        pg = deleted_square_graph(g) if rest[0] == "deleted-square" else square_graph(g)
        try:
            c = _named(pg, rest[2], rest[3:])
        except (GraphError, TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        bs = hom.boundary_space(pg)
        cert = hom.is_sum_of_boundaries(c, bs)
        body: dict[str, Any] = {"subject": f"{rest[2]} cycle in the {rest[0]} of {g.name}",
                                "edges": len(c), "boundary_sum": cert is not None}
        if cert is not None:
            body["cells"] = [[g.edge_label(s), g.edge_label(t)] for s, t in cert]
        return body, 0
    if kind == "parallelepipeds":
        if len(rest) < 2:
            raise UsageError("usage: decompose parallelepipeds <n> <ell> [cell ...] (cells as a,b,...)")
        try:
            grid = hyper.RookGrid(int(rest[0]), int(rest[1]))
            cells = [tuple(int(x) for x in tok.split(",")) for tok in rest[2:]]
            base = hyper.decompose_parallelepipeds(cells, grid)
        except (ValueError, hyper.HypergraphError, hyper.NotACycleError) as exc:
            raise UsageError(str(exc)) from None
        return {"subject": f"rook set in [{grid.n}]^{grid.ell}", "apex_boxes": [list(a) for a in base]}, 0
    raise UsageError(f"unknown decomposition kind {kind!r}")


def _named(pg, kind: str, params: Sequence[str]):
    if kind in ("diagonal", "off_diagonal", "antidiagonal"):
        return named_cycle(pg, kind, list(params))
    if kind == "triodic":
        if len(params) != 4:
            raise ValueError("triodic needs a centre and three leaves")
        return named_cycle(pg, kind, params[0], list(params[1:]))
    if kind in ("left", "right", "symmetrized"):
        if len(params) < 4:
            raise ValueError(f"{kind} needs a vertex and a cycle")
        a, vs = params[0], list(params[1:])
        return named_cycle(pg, kind, *((vs, a) if kind == "right" else (a, vs)))
    if kind == "boundary":
        if len(params) != 4:
            raise ValueError("boundary needs two edges: a b u v")
        return named_cycle(pg, kind, (params[0], params[1]), (params[2], params[3]))
    raise ValueError(f"unknown cycle kind {kind!r}")


# verify ----------------------------------------------------------------------


def run_verify(args) -> tuple[dict[str, Any], int]:
    from .verify import SUITES, run_suite

    progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr, flush=True))
    try:
        results = run_suite(args.suite, seed=args.seed, progress=progress)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or a number 1-14") from None
    failed = [c.number for c in results if not c.passed]
    body = {"suite": args.suite, "seed": args.seed, "passed": not failed,
            "failed_criteria": failed, "criteria": [c.to_json() for c in results]}
    return body, 1 if failed else 0


# entry point -----------------------------------------------------------------


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands get SUPPRESS defaults so they never overwrite flags given before them
    def dflt(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=dflt(True),
                        help="emit JSON on standard output (the only format)")
    common.add_argument("--quiet", action="store_true", default=dflt(False),
                        help="no progress or timing on standard error")
    common.add_argument("--max-cycles", type=int, default=dflt(10**5), help="cap on simple-cycle enumeration")
    common.add_argument("--seed", type=int, default=dflt(0), help="seed for randomized checks")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gf2cycles", description=__doc__.splitlines()[0],
                                parents=[_common_flags(False)])
    common = _common_flags(True)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="dimension tables for a graph, product or hypergraph", parents=[common])
    c.add_argument("what", choices=["graph", "square", "deleted-square", "cells", "deleted-cells", "hypergraph"])
    c.add_argument("subject", help="graph spec (K5, K3,3, C6, P4, W5, Ktilde3, triod, @file) or hypergraph file")

    d = sub.add_parser("decompose", help="explicit decompositions with re-sum checks", parents=[common])
    d.add_argument("kind", choices=["tori", "triangles", "tetrahedra", "boundaries", "parallelepipeds"])
    d.add_argument("params", nargs="*")
    d.add_argument("--deleted", action="store_true", help="tori: use the deleted product")

    v = sub.add_parser("verify", help="run the reference-value checks", parents=[common])
    v.add_argument("suite", nargs="?", default="all")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command == "census":
            if args.what == "hypergraph":
                body, code = census_hypergraph(args.subject, args), 0
            else:
                g = parse_spec(args.subject)
                if args.what == "graph":
                    body = census_graph(g, args)
                elif args.what in ("square", "deleted-square"):
                    body = census_square(g, args, args.what == "deleted-square")
                else:
                    body = census_cells(g, args, args.what == "deleted-cells")
                code = 0
        elif args.command == "decompose":
            body, code = decompose(args)
        else:
            body, code = run_verify(args)
    except UsageError as exc:
        print(f"gf2cycles: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(body, indent=2, sort_keys=True) + "\n")
    if not args.quiet:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
