"""Batch command-line front end: vertices, hstar, closed-form, and gb pipelines.

Exit codes: 0 success, 2 parse/usage error, 3 cost guard, 4 verification
failure (disagreement between computation routes).  Reports carry a route tag
("semigroup", "lp", "closed-form", "gb-f-vector") on every numeric claim and
are byte-stable for fixed inputs and flags; timing is serialized only under
--timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import ehrhart, grobner, lattice
from .errors import CostGuardError, EdgeListParseError, VerificationError
from .graph import (
    Graph,
    complete_bipartite,
    configuration,
    cut_polytope_vertices,
    cycle,
    path,
    read_edge_list,
)
from .polynomial import (
    IntPolynomial,
    eulerian,
    f_to_h,
    format_polynomial,
    hibi_lower_bound_ok,
    hstar_closed_form_k2m,
    is_palindromic,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_COST_GUARD = 3
EXIT_VERIFICATION = 4


@dataclass
class RunReport:
    """Deterministic result bundle rendered identically to text and JSON."""

    command: str
    data: dict
    timing_s: float = 0.0
    show_timing: bool = False

    def payload(self) -> dict:
        out = {"command": self.command}
        out.update(self.data)
        if self.show_timing:
            out["timing_s"] = round(self.timing_s, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2)

    def to_text(self) -> str:
        lines = []

        def emit_leaf(name, value):
            if isinstance(value, list) and value and isinstance(value[0], list):
                lines.append(f"{name}:")
                for row in value:
                    lines.append("  " + " ".join(str(x) for x in row))
            elif isinstance(value, list):
                lines.append(f"{name}: " + " ".join(str(x) for x in value))
            else:
                lines.append(f"{name}: {value}")

        def walk(prefix, value):
            if isinstance(value, dict):
                for key, sub in value.items():
                    walk(f"{prefix}.{key}" if prefix else key, sub)
            else:
                emit_leaf(prefix, value)

        walk("", self.payload())
        return "\n".join(lines) + "\n"


def _graph_from_args(args) -> tuple[Graph, dict]:
    picked = [name for name in ("cycle", "path", "kbipartite", "edge_list")
              if getattr(args, name) is not None]
    if len(picked) != 1:
        raise argparse.ArgumentTypeError(
            "choose exactly one of --cycle, --path, --kbipartite, --edge-list")
    if args.cycle is not None:
        g = cycle(args.cycle)
        descriptor = {"kind": "cycle"}
    elif args.path is not None:
        g = path(args.path)
        descriptor = {"kind": "path"}
    elif args.kbipartite is not None:
        p, q = args.kbipartite
        g = complete_bipartite(p, q)
        descriptor = {"kind": "complete_bipartite", "parts": [p, q]}
    else:
        g = read_edge_list(args.edge_list)
        descriptor = {"kind": "edge_list", "file": args.edge_list}
    descriptor["vertices"] = g.vertex_count
    descriptor["edges"] = g.edge_count
    return g, descriptor


def _poly_entry(p: IntPolynomial, route: str) -> dict:
    return {
        "route": route,
        "coefficients": list(p.coeffs),
        "text": format_polynomial(p),
        "value_at_1": p.evaluate(1),
        "palindromic": is_palindromic(p),
        "hibi_lower_bound": hibi_lower_bound_ok(p),
    }


def cmd_vertices(args) -> RunReport:
    g, descriptor = _graph_from_args(args)
    vertices = cut_polytope_vertices(g)
    cfg = configuration(g)
    data = {
        "graph": descriptor,
        "vertex_count": len(vertices),
        "vertices": [list(v) for v in vertices],
        "configuration_columns": [list(c) for c in cfg.columns],
    }
    return RunReport(command="vertices", data=data)


def cmd_hstar(args) -> RunReport:
    if args.from_counts is not None:
        for name in ("cycle", "path", "kbipartite", "edge_list"):
            if getattr(args, name) is not None:
                raise argparse.ArgumentTypeError(
                    "--from-counts replaces the graph; drop the graph flags")
        with open(args.from_counts, "r", encoding="utf-8") as fh:
            cs = ehrhart.CountSequence.from_json(fh.read())
        h = ehrhart.hstar_from_counts(cs)
        entry = _poly_entry(h, "counts-file")
        entry["counts"] = list(cs.counts)
        data = {
            "counts_file": args.from_counts,
            "method": "counts-file",
            "dimension": cs.dimension,
            "results": {"counts-file": entry},
        }
        return RunReport(command="hstar", data=data)
    g, descriptor = _graph_from_args(args)
    cfg = configuration(g)
    data = {"graph": descriptor, "method": args.method}
    data["dimension"] = lattice.polytope_dimension(cfg)
    results = {}
    sequences = {}
    if args.method in ("semigroup", "both"):
        h, cs = ehrhart.hstar_polynomial(cfg, "semigroup", args.max_dilate)
        results["semigroup"] = _poly_entry(h, "semigroup")
        results["semigroup"]["counts"] = list(cs.counts)
        sequences["semigroup"] = cs
    if args.method in ("lp", "both"):
        h, cs = ehrhart.hstar_polynomial(cfg, "lp", args.max_dilate)
        results["lp"] = _poly_entry(h, "lp")
        results["lp"]["counts"] = list(cs.counts)
        sequences["lp"] = cs
    data["results"] = results
    if args.method == "both":
        agree = results["semigroup"]["coefficients"] == results["lp"]["coefficients"]
        data["agreement"] = "PASS" if agree else "FAIL"
        if not agree:
            raise VerificationError("semigroup and lp routes disagree:\n" +
                                    json.dumps(data, indent=2))
    if args.counts_out is not None:
        produced = sequences.get("semigroup", sequences.get("lp"))
        with open(args.counts_out, "w", encoding="utf-8") as fh:
            fh.write(produced.to_json() + "\n")
        data["counts_out"] = args.counts_out
    return RunReport(command="hstar", data=data)


def cmd_closed_form(args) -> RunReport:
    n = args.n
    if n < 4:
        raise argparse.ArgumentTypeError("closed form needs n >= 4")
    h = hstar_closed_form_k2m(n)
    a = eulerian(n - 2)
    data = {
        "n": n,
        "hstar": _poly_entry(h, "closed-form"),
        "eulerian_factor": {"route": "closed-form", "coefficients": list(a.coeffs),
                            "text": format_polynomial(a)},
        "normalized_volume": {"route": "closed-form", "value": h.evaluate(1)},
    }
    return RunReport(command="closed-form", data=data)


def cmd_gb(args) -> RunReport:
    n = args.n
    if n < 4:
        raise argparse.ArgumentTypeError("cut-ideal basis needs n >= 4")
    data = {"n": n, "action": args.action}
    if args.action == "list":
        basis = grobner.generate_gb(n)
        data["binomial_count"] = len(basis)
        data["binomials"] = json.loads(grobner.gb_to_json(basis))
        data["binomial_text"] = [grobner.format_binomial(b) for b in basis]
        return RunReport(command="gb", data=data)
    if args.action == "verify":
        ok, certificate = grobner.buchberger_check(n)
        data["verdict"] = "PASS" if ok else "FAIL"
        data["certificate"] = certificate
        report = RunReport(command="gb", data=data)
        if not ok:
            raise VerificationError("Buchberger check failed:\n" + report.to_text())
        return report
    if args.action == "fvector":
        f = grobner.f_vector(n)
        h = f_to_h(f, 2 * n - 4)
        data["f_vector"] = {"route": "gb-f-vector", "values": f}
        data["h_polynomial"] = _poly_entry(h, "gb-f-vector")
        return RunReport(command="gb", data=data)
    if args.action == "compare":
        if n > 5:
            raise CostGuardError(
                f"compare refused for n = {n}: the dilate enumeration to 2n-3 = {2*n-3} "
                "is beyond the desk-scale budget")
        f = grobner.f_vector(n)
        h_gb = f_to_h(f, 2 * n - 4)
        h_closed = hstar_closed_form_k2m(n)
        cfg = configuration(complete_bipartite(2, n - 2))
        h_ehrhart, _ = ehrhart.hstar_polynomial(cfg, "semigroup")
        data["results"] = {
            "gb-f-vector": _poly_entry(h_gb, "gb-f-vector"),
            "closed-form": _poly_entry(h_closed, "closed-form"),
            "semigroup": _poly_entry(h_ehrhart, "semigroup"),
        }
        agree = h_gb == h_closed == h_ehrhart
        data["agreement"] = "PASS" if agree else "FAIL"
        report = RunReport(command="gb", data=data)
        if not agree:
            raise VerificationError("three-way h* comparison failed:\n" + report.to_text())
        return report
    raise argparse.ArgumentTypeError(f"unknown gb action {args.action!r}")


def _add_graph_flags(parser):
    parser.add_argument("--cycle", type=int, metavar="N", help="cycle on N vertices")
    parser.add_argument("--path", type=int, metavar="E", help="path with E edges")
    parser.add_argument("--kbipartite", type=int, nargs=2, metavar=("P", "Q"),
                        help="complete bipartite graph K_{P,Q}")
    parser.add_argument("--edge-list", metavar="FILE",
                        help="plain edge-list file: first line m, then 'u v' lines")


def _add_output_flags(parser):
    # registered on the main parser and every subparser so the flags work in
    # either position; SUPPRESS keeps a subparser from clobbering a value
    # already parsed at the top level
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the report as JSON")
    parser.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS,
                        help="write the report to FILE")
    parser.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock timing in the report (not byte-stable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutpoly",
        description="Exact h*-polynomials of cut polytopes in the vertex-spanned lattice.")
    _add_output_flags(parser)
    parser.set_defaults(json=False, out=None, timing=False)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_vertices = sub.add_parser("vertices", help="cut-polytope vertices and configuration")
    _add_output_flags(p_vertices)
    _add_graph_flags(p_vertices)
    p_vertices.set_defaults(handler=cmd_vertices)

    p_hstar = sub.add_parser("hstar", help="h*-polynomial via dilate counting")
    _add_graph_flags(p_hstar)
    _add_output_flags(p_hstar)
    p_hstar.add_argument("--method", choices=("semigroup", "lp", "both"),
                         default="semigroup")
    p_hstar.add_argument("--max-dilate", type=int, default=None,
                         help="dilate budget (default: dimension + 1)")
    p_hstar.add_argument("--counts-out", metavar="FILE", default=None,
                         help="write the dilate-count sequence as JSON to FILE")
    p_hstar.add_argument("--from-counts", metavar="FILE", default=None,
                         help="skip counting; read a count-sequence JSON file instead")
    p_hstar.set_defaults(handler=cmd_hstar)

    p_closed = sub.add_parser("closed-form",
                              help="closed-form h* of the cut polytope of K_{2,n-2}")
    p_closed.add_argument("n", type=int)
    _add_output_flags(p_closed)
    p_closed.set_defaults(handler=cmd_closed_form)

    p_gb = sub.add_parser("gb", help="cut-ideal basis: list, verify, fvector, compare")
    p_gb.add_argument("n", type=int)
    p_gb.add_argument("action", choices=("list", "verify", "fvector", "compare"))
    _add_output_flags(p_gb)
    p_gb.set_defaults(handler=cmd_gb)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    started = time.perf_counter()
    try:
        report = args.handler(args)
    except (argparse.ArgumentTypeError, EdgeListParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CostGuardError as exc:
        print(f"cost guard: {exc}", file=sys.stderr)
        return EXIT_COST_GUARD
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    report.timing_s = time.perf_counter() - started
    report.show_timing = args.timing
    rendered = report.to_json() + "\n" if args.json else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
