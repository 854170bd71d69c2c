"""Command-line front end.

Subcommands: list, show, decide, certificate, groebner, report.  Exit
codes are a stable contract: 0 for a decided question, 2 for Undecided,
1 for errors (bad input, failed verification, internal trouble).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from .certificate import (
    VERDICT_HAS,
    parse_certificate,
    render_certificate,
    serialize_certificate,
    verify_certificate,
)
from .engine import decide
from .graphs import GraphError, read_graph, write_graph
from .groebner import (
    buchberger,
    commutation_report,
    default_degree_cap,
    quantum_relations,
)
from .named import build_named
from .perms import automorphism_group, is_vertex_transitive

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2

ONE_SIDED_CAVEAT = ("note: reductions to zero prove commutation in the "
                    "quantum automorphism algebra; irreducible commutators "
                    "prove nothing (the basis is degree-truncated)")


def _load_graph(source: str):
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return read_graph(fh.read(), label=os.path.basename(source))
    return build_named(source)


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_list(args) -> int:
    rows = cat.catalog(include_sanity=True)
    print(f"{'name':16s} {'subclass':14s} {'|Aut|':>10s}  quantum?  aut group")
    for e in rows:
        flag = "yes" if e.expected_has_qsym else "no"
        print(f"{e.name:16s} {e.subclass:14s} {e.expected_aut_order or '-':>10}"
              f"  {flag:8s}  {e.aut_display}")
    return EXIT_OK


def cmd_show(args) -> int:
    g = _load_graph(args.graph)
    aut = automorphism_group(g)
    degs = sorted(set(g.degree(v) for v in g.vertices()))
    print(f"graph: {g.label or args.graph}")
    print(f"vertices: {g.n}  edges: {g.num_edges()}  degrees: {degs}")
    print(f"connected: {g.is_connected()}  "
          f"vertex-transitive: {is_vertex_transitive(g, aut)}")
    print(f"|Aut| = {aut.order}")
    if args.format == "text" and args.output:
        _emit(write_graph(g), args.output)
    return EXIT_OK


def cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    if args.engine == "groebner":
        return _decide_groebner(g, args)
    verdict = decide(g, timeout=args.timeout, max_rounds=args.max_rounds,
                     engine=args.engine)
    payload = {"graph": g.label or args.graph, "verdict": verdict.kind}
    if verdict.kind == "HasQuantumSymmetry":
        sigma, tau = verdict.witness
        payload["witness"] = [str(sigma), str(tau)]
    elif verdict.kind == "Undecided":
        payload["reason"] = verdict.reason
        payload["summary"] = verdict.summary
    if verdict.certificate is not None:
        payload["certificate_steps"] = len(verdict.certificate.steps)
    if args.format == "structured":
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [f"{payload['graph']}: {verdict.kind}"]
        if "witness" in payload:
            lines.append(f"  disjoint automorphisms: {payload['witness'][0]} "
                         f"and {payload['witness'][1]}")
        if "reason" in payload:
            lines.append(f"  reason: {payload['reason']}")
        if verdict.certificate is not None:
            lines.append(f"  certificate steps: {len(verdict.certificate.steps)}")
            if args.output:
                lines.append(f"  certificate written to {args.output}")
        _emit("\n".join(lines), None)
        if args.output and verdict.certificate is not None:
            _emit(serialize_certificate(verdict.certificate), args.output)
    return EXIT_UNDECIDED if verdict.kind == "Undecided" else EXIT_OK


def _decide_groebner(g, args) -> int:
    cap = args.max_degree if args.max_degree is not None \
        else default_degree_cap(g.n)
    gb = buchberger(quantum_relations(g), max_degree=cap,
                    max_steps=args.max_steps)
    pairs = commutation_report(g, gb)
    open_pairs = [p for p, ok in pairs.items() if not ok]
    print(f"{g.label or args.graph}: basis {len(gb.basis)}, complete to "
          f"degree {gb.complete_up_to_degree}, exhausted {gb.exhausted}")
    if not open_pairs:
        print("all generator columns provably commute: the algebra is "
              "commutative, hence NoQuantumSymmetry")
        return EXIT_OK
    print(f"{len(open_pairs)} of {len(pairs)} column pairs not settled; "
          f"{ONE_SIDED_CAVEAT}")
    return EXIT_UNDECIDED


def cmd_certificate(args) -> int:
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            cert = parse_certificate(fh.read())
        g = _load_graph(args.graph) if args.graph else cert.graph()
        result = verify_certificate(g, cert)
        if result:
            print(f"certificate OK ({len(cert.steps)} steps, "
                  f"verdict {cert.verdict})")
            return EXIT_OK
        print(f"certificate INVALID at step {result.step_index}: "
              f"{result.message}")
        return EXIT_ERROR

    if not args.graph:
        print("certificate: a graph (or --verify FILE) is required",
              file=sys.stderr)
        return EXIT_ERROR
    g = _load_graph(args.graph)
    engine = args.engine if args.engine != "groebner" else "lemmas"
    verdict = decide(g, timeout=args.timeout, max_rounds=args.max_rounds,
                     engine=engine)
    if verdict.kind == "HasQuantumSymmetry":
        print(f"{g.label or args.graph} has quantum symmetries; no "
              "commutativity certificate exists (witness: "
              f"{verdict.witness[0]} and {verdict.witness[1]})")
        return EXIT_ERROR
    if verdict.kind == "Undecided" and engine == "lemmas":
        # the lemma engine alone could not close it; check the full pipeline
        auto = decide(g, timeout=args.timeout, max_rounds=args.max_rounds)
        if auto.kind == "HasQuantumSymmetry":
            print(f"{g.label or args.graph} has quantum symmetries; no "
                  "commutativity certificate exists")
            return EXIT_ERROR
        verdict = auto if auto.kind != "Undecided" else verdict
    if verdict.kind == "Undecided":
        print(f"{g.label or args.graph}: Undecided ({verdict.reason}); "
              "nothing to certify")
        return EXIT_UNDECIDED
    cert = verdict.certificate
    if args.format in ("md", "latex"):
        _emit(render_certificate(cert, args.format), args.output)
    else:
        _emit(serialize_certificate(cert), args.output)
    return EXIT_OK


def cmd_groebner(args) -> int:
    g = _load_graph(args.graph)
    cap = args.max_degree if args.max_degree is not None \
        else default_degree_cap(g.n)
    rels = quantum_relations(g)
    gb = buchberger(rels, max_degree=cap, max_steps=args.max_steps)
    pairs = commutation_report(g, gb)
    commuting = sorted(p for p, ok in pairs.items() if ok)
    lines = [
        f"graph: {g.label or args.graph} (n={g.n})",
        f"relations: {len(rels)}",
        f"basis size: {len(gb.basis)}",
        f"complete up to degree: {gb.complete_up_to_degree} "
        f"(cap {cap}, exhausted {gb.exhausted}, truncated {gb.truncated}, "
        f"steps {gb.steps}, discarded over cap {gb.discarded_over_cap})",
        f"column pairs provably commuting: {len(commuting)} / {len(pairs)}",
    ]
    if len(commuting) == len(pairs):
        lines.append("the algebra is commutative at this cap: "
                     "NoQuantumSymmetry")
    else:
        open_pairs = sorted(p for p, ok in pairs.items() if not ok)
        preview = ", ".join(str(p) for p in open_pairs[:8])
        lines.append(f"unsettled column pairs: {preview}"
                     + (" ..." if len(open_pairs) > 8 else ""))
        lines.append(ONE_SIDED_CAVEAT)
    _emit("\n".join(lines), args.output)
    return EXIT_OK if len(commuting) == len(pairs) else EXIT_UNDECIDED


def cmd_report(args) -> int:
    entries = cat.twelve_vertex_entries()
    if args.subclass:
        entries = [e for e in entries if e.subclass == args.subclass]
    report = cat.run_report(entries, timeout=args.timeout,
                            max_rounds=args.max_rounds, jobs=args.jobs)
    if args.format == "structured":
        _emit(json.dumps(report, indent=2, default=str), args.output)
    else:
        _emit(cat.report_markdown(report), args.output)
    bad = report["contradictions"] or report["errors"] \
        or report["aut_mismatches"]
    return EXIT_ERROR if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsym",
        description="decide quantum symmetries of finite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_required=True, graph=True):
        if graph:
            nargs = {} if graph_required else {"nargs": "?"}
            p.add_argument("graph", help="catalog name or graph file path",
                           **nargs)
        p.add_argument("--engine", choices=("auto", "lemmas", "groebner"),
                       default="auto")
        p.add_argument("--timeout", type=float, default=30.0)
        p.add_argument("--max-rounds", type=int, default=8)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--max-steps", type=int, default=200_000)
        p.add_argument("--format", default="text")
        p.add_argument("--output", "-o", default=None)

    p_list = sub.add_parser("list", help="print the catalog alias table")
    p_list.set_defaults(func=cmd_list)

    p_show = sub.add_parser("show", help="print graph statistics")
    common(p_show)
    p_show.set_defaults(func=cmd_show)

    p_decide = sub.add_parser("decide", help="decide quantum symmetry")
    common(p_decide)
    p_decide.set_defaults(func=cmd_decide)

    p_cert = sub.add_parser("certificate",
                            help="emit or verify a commutation certificate")
    common(p_cert, graph_required=False)
    p_cert.add_argument("--verify", default=None, metavar="FILE",
                        help="re-check a serialized certificate")
    p_cert.set_defaults(func=cmd_certificate, engine="lemmas")

    p_gb = sub.add_parser("groebner",
                          help="degree-capped Groebner reduction report")
    common(p_gb)
    p_gb.set_defaults(func=cmd_groebner)

    p_rep = sub.add_parser("report", help="run the full catalog")
    common(p_rep, graph=False)
    p_rep.add_argument("--subclass", default=None,
                       choices=cat.SUBCLASSES)
    p_rep.add_argument("--jobs", type=int, default=1)
    p_rep.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
