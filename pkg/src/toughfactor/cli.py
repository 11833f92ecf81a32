"""Command-line surface: corpus validation, instance ledgers, DOT export.

Exit codes: 0 success / validated, 2 parse error, 3 capacity guard hit,
4 validation found a counterexample (an entry satisfying every hypothesis
but lacking a 2-factor; such an entry is serialized in full).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

from . import __version__
from .errors import CapacityError, ParseError
from .formats import export_dot, parse_instance, serialize_edge_list
from .generators import CorpusEntry, GeneratorSpec, annotate
from .graph import is_plane_triangulation
from .machinery import (
    assemble_cutset,
    build_link_graph,
    dense_component_walks,
    matching_pipeline,
    tri_component_bound,
)
from .toughness import INFINITY, toughness
from .twofactor import (
    biased_barrier,
    check_biased_properties,
    classify_components,
    has_two_factor,
)

HYPOTHESIS_TOUGHNESS = Fraction(3, 2)


def _fmt_rat(x) -> str:
    if x == INFINITY:
        return "inf"
    return str(x)


# ---------------------------------------------------------------------------
# validate-theorem
# ---------------------------------------------------------------------------

_FAMILIES = ("apollonian", "random-flip", "stellation")


def _specs(count: int, min_n: int, max_n: int, seed: int) -> list[GeneratorSpec]:
    out = []
    for i in range(count):
        kind = _FAMILIES[i % len(_FAMILIES)]
        n = min_n + (i // len(_FAMILIES)) % (max_n - min_n + 1)
        out.append(GeneratorSpec(kind=kind, n=n, seed=seed + i))
    return out


def _annotate_spec(args: tuple[GeneratorSpec, Optional[int]]) -> CorpusEntry:
    spec, ham_guard = args
    g, emb = spec.build()
    return annotate(g, emb, provenance=f"{spec.kind}/n{spec.n}/s{spec.seed}", hamiltonian_guard=ham_guard)


def cmd_validate_theorem(
    count: int,
    min_n: int,
    max_n: int,
    seed: int,
    jobs: int = 1,
    hamiltonian_guard: Optional[int] = 12,
) -> dict:
    """Generate a corpus and check: exact toughness >= 3/2 plus separated
    degree-3 vertices must imply a 2-factor.  Vacuity is made visible via
    the hypothesis-satisfaction tally."""
    specs = _specs(count, min_n, max_n, seed)
    work = [(s, hamiltonian_guard) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_annotate_spec, work))
    else:
        entries = [_annotate_spec(w) for w in work]

    records = []
    counterexamples = []
    hypothesis_count = 0
    for idx, entry in enumerate(entries):
        tough_ok = entry.toughness == INFINITY or entry.toughness >= HYPOTHESIS_TOUGHNESS
        hypothesis = tough_ok and entry.dist_ok
        if hypothesis:
            hypothesis_count += 1
        record = {
            "id": idx,
            "provenance": entry.provenance,
            "n": entry.graph.n,
            "e": entry.graph.edge_count(),
            "toughness": _fmt_rat(entry.toughness),
            "dist_condition": entry.dist_ok,
            "two_factor": entry.two_factor,
            "hamiltonian": entry.hamiltonian,
            "hypothesis": hypothesis,
        }
        records.append(record)
        if hypothesis and not entry.two_factor:
            counterexamples.append(
                {"id": idx, "graph": serialize_edge_list(entry.graph, entry.embedding)}
            )
    return {
        "instances": records,
        "total": len(records),
        "hypothesis_satisfied": hypothesis_count,
        "no_two_factor": sum(1 for r in records if not r["two_factor"]),
        "counterexamples": counterexamples,
    }


def _print_validation_table(report: dict, out) -> None:
    head = f"{'id':>4} {'provenance':<24} {'n':>3} {'e':>3} {'tau':>7} {'d3':>3} {'2f':>3} {'ham':>4} {'hyp':>4}"
    print(head, file=out)
    for r in report["instances"]:
        ham = "-" if r["hamiltonian"] is None else ("yes" if r["hamiltonian"] else "no")
        print(
            f"{r['id']:>4} {r['provenance']:<24} {r['n']:>3} {r['e']:>3} "
            f"{r['toughness']:>7} {str(r['dist_condition'])[0]:>3} "
            f"{str(r['two_factor'])[0]:>3} {ham:>4} {str(r['hypothesis'])[0]:>4}",
            file=out,
        )
    print(
        f"total={report['total']} hypothesis_satisfied={report['hypothesis_satisfied']} "
        f"no_two_factor={report['no_two_factor']} "
        f"counterexamples={len(report['counterexamples'])}",
        file=out,
    )


# ---------------------------------------------------------------------------
# ledger
# ---------------------------------------------------------------------------

def cmd_ledger(text: str, guard: int = 18) -> dict:
    """Full barrier/matching/cutset ledger for one instance."""
    g, emb = parse_instance(text)
    ok, cert = has_two_factor(g, guard=guard)
    if ok:
        return {
            "two_factor": True,
            "message": "no barrier; a 2-factor exists",
            "factor_edges": sorted(map(list, cert.edges)),
        }
    barrier = biased_barrier(g, guard=guard)
    props = check_biased_properties(g, barrier)
    cls = classify_components(g, barrier.s, barrier.t)
    ledger = build_link_graph(g, barrier, cls)
    report = matching_pipeline(g, ledger)
    bound = tri_component_bound(report, cls)
    cut = assemble_cutset(g, barrier, cls, report)
    walks = None
    if emb is not None and is_plane_triangulation(g, emb):
        walk_reports = dense_component_walks(g, emb, ledger, report)
        walks = [
            {
                "component_size": len(w.component),
                "faces": w.face_count,
                "good": w.good_count,
                "qualifying": w.qualifying_count,
            }
            for w in walk_reports
        ]
    return {
        "two_factor": False,
        "barrier": {
            "s": sorted(barrier.s),
            "t": sorted(barrier.t),
            "delta": barrier.delta,
            "properties_hold": props.all_hold(),
            "t_size_residual": props.t_size_residual,
        },
        "classification": {
            "odd_by_links": {
                str(k): [sorted(c) for c in v] for k, v in sorted(cls.odd_by_links.items())
            },
            "t_isolated": sorted(cls.t_isolated),
            "t_single": sorted(cls.t_single),
            "t_multi": sorted(cls.t_multi),
            "excess": cls.t_multi_excess,
        },
        "link_graph": {
            "vertices": len(ledger.h.vertices),
            "edges": ledger.h.edge_count(),
            "max_degree": ledger.max_degree(),
            "split_vertices": len(ledger.split_vertices),
            "heavy_link_mass": ledger.heavy_link_mass,
        },
        "pipeline": {
            "deficiency_set": sorted(report.deficiency_set),
            "deficiency": report.deficiency,
            "df_bound": _fmt_rat(report.df_bound),
            "df_bound_holds": report.df_bound_holds,
            "dense_count": report.survey.dense_count,
            "split_component_count": report.survey.split_component_count,
            "rep_pairs": len(report.rep_pairs),
            "paired_t": sorted(report.paired_t),
        },
        "tri_bound": {
            "lhs": bound.lhs,
            "rhs": _fmt_rat(bound.rhs),
            "holds": bound.holds,
        },
        "cutset": {
            "vertices": sorted(cut.cutset),
            "predicted_size": cut.predicted_size,
            "size_identity_holds": cut.size_identity_holds,
            "component_count": cut.component_count,
            "lower_bound": cut.lower_bound,
            "lower_bound_holds": cut.lower_bound_holds,
            "ratio": None if cut.ratio is None else _fmt_rat(cut.ratio),
            "degenerate": cut.degenerate,
        },
        "dense_walks": walks,
    }


def _print_ledger_table(report: dict, out) -> None:
    if report["two_factor"]:
        print("2-factor exists:", file=out)
        print("  edges:", report["factor_edges"], file=out)
        return
    b = report["barrier"]
    print(f"barrier      S={b['s']} T={b['t']} delta={b['delta']}", file=out)
    print(f"properties   hold={b['properties_hold']} residual={b['t_size_residual']}", file=out)
    p = report["pipeline"]
    print(
        f"link graph   n={report['link_graph']['vertices']} m={report['link_graph']['edges']} "
        f"maxdeg={report['link_graph']['max_degree']}",
        file=out,
    )
    print(
        f"pipeline     df={p['deficiency']} bound={p['df_bound']} holds={p['df_bound_holds']} "
        f"dense={p['dense_count']} split_comps={p['split_component_count']} pairs={p['rep_pairs']}",
        file=out,
    )
    tb = report["tri_bound"]
    print(f"3-link bound {tb['lhs']} <= {tb['rhs']} holds={tb['holds']}", file=out)
    c = report["cutset"]
    print(
        f"cutset       |S'|={len(c['vertices'])} c(G-S')={c['component_count']} "
        f"ratio={c['ratio']} identity={c['size_identity_holds']} lower_ok={c['lower_bound_holds']}",
        file=out,
    )
    if report.get("dense_walks") is not None:
        print(f"dense walks  {report['dense_walks']}", file=out)


# ---------------------------------------------------------------------------
# export-dot
# ---------------------------------------------------------------------------

def cmd_export_dot(text: str, overlay: str = "none", guard: int = 18) -> str:
    g, _emb = parse_instance(text)
    if overlay == "none":
        return export_dot(g)
    if overlay == "two-factor":
        ok, cert = has_two_factor(g, guard=guard)
        return export_dot(g, two_factor=cert if ok else None)
    if overlay == "barrier":
        ok, cert = has_two_factor(g, guard=guard)
        if ok:
            return export_dot(g, two_factor=cert)
        cls = classify_components(g, cert.s, cert.t)
        return export_dot(g, barrier=cert, classification=cls)
    raise ParseError(f"unknown overlay {overlay!r}")


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toughfactor")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    val = sub.add_parser("validate-theorem", help="corpus sweep of the 2-factor claim")
    val.add_argument("--count", type=int, default=120)
    val.add_argument("--min-n", type=int, default=7)
    val.add_argument("--max-n", type=int, default=12)
    val.add_argument("--seed", type=int, default=0)
    val.add_argument("--jobs", type=int, default=1)
    val.add_argument("--hamiltonian-guard", type=int, default=12)
    val.add_argument("--format", choices=("json", "table"), default="table")

    led = sub.add_parser("ledger", help="barrier and matching ledger for one instance")
    led.add_argument("instance", help="instance file (edge list or graph6)")
    led.add_argument("--guard-exhaustive", type=int, default=18)
    led.add_argument("--format", choices=("json", "table"), default="table")

    dot = sub.add_parser("export-dot", help="DOT rendering with overlays")
    dot.add_argument("instance")
    dot.add_argument("--overlay", choices=("none", "barrier", "two-factor"), default="none")
    dot.add_argument("--guard-exhaustive", type=int, default=18)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "validate-theorem":
            report = cmd_validate_theorem(
                count=args.count,
                min_n=args.min_n,
                max_n=args.max_n,
                seed=args.seed,
                jobs=args.jobs,
                hamiltonian_guard=args.hamiltonian_guard,
            )
            if args.format == "json":
                print(json.dumps(report, indent=2), file=out)
            else:
                _print_validation_table(report, out)
            return 4 if report["counterexamples"] else 0
        if args.command == "ledger":
            with open(args.instance) as fh:
                text = fh.read()
            report = cmd_ledger(text, guard=args.guard_exhaustive)
            if args.format == "json":
                print(json.dumps(report, indent=2), file=out)
            else:
                _print_ledger_table(report, out)
            return 0
        if args.command == "export-dot":
            with open(args.instance) as fh:
                text = fh.read()
            print(cmd_export_dot(text, overlay=args.overlay, guard=args.guard_exhaustive), file=out, end="")
            return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity guard: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
