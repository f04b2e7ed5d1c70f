"""Command line interface: ``twoeig <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Callable, Sequence

from . import graph6
from .catalog import export_catalog, scan_forbidden, validate_catalog
from .classifier import cospectral_mate_pairs, ds_status, verify_classification
from .equitable import (
    Partition,
    coarsest_equitable_refinement,
    is_equitable,
    parse_partition,
    quotient_char_poly,
    quotient_matrix,
    verify_quotient_divides,
)
from .errors import CapacityError, ConsistencyError, ContractViolation
from .families import FamilySpec, construct, enumerate_instances, parse_family_spec, printed_partition, verify_family
from .graph import Graph
from .poly import RootCounter
from .render import decimal_string, poly_text, quadratic_roots_text
from .spectra import char_poly, classify_spectrum, in_class_G, strip_pm_one

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family(text: str) -> FamilySpec:
    try:
        return parse_family_spec(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _graph_arg(text: str) -> tuple[Graph, FamilySpec | None]:
    """A family spec (contains ':') or a graph6 string."""
    if ":" in text and not text.startswith(">>graph6<<"):
        spec = _family(text)
        return construct(spec), spec
    try:
        return graph6.decode(text), None
    except (ValueError, CapacityError) as exc:
        raise UsageError(f"not a graph6 string or family spec: {exc}") from None


def _input_graph(args: argparse.Namespace) -> tuple[Graph, FamilySpec | None]:
    if getattr(args, "family", None):
        if args.graph:
            raise UsageError("give either a graph or --family, not both")
        spec = _family(args.family)
        return construct(spec), spec
    if not args.graph:
        raise UsageError("a graph6 string or family spec is required")
    return _graph_arg(args.graph)


def _emit(out: IO[str], data: dict, as_json: bool, text: str) -> None:
    if as_json:
        json.dump(data, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(text.rstrip("\n") + "\n")


# --- commands ---------------------------------------------------------------

def cmd_construct(args: argparse.Namespace, out: IO[str]) -> int:
    spec = _family(args.spec)
    g = construct(spec)
    line = graph6.encode(g)
    _emit(out, {"spec": str(spec), "n": g.n, "edges": g.num_edges, "graph6": line}, args.json, line)
    return EXIT_OK


def spectrum_report(g: Graph) -> dict:
    summary = strip_pm_one(char_poly(g))
    res = summary.residual
    data: dict = {
        "n": g.n,
        "p": summary.p,
        "q": summary.q,
        "residual_coeffs": list(res),
        "r_interval": None,
        "s_interval": None,
        "in_class_G": in_class_G(g) is not None,
    }
    if len(res) == 3:
        rc = RootCounter(res)
        if rc.real_root_count() == 2:
            for key, which in (("r_interval", 1), ("s_interval", 2)):
                lo, hi = rc.kth_largest(which)
                data[key] = [decimal_string(lo), decimal_string(hi)]
    return data


def cmd_spectrum(args: argparse.Namespace, out: IO[str]) -> int:
    g, _ = _input_graph(args)
    data = spectrum_report(g)
    res = tuple(data["residual_coeffs"])
    lines = [f"n = {g.n}, eigenvalue 1 with multiplicity {data['p']}, -1 with multiplicity {data['q']}"]
    lines.append(f"residual factor: {poly_text(res)}")
    if len(res) == 3 and res[1] ** 2 - 4 * res[0] >= 0:
        lines.append(f"remaining eigenvalues: {quadratic_roots_text(-res[1], res[0])}")
    if data["r_interval"]:
        lines.append(f"r in ({data['r_interval'][0]}, {data['r_interval'][1]}]")
        lines.append(f"s in ({data['s_interval'][0]}, {data['s_interval'][1]}]")
    lines.append(f"in class G: {'yes' if data['in_class_G'] else 'no'}")
    _emit(out, data, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, out: IO[str]) -> int:
    g, _ = _input_graph(args)
    try:
        c = classify_spectrum(g)
    except ConsistencyError as exc:
        out.write(f"internal inconsistency: {exc}\n")
        return EXIT_FAIL
    data: dict = {"n": g.n, "kind": c.kind, "p": c.summary.p, "q": c.summary.q}
    text = c.kind
    if c.root is not None:
        data["root"] = c.root
        text += f" (extra eigenvalue {c.root})"
    if c.certificate is not None:
        k = c.certificate
        data.update(t=k.t, d=k.d)
        text += f" (r > 1, s < -1: {quadratic_roots_text(k.t, k.d)})"
    if c.clique_union:
        data["clique_union"] = True
        text += " (union of cliques)"
    _emit(out, data, args.json, text)
    return EXIT_OK


def cmd_forbidden_scan(args: argparse.Namespace, out: IO[str]) -> int:
    g, _ = _input_graph(args)
    hits = scan_forbidden(g, all_witnesses=args.all_witnesses)
    data = {"n": g.n, "hits": [{"name": n, "witnesses": [w.sorted() for w in ws]} for n, ws in hits]}
    text = "\n".join(f"{n}: " + " ".join(",".join(map(str, w.sorted())) for w in ws) for n, ws in hits)
    _emit(out, data, args.json, text or "no forbidden induced subgraph")
    return EXIT_OK


def cmd_verify_families(args: argparse.Namespace, out: IO[str]) -> int:
    n_max = args.nmax if args.nmax is not None else 40
    specs = enumerate_instances(n_max)
    results = [(s, verify_family(s)) for s in specs]
    bad = [str(s) for s, ok in results if not ok]
    data = {"n_max": n_max, "checked": len(results), "failed": bad}
    _emit(out, data, args.json, f"{len(results)} instances checked, {len(bad)} failed" + "".join(f"\n  {b}" for b in bad))
    return EXIT_FAIL if bad else EXIT_OK


def cmd_validate_catalog(args: argparse.Namespace, out: IO[str]) -> int:
    report = validate_catalog()
    if args.graph6_out or args.sidecar_out:
        if not (args.graph6_out and args.sidecar_out):
            raise UsageError("--graph6-out and --sidecar-out go together")
        with open(args.graph6_out, "w") as g6, open(args.sidecar_out, "w") as side:
            export_catalog(g6, side)
    data = {"ok": report.ok, "entries": [c.to_json() for c in report.checks]}
    lines = []
    for c in report.checks:
        lo, hi = c.to_json()["interval"]
        status = "ok" if c.ok else "FAIL"
        lines.append(
            f"{c.name} {c.bound_kind:<14} printed {c.printed_value:>6}  computed ({lo}, {hi}]"
            f"  bound {'ok' if c.bound_ok else 'FAIL'}  value {'ok' if c.printed_match else 'FAIL'}  {status}"
        )
    _emit(out, data, args.json, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify_theorem(args: argparse.Namespace, out: IO[str]) -> int:
    n_max = args.nmax if args.nmax is not None else 8
    stream = None
    try:
        if args.graph6_in:
            stream = sys.stdin if args.graph6_in == "-" else open(args.graph6_in)
        try:
            report = verify_classification(n_max, stream, jobs=args.jobs)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    finally:
        if stream is not None and stream is not sys.stdin:
            stream.close()
    data = report.to_json()
    lines = [
        f"graphs examined: {sum(report.graphs_examined.values())} "
        f"({sum(report.connected_examined.values())} connected)",
        f"class members found: {len(report.members_found)}",
        "matched: " + ", ".join(map(str, report.matched_specs)),
    ]
    for label, items in (
        ("unmatched", [graph6.encode(g) for g in report.unmatched]),
        ("missing", [str(s) for s in report.missing_specs]),
        ("duplicated", [str(s) for s in report.duplicate_specs]),
        ("inconsistent", [f"{graph6.encode(g)} {m}" for g, m in report.structural_errors]),
        ("unsound", [f"{graph6.encode(g)} {m}" for g, m in report.soundness_failures]),
    ):
        if items:
            lines.append(f"{label}: " + ", ".join(items))
    lines.append("OK" if report.ok else "THEOREM CHECK FAILED")
    _emit(out, data, args.json, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cospectral_mates(args: argparse.Namespace, out: IO[str]) -> int:
    n_max = args.nmax if args.nmax is not None else 34
    try:
        pairs = cospectral_mate_pairs(n_max, all_paddings=args.all_paddings)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except ConsistencyError as exc:
        out.write(f"certification failed: {exc}\n")
        return EXIT_FAIL
    data = {"n_max": n_max, "pairs": [p.to_json() for p in pairs]}

    def side(spec: FamilySpec, alpha: int) -> str:
        return f"{spec}" + (f" + {alpha}K2" if alpha else "")

    text = "\n".join(f"n={p.n:<3} {side(p.left, p.left_alpha)}  ~  {side(p.right, p.right_alpha)}" for p in pairs)
    _emit(out, data, args.json, text)
    return EXIT_OK


def cmd_ds(args: argparse.Namespace, out: IO[str]) -> int:
    spec = _family(args.spec)
    st = ds_status(spec)
    data = {"spec": str(spec), "status": "DS" if st.ds else "NotDS", "reason": st.reason}
    if st.mate is not None:
        data.update(mate=str(st.mate), mate_alpha=st.mate_alpha)
    _emit(out, data, args.json, str(st))
    return EXIT_OK


def cmd_quotient(args: argparse.Namespace, out: IO[str]) -> int:
    g, spec = _input_graph(args)
    if args.partition:
        try:
            p = parse_partition(args.partition, g.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif spec is not None:
        p = Partition(g.n, tuple(printed_partition(spec)))
    else:
        p = coarsest_equitable_refinement(g, Partition.unit(g.n))
    if not is_equitable(g, p):
        data = {"partition": str(p), "equitable": False}
        _emit(out, data, args.json, f"partition {p} is not equitable")
        return EXIT_FAIL
    q = quotient_matrix(g, p)
    rows = [[int(x) for x in row] for row in q]
    qp = quotient_char_poly(q)
    divides = verify_quotient_divides(g, p)
    data = {
        "partition": str(p),
        "equitable": True,
        "quotient": rows,
        "quotient_char_poly": list(qp),
        "divides": divides,
    }
    text = "\n".join(
        [f"partition {p}", "Q ="]
        + ["  " + " ".join(f"{x:>3}" for x in row) for row in rows]
        + [f"char poly of Q: {poly_text(qp)}", f"divides char poly of A: {'yes' if divides else 'no'}"]
    )
    _emit(out, data, args.json, text)
    return EXIT_OK if divides else EXIT_FAIL


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoeig",
        description="Graphs with at most two adjacency eigenvalues other than +1 and -1.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", nargs="?", help="graph6 string or family spec such as ii:a=1,k=16")
        p.add_argument("--family", help="family spec (alternative to the positional graph)")

    p = add("construct", cmd_construct, "build a family member and print it as graph6")
    p.add_argument("spec", help="family spec, e.g. friendship:k=16 or vi:a=3,m=5")

    graph_input(add("spectrum", cmd_spectrum, "exact spectrum summary"))
    graph_input(add("classify", cmd_classify, "spectral class (AllPmOne, OneExtra, TwoExtra, MoreThanTwo)"))

    p = add("forbidden-scan", cmd_forbidden_scan, "search for catalog entries as induced subgraphs")
    graph_input(p)
    p.add_argument("--all-witnesses", action="store_true", help="list every witness vertex set")

    p = add("verify-families", cmd_verify_families, "check every family member against its closed form")
    p.add_argument("--nmax", type=int, help="largest order (default 40)")

    p = add("validate-catalog", cmd_validate_catalog, "check the forbidden-subgraph catalog")
    p.add_argument("--graph6-out", help="write the catalog graphs here")
    p.add_argument("--sidecar-out", help="write the catalog metadata JSON here")

    p = add("verify-theorem", cmd_verify_theorem, "exhaustive sweep of all graphs up to --nmax vertices")
    p.add_argument("--nmax", type=int, help="largest order (default 8)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--graph6-in", metavar="FILE", help="graph6 stream for orders above 8 ('-' for stdin)")

    p = add("cospectral-mates", cmd_cospectral_mates, "certified cospectral pairs built from the families")
    p.add_argument("--nmax", type=int, help="largest padded order (default 34)")
    p.add_argument("--all-paddings", action="store_true", help="also list every larger common padding")

    p = add("ds", cmd_ds, "is a family member determined by its spectrum?")
    p.add_argument("spec", help="family spec")

    p = add("quotient", cmd_quotient, "quotient matrix of an equitable partition")
    graph_input(p)
    p.add_argument("--partition", help="cells separated by '|', vertices by ',' (e.g. 0|1,2,3,4)")
    return parser


def main(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("twoeig: error: --jobs must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, ContractViolation, CapacityError, OSError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"twoeig: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"twoeig: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
