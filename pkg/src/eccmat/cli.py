"""Command-line front end: build, inspect, classify, enumerate, verify.

Exit codes are fixed for CI use: 0 success / all checks pass, 1 a
verification found counterexamples, 2 usage or parse error, 3 the input
graph violates a precondition (disconnected).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier import (
    READINGS,
    admissible_typings,
    decompose_as_star_extension,
    has_exactly_one_positive,
    predicted_one_positive,
)
from .eccentricity import eccentricity_matrix
from .errors import (
    DisconnectedGraph,
    EccmatError,
    InvalidParameters,
    MalformedGraph6,
    SizeLimitExceeded,
)
from .exact import char_poly, format_poly, inertia_from_char_poly
from .families import construct_named
from .graph6 import parse_graph6, to_graph6
from .graphs import Graph, is_connected
from .numeric import eigenvalues_symmetric
from .verify import CHECKS, resolve_check, run_check

_FAMILY_TOKENS = {
    "mixed": "mixed",
    "windmill": "windmill",
    "cs": "complete_split",
    "pineapple": "pineapple",
    "kite": "kite",
    "star": "star",
    "kn": "complete",
    "kb": "complete_bipartite",
}


class CliInputError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def parse_family_spec(text: str) -> Graph:
    """Parse strings like ``cs:5,2`` or ``mixed:-2,3`` into graphs."""
    token, sep, rest = text.partition(":")
    if not sep:
        raise CliInputError(f"family spec {text!r}: missing ':' after the family name")
    family = _FAMILY_TOKENS.get(token)
    if family is None:
        known = ", ".join(sorted(_FAMILY_TOKENS))
        raise CliInputError(f"family spec {text!r}: unknown family {token!r} (known: {known})")
    params = []
    for pos, piece in enumerate(rest.split(",")):
        try:
            params.append(int(piece))
        except ValueError:
            raise CliInputError(
                f"family spec {text!r}: parameter {pos + 1} ({piece!r}) is not an integer"
            ) from None
    try:
        return construct_named(family, params)
    except InvalidParameters as exc:
        raise CliInputError(f"family spec {text!r}: {exc}") from None


def load_edge_list(path: str) -> Graph:
    """Edge-list file: first line ``n m``, then m lines ``u v`` (0-indexed)."""
    try:
        with open(path, encoding="ascii") as fh:
            raw = [line.split() for line in fh if line.strip()]
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None
    try:
        n, m = (int(x) for x in raw[0])
        edges = [(int(u), int(v)) for u, v in raw[1 : m + 1]]
        if len(edges) != m:
            raise CliInputError(f"{path}: expected {m} edge lines, found {len(edges)}")
        return Graph.from_edges(n, edges)
    except CliInputError:
        raise
    except (ValueError, IndexError) as exc:
        raise CliInputError(f"{path}: malformed edge list ({exc})") from None


def _graph_from_args(args) -> Graph:
    picked = [x for x in (args.g6, args.family, args.edges) if x is not None]
    if len(picked) != 1:
        raise CliInputError("exactly one of --g6, --family, --edges is required")
    if args.g6 is not None:
        try:
            return parse_graph6(args.g6)
        except MalformedGraph6 as exc:
            raise CliInputError(f"graph6 input: {exc}") from None
    if args.family is not None:
        return parse_family_spec(args.family)
    return load_edge_list(args.edges)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise CliInputError("input graph is disconnected", code=3)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_spec(args) -> int:
    g = _graph_from_args(args)
    _require_connected(g)
    matrix = eccentricity_matrix(g)
    poly = char_poly(matrix)
    inr = inertia_from_char_poly(poly)
    spectrum = eigenvalues_symmetric(matrix)
    if args.json:
        record = {
            "schema": "1",
            "graph6": to_graph6(g),
            "n": g.n,
            "edges": g.edge_count(),
            "ecc_matrix": [list(row) for row in matrix],
            "char_poly": list(poly),
            "char_poly_str": format_poly(poly),
            "inertia": list(inr.as_tuple()),
            "spectrum": [round(x, 10) for x in spectrum],
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"graph6: {to_graph6(g)}")
        print(f"n: {g.n}  edges: {g.edge_count()}")
        print("eccentricity matrix:")
        width = max(len(str(x)) for row in matrix for x in row)
        for row in matrix:
            print("  " + " ".join(f"{x:>{width}}" for x in row))
        print(f"characteristic polynomial: {format_poly(poly)}")
        print(f"inertia (positive, zero, negative): {inr.as_tuple()}")
        print("spectrum: " + ", ".join(f"{x:.10f}" for x in spectrum))
    return 0


def _classify_record(g: Graph, reading: str) -> dict:
    d = decompose_as_star_extension(g)
    return {
        "schema": "1",
        "graph6": to_graph6(g),
        "n": g.n,
        "predicted": predicted_one_positive(g, reading),
        "ground_truth": has_exactly_one_positive(g),
        "reading": reading,
        "decomposition": None
        if d is None
        else {"center_size": d.center_size, "component_sizes": list(d.component_sizes)},
        "typings": [] if d is None else [list(t) for t in admissible_typings(d)],
    }


def cmd_classify(args) -> int:
    if args.stdin:
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except MalformedGraph6 as exc:
                raise CliInputError(f"graph6 input {line!r}: {exc}") from None
            _require_connected(g)
            print(json.dumps(_classify_record(g, args.reading), sort_keys=True))
        return 0
    g = _graph_from_args(args)
    _require_connected(g)
    record = _classify_record(g, args.reading)
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for key in ("graph6", "n", "predicted", "ground_truth", "decomposition", "typings"):
            print(f"{key}: {record[key]}")
    return 0


def cmd_verify(args) -> int:
    names = sorted(CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and resolve_check(args.check) is None:
        raise CliInputError(f"unknown check {args.check!r}; known: {', '.join(sorted(CHECKS))} or all")
    reports = [
        run_check(
            name,
            n_max=args.nmax,
            jobs=args.jobs,
            reading=args.reading,
            r_max=args.rmax,
            m_max=args.mmax,
            k_max=args.kmax,
            bound=args.bound,
        )
        for name in names
    ]
    if args.json:
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps({"schema": "1", "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    else:
        print("\n\n".join(r.format_text() for r in reports))
    counterexamples = [ce for r in reports for ce in r.counterexamples]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            for ce in counterexamples:
                fh.write(json.dumps(ce, sort_keys=True) + "\n")
    else:
        for ce in counterexamples:
            print(json.dumps(ce, sort_keys=True), file=sys.stderr)
    return 1 if counterexamples else 0


def cmd_enumerate(args) -> int:
    # Imported here so plain graph commands never pay the numpy import.
    from .enumeration import all_graphs_labeled, enumerate_connected

    if not 1 <= args.n <= 8:
        raise CliInputError("enumeration supports 1 <= n <= 8")
    if args.dedup and not args.connected_only:
        raise CliInputError("--dedup requires connected graphs (drop --no-connected-only)")
    stream = (
        enumerate_connected(args.n, dedup=args.dedup)
        if args.connected_only
        else all_graphs_labeled(args.n)
    )
    for g in stream:
        print(to_graph6(g))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph6 record")
    p.add_argument("--family", help="family spec, e.g. cs:5,2 | mixed:-2,3 | windmill:3,2")
    p.add_argument("--edges", help="edge-list file: first line 'n m', then 'u v' lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eccmat",
        description="Eccentricity matrices: exact spectra, classification and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spec", help="print eccentricity matrix, char poly, inertia, spectrum")
    _add_graph_input(p_spec)
    p_spec.add_argument("--json", action="store_true")
    p_spec.set_defaults(handler=cmd_spec)

    p_cls = sub.add_parser("classify", help="structural prediction vs exact inertia")
    _add_graph_input(p_cls)
    p_cls.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")
    p_cls.add_argument("--json", action="store_true")
    p_cls.add_argument("--reading", choices=READINGS, default="theorem")
    p_cls.set_defaults(handler=cmd_classify)

    checks = ", ".join(sorted(CHECKS))
    p_ver = sub.add_parser("verify", help=f"run a verification check ({checks}, or all)")
    p_ver.add_argument("check", help="check id or alias (see README), or 'all'")
    p_ver.add_argument("--nmax", type=int, default=None, help="largest graph order for census sweeps")
    p_ver.add_argument("--rmax", type=int, default=None, help="largest class size for type grids")
    p_ver.add_argument("--mmax", type=int, default=None, help="largest windmill blade parameter")
    p_ver.add_argument("--kmax", type=int, default=None, help="largest windmill blade count")
    p_ver.add_argument("--bound", type=int, default=None, help="largest order for family sweeps")
    p_ver.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_ver.add_argument("--reading", choices=READINGS, default=None)
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--out", help="write counterexamples to this file as JSON lines")
    p_ver.set_defaults(handler=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="stream graph6 lines for all graphs of order n")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    p_enum.add_argument(
        "--connected-only",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="restrict to connected graphs (default)",
    )
    p_enum.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MalformedGraph6, InvalidParameters, SizeLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EccmatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
