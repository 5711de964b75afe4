"""Command-line front end: ``gen``, ``phi``, ``check`` and ``verify``.

Exit codes: 0 success, 1 internal error (solver/oracle disagreement),
2 usage or input error, 3 ``check`` found no b-coloring, 10 refutations
present, 20 timeouts present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from bchroma import __version__
from bchroma import families as fam
from bchroma.bcolor import (
    DEFAULT_BUDGET,
    DEFINITIONS,
    ORACLE_MAX_N,
    Coloring,
    ColoringError,
    PhiTimeout,
    b_spectrum,
    b_vertices,
    first_conflict,
    is_surjective,
    phi,
    phi_oracle,
)
from bchroma.graph import Digraph, Graph, GraphError, emit_arclist, emit_edgelist, parse_edgelist, underlying
from bchroma.verify import (
    CLAIM_IDS,
    EXIT_INTERNAL,
    EXIT_TIMEOUT,
    ClaimError,
    OracleDisagreement,
    SuiteConfig,
    emit_report,
    exit_code,
    run_suite,
)

EXIT_USAGE = 2
EXIT_NOT_B = 3

GEN_FAMILIES = sorted(fam.CLASSIC_KINDS) + [
    "jaco", "ornated", "rasta", "setgraph", "edgesetgraph", "chithra", "edgejoint",
]


class UsageError(Exception):
    pass


def write_atomic(path: str | Path, data: bytes) -> None:
    """Write via a temp file in the same directory, then rename into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_edgelist(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _ints(values: list[str], what: str) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {values}") from None


def _one_input(args, family: str) -> Graph:
    if len(args.input) != 1:
        raise UsageError(f"{family} needs exactly one --input graph file")
    return read_graph(args.input[0])


def build_family(args) -> tuple[Graph, Digraph | None]:
    family, params = args.family, _ints(args.params, "family parameters")
    if family in fam.CLASSIC_KINDS:
        return fam.classic(family, *params), None
    if family == "jaco":
        if len(params) != 3:
            raise UsageError("jaco takes n m c")
        d = fam.jaco(fam.JacoParams(*params))
        return underlying(d), d
    if family == "ornated":
        if len(params) < 2:
            raise UsageError("ornated takes n followed by the string entries")
        d = fam.ornated(params[0], params[1:])
        return underlying(d), d
    if family == "rasta":
        return fam.rasta(params), None
    if family == "setgraph":
        if len(params) != 1:
            raise UsageError("setgraph takes n")
        return fam.set_graph(params[0]), None
    if family == "edgesetgraph":
        return fam.edge_set_graph(_one_input(args, family), args.shared_edge_adjacent), None
    if family == "chithra":
        if not args.w:
            raise UsageError("chithra needs at least one --w subset")
        subsets = [_ints(w.split(","), "--w entries") for w in args.w]
        return fam.chithra(_one_input(args, family), subsets), None
    if family == "edgejoint":
        if len(args.input) != 2 or args.v is None or args.u is None:
            raise UsageError("edgejoint needs two --input files plus --v and --u")
        g, h = (read_graph(p) for p in args.input)
        return fam.edge_joint(g, args.v, h, args.u), None
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(GEN_FAMILIES)}")


def cmd_gen(args) -> int:
    g, d = build_family(args)
    text = emit_edgelist(g)
    if args.output:
        write_atomic(args.output, text.encode("ascii"))
        if d is not None:
            write_atomic(f"{args.output}.arcs", emit_arclist(d).encode("ascii"))
        print(f"vertices {g.n} edges {g.m}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_phi(args) -> int:
    g = read_graph(args.graph)
    status = 0
    try:
        result = phi(g, args.budget, args.definition)
    except PhiTimeout as exc:
        print(f"timeout: {exc}")
        return EXIT_TIMEOUT
    print(f"phi {result.phi}")
    if args.witness:
        write_atomic(args.witness, (json.dumps(result.to_dict(), sort_keys=True) + "\n").encode("ascii"))
    if args.oracle:
        if g.n > ORACLE_MAX_N:
            print(f"oracle skipped: {g.n} vertices exceeds cap {ORACLE_MAX_N}")
        else:
            expected = phi_oracle(g, args.definition)
            agree = expected == result.phi
            print(f"oracle {expected} {'agrees' if agree else 'DISAGREES'}")
            if not agree:
                status = EXIT_INTERNAL
    if args.spectrum:
        spec = b_spectrum(g, args.budget, args.definition)
        print("spectrum {" + ",".join(map(str, sorted(spec.feasible))) + "}")
        if spec.undecided:
            print("undecided {" + ",".join(map(str, sorted(spec.undecided))) + "}")
            status = status or EXIT_TIMEOUT
    return status


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    try:
        coloring = Coloring.from_json(Path(args.coloring).read_text())
        conflict = first_conflict(g, coloring)
    except (OSError, ValueError) as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    if conflict is not None:
        print(f"proper: no at edge ({conflict[0]},{conflict[1]})")
        print("b-coloring: no")
        return EXIT_NOT_B
    print("proper: yes")
    if not is_surjective(coloring):
        empty = sorted(set(range(1, coloring.k + 1)) - set(coloring.colors))
        print(f"surjective: no, class {empty[0]} is empty")
        print("b-coloring: no")
        return EXIT_NOT_B
    print("surjective: yes")
    bv = b_vertices(g, coloring)
    missing = [c for c, vs in sorted(bv.items()) if not vs]
    if missing:
        print(f"b-coloring: no, class {missing[0]} lacks a b-vertex")
        return EXIT_NOT_B
    print("b-coloring: yes")
    for c, vs in sorted(bv.items()):
        print(f"class {c} b-vertex {min(vs)}")
    return 0


def _claims(values: list[str]) -> tuple[str, ...]:
    names = [n.strip() for v in values for n in v.split(",") if n.strip()]
    if not names or "all" in names:
        return CLAIM_IDS
    return tuple(dict.fromkeys(names))


def cmd_verify(args) -> int:
    config = SuiteConfig(
        claims=_claims(args.claims),
        max_n=args.max_n,
        n=args.n,
        budget=args.budget,
        workers=args.workers,
        deterministic=args.deterministic,
        definition=args.definition,
    )
    try:
        report = run_suite(config)
    except ClaimError as exc:
        raise UsageError(str(exc)) from None
    except OracleDisagreement as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        write_atomic(args.json, emit_report(report, "json"))
    sys.stdout.write(emit_report(report, args.format).decode())
    return exit_code(report)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("BCHROMA_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bchroma", description="Exact b-chromatic numbers and claim verification.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a family instance as an edge list")
    gen.add_argument("family", help=f"one of: {', '.join(GEN_FAMILIES)}")
    gen.add_argument("params", nargs="*", help="integer family parameters")
    gen.add_argument("-o", "--output", help="edge-list output path (stdout when omitted)")
    gen.add_argument("-i", "--input", action="append", default=[], help="input graph file(s)")
    gen.add_argument("--w", action="append", help="Chithra subset, comma-separated 1-based vertices")
    gen.add_argument("--v", type=int, help="edge-joint endpoint in the first graph")
    gen.add_argument("--u", type=int, help="edge-joint endpoint in the second graph")
    gen.add_argument("--shared-edge-adjacent", action="store_true",
                     help="edge-set graph: subsets sharing an edge are adjacent")
    gen.set_defaults(func=cmd_gen)

    ph = sub.add_parser("phi", help="compute the b-chromatic number of an edge-list file")
    ph.add_argument("graph")
    ph.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 9)")
    ph.add_argument("--spectrum", action="store_true", help="print every feasible k")
    ph.add_argument("--witness", help="write the witness coloring as JSON")
    ph.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ph.add_argument("--definition", choices=DEFINITIONS, default="standard")
    ph.set_defaults(func=cmd_phi)

    ck = sub.add_parser("check", help="check a coloring JSON against a graph")
    ck.add_argument("graph")
    ck.add_argument("coloring")
    ck.set_defaults(func=cmd_check)

    ver = sub.add_parser("verify", help="run the claim verification suite")
    ver.add_argument("--claims", action="append", default=[], help="claim ids, comma-separated, or 'all'")
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--n", type=int)
    ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ver.add_argument("--workers", type=int, default=_default_workers())
    ver.add_argument("--deterministic", action="store_true", help="zero timings for byte-identical output")
    ver.add_argument("--definition", choices=DEFINITIONS, default="standard")
    ver.add_argument("--json", help="write the JSON report to this path")
    ver.add_argument("--format", choices=("text", "json"), default="text", help="stdout format")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
