"""Command-line front end.

The first stdout line of every command is machine readable (``s <RESULT> ...``);
detail lines follow and start with ``c``.  Exit codes:

    0   SAT / ok / verified
    1   UNSAT / refuted / invalid
    2   TIMEOUT / GAVE_UP / inconclusive
    64  usage error (bad flags, missing or malformed input files)

Set ``MAJPART_LOG`` to a logging level name (``debug``, ``info``, ...) for
diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .families import counterexample_147, figure2_k5, no_good_trees, triangle_nonmono
from .graph import GraphError, parse_graph, serialize_graph
from .instances import (
    InstanceSyntaxError,
    MalformedFormula,
    MalformedHypergraph,
    parse_dimacs,
    parse_hypergraph,
)
from .partition import (
    PartitionError,
    parse_partition,
    serialize_partition,
    verify_bicolor_cut,
    verify_connected_cut,
    verify_majority,
)
from .probabilistic import BadParity, pad_to_multiple_of_3, resample_majority3, tail_study, tail_study_csv
from .reductions import H3C_MAJORITY3, REDUCTIONS, reduce
from .refutation import StructureMismatch, check_certificate, refute_counterexample
from .solvers import Status, exact_bicolor_cut, exact_connected_cut, exact_majority

log = logging.getLogger("majpart")

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64
KINDS = ("majority", "bicolor-cut", "connected-cut")
_STATUS_EXIT = {Status.SAT: EXIT_OK, Status.UNSAT: EXIT_NO, Status.TIMEOUT: EXIT_UNKNOWN, Status.GAVE_UP: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Path, text: str) -> None:
    path.write_text(text)
    log.info("wrote %s", path)


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _beside(path: str, suffix: str) -> Path:
    return Path(path).with_suffix(suffix)


def cmd_gen(args) -> int:
    if args.family == "nogoodtrees":
        if args.k is None:
            raise UsageError("nogoodtrees needs --k")
        g = no_good_trees(args.k)
        note = f"no_good_trees k={args.k}"
    else:
        g = {"triangle": triangle_nonmono, "figure2": figure2_k5, "counterexample147": counterexample_147}[args.family]()
        note = args.family
    text = serialize_graph(g, comments=[note])
    if args.output:
        _write(Path(args.output), text)
        print(f"s OK {g.n} {g.m}")
        print(f"c wrote {args.output}")
    else:
        print(f"s OK {g.n} {g.m}")
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.input)
    try:
        source = parse_hypergraph(text) if args.kind == H3C_MAJORITY3 else parse_dimacs(text)
        art = reduce(args.kind, source)
    except (InstanceSyntaxError, MalformedFormula, MalformedHypergraph) as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    out = Path(args.output)
    _write(out, serialize_graph(art.graph, comments=[f"reduction {args.kind} of {Path(args.input).name}"]))
    roles = out.with_suffix(".roles.json")
    _write(roles, art.roles_json())
    print(f"s OK {art.graph.n} {art.graph.m}")
    print(f"c graph {out}")
    print(f"c roles {roles}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if args.kind == "majority":
        outcome = exact_majority(g, args.k, budget=args.budget)
    elif args.k != 2:
        raise UsageError(f"--kind {args.kind} is a 2-partition problem; --k must be 2")
    elif args.kind == "bicolor-cut":
        outcome = exact_bicolor_cut(g, budget=args.budget)
    else:
        outcome = exact_connected_cut(g, budget=args.budget)
    log.info("explored %d nodes in %.3fs", outcome.nodes_explored, outcome.elapsed)
    print(f"s {outcome.status.value}")
    if outcome.sat:
        out = Path(args.output) if args.output else _beside(args.graph, ".part")
        _write(out, serialize_partition(outcome.witness))
        print(f"c partition {out}")
    return _STATUS_EXIT[outcome.status]


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        p = parse_partition(_read(args.partition))
        if args.kind == "majority":
            report = verify_majority(g, p)
            ok, details = report.ok, report.describe()
        elif args.kind == "bicolor-cut":
            report = verify_bicolor_cut(g, p)
            ok, details = report.ok, report.describe()
        else:
            red, blue = verify_connected_cut(g, p)
            ok = red and blue
            details = [f"{name} crossing edges are not spanning connected" for name, flag in (("red", red), ("blue", blue)) if not flag]
    except PartitionError as exc:
        raise UsageError(f"{args.partition}: {exc}") from None
    print("s OK" if ok else "s INVALID")
    for line in details:
        print(f"c {line}")
    return EXIT_OK if ok else EXIT_NO


def cmd_refute(args) -> int:
    g = _load_graph(args.graph)
    try:
        cert = refute_counterexample(g)
    except StructureMismatch as exc:
        print("s INCONCLUSIVE")
        print(f"c {exc}")
        return EXIT_UNKNOWN
    out = Path(args.output) if args.output else _beside(args.graph, ".cert.json")
    _write(out, cert.to_json())
    problems = check_certificate(cert, g)
    if problems:
        print("s INCONCLUSIVE")
        for line in problems:
            print(f"c {line}")
        return EXIT_UNKNOWN
    print("s REFUTED")
    print("c no majority 3-partition exists")
    print(f"c certificate {out}")
    return EXIT_NO


def cmd_resample(args) -> int:
    g = _load_graph(args.graph)
    added = []
    if g.n % 3 and args.pad:
        g, added = pad_to_multiple_of_3(g)
    try:
        outcome = resample_majority3(g, args.seed, args.max_rounds)
    except BadParity as exc:
        raise UsageError(f"{exc} (use --pad)") from None
    print(f"s {outcome.status.value}")
    print(f"c rounds {outcome.nodes_explored}")
    if added:
        padded = _beside(args.graph, ".padded.ecg")
        _write(padded, serialize_graph(g, comments=[f"copies {' '.join(str(v + 1) for v in added)}"]))
        print(f"c padded graph {padded}")
    if outcome.sat:
        out = Path(args.output) if args.output else _beside(args.graph, ".part")
        _write(out, serialize_partition(outcome.witness))
        print(f"c partition {out}")
    return _STATUS_EXIT[outcome.status]


def cmd_tailstudy(args) -> int:
    rows = tail_study(args.trials, args.seed)
    csv = tail_study_csv(rows)
    if args.output:
        _write(Path(args.output), csv)
        print(f"s OK {len(rows)}")
        print(f"c wrote {args.output}")
    else:
        print(f"s OK {len(rows)}")
        sys.stdout.write(csv)
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="majpart", description="Majority partitions of 2-edge-colored graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a built-in graph")
    p.add_argument("family", choices=("triangle", "figure2", "counterexample147", "nogoodtrees"))
    p.add_argument("--k", type=_positive)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build a reduction graph from a CNF or hypergraph file")
    p.add_argument("kind", choices=REDUCTIONS)
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="decide a partition problem exactly")
    p.add_argument("graph")
    p.add_argument("--kind", choices=KINDS, default="majority")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--budget", type=float, help="seconds before giving up with TIMEOUT")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition file against a graph")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--kind", choices=KINDS, default="majority")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("refute", help="certify that the gadget graph has no majority 3-partition")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("resample", help="search for a balanced majority 3-partition by resampling")
    p.add_argument("graph")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--max-rounds", type=_positive, default=1000)
    p.add_argument("--pad", action="store_true", help="copy vertices until 3 divides n")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_resample)

    p = sub.add_parser("tailstudy", help="compare binomial lower tails with the Hoeffding bound (CSV)")
    p.add_argument("--trials", type=_positive, default=100_000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tailstudy)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("MAJPART_LOG")
    if level:
        logging.basicConfig(
            level=getattr(logging, level.upper(), logging.INFO),
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"majpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
