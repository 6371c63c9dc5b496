"""Command line interface.

Exit status: 0 when every check passes (skips allowed), 1 when any check
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .betti import LATTICE_CAP, betti_table
from .enumeration import enumerate_forests, enumerate_graphs, enumerate_unicyclic
from .errors import ResourceError
from .graph6 import encode_graph6, parse_graph6
from .graphs import GraphError, SimpleGraph, parse_edge_list
from .harness import CHECKS, CORPORA, Config, field_label
from .linalg import is_prime
from .symbolic import edge_ideal, symbolic_power


def parse_field(text: str) -> int:
    if text == "q":
        return 0
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            p = -1
        if is_prime(p):
            return p
    raise argparse.ArgumentTypeError(f"invalid field {text!r}; use q or fp:P with P prime")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", type=Path, help="edge-list file")
    p.add_argument("--g6", help="graph6 string")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", action="append", type=parse_field, dest="fields",
                   help="q (rationals, default) or fp:P; repeatable")
    p.add_argument("--lattice-cap", type=_positive, default=LATTICE_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgereg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("reg", "regularity of I(G)^s or I(G)^(s)"),
        ("betti", "multigraded Betti table of I(G)^s or I(G)^(s)"),
        ("power", "minimal generators of I(G)^s"),
        ("symbolic", "minimal generators of I(G)^(s)"),
    ]:
        p = sub.add_parser(name, help=helptext)
        _add_graph_args(p)
        _add_common(p)
        p.add_argument("--s", type=_positive, default=1, help="exponent (default 1)")
        if name in ("reg", "betti"):
            p.add_argument("--symbolic", action="store_true", help="use the symbolic power")

    for name in CHECKS:
        p = sub.add_parser(name, help=f"run the {name[6:]} campaign")
        _add_graph_args(p)
        _add_common(p)
        p.add_argument("--max-n", type=int, default=7)
        p.add_argument("--max-s", type=int, default=3)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", type=Path)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--corpus", choices=CORPORA, default="unicyclic")
        p.add_argument("--partition-cap", type=_positive, default=64)
        p.add_argument("--forest-max-n", type=int)
        if name == "check-case2":
            p.add_argument("--intermediate", action="store_true",
                           help="also check the intermediate inequalities")

    p = sub.add_parser("enumerate", help="list a graph corpus in graph6")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--corpus", choices=CORPORA + ("forests",), default="unicyclic")
    p.add_argument("--out", type=Path)
    return parser


def _load_graph(args, parser) -> SimpleGraph | None:
    if args.graph and args.g6:
        parser.error("--graph and --g6 are mutually exclusive")
    try:
        if args.graph:
            return parse_edge_list(args.graph.read_text())
        if args.g6:
            return parse_graph6(args.g6)
    except OSError as exc:
        parser.error(f"--graph: {exc}")
    except GraphError as exc:
        flag = "--graph" if args.graph else "--g6"
        parser.error(f"{flag}: {exc}")
    return None


def _ideal(G: SimpleGraph, s: int, symbolic: bool):
    return symbolic_power(G, s) if symbolic else edge_ideal(G) ** s


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)


def _dispatch(args, parser) -> int:
    cmd = args.command

    if cmd == "enumerate":
        if args.max_n < args.min_n or args.min_n < 1:
            parser.error("--max-n must be at least --min-n, which must be positive")
        lines = []
        for n in range(args.min_n, args.max_n + 1):
            if args.corpus == "unicyclic":
                if n < 3:
                    continue
                gen = enumerate_unicyclic(n)
            elif args.corpus == "forests":
                gen = enumerate_forests(n)
            else:
                gen = (G for G in enumerate_graphs(n, connected=True)
                       if args.corpus == "all-small" or G.is_bipartite())
            lines.extend(encode_graph6(G) for G in gen)
        _emit("".join(line + "\n" for line in lines), args.out)
        return 0

    fields = tuple(args.fields or (0,))
    G = _load_graph(args, parser)

    if cmd in ("reg", "betti", "power", "symbolic"):
        if G is None:
            parser.error("one of --graph or --g6 is required")
        if not G.edges:
            parser.error("the graph has no edges")
        try:
            if cmd == "power":
                print(_ideal(G, args.s, False))
            elif cmd == "symbolic":
                print(_ideal(G, args.s, True))
            else:
                I = _ideal(G, args.s, args.symbolic)
                tables = {p: betti_table(I, p, args.lattice_cap) for p in fields}
                for p, table in tables.items():
                    prefix = f"{field_label(p)}: " if len(fields) > 1 else ""
                    if cmd == "reg":
                        print(f"{prefix}{table.regularity()}")
                    else:
                        if prefix:
                            print(f"# {field_label(p)}")
                        print(table.render())
        except ResourceError as exc:
            print(f"resource limit: {exc}", file=sys.stderr)
            return 1
        return 0

    try:
        cfg = Config(
            max_n=args.max_n, max_s=args.max_s, fields=fields,
            lattice_cap=args.lattice_cap, jobs=args.jobs, corpus=args.corpus,
            seed=args.seed, partition_cap=args.partition_cap,
            forest_max_n=args.forest_max_n,
            case2_intermediate=getattr(args, "intermediate", False),
            graphs=None if G is None else (G,),
        )
    except ValueError as exc:
        flag = {"max_n": "--max-n", "max_s": "--max-s", "jobs": "--jobs"}
        name = next((f for k, f in flag.items() if k in str(exc)), "")
        parser.error(f"{name}: {exc}" if name else str(exc))
    report = CHECKS[cmd](cfg)
    text = report.to_json() if args.format == "json" else report.to_csv()
    _emit(text, args.out)
    print(report.summary_text(), file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(run_cli())
