"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

import argparse
import json
import sys
from typing import List, Optional

from utsw.errors import UtswError
from utsw.experiments import EXPERIMENTS, ExperimentConfig, format_rows, run_experiment
from utsw.io import format_graph, format_labels, read_graph, read_labels
from utsw.labeling import label_graph
from utsw.model import generate_utsw
from utsw.routing import build_routing_tables, myopic_route
from utsw.torus import label_distance

EXIT_USAGE = 1
EXIT_RUNTIME = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _n_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as f:
            f.write(text)


def cmd_generate(args) -> None:
    if args.n < 3:
        raise UsageError(f"--n must be >= 3, got {args.n}")
    _emit(format_graph(generate_utsw(args.n, args.seed)), args.out)


def cmd_label(args) -> None:
    g = read_graph(args.infile)
    if g.n < 5:
        raise UsageError(f"labeling needs n >= 5, graph has n = {g.n}")
    _emit(format_labels(label_graph(g.view(), args.seed)), args.out)


def cmd_route(args) -> None:
    g = read_graph(args.infile)
    labeling = read_labels(args.labels, g.n)
    size = g.n * g.n
    for name, v in (("--src", args.src), ("--dst", args.dst)):
        if not 0 <= v < size:
            raise UsageError(f"{name} must be in [0, {size}), got {v}")
    tables = build_routing_tables(g.view(), labeling)
    res = myopic_route(tables, labeling, args.src, args.dst, args.hop_limit)
    if args.trace:
        for v, port in zip(res.path, res.ports):
            lx, ly = labeling.labels[v]
            print(f"{v} {lx} {ly} {port}")
    ls, lt = labeling.labels[args.src], labeling.labels[args.dst]
    dist = label_distance(g.n, ls, lt) if ls is not None and lt is not None else None
    stretch = res.hops / dist if res.delivered and dist else None
    print(json.dumps({
        "delivered": res.delivered,
        "status": res.status.value,
        "hops": res.hops,
        "distance": dist,
        "stretch": stretch,
    }))


def cmd_experiment(args) -> None:
    cfg = ExperimentConfig(
        n_list=args.n_list,
        seeds=args.seeds,
        base_seed=args.base_seed,
        trials=args.trials,
        out=args.out,
        fmt=args.format,
    )
    try:
        cfg.validate(min_n=3 if args.name == "zbounds" else 5)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(format_rows(args.name, run_experiment(args.name, cfg), cfg.fmt), cfg.out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="utsw", description="Toroidal small-world graphs: generate, label, route.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a seeded UTSW graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", default=None, help="output path (default stdout)")
    g.set_defaults(func=cmd_generate)

    lb = sub.add_parser("label", help="recover torus labels for a graph file")
    lb.add_argument("--in", dest="infile", required=True)
    lb.add_argument("--seed", type=int, required=True)
    lb.add_argument("--out", default=None)
    lb.set_defaults(func=cmd_label)

    r = sub.add_parser("route", help="greedy route between two vertices")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--labels", required=True)
    r.add_argument("--src", type=int, required=True)
    r.add_argument("--dst", type=int, required=True)
    r.add_argument("--hop-limit", type=int, default=None)
    r.add_argument("--trace", action="store_true", help="print one line per hop")
    r.set_defaults(func=cmd_route)

    e = sub.add_parser("experiment", help="run a seeded experiment and emit CSV or JSON")
    e.add_argument("name", choices=EXPERIMENTS)
    e.add_argument("--n-list", type=_n_list, default=[10, 100, 150])
    e.add_argument("--seeds", type=int, default=30)
    e.add_argument("--base-seed", type=int, default=0)
    e.add_argument("--trials", type=int, default=1000)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as e:
        print(f"utsw: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UtswError, OSError, ValueError) as e:
        print(f"utsw: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    return 0


if __name__ == "__main__":
    sys.exit(main())
