"""Command-line entry point: ``kirchhoff-bounds <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import KirchhoffError, MixedSeries
from .experiments import ExperimentConfig, emit_plot, read_csv, run, split_series
from .graph import read_edge_list


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_run_flags(p: argparse.ArgumentParser, sweep: bool) -> None:
    p.add_argument("--sizes", type=_sizes, default=(10,), help="comma-separated vertex counts")
    p.add_argument("--p", type=float, default=0.5, help="ER link probability")
    p.add_argument("--reps", type=int, default=1, help="replications per size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--graph-in", help="edge-list file to analyse instead of ER graphs")
    if sweep:
        p.add_argument("--h-max", type=int, default=10, help="largest number of links changed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchhoff-bounds",
        description="Kirchhoff-index lower bounds under link addition/removal.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_flags(sub.add_parser("table-add", help="one-link addition comparison"), sweep=False)
    _add_run_flags(sub.add_parser("table-remove", help="one-link removal comparison"), sweep=False)
    _add_run_flags(sub.add_parser("sweep", help="h-link addition and removal sweeps"), sweep=True)
    pl = sub.add_parser("plot", help="render sweep CSV series as SVG")
    pl.add_argument("--in", dest="csv_in", required=True, help="sweep CSV")
    pl.add_argument("--out", required=True,
                    help="SVG path; with several series, a directory for one SVG each")
    pl.add_argument("--mode", choices=("sweep_add", "sweep_remove", "table_add", "table_remove"))
    pl.add_argument("--n", type=int)
    pl.add_argument("--rep", type=int)
    return parser


def _run_experiment(args) -> None:
    mode = {"table-add": "table_add", "table-remove": "table_remove", "sweep": "sweep"}[args.command]
    graph = read_edge_list(args.graph_in) if args.graph_in else None
    config = ExperimentConfig(
        mode=mode, sizes=args.sizes, p=args.p, h_max=getattr(args, "h_max", 1),
        reps=args.reps, seed=args.seed, output_path=args.out, graph=graph)
    records = run(config)
    print(f"wrote {len(records)} records to {args.out}")


def _plot(args) -> None:
    records = [
        r for r in read_csv(args.csv_in)
        if (args.mode is None or r.mode == args.mode)
        and (args.n is None or r.n == args.n)
        and (args.rep is None or r.rep == args.rep)
    ]
    series = split_series(records)
    if not series:
        raise MixedSeries("no records match the selection")
    out = Path(args.out)
    if len(series) == 1:
        emit_plot(records, out)
        print(f"wrote {out}")
        return
    out.mkdir(parents=True, exist_ok=True)
    for (mode, n, rep), rows in sorted(series.items()):
        target = out / f"{mode}_n{n}_rep{rep}.svg"
        emit_plot(rows, target)
        print(f"wrote {target}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "plot":
            _plot(args)
        else:
            _run_experiment(args)
    except (KirchhoffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
