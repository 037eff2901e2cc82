"""Command-line entry point.

Subcommands: ``sample``, ``metrics``, ``point-stats``, ``distributions``, ``gen``.
Exit codes: 0 success, 1 usage or configuration error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .exceptions import ConfigError, GraphError
from .experiments import ExperimentConfig, load_config_file, run_distributions, run_point_statistics
from .graph import LoadOptions, load_edge_list
from .io import write_edge_list, write_sample
from .metrics import summarize
from .samplers import METHODS, sample
from .testkit import GraphSpec, make_graph

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_load_flags(p):
    p.add_argument("input", help="edge-list file (.gz accepted)")
    p.add_argument("--comment", action="append", default=None,
                   help="comment line prefix (repeatable; default '#' and '%%')")
    p.add_argument("--keep-self-loops", action="store_true",
                   help="fail on self-loops instead of dropping them")


def _load_opts(args):
    prefixes = set(args.comment) if args.comment else {"#", "%"}
    return LoadOptions(comment_prefixes=prefixes, drop_self_loops=not args.keep_self_loops)


def _add_experiment_flags(p):
    p.add_argument("dataset_path", nargs="?", help="edge-list file")
    p.add_argument("--config", help="flat key=value config file; flags override it")
    p.add_argument("--methods", help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--fractions", help="comma-separated sampling fractions")
    p.add_argument("--repetitions", type=int)
    p.add_argument("--base-seed", type=int)
    p.add_argument("--path-length-mode", help="auto, exact or sampled(k)")
    p.add_argument("--output-dir", "-o")
    p.add_argument("--output-format", choices=["csv", "json"])
    p.add_argument("--dist-phi", type=float)
    p.add_argument("--dataset-name")


def _experiment_config(args) -> ExperimentConfig:
    values = load_config_file(args.config) if args.config else {}
    for key in ("dataset_path", "methods", "fractions", "repetitions", "base_seed",
                "path_length_mode", "output_dir", "output_format", "dist_phi", "dataset_name"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    if not values.get("dataset_path"):
        raise ConfigError("no dataset given (positional argument or dataset_path in config)")
    return ExperimentConfig(**values)


def build_parser():
    parser = _Parser(prog="graphsampling", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sample", help="draw one sample and print it")
    _add_load_flags(p)
    p.add_argument("--method", default="WES", type=str.upper, choices=METHODS)
    p.add_argument("--phi", type=float, default=0.06)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", help="write here instead of stdout")

    p = sub.add_parser("metrics", help="point statistics of a graph as JSON")
    _add_load_flags(p)
    p.add_argument("--sources", default="auto",
                   help="BFS sources for path length: auto, exact or an integer")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("point-stats", help="ratios, confidence intervals and RMSE across fractions")
    _add_experiment_flags(p)

    p = sub.add_parser("distributions", help="ECDFs and KS distances at one fraction")
    _add_experiment_flags(p)

    p = sub.add_parser("gen", help="emit a synthetic graph as an edge list")
    p.add_argument("kind", choices=["complete", "path", "star", "cycle", "erdos_renyi", "er"])
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    return parser


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def _cmd_sample(args):
    g = load_edge_list(args.input, _load_opts(args))
    s = sample(g, args.method, args.phi, args.seed)
    out = _open_out(args.output)
    try:
        write_sample(g, s, out)
    finally:
        if out is not sys.stdout:
            out.close()


def _cmd_metrics(args):
    g = load_edge_list(args.input, _load_opts(args))
    src = args.sources
    if src not in ("auto", "exact"):
        try:
            src = int(src)
        except ValueError:
            raise ConfigError(f"--sources must be auto, exact or an integer, got {src!r}") from None
    summary = summarize(g, None if src == "exact" else src, args.seed)
    json.dump(summary.as_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_point_stats(args):
    cfg = _experiment_config(args)
    report = run_point_statistics(cfg)
    for path in report.write(cfg.output_dir, cfg.output_format):
        print(path)


def _cmd_distributions(args):
    cfg = _experiment_config(args)
    report = run_distributions(cfg)
    for path in report.write(cfg.output_dir, cfg.output_format):
        print(path)


def _cmd_gen(args):
    g = make_graph(GraphSpec(args.kind, args.n, args.p, args.seed))
    out = _open_out(args.output)
    try:
        write_edge_list(g, out)
    finally:
        if out is not sys.stdout:
            out.close()


_COMMANDS = {
    "sample": _cmd_sample,
    "metrics": _cmd_metrics,
    "point-stats": _cmd_point_stats,
    "distributions": _cmd_distributions,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _COMMANDS[args.command](args)
    except (GraphError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ConfigError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
