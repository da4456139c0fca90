"""``graphzip`` command line: generate, mine, eval."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .compressor import mine_stream
from .dictionary import PatternDictionary
from .errors import GraphZipError
from .evaluate import accuracy, stats_csv
from .generator import PATTERN_NAMES, GenConfig, PatternSpec, generate, read_truth
from .stream_io import batch_per_file, batch_stream, list_batch_files, parse_stream

#: Tuned once on the planted-pattern suite; see README.
DEFAULT_ALPHA = 10
DEFAULT_THETA = 50

log = logging.getLogger("graphzip")


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _fraction(text):
    v = float(text)
    if not 0.0 < v <= 1.0:
        raise argparse.ArgumentTypeError(f"coverage must be in (0, 1], got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="graphzip", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write a synthetic stream with a planted pattern")
    g.add_argument("--pattern", required=True, choices=PATTERN_NAMES)
    g.add_argument("--vertices", type=_positive, default=1000)
    g.add_argument("--edges", type=_positive, default=5000)
    g.add_argument("--coverage", type=_fraction, required=True)
    g.add_argument("--order", choices=("blocks", "shuffle"), default="blocks")
    g.add_argument("--directed", action="store_true")
    g.add_argument("--out", required=True)
    g.add_argument("--truth", required=True)

    m = sub.add_parser("mine", parents=[common], help="mine a stream into a pattern dictionary")
    m.add_argument("--alpha", type=_positive, default=DEFAULT_ALPHA)
    m.add_argument("--theta", type=_positive, default=DEFAULT_THETA)
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="stream file, or - for stdin")
    src.add_argument("--batch-files", help="directory with one batch per file")
    m.add_argument("--dict-out", required=True)
    m.add_argument("--stats-out")
    m.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    e = sub.add_parser("eval", parents=[common], help="score a dictionary against ground truth")
    e.add_argument("--dict", required=True)
    e.add_argument("--truth", required=True)
    return p


def cmd_generate(args) -> int:
    cfg = GenConfig(
        vertices=args.vertices, edges=args.edges, coverage=args.coverage,
        seed=args.seed, directed=args.directed, order=args.order,
    )
    out = generate(cfg, PatternSpec(args.pattern, directed=args.directed))
    Path(args.out).write_text(out.stream, encoding="utf-8")
    Path(args.truth).write_text(out.truth, encoding="utf-8")
    print(f"planted {out.plant_count} x {args.pattern}")
    return 0


def cmd_mine(args) -> int:
    if args.batch_files:
        paths = list_batch_files(args.batch_files)
        batches = batch_per_file(paths)
        alpha = args.alpha
        # each file is one batch, so alpha has to cover the largest file
        sizes = [_count_edges(p) for p in paths]
        if sizes and max(sizes) > alpha:
            log.info("raising alpha from %d to %d to fit the largest batch file", alpha, max(sizes))
            alpha = max(sizes)
    else:
        alpha = args.alpha
        batches = batch_stream(parse_stream(args.input), alpha)
    d, results = mine_stream(batches, alpha, args.theta, threads=args.threads)
    d.dump(args.dict_out)
    if args.stats_out:
        Path(args.stats_out).write_text(stats_csv(results), encoding="utf-8")
    log.info("%d batches, %d patterns, total score %d", len(results), len(d), d.total_score())
    return 0


def _count_edges(path) -> int:
    return sum(1 for rec in parse_stream(path) if rec.kind == "edge")


def cmd_eval(args) -> int:
    try:
        d = PatternDictionary.load(args.dict)
        truth = read_truth(args.truth)
    except (OSError, GraphZipError) as exc:
        print(f"graphzip eval: {exc}", file=sys.stderr)
        return 2
    report = accuracy([t[2] for t in truth], d, names=[t[0] for t in truth])
    print(report.format())
    return 0 if report.matched == report.total and report.total > 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    handlers = {"generate": cmd_generate, "mine": cmd_mine, "eval": cmd_eval}
    try:
        return handlers[args.command](args)
    except (OSError, GraphZipError) as exc:
        print(f"graphzip {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
