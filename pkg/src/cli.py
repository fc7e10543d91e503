#!/usr/bin/env python3
# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command-line entry point."""

import argparse
import hashlib
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from bounds import THEOREM_ALIASES, certify, certify_all
from config import Settings
from domination import check_3n7, gamma_t, onh, pipeline_3n7
from errors import InstanceTooHard, TransversalLabError, Unsupported
from family_b import generate_all_b, verify_lemma5
from formats import (
    format_graph,
    format_hypergraph,
    read_graph,
    read_hypergraph,
    write_certificate,
    write_graph,
    write_hypergraph,
)
from hypergraph import Hypergraph
from instances import GeneratorConfig, named, predicates, random_hypergraph, scan_conjectures, write_violation_artifacts
from literals import (
    CERTIFICATE_SUFFIX,
    EXIT_FAILED,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    HYPERGRAPH_SUFFIX,
    LOG_LEVELS,
    MIN_DEGREE_3N7,
    PROGRESS_EVERY,
    TOOL_NAME,
    TOOL_VERSION,
)
from log import log_command, setup_logging
from solver import tau_bnb, tau_bruteforce

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    """What a command handler hands back to main.

    Attrs:
        code: exit code.
        result: JSON payload.
        lines: human-readable summary.
        inputs: input file digests.
    """

    code: int
    result: dict
    lines: list = field(default_factory=list)
    inputs: dict = field(default_factory=dict)


def _digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _code(passed):
    return EXIT_OK if passed else EXIT_FAILED


@log_command(logger)
def solve(args):
    """Compute τ of a hypergraph file."""
    hypergraph = read_hypergraph(args.file)
    if args.engine == "brute":
        if args.include or args.forbid:
            raise ValueError("--include and --forbid need the bnb engine")
        solved = tau_bruteforce(hypergraph)
    else:
        solved = tau_bnb(
            hypergraph,
            must_include=args.include,
            forbidden=args.forbid,
            canonical=args.canonical,
            node_budget=args.node_budget,
        )
    witness = sorted(solved.witness.vertices)
    result = {
        "tau": solved.tau,
        "witness": witness,
        "nodes": solved.stats.nodes,
        "digest": hypergraph.digest(),
    }
    return Outcome(EXIT_OK, result, [f"tau = {solved.tau}", f"witness = {witness}"], {args.file: _digest(args.file)})


@log_command(logger)
def bound(args):
    """Certify one inequality on a hypergraph file."""
    hypergraph = read_hypergraph(args.file)
    report = certify(hypergraph, THEOREM_ALIASES[args.theorem], node_budget=args.node_budget)
    line = f"{report.theorem_id.value}: {report.lhs} <= {report.rhs} {'holds' if report.passed else 'FAILS'}"
    if report.holds and not report.strict:
        line += " (equality)"
    lines = [line] + ([report.equality_diagnosis] if report.equality_diagnosis else [])
    return Outcome(_code(report.passed), report.to_dict(), lines, {args.file: _digest(args.file)})


@log_command(logger)
def certify_file(args):
    """Certify every applicable inequality on a hypergraph file."""
    hypergraph = read_hypergraph(args.file)
    reports = certify_all(hypergraph, node_budget=args.node_budget)
    lines = [f"{r.theorem_id.value}: {r.lhs} <= {r.rhs} {'holds' if r.passed else 'FAILS'}" for r in reports]
    result = {"reports": [r.to_dict() for r in reports]}
    return Outcome(_code(all(r.passed for r in reports)), result, lines, {args.file: _digest(args.file)})


@log_command(logger)
def gen_b(args):
    """Write every member of B up to --max-n with its certificate."""
    out = Path(args.out)
    counts = {}
    for member in generate_all_b(args.max_n):
        n = member.hypergraph.vertex_count
        counts[n] = counts.get(n, 0) + 1
        stem = out / f"b-n{n:02d}-{counts[n]:04d}"
        write_hypergraph(stem.with_suffix(HYPERGRAPH_SUFFIX), member.hypergraph)
        write_certificate(stem.with_suffix(CERTIFICATE_SUFFIX), member.certificate)
    total = sum(counts.values())
    result = {"members": total, "by_order": {str(n): c for n, c in sorted(counts.items())}, "out": str(out)}
    return Outcome(EXIT_OK, result, [f"{total} members written to {out}"])


def _verify(member, node_budget):
    return verify_lemma5(member, node_budget=node_budget)


@log_command(logger)
def verify_lemma5_all(args):
    """Generate every member of B up to --max-n and check the structural lemma on each."""
    members = list(generate_all_b(args.max_n))
    budgets = [args.node_budget] * len(members)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as executor:
            reports = list(executor.map(_verify, members, budgets))
    else:
        reports = []
        for count, member in enumerate(members, start=1):
            reports.append(_verify(member, args.node_budget))
            if count % PROGRESS_EVERY == 0:
                logger.info(f"verified {count}/{len(members)} members")
    entries = []
    failed = 0
    for member, report in zip(members, reports):
        if not report.passed:
            failed += 1
            logger.error(f"member {member.hypergraph.digest()[:12]} fails parts {sorted(report.notes)}")
        entries.append({"digest": member.hypergraph.digest(), **report.to_dict()})
    result = {"members": len(members), "failed": failed, "reports": entries}
    return Outcome(_code(failed == 0), result, [f"{len(members)} members checked, {failed} failed"])


def _generator_config(args, seed):
    if args.regular is not None:
        return GeneratorConfig(k=args.k, n=args.n, mode="regular", d=args.regular, seed=seed, m=args.m)
    if args.max_degree is not None:
        return GeneratorConfig(k=args.k, n=args.n, mode="max_degree", d=args.max_degree, seed=seed, m=args.m)
    return GeneratorConfig(k=args.k, n=args.n, mode="linear", d=None, seed=seed, m=args.m)


@log_command(logger)
def random_instance(args):
    """Generate a seeded random hypergraph."""
    hypergraph = random_hypergraph(_generator_config(args, args.seed))
    lines = []
    if args.output:
        write_hypergraph(args.output, hypergraph)
        lines.append(f"written to {args.output}")
    elif not args.json:
        lines.append(format_hypergraph(hypergraph).rstrip("\n"))
    result = {"n": hypergraph.vertex_count, "m": hypergraph.m, "digest": hypergraph.digest()}
    if not args.output:
        result["edges"] = [list(e) for e in hypergraph.canonical_edges]
    return Outcome(EXIT_OK, result, lines)


@log_command(logger)
def instance(args):
    """Emit a named instance."""
    value = named(args.name)
    if isinstance(value, Hypergraph):
        result = {"kind": "hypergraph", "digest": value.digest(), **predicates(value)}
        if args.output:
            write_hypergraph(args.output, value)
        text = format_hypergraph(value)
    else:
        result = {"kind": "graph", "n": value.number_of_nodes(), "m": value.number_of_edges()}
        if args.output:
            write_graph(args.output, value)
        text = format_graph(value)
    lines = [f"written to {args.output}"] if args.output else [text.rstrip("\n")]
    return Outcome(EXIT_OK, result, lines)


@log_command(logger)
def onh_file(args):
    """Write the open neighborhood hypergraph of a graph file."""
    hypergraph = onh(read_graph(args.file))
    write_hypergraph(args.output, hypergraph)
    result = {"n": hypergraph.vertex_count, "m": hypergraph.m, "digest": hypergraph.digest(), "out": args.output}
    return Outcome(EXIT_OK, result, [f"written to {args.output}"], {args.file: _digest(args.file)})


@log_command(logger)
def gammat(args):
    """Compute the total domination number of a graph file."""
    graph = read_graph(args.file)
    inputs = {args.file: _digest(args.file)}
    value = gamma_t(graph, node_budget=args.node_budget)
    result = {"n": graph.number_of_nodes(), "gamma_t": value}
    lines = [f"gamma_t = {value}"]
    if not args.pipeline:
        return Outcome(EXIT_OK, result, lines, inputs)
    pipeline = pipeline_3n7(graph, node_budget=args.node_budget)
    report = check_3n7(graph, node_budget=args.node_budget)
    result["pipeline"] = {
        "bound": pipeline.bound,
        "size": len(pipeline.dominating_set),
        "set": sorted(pipeline.dominating_set.vertices),
        "peeled": list(pipeline.peeled),
        "holds": pipeline.holds,
    }
    result["bound"] = report.to_dict()
    lines.append(f"pipeline set of size {len(pipeline.dominating_set)}, bound {pipeline.bound}")
    if report.equality_diagnosis:
        lines.append(report.equality_diagnosis)
    return Outcome(_code(pipeline.holds and report.passed), result, lines, inputs)


def _vertex_list(text):
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def _seed_range(text):
    try:
        low, high = (int(part) for part in text.split("..", 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if high < low:
        raise argparse.ArgumentTypeError(f"empty seed range {text!r}")
    return range(low, high + 1)


@log_command(logger)
def scan(args):
    """Scan seeded random instances against a conjectured bound."""
    if args.which == "c1":
        cfg = GeneratorConfig(k=args.k, n=args.n, mode="max_degree", d=3, m=args.m)
    else:
        cfg = GeneratorConfig(k=4, n=args.n, mode="linear", d=None, m=args.m)
    report = scan_conjectures(cfg, args.which, args.seeds, node_budget=args.node_budget, jobs=args.jobs)
    result = report.to_dict()
    lines = [
        f"{report.instances} instances, {len(report.violations)} violations, {len(report.tight)} tight",
        f"max ratio {result['max_ratio']}",
    ]
    if report.violations:
        written = write_violation_artifacts(report, cfg, args.out)
        result["artifacts"] = [str(path) for path in written]
        lines.append(f"violation artifacts written to {args.out}")
    if report.disagreements:
        lines.append(f"{len(report.disagreements)} solver disagreements")
    return Outcome(_code(not report.violations and not report.disagreements), result, lines)


def build_parser():
    """Build the argument parser.

    Returns:
        argparse.ArgumentParser.
    """
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Hypergraph transversal toolkit.")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="logging level (default from environment)")
    parser.add_argument("--node-budget", type=int, help="branch-and-bound node budget")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report")
    parallel = argparse.ArgumentParser(add_help=False)
    parallel.add_argument("--jobs", type=int, help="worker processes")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("solve", parents=[common], help="compute tau of a hypergraph")
    sub.add_argument("file")
    sub.add_argument("--engine", choices=("bnb", "brute"), default="bnb", help="solver engine")
    sub.add_argument(
        "--include", type=_vertex_list, default=(), metavar="V,...", help="vertices every transversal must contain"
    )
    sub.add_argument(
        "--forbid", type=_vertex_list, default=(), metavar="V,...", help="vertices no transversal may contain"
    )
    sub.add_argument("--canonical", action="store_true", help="return the lexicographically smallest witness")
    sub.set_defaults(handler=solve)

    sub = commands.add_parser("bound", parents=[common], help="certify one inequality")
    sub.add_argument("file")
    sub.add_argument("--theorem", choices=sorted(THEOREM_ALIASES), required=True)
    sub.set_defaults(handler=bound)

    sub = commands.add_parser("certify", parents=[common], help="certify every applicable inequality")
    sub.add_argument("file")
    sub.set_defaults(handler=certify_file)

    sub = commands.add_parser("gen-b", parents=[common], help="generate the family B")
    sub.add_argument("--max-n", type=int, required=True)
    sub.add_argument("--out", required=True, help="output directory")
    sub.set_defaults(handler=gen_b)

    sub = commands.add_parser("verify-lemma5", parents=[common, parallel], help="check structural properties of B")
    sub.add_argument("--max-n", type=int, required=True)
    sub.set_defaults(handler=verify_lemma5_all)

    sub = commands.add_parser("random", parents=[common], help="generate a random hypergraph")
    sub.add_argument("--k", type=int, default=4)
    sub.add_argument("--n", type=int, required=True)
    mode = sub.add_mutually_exclusive_group(required=True)
    mode.add_argument("--regular", type=int, metavar="D")
    mode.add_argument("--max-degree", type=int, metavar="D")
    mode.add_argument("--linear", action="store_true")
    sub.add_argument("--m", type=int, help="target edge count")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("-o", "--output")
    sub.set_defaults(handler=random_instance)

    sub = commands.add_parser("instance", parents=[common], help="emit a named instance")
    sub.add_argument("name")
    sub.add_argument("-o", "--output")
    sub.set_defaults(handler=instance)

    sub = commands.add_parser("onh", parents=[common], help="open neighborhood hypergraph of a graph")
    sub.add_argument("file")
    sub.add_argument("-o", "--output", required=True)
    sub.set_defaults(handler=onh_file)

    sub = commands.add_parser("gammat", parents=[common], help="total domination number of a graph")
    sub.add_argument("file")
    sub.add_argument("--pipeline", action="store_true", help=f"run the 3n/7 construction (min degree {MIN_DEGREE_3N7})")
    sub.set_defaults(handler=gammat)

    sub = commands.add_parser("scan", parents=[common, parallel], help="scan random instances against a conjecture")
    sub.add_argument("which", choices=("c1", "c2", "c3"))
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, default=4, help="uniformity for c1")
    sub.add_argument("--m", type=int, help="target edge count")
    sub.add_argument("--seeds", type=_seed_range, required=True, help="inclusive seed range A..B")
    sub.add_argument("--out", default="scan-artifacts", help="directory for violation artifacts")
    sub.set_defaults(handler=scan)
    return parser


def _emit(args, outcome, started):
    if args.json:
        report = {
            "command": args.command,
            "version": TOOL_VERSION,
            "inputs": outcome.inputs,
            "result": outcome.result,
            "timings": {"wall_ms": round((time.perf_counter() - started) * 1000, 3)},
            "exit_code": outcome.code,
        }
        print(json.dumps(report, sort_keys=True))
    else:
        for line in outcome.lines:
            print(line)


def main(argv=None):
    """Run the command line.

    Args:
        argv: arguments without the program name; defaults to sys.argv[1:].

    Returns:
        Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        settings = Settings.from_env()
    except ValueError as exc:
        print(f"{TOOL_NAME}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(args.log_level or settings.log_level)
    if args.node_budget is None:
        args.node_budget = settings.node_budget
    if getattr(args, "jobs", None) is None:
        args.jobs = settings.jobs
    started = time.perf_counter()
    try:
        outcome = args.handler(args)
    except (Unsupported, InstanceTooHard) as exc:
        logger.warning(f"{args.command}: {exc}")
        print(f"{TOOL_NAME}: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ValueError, OSError, TransversalLabError) as exc:
        print(f"{TOOL_NAME}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, outcome, started)
    return outcome.code


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
