# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Integration test helpers."""

import json
import logging
import random
from pathlib import Path

import jsonschema

from cli import main

logger = logging.getLogger(__name__)

SCHEMA = json.loads((Path(__file__).parents[2] / "schema" / "run_report.schema.json").read_text())


def sizes(full, full_count, reduced_count):
    """Pick an instance count for an acceptance suite.

    Args:
        full: whether --acceptance was given.
        full_count: count for the full suite.
        reduced_count: count for the default run.

    Returns:
        The instance count.
    """
    return full_count if full else reduced_count


def run_cli(capsys, *argv):
    """Run the command line and capture its output.

    Args:
        capsys: pytest capture fixture.
        argv: command-line arguments.

    Returns:
        Tuple of exit code, stdout and stderr.
    """
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    logger.info(f"cli {' '.join(map(str, argv))} -> {code}")
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    """Run the command line with --json and validate the run report.

    Args:
        capsys: pytest capture fixture.
        argv: command-line arguments, subcommand first.

    Returns:
        Tuple of exit code and the parsed run report.
    """
    code, out, _ = run_cli(capsys, *argv, "--json")
    report = json.loads(out)
    jsonschema.validate(instance=report, schema=SCHEMA)
    assert report["exit_code"] == code
    return code, report


def random_constraints(n, seed):
    """Draw disjoint must-include and forbidden sets.

    Args:
        n: vertex count.
        seed: random seed.

    Returns:
        Tuple of (must_include, forbidden) sets.
    """
    rng = random.Random(seed)
    must = set(rng.sample(range(n), rng.randint(0, 2)))
    forbidden = set(rng.sample([v for v in range(n) if v not in must], rng.randint(0, 2)))
    return must, forbidden
