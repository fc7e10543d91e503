# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Plain-text instance formats.

Hypergraphs (".hg"): a header line ``n m`` followed by m lines, each listing
the vertices of one edge. Graphs (".gr"): a header ``n m`` followed by m
lines ``u v``. Vertices are 0-based, ``#`` starts a comment and blank lines
are ignored.
"""

import json
from pathlib import Path

from domination import graph_from_edges
from errors import FormatError
from family_b import BCertificate
from hypergraph import Hypergraph


def _records(text):
    """Yield (line number, integer fields) for every non-empty line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            yield number, [int(token) for token in line.split()]
        except ValueError:
            raise FormatError(f"line {number}: expected integers, got {raw.strip()!r}") from None


def _header(records):
    try:
        number, fields = next(records)
    except StopIteration:
        raise FormatError("missing header line 'n m'") from None
    if len(fields) != 2 or min(fields) < 0:
        raise FormatError(f"line {number}: header must be two nonnegative integers 'n m'")
    return fields


def parse_hypergraph(text):
    """Parse a hypergraph.

    Args:
        text: file contents.

    Returns:
        Hypergraph.

    Raises:
        FormatError: for malformed text or an edge count mismatch.
        ValueError: for an invalid edge (out of range, repeated vertex).
    """
    records = _records(text)
    n, m = _header(records)
    edges = []
    for number, fields in records:
        if not fields:
            raise FormatError(f"line {number}: empty edge")
        if len(set(fields)) != len(fields):
            raise FormatError(f"line {number}: edge {fields} repeats a vertex")
        edges.append(fields)
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Hypergraph.from_edges(n, edges)


def format_hypergraph(hypergraph):
    """Write a hypergraph with its edges in canonical order.

    Args:
        hypergraph: the hypergraph.

    Returns:
        File contents ending with a newline.
    """
    lines = [f"{hypergraph.vertex_count} {hypergraph.m}"]
    lines.extend(" ".join(map(str, edge)) for edge in hypergraph.canonical_edges)
    return "\n".join(lines) + "\n"


def parse_graph(text):
    """Parse a simple graph.

    Args:
        text: file contents.

    Returns:
        networkx.Graph on nodes 0..n-1.

    Raises:
        FormatError: for malformed text or an edge count mismatch.
        ValueError: for loops, repeated edges or out-of-range endpoints.
    """
    records = _records(text)
    n, m = _header(records)
    pairs = []
    for number, fields in records:
        if len(fields) != 2:
            raise FormatError(f"line {number}: expected 'u v'")
        pairs.append(tuple(fields))
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    return graph_from_edges(n, pairs)


def format_graph(graph):
    """Write a graph with sorted edges.

    Args:
        graph: networkx.Graph on nodes 0..n-1.

    Returns:
        File contents ending with a newline.
    """
    pairs = sorted(tuple(sorted(edge)) for edge in graph.edges)
    lines = [f"{graph.number_of_nodes()} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def read_hypergraph(path):
    """Read a hypergraph file.

    Args:
        path: file path.

    Returns:
        Hypergraph.
    """
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(path, hypergraph):
    """Write a hypergraph file, creating parent directories.

    Args:
        path: file path.
        hypergraph: the hypergraph.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_hypergraph(hypergraph))


def read_graph(path):
    """Read a graph file.

    Args:
        path: file path.

    Returns:
        networkx.Graph.
    """
    return parse_graph(Path(path).read_text())


def write_graph(path, graph):
    """Write a graph file, creating parent directories.

    Args:
        path: file path.
        graph: the graph.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph(graph))


def write_certificate(path, certificate):
    """Write a construction certificate as JSON.

    Args:
        path: file path.
        certificate: BCertificate.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(certificate.to_dict(), indent=2, sort_keys=True) + "\n")


def read_certificate(path):
    """Read a construction certificate.

    Args:
        path: file path.

    Returns:
        BCertificate.

    Raises:
        FormatError: when the file is not a certificate.
    """
    try:
        return BCertificate.from_dict(json.loads(Path(path).read_text()))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise FormatError(f"{path}: not a construction certificate ({exc})") from None
