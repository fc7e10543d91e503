# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Canonical forms of small hypergraphs.

Colour refinement followed by an individualization search over the cells of
the stable colouring. Among the discrete colourings reached, the one giving
the lexicographically smallest sorted edge list is the canonical labeling.
Exact, and fast enough for the instance sizes this toolkit targets.
"""

from hypergraph import Hypergraph, relabel


def _incidence(hypergraph):
    incident = [[] for _ in range(hypergraph.vertex_count)]
    for i, edge in enumerate(hypergraph.edges):
        for v in edge:
            incident[v].append(i)
    return incident


def _refine(hypergraph, incident, colors):
    """Refine a vertex colouring until it is equitable.

    Args:
        hypergraph: the hypergraph.
        incident: edge indices incident to each vertex.
        colors: initial colour rank of each vertex.

    Returns:
        Stable colour ranks; class order respects the input order.
    """
    classes = len(set(colors))
    while True:
        edge_sig = [tuple(sorted(colors[v] for v in edge)) for edge in hypergraph.edges]
        sig = [(colors[v], tuple(sorted(edge_sig[i] for i in incident[v]))) for v in range(len(colors))]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        colors = [ranks[s] for s in sig]
        if len(ranks) == classes:
            return colors
        classes = len(ranks)


def _individualize(colors, v):
    split = [2 * c + 1 for c in colors]
    split[v] = 2 * colors[v]
    ranks = {c: r for r, c in enumerate(sorted(set(split)))}
    return [ranks[c] for c in split]


def _certificate(hypergraph, colors):
    return tuple(sorted(tuple(sorted(colors[v] for v in edge)) for edge in hypergraph.edges))


def canonical_labeling(hypergraph):
    """Compute a canonical vertex order.

    Args:
        hypergraph: the hypergraph.

    Returns:
        List ``order`` such that relabeling ``order[i] -> i`` gives the canonical form.
    """
    n = hypergraph.vertex_count
    if n == 0:
        return []
    incident = _incidence(hypergraph)
    membership = [frozenset(incident[v]) for v in range(n)]
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(hypergraph, incident, colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        # Isolated vertices never influence the certificate; leave their cells unsplit.
        target = next((c for c in sorted(cells) if len(cells[c]) > 1 and incident[cells[c][0]]), None)
        if target is None:
            labels = _discrete(colors)
            candidate = (_certificate(hypergraph, labels), labels)
            if best is None or candidate[0] < best[0]:
                best = candidate
            return
        tried = set()
        for v in cells[target]:
            # Twins (same incident edges) lead to the same certificate.
            if membership[v] in tried:
                continue
            tried.add(membership[v])
            search(_individualize(colors, v))

    search(_refine(hypergraph, incident, [0] * n))
    labels = best[1]
    order = [0] * n
    for v, label in enumerate(labels):
        order[label] = v
    return order


def _discrete(colors):
    """Break remaining ties by vertex index; only isolated vertices can still tie."""
    ranked = sorted(range(len(colors)), key=lambda v: (colors[v], v))
    labels = [0] * len(colors)
    for label, v in enumerate(ranked):
        labels[v] = label
    return labels


def canonical_form(hypergraph):
    """Return the canonical relabeling of a hypergraph, without labels.

    Args:
        hypergraph: the hypergraph.

    Returns:
        Hypergraph whose edge order is sorted; isomorphic inputs give equal outputs.
    """
    relabeled = relabel(Hypergraph(hypergraph.vertex_count, hypergraph.edges), canonical_labeling(hypergraph))
    return Hypergraph.from_edges(relabeled.vertex_count, relabeled.canonical_edges)


def canonical_key(hypergraph):
    """Return a hashable isomorphism invariant that is also complete.

    Args:
        hypergraph: the hypergraph.

    Returns:
        Tuple of vertex count and canonical edge list.
    """
    form = canonical_form(hypergraph)
    return form.vertex_count, form.canonical_edges


def isomorphic(first, second):
    """Report whether two hypergraphs are isomorphic.

    Args:
        first: a hypergraph.
        second: another hypergraph.

    Returns:
        True when some vertex bijection maps the edge multisets onto each other.
    """
    if first.vertex_count != second.vertex_count or sorted(first.degrees) != sorted(second.degrees):
        return False
    if sorted(len(e) for e in first.edges) != sorted(len(e) for e in second.edges):
        return False
    return canonical_key(first) == canonical_key(second)
