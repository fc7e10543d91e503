# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Total domination through open neighborhood hypergraphs.

Graphs are ``networkx.Graph`` objects on the nodes ``0..n-1``. A set is
totally dominating when every vertex has a neighbor in it, so the total
domination number equals the transversal number of the hypergraph whose
edges are the open neighborhoods.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from bounds import BoundReport, TheoremId, certify, make_report
from errors import HypothesisViolated, Unsupported, VertexOutOfRange
from hypergraph import Hypergraph, Transversal, components
from literals import BRUTEFORCE_MAX_N, MIN_DEGREE_3N7, PEEL_THRESHOLD, SHRINK_SIZE
from solver import greedy_peel, tau_bnb

logger = logging.getLogger(__name__)

HEAWOOD_COMPLEMENT_DIAGNOSIS = "isomorphic to the bipartite complement of the Heawood graph"


def graph_from_edges(vertex_count, pairs):
    """Build a simple graph on ``0..n-1``.

    Args:
        vertex_count: number of vertices.
        pairs: iterable of (u, v) pairs.

    Returns:
        networkx.Graph.

    Raises:
        VertexOutOfRange: for an endpoint outside [0, n).
        ValueError: for a loop or a repeated edge.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(vertex_count))
    for u, v in pairs:
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise VertexOutOfRange(f"edge ({u}, {v}) names vertex {w}, n={vertex_count}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if graph.has_edge(u, v):
            raise ValueError(f"repeated edge ({u}, {v})")
        graph.add_edge(u, v)
    return graph


def _check_no_isolated(graph):
    isolated = sorted(v for v, d in graph.degree() if d == 0)
    if isolated:
        raise HypothesisViolated("no isolated vertex", f"isolated vertices {isolated} have no neighborhood to hit")


def onh(graph):
    """Build the open neighborhood hypergraph.

    Args:
        graph: graph without isolated vertices.

    Returns:
        Hypergraph with edge N(x) at index x; equal neighborhoods are kept.

    Raises:
        HypothesisViolated: when some vertex is isolated.
    """
    _check_no_isolated(graph)
    n = graph.number_of_nodes()
    return Hypergraph.from_edges(n, [sorted(graph.neighbors(x)) for x in range(n)])


def is_total_dominating_set(graph, vertices):
    """Report whether every vertex has a neighbor in the set.

    Args:
        graph: the graph.
        vertices: candidate set.

    Returns:
        True when the set totally dominates the graph.
    """
    chosen = set(vertices)
    return all(any(u in chosen for u in graph.neighbors(v)) for v in graph.nodes)


def gamma_t(graph, node_budget=None):
    """Return the total domination number, as τ of the open neighborhood hypergraph.

    Args:
        graph: graph without isolated vertices.
        node_budget: solver node budget.

    Returns:
        γt(G).
    """
    return tau_bnb(onh(graph), node_budget=node_budget).tau


def gamma_t_bruteforce(graph):
    """Return γt(G) by checking vertex subsets directly, without the hypergraph.

    Args:
        graph: graph without isolated vertices.

    Returns:
        γt(G).

    Raises:
        Unsupported: above the brute-force cap.
    """
    _check_no_isolated(graph)
    n = graph.number_of_nodes()
    if n > BRUTEFORCE_MAX_N:
        raise Unsupported(f"brute force is capped at n={BRUTEFORCE_MAX_N}, got n={n}")
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if is_total_dominating_set(graph, subset):
                return size
    return n


def shrink_to_4(hypergraph, protect=None):
    """Replace every edge larger than four by a 4-subset of it.

    The subset keeps ``protect`` when the edge contains it and is filled up
    with the smallest remaining vertex indices.

    Args:
        hypergraph: hypergraph whose edges all have at least four vertices.
        protect: optional vertex never dropped from an edge.

    Returns:
        4-uniform hypergraph on the same vertices.

    Raises:
        ValueError: when some edge has fewer than four vertices.
    """
    edges = []
    for edge in hypergraph.edges:
        if len(edge) < SHRINK_SIZE:
            raise ValueError(f"edge {sorted(edge)} has fewer than {SHRINK_SIZE} vertices")
        if len(edge) == SHRINK_SIZE:
            edges.append(edge)
            continue
        kept = [protect] if protect in edge else []
        kept += sorted(v for v in edge if v != protect)[: SHRINK_SIZE - len(kept)]
        edges.append(frozenset(kept))
    return Hypergraph(hypergraph.vertex_count, tuple(edges), hypergraph.labels)


def _check_min_degree(graph):
    low = min((d for _, d in graph.degree()), default=0)
    if low < MIN_DEGREE_3N7:
        raise HypothesisViolated(f"min degree >= {MIN_DEGREE_3N7}", f"graph has minimum degree {low}")


def check_3n7(graph, node_budget=None):
    """Certify 7γt ≤ 3n on a graph of minimum degree at least four.

    Args:
        graph: the graph.
        node_budget: solver node budget.

    Returns:
        BoundReport; equality on a connected graph carries an isomorphism diagnosis.

    Raises:
        HypothesisViolated: when the minimum degree is below four.
    """
    _check_min_degree(graph)
    n = graph.number_of_nodes()
    value = gamma_t(graph, node_budget=node_budget)
    diagnosis = None
    if 7 * value == 3 * n and nx.is_connected(graph):
        extremal = n == 14 and nx.is_isomorphic(graph, bipartite_complement_heawood())
        diagnosis = HEAWOOD_COMPLEMENT_DIAGNOSIS if extremal else "equality without the Heawood structure"
    return make_report(TheoremId.TD_3N7, value, 7, 3 * n, diagnosis)


@dataclass(frozen=True)
class PipelineResult:
    """Outcome of the constructive 3n/7 pipeline.

    Attrs:
        bound: ⌊3n/7⌋.
        dominating_set: the constructed set, certified against the hypergraph.
        peeled: vertices taken by the degree peel.
        remainder_report: the n/4 + m/6 bound on the peeled remainder.
    """

    bound: int
    dominating_set: Transversal
    peeled: tuple
    remainder_report: BoundReport

    @property
    def holds(self):
        """Return True when the set is no larger than the bound."""
        return len(self.dominating_set) <= self.bound


def pipeline_3n7(graph, node_budget=None):
    """Construct a total dominating set of size at most ⌊3n/7⌋.

    Builds the neighborhood hypergraph, shrinks it to 4-uniform (keeping a
    maximum-degree vertex when the graph is not 4-regular), peels vertices
    while some degree is at least four, solves the remainder exactly and
    lifts the solution back. The lifted set is reported as built, so a result
    above the bound shows up as holds == False.

    Args:
        graph: graph of minimum degree at least four.
        node_budget: solver node budget for the remainder.

    Returns:
        PipelineResult.

    Raises:
        HypothesisViolated: when the minimum degree is below four.
        InstanceTooHard: when the remainder exceeds the node budget.
    """
    _check_min_degree(graph)
    n = graph.number_of_nodes()
    hypergraph = onh(graph)
    protect = None
    if not all(d == MIN_DEGREE_3N7 for _, d in graph.degree()):
        protect = max(range(n), key=lambda v: (graph.degree(v), -v))
    shrunk = shrink_to_4(hypergraph, protect)
    peel = greedy_peel(shrunk, PEEL_THRESHOLD)
    remainder = tau_bnb(peel.hypergraph, node_budget=node_budget)
    report = certify(peel.hypergraph, TheoremId.T2_QUARTER_SIXTH, tau=remainder.tau)
    if not report.holds:
        logger.error(f"remainder bound fails: {report.lhs} > {report.rhs}")
    lift = {new: old for old, new in peel.remap.items()}
    chosen = set(peel.removed) | {lift[v] for v in remainder.witness.vertices}
    bound = (3 * n) // 7
    if len(chosen) > bound:
        logger.error(f"peeled construction has {len(chosen)} vertices, bound is {bound}")
    result = PipelineResult(bound, Transversal.certify(hypergraph, chosen), peel.removed, report)
    logger.debug(f"pipeline_3n7 n={n} peeled={len(peel.removed)} size={len(chosen)} bound={result.bound}")
    return result


def fano_lines():
    """Return the seven lines of the Fano plane on points 0..6."""
    lines = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))
    return tuple(frozenset(line) for line in lines)


def heawood_graph():
    """Return the point-line incidence graph of the Fano plane.

    Points are vertices 0..6 and line j is vertex 7 + j.
    """
    lines = fano_lines()
    return graph_from_edges(14, [(p, 7 + j) for j, line in enumerate(lines) for p in sorted(line)])


def bipartite_complement_heawood():
    """Return the bipartite complement of the Heawood graph.

    Point p is joined to line vertex 7 + j exactly when p is not on line j.
    """
    lines = fano_lines()
    return graph_from_edges(14, [(p, 7 + j) for j, line in enumerate(lines) for p in range(7) if p not in line])


def onh_component_law(graph):
    """Compare the component count of the neighborhood hypergraph with the bipartite law.

    Args:
        graph: a connected graph on at least two vertices.

    Returns:
        (expected, observed): expected is 2 for bipartite graphs and 1 otherwise.

    Raises:
        ValueError: when the graph is not connected.
    """
    if graph.number_of_nodes() < 2 or not nx.is_connected(graph):
        raise ValueError("the component law applies to connected graphs on at least two vertices")
    expected = 2 if nx.is_bipartite(graph) else 1
    return expected, len(components(onh(graph)))


def check_ty21(graph, node_budget=None):
    """Certify 21τ ≤ 5n + 4m on the shrunk neighborhood hypergraph.

    Args:
        graph: graph of minimum degree at least four.
        node_budget: solver node budget.

    Returns:
        BoundReport for a 4-uniform hypergraph with n = m, so rhs = 9n.

    Raises:
        HypothesisViolated: when the minimum degree is below four.
    """
    _check_min_degree(graph)
    shrunk = shrink_to_4(onh(graph))
    return certify(shrunk, TheoremId.TY_21, node_budget=node_budget)


