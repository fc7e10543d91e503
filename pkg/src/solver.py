# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Exact minimum-transversal solvers.

Edges are handled as integer bitsets. ``tau_bruteforce`` enumerates vertex
subsets in size order and serves as the independent oracle;
``tau_bnb`` is the branch-and-bound engine used everywhere else.
"""

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from errors import Infeasible, InstanceTooHard, Unsupported, VertexOutOfRange
from hypergraph import Hypergraph, Transversal, add_edges, reduce
from literals import BRUTEFORCE_MAX_N, DEFAULT_NODE_BUDGET

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveStats:
    """Search statistics.

    Attrs:
        nodes: search nodes explored.
        wall_ms: wall time in milliseconds.
    """

    nodes: int
    wall_ms: float


@dataclass(frozen=True)
class SolveResult:
    """A minimum (constrained) transversal and its size.

    Attrs:
        tau: size of a minimum transversal under the constraints.
        witness: certified transversal of that size.
        stats: search statistics.
    """

    tau: int
    witness: Transversal
    stats: SolveStats


class Peel(NamedTuple):
    """Result of greedy_peel.

    Attrs:
        removed: the peeled vertices X, in removal order, original indices.
        hypergraph: H(X, ∅).
        remap: original index to index in ``hypergraph``.
    """

    removed: tuple
    hypergraph: object
    remap: dict


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices):
    result = 0
    for v in vertices:
        result |= 1 << v
    return result


def _check_range(hypergraph, vertices):
    for v in vertices:
        if not 0 <= v < hypergraph.vertex_count:
            raise VertexOutOfRange(f"vertex {v} out of range, n={hypergraph.vertex_count}")


def tau_bruteforce(hypergraph):
    """Compute τ(H) by enumerating vertex subsets in size order.

    The witness is the lexicographically smallest minimum transversal.

    Args:
        hypergraph: the hypergraph, n ≤ 24.

    Returns:
        SolveResult.

    Raises:
        Unsupported: when the instance exceeds the brute-force cap.
    """
    n = hypergraph.vertex_count
    if n > BRUTEFORCE_MAX_N:
        raise Unsupported(f"brute force is capped at n={BRUTEFORCE_MAX_N}, got n={n}")
    start = time.perf_counter()
    masks = hypergraph.edge_masks
    nodes = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            nodes += 1
            chosen = _mask(combo)
            if all(edge & chosen for edge in masks):
                stats = SolveStats(nodes, (time.perf_counter() - start) * 1000)
                return SolveResult(size, Transversal.certify(hypergraph, combo), stats)
    raise AssertionError("the full vertex set hits every nonempty edge")


class _Search:
    """Branch-and-bound over bitset edges.

    Branches on the vertices of a smallest remaining edge; earlier siblings are
    excluded from later branches so every transversal is met once. The lower
    bound is a greedy packing of pairwise disjoint edges.
    """

    def __init__(self, node_budget):
        self.node_budget = node_budget
        self.nodes = 0
        self.best_count = None
        self.best_mask = 0

    def solve(self, edges):
        """Find a minimum transversal of the bitset edges.

        Args:
            edges: list of nonzero bitsets.

        Returns:
            Tuple (size, mask).
        """
        edges = _minimal(edges)
        greedy = _greedy(edges)
        self.best_count, self.best_mask = bin(greedy).count("1"), greedy
        self._branch(edges, 0, 0)
        return self.best_count, self.best_mask

    def _branch(self, edges, chosen, count):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise InstanceTooHard(f"node budget of {self.node_budget} exceeded")
        # Forced vertices: singleton edges.
        while True:
            singles = 0
            for edge in edges:
                if edge & (edge - 1) == 0:
                    singles |= edge
            if not singles:
                break
            chosen |= singles
            count += bin(singles).count("1")
            edges = [edge for edge in edges if not edge & singles]
        if count >= self.best_count:
            return
        if not edges:
            self.best_count, self.best_mask = count, chosen
            return
        if count + _packing(edges) >= self.best_count:
            return
        pivot = min(edges, key=lambda e: bin(e).count("1"))
        order = sorted(_bits(pivot), key=lambda v: -sum(1 for e in edges if e >> v & 1))
        excluded = 0
        for v in order:
            bit = 1 << v
            remaining = []
            feasible = True
            for edge in edges:
                if edge & bit:
                    continue
                edge &= ~excluded
                if not edge:
                    feasible = False
                    break
                remaining.append(edge)
            if feasible:
                self._branch(remaining, chosen | bit, count + 1)
            excluded |= bit


def _minimal(edges):
    """Keep one copy of each inclusion-minimal edge."""
    unique = sorted(set(edges), key=lambda e: bin(e).count("1"))
    kept = []
    for edge in unique:
        if not any(small & edge == small for small in kept):
            kept.append(edge)
    return kept


def _packing(edges):
    used = 0
    count = 0
    for edge in sorted(edges, key=lambda e: bin(e).count("1")):
        if not edge & used:
            used |= edge
            count += 1
    return count


def _greedy(edges):
    chosen = 0
    remaining = list(edges)
    while remaining:
        tally = {}
        for edge in remaining:
            for v in _bits(edge):
                tally[v] = tally.get(v, 0) + 1
        best = min(tally, key=lambda v: (-tally[v], v))
        chosen |= 1 << best
        remaining = [edge for edge in remaining if not edge >> best & 1]
    return chosen


def _constrained_edges(hypergraph, must, forbidden):
    """Apply must-include and forbidden sets to the bitset edges.

    Raises:
        Infeasible: when the constraints kill an edge.
    """
    if must & forbidden:
        raise Infeasible(f"vertices {sorted(_bits(must & forbidden))} are both required and forbidden")
    edges = []
    for edge in hypergraph.edge_masks:
        if edge & must:
            continue
        stripped = edge & ~forbidden
        if not stripped:
            raise Infeasible(f"edge {sorted(_bits(edge))} is entirely forbidden and unhit")
        edges.append(stripped)
    return edges


def _solve_core(hypergraph, must, forbidden, node_budget, nodes_seen):
    search = _Search(node_budget - nodes_seen)
    size, mask = search.solve(_constrained_edges(hypergraph, must, forbidden))
    return bin(must).count("1") + size, must | mask, search.nodes


def tau_bnb(hypergraph, must_include=(), forbidden=(), canonical=False, node_budget=None):
    """Compute the constrained transversal number by branch-and-bound.

    Args:
        hypergraph: the hypergraph.
        must_include: vertices every counted transversal must contain.
        forbidden: vertices no counted transversal may contain.
        canonical: return the lexicographically smallest minimum transversal.
        node_budget: maximum number of search nodes; defaults to 10**8.

    Returns:
        SolveResult whose tau counts the required vertices too.

    Raises:
        Infeasible: when the constraints leave some edge unhittable.
        InstanceTooHard: when the node budget is exceeded.
    """
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    _check_range(hypergraph, tuple(must_include) + tuple(forbidden))
    must, forbid = _mask(must_include), _mask(forbidden)
    start = time.perf_counter()
    tau, witness, nodes = _solve_core(hypergraph, must, forbid, budget, 0)
    if canonical:
        witness, nodes = _lexicographic_witness(hypergraph, tau, must, forbid, budget, nodes)
    stats = SolveStats(nodes, (time.perf_counter() - start) * 1000)
    logger.debug(f"tau_bnb n={hypergraph.vertex_count} m={hypergraph.m} tau={tau} nodes={nodes}")
    return SolveResult(tau, Transversal.certify(hypergraph, _bits(witness)), stats)


def _lexicographic_witness(hypergraph, tau, must, forbid, budget, nodes):
    """Pick witness vertices one at a time, smallest index first."""
    chosen = 0
    skipped = 0
    start = 0
    for _ in range(tau):
        for v in range(start, hypergraph.vertex_count):
            if forbid >> v & 1:
                continue
            try:
                size, _, used = _solve_core(hypergraph, must | chosen | 1 << v, forbid | skipped, budget, nodes)
            except Infeasible:
                skipped |= 1 << v
                continue
            nodes += used
            if size == tau:
                chosen |= 1 << v
                start = v + 1
                break
            skipped |= 1 << v
    return chosen, nodes


def tau_with_pair_targets(hypergraph, targets, node_budget=None):
    """Find a minimum transversal that intersects every target pair.

    Args:
        hypergraph: the hypergraph.
        targets: up to three 2-subsets of the vertex set.
        node_budget: solver node budget.

    Returns:
        SolveResult with tau = τ(H), or None when no minimum transversal meets all targets.

    Raises:
        ValueError: when targets are empty or not pairs.
    """
    targets = [frozenset(t) for t in targets]
    if not targets or len(targets) > 3 or any(len(t) != 2 for t in targets):
        raise ValueError(f"expected one to three vertex pairs, got {[sorted(t) for t in targets]}")
    _check_range(hypergraph, [v for t in targets for v in t])
    base = tau_bnb(hypergraph, node_budget=node_budget)
    augmented = tau_bnb(add_edges(hypergraph, targets), node_budget=node_budget)
    if augmented.tau != base.tau:
        return None
    witness = Transversal.certify(hypergraph, augmented.witness.vertices)
    nodes = base.stats.nodes + augmented.stats.nodes
    return SolveResult(base.tau, witness, SolveStats(nodes, base.stats.wall_ms + augmented.stats.wall_ms))


def minimum_transversals(hypergraph, limit=None, node_budget=None):
    """Enumerate minimum transversals in lexicographic order.

    Args:
        hypergraph: the hypergraph, n ≤ 24.
        limit: stop after this many.
        node_budget: solver node budget for computing τ.

    Returns:
        List of frozensets.

    Raises:
        Unsupported: when the instance exceeds the brute-force cap.
    """
    n = hypergraph.vertex_count
    if n > BRUTEFORCE_MAX_N:
        raise Unsupported(f"enumeration is capped at n={BRUTEFORCE_MAX_N}, got n={n}")
    tau = tau_bnb(hypergraph, node_budget=node_budget).tau
    masks = hypergraph.edge_masks
    found = []
    for combo in combinations(range(n), tau):
        chosen = _mask(combo)
        if all(edge & chosen for edge in masks):
            found.append(frozenset(combo))
            if limit is not None and len(found) >= limit:
                break
    return found


def greedy_peel(hypergraph, degree_threshold):
    """Repeatedly remove a maximum-degree vertex while Δ ≥ threshold.

    Ties go to the lowest vertex index.

    Args:
        hypergraph: the hypergraph.
        degree_threshold: stop once every degree is below this.

    Returns:
        Peel with X, H(X, ∅) and the vertex map.

    Raises:
        ValueError: when the threshold is below one.
    """
    if degree_threshold < 1:
        raise ValueError(f"degree threshold must be at least 1, got {degree_threshold}")
    removed = []
    alive_edges = list(hypergraph.edges)
    while True:
        degrees = [0] * hypergraph.vertex_count
        for edge in alive_edges:
            for v in edge:
                degrees[v] += 1
        top = max(degrees, default=0)
        if top < degree_threshold:
            break
        x = degrees.index(top)
        removed.append(x)
        alive_edges = [edge for edge in alive_edges if x not in edge]
    reduced, remap = reduce(hypergraph, removed, ())
    logger.debug(f"greedy_peel threshold={degree_threshold} removed={removed}")
    return Peel(tuple(removed), reduced, remap)


def cm_transversal(hypergraph, node_budget=None):
    """Build a transversal with the degree rules of the 6τ ≤ n + 2m proof.

    While some vertex has degree above two it is taken. Otherwise a vertex x of
    degree one exposes its edge, and a maximum-degree vertex of that edge is
    taken. The 2-regular remainder is solved exactly.

    Args:
        hypergraph: a 4-uniform hypergraph.
        node_budget: solver node budget for the remainder.

    Returns:
        Transversal of size at most (n + 2m) / 6.
    """
    chosen = set()
    edges = list(hypergraph.edges)
    while edges:
        degrees = [0] * hypergraph.vertex_count
        for edge in edges:
            for v in edge:
                degrees[v] += 1
        top = max(degrees)
        if top > 2:
            pick = degrees.index(top)
        else:
            leaf = next((v for v, d in enumerate(degrees) if d == 1), None)
            if leaf is None:
                break
            edge = next(e for e in edges if leaf in e)
            pick = min(edge, key=lambda v: (-degrees[v], v))
        chosen.add(pick)
        edges = [edge for edge in edges if pick not in edge]
    if edges:
        rest = Hypergraph(hypergraph.vertex_count, tuple(edges))
        chosen |= tau_bnb(rest, node_budget=node_budget).witness.vertices
    return Transversal.certify(hypergraph, chosen)
