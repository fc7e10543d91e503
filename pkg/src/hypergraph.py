# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Hypergraph instance model and structural operations.

A hypergraph is a vertex count plus an ordered multiset of edges; vertices are
the contiguous indices ``0..n-1``. Values are immutable, and every operation
returns a new hypergraph.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from errors import EdgeIndexError, VertexOutOfRange, ZeroEdge
from literals import CLASS_H_EDGE_SIZES, CLASS_H_MAX_DEGREE


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite hypergraph with an edge multiset.

    Attrs:
        vertex_count: number of vertices n(H).
        edges: edges in insertion order; each a frozenset of vertex indices.
        labels: optional per-vertex labels for named instances.
    """

    vertex_count: int
    edges: tuple[frozenset[int], ...] = ()
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        """Normalize and validate the instance.

        Raises:
            ValueError: when the vertex count is negative or labels do not match it.
            VertexOutOfRange: when an edge names a vertex outside [0, n).
        """
        if self.vertex_count < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.vertex_count}")
        edges = []
        for edge in self.edges:
            edge_list = list(edge)
            if not edge_list:
                raise ValueError("empty edges are not allowed")
            if len(set(edge_list)) != len(edge_list):
                raise ValueError(f"edge {sorted(edge_list)} repeats a vertex")
            for v in edge_list:
                if not 0 <= v < self.vertex_count:
                    raise VertexOutOfRange(f"edge {sorted(edge_list)} names vertex {v}, n={self.vertex_count}")
            edges.append(frozenset(edge_list))
        object.__setattr__(self, "edges", tuple(edges))
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.vertex_count:
                raise ValueError(f"{len(labels)} labels given for {self.vertex_count} vertices")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, vertex_count, edges, labels=None):
        """Build a hypergraph from any iterable of vertex iterables.

        Args:
            vertex_count: number of vertices.
            edges: iterable of edges.
            labels: optional vertex labels.

        Returns:
            The hypergraph.
        """
        return cls(vertex_count, tuple(tuple(e) for e in edges), None if labels is None else tuple(labels))

    @classmethod
    def from_labeled_edges(cls, labels, edges):
        """Build a hypergraph whose edges are written with vertex labels.

        Args:
            labels: vertex labels in index order.
            edges: iterable of edges, each an iterable of labels.

        Returns:
            The hypergraph.
        """
        index = {label: i for i, label in enumerate(labels)}
        return cls.from_edges(len(labels), ([index[label] for label in edge] for edge in edges), labels)

    @property
    def n(self):
        """Return the order n(H)."""
        return self.vertex_count

    @property
    def m(self):
        """Return the size m(H)."""
        return len(self.edges)

    @cached_property
    def edge_masks(self):
        """Return the edges as integer bitsets."""
        return tuple(sum(1 << v for v in edge) for edge in self.edges)

    @cached_property
    def degrees(self):
        """Return the degree of every vertex, counting edge multiplicity."""
        counts = [0] * self.vertex_count
        for edge in self.edges:
            for v in edge:
                counts[v] += 1
        return tuple(counts)

    @cached_property
    def canonical_edges(self):
        """Return the sorted list of sorted edges; the basis of equality."""
        return tuple(sorted(tuple(sorted(edge)) for edge in self.edges))

    def e(self, size):
        """Return e_i(H), the number of edges of the given size.

        Args:
            size: edge size i.

        Returns:
            Count of edges of that size.
        """
        return sum(1 for edge in self.edges if len(edge) == size)

    def edge_size_counts(self):
        """Return a counter from edge size to number of edges.

        Returns:
            Counter of edge sizes.
        """
        return Counter(len(edge) for edge in self.edges)

    def label(self, v):
        """Return the display label of a vertex.

        Args:
            v: vertex index.

        Returns:
            The label, or the index as a string.
        """
        return self.labels[v] if self.labels else str(v)

    def digest(self):
        """Return a content hash of the vertex count and sorted edge list.

        Returns:
            Hex sha256 digest.
        """
        text = f"{self.vertex_count}|" + ";".join(",".join(map(str, e)) for e in self.canonical_edges)
        return hashlib.sha256(text.encode()).hexdigest()

    def __eq__(self, other):
        """Compare by vertex count and sorted edge list.

        Args:
            other: object to compare.

        Returns:
            Equality, or NotImplemented for foreign types.
        """
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.canonical_edges == other.canonical_edges

    def __hash__(self):
        """Hash consistently with equality.

        Returns:
            Hash value.
        """
        return hash((self.vertex_count, self.canonical_edges))

    def __repr__(self):
        """Return a compact representation.

        Returns:
            Representation string.
        """
        edges = ", ".join("{" + ",".join(map(str, sorted(e))) + "}" for e in self.edges)
        return f"Hypergraph(n={self.vertex_count}, m={self.m}, edges=[{edges}])"


@dataclass(frozen=True)
class Transversal:
    """A vertex set certified to hit every edge of a specific hypergraph.

    Attrs:
        vertices: the transversal.
        instance_digest: digest of the hypergraph it certifies.
    """

    vertices: frozenset[int]
    instance_digest: str

    @classmethod
    def certify(cls, hypergraph, vertices):
        """Validate a vertex set against a hypergraph and stamp it.

        Args:
            hypergraph: the hypergraph to hit.
            vertices: candidate transversal.

        Returns:
            The certified transversal.

        Raises:
            ValueError: when some edge is missed.
        """
        vertices = frozenset(vertices)
        _check_vertices(hypergraph, vertices)
        missed = [sorted(e) for e in hypergraph.edges if not e & vertices]
        if missed:
            raise ValueError(f"{sorted(vertices)} misses edge {missed[0]}")
        return cls(vertices, hypergraph.digest())

    def check(self, hypergraph):
        """Report whether this transversal is valid for the given hypergraph.

        Args:
            hypergraph: the hypergraph.

        Returns:
            True when the digest matches and every edge is hit.
        """
        return self.instance_digest == hypergraph.digest() and is_transversal(hypergraph, self.vertices)

    def __len__(self):
        """Return the transversal size.

        Returns:
            Number of vertices.
        """
        return len(self.vertices)


class Reduction(NamedTuple):
    """Result of a vertex-deleting operation.

    Attrs:
        hypergraph: the reduced hypergraph.
        remap: old vertex index to new vertex index, for surviving vertices.
    """

    hypergraph: Hypergraph
    remap: dict


class Component(NamedTuple):
    """A connected component.

    Attrs:
        hypergraph: the component, relabeled to 0..k-1.
        vertices: original vertex index of each component vertex.
    """

    hypergraph: Hypergraph
    vertices: tuple


def _check_vertices(hypergraph, vertices):
    for v in vertices:
        if not 0 <= v < hypergraph.vertex_count:
            raise VertexOutOfRange(f"vertex {v} out of range, n={hypergraph.vertex_count}")


def _check_edge_index(hypergraph, index):
    if not 0 <= index < hypergraph.m:
        raise EdgeIndexError(f"edge index {index} out of range, m={hypergraph.m}")


def degree(hypergraph, v):
    """Return d_H(v), counting edge multiplicity.

    Args:
        hypergraph: the hypergraph.
        v: vertex index.

    Returns:
        The degree.
    """
    _check_vertices(hypergraph, (v,))
    return hypergraph.degrees[v]


def max_degree(hypergraph):
    """Return Δ(H), 0 for a hypergraph without vertices."""
    return max(hypergraph.degrees, default=0)


def min_degree(hypergraph):
    """Return δ(H), 0 for a hypergraph without vertices."""
    return min(hypergraph.degrees, default=0)


def neighborhood(hypergraph, v):
    """Return N_H(v), the vertices other than v sharing an edge with it.

    Args:
        hypergraph: the hypergraph.
        v: vertex index.

    Returns:
        Frozenset of neighbors.
    """
    _check_vertices(hypergraph, (v,))
    found = set()
    for edge in hypergraph.edges:
        if v in edge:
            found |= edge
    found.discard(v)
    return frozenset(found)


def overlap(hypergraph, e1, e2):
    """Report whether two distinct edges share at least two vertices.

    Args:
        hypergraph: the hypergraph.
        e1: first edge index.
        e2: second edge index.

    Returns:
        True when |e1 ∩ e2| >= 2.

    Raises:
        EdgeIndexError: for invalid or equal indices.
    """
    _check_edge_index(hypergraph, e1)
    _check_edge_index(hypergraph, e2)
    if e1 == e2:
        raise EdgeIndexError(f"overlap needs two distinct edges, got {e1} twice")
    return len(hypergraph.edges[e1] & hypergraph.edges[e2]) >= 2


def components(hypergraph):
    """Split a hypergraph into connected components.

    Isolated vertices form singleton components without edges. Components are
    ordered by their smallest original vertex.

    Args:
        hypergraph: the hypergraph.

    Returns:
        List of Component tuples.
    """
    parent = list(range(hypergraph.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for edge in hypergraph.edges:
        members = sorted(edge)
        for v in members[1:]:
            a, b = find(members[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups = {}
    for v in range(hypergraph.vertex_count):
        groups.setdefault(find(v), []).append(v)
    edges_by_root = {}
    for edge in hypergraph.edges:
        edges_by_root.setdefault(find(min(edge)), []).append(edge)

    result = []
    for root in sorted(groups):
        vertices = tuple(groups[root])
        index = {v: i for i, v in enumerate(vertices)}
        labels = tuple(hypergraph.labels[v] for v in vertices) if hypergraph.labels else None
        edges = [[index[v] for v in edge] for edge in edges_by_root.get(root, ())]
        result.append(Component(Hypergraph.from_edges(len(vertices), edges, labels), vertices))
    return result


def reduce(hypergraph, x, y):
    """Return H(X,Y): delete X∪Y, drop edges meeting X, strip Y from the rest.

    Vertices outside X∪Y are kept even when they become isolated.

    Args:
        hypergraph: the hypergraph.
        x: vertices whose edges are removed.
        y: vertices stripped from the remaining edges.

    Returns:
        Reduction with the new hypergraph and the old-to-new vertex map.

    Raises:
        ZeroEdge: when an edge would become empty.
    """
    x, y = frozenset(x), frozenset(y)
    _check_vertices(hypergraph, x | y)
    gone = x | y
    remap = {}
    for v in range(hypergraph.vertex_count):
        if v not in gone:
            remap[v] = len(remap)
    edges = []
    for edge in hypergraph.edges:
        if edge & x:
            continue
        stripped = edge - y
        if not stripped:
            raise ZeroEdge(f"edge {sorted(edge)} lies inside Y={sorted(y)} and would become empty")
        edges.append([remap[v] for v in stripped])
    labels = tuple(hypergraph.labels[v] for v in remap) if hypergraph.labels else None
    return Reduction(Hypergraph.from_edges(len(remap), edges, labels), remap)


def delete_vertices(hypergraph, vertices):
    """Return H − S: remove the vertices and every edge containing one of them.

    Args:
        hypergraph: the hypergraph.
        vertices: vertex set S.

    Returns:
        Reduction with the new hypergraph and the vertex map.
    """
    return reduce(hypergraph, vertices, ())


def delete_edge(hypergraph, index):
    """Return H − e for the edge at the given index; vertices are kept.

    Args:
        hypergraph: the hypergraph.
        index: edge index.

    Returns:
        The hypergraph without that edge.
    """
    _check_edge_index(hypergraph, index)
    edges = hypergraph.edges[:index] + hypergraph.edges[index + 1 :]
    return Hypergraph(hypergraph.vertex_count, edges, hypergraph.labels)


def add_edges(hypergraph, edges):
    """Return H with extra edges appended.

    Args:
        hypergraph: the hypergraph.
        edges: iterable of edges to append.

    Returns:
        The extended hypergraph.
    """
    extra = tuple(tuple(e) for e in edges)
    return Hypergraph(hypergraph.vertex_count, hypergraph.edges + extra, hypergraph.labels)


def drop_isolated(hypergraph):
    """Remove vertices of degree zero.

    Args:
        hypergraph: the hypergraph.

    Returns:
        Reduction with the new hypergraph and the vertex map.
    """
    isolated = [v for v, d in enumerate(hypergraph.degrees) if d == 0]
    return reduce(hypergraph, (), isolated)


def subset_edge_cleanup(hypergraph):
    """Remove every edge that contains another edge; keep one copy of duplicates.

    Args:
        hypergraph: the hypergraph.

    Returns:
        The hypergraph with only inclusion-minimal edges, in original order.
    """
    edges = hypergraph.edges
    kept = []
    for i, f in enumerate(edges):
        dominated = False
        for j, e in enumerate(edges):
            if i == j:
                continue
            if e < f or (e == f and j < i):
                dominated = True
                break
        if not dominated:
            kept.append(f)
    return Hypergraph(hypergraph.vertex_count, tuple(kept), hypergraph.labels)


def disjoint_union(*hypergraphs):
    """Place hypergraphs side by side, shifting vertex indices.

    Args:
        hypergraphs: the operands, in order.

    Returns:
        Their disjoint union.
    """
    edges = []
    offset = 0
    labeled = all(h.labels for h in hypergraphs) and hypergraphs
    labels = [] if labeled else None
    for h in hypergraphs:
        edges.extend([v + offset for v in edge] for edge in h.edges)
        if labels is not None:
            labels.extend(h.labels)
        offset += h.vertex_count
    return Hypergraph.from_edges(offset, edges, labels)


def is_transversal(hypergraph, vertices):
    """Report whether a vertex set hits every edge.

    Args:
        hypergraph: the hypergraph.
        vertices: candidate set.

    Returns:
        True when every edge meets the set.
    """
    vertices = frozenset(vertices)
    return all(edge & vertices for edge in hypergraph.edges)


def is_uniform(hypergraph, k):
    """Report whether every edge has exactly k vertices."""
    return all(len(edge) == k for edge in hypergraph.edges)


def is_regular(hypergraph, d):
    """Report whether every vertex has degree exactly d."""
    return all(deg == d for deg in hypergraph.degrees)


def is_linear(hypergraph):
    """Report whether any two edges share at most one vertex."""
    edges = hypergraph.edges
    return all(len(edges[i] & edges[j]) <= 1 for i in range(len(edges)) for j in range(i + 1, len(edges)))


def in_class_h(hypergraph):
    """Report whether all edge sizes are in 2..4 and Δ ≤ 3."""
    return (
        all(len(edge) in CLASS_H_EDGE_SIZES for edge in hypergraph.edges)
        and max_degree(hypergraph) <= CLASS_H_MAX_DEGREE
    )


def relabel(hypergraph, order: Sequence[int]):
    """Relabel vertices so that ``order[i]`` becomes vertex i.

    Args:
        hypergraph: the hypergraph.
        order: a permutation of the vertex indices.

    Returns:
        The relabeled hypergraph.
    """
    index = {v: i for i, v in enumerate(order)}
    labels = tuple(hypergraph.labels[v] for v in order) if hypergraph.labels else None
    return Hypergraph.from_edges(hypergraph.vertex_count, ([index[v] for v in e] for e in hypergraph.edges), labels)

