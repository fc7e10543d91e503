# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""The family B of bad hypergraphs.

Members are built from single-edge hypergraphs on two vertices by three
growth operations, and every member carries a replayable construction trace.
Steps use one global vertex namespace: an A step opens a new part, B and C
steps rewrite the part holding their host edge, and a D step merges the two
parts holding its hosts. A trace is valid when exactly one part remains and
the vertices used are exactly ``0..n-1``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import ClassVar, Union

from canonical import canonical_key, canonical_labeling
from errors import CertificateMismatch, InvalidHost, Unsupported
from hypergraph import Hypergraph, components, delete_edge, max_degree, min_degree, relabel
from literals import (
    EDGE_WEIGHTS,
    LEMMA5_EXHAUSTIVE_TRIPLES_MAX_N,
    LEMMA5_SAMPLE_SEED,
    LEMMA5_TRIPLE_SAMPLES,
    PROGRESS_EVERY,
    RECOGNITION_MAX_N,
    RECOGNITION_MEMO_MAX,
    VERTEX_WEIGHT,
)
from solver import minimum_transversals, tau_bnb
from state import State

logger = logging.getLogger(__name__)

LEMMA5_PARTS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii")


@dataclass(frozen=True)
class StepA:
    """Open a part with two new vertices joined by a 2-edge."""

    op: ClassVar[str] = "A"
    x: int
    y: int

    def relabel(self, mapping):
        """Return the step with every vertex passed through ``mapping``."""
        return StepA(mapping(self.x), mapping(self.y))

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {"op": self.op, "x": self.x, "y": self.y}


@dataclass(frozen=True)
class StepB:
    """Replace a 2-edge {u,v} by {u,v,x}, {u,v,y} and {x,y}."""

    op: ClassVar[str] = "B"
    host: tuple
    new: tuple

    def relabel(self, mapping):
        """Return the step with every vertex passed through ``mapping``."""
        return StepB(tuple(sorted(map(mapping, self.host))), tuple(map(mapping, self.new)))

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {"op": self.op, "host": list(self.host), "new": list(self.new)}


@dataclass(frozen=True)
class StepC:
    """Replace a 3-edge {u,v,w} by {u,v,w,x}, {u,v,w,y} and {x,y}."""

    op: ClassVar[str] = "C"
    host: tuple
    new: tuple

    def relabel(self, mapping):
        """Return the step with every vertex passed through ``mapping``."""
        return StepC(tuple(sorted(map(mapping, self.host))), tuple(map(mapping, self.new)))

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {"op": self.op, "host": list(self.host), "new": list(self.new)}


@dataclass(frozen=True)
class StepD:
    """Merge two parts through a new vertex x and their host 2-edges."""

    op: ClassVar[str] = "D"
    left: tuple
    right: tuple
    new: int

    def relabel(self, mapping):
        """Return the step with every vertex passed through ``mapping``."""
        return StepD(tuple(sorted(map(mapping, self.left))), tuple(sorted(map(mapping, self.right))), mapping(self.new))

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {"op": self.op, "left": list(self.left), "right": list(self.right), "new": self.new}


Step = Union[StepA, StepB, StepC, StepD]


def step_from_dict(data):
    """Parse a step written by ``to_dict``.

    Args:
        data: mapping with an "op" key.

    Returns:
        The step.

    Raises:
        CertificateMismatch: for an unknown op.
    """
    op = data.get("op")
    if op == "A":
        return StepA(int(data["x"]), int(data["y"]))
    if op == "B":
        return StepB(tuple(sorted(data["host"])), tuple(data["new"]))
    if op == "C":
        return StepC(tuple(sorted(data["host"])), tuple(data["new"]))
    if op == "D":
        return StepD(tuple(sorted(data["left"])), tuple(sorted(data["right"])), int(data["new"]))
    raise CertificateMismatch(f"unknown construction step {op!r}")


@dataclass(frozen=True)
class BCertificate:
    """A construction trace proving membership in B.

    Attrs:
        steps: construction steps in application order.
        a_pairs: the vertex pairs opened by A steps.
    """

    steps: tuple
    a_pairs: frozenset

    def relabel(self, mapping):
        """Return the certificate with every vertex passed through ``mapping``.

        Args:
            mapping: callable from old to new vertex index.

        Returns:
            The relabeled certificate.
        """
        pairs = frozenset(frozenset(map(mapping, pair)) for pair in self.a_pairs)
        return BCertificate(tuple(step.relabel(mapping) for step in self.steps), pairs)

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {
            "steps": [step.to_dict() for step in self.steps],
            "a_pairs": sorted(sorted(pair) for pair in self.a_pairs),
        }

    @classmethod
    def from_dict(cls, data):
        """Parse a certificate written by ``to_dict``.

        Args:
            data: mapping with "steps" and "a_pairs".

        Returns:
            The certificate.
        """
        steps = tuple(step_from_dict(step) for step in data["steps"])
        return cls(steps, frozenset(frozenset(pair) for pair in data["a_pairs"]))


@dataclass(frozen=True)
class BMember:
    """A member of B together with its certificate.

    Attrs:
        hypergraph: the member.
        certificate: a trace that replays to it.
    """

    hypergraph: Hypergraph
    certificate: BCertificate


class _Forest:
    """Parts built while replaying a trace."""

    def __init__(self):
        self.parts = []
        self.used = set()
        self.a_pairs = set()

    def _claim(self, *vertices):
        if len(set(vertices)) != len(vertices) or any(v < 0 or v in self.used for v in vertices):
            raise CertificateMismatch(f"vertices {list(vertices)} are not fresh")
        self.used.update(vertices)

    def _locate(self, host, size):
        host = frozenset(host)
        if len(host) != size:
            raise CertificateMismatch(f"host {sorted(host)} is not a {size}-edge")
        for i, part in enumerate(self.parts):
            if host in part:
                return i, host
        raise CertificateMismatch(f"host {sorted(host)} is not an edge of the trace so far")

    def apply(self, step):
        if isinstance(step, StepA):
            self._claim(step.x, step.y)
            self.parts.append([frozenset((step.x, step.y))])
            self.a_pairs.add(frozenset((step.x, step.y)))
        elif isinstance(step, (StepB, StepC)):
            i, host = self._locate(step.host, 2 if isinstance(step, StepB) else 3)
            x, y = step.new
            self._claim(x, y)
            part = self.parts[i]
            part.remove(host)
            part.extend([host | {x}, host | {y}, frozenset((x, y))])
        else:
            i, left = self._locate(step.left, 2)
            j, right = self._locate(step.right, 2)
            if i == j:
                raise CertificateMismatch(f"D hosts {sorted(left)} and {sorted(right)} lie in one part")
            self._claim(step.new)
            first, second = list(self.parts[i]), list(self.parts[j])
            first.remove(left)
            second.remove(right)
            merged = first + second + [left | {step.new}, right | {step.new}, left | right]
            self.parts[min(i, j)] = merged
            del self.parts[max(i, j)]


def _compact(edges):
    vertices = sorted(set().union(*edges))
    index = {v: i for i, v in enumerate(vertices)}
    return Hypergraph.from_edges(len(vertices), ([index[v] for v in e] for e in edges))


def replay(certificate):
    """Rebuild the hypergraph a certificate describes.

    Args:
        certificate: the trace.

    Returns:
        The hypergraph, with edges in construction order.

    Raises:
        CertificateMismatch: when a step is invalid or the trace is incomplete.
    """
    forest = _Forest()
    for step in certificate.steps:
        forest.apply(step)
    if len(forest.parts) != 1:
        raise CertificateMismatch(f"trace leaves {len(forest.parts)} parts, expected one")
    n = len(forest.used)
    if forest.used != set(range(n)):
        raise CertificateMismatch(f"trace vertices are not 0..{n - 1}")
    if forest.a_pairs != set(certificate.a_pairs):
        raise CertificateMismatch("recorded A-pairs differ from the A steps")
    return Hypergraph.from_edges(n, forest.parts[0])


def parent_hypergraphs(certificate):
    """Return the operand(s) of the last step, relabeled compactly.

    Args:
        certificate: the trace.

    Returns:
        Empty list for an A step, one hypergraph for B or C, two for D.
    """
    forest = _Forest()
    for step in certificate.steps[:-1]:
        forest.apply(step)
    last = certificate.steps[-1]
    if isinstance(last, StepA):
        return []
    if isinstance(last, (StepB, StepC)):
        i, _ = forest._locate(last.host, len(last.host))
        return [_compact(forest.parts[i])]
    i, _ = forest._locate(last.left, 2)
    j, _ = forest._locate(last.right, 2)
    return [_compact(forest.parts[i]), _compact(forest.parts[j])]


def op_a():
    """Return H₂ with its one-step certificate.

    Returns:
        BMember on vertices {0, 1} with the edge {0, 1}.
    """
    pair = frozenset((0, 1))
    return BMember(Hypergraph.from_edges(2, [pair]), BCertificate((StepA(0, 1),), frozenset({pair})))


def _grow(member, host, size, step_type):
    host = frozenset(host)
    if len(host) != size or host not in member.hypergraph.edges:
        raise InvalidHost(f"{sorted(host)} is not a {size}-edge of the operand")
    h = member.hypergraph
    x, y = h.vertex_count, h.vertex_count + 1
    edges = list(h.edges)
    edges.remove(host)
    edges.extend([host | {x}, host | {y}, frozenset((x, y))])
    step = step_type(tuple(sorted(host)), (x, y))
    cert = BCertificate(member.certificate.steps + (step,), member.certificate.a_pairs)
    return BMember(Hypergraph.from_edges(h.vertex_count + 2, edges), cert)


def op_b(member, host):
    """Apply step B on a 2-edge host.

    Args:
        member: operand B'.
        host: a 2-edge {u, v} of B'.

    Returns:
        The new member with two more vertices.

    Raises:
        InvalidHost: when host is not a 2-edge of B'.
    """
    return _grow(member, host, 2, StepB)


def op_c(member, host):
    """Apply step C on a 3-edge host.

    Args:
        member: operand B'.
        host: a 3-edge {u, v, w} of B'.

    Returns:
        The new member with two more vertices.

    Raises:
        InvalidHost: when host is not a 3-edge of B'.
    """
    return _grow(member, host, 3, StepC)


def op_d(first, second, first_host, second_host):
    """Apply step D to two members through their host 2-edges.

    The canonically smaller operand is placed first, so the result does not
    depend on argument order.

    Args:
        first: operand B1.
        second: operand B2.
        first_host: a 2-edge of B1.
        second_host: a 2-edge of B2.

    Returns:
        The merged member with one new vertex.

    Raises:
        InvalidHost: when a host is not a 2-edge of its operand.
    """
    for member, host in ((first, first_host), (second, second_host)):
        if len(frozenset(host)) != 2 or frozenset(host) not in member.hypergraph.edges:
            raise InvalidHost(f"{sorted(host)} is not a 2-edge of its operand")
    if canonical_key(second.hypergraph) < canonical_key(first.hypergraph):
        first, second, first_host, second_host = second, first, second_host, first_host
    offset = first.hypergraph.vertex_count
    x = offset + second.hypergraph.vertex_count
    left = frozenset(first_host)
    right = frozenset(v + offset for v in second_host)
    first_edges = list(first.hypergraph.edges)
    first_edges.remove(left)
    second_edges = [frozenset(v + offset for v in e) for e in second.hypergraph.edges]
    second_edges.remove(right)
    edges = first_edges + second_edges + [left | {x}, right | {x}, left | right]
    shifted = second.certificate.relabel(lambda v: v + offset)
    step = StepD(tuple(sorted(left)), tuple(sorted(right)), x)
    cert = BCertificate(
        first.certificate.steps + shifted.steps + (step,),
        first.certificate.a_pairs | shifted.a_pairs,
    )
    return BMember(Hypergraph.from_edges(x + 1, edges), cert)


def _hosts(hypergraph, size):
    return sorted({tuple(sorted(e)) for e in hypergraph.edges if len(e) == size})


def generate_all_b(max_n):
    """Stream every member of B with at most ``max_n`` vertices, once per isomorphism class.

    Members come out in order of increasing n.

    Args:
        max_n: largest order to generate, at least 2.

    Yields:
        BMember representatives.

    Raises:
        ValueError: when max_n is below 2.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    seen = set()
    by_order = {}

    def admit(member):
        key = canonical_key(member.hypergraph)
        if key in seen:
            return False
        seen.add(key)
        by_order.setdefault(member.hypergraph.vertex_count, []).append(member)
        return True

    first = op_a()
    admit(first)
    yield first
    for n in range(3, max_n + 1):
        for member in list(by_order.get(n - 2, ())):
            for host in _hosts(member.hypergraph, 2):
                grown = op_b(member, host)
                if admit(grown):
                    yield grown
            for host in _hosts(member.hypergraph, 3):
                grown = op_c(member, host)
                if admit(grown):
                    yield grown
        for n1 in range(2, n):
            n2 = n - 1 - n1
            if n2 < n1:
                break
            firsts = list(by_order.get(n1, ()))
            seconds = list(by_order.get(n2, ()))
            for i, a in enumerate(firsts):
                for j, b in enumerate(seconds):
                    if n1 == n2 and j < i:
                        continue
                    for host_a in _hosts(a.hypergraph, 2):
                        for host_b in _hosts(b.hypergraph, 2):
                            merged = op_d(a, b, host_a, host_b)
                            if admit(merged):
                                yield merged
        logger.info(f"generate_all_b: n={n} members so far={len(seen)}")


_RECOGNITION_STORE = {}
_RECOGNITION_MEMO = State(lambda: _RECOGNITION_STORE)


def potential_numerator(hypergraph):
    """Return 6n + 4e₄ + 6e₃ + 10e₂ + 2, which is 24τ for every member of B."""
    weighted = sum(EDGE_WEIGHTS.get(len(e), 0) for e in hypergraph.edges)
    return VERTEX_WEIGHT * hypergraph.vertex_count + weighted + 2


def _plausible(hypergraph):
    """Cheap necessary conditions for membership."""
    if hypergraph.vertex_count < 2 or any(len(e) not in EDGE_WEIGHTS for e in hypergraph.edges):
        return False
    if not any(len(e) in (2, 3) for e in hypergraph.edges):
        return False
    if potential_numerator(hypergraph) % 24:
        return False
    return len(components(hypergraph)) == 1


def is_in_b(hypergraph, memo=None):
    """Recognize membership in B by undoing construction steps.

    Every pattern that looks like the image of a B, C or D step is undone in
    turn, with full backtracking; outcomes are memoized by canonical form.

    Args:
        hypergraph: the candidate.
        memo: optional State used as the memo table; the shared default is
            cleared once it holds more than RECOGNITION_MEMO_MAX entries.

    Returns:
        A BCertificate in the candidate's vertex indices, or None.

    Raises:
        Unsupported: when a candidate above the recognition cap passes every
            filter, the exact identity 24τ = 6n + 4e₄ + 6e₃ + 10e₂ + 2 included,
            so that absence cannot be decided.
    """
    plain = Hypergraph(hypergraph.vertex_count, hypergraph.edges)
    if plain.vertex_count > RECOGNITION_MAX_N:
        if not _plausible(plain) or not (any(_undo_grow(plain)) or any(_undo_merge(plain))):
            return None
        if 24 * tau_bnb(plain).tau != potential_numerator(plain):
            return None
        raise Unsupported(f"recognition is capped at n={RECOGNITION_MAX_N}, got n={plain.vertex_count}")
    if memo is None:
        if len(_RECOGNITION_STORE) > RECOGNITION_MEMO_MAX:
            logger.debug(f"recognition memo reached {len(_RECOGNITION_STORE)} entries; clearing")
            _RECOGNITION_STORE.clear()
        memo = _RECOGNITION_MEMO
    return _recognize(plain, memo)


def _recognize(hypergraph, memo):
    if not _plausible(hypergraph):
        return None
    order = canonical_labeling(hypergraph)
    canon = relabel(hypergraph, order)
    key = f"{canon.vertex_count}|{canon.canonical_edges}"
    if key in memo:
        cached = memo[key]
        cert = BCertificate.from_dict(cached) if cached else None
    else:
        cert = _recognize_canonical(canon, memo)
        memo[key] = cert.to_dict() if cert else False
    if cert is None:
        return None
    return cert.relabel(lambda v: order[v])


def _recognize_canonical(hypergraph, memo):
    if hypergraph.vertex_count == 2 and hypergraph.m == 1:
        return op_a().certificate
    for parent, lift, step in _undo_grow(hypergraph):
        cert = _recognize(parent, memo)
        if cert is not None:
            lifted = cert.relabel(lambda v: lift[v])
            return BCertificate(lifted.steps + (step,), lifted.a_pairs)
    for parts, step in _undo_merge(hypergraph):
        certs = []
        for part, vertices in parts:
            cert = _recognize(part, memo)
            if cert is None:
                break
            certs.append(cert.relabel(lambda v, vertices=vertices: vertices[v]))
        else:
            steps = certs[0].steps + certs[1].steps + (step,)
            return BCertificate(steps, certs[0].a_pairs | certs[1].a_pairs)
    return None


def _without(hypergraph, drop_vertices, drop_edges, extra_edges):
    """Delete vertices and edges, add edges; return the parent and its lift map."""
    lift = [v for v in range(hypergraph.vertex_count) if v not in drop_vertices]
    index = {v: i for i, v in enumerate(lift)}
    edges = [e for i, e in enumerate(hypergraph.edges) if i not in drop_edges] + list(extra_edges)
    return Hypergraph.from_edges(len(lift), ([index[v] for v in e] for e in edges)), lift


def _undo_grow(hypergraph):
    """Yield (parent, lift, step) for every pattern left by a B or C step."""
    edges = hypergraph.edges
    degrees = hypergraph.degrees
    for i, pair in enumerate(edges):
        if len(pair) != 2:
            continue
        x, y = sorted(pair)
        if degrees[x] != 2 or degrees[y] != 2:
            continue
        gx = next(j for j, e in enumerate(edges) if x in e and j != i)
        gy = next(j for j, e in enumerate(edges) if y in e and j != i)
        if gx == gy or y in edges[gx] or x in edges[gy]:
            continue
        core = edges[gx] - {x}
        if core != edges[gy] - {y} or len(core) not in (2, 3):
            continue
        parent, lift = _without(hypergraph, {x, y}, {i, gx, gy}, [core])
        step_type = StepB if len(core) == 2 else StepC
        yield parent, lift, step_type(tuple(sorted(core)), (x, y))


def _undo_merge(hypergraph):
    """Yield ((part, vertices) pairs, step) for every pattern left by a D step."""
    edges = hypergraph.edges
    degrees = hypergraph.degrees
    for x in range(hypergraph.vertex_count):
        if degrees[x] != 2:
            continue
        ga, gb = [j for j, e in enumerate(edges) if x in e]
        if len(edges[ga]) != 3 or len(edges[gb]) != 3:
            continue
        left, right = edges[ga] - {x}, edges[gb] - {x}
        if left & right:
            continue
        bridge = next((j for j, e in enumerate(edges) if e == left | right), None)
        if bridge is None:
            continue
        parent, lift = _without(hypergraph, {x}, {ga, gb, bridge}, [left, right])
        parts = components(parent)
        if len(parts) != 2:
            continue
        placed = []
        for part in parts:
            vertices = tuple(lift[v] for v in part.vertices)
            placed.append((canonical_key(part.hypergraph), part.hypergraph, vertices))
        placed.sort(key=lambda item: item[0])
        (_, first, first_vertices), (_, second, second_vertices) = placed
        first_host = left if left <= set(first_vertices) else right
        second_host = right if first_host is left else left
        if not second_host <= set(second_vertices):
            continue
        step = StepD(tuple(sorted(first_host)), tuple(sorted(second_host)), x)
        yield [(first, first_vertices), (second, second_vertices)], step


@dataclass(frozen=True)
class Lemma5Report:
    """Outcome of the thirteen structural checks on one member.

    Attrs:
        n: order of the member.
        tau: its transversal number.
        checks: part name ("i" .. "xiii") to outcome.
        notes: part name to a failure detail.
    """

    n: int
    tau: int
    checks: dict
    notes: dict

    @property
    def passed(self):
        """Return True when every part holds."""
        return all(self.checks.values())

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {
            "n": self.n,
            "tau": self.tau,
            "passed": self.passed,
            "checks": dict(self.checks),
            "notes": dict(self.notes),
        }


def verify_lemma5(member, node_budget=None, seed=LEMMA5_SAMPLE_SEED):
    """Check every structural property of a member of B by direct computation.

    Args:
        member: the member and its certificate.
        node_budget: solver node budget.
        seed: seed for sampling pair triples on larger members.

    Returns:
        Lemma5Report.

    Raises:
        CertificateMismatch: when the certificate does not replay to the member.
    """
    h, cert = member.hypergraph, member.certificate
    if replay(cert) != h:
        raise CertificateMismatch("certificate does not replay to the given hypergraph")
    n, m = h.vertex_count, h.m
    tau = tau_bnb(h, node_budget=node_budget).tau
    checks, notes = {}, {}

    def record(part, outcome, note=""):
        checks[part] = bool(outcome)
        if not outcome and note:
            notes[part] = note

    last = cert.steps[-1]
    parent_taus = [tau_bnb(p, node_budget=node_budget).tau for p in parent_hypergraphs(cert)]
    grown = isinstance(last, (StepB, StepC))
    merged = isinstance(last, StepD)
    record("i", not grown or tau == parent_taus[0] + 1, f"tau={tau}, parent tau={parent_taus}")
    record("ii", not merged or tau == sum(parent_taus), f"tau={tau}, parent taus={parent_taus}")
    record("iii", 24 * tau == potential_numerator(h), f"24*tau={24 * tau}, formula={potential_numerator(h)}")

    pairs = [tuple(sorted(p)) for p in cert.a_pairs]
    flat = [v for p in pairs for v in p]
    record("iv", len(flat) == len(set(flat)), f"A-pairs {sorted(pairs)} intersect")

    bad_edges = [i for i in range(m) if tau_bnb(delete_edge(h, i), node_budget=node_budget).tau != tau - 1]
    record("v", not bad_edges, f"edges {bad_edges} do not drop tau")

    bad_vertices = [s for s in range(n) if tau_bnb(h, must_include=(s,), node_budget=node_budget).tau != tau]
    record("vi", not bad_vertices, f"vertices {bad_vertices} lie in no minimum transversal")

    tsets = [sum(1 << v for v in t) for t in minimum_transversals(h, node_budget=node_budget)]
    a_pairs = set(cert.a_pairs)
    wrong_pairs = []
    for s, t in combinations(range(n), 2):
        both = (1 << s) | (1 << t)
        exists = any(mask & both == both for mask in tsets)
        if exists == (frozenset((s, t)) in a_pairs):
            wrong_pairs.append((s, t))
    record("vii", not wrong_pairs, f"pairs {wrong_pairs[:5]} break the A-pair law")

    record("viii", _pair_triples_hit(n, tsets, seed), "some pair triple misses every minimum transversal")

    two_edges = [e for e in h.edges if len(e) == 2]
    four_edges = [e for e in h.edges if len(e) == 4]
    three_edges = [e for e in h.edges if len(e) == 3]
    record("ix", all(sum(1 for f in two_edges if f & e) < 3 for e in four_edges), "a 4-edge meets three 2-edges")

    is_h2 = n == 2
    record("x", is_h2 or min_degree(h) >= 2, f"min degree {min_degree(h)}")

    lonely = [v for v in range(n) if h.degrees[v] == 2 and not any(v in e and len(e) <= 3 for e in h.edges)]
    record("xi", not lonely, f"degree-2 vertices {lonely} lie only in 4-edges")

    overlapping_threes = [(a, b) for a, b in combinations(three_edges, 2) if len(a & b) >= 2]
    close_fours = any(len(a & b) == 3 for a, b in combinations(four_edges, 2))
    xii = is_h2 or not two_edges or bool(overlapping_threes) or close_fours
    record("xii", xii, "no overlapping 3-edges or close 4-edges")

    xiii = True
    if not is_h2 and not close_fours:
        xiii = all(any(f & a and f & b for a, b in overlapping_threes) for f in two_edges)
    record("xiii", xiii, "a 2-edge meets no overlapping pair of 3-edges")

    logger.debug(f"verify_lemma5 n={n} tau={tau} max_degree={max_degree(h)} checks={checks}")
    return Lemma5Report(n, tau, {part: checks[part] for part in LEMMA5_PARTS}, notes)


def _pair_triples_hit(n, tsets, seed):
    """Check that every triple of vertex pairs is met by one minimum transversal."""
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return True
    hit = {}
    for s, t in pairs:
        pair = (1 << s) | (1 << t)
        hit[(s, t)] = sum(1 << i for i, mask in enumerate(tsets) if mask & pair)
    if n <= LEMMA5_EXHAUSTIVE_TRIPLES_MAX_N:
        triples = combinations_with_replacement(pairs, 3)
    else:
        rng = random.Random(seed)
        triples = (tuple(rng.choice(pairs) for _ in range(3)) for _ in range(LEMMA5_TRIPLE_SAMPLES))
    return all(hit[a] & hit[b] & hit[c] for a, b, c in triples)


def verify_all(max_n, node_budget=None):
    """Generate every member up to ``max_n`` and verify each one.

    Args:
        max_n: largest order.
        node_budget: solver node budget.

    Yields:
        (BMember, Lemma5Report) pairs.
    """
    for count, member in enumerate(generate_all_b(max_n), start=1):
        report = verify_lemma5(member, node_budget=node_budget)
        if not report.passed:
            logger.error(f"lemma check failed on {member.hypergraph}: {report.notes}")
        if count % PROGRESS_EVERY == 0:
            logger.info(f"verified {count} members")
        yield member, report

