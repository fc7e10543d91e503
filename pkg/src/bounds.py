# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Potential function and transversal bounds, certified on concrete instances.

Every inequality is checked in integers: both sides are multiplied by the
common denominator, so ``lhs`` is always ``scale * tau``.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from canonical import isomorphic
from errors import HypothesisViolated
from family_b import is_in_b
from hypergraph import Hypergraph, components, is_regular, is_uniform, max_degree
from literals import B1_WEIGHT, B_WEIGHT, CLASS_H_EDGE_SIZES, CLASS_H_MAX_DEGREE, EDGE_WEIGHTS, VERTEX_WEIGHT
from solver import tau_bnb

logger = logging.getLogger(__name__)


class TheoremId(str, Enum):
    """Inequalities the engine can certify."""

    T1_PHI = "T1_phi"
    T2_QUARTER_SIXTH = "T2_quarter_sixth"
    T3_THREE_EIGHTHS = "T3_three_eighths"
    CM_6TAU = "CM_6tau"
    TY_21 = "TY_21"
    TD_3N7 = "TD_3n7"
    CM_5N12 = "CM_5n12"
    LC_7N18 = "LC_7n18"
    TY_8N21 = "TY_8n21"


# Short names accepted on the command line.
THEOREM_ALIASES = {
    "t1": TheoremId.T1_PHI,
    "t2": TheoremId.T2_QUARTER_SIXTH,
    "t3": TheoremId.T3_THREE_EIGHTHS,
    "cm": TheoremId.CM_6TAU,
    "ty": TheoremId.TY_21,
    "cm5n12": TheoremId.CM_5N12,
    "lc7n18": TheoremId.LC_7N18,
    "ty8n21": TheoremId.TY_8N21,
}


@dataclass(frozen=True)
class BoundReport:
    """Evaluation of one inequality on one instance.

    Attrs:
        theorem_id: which inequality.
        tau: the exact transversal (or total domination) number.
        scale: multiplier clearing denominators; lhs = scale * tau.
        lhs: left side, an integer.
        rhs: right side, an integer.
        holds: lhs <= rhs.
        strict: lhs < rhs.
        equality_diagnosis: structure note for equality cases.
        strict_required: the inequality must be strict on this instance.
        notes: extra quantities, e.g. b and b¹.
    """

    theorem_id: TheoremId
    tau: int
    scale: int
    lhs: int
    rhs: int
    holds: bool
    strict: bool
    equality_diagnosis: Optional[str] = None
    strict_required: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def slack(self):
        """Return rhs - lhs."""
        return self.rhs - self.lhs

    @property
    def passed(self):
        """Return True when the inequality holds, strictly where required."""
        return self.holds and (self.strict or not self.strict_required)

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {
            "theorem": self.theorem_id.value,
            "tau": self.tau,
            "scale": self.scale,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "strict": self.strict,
            "passed": self.passed,
            "strict_required": self.strict_required,
            "equality_diagnosis": self.equality_diagnosis,
            "notes": dict(self.notes),
        }


def make_report(theorem_id, tau, scale, rhs, diagnosis=None, strict_required=False, notes=None):
    """Build a BoundReport from tau and an integer right side.

    Args:
        theorem_id: which inequality.
        tau: the exact value.
        scale: left-side multiplier.
        rhs: right side.
        diagnosis: optional equality note.
        strict_required: whether equality counts as a failure.
        notes: extra quantities.

    Returns:
        BoundReport.
    """
    lhs = scale * tau
    holds, strict = lhs <= rhs, lhs < rhs
    report = BoundReport(theorem_id, tau, scale, lhs, rhs, holds, strict, diagnosis, strict_required, notes or {})
    if not report.passed:
        logger.error(f"{theorem_id.value} fails: {lhs} vs {rhs}")
    return report


def omega(edge):
    """Return the weight an edge contributes to the potential.

    Args:
        edge: a set of 2, 3 or 4 vertices.

    Returns:
        10, 6 or 4.

    Raises:
        ValueError: for any other edge size.
    """
    try:
        return EDGE_WEIGHTS[len(edge)]
    except KeyError:
        raise ValueError(f"edge weights are defined for sizes 2-4, got size {len(edge)}") from None


def _has_small_edge(hypergraph):
    # Members of B always contain a 2-edge or a 3-edge.
    return any(len(e) in (2, 3) for e in hypergraph.edges)


def b_count(hypergraph):
    """Count the components of H that belong to B.

    Args:
        hypergraph: the hypergraph.

    Returns:
        b(H).

    Raises:
        Unsupported: when a component cannot be decided under the recognition cap.
    """
    if not _has_small_edge(hypergraph):
        return 0
    return sum(1 for part in components(hypergraph) if part.hypergraph.m and is_in_b(part.hypergraph) is not None)


def b_i_count(hypergraph, i):
    """Compute bⁱ(H).

    Candidates are the components of H minus i of its edges that belong to B
    and meet exactly i edges outside themselves; the answer is the largest
    number of pairwise vertex-disjoint candidates.

    Args:
        hypergraph: the hypergraph.
        i: number of outside edges, at least 0.

    Returns:
        bⁱ(H).

    Raises:
        ValueError: when i is negative.
        Unsupported: when a candidate cannot be decided under the recognition cap.
    """
    if i < 0:
        raise ValueError(f"i must be nonnegative, got {i}")
    if not _has_small_edge(hypergraph):
        return 0
    candidates = {}
    for removed in combinations(range(hypergraph.m), i):
        removed_edges = [hypergraph.edges[j] for j in removed]
        kept = [e for j, e in enumerate(hypergraph.edges) if j not in removed]
        for part in components(Hypergraph(hypergraph.vertex_count, tuple(kept))):
            if not part.hypergraph.m:
                continue
            vertices = frozenset(part.vertices)
            if vertices in candidates:
                continue
            if sum(1 for e in removed_edges if e & vertices) != i:
                continue
            if is_in_b(part.hypergraph) is not None:
                candidates[vertices] = sum(1 << v for v in vertices)
    return _max_disjoint(sorted(candidates.values()))


def _max_disjoint(masks):
    best = 0

    def search(index, used, count):
        nonlocal best
        if count + len(masks) - index <= best:
            return
        if index == len(masks):
            best = count
            return
        if not masks[index] & used:
            search(index + 1, used | masks[index], count + 1)
        search(index + 1, used, count)

    search(0, 0, 0)
    return best


def phi(hypergraph, b=None, b1=None):
    """Return φ(H) = 6n + 4e₄ + 6e₃ + 10e₂ + 2b + b¹.

    Args:
        hypergraph: hypergraph with edge sizes 2-4.
        b: b(H) when already counted.
        b1: b¹(H) when already counted.

    Returns:
        The integer potential.

    Raises:
        ValueError: for an edge outside sizes 2-4.
    """
    weighted = sum(omega(e) for e in hypergraph.edges)
    base = VERTEX_WEIGHT * hypergraph.vertex_count + weighted
    if b is None:
        b = b_count(hypergraph)
    if b1 is None:
        b1 = b_i_count(hypergraph, 1)
    return base + B_WEIGHT * b + B1_WEIGHT * b1


def _require(condition, hypothesis, theorem_id):
    if not condition:
        raise HypothesisViolated(hypothesis, f"{theorem_id.value} requires {hypothesis}")


def _check_hypotheses(hypergraph, theorem_id):
    """Raise HypothesisViolated unless H satisfies the theorem's hypotheses."""
    if theorem_id == TheoremId.TD_3N7:
        raise HypothesisViolated("graph instance", "TD_3n7 is certified on graphs, see domination.check_3n7")
    if theorem_id == TheoremId.T1_PHI:
        sizes_ok = all(len(e) in CLASS_H_EDGE_SIZES for e in hypergraph.edges)
        _require(sizes_ok, "edge sizes 2-4", theorem_id)
        _require(max_degree(hypergraph) <= CLASS_H_MAX_DEGREE, "max degree <= 3", theorem_id)
        return
    _require(is_uniform(hypergraph, 4), "4-uniform", theorem_id)
    if theorem_id == TheoremId.T2_QUARTER_SIXTH:
        _require(max_degree(hypergraph) <= CLASS_H_MAX_DEGREE, "max degree <= 3", theorem_id)
    elif theorem_id in (TheoremId.T3_THREE_EIGHTHS, TheoremId.CM_5N12, TheoremId.LC_7N18, TheoremId.TY_8N21):
        _require(is_regular(hypergraph, 3), "3-regular", theorem_id)


def _h4():
    return Hypergraph.from_edges(4, [[0, 1, 2, 3]])


def _h6():
    return Hypergraph.from_edges(6, [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]])


def diagnose_cm_equality(hypergraph):
    """Describe how the components of an equality instance match H₄ and H₆.

    Args:
        hypergraph: a 4-uniform hypergraph with 6τ = n + 2m.

    Returns:
        "all components H4/H6" or a note listing the other components.
    """
    extremal = (_h4(), _h6())
    others = [
        list(part.vertices)
        for part in components(hypergraph)
        if not any(isomorphic(part.hypergraph, h) for h in extremal)
    ]
    if not others:
        return "all components H4/H6"
    return f"components on vertices {others} are not isomorphic to H4 or H6"


def certify(hypergraph, theorem_id, node_budget=None, tau=None):
    """Certify one inequality on a hypergraph with exact arithmetic.

    Args:
        hypergraph: the instance.
        theorem_id: which inequality.
        node_budget: solver node budget.
        tau: τ(H) when already known.

    Returns:
        BoundReport.

    Raises:
        HypothesisViolated: naming the first failed hypothesis.
    """
    theorem_id = TheoremId(theorem_id)
    _check_hypotheses(hypergraph, theorem_id)
    if tau is None:
        tau = tau_bnb(hypergraph, node_budget=node_budget).tau
    n, m = hypergraph.vertex_count, hypergraph.m

    if theorem_id == TheoremId.T1_PHI:
        b, b1 = b_count(hypergraph), b_i_count(hypergraph, 1)
        value = phi(hypergraph, b=b, b1=b1)
        notes = {"b": b, "b1": b1, "phi": value, "phi_parity": "odd" if value % 2 else "even"}
        return make_report(theorem_id, tau, 24, value, strict_required=b1 % 2 == 1, notes=notes)
    if theorem_id == TheoremId.T2_QUARTER_SIXTH:
        return make_report(theorem_id, tau, 12, 3 * n + 2 * m)
    if theorem_id == TheoremId.T3_THREE_EIGHTHS:
        return make_report(theorem_id, tau, 8, 3 * n)
    if theorem_id == TheoremId.CM_6TAU:
        rhs = n + 2 * m
        diagnosis = diagnose_cm_equality(hypergraph) if 6 * tau == rhs else None
        return make_report(theorem_id, tau, 6, rhs, diagnosis)
    if theorem_id == TheoremId.TY_21:
        return make_report(theorem_id, tau, 21, 5 * n + 4 * m)
    if theorem_id == TheoremId.CM_5N12:
        return make_report(theorem_id, tau, 12, 5 * n)
    if theorem_id == TheoremId.LC_7N18:
        return make_report(theorem_id, tau, 18, 7 * n)
    return make_report(theorem_id, tau, 21, 8 * n)


def certify_all(hypergraph, node_budget=None):
    """Certify every inequality whose hypotheses the instance meets.

    Args:
        hypergraph: the instance.
        node_budget: solver node budget.

    Returns:
        List of BoundReport, in TheoremId order.
    """
    tau = None
    reports = []
    for theorem_id in TheoremId:
        try:
            _check_hypotheses(hypergraph, theorem_id)
        except HypothesisViolated as exc:
            logger.debug(f"skipping {theorem_id.value}: {exc.hypothesis}")
            continue
        if tau is None:
            tau = tau_bnb(hypergraph, node_budget=node_budget).tau
        reports.append(certify(hypergraph, theorem_id, tau=tau))
    return reports
