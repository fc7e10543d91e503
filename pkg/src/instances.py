# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Named extremal instances, seeded generators and the conjecture scanner."""

import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Optional

import networkx as nx

from domination import bipartite_complement_heawood, fano_lines, heawood_graph
from errors import GenerationFailed, UnknownInstance
from family_b import op_a, op_d
from formats import write_hypergraph
from hypergraph import Hypergraph, is_linear, is_regular, is_uniform, max_degree
from literals import PROGRESS_EVERY
from solver import tau_bnb, tau_bruteforce

logger = logging.getLogger(__name__)

MODES = ("regular", "max_degree", "linear")
CONJECTURES = ("c1", "c2", "c3")

# Extremal witnesses found by discover_h8 and discover_h10, frozen.
H8_EDGES = ((0, 1, 2, 3), (0, 4, 5, 6), (0, 1, 4, 7), (1, 5, 6, 7), (2, 3, 4, 7), (2, 3, 5, 6))
H10_EDGES = ((0, 1, 2, 3), (0, 4, 5, 6), (1, 4, 7, 8), (2, 5, 7, 9), (3, 6, 8, 9))


def _h6():
    labels = ("a1", "a2", "b1", "b2", "c1", "c2")
    edges = [("a1", "a2", "b1", "b2"), ("a1", "a2", "c1", "c2"), ("b1", "b2", "c1", "c2")]
    return Hypergraph.from_labeled_edges(labels, edges)


def _f7bar():
    return Hypergraph.from_edges(7, [sorted(set(range(7)) - line) for line in fano_lines()])


def _f():
    h2 = op_a()
    return op_d(h2, h2, (0, 1), (0, 1)).hypergraph


_NAMED = {
    "h2": lambda: op_a().hypergraph,
    "h4": lambda: Hypergraph.from_edges(4, [[0, 1, 2, 3]]),
    "h6": _h6,
    "h8": lambda: Hypergraph.from_edges(8, H8_EDGES),
    "h10": lambda: Hypergraph.from_edges(10, H10_EDGES),
    "f": _f,
    "f7bar": _f7bar,
    "heawood": heawood_graph,
    "heawood_complement": bipartite_complement_heawood,
}


def instance_names():
    """Return the known instance names."""
    return tuple(_NAMED)


def named(name):
    """Return a stored instance by name (case-insensitive).

    Args:
        name: one of instance_names().

    Returns:
        Hypergraph, or networkx.Graph for the Heawood graphs.

    Raises:
        UnknownInstance: for an unknown name.
    """
    try:
        return _NAMED[name.lower()]()
    except KeyError:
        raise UnknownInstance(f"unknown instance {name!r}; known: {', '.join(_NAMED)}") from None


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a random hypergraph generator.

    Attrs:
        k: edge size.
        n: vertex count.
        mode: "regular", "max_degree" or "linear".
        d: degree for regular and max_degree modes; optional cap in linear mode.
        seed: random seed.
        trials: restarts before giving up.
        m: target edge count; None means regular's n·d/k or a maximal packing.
        allow_duplicates: accept repeated edges.
        edge_sizes: mixed edge sizes for max_degree mode instead of k.
    """

    k: int = 4
    n: int = 8
    mode: str = "regular"
    d: Optional[int] = 3
    seed: int = 0
    trials: int = 10_000
    m: Optional[int] = None
    allow_duplicates: bool = False
    edge_sizes: Optional[tuple] = None

    def __post_init__(self):
        """Validate the configuration.

        Raises:
            ValueError: in case of an inconsistent configuration.
        """
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        sizes = self.edge_sizes or (self.k,)
        if min(sizes) < 1 or max(sizes) > self.n:
            raise ValueError(f"edge sizes {sizes} do not fit on {self.n} vertices")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.mode in ("regular", "max_degree") and (self.d is None or self.d < 1):
            raise ValueError(f"{self.mode} mode needs a positive degree d")
        if self.mode == "regular" and (self.n * self.d) % self.k:
            raise ValueError(f"regular mode needs k | n*d, got n*d={self.n * self.d} and k={self.k}")
        if self.edge_sizes and self.mode != "max_degree":
            raise ValueError("mixed edge sizes are only supported in max_degree mode")


def random_hypergraph(cfg):
    """Generate a random hypergraph, reproducibly from the seed.

    Args:
        cfg: GeneratorConfig.

    Returns:
        Hypergraph.

    Raises:
        GenerationFailed: when no instance is found within cfg.trials restarts.
    """
    rng = random.Random(cfg.seed)
    build = {"regular": _configuration_model, "max_degree": _bounded_degree, "linear": _linear_packing}[cfg.mode]
    for _ in range(cfg.trials):
        edges = build(cfg, rng)
        if edges is not None:
            return Hypergraph.from_edges(cfg.n, edges)
    raise GenerationFailed(f"no {cfg.mode} instance with k={cfg.k}, n={cfg.n} after {cfg.trials} trials")


def _configuration_model(cfg, rng):
    points = [v for v in range(cfg.n) for _ in range(cfg.d)]
    rng.shuffle(points)
    edges = []
    seen = set()
    for i in range(0, len(points), cfg.k):
        edge = frozenset(points[i : i + cfg.k])
        if len(edge) != cfg.k:
            return None
        if edge in seen and not cfg.allow_duplicates:
            return None
        seen.add(edge)
        edges.append(edge)
    return edges


def _bounded_degree(cfg, rng):
    sizes = cfg.edge_sizes or (cfg.k,)
    capacity = [cfg.d] * cfg.n
    target = cfg.m if cfg.m is not None else rng.randint(1, max(1, cfg.n * cfg.d // min(sizes)))
    edges = []
    seen = set()
    stalls = 0
    while len(edges) < target and stalls < 10 * cfg.n:
        size = rng.choice(sizes)
        open_vertices = [v for v in range(cfg.n) if capacity[v]]
        if len(open_vertices) < size:
            stalls += 1
            if len(open_vertices) < min(sizes):
                break
            continue
        edge = frozenset(rng.sample(open_vertices, size))
        if edge in seen and not cfg.allow_duplicates:
            stalls += 1
            continue
        seen.add(edge)
        edges.append(edge)
        for v in edge:
            capacity[v] -= 1
    if cfg.m is not None and len(edges) != cfg.m:
        return None
    return edges or None


def _linear_packing(cfg, rng):
    used_pairs = set()
    degree = [0] * cfg.n
    edges = []
    stalls = 0
    while (cfg.m is None or len(edges) < cfg.m) and stalls < 20 * cfg.n:
        edge = frozenset(rng.sample(range(cfg.n), cfg.k))
        pairs = set(combinations(sorted(edge), 2))
        if pairs & used_pairs or (cfg.d is not None and any(degree[v] >= cfg.d for v in edge)):
            stalls += 1
            continue
        stalls = 0
        used_pairs |= pairs
        edges.append(edge)
        for v in edge:
            degree[v] += 1
    if cfg.m is not None and len(edges) != cfg.m:
        return None
    return edges or None


def random_class_h(n, seed, trials=1_000):
    """Generate a hypergraph with edge sizes 2-4 and maximum degree at most 3.

    Args:
        n: vertex count.
        seed: random seed.
        trials: restarts.

    Returns:
        Hypergraph.
    """
    cfg = GeneratorConfig(k=4, n=n, mode="max_degree", d=3, seed=seed, trials=trials, edge_sizes=(2, 3, 4))
    return random_hypergraph(cfg)


def random_connected_graph(n, seed, p=0.3, trials=1_000):
    """Generate a connected G(n, p) graph.

    Args:
        n: vertex count, at least 2.
        seed: random seed.
        p: edge probability.
        trials: resamples before giving up.

    Returns:
        networkx.Graph on nodes 0..n-1.

    Raises:
        GenerationFailed: when no sample is connected.
    """
    rng = random.Random(seed)
    for _ in range(trials):
        graph = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        if nx.is_connected(graph):
            return graph
    raise GenerationFailed(f"no connected G({n}, {p}) after {trials} trials")


def random_min_degree_graph(n, seed, min_degree=4, extra_edges=0):
    """Generate a graph of minimum degree at least ``min_degree``.

    A random regular graph plus ``extra_edges`` random additional edges.

    Args:
        n: vertex count with n * min_degree even.
        seed: random seed.
        min_degree: degree of the regular base graph.
        extra_edges: additional random edges.

    Returns:
        networkx.Graph on nodes 0..n-1.
    """
    rng = random.Random(seed)
    graph = nx.random_regular_graph(min_degree, n, seed=rng.randrange(2**32))
    missing = [pair for pair in combinations(range(n), 2) if not graph.has_edge(*pair)]
    graph.add_edges_from(rng.sample(missing, min(extra_edges, len(missing))))
    return graph


def _exhaustive(n, k, m, accept, linear=False, degree=None, node_budget=10**6):
    """Depth-first search over edge sets in lexicographic order, first edge fixed."""
    candidates = [frozenset(c) for c in combinations(range(n), k)]
    first = frozenset(range(k))
    nodes = 0

    def search(start, edges, degrees, pairs):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise GenerationFailed(f"search budget of {node_budget} nodes exhausted")
        if len(edges) == m:
            found = Hypergraph.from_edges(n, edges)
            return found if accept(found) else None
        for index in range(start, len(candidates)):
            edge = candidates[index]
            low = min(edge)
            # Every vertex below the smallest vertex of the next edge is final.
            if degree is not None and any(degrees[v] < degree for v in range(low)):
                return None
            if degree is not None and any(degrees[v] >= degree for v in edge):
                continue
            edge_pairs = set(combinations(sorted(edge), 2))
            if linear and edge_pairs & pairs:
                continue
            for v in edge:
                degrees[v] += 1
            found = search(index + 1, edges + [edge], degrees, pairs | edge_pairs)
            for v in edge:
                degrees[v] -= 1
            if found is not None:
                return found
        return None

    degrees = [0] * n
    for v in first:
        degrees[v] += 1
    found = search(candidates.index(first) + 1, [first], degrees, set(combinations(sorted(first), 2)))
    if found is None:
        raise GenerationFailed(f"no instance with n={n}, k={k}, m={m} passes the filter")
    return found


def discover_h8(node_budget=10**6):
    """Search for a 3-regular 4-uniform hypergraph on 8 vertices with τ = 3.

    Args:
        node_budget: search node budget.

    Returns:
        Hypergraph.

    Raises:
        GenerationFailed: when the budget runs out first.
    """
    return _exhaustive(8, 4, 6, lambda h: tau_bruteforce(h).tau == 3, degree=3, node_budget=node_budget)


def discover_h10(node_budget=10**6):
    """Search for a linear 4-uniform hypergraph with n = 10, m = 5 and τ = 3.

    The search is restricted to 2-regular instances, where the degree count
    forces every edge to meet every other.

    Args:
        node_budget: search node budget.

    Returns:
        Hypergraph.

    Raises:
        GenerationFailed: when the budget runs out first.
    """
    return _exhaustive(10, 4, 5, lambda h: tau_bruteforce(h).tau == 3, linear=True, degree=2, node_budget=node_budget)


@dataclass(frozen=True)
class ConjectureCheck:
    """One instance measured against a conjectured bound, in integers.

    Attrs:
        which: "c1", "c2" or "c3".
        tau: exact transversal number.
        lhs: scaled tau.
        rhs: scaled bound.
    """

    which: str
    tau: int
    lhs: int
    rhs: int

    @property
    def violated(self):
        """Return True when lhs > rhs."""
        return self.lhs > self.rhs

    @property
    def tight(self):
        """Return True when lhs == rhs."""
        return self.lhs == self.rhs

    @property
    def ratio(self):
        """Return lhs / rhs as an exact fraction."""
        return Fraction(self.lhs, self.rhs) if self.rhs else Fraction(0)


def evaluate_conjecture(hypergraph, which, k=4, tau=None, node_budget=None):
    """Compare τ with a conjectured bound.

    c1: τ ≤ n/k + m/6 for k-uniform Δ ≤ 3; c2: τ ≤ n/4 + m/6 and c3: τ ≤ (n + m)/5
    for linear 4-uniform hypergraphs.

    Args:
        hypergraph: the instance.
        which: "c1", "c2" or "c3".
        k: uniformity for c1.
        tau: τ(H) when already known.
        node_budget: solver node budget.

    Returns:
        ConjectureCheck.

    Raises:
        ValueError: for an unknown conjecture.
    """
    if which not in CONJECTURES:
        raise ValueError(f"conjecture must be one of {', '.join(CONJECTURES)}, got {which!r}")
    if tau is None:
        tau = tau_bnb(hypergraph, node_budget=node_budget).tau
    n, m = hypergraph.vertex_count, hypergraph.m
    if which == "c1":
        return ConjectureCheck(which, tau, 6 * k * tau, 6 * n + k * m)
    if which == "c2":
        return ConjectureCheck(which, tau, 12 * tau, 3 * n + 2 * m)
    return ConjectureCheck(which, tau, 5 * tau, n + m)


@dataclass(frozen=True)
class Violation:
    """A would-be counterexample with the value from each solver.

    Attrs:
        seed: generator seed.
        hypergraph: the instance.
        tau: branch-and-bound value.
        tau_bruteforce: brute-force value.
    """

    seed: int
    hypergraph: Hypergraph
    tau: int
    tau_bruteforce: int


@dataclass(frozen=True)
class ScanReport:
    """Evidence gathered by a conjecture scan.

    Attrs:
        which: the conjecture.
        instances: instances examined.
        violations: confirmed violations, by seed.
        tight: (seed, digest) of every equality case, by seed.
        max_ratio: largest scaled tau over bound seen.
        failures: seeds where generation failed.
        disagreements: violations reported by branch-and-bound that brute
            force did not confirm, by seed.
    """

    which: str
    instances: int = 0
    violations: tuple = ()
    tight: tuple = ()
    max_ratio: Fraction = Fraction(0)
    failures: tuple = ()
    disagreements: tuple = ()

    def merge(self, other):
        """Combine two shard reports; the result does not depend on order.

        Args:
            other: report for the same conjecture.

        Returns:
            The merged ScanReport.

        Raises:
            ValueError: when the conjectures differ.
        """
        if other.which != self.which:
            raise ValueError(f"cannot merge {self.which} and {other.which} scans")
        return ScanReport(
            self.which,
            self.instances + other.instances,
            tuple(sorted(self.violations + other.violations, key=lambda v: v.seed)),
            tuple(sorted(self.tight + other.tight)),
            max(self.max_ratio, other.max_ratio),
            tuple(sorted(self.failures + other.failures)),
            tuple(sorted(self.disagreements + other.disagreements, key=lambda v: v.seed)),
        )

    def to_dict(self):
        """Return a JSON-friendly form."""
        return {
            "which": self.which,
            "instances": self.instances,
            "violations": [
                {"seed": v.seed, "digest": v.hypergraph.digest(), "tau": v.tau, "tau_bruteforce": v.tau_bruteforce}
                for v in self.violations
            ],
            "tight": [{"seed": seed, "digest": digest} for seed, digest in self.tight],
            "max_ratio": f"{self.max_ratio.numerator}/{self.max_ratio.denominator}",
            "failures": list(self.failures),
            "disagreements": [
                {"seed": v.seed, "digest": v.hypergraph.digest(), "tau": v.tau, "tau_bruteforce": v.tau_bruteforce}
                for v in self.disagreements
            ],
        }


def _check_scan_config(cfg, which):
    if which not in CONJECTURES:
        raise ValueError(f"conjecture must be one of {', '.join(CONJECTURES)}, got {which!r}")
    if which in ("c2", "c3") and (cfg.mode != "linear" or cfg.k != 4):
        raise ValueError(f"{which} scans need linear 4-uniform instances")
    if which == "c1" and (cfg.mode != "max_degree" or cfg.d != 3 or cfg.edge_sizes):
        raise ValueError("c1 scans need k-uniform instances in max_degree mode with d=3")


def _scan_shard(cfg, which, seeds, node_budget):
    report = ScanReport(which)
    for count, seed in enumerate(seeds, start=1):
        try:
            hypergraph = random_hypergraph(replace(cfg, seed=seed))
        except GenerationFailed:
            report = report.merge(ScanReport(which, failures=(seed,)))
            continue
        report = report.merge(scan_instance(hypergraph, which, seed, k=cfg.k, node_budget=node_budget))
        if count % PROGRESS_EVERY == 0:
            logger.info(f"scan {which}: {count}/{len(seeds)} seeds")
    return report


def scan_instance(hypergraph, which, seed=0, k=4, node_budget=None):
    """Measure one instance and re-verify any violation by brute force.

    Args:
        hypergraph: the instance.
        which: the conjecture.
        seed: provenance seed.
        k: uniformity for c1.
        node_budget: solver node budget.

    Returns:
        ScanReport for a single instance.
    """
    check = evaluate_conjecture(hypergraph, which, k=k, node_budget=node_budget)
    violations, disagreements, tight = (), (), ()
    if check.violated:
        oracle = tau_bruteforce(hypergraph).tau
        recheck = evaluate_conjecture(hypergraph, which, k=k, tau=oracle)
        if recheck.violated:
            logger.error(f"scan {which}: seed {seed} violates the bound, tau={check.tau}")
            violations = (Violation(seed, hypergraph, check.tau, oracle),)
        else:
            logger.error(f"scan {which}: seed {seed} solver disagreement, bnb={check.tau} bruteforce={oracle}")
            disagreements = (Violation(seed, hypergraph, check.tau, oracle),)
    elif check.tight:
        tight = ((seed, hypergraph.digest()),)
    return ScanReport(which, 1, violations, tight, check.ratio, disagreements=disagreements)


def scan_conjectures(cfg, which, seeds, node_budget=None, jobs=1):
    """Scan seeded random instances against a conjectured bound.

    The report is evidence only: violations are candidates confirmed by two
    solvers, never a verdict on the conjecture.

    Args:
        cfg: generator configuration; its seed is replaced by each scanned seed.
        which: "c1", "c2" or "c3".
        seeds: iterable of seeds.
        node_budget: solver node budget.
        jobs: worker processes.

    Returns:
        ScanReport.

    Raises:
        ValueError: for a configuration that does not match the conjecture.
    """
    _check_scan_config(cfg, which)
    seeds = list(seeds)
    if jobs <= 1 or len(seeds) < 2:
        return _scan_shard(cfg, which, seeds, node_budget)
    shards = [seeds[i::jobs] for i in range(jobs)]
    report = ScanReport(which)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(_scan_shard, cfg, which, shard, node_budget) for shard in shards if shard]
        for future in futures:
            report = report.merge(future.result())
    return report


def write_violation_artifacts(report, cfg, out_dir):
    """Write each violation as a ".hg" file plus a JSON provenance record.

    Args:
        report: ScanReport.
        cfg: the generator configuration used.
        out_dir: output directory.

    Returns:
        List of written hypergraph paths.
    """
    out_dir = Path(out_dir)
    written = []
    for violation in report.violations:
        stem = out_dir / f"{report.which}-seed{violation.seed}"
        write_hypergraph(stem.with_suffix(".hg"), violation.hypergraph)
        provenance = {
            "conjecture": report.which,
            "config": asdict(replace(cfg, seed=violation.seed)),
            "tau_bnb": violation.tau,
            "tau_bruteforce": violation.tau_bruteforce,
            "digest": violation.hypergraph.digest(),
        }
        stem.with_suffix(".json").write_text(json.dumps(provenance, indent=2, sort_keys=True) + "\n")
        written.append(stem.with_suffix(".hg"))
    return written


def predicates(hypergraph):
    """Return the defining predicates checked on named instances.

    Args:
        hypergraph: the instance.

    Returns:
        Mapping of predicate name to value.
    """
    return {
        "n": hypergraph.vertex_count,
        "m": hypergraph.m,
        "max_degree": max_degree(hypergraph),
        "uniform_4": is_uniform(hypergraph, 4),
        "regular_3": is_regular(hypergraph, 3),
        "linear": is_linear(hypergraph),
    }
