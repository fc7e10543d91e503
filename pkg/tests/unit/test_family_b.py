# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.


"""Family B unit tests."""

import random
from unittest import TestCase, mock

import family_b
from canonical import isomorphic
from errors import CertificateMismatch, InvalidHost, Unsupported
from family_b import (
    LEMMA5_PARTS,
    BCertificate,
    BMember,
    StepA,
    StepB,
    StepD,
    generate_all_b,
    is_in_b,
    op_a,
    op_b,
    op_c,
    op_d,
    parent_hypergraphs,
    potential_numerator,
    replay,
    verify_all,
    verify_lemma5,
)
from hypergraph import Hypergraph, add_edges
from solver import tau_bnb
from state import State


class TestOperations(TestCase):
    """Unit tests for the construction operations.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_op_a(self):
        """H2 is a single 2-edge with its A-pair recorded."""
        member = op_a()
        self.assertEqual(member.hypergraph, Hypergraph.from_edges(2, [[0, 1]]))
        self.assertEqual(member.certificate.a_pairs, {frozenset({0, 1})})
        self.assertEqual(replay(member.certificate), member.hypergraph)

    def test_op_b(self):
        """Step B replaces the host 2-edge by two 3-edges and a new 2-edge."""
        member = op_b(op_a(), (0, 1))
        self.assertEqual(member.hypergraph, Hypergraph.from_edges(4, [[0, 1, 2], [0, 1, 3], [2, 3]]))
        self.assertEqual(member.certificate.steps[-1], StepB((0, 1), (2, 3)))
        self.assertEqual(replay(member.certificate), member.hypergraph)

    def test_op_c(self):
        """Step C replaces the host 3-edge by two 4-edges and a new 2-edge."""
        member = op_c(op_b(op_a(), (0, 1)), (0, 1, 2))
        expected = Hypergraph.from_edges(6, [[0, 1, 2, 4], [0, 1, 2, 5], [4, 5], [0, 1, 3], [2, 3]])
        self.assertEqual(member.hypergraph, expected)
        self.assertEqual(replay(member.certificate), expected)

    def test_invalid_hosts(self):
        """Hosts must be edges of the operand with the right size."""
        h2 = op_a()
        with self.assertRaises(InvalidHost):
            op_b(h2, (0, 2))
        with self.assertRaises(InvalidHost):
            op_c(h2, (0, 1))
        with self.assertRaises(InvalidHost):
            op_b(op_b(h2, (0, 1)), (0, 1, 2))
        with self.assertRaises(InvalidHost):
            op_d(h2, h2, (0, 1), (1, 2))

    def test_op_d(self):
        """Two copies of H2 merge into F."""
        h2 = op_a()
        member = op_d(h2, h2, (0, 1), (0, 1))
        self.assertEqual(member.hypergraph, Hypergraph.from_edges(5, [[0, 1, 4], [2, 3, 4], [0, 1, 2, 3]]))
        self.assertEqual(member.certificate.a_pairs, {frozenset({0, 1}), frozenset({2, 3})})
        self.assertEqual(member.certificate.steps[-1], StepD((0, 1), (2, 3), 4))
        self.assertEqual(tau_bnb(member.hypergraph).tau, 2)

    def test_op_d_argument_order(self):
        """The merged hypergraph does not depend on operand order."""
        h2 = op_a()
        grown = op_b(h2, (0, 1))
        first = op_d(h2, grown, (0, 1), (2, 3))
        second = op_d(grown, h2, (2, 3), (0, 1))
        self.assertEqual(first.hypergraph, second.hypergraph)
        self.assertEqual(first.certificate, second.certificate)

    def test_parent_hypergraphs(self):
        """The operands of the last step are recovered."""
        h2 = op_a()
        self.assertEqual(parent_hypergraphs(h2.certificate), [])
        self.assertEqual(parent_hypergraphs(op_b(h2, (0, 1)).certificate), [h2.hypergraph])
        merged = op_d(h2, h2, (0, 1), (0, 1))
        self.assertEqual(parent_hypergraphs(merged.certificate), [h2.hypergraph, h2.hypergraph])

    def test_potential_numerator(self):
        """The potential numerator is 24 tau on members."""
        self.assertEqual(potential_numerator(op_a().hypergraph), 24)
        for member in generate_all_b(7):
            with self.subTest(member=member.hypergraph):
                self.assertEqual(potential_numerator(member.hypergraph), 24 * tau_bnb(member.hypergraph).tau)


class TestReplay(TestCase):
    """Unit tests for certificate replay.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_round_trip_dict(self):
        """A certificate survives its JSON-friendly form."""
        cert = op_d(op_a(), op_b(op_a(), (0, 1)), (0, 1), (2, 3)).certificate
        self.assertEqual(BCertificate.from_dict(cert.to_dict()), cert)

    def test_two_parts(self):
        """A trace that never merges its parts is incomplete."""
        pairs = frozenset({frozenset({0, 1}), frozenset({2, 3})})
        with self.assertRaisesRegex(CertificateMismatch, "2 parts"):
            replay(BCertificate((StepA(0, 1), StepA(2, 3)), pairs))

    def test_stale_vertex(self):
        """Reusing a vertex is rejected."""
        cert = BCertificate((StepA(0, 1), StepB((0, 1), (1, 2))), frozenset({frozenset({0, 1})}))
        with self.assertRaisesRegex(CertificateMismatch, "not fresh"):
            replay(cert)

    def test_missing_host(self):
        """A step naming an absent host is rejected."""
        cert = BCertificate((StepA(0, 1), StepB((0, 2), (3, 4))), frozenset({frozenset({0, 1})}))
        with self.assertRaises(CertificateMismatch):
            replay(cert)

    def test_gap_in_vertices(self):
        """The trace must use exactly the vertices 0..n-1."""
        with self.assertRaises(CertificateMismatch):
            replay(BCertificate((StepA(0, 2),), frozenset({frozenset({0, 2})})))

    def test_wrong_a_pairs(self):
        """Recorded A-pairs must match the A steps."""
        with self.assertRaises(CertificateMismatch):
            replay(BCertificate((StepA(0, 1),), frozenset()))

    def test_unknown_step(self):
        """Unknown step names are rejected when parsing."""
        with self.assertRaises(CertificateMismatch):
            BCertificate.from_dict({"steps": [{"op": "E"}], "a_pairs": []})


class TestGeneration(TestCase):
    """Unit tests for enumeration of B.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_small_orders(self):
        """Members up to seven vertices come out once per class, by order."""
        members = list(generate_all_b(7))
        self.assertEqual([m.hypergraph.n for m in members], [2, 4, 5, 6, 6, 7, 7])
        for i, first in enumerate(members):
            for second in members[i + 1 :]:
                self.assertFalse(isomorphic(first.hypergraph, second.hypergraph))

    def test_certificates_replay(self):
        """Every generated certificate replays to its member."""
        for member in generate_all_b(8):
            with self.subTest(member=member.hypergraph):
                self.assertEqual(replay(member.certificate), member.hypergraph)

    def test_max_n(self):
        """Generation needs room for H2."""
        with self.assertRaises(ValueError):
            list(generate_all_b(1))
        self.assertEqual([m.hypergraph for m in generate_all_b(3)], [op_a().hypergraph])


class TestRecognition(TestCase):
    """Unit tests for membership recognition.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_generated_members(self):
        """Every generated member, under a random relabeling, is recognized with a valid certificate."""
        rng = random.Random(7)
        for member in generate_all_b(9):
            h = shuffle(member.hypergraph, rng)
            with self.subTest(member=h):
                cert = is_in_b(h, memo=make_memo())
                self.assertIsNotNone(cert)
                self.assertEqual(replay(cert), h)

    def test_non_members(self):
        """Hypergraphs outside B are rejected."""
        cases = {
            "h4": Hypergraph.from_edges(4, [[0, 1, 2, 3]]),
            "h6": Hypergraph.from_edges(6, [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]]),
            "path": Hypergraph.from_edges(4, [[0, 1], [1, 2, 3]]),
            "two_h2": Hypergraph.from_edges(4, [[0, 1], [2, 3]]),
            "big_edge": Hypergraph.from_edges(5, [[0, 1], [0, 1, 2, 3, 4]]),
            "single_vertex": Hypergraph(1),
        }
        for name, h in cases.items():
            with self.subTest(name):
                self.assertIsNone(is_in_b(h, memo=make_memo()))

    def test_labels_ignored(self):
        """Vertex labels do not affect recognition."""
        h = Hypergraph.from_labeled_edges(("u", "v"), [("u", "v")])
        self.assertIsNotNone(is_in_b(h, memo=make_memo()))

    def test_memo(self):
        """Outcomes are stored by canonical form, negative ones included."""
        store = {}
        memo = State(lambda: store)
        member = op_d(op_a(), op_a(), (0, 1), (0, 1))
        self.assertIsNotNone(is_in_b(member.hypergraph, memo=memo))
        self.assertIsNotNone(is_in_b(member.hypergraph, memo=memo))
        self.assertTrue(any(key.startswith("5|") for key in store))
        self.assertTrue(any(key.startswith("2|") for key in store))

    def test_shared_memo_is_bounded(self):
        """The shared memo is cleared once it outgrows its cap."""
        stale = {"stale-1": "false", "stale-2": "false"}
        with mock.patch("family_b.RECOGNITION_MEMO_MAX", 1), mock.patch.dict(
            "family_b._RECOGNITION_STORE", stale, clear=True
        ):
            self.assertIsNotNone(is_in_b(op_a().hypergraph))
            self.assertEqual([key[:2] for key in family_b._RECOGNITION_STORE], ["2|"])

    def test_above_cap(self):
        """Above the cap, filtered candidates are rejected and plausible ones are unsupported."""
        blocks = Hypergraph.from_edges(20, [range(4 * i, 4 * i + 4) for i in range(5)])
        self.assertIsNone(is_in_b(blocks))
        member = make_chain(8)
        self.assertEqual(member.hypergraph.n, 18)
        with self.assertRaises(Unsupported):
            is_in_b(member.hypergraph)

    def test_above_cap_tau_filter(self):
        """Above the cap, a candidate whose tau misses the potential identity is rejected."""
        member = make_chain(8)
        padded = add_edges(member.hypergraph, [[0, 1, 2]] * 4)
        self.assertEqual(potential_numerator(padded) % 24, 0)
        self.assertIsNone(is_in_b(padded))

    def test_cap_covers_order_sixteen(self):
        """Members with 15 and 16 vertices are recognized; at 17 the cap applies."""
        member = make_chain(7)
        self.assertEqual(member.hypergraph.n, 16)
        self.assertIsNotNone(is_in_b(member.hypergraph, memo=make_memo()))
        merged = op_d(make_chain(3), make_chain(3), (6, 7), (6, 7))
        self.assertEqual(merged.hypergraph.n, 17)
        with self.assertRaises(Unsupported):
            is_in_b(merged.hypergraph, memo=make_memo())
        fifteen = op_d(make_chain(3), make_chain(2), (6, 7), (4, 5))
        self.assertEqual(fifteen.hypergraph.n, 15)
        self.assertIsNotNone(is_in_b(fifteen.hypergraph, memo=make_memo()))


class TestStructuralChecks(TestCase):
    """Unit tests for the structural verification of members.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_all_parts_hold(self):
        """Every part holds on every member up to eight vertices."""
        for member, report in verify_all(8):
            with self.subTest(member=member.hypergraph):
                self.assertEqual(list(report.checks), list(LEMMA5_PARTS))
                self.assertTrue(report.passed, report.notes)
                self.assertEqual(24 * report.tau, potential_numerator(member.hypergraph))

    def test_report_dict(self):
        """The report has a JSON-friendly form."""
        report = verify_lemma5(op_a())
        self.assertEqual(report.to_dict()["n"], 2)
        self.assertEqual(report.to_dict()["tau"], 1)
        self.assertTrue(report.to_dict()["passed"])

    def test_mismatched_certificate(self):
        """A certificate that does not describe the hypergraph is rejected."""
        fake = BMember(Hypergraph.from_edges(2, [[0, 1], [0, 1]]), op_a().certificate)
        with self.assertRaises(CertificateMismatch):
            verify_lemma5(fake)


def make_memo():
    """Create an empty recognition memo.

    Returns:
        State backed by a fresh dict.
    """
    store = {}
    return State(lambda: store)


def shuffle(hypergraph, rng):
    """Relabel a hypergraph with a random permutation.

    Args:
        hypergraph: the hypergraph.
        rng: random.Random instance.

    Returns:
        The relabeled hypergraph.
    """
    perm = list(range(hypergraph.n))
    rng.shuffle(perm)
    return Hypergraph.from_edges(hypergraph.n, [[perm[v] for v in edge] for edge in hypergraph.edges])


def make_chain(steps):
    """Grow H₂ by repeated B steps on the newest 2-edge.

    Args:
        steps: number of B steps.

    Returns:
        BMember with 2 + 2 * steps vertices.
    """
    member = op_a()
    for _ in range(steps):
        n = member.hypergraph.n
        member = op_b(member, (n - 2, n - 1))
    return member
