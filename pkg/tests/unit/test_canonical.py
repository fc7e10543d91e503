# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.


"""Canonical form unit tests."""

from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from canonical import canonical_form, canonical_key, canonical_labeling, isomorphic
from hypergraph import Hypergraph, relabel
from tests.unit.strategies import hypergraphs, permuted


class TestCanonical(TestCase):
    """Unit tests for canonical labeling and isomorphism.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_labeling_is_permutation(self):
        """The canonical order lists every vertex once."""
        h = Hypergraph.from_edges(5, [[0, 1, 2], [2, 3], [3, 4]])
        self.assertEqual(sorted(canonical_labeling(h)), list(range(5)))
        self.assertEqual(relabel(h, canonical_labeling(h)), canonical_form(h))

    def test_empty(self):
        """Hypergraphs without vertices or edges have a canonical form."""
        self.assertEqual(canonical_labeling(Hypergraph(0)), [])
        self.assertEqual(canonical_key(Hypergraph(3)), (3, ()))

    def test_labels_dropped(self):
        """The canonical form carries no vertex labels."""
        h = Hypergraph.from_labeled_edges(("x", "y"), [("x", "y")])
        self.assertIsNone(canonical_form(h).labels)

    def test_isomorphic_pair(self):
        """Two drawings of a path are isomorphic and share a canonical key."""
        first = Hypergraph.from_edges(4, [[0, 1], [1, 2], [2, 3]])
        second = Hypergraph.from_edges(4, [[3, 1], [0, 2], [1, 0]])
        self.assertTrue(isomorphic(first, second))
        self.assertEqual(canonical_key(first), canonical_key(second))

    def test_non_isomorphic_same_degrees(self):
        """A 6-cycle and two triangles share degree sequences but are not isomorphic."""
        cycle = Hypergraph.from_edges(6, [[i, (i + 1) % 6] for i in range(6)])
        triangles = Hypergraph.from_edges(6, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
        self.assertFalse(isomorphic(cycle, triangles))
        self.assertNotEqual(canonical_key(cycle), canonical_key(triangles))

    def test_multiplicity_matters(self):
        """Edge multiplicity is part of the isomorphism type."""
        once = Hypergraph.from_edges(3, [[0, 1], [1, 2], [1, 2]])
        twice = Hypergraph.from_edges(3, [[0, 1], [0, 1], [1, 2]])
        other = Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 2]])
        self.assertTrue(isomorphic(once, twice))
        self.assertFalse(isomorphic(once, other))

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_relabel_invariance(self, data):
        """Any relabeling has the same canonical form."""
        h = data.draw(hypergraphs(max_n=9, max_m=9))
        _, image = data.draw(permuted(h))
        self.assertEqual(canonical_key(h), canonical_key(image))
        self.assertTrue(isomorphic(h, image))

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs(max_n=7, max_m=7))
    def test_form_is_isomorphic(self, h):
        """The canonical form is a relabeling of the input."""
        form = canonical_form(h)
        self.assertEqual(sorted(form.degrees), sorted(h.degrees))
        self.assertEqual(canonical_form(form), form)
