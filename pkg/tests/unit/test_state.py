# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.


"""State unit tests."""

import json
from unittest import TestCase

from state import State


class TestState(TestCase):
    """Unit tests for state.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_get(self):
        """It is possible to retrieve values from the state."""
        state = make_state({"4|((0, 1),)": json.dumps({"steps": []})})
        self.assertEqual(state["4|((0, 1),)"], {"steps": []})
        self.assertIsNone(state["missing"])

    def test_set(self):
        """Values are stored JSON encoded with sorted keys."""
        data = {}
        state = make_state(data)
        state["a"] = False
        state["b"] = {"z": 1, "a": [1, 2]}
        self.assertFalse(state["a"])
        self.assertEqual(state["b"], {"a": [1, 2], "z": 1})
        self.assertEqual(data, {"a": "false", "b": '{"a": [1, 2], "z": 1}'})

    def test_last_write_wins(self):
        """A second write to the same key replaces the first."""
        state = make_state({})
        state["k"] = 1
        state["k"] = 2
        self.assertEqual(state["k"], 2)

    def test_snapshot(self):
        """Mutating a stored object afterwards does not change the stored value."""
        state = make_state({})
        value = {"steps": [1]}
        state["k"] = value
        value["steps"].append(2)
        self.assertEqual(state["k"], {"steps": [1]})

    def test_del(self):
        """It is possible to unset values in the state."""
        data = {"foo": json.dumps("bar"), "answer": json.dumps(42)}
        state = make_state(data)
        del state["foo"]
        self.assertNotIn("foo", state)
        self.assertEqual(data, {"answer": "42"})
        # Deleting a key that is not set does not error.
        del state["foo"]

    def test_contains(self):
        """Stored falsy values are still present."""
        state = make_state({})
        state["miss"] = False
        self.assertIn("miss", state)
        self.assertNotIn("other", state)


def make_state(data):
    """Create state object.

    Args:
        data: Data to be included in state.

    Returns:
        State object with data.
    """
    return State(lambda: data)
