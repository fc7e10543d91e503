# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Key/value store for memoized recognition results."""

import json


class State:
    """A magic store that uses a mapping as the data store.

    The get_store callable is used to retrieve the mapping.
    All values are JSON encoded, so a stored value is a snapshot that later
    mutation of the original object cannot change. Writers race benignly:
    entries are deterministic, and the last write wins.
    """

    def __init__(self, get_store):
        """Construct.

        Args:
            get_store: callable returning the backing mapping.
        """
        self._get_store = get_store

    def __setitem__(self, key, value):
        """Set a value in the store with the given key.

        Args:
            key: key of value to set in store.
            value: JSON-serializable value to set in store.
        """
        self._get_store()[key] = json.dumps(value, sort_keys=True)

    def __getitem__(self, key):
        """Get from the store the value with the given key, or None.

        Args:
            key: key of value to get from store.

        Returns:
            value from store with given key.
        """
        return json.loads(self._get_store().get(key, "null"))

    def __delitem__(self, key):
        """Delete the value with the given key from the store, if it exists.

        Args:
            key: key of value to delete from store.
        """
        self._get_store().pop(key, None)

    def __contains__(self, key):
        """Report whether the key is present.

        Args:
            key: key to look up.

        Returns:
            True when the store holds the key.
        """
        return key in self._get_store()
