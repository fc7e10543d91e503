# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.


"""Unit tests config."""

import os

from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.register_profile("thorough", deadline=None, max_examples=1_000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
