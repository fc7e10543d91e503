# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Toolkit exceptions."""


class TransversalLabError(Exception):
    """Base class for every error raised by the toolkit."""


class VertexOutOfRange(TransversalLabError, ValueError):
    """A vertex index is outside [0, n)."""


class EdgeIndexError(TransversalLabError, ValueError):
    """An edge index is invalid or two indices that must differ are equal."""


class ZeroEdge(TransversalLabError, ValueError):
    """A reduction step would create an empty edge."""


class InvalidHost(TransversalLabError, ValueError):
    """A construction step names a host edge that is absent or of the wrong size."""


class CertificateMismatch(TransversalLabError, ValueError):
    """Replaying a construction certificate does not reproduce the hypergraph."""


class GenerationFailed(TransversalLabError, ValueError):
    """A random generator exhausted its trial budget."""


class Infeasible(TransversalLabError, ValueError):
    """Solver constraints leave some edge impossible to hit."""


class UnknownInstance(TransversalLabError, ValueError):
    """A named instance does not exist."""


class FormatError(TransversalLabError, ValueError):
    """An instance file could not be parsed."""


class HypothesisViolated(TransversalLabError, ValueError):
    """An instance does not satisfy the hypotheses of a theorem.

    Attrs:
        hypothesis: short name of the failed hypothesis.
    """

    def __init__(self, hypothesis, message=None):
        """Construct.

        Args:
            hypothesis: short name of the failed hypothesis.
            message: optional detail.
        """
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class Unsupported(TransversalLabError):
    """An instance exceeds a recognition or enumeration cap."""


class InstanceTooHard(TransversalLabError):
    """The solver exceeded its node budget."""
