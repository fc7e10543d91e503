# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Define logging helpers."""

import functools
import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level):
    """Configure the root logger to write to stderr.

    Args:
        level: level name, e.g. "info".
    """
    root = logging.getLogger()
    if not any(getattr(h, "_transversal_lab", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._transversal_lab = True  # type: ignore[attr-defined]
        root.addHandler(handler)
    root.setLevel(level.upper())


def log_command(logger):
    """Log with the provided logger when a command handler is executed.

    Args:
        logger: logger used to log commands.

    Returns:
        Decorator wrapper.
    """

    def decorator(method):
        """Log decorator wrapper.

        Args:
            method: command handler wrapped by the decorator.

        Returns:
            Decorated handler.
        """

        @functools.wraps(method)
        def decorated(args):
            """Log decorator method.

            Args:
                args: parsed command-line namespace.

            Returns:
                Result of the handler.
            """
            logger.info(f"* running {method.__name__}")
            try:
                return method(args)
            finally:
                logger.info(f"* completed {method.__name__}")

        return decorated

    return decorator
