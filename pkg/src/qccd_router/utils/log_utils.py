"""Package logging: one ``qccd_router`` logger tree configured from ``QCCD_LOG_LEVEL``."""

from __future__ import annotations

import logging

from qccd_router.config.env import LOG_LEVEL

ROOT_LOGGER_NAME = "qccd_router"

_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def configure_logging(level: str | int | None = None) -> None:
    """Attach a stderr handler to the package logger once and set its level.

    Args:
        level: Explicit level; defaults to the ``QCCD_LOG_LEVEL`` environment value.
    """
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level if level is not None else LOG_LEVEL)


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger for module *name*."""
    if name == ROOT_LOGGER_NAME or name.startswith(f"{ROOT_LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def log(message: str) -> None:
    """Log *message* at INFO on the package logger.

    Silent unless the level was lowered (``QCCD_LOG_LEVEL=INFO qccd-router ...``).
    """
    logging.getLogger(ROOT_LOGGER_NAME).info(message)
