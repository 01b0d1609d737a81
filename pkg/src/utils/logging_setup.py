"""Logger configuration for command-line use."""

import logging
import sys

LOGGER_NAME = "poise"


def get_logger(module_name: str) -> logging.Logger:
    """Return the library logger for a module, nested under ``poise``."""
    return logging.getLogger(f"{LOGGER_NAME}.{module_name}")


def init_logging(verbose: bool = False) -> logging.Logger:
    """Configure the ``poise`` logger (no root usage, no duplicate handlers)."""
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stdout)
    handler.setFormatter(
        logging.Formatter("[%(asctime)s] [%(levelname)s] %(message)s", "%H:%M:%S")
    )
    logger.addHandler(handler)
    return logger
