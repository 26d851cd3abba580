# -*- coding: utf-8 -*-
"""
Logging utilities
"""
import sys
import logging
import logging.handlers
from tempfile import gettempdir

from pathlib import Path

from . import __version__

FORMATTER = logging.Formatter("%(asctime)s | %(name)s | %(levelname)s | %(message)s")

LOG_DIRECTORY = Path(gettempdir()) / f"fibriordan-{__version__}-logs"

VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def setup_logging(verbosity=0, logfile=True):
    """
    Attach handlers to the root logger. Calling this function again replaces the handlers
    it attached previously.

    Parameters
    ----------
    verbosity : int, optional
        0 (warnings), 1 (information) or 2 and more (debugging) on standard error.
    logfile : bool, optional
        If True, everything down to DEBUG is also written to a log file rotated at midnight,
        located in ``LOG_DIRECTORY``.

    Returns
    -------
    logger : logging.Logger
        The root logger.
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        if getattr(handler, "_fibriordan", False):
            logger.removeHandler(handler)
            handler.close()

    stream_handler = logging.StreamHandler(stream=sys.stderr)
    stream_handler.setLevel(VERBOSITY_LEVELS.get(verbosity, logging.DEBUG))
    stream_handler.setFormatter(FORMATTER)
    handlers = [stream_handler]

    if logfile:
        LOG_DIRECTORY.mkdir(exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=LOG_DIRECTORY / "fibriordan.log", when="midnight", backupCount=5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(FORMATTER)
        handlers.append(file_handler)

    for handler in handlers:
        handler._fibriordan = True
        logger.addHandler(handler)
    return logger
