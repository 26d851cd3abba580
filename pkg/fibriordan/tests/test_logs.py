# -*- coding: utf-8 -*-
import logging
import logging.handlers

import pytest

from fibriordan import logs


@pytest.fixture
def root_handlers(monkeypatch, tmp_path):
    """Handlers attached by setup_logging, removed after the test"""
    monkeypatch.setattr(logs, "LOG_DIRECTORY", tmp_path / "logs")
    yield lambda: [h for h in logging.getLogger().handlers if getattr(h, "_fibriordan", False)]
    for handler in list(logging.getLogger().handlers):
        if getattr(handler, "_fibriordan", False):
            logging.getLogger().removeHandler(handler)
            handler.close()


@pytest.mark.parametrize(
    "verbosity, level", [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG), (5, logging.DEBUG)]
)
def test_verbosity(root_handlers, verbosity, level):
    """Test that verbosity sets the level of the standard error handler"""
    logs.setup_logging(verbosity, logfile=False)
    (handler,) = root_handlers()
    assert handler.level == level


def test_idempotent(root_handlers):
    """Test that calling setup_logging again replaces its handlers"""
    logs.setup_logging(0, logfile=False)
    logs.setup_logging(1, logfile=False)
    handlers = root_handlers()
    assert len(handlers) == 1
    assert handlers[0].level == logging.INFO


def test_logfile(root_handlers, tmp_path):
    """Test that the log file captures debugging messages"""
    logs.setup_logging(0, logfile=True)
    handlers = root_handlers()
    assert len(handlers) == 2
    (file_handler,) = [h for h in handlers if isinstance(h, logging.handlers.TimedRotatingFileHandler)]
    assert file_handler.level == logging.DEBUG

    logging.getLogger("fibriordan.tests").debug("written to file")
    file_handler.flush()
    assert "written to file" in (tmp_path / "logs" / "fibriordan.log").read_text()
