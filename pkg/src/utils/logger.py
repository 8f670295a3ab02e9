"""
Logging utilities for the Coprime Toolkit
"""

import sys
import logging
from pathlib import Path
from logging.handlers import RotatingFileHandler
from datetime import datetime

LOGGER_NAME = 'coprime_toolkit'


def setup_logger(log_directory="logs", log_to_file=False, level="WARNING"):
    """Set up and configure the application logger.

    Console output goes to stderr; stdout carries results only.
    """
    app_logger = logging.getLogger(LOGGER_NAME)
    app_logger.setLevel(logging.DEBUG)
    app_logger.propagate = False

    for handler in list(app_logger.handlers):
        app_logger.removeHandler(handler)
        handler.close()

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(threadName)s - %(message)s'
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    console_handler.setFormatter(detailed_formatter)
    app_logger.addHandler(console_handler)

    if log_to_file:
        log_dir = Path(log_directory)
        log_dir.mkdir(exist_ok=True, parents=True)

        today = datetime.now().strftime('%Y-%m-%d')
        app_file_handler = RotatingFileHandler(
            filename=str(log_dir / f"app_{today}.log"),
            maxBytes=10*1024*1024,  # 10 MB
            backupCount=10
        )
        app_file_handler.setLevel(logging.DEBUG)
        app_file_handler.setFormatter(detailed_formatter)
        app_logger.addHandler(app_file_handler)

    return app_logger


def get_logger():
    """Return the application logger without reconfiguring it"""
    return logging.getLogger(LOGGER_NAME)
