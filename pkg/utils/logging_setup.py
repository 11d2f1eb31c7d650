"""
Logging configuration shared by the entry points
"""

import logging
import sys
from typing import Optional

from colorama import Fore, Style, init as colorama_init

import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

LEVEL_COLOURS = {
    'DEBUG': Fore.CYAN,
    'INFO': Fore.GREEN,
    'WARNING': Fore.YELLOW,
    'ERROR': Fore.RED,
    'CRITICAL': Fore.MAGENTA,
}


class ColourFormatter(logging.Formatter):
    """Formatter that colours the level name when writing to a terminal"""

    def format(self, record: logging.LogRecord) -> str:
        colour = LEVEL_COLOURS.get(record.levelname)
        if not colour:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{colour}{original}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configure root logging once per process.

    Args:
        level: level name, defaults to config.LOG_LEVEL
        log_file: optional file that receives an uncoloured copy
    """
    level_name = (level or config.LOG_LEVEL).upper()
    handler = logging.StreamHandler(sys.stderr)
    if sys.stderr.isatty():
        colorama_init()
        handler.setFormatter(ColourFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

    handlers = [handler]
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=getattr(logging, level_name, logging.INFO), handlers=handlers, force=True)
