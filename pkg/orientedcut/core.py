"""Base class with colored, verbosity-gated messages."""

import logging
import os
import sys

from .config import Settings
from .errors import OrcError

logger = logging.getLogger("orientedcut")


class _ColorFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: '\033[94m',
        logging.INFO: '\033[96m',
        logging.WARNING: '\033[93m',
        logging.ERROR: '\033[91m',
    }

    def __init__(self, color=True):
        super().__init__("%(message)s")
        self.color = color

    def format(self, record):
        text = super().format(record)
        if not self.color:
            return text
        color = getattr(record, "color", None) or self.COLORS.get(record.levelno)
        return f"{color}{text}{OrcCommand.RESET}" if color else text


def configure_logging(verbosity=0, stream=None):
    """Attach one stderr handler to the package logger.

    verbosity 0 shows warnings and errors, 1 adds info, 2 and up add debug.
    """
    stream = stream or sys.stderr
    for handler in list(logger.handlers):
        if getattr(handler, "_orc", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler._orc = True
    handler.setFormatter(_ColorFormatter(color=hasattr(stream, "isatty") and stream.isatty()))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbosity >= 2 else logging.INFO if verbosity == 1 else logging.WARNING)
    logger.propagate = False
    return handler


class OrcCommand:
    """
    Shared behaviour of the orientedcut front classes: settings, messages
    and the raise-or-report switch.
    """

    # ANSI color codes
    RED = '\033[91m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    CYAN = '\033[96m'
    BOLD = '\033[1m'
    RESET = '\033[0m'

    # Default to raising domain errors; the REPL turns this off
    raise_exception = True

    def __init__(self, settings=None):
        """
        :param settings: Settings to use, by default read from the ORC_* environment.
        """
        self.settings = settings if settings is not None else Settings.from_env()

    def error(self, message):
        """Display an error message in red."""
        logger.error(message, extra={"color": self.RED})

    def warning(self, message):
        """Display a warning message in yellow."""
        logger.warning(message, extra={"color": self.YELLOW})

    def success(self, message):
        """Display a success message in green."""
        logger.info(message, extra={"color": self.GREEN})

    def info(self, message):
        """Display an info message in blue."""
        logger.info(message, extra={"color": self.BLUE})

    def set_verbosity(self, level):
        """
        Set the verbosity level.

        :param level: 0 quiet, 1 info, 2 debug
        """
        os.environ['ORC_VERBOSITY'] = str(level)
        self.settings = self.settings.merged(verbosity=int(level))
        logger.setLevel(logging.DEBUG if level >= 2 else logging.INFO if level == 1 else logging.WARNING)

    def get_verbosity(self):
        """
        Get the current verbosity level.

        :return: The current verbosity level
        """
        return int(os.environ.get('ORC_VERBOSITY', self.settings.verbosity))

    def set_raise_exception(self, raise_exception=True):
        """
        Set whether domain errors propagate or are reported and swallowed.

        :param raise_exception: Whether to raise (default: True)
        """
        self.raise_exception = raise_exception

    def guarded(self, action, *args, **kwargs):
        """Run action; on an OrcError either re-raise or report it and return None."""
        try:
            return action(*args, **kwargs)
        except OrcError as exc:
            if self.raise_exception:
                raise
            self.error(str(exc))
            return None

    def fuel_or_default(self, fuel):
        return self.settings.fuel if fuel is None else fuel
