"""
Logger
------

The ``pycompact`` logger, its handlers and :func:`get_logger` for child
loggers.  Nothing is printed unless a front end calls
:func:`enable_stream_logging`.
"""

import logging

FORMATTER = logging.Formatter(
    "%(asctime)s %(name)s %(levelname)9s %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S")
STREAM_HANDLER = logging.StreamHandler()
STREAM_HANDLER.setFormatter(FORMATTER)
NULL_HANDLER = logging.NullHandler()

# By default, pycompact's logger does nothing
logger = logging.getLogger("pycompact")
logger.addHandler(NULL_HANDLER)

__all__ = ("logger", "get_logger", "enable_stream_logging")


def get_logger(name):
    """
    Returns a child of pycompact's logger.  Modules name theirs after
    the area and module they live in:

    >>> get_logger("nets.coverage").name
    'pycompact.nets.coverage'

    :param str name:
        The dotted name below ``pycompact``.

    :raises ValueError:
        Raised if ``name`` starts with a dot.

    :rtype: :class:`logging.Logger`
    """
    if name.startswith("."):
        raise ValueError("`name` cannot start with '.'")

    return logger.getChild(name)


def enable_stream_logging(level):
    """
    Attaches :data:`STREAM_HANDLER` to pycompact's logger and sets the
    logger's level.  Front ends call this, the library itself never does.

    :param int level:
        A level from the :mod:`logging` module.
    """
    if STREAM_HANDLER not in logger.handlers:
        logger.addHandler(STREAM_HANDLER)
    logger.setLevel(level)
