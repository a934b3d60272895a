"""
Logging setup shared by the clifvs command line and HTTP service.

Records always go to stderr: stdout is reserved for command results and the
JSON envelope. Library modules only call ``get_logger(__name__)``.
"""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional, Union

_QUIET_LOGGERS = ('uvicorn.access', 'hypothesis')


def resolve_level(level: Union[int, str, None], debug: bool = False,
                  fallback: Optional[int] = None) -> int:
    """Map a level name such as ``"info"`` (or a numeric level) to a logging level.

    ``debug`` wins over everything else; ``None`` means WARNING. An unknown
    name raises ValueError unless a ``fallback`` level is given.
    """
    if debug:
        return logging.DEBUG
    if level is None:
        return logging.WARNING
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.strip().upper())
    if not isinstance(resolved, int):
        if fallback is not None:
            return fallback
        raise ValueError(f"unknown log level: {level!r}")
    return resolved


def setup_logging(level: Union[int, str, None] = logging.WARNING, debug: bool = False,
                  include_timestamps: bool = False, quiet_libraries: bool = True,
                  fallback: Optional[int] = None) -> int:
    """
    Configure the root logger for a clifvs process.

    Args:
        level: Logging level or level name (default: WARNING)
        debug: Force DEBUG, as the ``--debug`` flag does
        include_timestamps: Prefix records with the wall-clock time
        quiet_libraries: Keep uvicorn access lines and hypothesis chatter at WARNING
        fallback: Level used when ``level`` is an unknown name

    Returns:
        The effective numeric level
    """
    effective = resolve_level(level, debug, fallback)
    fields = '%(name)s - %(levelname)s - %(message)s'
    if include_timestamps:
        fields = '%(asctime)s - ' + fields

    logging.basicConfig(
        level=effective,
        format=fields,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True
    )

    if quiet_libraries:
        for name in _QUIET_LOGGERS:
            logging.getLogger(name).setLevel(max(effective, logging.WARNING))
    return effective


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


@contextmanager
def timed(logger: logging.Logger, label: str) -> Iterator[None]:
    """Log ``label`` with its elapsed wall time at DEBUG once the block exits."""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.debug(f"{label} took {time.perf_counter() - start:.3f}s")
