import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional


def get_logger(
    name: str, level: Optional[int] = logging.INFO, console_logging: bool = True
) -> logging.Logger:
    """Gets logger with given name, while setting level and optionally adding handler

    Args:
        name: Name of logger
        level: Log level
        console_logging: Whether or not to log to console

    Returns:
        Logger
    """
    log = logging.getLogger(name)

    if level is not None:
        log.setLevel(level)

    has_stream_handler = any(type(h) == logging.StreamHandler for h in log.handlers)
    if console_logging and not has_stream_handler:
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(
            logging.Formatter("%(asctime)s %(name)s %(levelname)s: %(message)s")
        )
        log.addHandler(console_handler)

    return log


@contextmanager
def log_elapsed(log: logging.Logger, what: str) -> Iterator[None]:
    """Logs start of `what` and the wall time it took once the block exits"""
    tic = time.time()
    log.info(what)
    yield
    log.info(f"{what}: finished after {time.time() - tic:.3f} seconds")
