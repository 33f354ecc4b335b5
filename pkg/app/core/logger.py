import logging
import sys

from app.core.config import settings

_CONFIGURED = False


def _configure() -> None:
    global _CONFIGURED
    if _CONFIGURED:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(name)s] %(levelname)s %(message)s"))
    root = logging.getLogger("propus")
    root.addHandler(handler)
    root.setLevel(settings.LOG_LEVEL.upper())
    _CONFIGURED = True


def get_logger(area: str) -> logging.Logger:
    _configure()
    return logging.getLogger(f"propus.{area}")


def set_level(level: str) -> None:
    _configure()
    logging.getLogger("propus").setLevel(level.upper())
