import logging
from datetime import datetime
from pathlib import Path

from .config import LOG_DIR, LOG_LEVEL

__all__ = ["setup_logging", "get_logger"]


def setup_logging(level: int | str = LOG_LEVEL):
    """
    Set up centralized logging configuration for the toolkit.

    Args:
        level: Logging level (default: ABSYNTH_LOG_LEVEL, INFO unless overridden)
    """
    handlers: list[logging.Handler] = [logging.StreamHandler()]

    if LOG_DIR:
        # Relative log directories resolve against the project root
        logs_dir = Path(LOG_DIR)
        if not logs_dir.is_absolute():
            logs_dir = Path(__file__).parent.parent.parent / logs_dir
        logs_dir.mkdir(parents=True, exist_ok=True)
        log_filename = logs_dir / f"{datetime.now().strftime('%Y-%m-%d')}.log"
        handlers.append(logging.FileHandler(log_filename))

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for the given name.

    Args:
        name: Usually __name__ from the calling module

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


# Initialize logging configuration when module is imported
setup_logging()
