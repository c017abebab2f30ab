import logging

DEFAULT_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


def configure_logging(level="INFO", log_file=None):
    """Console logging on stderr, plus a file handler when ``log_file`` is set."""
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    # force: a second call (tests, the report script) replaces earlier handlers
    logging.basicConfig(level=numeric, format=DEFAULT_FORMAT, handlers=handlers, force=True)
    return logging.getLogger()
