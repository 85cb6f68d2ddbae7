# --- aug_cohomology/utils/logging_config.py ---

import logging
import sys
from typing import TextIO

from pythonjsonlogger import jsonlogger

from aug_cohomology import __version__

# Bibliotecas que só interessam quando algo corre mal
QUIET_LOGGERS = {"redis": logging.WARNING, "asyncio": logging.WARNING, "backoff": logging.ERROR}


def setup_logging(log_level: str = "INFO", stream: TextIO | None = None):
    """
    Logs JSON estruturados no logger raiz, um objeto por linha.
    Na CLI o stream é stderr: o stdout fica reservado aos relatórios.
    """
    numeric_level = getattr(logging, log_level.upper(), logging.INFO)
    root = logging.getLogger()
    root.setLevel(numeric_level)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stdout)
    handler.setFormatter(jsonlogger.JsonFormatter(
        "%(asctime)s %(levelname)s %(name)s %(message)s",
        rename_fields={"levelname": "level", "name": "logger"},
        static_fields={"engine": __version__},
    ))
    root.addHandler(handler)

    for name, level in QUIET_LOGGERS.items():
        logging.getLogger(name).setLevel(level)

    logging.debug(f"Logging JSON ativo (nível {log_level}).")
