from .config_loader import load_config
from .emitters import dump_json, poset_document, poset_to_dot, sweep_document, write_dot, write_json
from .logger import configure_logging

__all__ = [
    "configure_logging",
    "dump_json",
    "load_config",
    "poset_document",
    "poset_to_dot",
    "sweep_document",
    "write_dot",
    "write_json",
]
