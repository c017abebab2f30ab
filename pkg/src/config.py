from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .utils.config_loader import load_config

NODE_BUDGET_ENV = "TAUTILT_NODE_BUDGET"


def resolve_config_path(path: str | None) -> Path:
    if path:
        return Path(path).resolve()
    return Path(__file__).resolve().parents[1] / "config.yaml"


def load_runtime_config(path: str | None = None) -> Dict[str, Any]:
    return load_config(str(resolve_config_path(path)))


@dataclass(frozen=True)
class WorkbenchSettings:
    # field for algebra files without their own p
    default_prime: int = 1009
    # --field: overrides every file
    prime: Optional[int] = None
    max_path_length: int = 20
    node_budget: int = 10000
    workers: int = 1
    oracle_prime: int = 2
    oracle_search_limit: int = 2_000_000
    sweep_scalars: int = 3
    exhaustive_budget: int = 20000
    progress: bool = False
    log_level: str = "INFO"
    log_file: Optional[str] = None

    @classmethod
    def from_config(cls, config: Dict[str, Any], environ: Optional[Dict[str, str]] = None) -> "WorkbenchSettings":
        """Config file values, then the environment on top."""
        environ = os.environ if environ is None else environ
        field_cfg = config.get("field", {}) or {}
        algebra_cfg = config.get("algebra", {}) or {}
        enum_cfg = config.get("enumeration", {}) or {}
        oracle_cfg = config.get("oracle", {}) or {}
        decomp_cfg = config.get("decomposition", {}) or {}
        output_cfg = config.get("output", {}) or {}
        log_cfg = config.get("logging", {}) or {}

        node_budget = int(enum_cfg.get("node_budget", cls.node_budget))
        env_budget = environ.get(NODE_BUDGET_ENV)
        if env_budget:
            try:
                node_budget = int(env_budget)
            except ValueError as exc:
                raise ValueError(f"{NODE_BUDGET_ENV} must be an integer, got {env_budget!r}") from exc

        return cls(
            default_prime=int(field_cfg.get("prime", cls.default_prime)),
            max_path_length=int(algebra_cfg.get("max_path_length", cls.max_path_length)),
            node_budget=node_budget,
            workers=int(enum_cfg.get("workers", cls.workers)),
            oracle_prime=int(oracle_cfg.get("prime", cls.oracle_prime)),
            oracle_search_limit=int(oracle_cfg.get("search_limit", cls.oracle_search_limit)),
            sweep_scalars=int(decomp_cfg.get("sweep_scalars", cls.sweep_scalars)),
            exhaustive_budget=int(decomp_cfg.get("exhaustive_budget", cls.exhaustive_budget)),
            progress=bool(output_cfg.get("progress", cls.progress)),
            log_level=str(log_cfg.get("level", cls.log_level)),
            log_file=log_cfg.get("file") or None,
        )

    def with_overrides(self, **values: Any) -> "WorkbenchSettings":
        """Apply command-line flags; ``None`` means the flag was not given."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})


def load_settings(path: str | None = None, environ: Optional[Dict[str, str]] = None) -> WorkbenchSettings:
    return WorkbenchSettings.from_config(load_runtime_config(path), environ)
