"""Structured documents and DOT text for command output.

Every document carries a ``kind`` field and is written with sorted keys so
that repeated runs produce identical bytes.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)


def dump_json(document: Any) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True, default=str) + "\n"


def write_json(document: Any, out: str) -> None:
    """Write ``document`` to ``out``; ``"-"`` means stdout."""
    text = dump_json(document)
    if out == "-":
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", path)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_to_dot(poset) -> str:
    """Hasse quiver as a DOT digraph, nodes labelled ``(module|support)``."""
    lines = [f"digraph {_dot_quote(poset.algebra.name)} {{"]
    for i, node in enumerate(poset.nodes):
        lines.append(f"  n{i} [label={_dot_quote(f'({node.module_label}|{node.support_label})')}];")
    for a, b in poset.edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(poset, out: str) -> None:
    text = poset_to_dot(poset)
    if out == "-":
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", path)


def poset_document(poset, oracle: Optional[dict] = None) -> dict:
    document = {
        "kind": "stt_poset",
        "algebra": poset.algebra.name,
        "p": poset.algebra.p,
        "nodes": [node.to_record() for node in poset.nodes],
        "edges": [
            {"source": poset.nodes[a].label, "target": poset.nodes[b].label, "exchanged": exchanged}
            for a, b, exchanged in poset.mutation_edges
        ],
    }
    if oracle is not None:
        document["oracle"] = oracle
    return document


def sweep_document(table) -> dict:
    return {
        "kind": "lift_sweep",
        "algebra": table.split.algebra.name,
        "p": table.split.algebra.p,
        "split": table.split.describe(),
        "lambda_pairs": table.lam_poset.labels(),
        "gamma_pairs": table.gamma_poset.labels(),
        "rows": table.to_records(),
        "summary": table.summary(),
    }


__all__ = ["dump_json", "poset_document", "poset_to_dot", "sweep_document", "write_dot", "write_json"]
