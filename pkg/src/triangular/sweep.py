"""Run the lifting criterion over every pair of corner support tau-tilting pairs."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import pandas as pd
from tqdm.auto import tqdm

from ..errors import VerificationError
from ..tilting import SttPair, SttPoset, enumerate_stt, is_support_tau_tilting
from ..tilting.stt import DEFAULT_NODE_BUDGET
from .lift import check_lift_stt, check_lift_tilting, lift, triple_label
from .split import TriSplit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    x_label: str
    y_label: str
    verdict: bool
    failed: tuple[int, ...]
    tensor_label: str
    lift_label: str
    verified: Optional[bool] = None
    tilting: Optional[bool] = None


@dataclass
class SweepTable:
    split: TriSplit
    lam_poset: SttPoset
    gamma_poset: SttPoset
    rows: list[SweepRow] = field(default_factory=list)

    def passing(self) -> list[SweepRow]:
        return [row for row in self.rows if row.verdict]

    def by_x(self, x_label: str) -> list[SweepRow]:
        return [row for row in self.rows if row.x_label == x_label]

    def to_records(self) -> list[dict]:
        records = []
        for row in self.rows:
            record = asdict(row)
            record["failed"] = list(row.failed)
            records.append(record)
        return records

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame.from_records(
            self.to_records(),
            columns=["x_label", "y_label", "verdict", "failed", "tensor_label", "lift_label", "verified", "tilting"],
        )
        return frame

    def summary(self) -> dict:
        passing = self.passing()
        per_x: dict[str, int] = {}
        for row in passing:
            per_x[row.x_label] = per_x.get(row.x_label, 0) + 1
        summary = {"pairs": len(self.rows), "passing": len(passing), "passing_by_x": per_x}
        if any(row.tilting is not None for row in self.rows):
            summary["tilting"] = sum(1 for row in self.rows if row.tilting)
        return summary


def _sweep_row(x: SttPair, y: SttPair, split: TriSplit, verify: bool, tilting: bool) -> tuple:
    verdict = check_lift_stt(x.module, y.module, split)
    lifted = lift(x.module, y.module, split) if (verdict.verdict or verify) else None
    verified = None
    if verify:
        verified = is_support_tau_tilting(lifted) is not None
        if verified != verdict.verdict:
            raise VerificationError(
                f"Lifting criterion says {verdict.verdict} but the lift over R says {verified} "
                f"for X={x.label}, Y={y.label}"
            )
    tilted = check_lift_tilting(x.module, y.module, split) if tilting else None
    return verdict, lifted, verified, tilted


def sweep_lifts(
    split: TriSplit,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
    verify: bool = False,
    tilting: bool = False,
    progress: bool = False,
) -> SweepTable:
    """Lift every (Lambda pair, Gamma pair); ``tilting`` adds the tilting verdict of each lift."""
    lam_poset = enumerate_stt(split.lam, node_budget, workers=workers, progress=progress)
    gamma_poset = enumerate_stt(split.gamma, node_budget, workers=workers, progress=progress)
    jobs = [(x, y) for x in lam_poset.nodes for y in gamma_poset.nodes]
    table = SweepTable(split=split, lam_poset=lam_poset, gamma_poset=gamma_poset)

    def run(job: tuple[SttPair, SttPair]) -> tuple:
        return _sweep_row(job[0], job[1], split, verify, tilting)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(tqdm(executor.map(run, jobs), total=len(jobs), desc="[tri] sweep", unit="pair", dynamic_ncols=True, disable=not progress))
    else:
        results = [run(job) for job in tqdm(jobs, desc="[tri] sweep", unit="pair", dynamic_ncols=True, disable=not progress)]

    for (x, y), (verdict, lifted, verified, tilted) in zip(jobs, results):
        table.rows.append(
            SweepRow(
                x_label=x.label,
                y_label=y.label,
                verdict=verdict.verdict,
                failed=verdict.failed,
                tensor_label=verdict.tensor_label,
                lift_label=triple_label(lifted, split) if verdict.verdict else "",
                verified=verified,
                tilting=tilted,
            )
        )
    logger.info(
        "Sweep over %s: %d pairs, %d passing", split.algebra.name, len(table.rows), len(table.passing())
    )
    return table


__all__ = ["SweepRow", "SweepTable", "sweep_lifts"]
