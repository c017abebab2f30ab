from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Optional, Sequence

from .config import WorkbenchSettings, load_settings
from .data import parse_module_spec, read_algebra_file
from .errors import VerificationError, exit_code_for
from .modules import registry_for
from .modules.decompose import DecompositionLimits, configure
from .tilting import default_dim_bound, enumerate_stt, is_support_tau_tilting, is_tau_rigid, is_tilting, oracle_stt, tau
from .triangular import (
    dual_left_module,
    left_module,
    left_module_is_projective,
    parse_split,
    right_module,
    sweep_lifts,
    triangular_split,
)
from .utils import configure_logging, poset_document, sweep_document, write_dot, write_json

logger = logging.getLogger(__name__)

PREDICATES = ("tau-rigid", "stt", "tilting")


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="Path to config.yaml")
    common.add_argument("--field", type=int, default=argparse.SUPPRESS, help="Prime p overriding every algebra file")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="Worker threads for enumeration and sweeps")
    common.add_argument("--node-budget", type=int, default=argparse.SUPPRESS, help="Maximum number of support tau-tilting pairs")
    common.add_argument("--progress", action="store_true", default=argparse.SUPPRESS, help="Show progress bars")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("--json", dest="json_out", default=argparse.SUPPRESS, help="Write the structured document here; '-' for stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        description="Tau-tilting workbench for bound quiver and triangular matrix algebras",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    algebra_parser = commands.add_parser("algebra", help="Inspect an algebra file")
    algebra_commands = algebra_parser.add_subparsers(dest="action", required=True)
    info_parser = algebra_commands.add_parser("info", parents=[common], help="Dimension, basis paths and idempotents")
    info_parser.add_argument("file", help="Algebra description (YAML)")
    info_parser.add_argument("--split", default=None, help="Triangular split such as 'A=1,2;B=3,4,5'")
    info_parser.set_defaults(handler=handle_algebra_info)

    stt_parser = commands.add_parser("stt", help="Support tau-tilting pairs")
    stt_commands = stt_parser.add_subparsers(dest="action", required=True)
    enum_parser = stt_commands.add_parser("enumerate", parents=[common], help="Enumerate all pairs by mutation")
    enum_parser.add_argument("file", help="Algebra description (YAML)")
    enum_parser.add_argument("--dot", default=None, help="Write the Hasse quiver as DOT; '-' for stdout")
    enum_parser.add_argument("--oracle", action="store_true", help="Cross-check against a brute-force search")
    enum_parser.add_argument(
        "--oracle-bound",
        type=int,
        default=None,
        help="Per-vertex dimension cap of the oracle search (default: from projectives and injectives)",
    )
    enum_parser.set_defaults(handler=handle_stt_enumerate)

    tri_parser = commands.add_parser("tri", help="Triangular matrix algebras")
    tri_commands = tri_parser.add_subparsers(dest="action", required=True)
    sweep_parser = tri_commands.add_parser("sweep", parents=[common], help="Lift every pair of corner pairs")
    sweep_parser.add_argument("file", help="Algebra description (YAML)")
    sweep_parser.add_argument("--split", required=True, help="Triangular split such as 'A=1,2;B=3,4,5'")
    sweep_parser.add_argument("--verify", action="store_true", help="Check every lift directly over R")
    sweep_parser.add_argument("--tilting", action="store_true", help="Also decide whether each lift is a tilting module")
    sweep_parser.set_defaults(handler=handle_tri_sweep)

    module_parser = commands.add_parser("module", help="Single-module computations")
    module_commands = module_parser.add_subparsers(dest="action", required=True)
    tau_parser = module_commands.add_parser("tau", parents=[common], help="Auslander-Reiten translate")
    tau_parser.add_argument("file", help="Algebra description (YAML)")
    tau_parser.add_argument("--module", required=True, help="'P1+S1', '0' or a literal {dims: [...], maps: {...}}")
    tau_parser.set_defaults(handler=handle_module_tau)

    check_parser = module_commands.add_parser("check", parents=[common], help="Evaluate a predicate")
    check_parser.add_argument("file", help="Algebra description (YAML)")
    check_parser.add_argument("--module", required=True, help="'P1+S1', '0' or a literal {dims: [...], maps: {...}}")
    check_parser.add_argument("--predicate", required=True, choices=PREDICATES)
    check_parser.set_defaults(handler=handle_module_check)

    return parser


def build_settings(args: argparse.Namespace) -> WorkbenchSettings:
    settings = load_settings(getattr(args, "config", None))
    return settings.with_overrides(
        prime=getattr(args, "field", None),
        workers=getattr(args, "workers", None),
        node_budget=getattr(args, "node_budget", None),
        progress=getattr(args, "progress", None),
        log_level=getattr(args, "log_level", None),
    )


def load_algebra_for(path: str, settings: WorkbenchSettings):
    spec = read_algebra_file(path)
    return spec.build(
        p=settings.prime,
        default_p=settings.default_prime,
        default_max_path_length=settings.max_path_length,
    )


def _emit(lines: list[str], document: dict, args: argparse.Namespace) -> None:
    out = getattr(args, "json_out", None)
    if out:
        write_json(document, out)
    if out != "-":
        sys.stdout.write("\n".join(lines) + "\n")


def handle_algebra_info(args: argparse.Namespace, settings: WorkbenchSettings) -> None:
    algebra = load_algebra_for(args.file, settings)
    lines = [f"algebra {algebra.name} over F_{algebra.p}", f"dim {algebra.dim}"]
    degrees = algebra.paths_by_degree()
    for degree in sorted(degrees):
        lines.append(f"degree {degree}: {' '.join(degrees[degree])}")
    idempotents = [f"e{v}" for v in algebra.vertices]
    lines.append(f"idempotents: {' '.join(idempotents)}")
    document = {
        "kind": "algebra_info",
        "algebra": algebra.name,
        "p": algebra.p,
        "dim": algebra.dim,
        "basis_by_degree": {str(d): paths for d, paths in sorted(degrees.items())},
        "idempotents": idempotents,
    }
    if args.split:
        a_vertices, b_vertices = parse_split(args.split)
        split = triangular_split(algebra, a_vertices, b_vertices)
        facts = split.describe()
        facts["M_lambda"] = registry_for(split.lam).label_sum(right_module(split))
        facts["gamma_M_projective"] = left_module_is_projective(split)
        facts["gamma_M_dims"] = list(left_module(split).dims)
        facts["dual_gamma_M"] = registry_for(split.gamma).label_sum(dual_left_module(split))
        lines.extend(
            [
                f"split A={','.join(split.a_vertices)} B={','.join(split.b_vertices)}",
                f"dim Lambda {split.lam.dim}",
                f"dim Gamma {split.gamma.dim}",
                f"dim M {split.m_dim}: {' '.join(facts['M_basis'])}",
                f"M_Lambda = {facts['M_lambda']}",
                f"_Gamma M projective = {str(facts['gamma_M_projective']).lower()}",
                f"D(_Gamma M) = {facts['dual_gamma_M']}",
            ]
        )
        document["split"] = facts
    _emit(lines, document, args)


def handle_stt_enumerate(args: argparse.Namespace, settings: WorkbenchSettings) -> None:
    algebra = load_algebra_for(args.file, settings)
    poset = enumerate_stt(algebra, settings.node_budget, workers=settings.workers, progress=settings.progress)
    lines = [f"{len(poset.nodes)} support tau-tilting pairs over {algebra.name}"]
    lines.extend(poset.labels())
    lines.append(f"{len(poset.edges)} edges")
    lines.extend(f"{a} -> {b}" for a, b in poset.edge_labels())

    oracle = None
    if args.oracle:
        bound = args.oracle_bound if args.oracle_bound is not None else default_dim_bound(algebra)
        found = oracle_stt(
            algebra,
            bound,
            prime=settings.oracle_prime,
            search_limit=settings.oracle_search_limit,
            progress=settings.progress,
        )
        found_labels = sorted(pair.label for pair in found)
        missing = sorted(set(poset.labels()) - set(found_labels))
        extra = sorted(set(found_labels) - set(poset.labels()))
        oracle = {"pairs": len(found), "agrees": not missing and not extra, "missing": missing, "extra": extra}
        if missing or extra:
            logger.warning("Oracle disagrees over %s: missing %s, extra %s", algebra.name, missing, extra)
            raise VerificationError(
                f"Enumeration and oracle disagree over {algebra.name}: missing {missing}, extra {extra}"
            )
        lines.append(f"oracle agrees: {len(found)} pairs")

    if args.dot:
        write_dot(poset, args.dot)
    _emit(lines, poset_document(poset, oracle), args)


def handle_tri_sweep(args: argparse.Namespace, settings: WorkbenchSettings) -> None:
    algebra = load_algebra_for(args.file, settings)
    a_vertices, b_vertices = parse_split(args.split)
    split = triangular_split(algebra, a_vertices, b_vertices)
    table = sweep_lifts(
        split,
        node_budget=settings.node_budget,
        workers=settings.workers,
        verify=args.verify,
        tilting=args.tilting,
        progress=settings.progress,
    )
    summary = table.summary()
    frame = table.to_frame()
    passing = frame.loc[frame["verdict"].astype(bool), ["x_label", "y_label", "tensor_label", "lift_label"]]
    lines = [
        f"{summary['pairs']} pairs, {summary['passing']} lift to support tau-tilting modules over {algebra.name}",
        passing.to_string(index=False) if not passing.empty else "(none)",
    ]
    if args.verify:
        lines.append("verified: every verdict matches the direct check over R")
    if args.tilting:
        tilting = frame.loc[frame["tilting"].astype(bool), ["x_label", "y_label"]]
        lines.append(f"{summary['tilting']} lifts are tilting")
        if not tilting.empty:
            lines.append(tilting.to_string(index=False))
    _emit(lines, sweep_document(table), args)


def handle_module_tau(args: argparse.Namespace, settings: WorkbenchSettings) -> None:
    algebra = load_algebra_for(args.file, settings)
    module = parse_module_spec(algebra, args.module)
    registry = registry_for(algebra)
    translate = registry.label_sum(tau(module))
    document = {
        "kind": "module_tau",
        "algebra": algebra.name,
        "module": registry.label_sum(module),
        "tau": translate,
    }
    _emit([f"tau = {translate}"], document, args)


def handle_module_check(args: argparse.Namespace, settings: WorkbenchSettings) -> None:
    algebra = load_algebra_for(args.file, settings)
    module = parse_module_spec(algebra, args.module)
    registry = registry_for(algebra)
    document = {
        "kind": "module_check",
        "algebra": algebra.name,
        "module": registry.label_sum(module),
        "predicate": args.predicate,
    }
    lines = []
    if args.predicate == "tau-rigid":
        verdict = is_tau_rigid(module)
    elif args.predicate == "tilting":
        verdict = is_tilting(module)
    else:
        pair = is_support_tau_tilting(module)
        verdict = pair is not None
        if pair is not None:
            document["pair"] = pair.label
            lines.append(f"pair = {pair.label}")
    document["verdict"] = verdict
    lines.insert(0, f"{args.predicate} = {str(verdict).lower()}")
    _emit(lines, document, args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = build_settings(args)
        configure_logging(settings.log_level, settings.log_file)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    configure(DecompositionLimits(settings.sweep_scalars, settings.exhaustive_budget))
    handler: Callable[[argparse.Namespace, WorkbenchSettings], None] = args.handler
    try:
        handler(args, settings)
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            if isinstance(exc, ValueError):
                code = 2
            else:
                raise
        logger.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return code
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
