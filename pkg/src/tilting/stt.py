"""Mutation of support tau-tilting pairs and the Hasse quiver of their poset.

Left mutation replaces a summand ``X`` outside ``Gen`` of the others by the
cokernel of its minimal left approximation. Right mutation is computed as a
left mutation over the opposite algebra, through the order-reversing
bijection ``dual_pair``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import networkx as nx
import numpy as np
from tqdm.auto import tqdm

from ..algebra import BoundQuiverAlgebra
from ..errors import BudgetExceededError, NotASlotError, VerificationError
from ..linalg import exact
from ..modules import (
    Morphism,
    Representation,
    cokernel,
    decompose,
    direct_sum,
    gen_membership,
    hom_space,
    is_isomorphic,
    is_projective,
    projective_module,
    registry_for,
)
from ..modules.presentation import top_multiplicities
from .tau import SttPair, make_pair, max_annihilating_idempotent, transpose

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10000

Slot = Union[Representation, str]


def minimal_left_approximation(module: Representation, summands: Sequence[Representation]) -> Morphism:
    """Minimal left ``add(summands)``-approximation of ``module``.

    Starts from the universal map into copies of each summand and drops
    components greedily while every map to a summand still factors through it.
    """
    alg = module.algebra
    p = alg.p
    components: list[tuple[int, Morphism]] = [
        (j, h) for j, target in enumerate(summands) for h in hom_space(module, target)
    ]
    between = [[hom_space(src, tgt) for tgt in summands] for src in summands]
    needed = [len(hom_space(module, target)) for target in summands]

    def approximates(chosen: list[tuple[int, Morphism]]) -> bool:
        for j, target in enumerate(summands):
            if needed[j] == 0:
                continue
            images = [g.compose(h).vector() for src, h in chosen for g in between[src][j]]
            if not images or exact.rank(np.stack(images, axis=1), p) < needed[j]:
                return False
        return True

    kept = list(components)
    for item in list(components):
        trial = [c for c in kept if c is not item]
        if approximates(trial):
            kept = trial
    target = direct_sum([summands[j] for j, _ in kept], alg)
    maps = []
    for i in range(alg.n_vertices):
        if kept:
            maps.append(np.concatenate([h.maps[i] for _, h in kept], axis=0))
        else:
            maps.append(exact.zeros(0, module.dims[i]))
    return Morphism(module, target, tuple(maps))


def _summand_index(pair: SttPair, module: Representation) -> int:
    for i, summand in enumerate(pair.summands):
        if is_isomorphic(summand, module):
            return i
    raise NotASlotError(f"Module with dims {module.dims} is not a summand of the pair")


def left_mutation(pair: SttPair, index: int) -> SttPair:
    alg = pair.algebra
    exchanged = pair.summands[index]
    rest = [s for i, s in enumerate(pair.summands) if i != index]
    approximation = minimal_left_approximation(exchanged, rest)
    quotient, _ = cokernel(approximation)
    fresh = []
    for piece, mult in decompose(quotient):
        if any(is_isomorphic(piece, other) for other in rest):
            continue
        if mult > 1:
            raise VerificationError("Mutation produced a repeated new summand")
        fresh.append(piece)
    if len(fresh) > 1:
        raise VerificationError(f"Mutation produced {len(fresh)} new summands")
    summands = rest + fresh
    support = max_annihilating_idempotent(direct_sum(summands, alg))
    result = make_pair(alg, summands, support)
    if result.size != alg.n_vertices:
        raise VerificationError(
            f"Mutation produced a pair with {result.size} slots over {alg.n_vertices} vertices"
        )
    logger.debug("Left mutation: %d summands -> %d, support %s", len(pair.summands), len(summands), support)
    return result


def dual_pair(pair: SttPair) -> SttPair:
    """The pair over the opposite algebra under the order-reversing bijection."""
    op = pair.algebra.opposite()
    summands: list[Representation] = []
    support: list[str] = []
    for module in pair.summands:
        if is_projective(module):
            tops = top_multiplicities(module)
            support.append(next(v for v, t in zip(pair.algebra.vertices, tops) if t))
        else:
            summands.append(transpose(module))
    summands.extend(projective_module(op, [v]) for v in pair.support)
    return make_pair(op, summands, support)


def _right_mutation(pair: SttPair, slot: Slot) -> SttPair:
    dual = dual_pair(pair)
    op = dual.algebra
    if isinstance(slot, str):
        target = projective_module(op, [slot])
    else:
        if is_projective(slot):
            raise VerificationError("A projective summand cannot be right mutated")
        target = transpose(slot)
    mutated = left_mutation(dual, _summand_index(dual, target))
    return dual_pair(mutated)


def mutate(pair: SttPair, slot: Slot) -> SttPair:
    """Mutation at an indecomposable summand, or at a support vertex given by its id."""
    if isinstance(slot, str):
        if slot not in pair.support:
            raise NotASlotError(f"Vertex {slot!r} is not in the support of {pair.support}")
        return _right_mutation(pair, slot)
    index = _summand_index(pair, slot)
    exchanged = pair.summands[index]
    rest = [s for i, s in enumerate(pair.summands) if i != index]
    if rest and gen_membership(exchanged, direct_sum(rest, pair.algebra)):
        return _right_mutation(pair, exchanged)
    return left_mutation(pair, index)


def left_mutations(pair: SttPair) -> list[tuple[Representation, SttPair]]:
    """Every left mutation of ``pair`` with the summand it exchanges."""
    out = []
    for index, summand in enumerate(pair.summands):
        rest = [s for i, s in enumerate(pair.summands) if i != index]
        if rest and gen_membership(summand, direct_sum(rest, pair.algebra)):
            continue
        out.append((summand, left_mutation(pair, index)))
    return out


def gen_leq(lower: SttPair, upper: SttPair) -> bool:
    """``lower <= upper`` iff every summand of ``lower`` lies in ``Gen`` of ``upper``'s module."""
    return all(gen_membership(s, upper.module) for s in lower.summands)


@dataclass
class SttPoset:
    algebra: BoundQuiverAlgebra
    nodes: list[SttPair]
    edges: list[tuple[int, int]]
    mutation_edges: list[tuple[int, int, str]] = field(default_factory=list)

    def labels(self) -> list[str]:
        return [node.label for node in self.nodes]

    def index_of(self, label: str) -> int:
        for i, node in enumerate(self.nodes):
            if node.label == label:
                return i
        raise KeyError(label)

    def find(self, label: str) -> SttPair:
        return self.nodes[self.index_of(label)]

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.nodes[a].label, self.nodes[b].label) for a, b in self.edges]

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, label=node.label)
        for a, b in self.edges:
            graph.add_edge(a, b)
        return graph


def hasse_by_order(nodes: Sequence[SttPair]) -> nx.DiGraph:
    """Cover relations of ``gen_leq`` on ``nodes``, edges pointing downwards."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(nodes)))
    for i, upper in enumerate(nodes):
        for j, lower in enumerate(nodes):
            if i != j and gen_leq(lower, upper):
                graph.add_edge(i, j)
    if not nx.is_directed_acyclic_graph(graph):
        raise VerificationError("Generation order is not antisymmetric on the given pairs")
    return nx.transitive_reduction(graph)


def enumerate_stt(
    algebra: BoundQuiverAlgebra,
    node_budget: int = DEFAULT_NODE_BUDGET,
    *,
    workers: int = 1,
    progress: bool = False,
) -> SttPoset:
    """Breadth-first closure under left mutation, starting from the regular pair."""
    if node_budget < 2:
        raise ValueError("node_budget must be at least 2")
    registry = registry_for(algebra)
    top = make_pair(algebra, [projective_module(algebra, [v]) for v in algebra.vertices], ())
    seen: dict[tuple, SttPair] = {top.key: top}
    raw_edges: list[tuple[tuple, tuple, str]] = []
    frontier = [top]
    bar = tqdm(desc=f"[stt] {algebra.name}", unit="node", dynamic_ncols=True, disable=not progress)
    bar.update(1)
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            results = executor.map(left_mutations, frontier) if executor else map(left_mutations, frontier)
            next_frontier = []
            for pair, mutations in zip(frontier, results):
                for exchanged, new in mutations:
                    key = new.key
                    if key not in seen:
                        if len(seen) >= node_budget:
                            raise BudgetExceededError(
                                f"More than {node_budget} support tau-tilting pairs over {algebra.name}; "
                                "the algebra may be tau-tilting infinite"
                            )
                        seen[key] = new
                        next_frontier.append(new)
                        bar.update(1)
                    raw_edges.append((pair.key, key, registry.label(exchanged)))
            frontier = next_frontier
    finally:
        bar.close()
        if executor:
            executor.shutdown(wait=True)

    nodes = sorted(seen.values(), key=lambda node: node.label)
    position = {node.key: i for i, node in enumerate(nodes)}
    mutation_edges = sorted(
        {(position[a], position[b], label) for a, b, label in raw_edges},
        key=lambda e: (nodes[e[0]].label, nodes[e[1]].label),
    )
    edges = [(a, b) for a, b, _ in mutation_edges]
    logger.info("Enumerated %d support tau-tilting pairs over %s with %d edges", len(nodes), algebra.name, len(edges))
    return SttPoset(algebra=algebra, nodes=nodes, edges=edges, mutation_edges=mutation_edges)


__all__ = [
    "DEFAULT_NODE_BUDGET",
    "SttPoset",
    "dual_pair",
    "enumerate_stt",
    "gen_leq",
    "hasse_by_order",
    "left_mutation",
    "left_mutations",
    "minimal_left_approximation",
    "mutate",
]
