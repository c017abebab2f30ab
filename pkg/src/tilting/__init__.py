"""Tau-tilting theory: translates, support tau-tilting pairs, mutation and the oracle."""

from .oracle import default_dim_bound, oracle_indecomposables, oracle_stt
from .stt import (
    SttPoset,
    dual_pair,
    enumerate_stt,
    gen_leq,
    hasse_by_order,
    minimal_left_approximation,
    mutate,
)
from .tau import (
    SttPair,
    d_sigma_contains,
    is_support_tau_tilting,
    is_tau_rigid,
    is_tilting,
    make_pair,
    max_annihilating_idempotent,
    nakayama_of_projective_map,
    tau,
    transpose,
)

__all__ = [
    "SttPair",
    "SttPoset",
    "d_sigma_contains",
    "default_dim_bound",
    "dual_pair",
    "enumerate_stt",
    "gen_leq",
    "hasse_by_order",
    "is_support_tau_tilting",
    "is_tau_rigid",
    "is_tilting",
    "make_pair",
    "max_annihilating_idempotent",
    "minimal_left_approximation",
    "mutate",
    "nakayama_of_projective_map",
    "oracle_indecomposables",
    "oracle_stt",
    "tau",
    "transpose",
]
