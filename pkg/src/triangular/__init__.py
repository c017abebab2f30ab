"""Triangular matrix algebras: splits, the tensor functor, lifts and the sweep."""

from .lift import (
    LiftVerdict,
    Triple,
    assembled_presentation,
    check_lift_silting,
    check_lift_stt,
    check_lift_tau_rigid,
    check_lift_tilting,
    check_lift_tilting_by_generation,
    lift,
    lift_of_gamma_module,
    parse_triple_label,
    rep_to_triple,
    triple_label,
    triple_labels,
    triple_to_rep,
)
from .split import (
    TensorProduct,
    TriSplit,
    dual_left_module,
    left_module,
    left_module_is_projective,
    parse_split,
    presentation_is_monic,
    right_module,
    tensor_morphism,
    tensor_with_M,
    tensored_presentation_is_monic,
    triangular_split,
)
from .sweep import SweepRow, SweepTable, sweep_lifts

__all__ = [
    "LiftVerdict",
    "SweepRow",
    "SweepTable",
    "TensorProduct",
    "TriSplit",
    "Triple",
    "assembled_presentation",
    "check_lift_silting",
    "check_lift_stt",
    "check_lift_tau_rigid",
    "check_lift_tilting",
    "check_lift_tilting_by_generation",
    "dual_left_module",
    "left_module",
    "left_module_is_projective",
    "lift",
    "lift_of_gamma_module",
    "parse_split",
    "parse_triple_label",
    "presentation_is_monic",
    "rep_to_triple",
    "right_module",
    "sweep_lifts",
    "tensor_morphism",
    "tensor_with_M",
    "tensored_presentation_is_monic",
    "triangular_split",
    "triple_label",
    "triple_labels",
    "triple_to_rep",
]
