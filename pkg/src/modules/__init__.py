"""Module calculus over bound quiver algebras."""

from .decompose import (
    DecompositionLimits,
    decompose,
    find_isomorphism,
    indecomposable_summands,
    is_indecomposable,
    is_isomorphic,
    sort_key,
    summand_count,
)
from .labels import LabelRegistry, label_of, module_from_labels, registry_for
from .presentation import (
    ProjectivePresentation,
    gen_membership,
    injective_module,
    is_projective,
    min_proj_presentation,
    path_matrix,
    proj_dim_le_one,
    projective_cover,
    projective_map,
    projective_module,
    radical_top,
    regular_module,
    simple_module,
)
from .representation import (
    Morphism,
    Representation,
    cokernel,
    direct_sum,
    extend_by_zero,
    hom_space,
    identity_morphism,
    image,
    kernel,
    restrict,
    submodule,
    zero_module,
)

__all__ = [
    "DecompositionLimits",
    "LabelRegistry",
    "Morphism",
    "ProjectivePresentation",
    "Representation",
    "cokernel",
    "decompose",
    "direct_sum",
    "extend_by_zero",
    "find_isomorphism",
    "gen_membership",
    "hom_space",
    "identity_morphism",
    "image",
    "indecomposable_summands",
    "injective_module",
    "is_indecomposable",
    "is_isomorphic",
    "is_projective",
    "kernel",
    "label_of",
    "min_proj_presentation",
    "module_from_labels",
    "path_matrix",
    "proj_dim_le_one",
    "projective_cover",
    "projective_map",
    "projective_module",
    "radical_top",
    "regular_module",
    "registry_for",
    "restrict",
    "simple_module",
    "sort_key",
    "submodule",
    "summand_count",
    "zero_module",
]
