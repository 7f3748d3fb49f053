"""Exact workbench for semisimplified restriction to a regular additive
subgroup scheme: Verlinde fusion arithmetic, graded Jordan decomposition,
affine Weyl / alcove combinatorics, stable-category bookkeeping, and
explicit costandard-module models."""

from .capricorn_stable import (
    GradedSuperSpace,
    StableObject,
    hom_dim,
    hyperco_reference,
    in_super_image,
    phi_st_costandard,
    phi_tilting_complex,
    shift,
    support,
    tensor_line,
    to_graded_super,
)
from .nilmod import (
    GradedJordanDecomp,
    GradedNilModule,
    NilMatrix,
    direct_sum,
    dual,
    graded_decompose,
    is_projective,
    jordan_type,
    module_from_json,
    module_to_json,
    phi,
    stable_form,
    tensor,
)
from .ver_fusion import (
    VerObject,
    VerParams,
    categorical_dim,
    fuse,
    is_svec,
    parity_shift,
    require_odd_prime,
)
from .weyl_alcove import (
    RootDatum,
    Wall,
    alcove_position,
    dot_act,
    ext_block_witness,
    ext_block_witnesses,
    fundamental_representative,
    is_dominant,
    is_p_regular,
    length,
    root_datum,
    sign_epsilon,
)
from .weyl_models import (
    ModelSpec,
    model_phi,
    schur_module,
    sl2_costandard,
    unique_small_block_check,
)

__version__ = "0.1.0"

__all__ = [
    "GradedJordanDecomp",
    "GradedNilModule",
    "GradedSuperSpace",
    "ModelSpec",
    "NilMatrix",
    "RootDatum",
    "StableObject",
    "VerObject",
    "VerParams",
    "Wall",
    "alcove_position",
    "categorical_dim",
    "direct_sum",
    "dot_act",
    "dual",
    "ext_block_witness",
    "ext_block_witnesses",
    "fundamental_representative",
    "fuse",
    "graded_decompose",
    "hom_dim",
    "hyperco_reference",
    "in_super_image",
    "is_dominant",
    "is_p_regular",
    "is_projective",
    "is_svec",
    "jordan_type",
    "length",
    "model_phi",
    "module_from_json",
    "module_to_json",
    "parity_shift",
    "phi",
    "phi_st_costandard",
    "phi_tilting_complex",
    "require_odd_prime",
    "root_datum",
    "schur_module",
    "shift",
    "sign_epsilon",
    "sl2_costandard",
    "stable_form",
    "support",
    "tensor",
    "tensor_line",
    "to_graded_super",
    "unique_small_block_check",
]
