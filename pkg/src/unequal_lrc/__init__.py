"""Locally repairable codes with unequal locality.

Distance bounds for unequal information and all-symbol locality profiles,
optimal constructions (split-parity Pyramid codes and Gabidulin-precoded
LRCs), exact brute-force oracles, and the locality-requirement optimizer.
"""

from unequal_lrc.bounds import (
    BoundReport,
    WitnessSet,
    gopalan_bound,
    unequal_all_symbol_bound,
    unequal_info_bound,
    witness_set,
)
from unequal_lrc.code_core import (
    AllSymbolLocalityProfile,
    ErasurePattern,
    InfoLocalityProfile,
    LinearCode,
    all_symbol_profile,
    coordinate_locality,
    dual_basis,
    encode,
    erasure_decode,
    info_profile,
    local_repair,
    min_distance,
)
from unequal_lrc.constructions import (
    gabidulin_lrc,
    lrc_erasure_decode,
    pyramid_unequal,
    repair_group_of,
    systematic_mds,
)
from unequal_lrc.galois import (
    FieldElement,
    GaloisField,
    LinearizedPolynomial,
    field_new,
    field_of_order,
    moore_solve,
)
from unequal_lrc.profile_opt import (
    LocalityRequirement,
    canonicalize,
    exhaustive_optimal_objective,
    greedy_optimal_profile,
    objective,
    respects,
)

__all__ = [
    "BoundReport",
    "WitnessSet",
    "gopalan_bound",
    "unequal_all_symbol_bound",
    "unequal_info_bound",
    "witness_set",
    "AllSymbolLocalityProfile",
    "ErasurePattern",
    "InfoLocalityProfile",
    "LinearCode",
    "all_symbol_profile",
    "coordinate_locality",
    "dual_basis",
    "encode",
    "erasure_decode",
    "info_profile",
    "local_repair",
    "min_distance",
    "gabidulin_lrc",
    "lrc_erasure_decode",
    "pyramid_unequal",
    "repair_group_of",
    "systematic_mds",
    "FieldElement",
    "GaloisField",
    "LinearizedPolynomial",
    "field_new",
    "field_of_order",
    "moore_solve",
    "LocalityRequirement",
    "canonicalize",
    "exhaustive_optimal_objective",
    "greedy_optimal_profile",
    "objective",
    "respects",
]
