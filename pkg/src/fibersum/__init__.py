"""fibersum: exact calculus for fiber-sum constructions of simply
connected 4-manifolds and their Seiberg-Witten series.

Everything is exact integer arithmetic over immutable values; no floats.
"""

from .ring import ClassVector, GroupRingElt, LaurentPoly, substitute_exp
from .knots import (
    BraidWord,
    alexander,
    alexander_oracle,
    burau_reduced,
    closure_components,
    seifert_matrix,
)
from .manifolds import (
    Block,
    CharNumbers,
    ConnectedSum,
    Construction,
    FiberSum,
    KnotSurgery,
    NullLogTransform,
    TorusRecord,
    available_tori,
    block,
    char_numbers,
    connected_sum,
    debug_string,
    fiber_sum,
    fiber_sum_chain,
    knot_surgery,
    null_log_transform,
    surgered_chain,
    torus_records,
)
from .swseries import (
    SWReport,
    basic_classes,
    check_conjugation_symmetry,
    conjugation_sign,
    fiber_class_factor,
    reconstruct_series,
    surgery_factor,
    sw_first_power_formula,
    sw_report,
    sw_series,
)
from .families import (
    DISTINCT,
    INCONCLUSIVE,
    Fingerprint,
    distinguish,
    family_generate,
    family_report,
    fingerprint,
    homotopy_equivalent,
    one_stabilization_equivalent,
    stable_normal_form,
)
from . import errors

__all__ = [
    "ClassVector",
    "GroupRingElt",
    "LaurentPoly",
    "substitute_exp",
    "BraidWord",
    "alexander",
    "alexander_oracle",
    "burau_reduced",
    "closure_components",
    "seifert_matrix",
    "Block",
    "CharNumbers",
    "ConnectedSum",
    "Construction",
    "FiberSum",
    "KnotSurgery",
    "NullLogTransform",
    "TorusRecord",
    "available_tori",
    "block",
    "char_numbers",
    "connected_sum",
    "debug_string",
    "fiber_sum",
    "fiber_sum_chain",
    "knot_surgery",
    "null_log_transform",
    "surgered_chain",
    "torus_records",
    "SWReport",
    "basic_classes",
    "check_conjugation_symmetry",
    "conjugation_sign",
    "fiber_class_factor",
    "reconstruct_series",
    "surgery_factor",
    "sw_first_power_formula",
    "sw_report",
    "sw_series",
    "DISTINCT",
    "INCONCLUSIVE",
    "Fingerprint",
    "distinguish",
    "family_generate",
    "family_report",
    "fingerprint",
    "homotopy_equivalent",
    "one_stabilization_equivalent",
    "stable_normal_form",
    "errors",
]
