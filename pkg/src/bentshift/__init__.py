"""Bent Boolean functions, exact spectral analysis, and hidden-shift experiments."""

from .errors import (
    DualAccessError,
    InconsistentShiftError,
    NotBentError,
    ResourceLimitError,
    SearchExhaustedError,
    TruthTableParseError,
)
from .gf2 import BitMatrix, BitVec, kernel_basis, random_invertible, rank, solve
from .gf2k import (
    FieldCtx,
    FieldElement,
    find_kloosterman_zero,
    kloosterman,
    subfield_embedding,
    trace,
)
from .boolfn import (
    Spectrum,
    TruthTable,
    affine_compose,
    anf,
    convolve,
    degree,
    derivative,
    dual,
    is_balanced,
    is_bent,
    load_table,
    save_table,
    shift,
    wht,
)
from .families import (
    DobbertinDescriptor,
    IPDescriptor,
    MMDescriptor,
    PartialSpreadDescriptor,
    QuadraticForm,
    TraceMonomialDescriptor,
    TraceMonomialResult,
    build_table,
    descriptor_from_dict,
    descriptor_to_dict,
    dickson_normalize,
    dickson_target,
    direct_sum,
    field_power_permutation,
    dobbertin,
    inner_product,
    maiorana_mcfarland,
    mm_dual,
    partial_spread,
    quadratic,
    random_balanced_table,
    random_descriptor,
    random_dobbertin,
    random_mm,
    random_partial_spread,
    random_quadratic,
    trace_monomial,
)
from .checks import (
    DifferenceSetReport,
    balanced_derivative_check,
    circulant_hadamard_check,
    difference_set_check,
)
from .oracles import (
    HiddenShiftInstance,
    QueryStats,
    ShiftOracle,
    load_instance,
    make_instance,
    save_instance,
)
from .qsim import (
    A2Result,
    StateVector,
    analytic_a2_samples,
    hadamard_all,
    phase_oracle,
    run_a1,
    run_a2,
    run_a2_sample,
    run_a2_samples,
)
from .classical import (
    adaptive_mm_solve,
    candidate_census,
    exhaustive_solve,
    spectral_deconvolve,
)

__all__ = [
    "A2Result",
    "BitMatrix",
    "BitVec",
    "DifferenceSetReport",
    "DobbertinDescriptor",
    "DualAccessError",
    "FieldCtx",
    "FieldElement",
    "HiddenShiftInstance",
    "IPDescriptor",
    "InconsistentShiftError",
    "MMDescriptor",
    "NotBentError",
    "PartialSpreadDescriptor",
    "QuadraticForm",
    "QueryStats",
    "ResourceLimitError",
    "SearchExhaustedError",
    "ShiftOracle",
    "Spectrum",
    "StateVector",
    "TraceMonomialDescriptor",
    "TraceMonomialResult",
    "TruthTable",
    "TruthTableParseError",
    "adaptive_mm_solve",
    "affine_compose",
    "analytic_a2_samples",
    "anf",
    "balanced_derivative_check",
    "build_table",
    "candidate_census",
    "circulant_hadamard_check",
    "convolve",
    "degree",
    "derivative",
    "descriptor_from_dict",
    "descriptor_to_dict",
    "dickson_normalize",
    "dickson_target",
    "difference_set_check",
    "direct_sum",
    "dobbertin",
    "dual",
    "exhaustive_solve",
    "field_power_permutation",
    "find_kloosterman_zero",
    "hadamard_all",
    "inner_product",
    "is_balanced",
    "is_bent",
    "kernel_basis",
    "kloosterman",
    "load_instance",
    "load_table",
    "maiorana_mcfarland",
    "make_instance",
    "mm_dual",
    "partial_spread",
    "phase_oracle",
    "quadratic",
    "random_balanced_table",
    "random_descriptor",
    "random_dobbertin",
    "random_invertible",
    "random_mm",
    "random_partial_spread",
    "random_quadratic",
    "rank",
    "run_a1",
    "run_a2",
    "run_a2_sample",
    "run_a2_samples",
    "save_instance",
    "save_table",
    "shift",
    "solve",
    "spectral_deconvolve",
    "subfield_embedding",
    "trace",
    "trace_monomial",
    "wht",
]

__version__ = "0.1.0"
