"""Multi-trial Guruswami-Sudan list decoding of generalised
Reed-Solomon codes over prime fields, with instrumented
field-operation counting."""

from .field import FieldElement, OpCounter, PrimeField, count_ops
from .poly import BOTTOM, Polynomial, lagrange_interpolate, roots_product, univariate_roots
from .polymat import (
    PolyMatrix,
    is_weak_popov,
    leading_position,
    minimal_row,
    module_membership,
    mulders_storjohann,
    orthogonality_defect,
    reduce_to_weak_popov,
    row_degree,
    row_reduce_step,
)
from .gs_core import (
    BivariatePoly,
    InterpolationContext,
    InterpolationState,
    basis_state,
    column_weights,
    initial_state,
    minimal_interpolation_poly,
    module_basis,
    reencoded_column_weights,
    refine_list_size,
    refine_multiplicity,
)
from .root_finding import RootCandidate, filter_by_distance, roth_ruckenstein
from .decoder import (
    DecodeResult,
    DecodingSchedule,
    GRSCode,
    RootPolicy,
    Step,
    TrialReport,
    build_schedule,
    decoding_radius,
    encode,
    is_permissible,
    lee_osullivan_decode,
    minimal_parameters,
    multi_trial_decode,
    permissibility_margin,
    re_encode,
    within_johnson_bound,
)
from .simulator import (
    DecoderSpec,
    ExperimentConfig,
    TrialRecord,
    random_instance,
    run_experiment,
    write_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
