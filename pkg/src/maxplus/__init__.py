"""Exact max-plus linear algebra, invariant spaces and dynamic observers.

All values are immutable and every operation is a pure function, so the
whole API is safe to use from concurrent contexts.
"""

from .core import (EPS, TOP, Matrix, eps_matrix, from_columns, from_rows,
                   identity, left_residual, mat_add, mat_le, mat_mul, mat_vec,
                   matrix_from_json, matrix_to_json, min_plus_mul,
                   negate_transpose, right_residual, row_stack)
from .errors import (ConstraintViolation, DimensionError, DomainError,
                     MaxplusError, NotConverged, NotReconstructible,
                     NotSolvable, ResourceExceeded, SpecError)
from .twosided import TwoSidedSystem, solve_two_sided
from .semimodules import Semimodule, VolumeResult, preimage, volume
from .congruences import (Congruence, apply_to_pairs, congruence_generators,
                          generators_to_kernel, intersect_congruences,
                          kernel_of, orthogonal_congruence,
                          orthogonal_semimodule, pair_span_orthogonal,
                          preimage_congruence)
from .invariance import (FixpointReport, is_conditioned_invariant,
                         is_controlled_invariant, max_controlled_invariant,
                         min_conditioned_invariant_closed)
from .observer import (ObserverMatrices, Trajectory, check_reconstructible,
                       reconstruct_functional, run_observer,
                       synthesize_observer, verify_class_determinism)
from .teg import (ExtensionMap, IntervalMatrix, TegSpec, UncertainEntry,
                  compile_teg, embed_trajectory, extend_interval_system,
                  extend_output_matrix, sample_trajectory,
                  write_trajectory_csv)

__all__ = [
    "EPS", "TOP", "Matrix",
    "eps_matrix", "from_columns", "from_rows", "identity",
    "mat_add", "mat_mul", "mat_vec", "mat_le", "row_stack",
    "left_residual", "right_residual", "min_plus_mul", "negate_transpose",
    "matrix_from_json", "matrix_to_json",
    "MaxplusError", "DimensionError", "DomainError", "SpecError",
    "ResourceExceeded", "NotConverged", "NotSolvable", "NotReconstructible",
    "ConstraintViolation",
    "TwoSidedSystem", "solve_two_sided",
    "Semimodule", "VolumeResult", "preimage", "volume",
    "Congruence", "kernel_of", "congruence_generators", "generators_to_kernel",
    "orthogonal_semimodule", "orthogonal_congruence", "intersect_congruences",
    "pair_span_orthogonal", "apply_to_pairs", "preimage_congruence",
    "FixpointReport", "max_controlled_invariant",
    "min_conditioned_invariant_closed", "is_controlled_invariant",
    "is_conditioned_invariant",
    "ObserverMatrices", "Trajectory", "synthesize_observer", "run_observer",
    "reconstruct_functional", "check_reconstructible",
    "verify_class_determinism",
    "IntervalMatrix", "TegSpec", "ExtensionMap", "UncertainEntry",
    "compile_teg", "extend_interval_system", "extend_output_matrix",
    "sample_trajectory", "embed_trajectory", "write_trajectory_csv",
]
