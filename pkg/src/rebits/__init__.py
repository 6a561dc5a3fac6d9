"""Entanglement measures for two-rebit states.

Real concurrence and closed-form entanglement of formation for 4x4 real
symmetric density operators, the constructive optimal-ensemble flattening
algorithm, Wootters concurrence and the partial-transpose test for comparison
with the complex field, and a brute-force ensemble-minimization oracle.
"""

__version__ = "0.1.0"

from .ensembles import (
    FlattenResult,
    SubnormalizedEnsemble,
    apply_mixer,
    average_concurrence,
    average_preconcurrence,
    brute_force_min_eof,
    eigen_ensemble,
    flatten,
)
from .linalg import (
    NotPSDError,
    SpectralDecomposition,
    givens_mix,
    psd_sqrt,
    sym_eig,
    symmetrize,
    tensor_product,
)
from .measures import (
    BOTH_ENTANGLED,
    REAL_BOUND_ENTANGLED,
    REAL_SEPARABLE,
    MeasureReport,
    binary_entropy,
    concurrence_pure,
    concurrence_real,
    eof_curve,
    eof_real,
    measure_report,
    partial_transpose,
    peres_min_eig,
    preconcurrence,
    tau,
    tau_spectrum,
    wootters_concurrence,
)
from .states import (
    DensityOperator,
    PauliCoordinates,
    PureState,
    SchmidtForm,
    StateValidationError,
    alpha_state,
    from_pauli,
    marginal,
    pauli_expand,
    random_state,
    schmidt,
)

__all__ = [name for name in dir() if not name.startswith("_")]
