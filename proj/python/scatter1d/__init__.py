"""Transfer-matrix scattering of finite-range 1-D complex potentials.

Thin wrapper over the compiled extension: potentials, three cross-checking
amplitude routes, spectral classification, and inverse design of optical
index profiles (threshold lasing, coherent perfect absorption, unidirectional
invisibility).
"""

from ._core import (
    BarrierClosedForm,
    Complex2x2,
    DesignResult,
    ExpPotentialClosedForm,
    Interval,
    JostSolution,
    Potential,
    Route,
    ScatteringAmplitudes,
    SolverError,
    SpectralSingularity,
    SingularProfileError,
    TransferTrajectory,
    amplitudes_from_matrix,
    classify,
    classify_matrix,
    composition_defect,
    design,
    evolve_transfer,
    left_reflection_contour,
    matrix_from_amplitudes,
    predicted_transmission,
    run_verification,
    scatter,
    solve_jost,
    truncated_amplitudes,
    __version__,
)

__all__ = [
    "BarrierClosedForm",
    "Complex2x2",
    "DesignResult",
    "ExpPotentialClosedForm",
    "Interval",
    "JostSolution",
    "Potential",
    "Route",
    "ScatteringAmplitudes",
    "SolverError",
    "SpectralSingularity",
    "SingularProfileError",
    "TransferTrajectory",
    "amplitudes_from_matrix",
    "classify",
    "classify_matrix",
    "composition_defect",
    "design",
    "evolve_transfer",
    "left_reflection_contour",
    "matrix_from_amplitudes",
    "predicted_transmission",
    "run_verification",
    "scatter",
    "solve_jost",
    "truncated_amplitudes",
    "__version__",
]
