"""Numerics for the sextic oscillator and the third-order eigen-equation."""
from .basis import (
    EigensolverError,
    HermiteBasisOp,
    NotSelfAdjoint,
    Spectrum,
    build_matrix,
    harmonic_operator,
    lowest_eigenvalues,
    sextic_spectrum,
    spectrum,
    spectrum_csv,
)
from .bohr_sommerfeld import (
    QuantizationResult,
    SemiclassicalRow,
    action_constant,
    action_integral,
    cube_root_r2,
    energy_levels,
    gamma_closed_form,
    gamma_recurrence_residuals,
    harmonic_bs_sanity,
    level_coefficient,
    loglog_slope,
    quantization_csv,
    semiclassical_comparison,
)
from .finite_difference import ResolutionWarning, central_weights, fd_eigensystem, fd_oracle
from .quadrature import QuadratureError, QuadResult, tanh_sinh
from .series import (
    MatchResult,
    SeriesSolution,
    hypergeom_eval,
    khat_eigen_check,
    match_series_to_F,
    ode_residual,
    series_solution,
)
