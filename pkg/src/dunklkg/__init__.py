"""Complex spectra, radial eigenfunctions and SU(1,1) Perelomov coherent
states of the canonical Dunkl-Klein-Gordon equation on three curved
backgrounds (gaussian, rational and sinc curvature profiles), with
grid-operator verification of the underlying algebra.

Units: hbar = c = 1.  Every multivalued complex function uses the
principal branch (see ``complexfn``); the single documented exception is
the inner root of the rational-case spectrum, whose branch is pinned by
the published reference table (see ``spectrum``).
"""

from .coherent import (
    CoherentParams,
    PhaseConvention,
    ProfileData,
    build_profile,
    coherent_closed_form,
    coherent_evolved,
    coherent_series,
    density_profile,
    suggested_series_terms,
)
from .complexfn import (
    gamma,
    laguerre,
    laguerre_sequence,
    log_gamma,
    principal_log,
    principal_pow,
    principal_sqrt,
)
from .eigenfunctions import (
    OdeCoefficients,
    RadialEigenfunction,
    approximation_gap,
    eigenfunction_r,
    eigenfunction_x,
    full_wavefunction_even,
    normalization,
    ode_residual,
    reduced_ode_coefficients,
)
from .errors import (
    DegenerateError,
    DomainError,
    DunklKGError,
    GridError,
    NormalizationError,
    PoleError,
    UnsupportedParity,
)
from .gridops import (
    GridFunction,
    commutator_apply,
    derivative_4th,
    dunkl_apply,
    dunkl_shorthand_apply,
    ladder_apply,
    positive_grid,
    sample_positive,
    sample_symmetric,
    second_derivative_4th,
    symmetric_grid,
    z3_apply,
)
from .model import (
    AlgebraData,
    CurvatureCase,
    Parity,
    PhysParams,
    bargmann_index,
    casimir_eigenvalue,
    parse_alpha,
    parse_complex,
    profile_a,
    radial_coupling,
    scale_factor,
    sigma_index,
)
from .refdata import compare_reference
from .spectrum import (
    EnergyPair,
    SpectrumTable,
    energy_pair,
    energy_pair_case1,
    energy_pair_case2,
    energy_pair_case3,
    energy_squared_case1,
    self_consistency_residual,
    spectrum_table,
    table_to_csv,
    table_to_json,
)
from .verify import run_verification, z3_eigenvalue_residual

__version__ = "0.1.0"
