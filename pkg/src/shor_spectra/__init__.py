"""Spectra of the unitary operators in Shor's order-finding algorithm."""

from .errors import (
    BadDimensionError,
    ConfigError,
    ConvergenceFailure,
    DimensionTooLargeError,
    DomainError,
    EmptySpectrumError,
    InvalidThetaError,
    NotCoprimeError,
    NotUnitaryError,
    ShorSpectraError,
    VerificationFailure,
)
from .numtheory import Orbit, OrbitDecomposition, gcd, mod_exp, mult_order, orbit_decomposition
from .operators import (
    BlockSpec,
    PermutationOperator,
    RegisterShape,
    UnitaryMatrix,
    block_operator_composed,
    block_operator_direct,
    commutator_with_shift,
    fourier_matrix,
    full_operator_U,
    full_operator_Utilde,
    hadamard_matrix,
    lambda_matrix,
    modular_exponentiation_operator,
    shift_matrix,
    utilde_eigenvalues,
    utilde_spectrum,
)
from .shift_spectrum import ShiftEigenpair, distinct_eigenangles, shift_eigenbasis
from .spectral_stats import (
    BlockSpectrum,
    IntensityRecord,
    SpacingEnsemble,
    cumulative_distribution,
    eigendecompose_unitary,
    histogram,
    intensity_record,
    ks_distance,
    normalized_spacings,
    pool_ensemble,
    poisson_pdf,
    wigner_cue_cdf,
    wigner_cue_pdf,
    wigner_goe_pdf,
)
from .structure import thue_morse, tm_fourier_column, tm_peak_scaling

__version__ = "0.1.0"
