"""Rank-one eigenvalue perturbation, constructive deflation, and a verified oracle.

The library revolves around one fact about dense complex matrices: adding
the rank-one term xy* to A, where x is an eigenvector for lam, replaces
lam by lam + y*x in the spectrum and leaves every other eigenvalue fixed.
Everything that fact enables lives here: the update itself, the similarity
deflation from its constructive proof, two deflation-driven eigensolvers,
and an independent characteristic-polynomial oracle that checks every
claim the update makes.
"""

from .core import (
    EPS,
    LUFactorization,
    as_matrix,
    as_vector,
    conj_transpose,
    frobenius_norm,
    lu_det,
    lu_factor,
    lu_solve,
    matmul,
    matvec,
    outer,
)
from .errors import (
    BrauerError,
    CardinalityMismatch,
    DimensionMismatch,
    DimensionTooLarge,
    DimensionTooSmall,
    LambdaNotInSpectrum,
    NoConvergence,
    NotAnEigenvector,
    ParseError,
    ResidualTooLarge,
    RootsNoConvergence,
    SingularMatrix,
    ZeroCollision,
    ZeroVector,
)
from .matfile import (
    format_complex,
    parse_complex,
    read_matrix,
    read_vector,
    write_matrix,
    write_vector,
)
from .oracle import (
    MatchReport,
    char_poly,
    eig_oracle,
    match_multisets,
    poly_from_roots,
    poly_roots,
)
from .solver import (
    PowerOptions,
    SpectrumResult,
    StageRecord,
    brauer_annihilate_and_continue,
    power_iteration,
    spectrum_by_deflation,
)
from .spectrum import Spectrum
from .theorem import (
    DeflationResult,
    EigenPair,
    VerificationReport,
    brauer_update,
    completion,
    inner_y_star_x,
    naive_completion,
    predict_spectrum,
    shift_eigenvalue,
    similarity_deflate,
    verify_brauer,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "BrauerError",
    "CardinalityMismatch",
    "DeflationResult",
    "DimensionMismatch",
    "DimensionTooLarge",
    "DimensionTooSmall",
    "EigenPair",
    "LUFactorization",
    "LambdaNotInSpectrum",
    "MatchReport",
    "NoConvergence",
    "NotAnEigenvector",
    "ParseError",
    "PowerOptions",
    "ResidualTooLarge",
    "RootsNoConvergence",
    "SingularMatrix",
    "Spectrum",
    "SpectrumResult",
    "StageRecord",
    "VerificationReport",
    "ZeroCollision",
    "ZeroVector",
    "as_matrix",
    "as_vector",
    "brauer_annihilate_and_continue",
    "brauer_update",
    "char_poly",
    "completion",
    "conj_transpose",
    "eig_oracle",
    "format_complex",
    "frobenius_norm",
    "inner_y_star_x",
    "lu_det",
    "lu_factor",
    "lu_solve",
    "match_multisets",
    "matmul",
    "matvec",
    "naive_completion",
    "outer",
    "parse_complex",
    "poly_from_roots",
    "poly_roots",
    "power_iteration",
    "predict_spectrum",
    "read_matrix",
    "read_vector",
    "shift_eigenvalue",
    "similarity_deflate",
    "spectrum_by_deflation",
    "verify_brauer",
    "write_matrix",
    "write_vector",
]
