"""Exception types shared across the library.

Every failure mode the public API can report is a named subclass of
:class:`BrauerError`, so callers (the CLI in particular) can map errors to
stable exit codes without string matching.
"""

from __future__ import annotations


class BrauerError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(BrauerError):
    """Operands do not conform (carries both shapes in the message)."""


class SingularMatrix(BrauerError):
    """LU elimination hit a negligible pivot."""

    def __init__(self, pivot_index: int, pivot_magnitude: float, threshold: float):
        self.pivot_index = pivot_index
        self.pivot_magnitude = pivot_magnitude
        self.threshold = threshold
        super().__init__(
            f"singular matrix: pivot {pivot_index} has magnitude "
            f"{pivot_magnitude:.3e} (threshold {threshold:.3e})"
        )


class ZeroVector(BrauerError):
    """A direction was required but the vector is identically zero."""


class DimensionTooSmall(BrauerError):
    """Operation needs a larger matrix (deflation requires n >= 2)."""


class DimensionTooLarge(BrauerError):
    """Operation is restricted to desk scale (oracle requires n <= 16)."""


class ResidualTooLarge(BrauerError):
    """An eigenpair's residual exceeds the gate for the requested operation."""

    def __init__(self, residual: float, gate: float):
        self.residual = residual
        self.gate = gate
        super().__init__(
            f"eigenpair residual {residual:.3e} exceeds tolerance {gate:.3e}"
        )


class LambdaNotInSpectrum(BrauerError):
    """The eigenvalue to replace is farther than tolerance from every spectrum element."""

    def __init__(self, distance: float, tolerance: float):
        self.distance = distance
        self.tolerance = tolerance
        super().__init__(
            f"nearest spectrum element is {distance:.3e} away "
            f"(tolerance {tolerance:.3e})"
        )


class NotAnEigenvector(BrauerError):
    """Rayleigh residual of the supplied vector exceeds the verification gate."""

    def __init__(self, residual: float, gate: float):
        self.residual = residual
        self.gate = gate
        super().__init__(
            f"Rayleigh residual {residual:.3e} exceeds tolerance {gate:.3e}; "
            "the vector is not an eigenvector at this tolerance"
        )


class NoConvergence(BrauerError):
    """Power iteration failed to reach its residual gate.

    Expected whenever the two largest eigenvalue moduli coincide. ``stage``
    is filled in by the deflation drivers to say where the failure happened.
    """

    def __init__(self, residual: float, iterations: int, stage: int | None = None):
        self.residual = residual
        self.iterations = iterations
        self.stage = stage
        where = "" if stage is None else f" at stage {stage}"
        super().__init__(
            f"power iteration did not converge{where}: residual {residual:.3e} "
            f"after {iterations} iterations"
        )


class ZeroCollision(BrauerError):
    """Annihilation driver cannot tell original near-zero eigenvalues from shifted ones."""

    def __init__(self, stage: int, dominant_modulus: float):
        self.stage = stage
        self.dominant_modulus = dominant_modulus
        super().__init__(
            f"stage {stage}: dominant modulus {dominant_modulus:.3e} is below the "
            "zero threshold with more than one eigenvalue left; original "
            "eigenvalues near 0 are indistinguishable from annihilated ones"
        )


class RootsNoConvergence(BrauerError):
    """Simultaneous root iteration exhausted its sweep budget."""

    def __init__(self, worst_residual: float, sweeps: int):
        self.worst_residual = worst_residual
        self.sweeps = sweeps
        super().__init__(
            f"root finder did not converge: worst residual {worst_residual:.3e} "
            f"after {sweeps} sweeps"
        )


class CardinalityMismatch(BrauerError):
    """Multiset comparison requires equal cardinalities."""


class ParseError(BrauerError):
    """A matrix/vector file or complex literal violates the grammar."""
