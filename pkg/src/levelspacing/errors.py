"""Exception types shared across the library."""


class LevelSpacingError(Exception):
    """Base class for all library errors."""


class NonUniqueCoefficient(LevelSpacingError):
    """The series recurrence admits a free parameter at some order.

    The boundary data is supposed to pin every coefficient; a free slot
    means the seed is too short to select a unique solution branch.
    """

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"free coefficient at order {order}")


class InconsistentSeed(LevelSpacingError):
    """No coefficient choice cancels some order of the ODE residual.

    Signals a transcription error in the catalog data (wrong seed term
    or wrong ODE reading).
    """

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"residual cannot be cancelled at order {order}")


class OutOfTrustRadius(LevelSpacingError):
    """Series evaluated beyond the radius where truncation is controlled."""


class BranchAmbiguity(LevelSpacingError):
    """F(s, sigma, sigma') < 0: the square-root branch has left the real manifold."""


class StiffnessFailure(LevelSpacingError):
    """Adaptive integration step size underflowed."""


class DegenerateU(LevelSpacingError):
    """Painleve V variable hit a pole of the equation (u in {0, 1}) or sigma = 0."""


class NegativeIntegrand(LevelSpacingError):
    """An integrand required to be nonnegative went negative (trajectory error)."""


class RangeExceeded(LevelSpacingError):
    """Requested spacing lies beyond the range covered by the trajectories."""


class EigensolverNoConvergence(LevelSpacingError):
    """Tridiagonal eigensolver exceeded its iteration cap."""


class WindowTooSmall(LevelSpacingError):
    """Bulk window contains fewer than two eigenvalues."""


class InsufficientData(LevelSpacingError):
    """Not enough spacings for a meaningful empirical comparison."""
