"""Exception taxonomy shared across the package."""


class DdsimError(Exception):
    """Base class for all library-specific failures."""


class SingularTransform(DdsimError):
    """Transform matrix fails the conditioning threshold for inversion."""


class ClusterAmbiguity(DdsimError):
    """Eigenvalue clustering admits more than one plausible grouping."""

    def __init__(self, message, groupings=None):
        super().__init__(message)
        self.groupings = groupings if groupings is not None else []


class IllConditionedJordan(DdsimError):
    """Jordan chain construction hit a conditioning threshold.

    Signals that the input sits numerically too close to a boundary
    between Jordan structures; retrying with a different clustering
    tolerance may resolve it.
    """


class DimensionMismatch(DdsimError):
    """Operation requires a different matrix dimension."""


class NotAchievable(DdsimError):
    """Requested dominance target is ruled out by the classification."""

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification


class PreconditionViolated(DdsimError):
    """Structural precondition fails; ``offender`` names the culprit."""

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class NumericallySingular(DdsimError):
    """A linear solve failed the conditioning threshold."""


class SingularInput(DdsimError):
    """Input matrix has an eigenvalue too close to zero."""


class MatrixParseError(DdsimError):
    """Input file could not be parsed into a square real matrix."""
