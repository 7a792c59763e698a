"""Domain exception types shared across the package."""


class HazardLfdError(Exception):
    """Base class for every error raised by this package."""


# -- geometry ----------------------------------------------------------------

class WrongFrameKind(HazardLfdError):
    """Trajectory is expressed in the wrong coordinate frame for this operation."""


class OffRoad(HazardLfdError):
    """A lateral offset lies outside the drivable surface."""


class MalformedCsv(HazardLfdError):
    """Trajectory CSV could not be parsed; carries the offending row/column."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        super().__init__(message)
        self.row = row
        self.column = column


# -- numerics ----------------------------------------------------------------

class DuplicateAbscissa(HazardLfdError):
    """Two knots share the same abscissa."""


class TooFewKnots(HazardLfdError):
    """A spline fit needs at least two knots."""


class OutOfDomain(HazardLfdError):
    """Spline evaluated outside its knot span (callers clamp explicitly)."""


class EmptyChannel(HazardLfdError):
    """Max-error search over an empty sample channel."""


class EmptySequence(HazardLfdError):
    """DTW input sequence is empty."""


class EmptySide(HazardLfdError):
    """A piecewise combination has no knots on one side of the junction."""


# -- keyframe ----------------------------------------------------------------

class NonMonotoneY(HazardLfdError):
    """Longitudinal positions must strictly increase along a demonstration."""


class TooShort(HazardLfdError):
    """Trajectory has too few frames for key-frame extraction."""


class TooFewDemos(HazardLfdError):
    """Alignment needs at least two demonstrations."""


class EmptyGroup(HazardLfdError):
    """A key-frame cluster group is empty."""


class NoBehaviorDetected(HazardLfdError):
    """No demonstration ever deviates from its lane-keeping baseline."""


class InsufficientDemos(HazardLfdError):
    """Not enough usable demonstrations to train a model."""


class OffRoadDemo(HazardLfdError):
    """Every input demonstration leaves the road; carries the rejected indices."""

    def __init__(self, message: str, indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.indices = tuple(indices)


# -- constraints -------------------------------------------------------------

class NegativeSpeed(HazardLfdError):
    """Speeds must be non-negative."""


class ModelRoadMismatch(HazardLfdError):
    """Scenario model was trained under a different traffic condition."""


class OffRoadEgo(HazardLfdError):
    """Ego lateral position lies outside the road limits."""


class OrderViolation(HazardLfdError):
    """Hazards are not in encounter order."""


class UnsupportedOverlap(HazardLfdError):
    """Hazard layout overlaps more deeply than the combiner supports."""


# -- demogen -----------------------------------------------------------------

class InfeasibleProfile(HazardLfdError):
    """Driver profile cannot be realized on the given road."""


# -- analysis ----------------------------------------------------------------

class EmptyAfterThreshold(HazardLfdError):
    """No frames remain once the pre-trigger section is discarded."""


class DegenerateSample(HazardLfdError):
    """Paired differences have zero variance; the t statistic is undefined."""


class LengthMismatch(HazardLfdError):
    """Paired samples must have equal length."""


class AllZeroDifferences(HazardLfdError):
    """Every paired difference is zero; the signed-rank test is undefined."""


class CrossTrafficComparison(HazardLfdError):
    """Populations recorded under different traffic conditions are not comparable."""


# -- documents ---------------------------------------------------------------

class MalformedDocument(HazardLfdError):
    """A model or envelope document is missing fields or has the wrong kind."""
