"""Exception hierarchy shared by all modules."""


class KirchhoffError(Exception):
    """Base class for every error raised by this package."""


# graph construction and queries
class GraphError(KirchhoffError, ValueError):
    pass


class OutOfRangeVertex(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EdgeExists(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class Disconnected(GraphError):
    pass


class DegenerateOrder(GraphError):
    pass


class EdgeListFormatError(GraphError):
    pass


# spectral
class ConvergenceFailure(KirchhoffError, ArithmeticError):
    pass


class NotSingleAddition(KirchhoffError, ValueError):
    pass


# majorization
class MajorizationError(KirchhoffError, ValueError):
    pass


class LengthMismatch(MajorizationError):
    pass


class NotSorted(MajorizationError):
    pass


class NonPositiveEntry(MajorizationError):
    pass


class Infeasible(MajorizationError):
    pass


class FloorTooLarge(MajorizationError):
    pass


class NotNested(MajorizationError):
    pass


# bounds
class BoundError(KirchhoffError, ValueError):
    pass


class HTooLarge(BoundError):
    pass


class HalfDegreeViolated(BoundError):
    pass


class AlreadyComplete(BoundError):
    pass


class DegenerateSize(BoundError):
    pass


# generators
class GeneratorError(KirchhoffError):
    pass


class RejectionBudgetExhausted(GeneratorError, RuntimeError):
    pass


class BadLatticeParams(GeneratorError, ValueError):
    pass


class BadParams(GeneratorError, ValueError):
    pass


class NotEnoughAbsentPairs(GeneratorError, ValueError):
    pass


# experiments
class ExperimentError(KirchhoffError):
    pass


class GenerationFailure(ExperimentError):
    pass


class IoFailure(ExperimentError, OSError):
    pass


class MixedSeries(ExperimentError, ValueError):
    pass
