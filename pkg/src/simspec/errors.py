"""Exception hierarchy shared by all simspec modules."""


class SimspecError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class EmptyInput(SimspecError):
    pass


class BadVertex(SimspecError):
    pass


class NotASimplex(SimspecError):
    pass


class NotOneDimensional(SimspecError):
    pass


class ShapeError(SimspecError):
    pass


class Singular(SimspecError):
    pass


class NotSymmetric(SimspecError):
    pass


class NeedsRefinementContext(SimspecError):
    """An operation needs the origin metadata carried by a refined complex."""


class NeedsRefinement(NeedsRefinementContext):
    pass


class YNotDefined(SimspecError):
    pass


class NotKirchhoff(SimspecError):
    pass


class NotOneDimHodge(SimspecError):
    pass


class BadParameter(SimspecError):
    pass


class InputFormatError(SimspecError):
    """Malformed complex or matrix file; message carries line/position."""
