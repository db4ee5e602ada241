"""Exception hierarchy shared across the package."""


class LinkError(Exception):
    """Base class for every error raised by linkm3."""


class DiagramError(LinkError, ValueError):
    pass


class ArcMismatch(DiagramError):
    """An arc id is not used exactly once as an in-slot and once as an out-slot."""


class ComponentGap(DiagramError):
    """Component indices are not exactly ``1..m``."""


class SlotComponentMix(DiagramError):
    """The in and out arcs of one strand of a crossing lie on different components."""


class BadComponent(DiagramError):
    pass


class BadCrossing(DiagramError):
    pass


class BadMultiplicity(DiagramError):
    pass


class BadBraid(DiagramError):
    pass


class EmptyDiagram(DiagramError):
    pass


class ParityViolation(LinkError, ArithmeticError):
    """A Conway polynomial has a coefficient that the component count forbids."""


class WrongComponentCount(LinkError, ValueError):
    pass


class ZeroLinking(LinkError, ValueError):
    pass


class NotGood(LinkError, ValueError):
    pass


class BadFigure(LinkError, ValueError):
    pass


class BadFamily(LinkError, ValueError):
    pass


class TooLarge(LinkError, ValueError):
    pass
