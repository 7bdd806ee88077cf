"""Exception types shared across the package."""


class GuardError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(GuardError):
    pass


class InvalidPolygon(GuardError):
    CATEGORIES = ("NotOrthogonal", "SelfIntersecting", "CollinearVertices", "OddVertexCount", "Hole")

    def __init__(self, category: str, detail: str = "") -> None:
        if category not in self.CATEGORIES:
            raise ValueError(f"unknown category {category}")
        self.category = category
        super().__init__(f"{category}: {detail}" if detail else category)


class PointOutsideDomain(GuardError):
    pass


class TooLarge(GuardError):
    pass


class NotDominating(GuardError):
    pass


class StructureViolation(GuardError):
    """An internal structural invariant failed; indicates a bug upstream."""


class CoverageFailure(GuardError):
    pass


class BoundExceeded(GuardError):
    pass


class UnsupportedParameter(GuardError):
    pass
