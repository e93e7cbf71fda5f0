"""Exception hierarchy. Every degenerate input maps to one of these names."""


class CevianError(ValueError):
    """Base class for all errors raised by cevian_lab."""


# exact kernel
class IdenticalPoints(CevianError):
    pass


class IdenticalLines(CevianError):
    pass


class InvalidRatio(CevianError):
    pass


class NonPositiveRatio(InvalidRatio):
    pass


class InfinitePoint(CevianError):
    pass


class NotCollinear(CevianError):
    pass


class NotInterior(CevianError):
    pass


# scenes
class DegenerateTriangle(CevianError):
    pass


class InfiniteVertex(CevianError):
    pass


class ZeroDenominator(CevianError):
    pass


# closed forms
class CevaViolation(CevianError):
    """The lambda product is not 1 where a concurrent trio is required."""


class DegenerateG(CevianError):
    """Triangle G1G2G3 collapses to a point (lambda product equals 1)."""


class DegenerateH(CevianError):
    """Triangle H1H2H3 collapses to a point (uvw equals 1)."""


# verifier / explorer
class PreconditionViolated(CevianError):
    pass


class UnknownCheck(CevianError):
    pass
