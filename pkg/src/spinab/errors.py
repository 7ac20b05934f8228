"""Exception types raised by spinab."""


class SpinABError(ValueError):
    """Base class for all spinab errors."""


class ConfigError(SpinABError):
    """Malformed configuration text or unknown key."""


class NonPositiveParameter(SpinABError):
    pass


class BothOrNeitherSpinOrbitKnobs(SpinABError):
    pass


class NonUnitAxis(SpinABError):
    pass


class TooFewSteps(SpinABError):
    pass


class DegenerateField(SpinABError):
    """The effective field vanishes, so its direction is undefined."""


class AntipodalEndpoints(SpinABError):
    """Curve endpoints are antipodal; the closing geodesic is not unique."""


class DegenerateCentroid(SpinABError):
    pass


class OrderTooHigh(SpinABError):
    pass


class DegenerateFit(SpinABError):
    pass


class NonUniformGrid(SpinABError):
    pass
