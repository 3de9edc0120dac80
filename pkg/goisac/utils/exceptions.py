from typing import Optional


class GoisacError(Exception):
    pass


class SingularGeometry(GoisacError, ValueError):
    """A UE position coincides with an AP centre"""


class DerivativeSingularity(GoisacError, ValueError):
    """Channel gradient w.r.t. large-scale fading is undefined for beta = 0"""


class LocalizationUnidentifiable(GoisacError):
    """Fisher information is singular or too ill-conditioned to invert"""


class UndeliverableDemand(GoisacError):
    """Achievable rate is zero, so no number of REs delivers the payload"""


class CapacityTooLarge(GoisacError, ValueError):
    pass


class ConfigError(GoisacError, ValueError):
    def __init__(self, field: str, message: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if message else field)
