"""Exception hierarchy.  Every error raised on bad input derives from
``SurfresError``; the CLI maps these to exit code 1."""


class SurfresError(Exception):
    pass


class PolyParseError(SurfresError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class NotWeierstrassError(SurfresError, ValueError):
    pass


class NonDivisibleError(SurfresError, ValueError):
    def __init__(self, term):
        super().__init__(f"term with exponent {term} is not divisible")
        self.term = term


class ZeroPolynomialError(SurfresError, ValueError):
    pass


class EmptyPolygonError(SurfresError, ValueError):
    pass


class ForbiddenDirectionError(SurfresError, ValueError):
    pass


class NotPermissibleError(SurfresError, ValueError):
    pass


class MissingDirectionError(SurfresError, ValueError):
    pass


class PreconditionError(SurfresError, ValueError):
    """A precondition on the surface failed; ``code`` names which one
    (``NOT_WT``, ``NOT_PLANE_CONE``, ``PLANE_CONE``, ``NOT_GWT``,
    ``NOT_QUADRANT``, ``NOT_GWT_QUADRANT``, ``NOT_PREPARED``)."""

    def __init__(self, code, message=""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


class StepLimitExceeded(SurfresError):
    """Raised when a branch of the resolution tree runs past ``max_steps``.

    ``prefix`` holds the step kinds of the offending branch.
    """

    def __init__(self, max_steps, prefix):
        super().__init__(f"branch exceeded {max_steps} steps")
        self.max_steps = max_steps
        self.prefix = tuple(prefix)
