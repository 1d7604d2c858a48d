"""Exception hierarchy shared by the simulation packages."""


class SpherekinError(Exception):
    """Base class for every error raised by the toolkit"""


class ConfigError(SpherekinError, ValueError):
    """A scenario document failed to load or validate.

    The string form is ``<source>:<line>: <field>: <message>`` with the
    location parts dropped when they are unknown.
    """

    def __init__(self, message, field=None, line=None, source=None):
        super().__init__(message)
        self.message = message
        self.field = field
        self.line = line
        self.source = source

    def __str__(self):
        location = ':'.join(str(part) for part in (self.source, self.line) if part is not None)
        parts = [part for part in (location, self.field) if part]
        return ': '.join(parts + [self.message])


class ClassRateError(SpherekinError, ValueError):
    """An actuation rate the robot class cannot produce is nonzero"""


class RollingContactError(SpherekinError, ValueError):
    """A local velocity has a component along the contact normal"""


class FrameConsistencyError(SpherekinError, RuntimeError):
    """Two routes to the same frame quantity disagree"""


class SimulationError(SpherekinError, RuntimeError):
    """A run could not continue; ``t`` is the time of the failing step"""

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t

    def __str__(self):
        if self.t is None:
            return super().__str__()
        return f"t={self.t:.6g}: {super().__str__()}"
