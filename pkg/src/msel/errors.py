"""Exception types shared across the package."""


class MselError(Exception):
    """Base class for all errors raised by this package."""


class InvalidNodeError(MselError):
    """A node id is outside the graph's 0..n-1 range."""


class ParameterError(MselError):
    """A parameter value violates its documented range."""


class PreconditionError(MselError):
    """Arguments violate an operation's precondition (e.g. overlapping sets)."""


class CapacityError(MselError):
    """Input exceeds a hard size guard."""


class DataError(MselError):
    """Input data contains invalid values (NaN/Inf, bad ranges)."""


class ParseError(MselError):
    """A text input failed to parse; carries file path and line number."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}:" if line is None else f"{path}:{line}: "
        elif line is not None:
            loc = f"line {line}: "
        super().__init__(f"{loc}{message}")
        self.path = path
        self.line = line


class ScheduleError(MselError):
    """A schedule event failed to apply; carries the step index."""

    def __init__(self, message, step=None):
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(f"{prefix}{message}")
        self.step = step


class UndefinedRatioError(MselError):
    """Ratio requested against an infeasible exact optimum."""
