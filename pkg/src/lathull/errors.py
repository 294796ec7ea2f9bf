"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    """Base class for all toolkit errors."""


class InputError(LatticeError, ValueError):
    """Malformed structure data: duplicate/unknown labels, bad tables, syntax."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleError(InputError):
    pass


class NotALatticeError(InputError):
    pass


class CapExceededError(InputError):
    def __init__(self, size, cap, what="structure"):
        self.size = size
        self.cap = cap
        super().__init__(
            f"{what} has {size} elements, above the cap of {cap} "
            f"(raise --max-subset-bits)"
        )


class NotHeytingError(LatticeError):
    pass


class InvalidMapError(LatticeError):
    pass


class AlarmError(LatticeError):
    """Two computations that must agree did not: an implementation defect."""
