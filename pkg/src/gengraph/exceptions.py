"""Exception hierarchy shared by the library and the command line."""


class GenGraphError(Exception):
    """Base class for all errors raised by :mod:`gengraph`."""


class ParseError(GenGraphError, ValueError):
    """Malformed group spec, Cayley table, generator file or graph file.

    ``line`` is the 1-based line number of the offending input line when
    the error comes from a file.
    """

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where = f"{source}:" if line is None else f"{source}:{line}:"
        elif line is not None:
            where = f"line {line}:"
        super().__init__(f"{where} {message}" if where else message)


class CapExceededError(GenGraphError):
    """A size cap (materialization, lattice, ...) would be exceeded."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} too large: {size} exceeds cap {cap}")


class LatticeTooLargeError(CapExceededError):
    def __init__(self, size, cap, what="lattice"):
        super().__init__(what, size, cap)


class NotNormalError(GenGraphError, ValueError):
    """Raised when a quotient or lift is requested by a non-normal subgroup."""


class InvalidGroupError(GenGraphError, ValueError):
    """Table or action data does not satisfy the group axioms."""


class InvalidCertificateError(GenGraphError, ValueError):
    """A certificate given as *input* (e.g. a path to lift) does not verify."""
