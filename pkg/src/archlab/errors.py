"""Exception hierarchy shared by every archlab module."""


class ArchlabError(ValueError):
    """Base class for all errors raised on bad input data."""


class MalformedRational(ArchlabError):
    pass


class ZeroDenominator(ArchlabError):
    pass


class ConstraintError(ArchlabError):
    """A record constraint was violated.

    ``constraint`` carries the name of the violated constraint
    (``LeakRange``, ``PosTau``, ``WRange``, ``WId``, ``IdNeuroDiff``, ...)
    and the message always starts with it.
    """

    def __init__(self, constraint, detail):
        self.constraint = constraint
        self.detail = detail
        super().__init__(f"{constraint}: {detail}")


class DuplicateId(ConstraintError):
    def __init__(self, detail):
        super().__init__("IdNeuroDiff", detail)


class IdOutOfRange(ConstraintError):
    def __init__(self, detail):
        super().__init__("IdInfLen", detail)


class RaggedOutputs(ConstraintError):
    def __init__(self, detail):
        super().__init__("TimeNeuro", detail)


class CircuitFileError(ArchlabError):
    """Base class for circuit-file and input-string errors."""


class CircuitSyntaxError(CircuitFileError):
    def __init__(self, msg, lineno=None, colno=None):
        self.lineno = lineno
        self.colno = colno
        where = f" (line {lineno}, column {colno})" if lineno is not None else ""
        super().__init__(f"{msg}{where}")


class SchemaError(CircuitFileError):
    pass


class BadArity(CircuitFileError):
    pass


class BadChar(CircuitFileError):
    pass


class EmptyPattern(ArchlabError):
    pass


class HypothesesNotMet(ArchlabError):
    def __init__(self, prop, hypothesis):
        self.prop = prop
        self.hypothesis = hypothesis
        super().__init__(f"{prop}: hypothesis not met: {hypothesis}")
