"""Exception hierarchy; every domain failure is a :class:`DomainError`."""


class DomainError(ValueError):
    """A precondition of a representation-theoretic operation is violated."""


class DimensionError(DomainError):
    """Requested dimension exceeds the configured bound."""


class SingularGammaError(DomainError):
    """A central element has no inverse square root on the requested irrep."""


class NoSolutionError(DomainError):
    """No coupled highest-weight vector exists for the requested labels."""


class NotATensorError(DomainError):
    """Matrix elements do not factor as reduced element times CG coefficient."""


class UndeterminedError(DomainError):
    """A reduced matrix element cannot be solved for (all CG factors vanish)."""


class TruncationError(DomainError):
    """A Fock-space operator left the truncated space."""
