"""Exception types shared across the package."""


class SpinNetError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(SpinNetError):
    """A vertex label is outside 1..n, or a vertex count is invalid."""


class SelfLoop(SpinNetError):
    """An edge joins a vertex to itself."""


class NotVertexDisjoint(SpinNetError):
    """Edge pairs that must not share vertices do share one."""


class EdgeListError(SpinNetError):
    """An edge-list file or string does not follow the expected format."""


class EigensolverDiverged(SpinNetError):
    """The Jacobi eigensolver did not converge within its sweep limit."""


class TooLarge(SpinNetError):
    """The request exceeds a hard size limit (e.g. full-space dimension)."""


class UnsupportedOrder(SpinNetError):
    """The vertex count does not satisfy a required divisibility condition."""


class TrivialCase(SpinNetError):
    """The vertex count is too small for the requested analysis."""


class BrokenChain(SpinNetError):
    """Routing hops do not form a connected chain."""
