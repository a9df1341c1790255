"""Exception hierarchy shared by every module of the package."""


class CisGraphError(Exception):
    """Base class for all errors raised by cisgraphs."""


class InputError(CisGraphError):
    """Malformed or out-of-range input. Maps to CLI exit code 2."""


class BudgetError(CisGraphError):
    """A configured search or enumeration budget ran out. Maps to CLI exit code 3."""


# graph construction
class LoopEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class AsymmetricAdjacency(InputError):
    pass


class EmptyOrder(InputError):
    pass


class NoEdges(InputError):
    pass


class EmptySet(InputError):
    pass


class IsolatedVertex(InputError):
    pass


class AllVerticesIsolated(InputError):
    pass


# graph6 codec
class Graph6Error(InputError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass


# families
class BadParameter(InputError):
    pass


class IdentityInConnectionSet(InputError):
    pass


class NotInverseClosed(InputError):
    pass


# analysis
class EnumerationLimitExceeded(BudgetError):
    pass


class OrderTooLargeForExactColoring(InputError):
    pass


class NotVertexTransitive(InputError):
    pass


class SearchBudgetExceeded(BudgetError):
    pass


class GroupTooLarge(BudgetError):
    pass
