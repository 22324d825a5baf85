"""Exception hierarchy shared by all cagekit modules."""


class CageError(Exception):
    """Base class for every error raised by cagekit."""


# graph construction and indexing

class OutOfRangeError(CageError):
    """A vertex id lies outside 0..n-1 of its host graph."""


class SelfLoopError(CageError):
    """An edge joins a vertex to itself."""


class EmptyGraphError(CageError):
    """The operation needs at least one vertex."""


# cycles

class AcyclicGraphError(CageError):
    """The graph contains no cycle."""


class NotACycleOfGraphError(CageError):
    """The vertex sequence is not a cycle of the given graph."""


class NotOnCycleError(CageError):
    """A queried vertex does not lie on the cycle."""


class NotAGCycleError(CageError):
    """The cycle does not have girth length in the given graph."""


class EvenLengthError(CageError):
    """Antipodal pairs are defined only on odd cycles."""


# permutations

class DomainMismatchError(CageError):
    """The permutation domain differs from the graph's vertex set."""


class OverlappingDomainsError(CageError):
    """Permutations passed to compose_disjoint share domain vertices."""


class DiracViolatedError(CageError):
    """Minimum degree below n/2 and the Hamiltonian search stalled."""


class InternalStallError(CageError):
    """The Hamiltonian search stalled although min degree >= n/2 holds.

    This should never happen; it indicates a defect, not a bad input.
    """


class TooShortError(CageError):
    """The cycle or path is too short to admit a special permutation."""


class PreconditionError(CageError):
    """An operation precondition does not hold."""


class UnionSpecError(CageError):
    """A path/cycle union layout violates its side conditions."""


class ConstructionGapError(CageError):
    """No explicit construction applies and the fallback search failed."""


# cage analysis

class EvenGirthError(CageError):
    """Bad pairs are defined only for odd girth."""


class DegreeViolationError(CageError):
    """A bad-pair graph vertex has degree 3 or more."""


class NoWitnessError(CageError):
    """No vertex outside the bad-pair set is available for the swap."""


class DegreeHypothesisError(CageError):
    """The induced subgraph does not meet the degree hypotheses."""


class NotRegularError(CageError):
    """The graph is not k-regular for the requested k."""


class GirthMismatchError(CageError):
    """The graph's computed girth differs from the stated one."""


# serialization and catalog

class Graph6FormatError(CageError):
    """Malformed graph6 text."""


class NotInCatalogError(CageError):
    """No catalog entry exists for the requested (k, g)."""
