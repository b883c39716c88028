"""Exception vocabulary shared across the package.

Every failure mode that callers are expected to catch gets its own class so
that tests (and the CLI) can distinguish "your input is malformed" from
"a precondition of this operation does not hold" from "an internal soundness
check tripped".  The latter two matter: precondition violations are the
caller's fault, verification failures would be *our* fault and tests treat
them as hard bugs.
"""


class PancycError(Exception):
    """Base class for all package-specific errors."""


# ---------------------------------------------------------------------------
# graph loading / construction
# ---------------------------------------------------------------------------

class MalformedFile(PancycError):
    """Graph file does not follow the expected line format."""


class NotAPermutation(PancycError):
    """Declared vertex cycle is not a permutation of 0..n-1."""


class HamEdgeMissing(PancycError):
    """An edge required by the declared cycle is absent from the edge list."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(
            f"cycle edge at position {position} missing from edge list"
        )


# ---------------------------------------------------------------------------
# surgery preconditions
# ---------------------------------------------------------------------------

class SameVertex(PancycError):
    """Operation requires two distinct vertices."""


class SharedEndpoint(PancycError):
    """Chords or segments were expected to be endpoint-disjoint."""


class NotTwoRegular(PancycError):
    """Edge multiset produced by a surgery plan is not 2-regular."""


class Disconnected(PancycError):
    """Surgery plan output splits into more than one cycle."""


class ChordMissing(PancycError):
    """A required chord edge is not present in the graph."""


class IsHamEdge(PancycError):
    """A chord argument is actually an edge of the base cycle."""


class NotCrossing(PancycError):
    """Two chords expected to interleave around the cycle do not."""


class NoCrossBetweenPairs(PancycError):
    """No interleaving pair of cross-edges exists between two arc pairs."""


class IncompatibleTriangles(PancycError):
    """Two pattern triangles do not fit either supported joint layout."""


# ---------------------------------------------------------------------------
# arc systems
# ---------------------------------------------------------------------------

class InsufficientMaterial(PancycError):
    """Not enough usable vertices to build the requested arc system."""

    def __init__(self, got: int, system):
        self.got = got
        self.system = system
        super().__init__(f"only {got} arcs could be built")


class NotIndependent(PancycError):
    """Arc system has a closure larger than the independence budget."""


class NotSimple(PancycError):
    """Operation requires a pairwise conflict-free system."""


class CoverMissing(PancycError):
    """No single vertex covers all edges between two arcs."""


class TooSmall(PancycError):
    """A set or system is below the size floor the operation needs."""


class TooLarge(PancycError):
    """A set or system exceeds the size ceiling the operation allows."""


# ---------------------------------------------------------------------------
# expansion analysis
# ---------------------------------------------------------------------------

class NotWithinOneArc(PancycError):
    """Vertex set is not contained in a single arc of the system."""


class NoTightSet(PancycError):
    """Requested deficiency certificate does not exist (vertex absorbable)."""


# ---------------------------------------------------------------------------
# engine / generators
# ---------------------------------------------------------------------------

class KTooSmall(PancycError):
    """Independence parameter too small for the requested construction."""


class BadPartition(PancycError):
    """Requested split of n into cliques is impossible."""


class SpecConflict(PancycError):
    """Two stated requirements cannot hold at once for these inputs."""


class PreconditionViolation(PancycError):
    """Caller violated a documented precondition (generic)."""


class VerificationFailed(PancycError):
    """Internal soundness re-check failed; indicates a bug, not bad input."""
