"""Arc-neighborhood expansion analysis.

For a vertex set X inside one arc, d(X) counts the *other* arcs containing a
neighbor of X.  X is *expanding* at demand t when every subset Y has
d(Y) >= t*|Y| — equivalently (defect Hall), when each vertex of X can be
matched to t private neighbor arcs.  All computations here reduce to that
bipartite matching picture: vertices demand t arc slots, arcs have capacity
one, and augmenting paths decide feasibility; alternating reachability from a
deficient vertex extracts the tight set that certifies non-expansion.

At demand 1 the expanding subsets of an arc are the matchable sets of a
transversal matroid, so every inclusion-maximal one has maximum size and a
greedy sweep in arc order returns a canonical maximum.  At higher demands
that exchange property can fail (a vertex with few private arcs may be
maximal on its own); the sweep still returns a canonical inclusion-maximal
set, which is what the downstream certificates need — tight sets only exist
against maximal sets, and assignments are re-verified explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arc_system import ArcSystem
from .errors import (
    NoTightSet,
    NotWithinOneArc,
    PreconditionViolation,
    VerificationFailed,
)


def _arc_index(sys: ArcSystem, arc) -> int:
    if isinstance(arc, int):
        if not 0 <= arc < len(sys.arcs):
            raise PreconditionViolation(f"arc index {arc} out of range")
        return arc
    try:
        return sys.arcs.index(arc)
    except ValueError:
        raise PreconditionViolation("arc does not belong to this system") from None


def _owner_index(sys: ArcSystem, xs) -> int | None:
    """Index of the single arc containing all of xs (None for empty xs)."""
    if not xs:
        return None
    vmap = sys.vertex_arc_index()
    owners = {vmap.get(x) for x in xs}
    if len(owners) != 1 or None in owners:
        raise NotWithinOneArc(f"vertices {sorted(xs)} do not sit inside one arc")
    return owners.pop()


def neighbor_arcs(sys: ArcSystem, v: int, own: int) -> list[int]:
    """Sorted indices of arcs (other than ``own``) holding a neighbor of v."""
    vmap = sys.vertex_arc_index()
    found = {vmap[u] for u in sys.g.adj[v] if u in vmap}
    found.discard(own)
    return sorted(found)


def arc_neighborhood(sys: ArcSystem, xs) -> frozenset[int]:
    """N(X): indices of arcs other than X's own arc that see a neighbor of X."""
    own = _owner_index(sys, xs)
    if own is None:
        return frozenset()
    out: set[int] = set()
    for x in xs:
        out.update(neighbor_arcs(sys, x, own))
    return frozenset(out)


def arc_degree(sys: ArcSystem, xs) -> int:
    return len(arc_neighborhood(sys, xs))


def check_submodular(sys: ArcSystem, a, b) -> bool:
    """d(A) + d(B) >= d(A|B) + d(A&B); both sets must share an arc."""
    sa, sb = set(a), set(b)
    _owner_index(sys, sa | sb)  # validates the one-arc precondition
    return (
        arc_degree(sys, sa) + arc_degree(sys, sb)
        >= arc_degree(sys, sa | sb) + arc_degree(sys, sa & sb)
    )


# ---------------------------------------------------------------------------
# t-demand matching (Kuhn augmenting paths over vertex copies)
# ---------------------------------------------------------------------------

class _Matcher:
    """Bipartite matching where each left vertex wants t distinct arcs."""

    def __init__(self, nbrs: dict[int, list[int]], t: int):
        self.nbrs = nbrs
        self.t = t
        self.owner: dict[int, int] = {}      # arc index -> left vertex
        self.held: dict[int, list[int]] = {}  # left vertex -> arcs it holds

    def _augment(self, v: int, visited: set[int]) -> bool:
        for a in self.nbrs[v]:
            if a in visited:
                continue
            visited.add(a)
            w = self.owner.get(a)
            if w is None or self._augment(w, visited):
                if w is not None:
                    self.held[w].remove(a)
                self.owner[a] = v
                self.held.setdefault(v, []).append(a)
                return True
        return False

    def saturate(self, vs) -> bool:
        """Give every vertex in vs its t slots; False on the first failure."""
        for v in vs:
            self.held.setdefault(v, [])
            while len(self.held[v]) < self.t:
                if not self._augment(v, set()):
                    return False
        return True

    def reachable_from(self, v: int) -> set[int]:
        """Left vertices reachable from v by alternating paths (v included)."""
        seen_left = {v}
        seen_arc: set[int] = set()
        stack = [v]
        while stack:
            u = stack.pop()
            for a in self.nbrs[u]:
                if a in seen_arc:
                    continue
                seen_arc.add(a)
                w = self.owner.get(a)
                if w is not None and w not in seen_left:
                    seen_left.add(w)
                    stack.append(w)
        return seen_left


def _neighbor_map(sys: ArcSystem, own: int) -> dict[int, list[int]]:
    return {v: neighbor_arcs(sys, v, own) for v in sys.arcs[own].vertices}


def is_expanding(sys: ArcSystem, xs, t: int) -> bool:
    """Every subset Y of xs has d(Y) >= t*|Y| (via matching feasibility)."""
    if t < 1:
        raise PreconditionViolation(f"need demand t >= 1, got {t}")
    xs = set(xs)
    own = _owner_index(sys, xs)
    if own is None:
        return True
    nbrs = {v: neighbor_arcs(sys, v, own) for v in xs}
    m = _Matcher(nbrs, t)
    return m.saturate(sorted(xs, key=lambda v: sys.g.pos[v]))


def maximal_expanding_subset(sys: ArcSystem, arc, t: int) -> frozenset[int]:
    """Greedy inclusion-maximal expanding subset of an arc, swept in arc order.

    The expanding family is downward closed, so a vertex rejected once never
    becomes addable and one sweep suffices; the result is canonical for the
    fixed order.  At t = 1 it is moreover a maximum (transversal matroid).
    """
    if t < 1:
        raise PreconditionViolation(f"need demand t >= 1, got {t}")
    idx = _arc_index(sys, arc)
    nbrs = _neighbor_map(sys, idx)
    chosen: list[int] = []
    for v in sys.arcs[idx].vertices:
        trial = chosen + [v]
        m = _Matcher({u: nbrs[u] for u in trial}, t)
        if m.saturate(trial):
            chosen.append(v)
    return frozenset(chosen)


def find_tight_set(sys: ArcSystem, xs, v: int, t: int) -> frozenset[int]:
    """A subset T of xs with |N(T + v)| < (|T|+1)*t, certifying v unabsorbable.

    Exists whenever xs is a maximal expanding set and v is outside it; raises
    NoTightSet when v could in fact be added (i.e. xs was not maximal).
    """
    if t < 1:
        raise PreconditionViolation(f"need demand t >= 1, got {t}")
    xs = set(xs)
    if v in xs:
        raise PreconditionViolation(f"vertex {v} already belongs to the set")
    own = _owner_index(sys, xs | {v})
    nbrs = {u: neighbor_arcs(sys, u, own) for u in xs | {v}}
    m = _Matcher(nbrs, t)
    order = sorted(xs, key=lambda u: sys.g.pos[u])
    if not m.saturate(order):
        raise PreconditionViolation("the given set is not expanding")
    m.held.setdefault(v, [])
    while len(m.held[v]) < t:
        if not m._augment(v, set()):
            tight = frozenset(m.reachable_from(v) - {v})
            if not arc_degree(sys, tight | {v}) < (len(tight) + 1) * t:
                raise VerificationFailed("extracted tight set fails its inequality")
            return tight
    raise NoTightSet(f"vertex {v} extends the expanding set; no tight set exists")


@dataclass
class GoodResult:
    """Verdict for one arc: expanding core, and an assignment when good.

    ``assignment`` maps each vertex of the expanding core to the t arc
    indices privately reserved for it (pairwise disjoint across vertices).
    """

    good: bool
    expanding: frozenset[int]
    assignment: dict[int, frozenset[int]] | None = None
    t: int = 1

    def assigned_count(self) -> int:
        return len(self.assignment) if self.assignment else 0


def classify_good(sys: ArcSystem, arc, t: int) -> GoodResult:
    """Good iff the maximal expanding subset covers at least half the arc.

    For a good arc the saturating matching doubles as the explicit
    assignment of t private neighbor arcs per core vertex.
    """
    idx = _arc_index(sys, arc)
    a = sys.arcs[idx]
    xs = maximal_expanding_subset(sys, idx, t)
    if 2 * len(xs) < a.size:
        return GoodResult(good=False, expanding=xs, assignment=None, t=t)
    order = sorted(xs, key=lambda u: sys.g.pos[u])
    nbrs = {u: neighbor_arcs(sys, u, idx) for u in xs}
    m = _Matcher(nbrs, t)
    if not m.saturate(order):
        raise VerificationFailed("expanding set failed to saturate")
    assignment = {u: frozenset(m.held[u]) for u in order}
    claimed: set[int] = set()
    for u, arcs in assignment.items():
        if len(arcs) != t or claimed & arcs:
            raise VerificationFailed("assignment slots overlap or fall short")
        claimed |= arcs
    return GoodResult(good=True, expanding=xs, assignment=assignment, t=t)
