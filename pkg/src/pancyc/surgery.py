"""Cycle surgery: reroute the Hamilton cycle through chords.

All constructions share one primitive, :func:`apply_surgery`: delete the
shorter H-path between each segment's endpoints (dropping the interior
vertices), insert the requested chords, then *verify* that what survives is a
single cycle.  The specialized surgeries (chord shortcut, the two M2
reroutes, and the semi-triangle reroutes) are thin wrappers that build a plan
and hand it to the primitive, so their soundness is checked ex post rather
than argued per case.

Surgery never looks at the problematic-vertex profile; whether a produced
cycle is "contradicting" is a separate predicate, validate_contradicting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ChordMissing,
    Disconnected,
    IncompatibleTriangles,
    IsHamEdge,
    NoCrossBetweenPairs,
    NotCrossing,
    NotTwoRegular,
    PreconditionViolation,
    SameVertex,
    SharedEndpoint,
    VerificationFailed,
)
from .graph_core import (
    Chord,
    CycledGraph,
    ProblemProfile,
    chords_cross,
    cyclic_distance,
    norm_edge,
)


@dataclass(frozen=True)
class SurgeryPlan:
    """A reroute recipe: H-path segments to delete, chords to insert.

    Each segment is an endpoint pair; the *shorter* H-path between them is
    what gets removed (interior vertices leave the graph).  Endpoints must be
    pairwise distinct among segments, and likewise among chords; chords
    normally reuse segment endpoints — that is how the rerouted cycle closes.
    """

    delete_segments: tuple[tuple[int, int], ...]
    add_chords: tuple[Chord, ...]


@dataclass(frozen=True)
class CycleWitness:
    """A concrete cycle, carried around with the set it certifies to contain."""

    cycle: tuple[int, ...]
    length: int
    contains: frozenset[int]

    def json_dict(self, kind: str = "plain") -> dict:
        return {"cycle": list(self.cycle), "length": self.length, "kind": kind}


def _check_plan(g: CycledGraph, plan: SurgeryPlan) -> None:
    seg_pos = []
    for u, v in plan.delete_segments:
        if u == v:
            raise SameVertex(f"segment ({u},{v}) needs distinct endpoints")
        seg_pos.extend((g.pos[u], g.pos[v]))
    if len(set(seg_pos)) != len(seg_pos):
        raise SharedEndpoint("segment endpoints share a position")

    ch_pos = []
    for u, v in plan.add_chords:
        if u == v:
            raise SameVertex(f"chord ({u},{v}) needs distinct endpoints")
        if not g.has_edge(u, v):
            raise ChordMissing(f"chord ({u},{v}) is not an edge of the graph")
        ch_pos.extend((g.pos[u], g.pos[v]))
    if len(set(ch_pos)) != len(ch_pos):
        raise SharedEndpoint("chord endpoints share a position")


def apply_surgery(g: CycledGraph, plan: SurgeryPlan) -> CycleWitness:
    """Execute a plan and return the single surviving cycle.

    Raises NotTwoRegular / Disconnected when the plan does not reroute into
    one cycle; the returned witness always passes its own invariants (the
    walk is re-checked against g before returning).
    """
    _check_plan(g, plan)

    removed = set()
    interior: set[int] = set()
    for u, v in plan.delete_segments:
        _, path = cyclic_distance(g, u, v)
        for i in range(len(path) - 1):
            removed.add(norm_edge(path[i], path[i + 1]))
        interior.update(path[1:-1])

    plan_ends = {w for seg in plan.delete_segments for w in seg}
    plan_ends |= {w for ch in plan.add_chords for w in ch}
    if interior & plan_ends:
        raise NotTwoRegular("a deleted path interior swallows a plan endpoint")

    survivors = set(range(g.n)) - interior
    new_edges = set(g.ham_edges()) - removed
    for ch in plan.add_chords:
        e = norm_edge(*ch)
        if e in new_edges:
            raise NotTwoRegular(f"chord {e} duplicates a surviving cycle edge")
        new_edges.add(e)

    nbrs: dict[int, list[int]] = {v: [] for v in survivors}
    for u, v in new_edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    off = [v for v in survivors if len(nbrs[v]) != 2]
    if off:
        raise NotTwoRegular(f"vertices {sorted(off)[:6]} do not have degree 2")

    start = min(survivors)
    prev, cur = start, min(nbrs[start])
    cycle = [start]
    while cur != start:
        cycle.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cycle) != len(survivors):
        raise Disconnected(
            f"reroute split into multiple cycles ({len(cycle)} of {len(survivors)} vertices reached)"
        )

    if len(cycle) != g.n - len(interior):
        raise VerificationFailed("surgery length accounting is off")
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not g.has_edge(v, w):
            raise VerificationFailed(f"rerouted cycle uses non-edge ({v},{w})")
    return CycleWitness(tuple(cycle), len(cycle), frozenset(cycle))


# ---------------------------------------------------------------------------
# specialized surgeries
# ---------------------------------------------------------------------------

def chord_shortcut(
    g: CycledGraph, e: Chord, prof: ProblemProfile | None = None
) -> CycleWitness:
    """Cycle = longer H-path between e's endpoints plus the chord e.

    ``prof`` is accepted for call-site symmetry but never consulted; run
    validate_contradicting on the result to check the profile conditions.
    """
    u, v = e
    if u == v:
        raise SameVertex("chord needs two distinct endpoints")
    if not g.has_edge(u, v):
        raise ChordMissing(f"({u},{v}) is not an edge")
    if g.is_ham_edge(u, v):
        raise IsHamEdge(f"({u},{v}) lies on the base cycle")
    plan = SurgeryPlan(delete_segments=((u, v),), add_chords=((u, v),))
    return apply_surgery(g, plan)


def crossing_m2_surgery(
    g: CycledGraph, x1: int, x2: int, y1: int, y2: int
) -> CycleWitness:
    """Reroute through two crossing chords {x1,y1}, {x2,y2}.

    x1,x2 sit in one arc and y1,y2 in another; the two shorter H-paths
    (x1..x2) and (y1..y2) are deleted.
    """
    if x1 == x2 or y1 == y2:
        raise PreconditionViolation("need two distinct vertices per arc side")
    c1, c2 = (x1, y1), (x2, y2)
    for u, v in (c1, c2):
        if not g.has_edge(u, v):
            raise ChordMissing(f"({u},{v}) is not an edge")
    if not chords_cross(g, c1, c2):
        raise NotCrossing(f"chords {c1} and {c2} do not interleave")
    plan = SurgeryPlan(delete_segments=((x1, x2), (y1, y2)), add_chords=(c1, c2))
    return apply_surgery(g, plan)


def double_m2_surgery(g: CycledGraph, m2a, m2b) -> CycleWitness:
    """Reroute through two mutually interleaving parallel chord pairs.

    Each argument is (x1, x2, y1, y2) encoding the chords {x1,y1}, {x2,y2} of
    one M2, parallel within its own arc pair.  Some chord of the first must
    cross some chord of the second.
    """
    x1, x2, y1, y2 = m2a
    x3, x4, y3, y4 = m2b
    all_ends = (x1, x2, y1, y2, x3, x4, y3, y4)
    if len(set(all_ends)) != 8:
        raise PreconditionViolation("the two chord pairs share vertices")
    ca = ((x1, y1), (x2, y2))
    cb = ((x3, y3), (x4, y4))
    for u, v in ca + cb:
        if not g.has_edge(u, v):
            raise ChordMissing(f"({u},{v}) is not an edge")
    if chords_cross(g, *ca):
        raise PreconditionViolation("first chord pair crosses internally")
    if chords_cross(g, *cb):
        raise PreconditionViolation("second chord pair crosses internally")
    if not any(chords_cross(g, p, q) for p in ca for q in cb):
        raise NoCrossBetweenPairs("no chord of the first pair crosses the second")
    plan = SurgeryPlan(
        delete_segments=((x1, x2), (y1, y2), (x3, x4), (y3, y4)),
        add_chords=ca + cb,
    )
    return apply_surgery(g, plan)


# ---------------------------------------------------------------------------
# semi-triangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiTriangle:
    """Three arcs with six designated vertices and three witness edges.

    ``arcs`` holds the (A, B, C) indices within the host arc system, in cycle
    order starting from the anchor A.  Each vertex pair is in arc order
    (first coordinate comes earlier on the arc).  Patterns:

      type 1:  {a1,c1}, {a2,b1}, {b2,c2}   (A and B not consecutive arcs)
      type 2:  {a1,b1}, {a2,c1}, {b2,c2}
    """

    arcs: tuple[int, int, int]
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]
    type: int
    edges: tuple[Chord, Chord, Chord]


def expected_triangle_edges(
    a: tuple[int, int], b: tuple[int, int], c: tuple[int, int], type_: int
) -> tuple[Chord, Chord, Chord]:
    """The three witness edges the given type demands."""
    a1, a2 = a
    b1, b2 = b
    c1, c2 = c
    if type_ == 1:
        return ((a1, c1), (a2, b1), (b2, c2))
    if type_ == 2:
        return ((a1, b1), (a2, c1), (b2, c2))
    raise PreconditionViolation(f"semi-triangle type must be 1 or 2, got {type_}")


def check_semi_triangle(g: CycledGraph, t: SemiTriangle) -> None:
    """Re-verify a triangle's witness edges against the graph."""
    want = expected_triangle_edges(t.a, t.b, t.c, t.type)
    if tuple(t.edges) != want:
        raise VerificationFailed(f"triangle edges {t.edges} do not match pattern {want}")
    for u, v in t.edges:
        if not g.has_edge(u, v):
            raise VerificationFailed(f"triangle edge ({u},{v}) missing from graph")


def semi_triangle_surgery(g: CycledGraph, t: SemiTriangle) -> CycleWitness:
    """Reroute along a Type 2 semi-triangle (three segments, three chords)."""
    if t.type != 2:
        raise PreconditionViolation("surgery applies to Type 2 semi-triangles only")
    check_semi_triangle(g, t)
    plan = SurgeryPlan(
        delete_segments=(t.a, t.b, t.c),
        add_chords=t.edges,
    )
    return apply_surgery(g, plan)


def _between(g: CycledGraph, lo: int, hi: int, w: int) -> bool:
    """Is w strictly inside the forward interval lo -> hi?"""
    return 0 < g.forward_gap(lo, w) < g.forward_gap(lo, hi)


def double_type1_surgery(
    g: CycledGraph, t1: SemiTriangle, t2: SemiTriangle, case: str
) -> CycleWitness:
    """Joint reroute of two Type 1 semi-triangles.

    t2 is anchored on the arc consecutively after t1's anchor, with its other
    two arcs lying between t1's second and third arcs (case "B") or between
    its third arc and its anchor (case "C").  Region membership is checked
    here at the vertex level; the caller guarantees the arc-level layout.
    """
    if t1.type != 1 or t2.type != 1:
        raise PreconditionViolation("both semi-triangles must be Type 1")
    if case not in ("B", "C"):
        raise PreconditionViolation(f"case must be 'B' or 'C', got {case!r}")
    check_semi_triangle(g, t1)
    check_semi_triangle(g, t2)

    # t2's anchor pair sits between t1's anchor and its second arc
    for w in t2.a:
        if not _between(g, t1.a[1], t1.b[0], w):
            raise IncompatibleTriangles(
                f"second anchor vertex {w} not between first anchor and its B arc"
            )
    if case == "B":
        lo, hi = t1.b[1], t1.c[0]
    else:
        lo, hi = t1.c[1], t1.a[0]
    for w in t2.b + t2.c:
        if not _between(g, lo, hi, w):
            raise IncompatibleTriangles(
                f"vertex {w} of the second triangle is outside region {case}"
            )

    plan = SurgeryPlan(
        delete_segments=(t1.a, t1.b, t1.c, t2.a, t2.b, t2.c),
        add_chords=t1.edges + t2.edges,
    )
    return apply_surgery(g, plan)


# ---------------------------------------------------------------------------
# the contradicting-cycle predicate
# ---------------------------------------------------------------------------

def validate_contradicting(
    g: CycledGraph, prof: ProblemProfile, w: CycleWitness
) -> bool:
    """True iff n-k <= length <= n-1 and the cycle covers all problematic vertices."""
    if not (g.n - prof.k <= w.length <= g.n - 1):
        return False
    return prof.problematic <= set(w.cycle)
