"""Arc systems: families of spread-out vertex sets with disjoint closures.

An *arc* is a set of pairwise non-consecutive vertices; its *closure* is the
minimal circular position interval containing it.  An *arc system* keeps the
closures pairwise disjoint and clear of problematic vertices.  The system is
*independent* when every closure fits inside the independence budget k, and
*simple* when additionally every arc pair is M2-free (all edges between the
pair share a vertex).

This module builds systems greedily from the problematic-free stretches of
the base cycle, detects M2 violations, and refines an independent system into
a simple one — either by firing a reroute surgery (which ends the whole run
with a contradicting cycle) or by coloring the conflict graph and keeping the
largest color class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InsufficientMaterial,
    NotIndependent,
    PreconditionViolation,
    VerificationFailed,
)
from .graph_core import Chord, CycledGraph, ProblemProfile, chords_cross
from .surgery import (
    CycleWitness,
    crossing_m2_surgery,
    double_m2_surgery,
    validate_contradicting,
)


@dataclass(frozen=True)
class Arc:
    """Vertices in closure order plus the closure position interval.

    ``closure_span`` = (first position, last position) walking forward;
    ``closure_size`` = number of positions covered.  The interval may wrap
    past position 0.
    """

    vertices: tuple[int, ...]
    closure_span: tuple[int, int]
    closure_size: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]


def make_arc(g: CycledGraph, vertices) -> Arc:
    """Build an arc from a vertex collection, computing the minimal closure.

    The closure is the complement of the largest gap between cyclically
    consecutive member positions; gap ties resolve to the interval starting
    at the smallest position.  Raises PreconditionViolation if two members
    are adjacent on the base cycle.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise PreconditionViolation("an arc needs at least one vertex")
    n = g.n
    ps = sorted(g.pos[v] for v in vs)
    if len(ps) == 1:
        start = ps[0]
        order = (g.at(start),)
        return Arc(vertices=order, closure_span=(start, start), closure_size=1)

    # largest gap between consecutive member positions (cyclically); the
    # closure starts right after that gap
    best_gap, best_idx = -1, 0
    for i, p in enumerate(ps):
        q = ps[(i + 1) % len(ps)]
        gap = (q - p) % n
        if gap > best_gap or (gap == best_gap and q < ps[(best_idx + 1) % len(ps)]):
            best_gap, best_idx = gap, i
    start = ps[(best_idx + 1) % len(ps)]
    end = ps[best_idx]
    size = (end - start) % n + 1

    member_pos = set(ps)
    order = []
    for i in range(size):
        p = (start + i) % n
        if p in member_pos:
            order.append(g.at(p))
    for i in range(len(order) - 1):
        if g.forward_gap(order[i], order[i + 1]) == 1:
            raise PreconditionViolation(
                f"arc vertices {order[i]},{order[i + 1]} are consecutive on the cycle"
            )
    return Arc(vertices=tuple(order), closure_span=(start, end), closure_size=size)


def closure_positions(g: CycledGraph, arc: Arc) -> list[int]:
    start = arc.closure_span[0]
    return [(start + i) % g.n for i in range(arc.closure_size)]


def closure_vertices(g: CycledGraph, arc: Arc) -> list[int]:
    return [g.at(p) for p in closure_positions(g, arc)]


@dataclass(frozen=True)
class ArcSystem:
    """Arcs sorted by closure start, with context and quality flags."""

    g: CycledGraph
    prof: ProblemProfile
    arcs: tuple[Arc, ...]
    independent: bool
    simple: bool

    @property
    def size(self) -> int:
        return len(self.arcs)

    @property
    def length(self) -> int:
        return min(a.size for a in self.arcs) if self.arcs else 0

    def vertex_arc_index(self) -> dict[int, int]:
        return {v: i for i, a in enumerate(self.arcs) for v in a.vertices}

    def sub(self, indices, simple: bool | None = None) -> "ArcSystem":
        """Subsystem on the given arc indices (revalidated)."""
        picked = [self.arcs[i] for i in sorted(set(indices))]
        return make_system(
            self.g,
            self.prof,
            picked,
            simple=self.simple if simple is None else simple,
        )

    def replace_arcs(self, arcs, simple: bool | None = None) -> "ArcSystem":
        return make_system(
            self.g,
            self.prof,
            arcs,
            simple=self.simple if simple is None else simple,
        )

    def json_dict(self) -> dict:
        return {
            "arcs": [list(a.vertices) for a in self.arcs],
            "independent": self.independent,
            "simple": self.simple,
        }


def make_system(
    g: CycledGraph,
    prof: ProblemProfile,
    arcs,
    simple: bool = False,
) -> ArcSystem:
    """Assemble and validate an arc system from Arc objects or vertex lists."""
    built = [a if isinstance(a, Arc) else make_arc(g, a) for a in arcs]
    built.sort(key=lambda a: a.closure_span[0])

    seen: set[int] = set()
    for a in built:
        ps = set(closure_positions(g, a))
        if ps & seen:
            raise PreconditionViolation("arc closures overlap")
        seen |= ps
        for v in closure_vertices(g, a):
            if v in prof.problematic:
                raise PreconditionViolation(
                    f"closure of arc at {a.closure_span} contains problematic vertex {v}"
                )
    independent = all(a.closure_size <= prof.k for a in built)
    return ArcSystem(
        g=g, prof=prof, arcs=tuple(built), independent=independent, simple=simple
    )


# ---------------------------------------------------------------------------
# greedy construction from problematic-free stretches
# ---------------------------------------------------------------------------

def _clear_runs(g: CycledGraph, prof: ProblemProfile) -> list[list[int]]:
    """Maximal stretches of positions free of problematic vertices.

    Runs that meet across position 0 are merged (the wrapped run keeps its
    true start); runs come back ordered by start position.
    """
    n = g.n
    bad = [g.at(p) in prof.problematic for p in range(n)]
    if not any(bad):
        return [list(range(n))]
    runs = []
    cur: list[int] = []
    for p in range(n):
        if bad[p]:
            if cur:
                runs.append(cur)
                cur = []
        else:
            cur.append(p)
    if cur:
        runs.append(cur)
    if len(runs) >= 2 and runs[0][0] == 0 and runs[-1][-1] == n - 1 and not bad[0] and not bad[n - 1]:
        runs[0] = runs.pop() + runs[0]
    return sorted(runs, key=lambda r: r[0])


def build_arc_system(
    g: CycledGraph, prof: ProblemProfile, arc_len: int, want: int
) -> ArcSystem:
    """Chop clear stretches into arcs of ``arc_len`` alternating vertices.

    Each full block of 2*arc_len consecutive clear positions yields one arc
    (every second vertex of the block); the final block position acts as the
    separator keeping consecutive closures disjoint.  Raises
    InsufficientMaterial (with the partial system attached) when fewer than
    ``want`` arcs fit.
    """
    if arc_len < 1:
        raise PreconditionViolation(f"need arc_len >= 1, got {arc_len}")
    if want < 1:
        raise PreconditionViolation(f"need want >= 1, got {want}")
    block = 2 * arc_len
    arcs: list[Arc] = []
    for run in _clear_runs(g, prof):
        for i in range(0, len(run) - block + 1, block):
            chunk = run[i:i + block]
            members = [g.at(p) for p in chunk[0::2]]
            arcs.append(make_arc(g, members))
            if len(arcs) == want:
                return make_system(g, prof, arcs)
    partial = make_system(g, prof, arcs)
    raise InsufficientMaterial(len(arcs), partial)


def paper_arc_params(k: int, c1: float = 1.0, c2: float = 1.0) -> tuple[int, int]:
    """Desk-scale version of the default sizing: (arc_len, want).

    arc_len ~ c2 * k^(1/5), want ~ c1 * k^2, both floored at 1.
    """
    arc_len = max(1, int(c2 * k ** 0.2))
    want = max(1, int(c1 * k * k))
    return arc_len, want


# ---------------------------------------------------------------------------
# M2 detection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class M2Result:
    """Either two independent edges between a pair of arcs, or a cover vertex.

    kind = "two_edges": ``edges`` holds two vertex-disjoint A-B edges.
    kind = "m2_free": ``cover`` is a vertex meeting every A-B edge, or None
    when there are no edges at all.
    """

    kind: str
    edges: tuple[Chord, Chord] | None = None
    cover: int | None = None

    @property
    def is_free(self) -> bool:
        return self.kind == "m2_free"


def cross_edges(g: CycledGraph, a: Arc, b: Arc) -> list[Chord]:
    """All graph edges (u, v) with u in arc a, v in arc b, sorted."""
    bs = set(b.vertices)
    out = [(u, v) for u in a.vertices for v in g.adj[u] if v in bs]
    out.sort()
    return out


def detect_m2(g: CycledGraph, a: Arc, b: Arc) -> M2Result:
    """Find two independent A-B edges, or certify a single covering vertex."""
    if a == b:
        raise PreconditionViolation("detect_m2 needs two distinct arcs")
    edges = cross_edges(g, a, b)
    if not edges:
        return M2Result(kind="m2_free", cover=None)
    a0, b0 = edges[0]
    miss_a0 = [e for e in edges if a0 not in e]
    if not miss_a0:
        return M2Result(kind="m2_free", cover=a0)
    miss_b0 = [e for e in edges if b0 not in e]
    if not miss_b0:
        return M2Result(kind="m2_free", cover=b0)
    e1, e2 = miss_a0[0], miss_b0[0]
    if not set(e1) & set(e2):
        return M2Result(kind="two_edges", edges=(e1, e2))
    # e1 and e2 share a vertex, so one of them is disjoint from edges[0]
    if set(e1) & set((a0, b0)):
        return M2Result(kind="two_edges", edges=((a0, b0), e2))
    return M2Result(kind="two_edges", edges=((a0, b0), e1))


# ---------------------------------------------------------------------------
# the arc-graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArcGraph:
    """Unweighted adjacency between arcs: an edge per pair joined in G."""

    nodes: int
    edges: frozenset[tuple[int, int]]

    @property
    def m(self) -> int:
        return len(self.edges)


def build_arc_graph(sys: ArcSystem) -> ArcGraph:
    g = sys.g
    out = set()
    for i in range(len(sys.arcs)):
        for j in range(i + 1, len(sys.arcs)):
            if cross_edges(g, sys.arcs[i], sys.arcs[j]):
                out.add((i, j))
    return ArcGraph(nodes=len(sys.arcs), edges=frozenset(out))


# ---------------------------------------------------------------------------
# simplification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplifyOutcome:
    """Either a contradicting cycle or a simple subsystem.

    ``colors_used`` records the effective coloring constant for the simple
    branch; ``events`` logs surgeries that fired but failed the
    contradicting-cycle bounds (possible at desk scale only).
    """

    kind: str                     # "contradicting" | "simple"
    witness: CycleWitness | None = None
    system: ArcSystem | None = None
    colors_used: int | None = None
    events: tuple = ()


def _degeneracy_coloring(n_nodes: int, edges: set[tuple[int, int]]) -> list[int]:
    """Greedy coloring along a smallest-last (degeneracy) ordering."""
    adj = {i: set() for i in range(n_nodes)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    deg = {i: len(adj[i]) for i in range(n_nodes)}
    alive = set(range(n_nodes))
    order = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        order.append(v)
        alive.discard(v)
        for u in adj[v]:
            if u in alive:
                deg[u] -= 1
    color = [-1] * n_nodes
    for v in reversed(order):
        used = {color[u] for u in adj[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def simplify(sys: ArcSystem) -> SimplifyOutcome:
    """Refine an independent system into a simple one, or find a reroute.

    Searches every arc pair for a crossing M2 (two independent inter-arc
    edges that interleave as chords), then every disjoint pair of parallel
    M2s for a mutual crossing; any hit becomes a surgery whose output is
    checked against the contradicting-cycle bounds.  If nothing fires, the
    M2-conflict graph is colored and the largest color class returned.
    """
    if not sys.independent:
        raise NotIndependent("simplify needs an independent system")
    g = sys.g
    events: list[dict] = []
    narcs = len(sys.arcs)

    pair_edges: dict[tuple[int, int], list[Chord]] = {}
    for i in range(narcs):
        for j in range(i + 1, narcs):
            es = cross_edges(g, sys.arcs[i], sys.arcs[j])
            if es:
                pair_edges[(i, j)] = es

    # crossing M2 within one arc pair
    for (i, j), es in sorted(pair_edges.items()):
        for s in range(len(es)):
            for t in range(s + 1, len(es)):
                e, f = es[s], es[t]
                if set(e) & set(f):
                    continue
                if chords_cross(g, e, f):
                    w = crossing_m2_surgery(g, e[0], f[0], e[1], f[1])
                    if validate_contradicting(g, sys.prof, w):
                        return SimplifyOutcome(
                            kind="contradicting", witness=w, events=tuple(events)
                        )
                    events.append(
                        {"stage": "crossing_m2", "pair": [i, j],
                         "length": w.length, "note": "cycle failed contradicting bounds"}
                    )

    # mutually crossing parallel M2s across disjoint arc pairs
    reps: dict[tuple[int, int], tuple[Chord, Chord]] = {}
    for (i, j) in sorted(pair_edges):
        r = detect_m2(g, sys.arcs[i], sys.arcs[j])
        # internally crossing representatives were already tried above
        if r.kind == "two_edges" and not chords_cross(g, *r.edges):
            reps[(i, j)] = r.edges
    rep_keys = sorted(reps)
    for s in range(len(rep_keys)):
        for t in range(s + 1, len(rep_keys)):
            pa, pb = rep_keys[s], rep_keys[t]
            if set(pa) & set(pb):
                continue
            (e1, e2), (f1, f2) = reps[pa], reps[pb]
            if any(chords_cross(g, e, f) for e in (e1, e2) for f in (f1, f2)):
                m2a = (e1[0], e2[0], e1[1], e2[1])
                m2b = (f1[0], f2[0], f1[1], f2[1])
                w = double_m2_surgery(g, m2a, m2b)
                if validate_contradicting(g, sys.prof, w):
                    return SimplifyOutcome(
                        kind="contradicting", witness=w, events=tuple(events)
                    )
                events.append(
                    {"stage": "double_m2", "pairs": [list(pa), list(pb)],
                     "length": w.length, "note": "cycle failed contradicting bounds"}
                )

    # no surgery: color the conflict graph, keep the biggest class
    conflicts = set(reps)
    color = _degeneracy_coloring(narcs, conflicts)
    classes: dict[int, list[int]] = {}
    for idx, c in enumerate(color):
        classes.setdefault(c, []).append(idx)
    best = max(classes.values(), key=lambda cl: (len(cl), -cl[0]))
    kept = sys.sub(best, simple=True)

    for i in range(len(kept.arcs)):
        for j in range(i + 1, len(kept.arcs)):
            if not detect_m2(g, kept.arcs[i], kept.arcs[j]).is_free:
                raise VerificationFailed("retained arc pair is not M2-free")
    return SimplifyOutcome(
        kind="simple",
        system=kept,
        colors_used=max(classes) + 1,
        events=tuple(events),
    )
