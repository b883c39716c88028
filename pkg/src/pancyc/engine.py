"""The dual-witness engine.

Given a simple arc system, the engine hunts for either a large independent
set or a reroute of the base cycle into a "contradicting" cycle (length in
[n-k, n-1] covering every problematic vertex).  All failure modes at desk
scale surface as an explicit Inconclusive witness with a trace; soundness of
the two positive witness kinds is re-verified before anything is returned.

Pipeline pieces, bottom up:

* extract_independent_set  — strip one cover vertex per arc-edge of a simple
  system, leaving an independent set of size >= (sum of arc sizes) - m.
* peel_until_good          — repeatedly classify arcs, peel the non-expanding
  remainder of bad arcs (certifying the tight-set union bound as it goes),
  ending in an all-good subsystem or an extraction over the peelings.
* find_semi_triangle       — from a good arc's assignment, recurse one level
  down on the assigned arcs' main halves; a cross edge between two recovered
  independent sets assembles a semi-triangle (Type 2 fires a surgery at
  once), no cross edges means the union itself is the independent set.
* inductive_search         — the level-p recursion combining the above, with
  the minimal-triangle pigeonhole loop at p >= 3.
* run_engine               — profile, build, simplify, search; full trace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arc_system import (
    Arc,
    ArcSystem,
    build_arc_graph,
    build_arc_system,
    cross_edges,
    detect_m2,
    make_arc,
    make_system,
    simplify,
)
from .errors import (
    CoverMissing,
    NotSimple,
    PreconditionViolation,
    SpecConflict,
    TooSmall,
    VerificationFailed,
)
from .expansion import (
    GoodResult,
    arc_degree,
    classify_good,
    find_tight_set,
    maximal_expanding_subset,
)
from .graph_core import CycledGraph, ProblemProfile, mark_problematic
from .surgery import (
    CycleWitness,
    SemiTriangle,
    check_semi_triangle,
    chord_shortcut,
    double_type1_surgery,
    expected_triangle_edges,
    semi_triangle_surgery,
    validate_contradicting,
)


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

def _a_of(p: int) -> int:
    return 10 * 3 ** p


def _b_of(p: int) -> int:
    return 1000 ** p * 4 ** (p * p)


@dataclass(frozen=True)
class Constants:
    """Level parameters driving the recursion.

    ``t_good`` is the expansion demand used to classify arcs; ``t_assign``
    the per-region demand a vertex's assignment must retain to stay usable
    in the triangle hunt.  Paper mode derives both from (p, x); custom mode
    (desk scale) sets them directly and reuses them at every level.
    """

    p: int
    x: int
    a: int
    b: int
    t_good: int
    t_assign: int
    mode: str = "paper"

    def __post_init__(self):
        if self.p < 1 or self.x < 1:
            raise PreconditionViolation("need p >= 1 and x >= 1")
        if self.t_good < 1 or self.t_assign < 1:
            raise PreconditionViolation("demands must be >= 1")

    @property
    def target(self) -> int:
        """The independent-set size this level promises: x^p + 1."""
        return self.x ** self.p + 1

    def child(self) -> "Constants":
        if self.p <= 1:
            raise PreconditionViolation("level 1 has no child level")
        if self.mode == "paper":
            return paper_constants(self.p - 1, self.x)
        return Constants(
            p=self.p - 1, x=self.x, a=_a_of(self.p - 1), b=_b_of(self.p - 1),
            t_good=self.t_good, t_assign=self.t_assign, mode="custom",
        )


def paper_constants(p: int, x: int) -> Constants:
    """Honest parameters: a = 10*3^p, b = 1000^p*4^(p^2), demands per level."""
    e = (p - 1) * (p - 2) // 2
    b_prev = _b_of(p - 1) if p >= 1 else 1
    return Constants(
        p=p, x=x, a=_a_of(p), b=_b_of(p),
        t_good=4 * b_prev * x ** e,
        t_assign=b_prev * x ** e + 1,
        mode="paper",
    )


def desk_constants(p: int, x: int, t_good: int = 1, t_assign: int = 1) -> Constants:
    """Small overridable demands for instances that fit on a desk."""
    return Constants(
        p=p, x=x, a=_a_of(p), b=_b_of(p),
        t_good=t_good, t_assign=t_assign, mode="custom",
    )


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

@dataclass
class Witness:
    """Tagged engine outcome: independent_set | contradicting | inconclusive."""

    kind: str
    vertices: frozenset[int] | None = None
    cycle: CycleWitness | None = None
    reason: str | None = None
    trace: tuple = ()

    def json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.vertices is not None:
            out["vertices"] = sorted(self.vertices)
        if self.cycle is not None:
            out["cycle"] = self.cycle.json_dict(kind="contradicting")
        if self.reason is not None:
            out["reason"] = self.reason
        out["trace"] = list(self.trace)
        return out


def witness_from_json(d: dict) -> Witness:
    """Rebuild a Witness from its json_dict form (for piped verification)."""
    kind = d.get("kind")
    if kind not in ("independent_set", "contradicting", "inconclusive"):
        raise PreconditionViolation(f"unknown witness kind {kind!r}")
    vertices = frozenset(d["vertices"]) if "vertices" in d else None
    cycle = None
    if "cycle" in d:
        walk = tuple(d["cycle"]["cycle"])
        cycle = CycleWitness(cycle=walk, length=d["cycle"]["length"],
                             contains=frozenset(walk))
    return Witness(kind=kind, vertices=vertices, cycle=cycle,
                   reason=d.get("reason"), trace=tuple(d.get("trace", ())))


def _independent(vertices, trace=()) -> Witness:
    return Witness(kind="independent_set", vertices=frozenset(vertices), trace=tuple(trace))


def _contradicting(cw: CycleWitness, trace=()) -> Witness:
    return Witness(kind="contradicting", cycle=cw, trace=tuple(trace))


def _inconclusive(reason: str, trace=()) -> Witness:
    return Witness(kind="inconclusive", reason=reason, trace=tuple(trace))


def _check_independent(g: CycledGraph, vs) -> None:
    vs = sorted(vs)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if g.has_edge(u, v):
                raise VerificationFailed(f"claimed independent set contains edge ({u},{v})")


# ---------------------------------------------------------------------------
# arc splitting
# ---------------------------------------------------------------------------

def main_leftover_split(g: CycledGraph, arc: Arc) -> tuple[Arc, Arc]:
    """Split an arc into its main part M (top half) and leftover part L.

    M takes the last floor(size/2) vertices in arc order, L the rest; every
    M vertex comes after every L vertex along the arc.
    """
    if arc.size < 2:
        raise TooSmall(f"cannot split an arc of {arc.size} vertex")
    cut = arc.size - arc.size // 2
    l_part = make_arc(g, arc.vertices[:cut])
    m_part = make_arc(g, arc.vertices[cut:])
    return m_part, l_part


def _intra_edge(g: CycledGraph, arc: Arc):
    """First graph edge between two vertices of the same arc, or None."""
    vs = arc.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.has_edge(vs[i], vs[j]):
                return (vs[i], vs[j])
    return None


# ---------------------------------------------------------------------------
# extraction from a simple system
# ---------------------------------------------------------------------------

def extract_independent_set(sys: ArcSystem) -> frozenset[int]:
    """Drop one covering vertex per arc-edge; what remains is independent.

    In a simple system all edges between an arc pair run through a single
    cover vertex, so removing it per pair erases the pair's edges entirely;
    the survivors are re-verified and returned.  Size >= total - m.
    """
    if not sys.simple:
        raise NotSimple("extraction needs a simple arc system")
    g = sys.g
    doomed: set[int] = set()
    total = sum(a.size for a in sys.arcs)
    m = 0
    for i in range(len(sys.arcs)):
        for j in range(i + 1, len(sys.arcs)):
            if not cross_edges(g, sys.arcs[i], sys.arcs[j]):
                continue
            m += 1
            r = detect_m2(g, sys.arcs[i], sys.arcs[j])
            if r.kind != "m2_free":
                raise NotSimple(f"arc pair ({i},{j}) has two independent edges")
            if r.cover is None:
                raise CoverMissing(f"pair ({i},{j}) has edges but no cover vertex")
            doomed.add(r.cover)
    kept = {v for a in sys.arcs for v in a.vertices} - doomed
    if len(kept) < total - m:
        raise VerificationFailed("extraction lost more vertices than arc-edges")
    _check_independent(g, kept)
    return frozenset(kept)


# ---------------------------------------------------------------------------
# the peeling process
# ---------------------------------------------------------------------------

@dataclass
class PeelOutcome:
    """Result of peel_until_good.

    kind = "good": ``system`` is the surviving all-good subsystem,
    ``good`` maps its arc indices to their GoodResult certificates, and
    ``kept_parent`` gives each surviving arc's index in the input system.
    kind = "independent": ``vertices`` passed the size target.
    kind = "inconclusive": desk-scale guarantees lapsed; see ``reason``.
    """

    kind: str
    system: ArcSystem | None = None
    good: dict[int, GoodResult] | None = None
    kept_parent: list[int] | None = None
    vertices: frozenset[int] | None = None
    reason: str | None = None


def _certify_peel(cur: ArcSystem, xs: frozenset[int], b_set: list[int], t: int,
                  arc_size: int, trace: list) -> None:
    """Runtime check of the tight-set union bound while peeling one arc.

    Walking v over the non-expanding remainder, the union U of tight sets
    must keep |N(U + first j vs)| <= (|U| + j) * t at every step; in
    particular d(B) <= 2 * |A| * t at the end.
    """
    union: set[int] = set()
    taken: list[int] = []
    for j, v in enumerate(b_set, start=1):
        t_v = find_tight_set(cur, xs, v, t)
        union |= t_v
        taken.append(v)
        if arc_degree(cur, union | set(taken)) > (len(union) + j) * t:
            raise VerificationFailed("tight-set union bound violated during peel")
    d_b = arc_degree(cur, set(b_set))
    if d_b > 2 * arc_size * t:
        raise VerificationFailed(f"peeled remainder has degree {d_b} > 2*{arc_size}*{t}")
    trace.append({"stage": "peel_bound", "b": sorted(b_set), "d_b": d_b,
                  "bound": 2 * arc_size * t})


def peel_until_good(sys: ArcSystem, c: Constants, trace: list | None = None) -> PeelOutcome:
    """Classify-and-peel until every surviving arc is good.

    Each round classifies all arcs at demand t_good; the first bad arc has
    its expanding core X removed from play: the remainder B = A - X is
    recorded (with its certified degree bound) and the whole arc leaves the
    system.  If arcs survive, they form the good system.  If everything
    peels, a low-edge subcollection of the recorded remainders feeds
    extract_independent_set.
    """
    if trace is None:
        trace = []
    if not sys.simple:
        raise NotSimple("peeling needs a simple arc system")
    cur = sys
    parent = list(range(len(sys.arcs)))
    peeled: list[tuple[int, list[int]]] = []  # (parent index, remainder vertices)

    while cur.arcs:
        bad_idx = None
        results: dict[int, GoodResult] = {}
        for i in range(len(cur.arcs)):
            r = classify_good(cur, i, c.t_good)
            results[i] = r
            if not r.good and bad_idx is None:
                bad_idx = i
        if bad_idx is None:
            trace.append({"stage": "peel_done", "good_arcs": len(cur.arcs),
                          "peeled": len(peeled)})
            return PeelOutcome(kind="good", system=cur, good=results,
                               kept_parent=parent)
        arc = cur.arcs[bad_idx]
        xs = results[bad_idx].expanding
        b_set = [v for v in arc.vertices if v not in xs]
        _certify_peel(cur, xs, b_set, c.t_good, arc.size, trace)
        peeled.append((parent[bad_idx], b_set))
        keep = [i for i in range(len(cur.arcs)) if i != bad_idx]
        parent = [parent[i] for i in keep]
        cur = cur.sub(keep)

    # everything peeled: extract from the best low-edge subcollection
    remainders = [make_arc(sys.g, b) for (_, b) in peeled if b]
    if not remainders:
        return PeelOutcome(kind="inconclusive", reason="peeling left no remainder vertices")
    coll = make_system(sys.g, sys.prof, remainders, simple=True)

    def est(system: ArcSystem) -> int:
        return sum(a.size for a in system.arcs) - build_arc_graph(system).m

    best_sys, best_est = coll, est(coll)
    work = coll
    while len(work.arcs) > 1:
        ag = build_arc_graph(work)
        deg = [0] * len(work.arcs)
        for i, j in ag.edges:
            deg[i] += 1
            deg[j] += 1
        drop = max(range(len(work.arcs)), key=lambda i: (deg[i], -i))
        work = work.sub([i for i in range(len(work.arcs)) if i != drop])
        e = est(work)
        if e > best_est:
            best_sys, best_est = work, e
    got = extract_independent_set(best_sys)
    trace.append({"stage": "peel_extract", "collection": len(best_sys.arcs),
                  "size": len(got), "target": c.target})
    if len(got) >= c.target:
        return PeelOutcome(kind="independent", vertices=got)
    return PeelOutcome(
        kind="inconclusive",
        reason=f"peeled extraction yields {len(got)} < target {c.target}",
    )


# ---------------------------------------------------------------------------
# semi-triangle hunting (one good anchor, one level of recursion)
# ---------------------------------------------------------------------------

@dataclass
class TriangleOutcome:
    kind: str                           # triangle | independent | contradicting | inconclusive
    triangle: SemiTriangle | None = None
    vertices: frozenset[int] | None = None
    cycle: CycleWitness | None = None
    reason: str | None = None


def triangle_length(active: ArcSystem, t: SemiTriangle) -> int:
    """Number of active arcs strictly between the anchor and the second arc."""
    a, b = t.arcs[0], t.arcs[1]
    return (b - a) % len(active.arcs) - 1


def _next_active(active: ArcSystem, idx: int) -> int:
    return (idx + 1) % len(active.arcs)


def _arc_order_key(arc: Arc) -> dict[int, int]:
    return {v: i for i, v in enumerate(arc.vertices)}


def find_semi_triangle(
    active: ArcSystem,
    anchor: int,
    assign: dict[int, tuple[int, ...]],
    c: Constants,
    trace: list,
    region: frozenset[int] | None = None,
) -> TriangleOutcome:
    """Hunt a Type 1 semi-triangle anchored at ``active.arcs[anchor]``.

    ``assign`` maps assigned vertices of the anchor's leftover half to the
    active-arc indices reserved for them (each arc index reachable through a
    neighbor in that arc's leftover half).  For each of up to x assigned
    vertices, the assigned arcs' main halves are recursed at level p-1; the
    first cross edge between two recovered independent sets closes a
    triangle (a Type 2 pattern fires its surgery immediately), and if no
    cross edge ever appears the union is itself the independent set.
    """
    g = active.g
    if c.p < 2:
        raise PreconditionViolation("triangle hunting needs level >= 2")
    nxt = _next_active(active, anchor)

    usable: dict[int, tuple[int, ...]] = {}
    for v in sorted(assign, key=lambda u: g.pos[u]):
        arcs = tuple(j for j in assign[v]
                     if j != nxt and (region is None or j in region))
        if arcs:
            usable[v] = arcs
    anchor_arc = active.arcs[anchor]
    if len(usable) * 6 < anchor_arc.size:
        trace.append({"stage": "assign_shortfall", "anchor": anchor,
                      "usable": len(usable), "arc_size": anchor_arc.size})
    if len(usable) < 2:
        return TriangleOutcome(
            kind="inconclusive",
            reason=f"anchor {anchor}: only {len(usable)} usable assigned vertices",
        )

    halves = {}
    for j in set(j for arcs in usable.values() for j in arcs):
        arc_j = active.arcs[j]
        if arc_j.size < 2:
            continue
        m_part, l_part = main_leftover_split(g, arc_j)
        halves[j] = (m_part, l_part)

    collected: list[tuple[int, frozenset[int], dict[int, int]]] = []
    reasons: list[str] = []
    for v in list(usable)[: c.x]:
        arcs_v = [j for j in usable[v] if j in halves]
        if len(arcs_v) < max(1, c.t_assign - 1):
            reasons.append(f"vertex {v}: {len(arcs_v)} splittable arcs after unassign")
            continue
        child_arcs = [halves[j][0] for j in sorted(arcs_v)]
        child_sys = make_system(g, active.prof, child_arcs, simple=True)
        owner: dict[int, int] = {}
        for j in sorted(arcs_v):
            for u in halves[j][0].vertices:
                owner[u] = j
        sub = inductive_search(child_sys, c.child(), trace)
        if sub.kind == "contradicting":
            return TriangleOutcome(kind="contradicting", cycle=sub.cycle)
        if sub.kind == "inconclusive":
            reasons.append(f"vertex {v}: child level {c.p - 1} inconclusive ({sub.reason})")
            continue
        j_v = sub.vertices
        # cross edge against every previously recovered set?
        for (u, j_u, owner_u) in collected:
            for b_vert in sorted(j_v):
                hits = sorted(j_u & g.adj[b_vert])
                if not hits:
                    continue
                c_vert = hits[0]
                return _assemble_triangle(
                    active, anchor, halves, trace,
                    v, b_vert, owner[b_vert], u, c_vert, owner_u[c_vert],
                )
        collected.append((v, j_v, owner))

    if len(collected) >= 1:
        union: set[int] = set()
        for (_, j_v, _) in collected:
            union |= j_v
        if len(union) >= c.target:
            _check_independent(g, union)
            trace.append({"stage": "triangle_union", "anchor": anchor, "size": len(union)})
            return TriangleOutcome(kind="independent", vertices=frozenset(union))
        reasons.append(f"cross-free union has {len(union)} < target {c.target}")
    return TriangleOutcome(
        kind="inconclusive",
        reason="; ".join(reasons) if reasons else "no assigned vertex produced a child set",
    )


def _assemble_triangle(
    active: ArcSystem,
    anchor: int,
    halves: dict,
    trace: list,
    v: int, b_vert: int, arc_v: int,
    u: int, c_vert: int, arc_u: int,
) -> TriangleOutcome:
    """Orient a found cross edge into a Type 1 or Type 2 semi-triangle."""
    g = active.g
    if arc_v == arc_u:
        raise VerificationFailed("cross edge stays inside one assigned arc")
    anchor_arc = active.arcs[anchor]
    start = anchor_arc.closure_span[0]

    def fwd(j: int) -> int:
        return (active.arcs[j].closure_span[0] - start) % g.n

    # B is the first of the two arcs going forward from the anchor
    if fwd(arc_v) < fwd(arc_u):
        b_idx, c_idx = arc_v, arc_u
        w_b, b_cross = v, b_vert
        w_c, c_cross = u, c_vert
    else:
        b_idx, c_idx = arc_u, arc_v
        w_b, b_cross = u, c_vert
        w_c, c_cross = v, b_vert

    def leftover_witness(w: int, j: int) -> int:
        l_part = halves[j][1]
        for cand in l_part.vertices:
            if g.has_edge(w, cand):
                return cand
        raise VerificationFailed(
            f"vertex {w} has no neighbor in the leftover half of arc {j}"
        )

    lam_b = leftover_witness(w_b, b_idx)
    lam_c = leftover_witness(w_c, c_idx)

    okey = _arc_order_key(anchor_arc)
    a1, a2 = sorted((w_b, w_c), key=lambda w: okey[w])
    ttype = 1 if a1 == w_c else 2
    tri = SemiTriangle(
        arcs=(anchor, b_idx, c_idx),
        a=(a1, a2),
        b=(lam_b, b_cross),
        c=(lam_c, c_cross),
        type=ttype,
        edges=expected_triangle_edges((a1, a2), (lam_b, b_cross), (lam_c, c_cross), ttype),
    )
    check_semi_triangle(g, tri)
    trace.append({"stage": "triangle", "type": ttype,
                  "arcs": list(tri.arcs), "a": list(tri.a),
                  "b": list(tri.b), "c": list(tri.c)})
    if ttype == 2:
        w = semi_triangle_surgery(g, tri)
        if validate_contradicting(g, active.prof, w):
            return TriangleOutcome(kind="contradicting", cycle=w)
        trace.append({"stage": "type2_bounds_failed", "length": w.length})
        return TriangleOutcome(
            kind="inconclusive",
            reason=f"type 2 reroute gave length {w.length} outside contradicting bounds",
        )
    return TriangleOutcome(kind="triangle", triangle=tri)


# ---------------------------------------------------------------------------
# the recursion
# ---------------------------------------------------------------------------

def inductive_search(sys: ArcSystem, c: Constants, trace: list | None = None) -> Witness:
    """Level-p search: independent set of size x^p + 1, or a reroute, or a trace.

    p = 1 returns a whole arc (an intra-arc edge becomes a chord shortcut
    instead); p = 2 extracts directly from the simple system; p >= 3 runs
    the peel / triangle-hunt / pigeonhole loop.
    """
    if trace is None:
        trace = []
    if not sys.simple:
        raise NotSimple("inductive search needs a simple arc system")
    if not sys.arcs:
        return _inconclusive("empty arc system", trace)
    g = sys.g

    # any intra-arc edge is an immediate reroute at every level
    for arc in sys.arcs:
        e = _intra_edge(g, arc)
        if e is not None:
            w = chord_shortcut(g, e)
            if validate_contradicting(g, sys.prof, w):
                trace.append({"stage": "chord_shortcut", "edge": list(e),
                              "length": w.length})
                return _contradicting(w, trace)
            trace.append({"stage": "shortcut_bounds_failed", "edge": list(e),
                          "length": w.length})
            return _inconclusive(
                f"intra-arc chord gives length {w.length} outside contradicting bounds",
                trace,
            )

    if c.p == 1:
        for arc in sys.arcs:
            if arc.size >= c.target:
                trace.append({"stage": "base_whole_arc", "size": arc.size})
                return _independent(arc.vertices, trace)
        return _inconclusive(
            f"no arc reaches the level-1 target {c.target}", trace
        )

    if c.p == 2:
        got = extract_independent_set(sys)
        trace.append({"stage": "base_extract", "size": len(got), "target": c.target})
        if len(got) >= c.target:
            return _independent(got, trace)
        return _inconclusive(
            f"level-2 extraction yields {len(got)} < target {c.target}", trace
        )

    return _search_level3(sys, c, trace)


def _search_level3(sys: ArcSystem, c: Constants, trace: list) -> Witness:
    g = sys.g
    eligible = [i for i, a in enumerate(sys.arcs) if a.size >= 2]
    if len(eligible) < len(sys.arcs):
        trace.append({"stage": "unsplittable_arcs",
                      "skipped": len(sys.arcs) - len(eligible)})
    if len(eligible) < 3:
        return _inconclusive("fewer than 3 splittable arcs", trace)

    halves = {}
    l_arcs = []
    for i in eligible:
        m_part, l_part = main_leftover_split(g, sys.arcs[i])
        halves[i] = (m_part, l_part)
        l_arcs.append(l_part)
    l_sys = make_system(g, sys.prof, l_arcs, simple=True)

    peel = peel_until_good(l_sys, c, trace)
    if peel.kind == "independent":
        _check_independent(g, peel.vertices)
        return _independent(peel.vertices, trace)
    if peel.kind == "inconclusive":
        return _inconclusive(peel.reason, trace)

    kept = [eligible[i] for i in peel.kept_parent]
    active = sys.sub(kept)
    if len(active.arcs) != len(peel.system.arcs) or any(
        active.arcs[i].closure_span[0] != peel.system.arcs[i].closure_span[0]
        for i in range(len(active.arcs))
    ):
        raise VerificationFailed("good halves lost alignment with their arcs")
    good = peel.good
    trace.append({"stage": "good_system", "arcs": len(active.arcs)})

    # harvest an initial Type 1 triangle from some good anchor
    pool: list[SemiTriangle] = []
    reasons: list[str] = []
    for anchor in range(len(active.arcs)):
        assign = {v: tuple(sorted(arcs))
                  for v, arcs in (good[anchor].assignment or {}).items()}
        out = find_semi_triangle(active, anchor, assign, c, trace)
        if out.kind == "triangle":
            pool.append(out.triangle)
            break
        if out.kind == "contradicting":
            return _contradicting(out.cycle, trace)
        if out.kind == "independent":
            return _independent(out.vertices, trace)
        reasons.append(out.reason)
    if not pool:
        return _inconclusive(
            "no good anchor yielded a semi-triangle: " + " | ".join(reasons), trace
        )

    # minimal-triangle pigeonhole loop
    for _ in range(len(active.arcs) + 1):
        pool.sort(key=lambda t: (triangle_length(active, t), t.arcs))
        t1 = pool[0]
        d_idx = _next_active(active, t1.arcs[0])
        regions = _three_regions(active, t1)
        assign_d = good[d_idx].assignment or {}
        v_r = {name: [] for name in ("A", "B", "C")}
        for v in sorted(assign_d, key=lambda u: g.pos[u]):
            for name in ("A", "B", "C"):
                if len(set(assign_d[v]) & regions[name]) >= c.t_assign:
                    v_r[name].append(v)
        best_name = max(("A", "B", "C"), key=lambda nm: (len(v_r[nm]), -ord(nm)))
        cand = v_r[best_name]
        trace.append({"stage": "pigeonhole", "triangle_arcs": list(t1.arcs),
                      "after_anchor": d_idx,
                      "region_counts": {nm: len(v_r[nm]) for nm in v_r},
                      "picked": best_name})
        if len(cand) < 2:
            return _inconclusive(
                f"pigeonhole region {best_name} keeps only {len(cand)} vertices", trace
            )
        restricted = {v: tuple(sorted(set(assign_d[v]) & regions[best_name]))
                      for v in cand}
        out = find_semi_triangle(active, d_idx, restricted, c, trace,
                                 region=regions[best_name])
        if out.kind == "contradicting":
            return _contradicting(out.cycle, trace)
        if out.kind == "independent":
            return _independent(out.vertices, trace)
        if out.kind == "inconclusive":
            return _inconclusive(out.reason, trace)
        t2 = out.triangle
        if best_name == "A":
            if triangle_length(active, t2) >= triangle_length(active, t1):
                raise VerificationFailed("recursion did not shorten the semi-triangle")
            pool.append(t2)
            continue
        w = double_type1_surgery(g, t1, t2, best_name)
        if validate_contradicting(g, sys.prof, w):
            trace.append({"stage": "double_type1", "case": best_name,
                          "length": w.length})
            return _contradicting(w, trace)
        return _inconclusive(
            f"double reroute (case {best_name}) gave length {w.length} "
            "outside contradicting bounds",
            trace,
        )
    raise VerificationFailed("pigeonhole loop failed to terminate")


def _three_regions(active: ArcSystem, t: SemiTriangle) -> dict[str, frozenset[int]]:
    """Active-arc indices strictly between consecutive triangle arcs."""
    n_arcs = len(active.arcs)
    a, b, c = t.arcs

    def between(lo: int, hi: int) -> frozenset[int]:
        out = []
        j = (lo + 1) % n_arcs
        while j != hi:
            out.append(j)
            j = (j + 1) % n_arcs
        return frozenset(out)

    return {"A": between(a, b), "B": between(b, c), "C": between(c, a)}


# ---------------------------------------------------------------------------
# the front door
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EngineConfig:
    """Everything run_engine needs besides the graph, W, and k."""

    constants: Constants
    arc_len: int
    want: int | None = None           # None: build as many arcs as fit
    degree_threshold: int | None = None


def _count_available(g: CycledGraph, prof: ProblemProfile, arc_len: int) -> int:
    from .arc_system import _clear_runs
    block = 2 * arc_len
    return sum(len(run) // block for run in _clear_runs(g, prof))


def run_engine(g: CycledGraph, w, k: int, cfg: EngineConfig) -> Witness:
    """Full pipeline: profile, build arcs, simplify, search; trace throughout."""
    trace: list = []
    if 2 * cfg.arc_len - 1 > k:
        raise SpecConflict(
            f"arc_len {cfg.arc_len} forces closures of {2 * cfg.arc_len - 1} > k = {k}"
        )
    prof = mark_problematic(g, w, k, cfg.degree_threshold)
    trace.append({"stage": "profile", "problematic": len(prof.problematic),
                  "threshold": prof.degree_threshold, "k": k})

    want = cfg.want
    if want is None:
        want = max(1, _count_available(g, prof, cfg.arc_len))
    try:
        sys = build_arc_system(g, prof, cfg.arc_len, want)
    except Exception as err:
        if hasattr(err, "system"):
            err.trace = tuple(trace)  # type: ignore[attr-defined]
        raise
    trace.append({"stage": "build", "arcs": sys.size, "length": sys.length,
                  "independent": sys.independent})

    out = simplify(sys)
    for ev in out.events:
        trace.append(dict(ev))
    if out.kind == "contradicting":
        trace.append({"stage": "simplify_surgery", "length": out.witness.length})
        wit = _contradicting(out.witness, trace)
        return _verify_out(g, prof, wit)
    ssys = out.system
    trace.append({"stage": "simplify", "kept": ssys.size,
                  "colors_used": out.colors_used})

    wit = inductive_search(ssys, cfg.constants, trace)
    return _verify_out(g, prof, wit)


def _verify_out(g: CycledGraph, prof: ProblemProfile, wit: Witness) -> Witness:
    """Last line of defense: no witness leaves unverified."""
    if wit.kind == "independent_set":
        _check_independent(g, wit.vertices)
    elif wit.kind == "contradicting":
        cw = wit.cycle
        seen = set(cw.cycle)
        ok = (
            len(seen) == len(cw.cycle) == cw.length
            and all(g.has_edge(cw.cycle[i], cw.cycle[(i + 1) % cw.length])
                    for i in range(cw.length))
            and validate_contradicting(g, prof, cw)
        )
        if not ok:
            raise VerificationFailed("contradicting witness failed re-verification")
    return wit
