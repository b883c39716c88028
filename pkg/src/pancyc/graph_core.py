"""Graphs carrying a distinguished Hamilton cycle, plus cyclic position math.

Everything downstream (arc systems, surgeries, the witness engine) reasons
about vertices through their *positions* on the fixed Hamilton cycle, so this
module owns the position arithmetic: forward gaps, shorter-path extraction,
the chord interleaving test, and the "problematic vertex" bookkeeping.

The graph is immutable after construction; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    HamEdgeMissing,
    MalformedFile,
    NotAPermutation,
    PreconditionViolation,
    SameVertex,
    SharedEndpoint,
)

# A chord is just an edge given by its two endpoints; kept as a plain tuple.
Chord = tuple[int, int]


def norm_edge(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CycledGraph:
    """Simple graph with a fixed Hamilton cycle.

    ``ham_order`` lists the vertices in cycle order; ``pos`` is its inverse
    (pos[v] = index of v in ham_order).  ``adj`` is a tuple of frozensets.
    Use :func:`build_graph` rather than the raw constructor.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    ham_order: tuple[int, ...]
    adj: tuple[frozenset[int], ...]
    pos: tuple[int, ...]

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    # -- position arithmetic ----------------------------------------------

    def at(self, i: int) -> int:
        """Vertex sitting at position i (taken mod n)."""
        return self.ham_order[i % self.n]

    def succ(self, v: int) -> int:
        return self.at(self.pos[v] + 1)

    def pred(self, v: int) -> int:
        return self.at(self.pos[v] - 1)

    def forward_gap(self, u: int, v: int) -> int:
        """Number of H-steps from u to v in the positive direction."""
        return (self.pos[v] - self.pos[u]) % self.n

    def ham_path(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices from u to v inclusive, walking in the positive direction."""
        gap = self.forward_gap(u, v)
        start = self.pos[u]
        return tuple(self.at(start + i) for i in range(gap + 1))

    def ham_edges(self):
        """The n edges of the Hamilton cycle, canonical form."""
        for i in range(self.n):
            yield norm_edge(self.ham_order[i], self.ham_order[(i + 1) % self.n])

    def is_ham_edge(self, u: int, v: int) -> bool:
        return abs(self.pos[u] - self.pos[v]) in (1, self.n - 1)


def build_graph(n: int, edges, ham_order) -> CycledGraph:
    """Validate and assemble a CycledGraph.

    Raises NotAPermutation / HamEdgeMissing on a bad cycle declaration and
    PreconditionViolation on degenerate edges.
    """
    if n < 3:
        raise PreconditionViolation(f"need n >= 3, got {n}")
    ham = tuple(ham_order)
    if sorted(ham) != list(range(n)):
        raise NotAPermutation(f"ham_order is not a permutation of 0..{n - 1}")

    eset = set()
    for u, v in edges:
        if u == v:
            raise PreconditionViolation(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionViolation(f"edge ({u},{v}) out of range")
        eset.add(norm_edge(u, v))

    for i in range(n):
        if norm_edge(ham[i], ham[(i + 1) % n]) not in eset:
            raise HamEdgeMissing(i)

    adj = [set() for _ in range(n)]
    for u, v in eset:
        adj[u].add(v)
        adj[v].add(u)

    pos = [0] * n
    for i, v in enumerate(ham):
        pos[v] = i

    return CycledGraph(
        n=n,
        edges=frozenset(eset),
        ham_order=ham,
        adj=tuple(frozenset(a) for a in adj),
        pos=tuple(pos),
    )


# ---------------------------------------------------------------------------
# file format:  line 1 "n m"; line 2 "H:" + n vertex ids; then m edge lines
# ---------------------------------------------------------------------------

def load_graph(text: str) -> CycledGraph:
    """Parse the package's graph file format (strict)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise MalformedFile("need a header line and a cycle line")

    head = lines[0].split()
    if len(head) != 2:
        raise MalformedFile(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedFile(f"non-integer header fields in {lines[0]!r}") from None

    cyc = lines[1].split()
    if not cyc or cyc[0] != "H:":
        raise MalformedFile("second line must start with 'H:'")
    try:
        ham = [int(t) for t in cyc[1:]]
    except ValueError:
        raise MalformedFile("non-integer vertex id on cycle line") from None
    if len(ham) != n:
        raise MalformedFile(f"cycle line lists {len(ham)} vertices, expected {n}")

    edge_lines = lines[2:]
    if len(edge_lines) != m:
        raise MalformedFile(f"expected {m} edge lines, found {len(edge_lines)}")

    edges = []
    seen = set()
    for ln in edge_lines:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedFile(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedFile(f"non-integer endpoint in {ln!r}") from None
        if u == v:
            raise MalformedFile(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedFile(f"edge ({u},{v}) out of range")
        e = norm_edge(u, v)
        if e in seen:
            raise MalformedFile(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)

    if sorted(ham) != list(range(n)):
        raise NotAPermutation("cycle line is not a permutation of the vertices")
    return build_graph(n, edges, ham)


def dump_graph(g: CycledGraph) -> str:
    """Serialize back to the graph file format (edges sorted, deterministic)."""
    out = [f"{g.n} {len(g.edges)}", "H: " + " ".join(str(v) for v in g.ham_order)]
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# cyclic geometry
# ---------------------------------------------------------------------------

def cyclic_distance(g: CycledGraph, u: int, v: int) -> tuple[int, tuple[int, ...]]:
    """Shorter H-path between u and v: (edge count, vertex sequence u..v).

    Antipodal ties go to the positive ham_order direction from u.
    """
    if u == v:
        raise SameVertex(f"cyclic_distance needs two distinct vertices, got {u}")
    fwd = g.forward_gap(u, v)
    bwd = g.n - fwd
    if fwd <= bwd:
        start = g.pos[u]
        return fwd, tuple(g.at(start + i) for i in range(fwd + 1))
    start = g.pos[u]
    return bwd, tuple(g.at(start - i) for i in range(bwd + 1))


def chords_cross(g: CycledGraph, c1: Chord, c2: Chord) -> bool:
    """True iff the two chords interleave around the cycle.

    Equivalent to: exactly one endpoint of c2 lies strictly inside one of the
    two circular intervals cut by c1's endpoints.
    """
    a, b = c1
    x, y = c2
    ps = {g.pos[a], g.pos[b], g.pos[x], g.pos[y]}
    if len(ps) != 4:
        raise SharedEndpoint(f"chords {c1} and {c2} do not have 4 distinct positions")

    span = g.forward_gap(a, b)

    def inside(w: int) -> bool:
        return 0 < g.forward_gap(a, w) < span

    return inside(x) != inside(y)


# ---------------------------------------------------------------------------
# problematic vertices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProblemProfile:
    """Which vertices the engine must keep on any surgered cycle.

    ``problematic`` = W plus every vertex of degree <= degree_threshold
    (the threshold defaults to 2k; desk-scale runs may override it, see
    mark_problematic).  Directly constructible for fixtures.
    """

    w: frozenset[int]
    k: int
    degree_threshold: int
    problematic: frozenset[int]

    @property
    def count(self) -> int:
        return len(self.problematic)


def mark_problematic(
    g: CycledGraph,
    w,
    k: int,
    degree_threshold: int | None = None,
) -> ProblemProfile:
    """Compute the problematic-vertex profile.

    A vertex is problematic when it sits in ``w`` or its degree is at most
    the threshold (default 2k).  The override exists because on deliberately
    sparse desk-scale inputs the honest 2k rule can swallow every vertex,
    leaving nothing to build arcs from.
    """
    if k < 1:
        raise PreconditionViolation(f"need k >= 1, got {k}")
    wset = frozenset(w)
    for v in wset:
        if not (0 <= v < g.n):
            raise PreconditionViolation(f"w vertex {v} out of range")
    thr = 2 * k if degree_threshold is None else degree_threshold
    bad = frozenset(v for v in range(g.n) if v in wset or g.degree(v) <= thr)
    return ProblemProfile(w=wset, k=k, degree_threshold=thr, problematic=bad)


def is_cycle(g: CycledGraph, seq) -> bool:
    """True iff seq is a simple cycle in g (distinct entries, edges wrap)."""
    seq = list(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(
        g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
    )
