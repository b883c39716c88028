"""Instance factories: the clique-ring lower bound, seeded random families,
and planted chord layouts for surgery and engine tests.

All generators emit a CycledGraph whose Hamilton order is the identity, so
position and vertex id coincide and layouts can be read directly off the
vertex numbers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arc_system import ArcSystem, make_system
from .errors import BadPartition, KTooSmall, PancycError, SpecConflict
from .graph_core import CycledGraph, ProblemProfile, build_graph

#: Bump this when the chord-sampling scheme changes; fixtures depend on it.
RANDOM_ALGO_VERSION = 1


def erdos_construction(k: int) -> CycledGraph:
    """Ring of k cliques of size k-2, joined by single disjoint bridge edges.

    The result is Hamiltonian with independence number exactly k, yet misses
    cycle length k-1 entirely: a cycle either stays inside one clique (length
    at most k-2) or must cross every bridge, forcing at least two vertices
    per clique and hence length at least 2k.
    """
    if k <= 3:
        raise KTooSmall(
            f"k={k} leaves cliques of size {k - 2} with no room for two bridge ends"
        )
    s = k - 2
    n = k * s
    edges: list[tuple[int, int]] = []
    for i in range(k):
        block = range(i * s, (i + 1) * s)
        edges.extend((u, v) for u in block for v in block if u < v)
        edges.append(((i + 1) * s - 1, ((i + 1) * s) % n))
    return build_graph(n, edges, list(range(n)))


def random_bounded_alpha(k: int, n: int, seed: int, rate: float = 0.0) -> CycledGraph:
    """Hamiltonian graph with alpha <= k: a clique cover by contiguous blocks.

    The cycle C_n is cut into min(k, n) contiguous blocks of near-equal size,
    each completed into a clique; extra chords are then sampled independently
    at ``rate`` over the lexicographically sorted non-edges (version
    RANDOM_ALGO_VERSION of the scheme, Mersenne Twister under ``seed``).
    rate=1 gives the complete graph; output is deterministic per seed.
    """
    if k < 1:
        raise BadPartition(f"need at least one block, got k={k}")
    if n < 3:
        raise BadPartition(f"need n >= 3 vertices, got n={n}")
    if not 0.0 <= rate <= 1.0:
        raise BadPartition(f"chord rate must lie in [0, 1], got {rate}")
    b = min(k, n)
    sizes = [n // b + (1 if i < n % b else 0) for i in range(b)]
    edges: set[tuple[int, int]] = set()
    start = 0
    for sz in sizes:
        block = range(start, start + sz)
        edges.update((u, v) for u in block for v in block if u < v)
        start += sz
    for i in range(n):
        u, v = i, (i + 1) % n
        edges.add((min(u, v), max(u, v)))
    rng = random.Random(seed)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < rate:
                edges.add((u, v))
    return build_graph(n, sorted(edges), list(range(n)))


# ---------------------------------------------------------------------------
# planted layouts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureLayout:
    """A ring with planted chords and a pre-specified arc system.

    ``arcs`` lists each arc's member vertices in arc order; ``chords`` the
    extra edges on top of the Hamilton ring; ``w`` the problematic set (the
    degree rule is disabled for planted instances).
    """

    n: int
    k: int
    arcs: tuple[tuple[int, ...], ...]
    chords: tuple[tuple[int, int], ...]
    w: frozenset[int] = field(default_factory=frozenset)


def plant_m2_fixture(layout: FixtureLayout) -> tuple[CycledGraph, ArcSystem]:
    """Materialize a layout: ring + chords, arc system built and validated.

    Inconsistent layouts (consecutive arc members, overlapping closures,
    chords that are not real chords) come back as SpecConflict.
    """
    ring = [(i, (i + 1) % layout.n) for i in range(layout.n)]
    try:
        g = build_graph(layout.n, ring + list(layout.chords), list(range(layout.n)))
    except PancycError as err:
        raise SpecConflict(f"layout graph is inconsistent: {err}") from err
    for u, v in layout.chords:
        if (v - u) % layout.n in (1, layout.n - 1):
            raise SpecConflict(f"chord ({u},{v}) lies on the Hamilton ring")
    prof = ProblemProfile(
        w=frozenset(layout.w),
        k=layout.k,
        degree_threshold=-1,
        problematic=frozenset(layout.w),
    )
    try:
        sys = make_system(g, prof, list(layout.arcs))
    except PancycError as err:
        raise SpecConflict(f"layout arcs are inconsistent: {err}") from err
    return g, sys


# A single long arc with a chord across it: chord_shortcut territory.
LAYOUT_CHORD = FixtureLayout(
    n=36, k=7,
    arcs=((24, 26, 28, 30),),
    chords=((24, 30),),
)

# Two arcs joined by two interleaving chords: crossing_m2_surgery.
LAYOUT_CROSSING = FixtureLayout(
    n=12, k=3,
    arcs=((0, 2), (6, 8)),
    chords=((0, 6), (2, 8)),
)

# Two parallel chord pairs that cross each other: double_m2_surgery.
LAYOUT_DOUBLE_M2 = FixtureLayout(
    n=36, k=4,
    arcs=((26, 28), (5, 7), (16, 18), (34, 0)),
    chords=((26, 7), (28, 5), (34, 18), (0, 16)),
)

# The Type 1 semi-triangle pattern (structural only; no lone surgery exists).
LAYOUT_TYPE1 = FixtureLayout(
    n=18, k=4,
    arcs=((1, 3), (7, 9), (13, 15)),
    chords=((1, 13), (3, 7), (9, 15)),
)

# The Type 2 semi-triangle pattern: semi_triangle_surgery.
LAYOUT_TYPE2 = FixtureLayout(
    n=18, k=4,
    arcs=((1, 3), (7, 9), (13, 15)),
    chords=((1, 7), (3, 13), (9, 15)),
)

# Two Type 1 triangles, the second nested between the first's B and C arcs.
LAYOUT_DOUBLE_T1_CASE_B = FixtureLayout(
    n=36, k=6,
    arcs=((4, 6), (10, 12), (16, 18), (22, 24), (27, 29), (32, 34)),
    chords=((4, 32), (6, 16), (18, 34), (10, 27), (12, 22), (24, 29)),
)

# Two Type 1 triangles, the second tucked between the first's C arc and anchor.
LAYOUT_DOUBLE_T1_CASE_C = FixtureLayout(
    n=36, k=6,
    arcs=((4, 6), (10, 12), (16, 18), (22, 24), (28, 30), (32, 34)),
    chords=((4, 22), (6, 16), (18, 24), (10, 32), (12, 28), (30, 34)),
)
