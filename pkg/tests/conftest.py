"""Shared fixtures: ring builders, planted engine instances, seeded supplies."""

import random

import pytest
from hypothesis import HealthCheck, settings

from pancyc.arc_system import make_system
from pancyc.graph_core import ProblemProfile, build_graph

settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def ring_plus(n, chords=()):
    """C_n with identity Hamilton order plus the given chords."""
    edges = [(i, (i + 1) % n) for i in range(n)] + list(chords)
    return build_graph(n, edges, list(range(n)))


def arange(a, b):
    """Arc members a, a+2, ..., b (even spacing along the ring)."""
    return tuple(range(a, b + 1, 2))


def w_profile(w, k):
    """Profile whose problematic set is exactly w (degree rule disabled)."""
    return ProblemProfile(
        w=frozenset(w), k=k, degree_threshold=-1, problematic=frozenset(w)
    )


def seeded_graph(seed, n_lo=12, n_hi=26, extra_rate=0.25):
    """Reproducible ring-plus-chords instance for fuzzing runs."""
    rng = random.Random(seed)
    n = rng.randrange(n_lo, n_hi + 1)
    chords = set()
    for u in range(n):
        for v in range(u + 2, n):
            if (u, v) == (0, n - 1):
                continue
            if rng.random() < extra_rate:
                chords.add((u, v))
    return ring_plus(n, sorted(chords))


# ---------------------------------------------------------------------------
# planted engine instances (hand-checked geometry; see test_engine)
# ---------------------------------------------------------------------------

def deep_type1_instance():
    """14-arc system whose search runs Type 1 -> pigeonhole -> double reroute.

    Anchor A assigns its two core vertices across to Q and P (earlier vertex
    to the later arc, forcing Type 1); buffer N anchors the second triangle
    into R1/R2 between P and Q (pigeonhole case B); pantry arcs prop up
    everyone's goodness at demand 1.
    """
    n, k = 200, 50
    arcs = [
        arange(2, 8),                                     # A (anchor)
        arange(10, 16),                                   # N (buffer)
        arange(20, 38),                                   # P
        arange(42, 60),                                   # R1
        arange(64, 82),                                   # R2
        arange(86, 104),                                  # Q
        (108, 110), (114, 116), (120, 122), (126, 128),   # pantries
        (132, 134), (138, 140), (144, 146), (150, 152),
    ]
    chords = [
        (2, 86), (4, 20), (30, 96),       # first triangle: A->Q, A->P, cross
        (10, 64), (12, 42), (52, 74),     # second triangle: N->R2, N->R1, cross
        (22, 108), (24, 114),             # goodness support for L(P)
        (88, 120), (90, 126),             # L(Q)
        (44, 132), (46, 138),             # L(R1)
        (66, 144), (68, 150),             # L(R2)
    ]
    g = ring_plus(n, chords)
    prof = w_profile({0}, k)
    return g, make_system(g, prof, arcs, simple=True)


def type2_instance(with_cross=True):
    """8-arc system that fires a Type 2 reroute (or, with the cross edge
    removed, returns the union of the two recovered independent sets)."""
    n, k = 140, 50
    arcs = [
        arange(2, 8),                                     # A
        (10, 12),                                         # N buffer
        arange(20, 38),                                   # P
        arange(86, 104),                                  # Q
        (108, 110), (114, 116), (120, 122), (126, 128),   # pantries
    ]
    chords = [
        (2, 20), (4, 86),                 # assignments 2->P, 4->Q: Type 2 shape
        (10, 26),                         # N's goodness
        (22, 108), (24, 114),             # L(P)
        (88, 120), (90, 126),             # L(Q)
    ]
    if with_cross:
        chords.append((30, 96))
    g = ring_plus(n, chords)
    prof = w_profile({0}, k)
    return g, make_system(g, prof, arcs, simple=True)


@pytest.fixture
def planted_pipeline_graph():
    """The crossing-M2 instance run_engine resolves in one surgery."""
    return ring_plus(24, [(4, 12), (6, 14)])
