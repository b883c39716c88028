"""Instance factories: clique rings, seeded random graphs, planted layouts."""

import pytest

from pancyc.errors import BadPartition, KTooSmall, SpecConflict
from pancyc.generators import (
    LAYOUT_CHORD,
    LAYOUT_CROSSING,
    LAYOUT_DOUBLE_M2,
    LAYOUT_DOUBLE_T1_CASE_B,
    LAYOUT_DOUBLE_T1_CASE_C,
    LAYOUT_TYPE1,
    LAYOUT_TYPE2,
    RANDOM_ALGO_VERSION,
    FixtureLayout,
    erdos_construction,
    plant_m2_fixture,
    random_bounded_alpha,
)
from pancyc.oracles import cycle_spectrum, max_independent_set

ALL_LAYOUTS = [
    LAYOUT_CHORD,
    LAYOUT_CROSSING,
    LAYOUT_DOUBLE_M2,
    LAYOUT_TYPE1,
    LAYOUT_TYPE2,
    LAYOUT_DOUBLE_T1_CASE_B,
    LAYOUT_DOUBLE_T1_CASE_C,
]


# ---------------------------------------------------------------------------
# the clique-ring construction
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k", [4, 5, 6])
def test_clique_ring_spectrum_has_the_prescribed_gap(k):
    g = erdos_construction(k)
    assert g.n == k * (k - 2)
    spec = cycle_spectrum(g)
    expected = set(range(3, k - 1)) | set(range(2 * k, g.n + 1))
    assert spec.present == expected
    assert k - 1 not in spec.present
    assert not spec.pancyclic


@pytest.mark.parametrize("k", [4, 5, 6])
def test_clique_ring_independence_number(k):
    g = erdos_construction(k)
    assert len(max_independent_set(g)) == k


def test_clique_ring_is_hamiltonian_in_identity_order():
    g = erdos_construction(5)
    assert g.ham_order == tuple(range(15))
    assert all(g.has_edge(i, (i + 1) % 15) for i in range(15))


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_clique_ring_needs_room_for_bridges(k):
    with pytest.raises(KTooSmall):
        erdos_construction(k)


# ---------------------------------------------------------------------------
# seeded random instances
# ---------------------------------------------------------------------------

def test_random_is_deterministic_per_seed():
    a = random_bounded_alpha(4, 20, seed=7, rate=0.3)
    b = random_bounded_alpha(4, 20, seed=7, rate=0.3)
    assert a.edges == b.edges
    c = random_bounded_alpha(4, 20, seed=8, rate=0.3)
    assert a.edges != c.edges


def test_random_rate_zero_is_blocks_plus_ring():
    g = random_bounded_alpha(3, 9, seed=1)
    blocks = [(u, v) for s in (0, 3, 6) for u in range(s, s + 3)
              for v in range(u + 1, s + 3)]
    ring = [(i, i + 1) for i in range(8)] + [(0, 8)]
    assert g.edges == frozenset(blocks) | frozenset(ring)


def test_random_rate_one_is_complete():
    g = random_bounded_alpha(3, 10, seed=0, rate=1.0)
    assert len(g.edges) == 45


def test_random_single_block_is_complete():
    g = random_bounded_alpha(1, 8, seed=0)
    assert len(g.edges) == 28


def test_random_big_k_degenerates_to_ring():
    g = random_bounded_alpha(50, 10, seed=0)
    assert g.edges == frozenset(
        (min(i, (i + 1) % 10), max(i, (i + 1) % 10)) for i in range(10)
    )


@pytest.mark.parametrize("seed", range(10))
def test_random_independence_stays_bounded(seed):
    k, n = 4, 20
    for rate in (0.0, 0.15):
        g = random_bounded_alpha(k, n, seed=seed, rate=rate)
        assert len(max_independent_set(g)) <= k


def test_random_blocks_of_three_reach_the_bound_exactly():
    g = random_bounded_alpha(4, 12, seed=3)
    assert len(max_independent_set(g)) == 4


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(k=0, n=10, seed=0),
        dict(k=3, n=2, seed=0),
        dict(k=3, n=10, seed=0, rate=-0.1),
        dict(k=3, n=10, seed=0, rate=1.1),
    ],
)
def test_random_rejects_bad_partitions(kwargs):
    with pytest.raises(BadPartition):
        random_bounded_alpha(**kwargs)


def test_scheme_version_is_pinned():
    assert RANDOM_ALGO_VERSION == 1


# ---------------------------------------------------------------------------
# planted layouts
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("layout", ALL_LAYOUTS)
def test_layouts_materialize(layout):
    g, sys = plant_m2_fixture(layout)
    assert g.n == layout.n
    assert g.ham_order == tuple(range(layout.n))
    assert sys.size == len(layout.arcs)
    assert sys.independent
    assert {a.vertices for a in sys.arcs} == set(layout.arcs)
    for u, v in layout.chords:
        assert g.has_edge(u, v)
    assert sys.prof.k == layout.k
    assert sys.prof.problematic == layout.w
    assert sys.prof.degree_threshold == -1


def test_layout_rejects_consecutive_members():
    bad = FixtureLayout(n=12, k=3, arcs=((0, 1),), chords=())
    with pytest.raises(SpecConflict):
        plant_m2_fixture(bad)


@pytest.mark.parametrize("chord", [(0, 1), (0, 11)])
def test_layout_rejects_ring_chords(chord):
    bad = FixtureLayout(n=12, k=3, arcs=((0, 2),), chords=(chord,))
    with pytest.raises(SpecConflict):
        plant_m2_fixture(bad)


def test_layout_rejects_overlapping_closures():
    bad = FixtureLayout(n=12, k=5, arcs=((0, 2, 4), (3, 7)), chords=())
    with pytest.raises(SpecConflict):
        plant_m2_fixture(bad)


def test_layout_rejects_problematic_inside_closure():
    bad = FixtureLayout(n=12, k=3, arcs=((0, 2),), chords=(), w=frozenset({1}))
    with pytest.raises(SpecConflict):
        plant_m2_fixture(bad)


def test_layout_rejects_out_of_range_chord():
    bad = FixtureLayout(n=12, k=3, arcs=((0, 2),), chords=((0, 99),))
    with pytest.raises(SpecConflict):
        plant_m2_fixture(bad)
