"""Exact oracles: independence number, cycle spectrum, witness re-checks."""

import networkx as nx
import pytest

from pancyc.engine import Witness
from pancyc.errors import TooLarge
from pancyc.generators import erdos_construction
from pancyc.graph_core import build_graph, is_cycle
from pancyc.oracles import (
    cycle_spectrum,
    has_cycle_through,
    max_independent_set,
    verify_witness,
)
from pancyc.surgery import CycleWitness

from conftest import ring_plus, seeded_graph, w_profile


def test_mis_known_values():
    assert len(max_independent_set(ring_plus(5))) == 2
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)],
                     list(range(5)))
    assert len(max_independent_set(k5)) == 1
    assert len(max_independent_set(ring_plus(8))) == 4
    assert len(max_independent_set(erdos_construction(5))) == 5


def test_mis_result_is_independent_and_maximum():
    for seed in range(25):
        g = seeded_graph(seed, n_lo=8, n_hi=16)
        best = max_independent_set(g)
        for u in best:
            for v in best:
                if u != v:
                    assert not g.has_edge(u, v)
        # cross-check the size against networkx (clique on the complement)
        h = nx.complement(nx.Graph(sorted(g.edges)))
        _, size = nx.max_weight_clique(h, weight=None)
        assert len(best) == size


def test_mis_cap():
    with pytest.raises(TooLarge):
        max_independent_set(ring_plus(100))


def test_spectrum_known_values():
    assert sorted(cycle_spectrum(ring_plus(5)).present) == [5]
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)],
                     list(range(5)))
    sp = cycle_spectrum(k5)
    assert sorted(sp.present) == [3, 4, 5]
    assert sp.pancyclic


def test_spectrum_erdos_k5_lacks_4():
    sp = cycle_spectrum(erdos_construction(5))
    assert 4 not in sp.present
    assert sorted(sp.present) == [3] + list(range(10, 16))


def test_spectrum_cross_check_networkx():
    for seed in (0, 3, 11):
        g = seeded_graph(seed, n_lo=8, n_hi=12, extra_rate=0.3)
        ours = set(cycle_spectrum(g).present)
        h = nx.Graph(sorted(g.edges))
        theirs = {len(c) for c in nx.simple_cycles(h) if len(c) >= 3}
        assert ours == theirs


def test_spectrum_cap():
    with pytest.raises(TooLarge):
        cycle_spectrum(ring_plus(30))


def test_has_cycle_through():
    g = ring_plus(10, [(0, 5)])
    w = has_cycle_through(g, 6, {0, 5})
    assert w is not None and is_cycle(g, w.cycle)
    assert {0, 5} <= set(w.cycle) and w.length == 6
    assert has_cycle_through(g, 4, set()) is None
    # 2 and 7 sit on opposite halves; only the full ring passes both
    assert has_cycle_through(g, 6, {2, 7}) is None


def test_has_cycle_through_full_hamilton():
    g = ring_plus(12)
    w = has_cycle_through(g, 12, {3})
    assert w is not None and w.length == 12


# ---------------------------------------------------------------------------
# witness verification
# ---------------------------------------------------------------------------

def test_verify_independent_set():
    g = ring_plus(8)
    prof = w_profile(set(), 4)
    assert verify_witness(g, prof, Witness("independent_set",
                                           vertices=frozenset({0, 2, 4, 6})))
    assert not verify_witness(g, prof, Witness("independent_set",
                                               vertices=frozenset({0, 1})))
    assert not verify_witness(g, prof, Witness("independent_set",
                                               vertices=frozenset()))
    assert not verify_witness(g, prof, Witness("independent_set",
                                               vertices=frozenset({0, 99})))


def test_verify_contradicting():
    g = ring_plus(12, [(0, 6), (2, 8)])
    prof = w_profile({3}, 3)
    from pancyc.surgery import crossing_m2_surgery
    w = crossing_m2_surgery(g, 0, 2, 6, 8)
    assert verify_witness(g, prof, Witness("contradicting", cycle=w))
    # tamper with the walk
    bad = CycleWitness(cycle=w.cycle[:-1], length=w.length - 1,
                       contains=frozenset())
    assert not verify_witness(g, prof, Witness("contradicting", cycle=bad))
    fake = CycleWitness(cycle=tuple(range(12)), length=12, contains=frozenset())
    assert not verify_witness(g, prof, Witness("contradicting", cycle=fake))


def test_verify_inconclusive_and_junk():
    g = ring_plus(8)
    prof = w_profile(set(), 4)
    assert verify_witness(g, prof, Witness("inconclusive", reason="nothing"))
    assert not verify_witness(g, prof, object())
    assert not verify_witness(g, prof, Witness("wat"))
