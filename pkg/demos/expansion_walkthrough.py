"""How an arc earns (or loses) its "good" badge.

A vertex set inside one arc is expanding at demand t when every subset Y
reaches at least t*|Y| other arcs.  The greedy sweep returns a canonical
maximal expanding core; the arc is good when that core covers at least
half the arc.  For a vertex left outside the core there is always a tight
set certifying that no matching can absorb it.
"""

from pancyc.arc_system import make_system
from pancyc.expansion import (
    classify_good,
    find_tight_set,
    maximal_expanding_subset,
    neighbor_arcs,
)
from pancyc.graph_core import ProblemProfile, build_graph


def main():
    n = 24
    chords = [(0, 8), (0, 14), (2, 8), (4, 20), (0, 4)]
    edges = [(i, (i + 1) % n) for i in range(n)] + chords
    g = build_graph(n, edges, list(range(n)))
    prof = ProblemProfile(w=frozenset(), k=5, degree_threshold=-1,
                          problematic=frozenset())
    system = make_system(g, prof, [(0, 2, 4), (8, 10), (14, 16), (20, 22)])

    print(f"ring of {n} vertices, chords {chords}")
    for i, arc in enumerate(system.arcs):
        nbrs = {v: neighbor_arcs(system, v, i) for v in arc.vertices}
        print(f"arc {i} = {arc.vertices}: neighbor arcs per vertex {nbrs}")
    print()

    for t in (1, 2):
        print(f"--- demand t = {t} ---")
        for i, arc in enumerate(system.arcs):
            core = maximal_expanding_subset(system, i, t)
            r = classify_good(system, i, t)
            print(f"arc {i}: expanding core {sorted(core)} "
                  f"-> {'good' if r.good else 'bad'}")
            if r.good:
                slots = {v: sorted(s) for v, s in sorted(r.assignment.items())}
                print(f"         assignment {slots}")
            for v in sorted(set(arc.vertices) - core):
                tight = find_tight_set(system, core, v, t)
                print(f"         vertex {v} stays out; tight set {sorted(tight)}")
        print()


if __name__ == "__main__":
    main()
