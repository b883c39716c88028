"""Peeling a system down to its good core, or harvesting what falls off.

Arcs that fail the half-rule are peeled: the expanding core is set aside
and the non-expanding remainder B is recorded together with the certified
bound |N(B)| <= 2*|A|*t.  If everything peels, the remainders are pruned
to a low-edge subcollection and fed to the extraction step, which drops
one cover vertex per arc-pair edge and returns an independent set.
"""

import random

from pancyc.arc_system import make_system
from pancyc.engine import desk_constants, extract_independent_set, peel_until_good
from pancyc.graph_core import ProblemProfile, build_graph


def block_system(seed, m=4, arc_size=3, rate=0.5):
    """m arcs on a ring, at most one chord per arc pair (hence simple)."""
    rng = random.Random(seed)
    block = 2 * arc_size + 2
    n = m * block
    arcs = [tuple(range(i * block, i * block + 2 * arc_size - 1, 2))
            for i in range(m)]
    chords = set()
    for i in range(m):
        for j in range(i + 1, m):
            if rng.random() < rate:
                chords.add((rng.choice(arcs[i]), rng.choice(arcs[j])))
    edges = [(i, (i + 1) % n) for i in range(n)] + sorted(chords)
    g = build_graph(n, edges, list(range(n)))
    prof = ProblemProfile(w=frozenset(), k=2 * arc_size,
                          degree_threshold=-1, problematic=frozenset())
    return make_system(g, prof, arcs, simple=True), sorted(chords)


def main():
    for seed in (3, 7, 11):
        system, chords = block_system(seed)
        print(f"seed {seed}: {len(system.arcs)} arcs, chords {chords}")
        trace = []
        out = peel_until_good(system, desk_constants(2, 2), trace)
        for ev in trace:
            if ev["stage"] == "peel_bound":
                print(f"  peeled remainder {ev['b']}: "
                      f"d(B) = {ev['d_b']} <= {ev['bound']}")
        print(f"  outcome: {out.kind}")
        if out.kind == "good":
            print(f"    surviving arcs {out.kept_parent} all good")
        elif out.kind == "independent":
            print(f"    independent set {sorted(out.vertices)}")
        else:
            print(f"    {out.reason}")
        full = extract_independent_set(system)
        print(f"  direct extraction on the full system: {sorted(full)}")
        print()


if __name__ == "__main__":
    main()
