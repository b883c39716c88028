"""The family showing the independence bound is tight.

For each k the construction chains k cliques of size k-2 into a ring of
n = k(k-2) vertices.  The graph is Hamiltonian with independence number
exactly k, yet it has no cycle of length k-1: short cycles live inside
single cliques (lengths 3..k-2) and anything using a bridge must walk the
whole ring economy-class (lengths 2k..n).
"""

from pancyc.generators import erdos_construction
from pancyc.oracles import cycle_spectrum, max_independent_set


def main():
    for k in (4, 5, 6):
        g = erdos_construction(k)
        alpha = max_independent_set(g)
        spectrum = cycle_spectrum(g)
        missing = sorted(set(range(3, g.n + 1)) - spectrum.present)
        print(f"k = {k}:  n = {g.n}, edges = {len(g.edges)}")
        print(f"  alpha = {len(alpha)}  (witness {sorted(alpha)})")
        print(f"  cycle lengths present: {spectrum.json_list()}")
        print(f"  absent: {missing}  <- note {k - 1} is always in here")
        print()


if __name__ == "__main__":
    main()
