"""A tour of the cycle reroutes, one planted layout each.

Every reroute takes the Hamilton cycle, deletes a few short runs of
consecutive vertices, and reconnects the loose ends through chords.  The
result is a slightly shorter cycle that still passes through everything
that matters — on these layouts, a "contradicting" cycle of length in
[n-k, n-1] containing all problematic vertices.
"""

from pancyc.generators import (
    LAYOUT_CHORD,
    LAYOUT_CROSSING,
    LAYOUT_DOUBLE_M2,
    LAYOUT_DOUBLE_T1_CASE_B,
    LAYOUT_TYPE2,
    plant_m2_fixture,
)
from pancyc.surgery import (
    SemiTriangle,
    chord_shortcut,
    crossing_m2_surgery,
    double_m2_surgery,
    double_type1_surgery,
    expected_triangle_edges,
    semi_triangle_surgery,
    validate_contradicting,
)


def tri(arcs, a, b, c, type_):
    return SemiTriangle(arcs=arcs, a=a, b=b, c=c, type=type_,
                        edges=expected_triangle_edges(a, b, c, type_))


def show(name, g, prof, witness):
    ok = validate_contradicting(g, prof, witness)
    print(f"{name}: n = {g.n} -> cycle of length {witness.length} "
          f"(contradicting: {ok})")
    print(f"  {witness.cycle}")
    print()


def main():
    g, s = plant_m2_fixture(LAYOUT_CHORD)
    show("single chord shortcut", g, s.prof, chord_shortcut(g, (24, 30)))

    g, s = plant_m2_fixture(LAYOUT_CROSSING)
    show("crossing pair reroute", g, s.prof,
         crossing_m2_surgery(g, 0, 2, 6, 8))

    g, s = plant_m2_fixture(LAYOUT_DOUBLE_M2)
    show("two parallel pairs with a mutual cross", g, s.prof,
         double_m2_surgery(g, (26, 28, 7, 5), (34, 0, 18, 16)))

    g, s = plant_m2_fixture(LAYOUT_TYPE2)
    show("semi-triangle, second pattern", g, s.prof,
         semi_triangle_surgery(g, tri((0, 1, 2), (1, 3), (7, 9),
                                      (13, 15), 2)))

    g, s = plant_m2_fixture(LAYOUT_DOUBLE_T1_CASE_B)
    show("two first-pattern triangles", g, s.prof,
         double_type1_surgery(
             g,
             tri((0, 2, 5), (4, 6), (16, 18), (32, 34), 1),
             tri((1, 3, 4), (10, 12), (22, 24), (27, 29), 1),
             "B"))


if __name__ == "__main__":
    main()
