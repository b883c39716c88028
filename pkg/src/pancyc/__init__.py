"""Arc-system and cycle-surgery toolkit for Hamiltonian graphs with bounded
independence number.

The library builds systems of independent arcs along a fixed Hamilton cycle,
refines them until simple, and then hunts for one of two mutually exclusive
witnesses: a large independent set, or a rerouted cycle that covers every
problematic vertex at a forbidden length.  Exact brute-force oracles back
all of it at desk scale.
"""

from .arc_system import (
    Arc,
    ArcGraph,
    ArcSystem,
    M2Result,
    SimplifyOutcome,
    build_arc_graph,
    build_arc_system,
    cross_edges,
    detect_m2,
    make_arc,
    make_system,
    paper_arc_params,
    simplify,
)
from .engine import (
    Constants,
    EngineConfig,
    PeelOutcome,
    TriangleOutcome,
    Witness,
    desk_constants,
    extract_independent_set,
    find_semi_triangle,
    inductive_search,
    main_leftover_split,
    paper_constants,
    peel_until_good,
    run_engine,
    triangle_length,
    witness_from_json,
)
from .errors import PancycError
from .expansion import (
    GoodResult,
    arc_degree,
    arc_neighborhood,
    check_submodular,
    classify_good,
    find_tight_set,
    is_expanding,
    maximal_expanding_subset,
    neighbor_arcs,
)
from .generators import (
    FixtureLayout,
    erdos_construction,
    plant_m2_fixture,
    random_bounded_alpha,
)
from .graph_core import (
    CycledGraph,
    ProblemProfile,
    build_graph,
    chords_cross,
    cyclic_distance,
    dump_graph,
    is_cycle,
    load_graph,
    mark_problematic,
)
from .oracles import (
    CycleSpectrum,
    cycle_spectrum,
    has_cycle_through,
    max_independent_set,
    verify_witness,
)
from .surgery import (
    CycleWitness,
    SemiTriangle,
    SurgeryPlan,
    apply_surgery,
    chord_shortcut,
    crossing_m2_surgery,
    double_m2_surgery,
    double_type1_surgery,
    semi_triangle_surgery,
    validate_contradicting,
)

__version__ = "0.1.0"
