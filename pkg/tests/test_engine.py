"""Engine: constants, splitting, extraction, peeling, the full recursion."""

import pytest

from conftest import (
    deep_type1_instance,
    ring_plus,
    type2_instance,
    w_profile,
)
from pancyc.arc_system import make_arc, make_system
from pancyc.engine import (
    Constants,
    EngineConfig,
    Witness,
    desk_constants,
    extract_independent_set,
    inductive_search,
    main_leftover_split,
    paper_constants,
    peel_until_good,
    run_engine,
    witness_from_json,
    _verify_out,
)
from pancyc.errors import (
    CoverMissing,
    InsufficientMaterial,
    NotSimple,
    PreconditionViolation,
    SpecConflict,
    TooSmall,
    VerificationFailed,
)
from pancyc.graph_core import mark_problematic
from pancyc.surgery import CycleWitness


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

def test_paper_constants_level_one():
    c = paper_constants(1, 3)
    assert (c.a, c.b) == (30, 4000)
    assert (c.t_good, c.t_assign) == (4, 2)
    assert c.target == 4
    assert c.mode == "paper"


def test_paper_constants_level_two():
    c = paper_constants(2, 3)
    assert (c.a, c.b) == (90, 256_000_000)
    assert (c.t_good, c.t_assign) == (16_000, 4001)
    assert c.target == 10


def test_paper_child_recomputes_demands():
    assert paper_constants(2, 3).child() == paper_constants(1, 3)


def test_desk_child_keeps_demands():
    c = desk_constants(3, 2, t_good=2, t_assign=2)
    kid = c.child()
    assert (kid.p, kid.x, kid.mode) == (2, 2, "custom")
    assert (kid.t_good, kid.t_assign) == (2, 2)
    assert (kid.a, kid.b) == (90, 256_000_000)
    with pytest.raises(PreconditionViolation):
        kid.child().child()


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(p=0, x=2, a=1, b=1, t_good=1, t_assign=1),
        dict(p=2, x=0, a=1, b=1, t_good=1, t_assign=1),
        dict(p=2, x=2, a=1, b=1, t_good=0, t_assign=1),
        dict(p=2, x=2, a=1, b=1, t_good=1, t_assign=0),
    ],
)
def test_constants_validation(kwargs):
    with pytest.raises(PreconditionViolation):
        Constants(**kwargs)


def test_target_growth():
    assert desk_constants(1, 2).target == 3
    assert desk_constants(2, 2).target == 5
    assert desk_constants(3, 2).target == 9
    assert desk_constants(3, 3).target == 28


# ---------------------------------------------------------------------------
# witness serialization
# ---------------------------------------------------------------------------

def test_independent_witness_round_trip():
    w = Witness(kind="independent_set", vertices=frozenset({9, 1, 5}),
                trace=({"stage": "base_extract"},))
    d = w.json_dict()
    assert d["vertices"] == [1, 5, 9]
    back = witness_from_json(d)
    assert back.kind == "independent_set"
    assert back.vertices == frozenset({1, 5, 9})
    assert back.trace == ({"stage": "base_extract"},)


def test_contradicting_witness_round_trip():
    cw = CycleWitness(cycle=(0, 1, 2, 5), length=4, contains=frozenset({0, 1, 2, 5}))
    d = Witness(kind="contradicting", cycle=cw).json_dict()
    assert d["cycle"] == {"cycle": [0, 1, 2, 5], "length": 4, "kind": "contradicting"}
    back = witness_from_json(d)
    assert back.cycle.cycle == (0, 1, 2, 5)
    assert back.cycle.contains == frozenset({0, 1, 2, 5})


def test_inconclusive_witness_round_trip():
    d = Witness(kind="inconclusive", reason="because").json_dict()
    assert witness_from_json(d).reason == "because"


def test_witness_from_json_rejects_unknown_kind():
    with pytest.raises(PreconditionViolation):
        witness_from_json({"kind": "victory"})


# ---------------------------------------------------------------------------
# arc splitting
# ---------------------------------------------------------------------------

def test_split_three_vertex_arc():
    g = ring_plus(20)
    m, l = main_leftover_split(g, make_arc(g, [0, 2, 4]))
    assert l.vertices == (0, 2)
    assert m.vertices == (4,)


def test_split_even_arc():
    g = ring_plus(20)
    m, l = main_leftover_split(g, make_arc(g, [0, 2, 4, 6]))
    assert l.vertices == (0, 2)
    assert m.vertices == (4, 6)


def test_split_singleton_refused():
    g = ring_plus(20)
    with pytest.raises(TooSmall):
        main_leftover_split(g, make_arc(g, [0]))


def test_split_wrapped_arc():
    g = ring_plus(20)
    m, l = main_leftover_split(g, make_arc(g, [17, 19, 1]))
    assert l.vertices == (17, 19)
    assert m.vertices == (1,)


# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------

def test_extract_requires_simple_flag():
    g = ring_plus(20)
    sys = make_system(g, w_profile((), 5), [[0, 2], [6, 8]])
    with pytest.raises(NotSimple):
        extract_independent_set(sys)


def test_extract_no_edges_keeps_all():
    g = ring_plus(20)
    sys = make_system(g, w_profile((), 5), [[0, 2], [6, 8]], simple=True)
    assert extract_independent_set(sys) == frozenset({0, 2, 6, 8})


def test_extract_drops_one_cover_per_pair():
    g = ring_plus(20, [(0, 6), (6, 12)])
    sys = make_system(
        g, w_profile((), 5), [[0, 2], [6, 8], [12, 14]], simple=True
    )
    got = extract_independent_set(sys)
    assert got == frozenset({2, 8, 12, 14})


def test_extract_detects_hidden_m2():
    g = ring_plus(20, [(0, 6), (2, 8)])
    sys = make_system(g, w_profile((), 5), [[0, 2], [6, 8]], simple=True)
    with pytest.raises(NotSimple):
        extract_independent_set(sys)


def test_extract_rejects_intra_arc_edge():
    g = ring_plus(20, [(0, 4)])
    sys = make_system(g, w_profile((), 5), [[0, 2, 4]], simple=True)
    with pytest.raises(VerificationFailed):
        extract_independent_set(sys)


# ---------------------------------------------------------------------------
# peeling
# ---------------------------------------------------------------------------

def _peel_fixture(with_isolated=True):
    g = ring_plus(24, [(8, 14)])
    arcs = ([[0, 2]] if with_isolated else []) + [[8, 10], [14, 16]]
    return g, make_system(g, w_profile((), 3), arcs, simple=True)


def test_peel_all_good_passes_through():
    g, sys = _peel_fixture(with_isolated=False)
    trace = []
    out = peel_until_good(sys, desk_constants(3, 2), trace)
    assert out.kind == "good"
    assert out.kept_parent == [0, 1]
    assert out.system.size == 2
    assert all(r.good for r in out.good.values())
    assert [ev["stage"] for ev in trace] == ["peel_done"]


def test_peel_removes_isolated_arc():
    g, sys = _peel_fixture()
    trace = []
    out = peel_until_good(sys, desk_constants(3, 2), trace)
    assert out.kind == "good"
    assert out.kept_parent == [1, 2]
    assert [a.vertices for a in out.system.arcs] == [(8, 10), (14, 16)]
    bound_ev = next(ev for ev in trace if ev["stage"] == "peel_bound")
    assert bound_ev["b"] == [0, 2]
    assert bound_ev["d_b"] == 0 <= bound_ev["bound"]
    assert trace[-1] == {"stage": "peel_done", "good_arcs": 2, "peeled": 1}


def test_peel_everything_extracts_independent():
    g = ring_plus(24)
    sys = make_system(
        g, w_profile((), 3), [[0, 2], [8, 10], [14, 16]], simple=True
    )
    trace = []
    out = peel_until_good(sys, desk_constants(2, 2), trace)
    assert out.kind == "independent"
    assert out.vertices == frozenset({0, 2, 8, 10, 14, 16})
    ev = next(e for e in trace if e["stage"] == "peel_extract")
    assert ev["size"] == 6 and ev["target"] == 5


def test_peel_everything_can_fall_short():
    g = ring_plus(24)
    sys = make_system(
        g, w_profile((), 3), [[0, 2], [8, 10], [14, 16]], simple=True
    )
    out = peel_until_good(sys, desk_constants(2, 3))
    assert out.kind == "inconclusive"
    assert "6 < target 10" in out.reason


def test_peel_requires_simple():
    g = ring_plus(24)
    sys = make_system(g, w_profile((), 3), [[0, 2]])
    with pytest.raises(NotSimple):
        peel_until_good(sys, desk_constants(2, 2))


# ---------------------------------------------------------------------------
# inductive search: base levels
# ---------------------------------------------------------------------------

def test_level_one_returns_whole_arc():
    g = ring_plus(20)
    sys = make_system(g, w_profile((), 7), [[0, 2, 4]], simple=True)
    wit = inductive_search(sys, desk_constants(1, 2))
    assert wit.kind == "independent_set"
    assert wit.vertices == frozenset({0, 2, 4})
    assert wit.trace[-1] == {"stage": "base_whole_arc", "size": 3}


def test_level_one_shortfall():
    g = ring_plus(20)
    sys = make_system(g, w_profile((), 7), [[0, 2, 4]], simple=True)
    wit = inductive_search(sys, desk_constants(1, 3))
    assert wit.kind == "inconclusive"
    assert "target 4" in wit.reason


def test_intra_arc_edge_becomes_shortcut_at_any_level():
    g = ring_plus(20, [(0, 4)])
    sys = make_system(g, w_profile((), 7), [[0, 2, 4]], simple=True)
    for p in (1, 2, 3):
        wit = inductive_search(sys, desk_constants(p, 2))
        assert wit.kind == "contradicting"
        assert wit.cycle.length == 17
        assert wit.trace[-1]["stage"] == "chord_shortcut"


def test_shortcut_outside_bounds_is_inconclusive():
    g = ring_plus(20, [(0, 4)])
    sys = make_system(g, w_profile((), 2), [[0, 2, 4]], simple=True)
    wit = inductive_search(sys, desk_constants(1, 2))
    assert wit.kind == "inconclusive"
    assert wit.trace[-1]["stage"] == "shortcut_bounds_failed"


def test_level_two_extracts():
    g = ring_plus(20, [(0, 6)])
    sys = make_system(
        g, w_profile((), 5), [[0, 2], [6, 8], [12, 14]], simple=True
    )
    wit = inductive_search(sys, desk_constants(2, 2))
    assert wit.kind == "independent_set"
    assert wit.vertices == frozenset({2, 6, 8, 12, 14})
    assert wit.trace[-1] == {"stage": "base_extract", "size": 5, "target": 5}


def test_level_two_shortfall():
    g = ring_plus(20, [(0, 6)])
    sys = make_system(
        g, w_profile((), 5), [[0, 2], [6, 8], [12, 14]], simple=True
    )
    wit = inductive_search(sys, desk_constants(2, 3))
    assert wit.kind == "inconclusive"


def test_search_requires_simple_and_nonempty():
    g = ring_plus(20)
    plain = make_system(g, w_profile((), 5), [[0, 2]])
    with pytest.raises(NotSimple):
        inductive_search(plain, desk_constants(1, 1))
    empty = make_system(g, w_profile((), 5), [], simple=True)
    wit = inductive_search(empty, desk_constants(1, 1))
    assert wit.kind == "inconclusive" and "empty" in wit.reason


# ---------------------------------------------------------------------------
# inductive search: the deep level
# ---------------------------------------------------------------------------

def test_deep_search_double_reroute():
    g, sys = deep_type1_instance()
    wit = inductive_search(sys, desk_constants(3, 2))
    assert wit.kind == "contradicting"
    assert wit.cycle.length == 162
    assert 0 in wit.cycle.contains  # the problematic vertex survives
    stages = [ev["stage"] for ev in wit.trace]
    assert stages == [
        "peel_done", "good_system", "base_extract", "base_extract",
        "triangle", "pigeonhole", "base_extract", "base_extract",
        "triangle", "double_type1",
    ]
    tris = [ev for ev in wit.trace if ev["stage"] == "triangle"]
    assert [t["type"] for t in tris] == [1, 1]
    assert tris[0]["arcs"] == [0, 2, 5]
    assert tris[1]["arcs"] == [1, 3, 4]
    pig = next(ev for ev in wit.trace if ev["stage"] == "pigeonhole")
    assert pig["picked"] == "B"
    assert pig["region_counts"] == {"A": 0, "B": 2, "C": 0}
    assert wit.trace[-1] == {"stage": "double_type1", "case": "B", "length": 162}


def test_deep_search_type2_fires_directly():
    g, sys = type2_instance()
    wit = inductive_search(sys, desk_constants(3, 2))
    assert wit.kind == "contradicting"
    assert wit.cycle.length == 121
    tri = next(ev for ev in wit.trace if ev["stage"] == "triangle")
    assert tri["type"] == 2
    assert tri["arcs"] == [0, 2, 3]


def test_deep_search_cross_free_union():
    g, sys = type2_instance(with_cross=False)
    wit = inductive_search(sys, desk_constants(3, 2))
    assert wit.kind == "independent_set"
    assert wit.vertices == frozenset(
        {30, 32, 34, 36, 38, 96, 98, 100, 102, 104}
    )
    assert wit.trace[-1]["stage"] == "triangle_union"
    assert wit.trace[-1]["size"] == 10


def test_deep_search_is_deterministic():
    runs = []
    for _ in range(2):
        g, sys = deep_type1_instance()
        runs.append(inductive_search(sys, desk_constants(3, 2)).json_dict())
    assert runs[0] == runs[1]


# ---------------------------------------------------------------------------
# run_engine end to end
# ---------------------------------------------------------------------------

def _pipeline_cfg(**kw):
    base = dict(
        constants=desk_constants(2, 2), arc_len=2, degree_threshold=1
    )
    base.update(kw)
    return EngineConfig(**base)


def test_run_engine_crossing_pipeline(planted_pipeline_graph):
    wit = run_engine(planted_pipeline_graph, {3}, 5, _pipeline_cfg())
    assert wit.kind == "contradicting"
    assert wit.cycle.length == 22
    assert 3 in wit.cycle.contains
    assert [ev["stage"] for ev in wit.trace] == [
        "profile", "build", "simplify_surgery"
    ]
    build = wit.trace[1]
    assert build["arcs"] == 5 and build["independent"]


def test_run_engine_honors_want(planted_pipeline_graph):
    wit = run_engine(planted_pipeline_graph, {3}, 5, _pipeline_cfg(want=3))
    assert wit.trace[1]["arcs"] == 3
    assert wit.kind == "contradicting"


def test_run_engine_rejects_oversized_closures(planted_pipeline_graph):
    with pytest.raises(SpecConflict):
        run_engine(planted_pipeline_graph, {3}, 4, _pipeline_cfg(arc_len=3))


def test_run_engine_attaches_trace_to_build_failure(planted_pipeline_graph):
    with pytest.raises(InsufficientMaterial) as e:
        run_engine(planted_pipeline_graph, {3}, 5, _pipeline_cfg(want=10))
    assert e.value.got == 5
    assert [ev["stage"] for ev in e.value.trace] == ["profile"]


def test_run_engine_default_threshold_swamps_sparse_rings(planted_pipeline_graph):
    # degree_threshold = None means 2k, and every ring vertex fails it
    with pytest.raises(InsufficientMaterial) as e:
        run_engine(
            planted_pipeline_graph, {3}, 5,
            EngineConfig(constants=desk_constants(2, 2), arc_len=2),
        )
    assert e.value.got == 0


def test_run_engine_output_verifies_cleanly(planted_pipeline_graph):
    wit = run_engine(planted_pipeline_graph, {3}, 5, _pipeline_cfg())
    back = witness_from_json(wit.json_dict())
    assert back.kind == wit.kind
    assert back.cycle.cycle == wit.cycle.cycle


def test_verify_out_rejects_tampered_cycle(planted_pipeline_graph):
    g = planted_pipeline_graph
    prof = mark_problematic(g, {3}, 5, 1)
    wit = run_engine(g, {3}, 5, _pipeline_cfg())
    walk = list(wit.cycle.cycle)
    walk[2], walk[5] = walk[5], walk[2]
    fake = Witness(
        kind="contradicting",
        cycle=CycleWitness(
            cycle=tuple(walk), length=len(walk), contains=frozenset(walk)
        ),
    )
    with pytest.raises(VerificationFailed):
        _verify_out(g, prof, fake)


def test_verify_out_rejects_dependent_vertices(planted_pipeline_graph):
    g = planted_pipeline_graph
    prof = mark_problematic(g, {3}, 5, 1)
    fake = Witness(kind="independent_set", vertices=frozenset({0, 1}))
    with pytest.raises(VerificationFailed):
        _verify_out(g, prof, fake)
