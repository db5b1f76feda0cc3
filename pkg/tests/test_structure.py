import itertools

import pytest

from qck.graphcore import QuasiCrystalGraph, validate
from qck.structure import (
    Component,
    IsoWitness,
    TheoremViolation,
    check_degree_one,
    components,
    is_bounded_above,
    isomorphic,
    rank_of,
    rank_table,
    unique_highest_weight,
)

from corpus import content_crystal, qpow, quasi_corpus, std, tpow

import oracles


def test_component_sizes_frozen():
    assert sorted(c.size for c in components(qpow(3, 2))) == [3, 6]
    assert sorted(c.size for c in components(qpow(3, 3))) == [1, 4, 4, 4, 4, 10]
    assert sorted(c.size for c in components(tpow(3, 3))) == [1, 8, 8, 10]
    assert [c.size for c in components(std(4))] == [4]


def test_components_sorted_and_disjoint():
    comps = components(qpow(3, 3))
    assert [c.min_vertex for c in comps] == sorted(c.min_vertex for c in comps)
    seen = list(itertools.chain.from_iterable(c.vertices for c in comps))
    assert sorted(seen) == qpow(3, 3).vertex_ids()
    for c in comps:
        assert c.vertices == tuple(sorted(c.vertices))


@pytest.mark.parametrize("name,graph", quasi_corpus())
def test_components_match_brute_force_partition(name, graph):
    arrows = {(x, i): y for x, i, y in graph.edges() if x != y}
    expected = oracles.component_partition(graph.vertex_ids(), arrows)
    got = sorted(c.vertices for c in components(graph))
    assert got == expected


def test_isolated_fully_frozen_vertex_is_its_own_component():
    comps = components(qpow(3, 3))
    singles = [c for c in comps if c.size == 1]
    assert len(singles) == 1
    assert singles[0].vertices == ("321",)
    assert singles[0].hw_vertices == ("321",)


def test_subgraph_restricts_faithfully():
    comp = next(c for c in components(qpow(3, 3)) if c.size == 10)
    sub = comp.subgraph()
    assert sorted(sub.vertex_ids()) == list(comp.vertices)
    assert validate(sub).passed
    g = comp.graph
    for x in comp.vertices:
        assert sub.wt(x) == g.wt(x)
        for i in g.index_set:
            assert sub.eps(x, i) == g.eps(x, i)
            assert sub.f(x, i) == g.f(x, i)


def test_unique_highest_weight_on_corpus():
    for name, graph in quasi_corpus():
        for comp in components(graph):
            hw = unique_highest_weight(comp)
            assert hw in comp.vertices
            assert all(comp.graph.e(hw, i) is None for i in comp.graph.index_set)


def test_unique_highest_weight_violations():
    # two sources lowering onto one sink: two highest-weight vertices
    g = QuasiCrystalGraph(3)
    g.add_vertex("a", (1, 1, 0), (0, 0), (0, 1))
    g.add_vertex("b", (1, 0, 1), (0, 1), (1, 0))
    g.add_vertex("c", (0, 1, 1), (1, 1), (0, 0))
    g.add_edge("a", 2, "c")
    g.add_edge("b", 1, "c")
    (comp,) = components(g)
    assert len(comp.hw_vertices) == 2
    with pytest.raises(TheoremViolation) as info:
        unique_highest_weight(comp)
    assert info.value.lines()

    # a two-cycle has no highest-weight vertex at all
    h = QuasiCrystalGraph(2)
    h.add_vertex("x", (1, 0), (1,), (1,))
    h.add_vertex("y", (1, 0), (1,), (1,))
    h.set_lowering("x", 1, "y")
    h.set_raising("y", 1, "x")
    h.set_lowering("y", 1, "x")
    h.set_raising("x", 1, "y")
    (cyc,) = components(h)
    with pytest.raises(TheoremViolation):
        unique_highest_weight(cyc)


def test_is_bounded_above_on_corpus():
    for name, graph in quasi_corpus():
        assert all(is_bounded_above(c) for c in components(graph))


def test_rank_zero_at_highest_weight_and_steps_of_one():
    for graph in (qpow(3, 3), tpow(3, 2), qpow(2, 4)):
        for comp in components(graph):
            hw = unique_highest_weight(comp)
            assert rank_of(comp, hw) == 0
            for x in comp.vertices:
                for i in comp.graph.index_set:
                    y = comp.graph.f(x, i)
                    if y is not None and y != x:
                        assert rank_of(comp, y) == rank_of(comp, x) + 1


def test_rank_matches_edge_distance_from_highest_weight():
    comp = next(c for c in components(qpow(3, 3)) if c.size == 10)
    hw = unique_highest_weight(comp)
    arrows = {
        (x, i): y
        for x, i, y in comp.subgraph().edges()
        if x != y
    }
    for x in comp.vertices:
        assert rank_of(comp, x) == oracles.bfs_distance(arrows, hw, x)


def test_rank_table_frozen_for_big_component():
    comp = next(c for c in components(qpow(3, 3)) if c.size == 10)
    table = rank_table(comp)
    profile = {}
    for r in table.values():
        profile[r] = profile.get(r, 0) + 1
    assert profile == {0: 1, 1: 1, 2: 2, 3: 2, 4: 2, 5: 1, 6: 1}


def test_rank_of_rejects_vertex_above_highest_weight():
    g = QuasiCrystalGraph(2)
    g.add_vertex("top", (2, 0), (0,), (2,))
    g.add_vertex("down", (4, -2), (1,), (5,))
    g.add_edge("top", 1, "down")
    (comp,) = components(g)
    # "down" hangs below "top" by edges, yet its weight sits strictly higher
    with pytest.raises(TheoremViolation):
        rank_table(comp)


def test_check_degree_one_on_corpus():
    for name, graph in quasi_corpus():
        for comp in components(graph):
            assert check_degree_one(comp).passed


def test_check_degree_one_witness():
    g = QuasiCrystalGraph(3)
    g.add_vertex("r", (2, 0, 0), (0, 0), (2, 0))
    g.add_vertex("s", (1, 1, 0), (1, 0), (1, 1))
    g.add_vertex("t", (2, -1, 1), (0, 1), (2, 0))
    g.add_edge("r", 1, "s")
    g.add_edge("r", 2, "t")
    (comp,) = components(g)
    report = check_degree_one(comp)
    assert not report.passed


def test_isomorphic_pairs_in_quasi_cube():
    comps = components(qpow(3, 3))
    by_min = {c.min_vertex: c for c in comps}
    w = isomorphic(by_min["121"], by_min["211"])
    assert w is not None
    assert w.verify(by_min["121"], by_min["211"]) == []
    assert w.mapping["121"] == "211"
    assert len(w.mapping) == 4


def test_isomorphic_square_components_frozen_mapping():
    comps = components(qpow(3, 2))
    big = next(c for c in comps if c.size == 6)
    small = next(c for c in comps if c.size == 3)
    assert isomorphic(big, small) is None  # different highest weights
    w = isomorphic(small, small)
    assert w is not None and all(k == v for k, v in w.mapping.items())


def test_isomorphic_reports_structural_failure():
    # same highest weight, different shapes: the build must blow up
    a = QuasiCrystalGraph(2)
    a.add_vertex("x", (1, 0), (0,), (1,))
    b = QuasiCrystalGraph(2)
    b.add_vertex("x", (1, 0), (0,), (1,))
    b.add_vertex("y", (0, 1), (1,), (0,))
    b.add_edge("x", 1, "y")
    (ca,) = components(a)
    (cb,) = components(b)
    with pytest.raises(TheoremViolation):
        isomorphic(ca, cb)


def test_iso_witness_verify_catches_corruption():
    comps = components(qpow(3, 3))
    by_min = {c.min_vertex: c for c in comps}
    w = isomorphic(by_min["121"], by_min["211"])
    broken = dict(w.mapping)
    ks = sorted(broken)
    broken[ks[0]], broken[ks[1]] = broken[ks[1]], broken[ks[0]]
    assert IsoWitness(broken).verify(by_min["121"], by_min["211"]) != []


def test_iso_witness_verify_catches_wrong_domain():
    comps = components(qpow(3, 3))
    by_min = {c.min_vertex: c for c in comps}
    w = IsoWitness({"bogus": "211"})
    assert w.verify(by_min["121"], by_min["211"]) != []


def test_all_equal_weight_components_of_corpus_are_isomorphic():
    for name, graph in [("qpow(3,3)", qpow(3, 3)), ("tpow(3,3)", tpow(3, 3))]:
        comps = components(graph)
        for c1, c2 in itertools.combinations(comps, 2):
            w1 = graph.wt(unique_highest_weight(c1))
            w2 = graph.wt(unique_highest_weight(c2))
            got = isomorphic(c1, c2)
            if w1 == w2:
                assert got is not None and got.verify(c1, c2) == []
            else:
                assert got is None
