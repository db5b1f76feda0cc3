import random

from qck.graphcore import POS_INF
from qck.mutation import FuzzResult, Mutation, fuzz_graph, random_mutation, run_detectors
from qck.structure import components

from corpus import content_quasi, qpow, std, tpow


def test_run_detectors_quiet_on_clean_graphs():
    # unfrozen graphs are held to the local crystal axioms, frozen ones to
    # the quasi family; either way a clean corpus graph raises nothing
    assert run_detectors(qpow(3, 3)) == []
    assert run_detectors(std(4)) == []
    assert run_detectors(tpow(3, 2)) == []
    assert run_detectors(tpow(3, 3)) == []
    assert run_detectors(content_quasi((2, 1), 3)) == []


def test_run_detectors_orders_core_first():
    g = std(3).copy()
    g.set_epsilon("3", 2, 2)
    failing = run_detectors(g)
    assert failing[0] == "validate"
    assert "seminormal" in failing


def test_run_detectors_core_break_short_circuits_stembridge():
    # a one-sided eps edit breaks the phi/eps/weight relation before the
    # Stembridge comparisons ever run, so the battery stops at the core
    g = std(3).copy()
    g.set_epsilon("2", 1, 2)
    failing = run_detectors(g)
    assert failing == ["validate", "seminormal"]


def test_run_detectors_reaches_stembridge_when_core_is_clean():
    # cross-wire the top color-1 rungs of the two isomorphic 8-vertex
    # components: every stored length and weight is untouched, so the core
    # checks stay green, but zigzag paths now hop between the copies and
    # the commutation comparisons object
    g = tpow(3, 3).copy()
    eights = [c for c in components(g) if c.size == 8]
    assert len(eights) == 2
    (hw1,), (hw2,) = (c.hw_vertices for c in eights)
    d1, d2 = g.f(hw1, 1), g.f(hw2, 1)
    g.set_lowering(hw1, 1, d2)
    g.set_raising(d2, 1, hw1)
    g.set_lowering(hw2, 1, d1)
    g.set_raising(d1, 1, hw2)
    failing = run_detectors(g)
    assert failing
    assert all(name.startswith("S") for name in failing)


def test_run_detectors_flags_deep_quasi_breaks():
    # freezing one string end at an edge target trips the frozen-pair
    # corollary, which only the extended quasi battery inspects
    g = qpow(3, 2).copy()
    target = g.e("12", 1)
    assert target == "11"
    g.set_epsilon(target, 2, POS_INF)
    g.set_phi(target, 2, POS_INF)
    g.set_raising(target, 2, None)
    g.set_lowering(target, 2, None)
    failing = run_detectors(g)
    assert "infs" in failing


def test_random_mutation_leaves_original_untouched():
    g = qpow(3, 2)
    before = g.copy()
    rng = random.Random(5)
    for _ in range(30):
        mutant, m = random_mutation(g, rng)
        assert mutant != g or m.kind == "noop"
    assert g == before


def test_random_mutation_is_seeded():
    g = qpow(3, 2)
    a_mutant, a = random_mutation(g, random.Random(42))
    b_mutant, b = random_mutation(g, random.Random(42))
    assert a.describe() == b.describe()
    assert a_mutant == b_mutant


def test_mutation_describe_shape():
    g = qpow(3, 2)
    _, m = random_mutation(g, random.Random(0))
    parts = m.describe().split("\t")
    assert len(parts) == 4
    assert m.kind in {"eps", "phi", "edge-e", "edge-f", "weight"}
    assert m.vertex in g.vertex_ids()


def test_fuzz_detects_almost_everything():
    result = fuzz_graph(qpow(3, 3), count=150, seed=11)
    assert result.total == 150
    assert result.detected + len(result.silent) == 150
    assert result.rate >= 0.99
    for m, note in result.silent:
        assert note == "mutant is itself a coherent seminormal quasi-crystal"


def test_fuzz_is_deterministic():
    a = fuzz_graph(qpow(3, 2), count=60, seed=3)
    b = fuzz_graph(qpow(3, 2), count=60, seed=3)
    assert a.detected == b.detected
    assert [m.describe() for m, _ in a.silent] == [m.describe() for m, _ in b.silent]


def test_fuzz_result_lines():
    result = FuzzResult(10, 9, [(Mutation("weight", "321", 1, "(1,1,1)->(2,1,1)"), "note")])
    lines = result.lines()
    assert lines[0] == "total\t10"
    assert lines[1] == "detected\t9"
    assert lines[2] == "silent\t1"
    assert lines[3] == "rate\t0.9000"
    assert lines[4].startswith("silent-case\tweight\t321")


def test_fuzz_empty_run():
    result = fuzz_graph(qpow(2, 2), count=0, seed=0)
    assert result.total == 0
    assert result.rate == 1.0
