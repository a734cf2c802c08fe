from collections import Counter

from surfcyc.corpus import COMBOS, MAX_N, MAX_W, fixture_instances
from surfcyc.oracle import CycleClass


def test_size_and_bounds(corpus):
    assert len(corpus) == 120
    for inst in corpus:
        g = inst.graph
        s = g.stats
        assert g.n <= MAX_N and s.g <= 2 and s.b <= 3, inst.name
        if inst.tags["kind"] == "random":
            assert all(1 <= w <= MAX_W and int(w) == w for w in g.weight), inst.name


def test_fixtures_come_first(corpus):
    names = [i.name for i in fixture_instances()]
    assert [i.name for i in corpus[:len(names)]] == names


def test_every_combination_gets_both_weight_kinds(corpus):
    seen = Counter()
    for inst in corpus:
        if inst.tags["kind"] != "random":
            continue
        s = inst.graph.stats
        seen[(s.g, s.b, inst.graph.is_symmetric())] += 1
        assert inst.graph.is_symmetric() == (inst.tags["symmetric"] == "yes")
    for g, b in COMBOS:
        assert seen[(g, b, True)] >= 2 and seen[(g, b, False)] >= 2, (g, b)


def test_every_instance_is_tagged(corpus):
    for inst in corpus:
        for cls in CycleClass:
            v = inst.expected(cls)
            assert v == "NoSuchCycle" or int(v) > 0, inst.name
