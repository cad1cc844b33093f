import pytest

from skewgain import (
    GraphFamily,
    build_graph,
    cycle_gain,
    elementary_subgraphs,
    essential_spanning_subgraphs,
    fixture,
    generate,
    matchings,
)
from skewgain.core import disjoint_union
from skewgain.enumeration import canonical_cycle, simple_cycles
from skewgain.errors import CapExceeded, NotACycle

from corpus import random_corpus
from oracles import brute_elementary, brute_essential, brute_matchings


def _k4():
    return build_graph(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])


def test_elementary_triangle():
    subs = list(elementary_subgraphs(fixture("FX-C3")))
    assert len(subs) == 4
    assert [s.edge_ids for s in subs] == [(0,), (0, 1, 2), (2,), (1,)]
    assert subs[1].cycle_components == ((0, 1, 2),)


def test_elementary_path():
    assert [s.edge_ids for s in elementary_subgraphs(fixture("FX-P3"))] == [(0,), (1,)]


def test_elementary_k4():
    subs = list(elementary_subgraphs(_k4()))
    assert len(subs) == 16
    kinds = {}
    for s in subs:
        key = (len(s.edge_components), tuple(len(c) for c in s.cycle_components))
        kinds[key] = kinds.get(key, 0) + 1
    assert kinds == {(1, ()): 6, (2, ()): 3, (0, (3,)): 4, (0, (4,)): 3}


def test_matchings_examples():
    assert [m.edges for m in matchings(fixture("FX-P3"))] == [(0,), (1,)]
    c4 = list(matchings(fixture("FX-C4")))
    assert len(c4) == 6 and sum(1 for m in c4 if m.size == 2) == 2
    assert [m.edges for m in matchings(build_graph(2, [(0, 1, 1)]))] == [(0,)]


def test_essential_examples():
    u4 = list(essential_spanning_subgraphs(fixture("FX-U4")))
    assert len(u4) == 5
    assert sorted(f.edges for f in u4) == [tuple(i for i in range(5) if i != k) for k in (4, 3, 2, 1, 0)]
    assert list(essential_spanning_subgraphs(fixture("FX-P3"))) == []
    c3 = list(essential_spanning_subgraphs(fixture("FX-C3")))
    assert len(c3) == 1 and c3[0].components[0].cycle == (0, 1, 2)


def test_essential_certificates_disconnected():
    G = disjoint_union([fixture("FX-C3"), fixture("FX-C3P")])
    (forest,) = essential_spanning_subgraphs(G)
    assert [c.cycle for c in forest.components] == [(0, 1, 2), (3, 4, 5)]
    assert forest.components[1].tree_edges == (6,)


def test_enumerators_match_brute_force():
    graphs = random_corpus(150, seed=31) + [_k4(), fixture("FX-U4"), fixture("FX-C3P")]
    for G in graphs:
        assert [s.edge_ids for s in elementary_subgraphs(G)] == \
            sorted(brute_elementary(G), key=lambda ids: (_covered(G, ids), ids))
        assert [m.edges for m in matchings(G)] == brute_matchings(G)
        assert [f.edges for f in essential_spanning_subgraphs(G)] == brute_essential(G)


def _covered(G, ids):
    return tuple(sorted({v for i in ids for v in (G.edges[i].tail, G.edges[i].head)}))


def test_streams_are_duplicate_free():
    for G in random_corpus(60, seed=32):
        for stream in (elementary_subgraphs(G), matchings(G), essential_spanning_subgraphs(G)):
            items = list(stream)
            assert len(items) == len(set(items))


def test_cap():
    G = generate(GraphFamily("complete_bipartite", {"p": 5, "q": 5}))
    for enum in (elementary_subgraphs, matchings, essential_spanning_subgraphs):
        with pytest.raises(CapExceeded):
            enum(G, cap=24)
    assert len(list(matchings(fixture("FX-C4"), cap=4))) == 6
    with pytest.raises(CapExceeded):
        matchings(fixture("FX-C4"), cap=3)


def test_simple_cycles_k4():
    cycles = simple_cycles(_k4())
    assert len(cycles) == 7
    assert all(c == canonical_cycle(c) for c in cycles)


def test_canonical_cycle():
    assert canonical_cycle([2, 0, 1]) == (0, 1, 2)
    assert canonical_cycle([1, 0, 2]) == (0, 1, 2)
    assert canonical_cycle([3, 1, 4, 2]) == (1, 3, 2, 4)


def test_cycle_gain_examples():
    G = fixture("FX-C3")
    assert cycle_gain(G, [0, 1, 2]) == (-30, -60)
    assert cycle_gain(G, [0, 2, 1]) == (-30, -60)
    ones = fixture("FX-C4")
    assert cycle_gain(ones, [0, 1, 2, 3]) == (1, 2)


def test_cycle_gain_invariant_over_traversals():
    for backend in ("rational-id", "complex-conj"):
        for seed in range(15):
            for n in (3, 4, 5, 6):
                G = generate(GraphFamily("cycle", {"n": n}), "random", seed, backend)
                base = list(range(n))
                sym = cycle_gain(G, base)[1]
                for start in range(n):
                    for order in (base, base[::-1]):
                        walk = order[start:] + order[:start]
                        assert G.backend.eq(cycle_gain(G, walk)[1], sym)


def test_cycle_gain_complex_direction():
    G = generate(GraphFamily("cycle", {"n": 3}), ["i", "1", "1"], backend="complex-conj")
    assert cycle_gain(G, [0, 1, 2])[0] == 1j
    assert cycle_gain(G, [0, 2, 1])[0] == -1j
    assert cycle_gain(G, [0, 1, 2])[1] == 0


def test_cycle_gain_rejects():
    with pytest.raises(NotACycle):
        cycle_gain(fixture("FX-P3"), [0, 1, 2])
    with pytest.raises(NotACycle):
        cycle_gain(fixture("FX-C3"), [0, 1])
