import pytest
from hypothesis import given, settings, strategies as st

from edgepowers import (
    GeneratorSet,
    Graph,
    InputError,
    delta,
    edge_product_cap,
    realizable_degree_sequence,
    top_bounded_generators,
)
from edgepowers.bounded_powers import bounded_vectors, componentwise_generators
from edgepowers.graphs import complete_graph, connected_components, disjoint_union, path_graph, star_graph

from conftest import brute_delta, brute_generators

P3 = path_graph(3)
K32M = Graph(5, [(0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])


@st.composite
def capped_graphs(draw, max_n=5, max_cap=3):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, b in zip(pairs, mask) if b]
    G = Graph(n, edges)
    missing = G.isolated_vertices()
    if missing:
        # attach isolated vertices so the graph is admissible
        extra = [(v, (v + 1) % n) for v in missing]
        G = Graph(n, set(G.edges) | {tuple(sorted(e)) for e in extra})
    caps = draw(st.lists(st.integers(1, max_cap), min_size=n, max_size=n))
    return G, tuple(caps)


def test_generator_set_normalises():
    gs = GeneratorSet.from_vectors([(1, 1, 0), (0, 1, 1)])
    assert gs.members == ((0, 1, 1), (1, 1, 0)) and gs.degree == 2
    assert (1, 1, 0) in gs and len(gs) == 2
    with pytest.raises(InputError):
        GeneratorSet.from_vectors([(1, 1), (1, 0)])
    with pytest.raises(InputError):
        GeneratorSet.from_vectors([(0, 1, 1), (0, 1, 1)])


def test_realizable():
    assert realizable_degree_sequence(P3, (1, 2, 1))
    assert not realizable_degree_sequence(P3, (2, 1, 1))
    assert realizable_degree_sequence(complete_graph(3), (1, 1, 2))
    assert not realizable_degree_sequence(P3, (1, 1, 1))
    with pytest.raises(InputError):
        realizable_degree_sequence(P3, (1, 1))


def test_delta_examples():
    assert delta(P3, (1, 1, 1)) == 1
    assert delta(P3, (3, 3, 3)) == 3
    assert delta(K32M, (4, 6, 6, 4, 6)) == 10


def test_delta_rejects_bad_caps():
    with pytest.raises(InputError):
        delta(P3, (1, 0, 1))
    with pytest.raises(InputError):
        delta(P3, (1, 1))


def test_generators_examples():
    assert top_bounded_generators(P3, (1, 1, 1)).members == ((0, 1, 1), (1, 1, 0))
    assert set(top_bounded_generators(P3, (3, 3, 3))) == {(3, 3, 0), (2, 3, 1), (1, 3, 2), (0, 3, 3)}
    star = Graph(4, [(0, 3), (1, 3), (2, 3)])
    assert set(top_bounded_generators(star, (1, 1, 1, 2))) == {(1, 1, 0, 2), (1, 0, 1, 2), (0, 1, 1, 2)}


def test_k32_minus_matching_generator_count():
    gens = top_bounded_generators(K32M, (4, 6, 6, 4, 6))
    assert len(gens) == 25 and gens.degree == 20
    assert set(gens) == brute_generators(K32M, (4, 6, 6, 4, 6))


def test_edge_product_cap():
    assert edge_product_cap(P3) == (1, 2, 1)
    assert edge_product_cap(complete_graph(3)) == (2, 2, 2)
    assert edge_product_cap(star_graph(3)) == (1, 1, 1, 3)


@settings(max_examples=120, deadline=None)
@given(capped_graphs(max_n=4, max_cap=3))
def test_against_brute_force(gc):
    G, c = gc
    assert delta(G, c) == brute_delta(G, c)
    assert set(top_bounded_generators(G, c)) == brute_generators(G, c)


@settings(max_examples=100, deadline=None)
@given(capped_graphs())
def test_structural_properties(gc):
    G, c = gc
    q = delta(G, c)
    assert 2 * q <= sum(c)
    gens = top_bounded_generators(G, c)
    assert gens.degree == 2 * q
    for g in gens:
        assert all(x <= y for x, y in zip(g, c))
        assert realizable_degree_sequence(G, g)
    assert not any(realizable_degree_sequence(G, v) for v in bounded_vectors(c, 2 * q + 2))
    bigger = tuple(x + 1 for x in c)
    assert delta(G, bigger) >= q


@settings(max_examples=60, deadline=None)
@given(capped_graphs())
def test_edge_product_cap_gives_single_generator(gc):
    G, _ = gc
    c = edge_product_cap(G)
    assert delta(G, c) == len(G.edges)
    assert top_bounded_generators(G, c).members == (G.degrees(),)


@pytest.mark.parametrize(
    "G",
    [
        disjoint_union(complete_graph(2), path_graph(3)),
        disjoint_union(complete_graph(3), complete_graph(2), complete_graph(2)),
        disjoint_union(path_graph(3), path_graph(3)),
    ],
)
def test_disconnected_is_concatenation(G):
    comps = connected_components(G)
    for caps in [(1,) * G.n, (2,) * G.n, tuple(1 + v % 2 for v in range(G.n))]:
        gens = top_bounded_generators(G, caps)
        assert gens == componentwise_generators(G, caps)
        expected = 1
        for H, labels in comps:
            expected *= len(top_bounded_generators(H, [caps[v] for v in labels]))
        assert len(gens) == expected
