"""Hypergraph construction, orderings, colorings and graph views."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import (
    ColorCountTooSmall,
    DegenerateLink,
    Disconnected,
    EmptyEdge,
    NotAGraph,
    NotAntichain,
    VertexOutOfRange,
)
from hypercomb.bits import mask_of, minimal_masks, vertices_of
from hypercomb.coloring import Coloring, all_proper_colorings, proper_coloring
from hypercomb.complex import SimplicialComplexView
from hypercomb.graphs import IntersectionGraph, diameter, intersection_graph
from hypercomb.hypergraph import antistar, induced, leaves, link, make_hypergraph
from hypercomb.orderings import forest_ordering, tree_ordering
from hypercomb.sampling import random_hyperforest, random_hypergraph, random_hypertree
from atlas.families import Family, FamilySpec, family_variable_names, generate
from tests.conftest import path_graph, small_ideals, star_graph


def test_mask_helpers():
    assert mask_of([1, 3]) == 0b101
    assert list(vertices_of(0b10110)) == [2, 3, 5]
    assert minimal_masks([0b111, 0b011, 0b011, 0b100]) == [0b100, 0b011]


def test_make_hypergraph_examples():
    """Antichain validation and minimalization."""
    assert make_hypergraph(3, [{1, 2}, {2, 3}]).t == 2
    G = make_hypergraph(3, [{1, 2}, {1, 2, 3}], minimalize=True)
    assert G.edges == (frozenset({1, 2}),)
    with pytest.raises(NotAntichain):
        make_hypergraph(3, [{1, 2}, {1, 2, 3}])
    with pytest.raises(NotAntichain):
        make_hypergraph(3, [{1, 2}, {2, 1}])
    with pytest.raises(EmptyEdge):
        make_hypergraph(3, [set()])
    with pytest.raises(VertexOutOfRange):
        make_hypergraph(3, [{1, 4}])


def test_edges_are_canonically_ordered():
    G = make_hypergraph(5, [{4, 5}, {1, 2, 3}, {1, 4}])
    assert [sorted(e) for e in G.edges] == [[1, 4], [4, 5], [1, 2, 3]]
    assert not G.is_pure
    assert G.degree == 3


def test_induced():
    P = path_graph(3)
    assert induced(P, {1, 2}).labeled_edges() == (frozenset({1, 2}),)
    empty = induced(P, set())
    assert empty.n == 0 and empty.t == 0
    assert induced(make_hypergraph(3, [{1, 2, 3}]), {1, 2}).t == 0


def test_induced_keeps_original_labels():
    G = make_hypergraph(5, [{2, 4}, {4, 5}])
    H = induced(G, {2, 4, 5})
    assert H.n == 3
    assert set(H.labeled_edges()) == {frozenset({2, 4}), frozenset({4, 5})}


def test_link():
    assert set(link(path_graph(3), 2).labeled_edges()) == {frozenset({1}), frozenset({3})}
    triangle = make_hypergraph(3, [{1, 2}, {1, 3}, {2, 3}])
    assert set(link(triangle, 1).labeled_edges()) == {frozenset({2}), frozenset({3})}
    with pytest.raises(DegenerateLink):
        link(make_hypergraph(1, [{1}]), 1)


def test_antistar():
    assert antistar(path_graph(3), 2).t == 0
    G = antistar(make_hypergraph(4, [{1, 2}, {3, 4}]), 1)
    assert G.labeled_edges() == (frozenset({3, 4}),)
    single = antistar(make_hypergraph(3, [{1, 2, 3}]), 3)
    assert single.n == 2 and single.t == 0


def test_orderings():
    P = path_graph(4)
    forest = forest_ordering(P)
    assert forest is not None and forest.new_counts[0] == 2
    assert all(c >= 1 for c in forest.new_counts[1:])
    tree = tree_ordering(P)
    assert tree is not None and tree.new_counts == (2, 1, 1)

    triangle = make_hypergraph(3, [{1, 2}, {1, 3}, {2, 3}])
    assert forest_ordering(triangle) is None
    assert tree_ordering(make_hypergraph(4, [{1, 2}, {3, 4}])) is None
    assert forest_ordering(make_hypergraph(3, [{1, 2, 3}])).order == (1,)


def test_tree_ordering_requires_purity():
    G = make_hypergraph(4, [{1, 2, 3}, {3, 4}])
    assert tree_ordering(G) is None
    assert forest_ordering(G) is not None


@pytest.mark.parametrize("d,sizes", [(2, (2, 2)), (2, (1, 4)), (3, (2, 3, 1)), (3, (4, 4, 4)), (4, (1, 2, 1, 3))])
def test_extremal_hypertree_is_a_hypertree(d, sizes):
    """The construction adds one new u vertex per edge and colors v_i, u_{i,j} alike."""
    spec = FamilySpec(Family.EXTREMAL_HYPERTREE, (d, *sizes))
    G = generate(spec)
    assert tree_ordering(G) is not None
    coloring = proper_coloring(G, d)
    assert coloring is not None
    assert sorted(coloring.class_sizes()) == sorted(sizes)
    names = family_variable_names(spec)
    for i in range(1, d + 1):
        same = {v for v, name in enumerate(names, start=1) if name == f"v{i}" or name.startswith(f"u{i}_")}
        assert {coloring.color(v) for v in same} == {coloring.color(i)}


def test_proper_coloring_examples(triangle):
    P = path_graph(3)
    coloring = proper_coloring(P, 2)
    assert coloring is not None
    assert coloring.same_up_to_permutation(Coloring((1, 2, 1), 2))
    assert proper_coloring(triangle, 2) is None
    with pytest.raises(ColorCountTooSmall):
        proper_coloring(make_hypergraph(3, [{1, 2, 3}]), 2)


def test_hypertree_coloring_is_unique_up_to_permutation(rng):
    for _ in range(20):
        G = random_hypertree(3, rng.randint(3, 7), rng)
        colorings = all_proper_colorings(G, 3)
        assert colorings
        assert all(c.same_up_to_permutation(colorings[0]) for c in colorings)


def test_propagation_falls_back_on_non_colorable_orderings():
    """Has a hypertree ordering but no proper 3-coloring."""
    G = make_hypergraph(5, [{1, 2, 3}, {1, 2, 4}, {3, 4, 5}])
    assert tree_ordering(G) is not None
    assert proper_coloring(G, 3) is None
    assert proper_coloring(G, 4) is not None


def test_leaves():
    assert leaves(path_graph(3)) == frozenset({1, 3})
    assert leaves(star_graph(3)) == frozenset({2, 3, 4})


def test_diameter():
    assert diameter(path_graph(6)) == 5
    assert diameter(star_graph(3)) == 2
    assert diameter(make_hypergraph(2, [{1, 2}])) == 1
    with pytest.raises(Disconnected):
        diameter(make_hypergraph(4, [{1, 2}, {3, 4}]))
    with pytest.raises(NotAGraph):
        diameter(make_hypergraph(3, [{1, 2, 3}]))


def test_intersection_graph():
    Gp = intersection_graph(make_hypergraph(5, [{1, 2}, {2, 3}, {4, 5}]))
    assert Gp.adjacency == frozenset({(1, 2)})
    assert intersection_graph(make_hypergraph(6, [{1, 2}, {3, 4}, {5, 6}])).edge_count == 0
    sunflower = intersection_graph(make_hypergraph(7, [{1, 2, 3}, {1, 4, 5}, {1, 6, 7}]))
    assert sunflower.edge_count == 3
    assert sunflower.degrees() == (2, 2, 2)


def test_intersection_graph_networkx_view():
    Gp = IntersectionGraph(t=3, adjacency=frozenset({(1, 2), (2, 3)}))
    graph = Gp.to_networkx()
    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 2
    assert Gp.adjacent(3, 2) and not Gp.adjacent(1, 3)


@pytest.mark.parametrize("seed", range(10))
def test_random_hyperforest_has_forest_ordering(seed):
    G = random_hyperforest(3, 5, random.Random(seed))
    assert forest_ordering(G) is not None
    assert proper_coloring(G, 3) is not None


@given(small_ideals())
@settings(max_examples=100, deadline=None)
def test_minimalized_edges_form_an_antichain(G):
    """minimalize=True always returns an antichain of distinct edges."""
    for a in G.edges:
        for b in G.edges:
            assert a == b or not a <= b


@given(small_ideals(), st.data())
@settings(max_examples=50, deadline=None)
def test_link_and_antistar_drop_one_vertex(G, data):
    v = data.draw(st.integers(1, G.n))
    assert antistar(G, v).n == G.n - 1
    assert all(v not in e for e in antistar(G, v).labeled_edges())
    if frozenset({v}) not in G.edges:
        L = link(G, v)
        assert L.n == G.n - 1
        assert all(v not in e for e in L.labeled_edges())


@given(small_ideals(), st.data())
@settings(max_examples=100, deadline=None)
def test_induced_twice_is_induced_once(G, data):
    W = data.draw(st.sets(st.integers(1, G.n)))
    W_inner = data.draw(st.sets(st.sampled_from(sorted(W)))) if W else set()
    H = induced(G, W)
    position = {H.label(u): u for u in range(1, H.n + 1)}
    twice = induced(H, {position[w] for w in W_inner})
    once = induced(G, W_inner)
    assert twice.n == once.n
    assert twice.origin == once.origin
    assert set(twice.labeled_edges()) == set(once.labeled_edges())
    again = induced(H, range(1, H.n + 1))
    assert set(again.labeled_edges()) == set(H.labeled_edges())


@given(st.integers(1, 4), st.integers(0, 8), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_hypertrees_have_leaves(d, extra, seed):
    G = random_hypertree(d, d + extra, random.Random(seed))
    assert G.t >= 1
    assert leaves(G)


@given(small_ideals(), st.data())
@settings(max_examples=100, deadline=None)
def test_intersection_graph_survives_relabeling(G, data):
    perm = data.draw(st.permutations(range(1, G.n + 1)))
    relabeled = make_hypergraph(G.n, [{perm[v - 1] for v in e} for e in G.edges])
    before = intersection_graph(G)
    after = intersection_graph(relabeled)
    assert after.edge_count == before.edge_count
    assert sorted(after.degrees()) == sorted(before.degrees())
    assert nx.is_isomorphic(before.to_networkx(), after.to_networkx())


@pytest.mark.parametrize("n", range(3, 11))
def test_degree3_hypertree_colorings_are_unique_up_to_permutation(n):
    """Six colorings, one per permutation of the three colors."""
    for seed in range(8):
        G = random_hypertree(3, n, random.Random(seed))
        colorings = all_proper_colorings(G, 3)
        assert len(colorings) == 6
        assert all(c.is_proper(G) for c in colorings)
        assert all(c.same_up_to_permutation(colorings[0]) for c in colorings)


def test_random_hypergraph_clamps_edge_sizes(rng):
    G = random_hypergraph(4, 3, rng, max_size=9)
    assert G.n == 4
    assert all(1 <= len(e) <= 4 for e in G.edges)


@given(small_ideals(), st.data())
@settings(max_examples=100, deadline=None)
def test_link_and_antistar_match_their_complexes(G, data):
    """Gamma(lk v) is the link of v in Gamma(G); Gamma(G - v) is Gamma(G) restricted to V - v."""
    v = data.draw(st.integers(1, G.n))
    whole = SimplicialComplexView.of(G)
    rest = frozenset(range(1, G.n + 1)) - {v}

    A = antistar(G, v)
    antistar_view = SimplicialComplexView(frozenset(map(A.label, range(1, A.n + 1))), A.labeled_edges())
    assert set(antistar_view.faces()) == set(whole.restrict(rest).faces())

    if frozenset({v}) in G.edges:
        return
    L = link(G, v)
    link_view = SimplicialComplexView(frozenset(map(L.label, range(1, L.n + 1))), L.labeled_edges())
    assert set(link_view.faces()) == {F - {v} for F in whole.faces() if v in F}
