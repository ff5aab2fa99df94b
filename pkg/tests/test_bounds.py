"""Closed-form bounds, Turan numbers, witnesses and bound verification."""

import random
from itertools import combinations, product
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import (
    BadParams,
    ImproperColoring,
    NotAHypertree,
    NotApplicable,
    NotPure,
    TooLarge,
    ZeroParts,
)
from hypercomb.coloring import Coloring, proper_coloring
from hypercomb.graphs import IntersectionGraph
from hypercomb.hypergraph import induced, make_hypergraph
from hypercomb.sampling import random_hyperforest, random_hypertree, random_pure_hypergraph
from homology.reduced import homology_of_masks
from betti.hochster import betti_table
from bounds.closed_forms import BoundTheorem, bound_value
from bounds.partition import nearly_even_partition
from bounds.pcount import degree_spread, p_count
from bounds.turan import turan_number, turan_upper_bound
from bounds.verify import verify_bound
from bounds.witness import witness_subset
from atlas.augment import enumerate_pure_hypergraphs
from atlas.families import Family, FamilySpec, generate
from schemas.report import Relation, Verdict
from tests.conftest import path_graph


# partitions and closed forms


@pytest.mark.parametrize(
    "r,d,parts",
    [(7, 3, (3, 2, 2)), (4, 2, (2, 2)), (6, 3, (2, 2, 2)), (0, 2, (0, 0)), (2, 3, (1, 1, 0))],
)
def test_nearly_even_partition(r, d, parts):
    partition = nearly_even_partition(r, d)
    assert partition.parts == parts
    assert partition.total == r
    assert partition.padded == (r < d)


def test_nearly_even_partition_errors():
    with pytest.raises(ZeroParts):
        nearly_even_partition(5, 0)
    with pytest.raises(BadParams):
        nearly_even_partition(-1, 2)


@given(st.integers(0, 60), st.integers(1, 8))
@settings(max_examples=100)
def test_nearly_even_parts_differ_by_at_most_one(r, d):
    parts = nearly_even_partition(r, d).parts
    assert len(parts) == d
    assert sum(parts) == r
    assert max(parts) - min(parts) <= 1
    assert list(parts) == sorted(parts, reverse=True)


def _compositions(total: int, d: int):
    if d == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, d - 1):
            yield (first, *rest)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_nearly_even_partition_minimizes_binomial_sums(d):
    """No way of writing r as d nonnegative parts has a smaller sum of C(part, j)."""
    for r in range(13):
        even = nearly_even_partition(r, d)
        for j in range(1, 5):
            least = min(sum(comb(p, j) for p in parts) for parts in _compositions(r, d))
            assert even.binomial_sum(j) == least, (r, d, j)


def test_bound_value_examples():
    assert bound_value("tree_lb", sizes=[1, 3], j=2) == 3
    assert bound_value("beta35", t=6) == 18
    assert bound_value("b36", t=6) == 20
    assert bound_value(BoundTheorem.FOREST_LB, t=3, d=2, j=2) == 2
    assert bound_value("diameter_eq", sizes=[3, 3], j=2) == 6
    assert bound_value("b36", t=2) == 0


def test_bound_value_errors():
    with pytest.raises(BadParams):
        bound_value("nonsense", t=3)
    with pytest.raises(BadParams):
        bound_value("tree_lb", sizes=[2, 2])
    with pytest.raises(BadParams):
        bound_value("diameter_eq", sizes=[1, 2, 3], j=2)
    with pytest.raises(BadParams):
        bound_value("forest_lb", t=0, d=2, j=2)


# Turan numbers


@pytest.mark.parametrize(
    "n,k,l,expected",
    [(6, 7, 3, 0), (7, 7, 3, 1), (8, 7, 3, 2), (9, 7, 3, 3), (5, 3, 2, 4), (4, 2, 1, 3), (5, 4, 3, 3)],
)
def test_turan_number(n, k, l, expected):
    assert turan_number(n, k, l) == expected


def test_turan_number_errors():
    with pytest.raises(TooLarge):
        turan_number(13, 7, 3)
    with pytest.raises(BadParams):
        turan_number(6, 2, 3)


def test_turan_upper_bound():
    assert turan_upper_bound(10, 7, 3) == 6
    assert turan_upper_bound(11, 7, 3) == 9
    assert turan_upper_bound(12, 7, 3) == 12
    assert turan_upper_bound(6, 4, 2) == 3
    assert turan_upper_bound(5, 3, 1) == 3
    assert turan_upper_bound(4, 7, 3) == 0


def _brute_force_turan(n: int, k: int, l: int) -> int:
    ksets = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    lsets = [frozenset(c) for c in combinations(range(1, n + 1), l)]
    for size in range(len(lsets) + 1):
        for family in combinations(lsets, size):
            if all(any(L <= K for L in family) for K in ksets):
                return size
    raise AssertionError("the family of all l-sets always covers")


@pytest.mark.parametrize("n,k,l", [(5, 4, 3), (6, 4, 2), (6, 3, 2), (6, 5, 3), (6, 4, 3), (5, 5, 2), (6, 5, 4)])
def test_turan_number_matches_brute_force(n, k, l):
    assert turan_number(n, k, l) == _brute_force_turan(n, k, l)


def test_turan_search_respects_its_budget():
    """T(10,7,3) sits strictly between the averaging bound and the construction, so it needs a search."""
    with pytest.raises(TooLarge):
        turan_number(10, 7, 3, budget=1)


@pytest.mark.slow
def test_turan_numbers_up_to_twelve():
    assert turan_number(10, 7, 3) == 6
    assert turan_number(11, 7, 3) == 9
    assert turan_number(12, 7, 3) == 12


# intersection-graph counts


def test_p_count_examples():
    assert p_count(IntersectionGraph(t=3, adjacency=frozenset({(1, 2)}))) == 1
    path3 = IntersectionGraph(t=3, adjacency=frozenset({(1, 2), (2, 3)}))
    assert p_count(path3) == 0
    assert degree_spread(path3) == 2
    K4 = IntersectionGraph(t=4, adjacency=frozenset(combinations(range(1, 5), 2)))
    assert p_count(K4) == 0
    assert degree_spread(K4) == 0


def test_p_count_matches_brute_force(rng):
    for _ in range(20):
        t = rng.randint(3, 8)
        pairs = frozenset(p for p in combinations(range(1, t + 1), 2) if rng.random() < 0.4)
        Gp = IntersectionGraph(t=t, adjacency=pairs)
        brute = sum(
            1
            for triple in combinations(range(1, t + 1), 3)
            if sum(1 for p in combinations(triple, 2) if p in pairs) == 1
        )
        assert p_count(Gp) == brute
        assert 2 * p_count(Gp) <= degree_spread(Gp)


# witnesses


def _check_witness(G, coloring, blue, b_prime):
    result = witness_subset(G, coloring, blue, b_prime)
    B = coloring.color_class(blue)
    assert result.u_prime & B == frozenset(b_prime)
    dims = homology_of_masks(sum(1 << (v - 1) for v in result.u_prime), G.masks)
    assert dims.get(result.homology_degree, 0) >= 1
    assert result.reduced_betti == dims[result.homology_degree]
    return result


def test_witness_on_a_star(star3):
    coloring = proper_coloring(star3, 2)
    result = _check_witness(star3, coloring, coloring.color(1), [1])
    assert result.homology_degree == len(result.u_prime) - 2


def test_witness_on_a_path():
    G = path_graph(5)
    coloring = proper_coloring(G, 2)
    blue = coloring.color(1)
    assert coloring.color_class(blue) == frozenset({1, 3, 5})
    result = _check_witness(G, coloring, blue, [1, 3])
    assert result.homology_degree == len(result.u_prime) - 3


def test_witness_errors(triangle):
    single = make_hypergraph(3, [{1, 2, 3}])
    with pytest.raises(NotApplicable):
        witness_subset(single, proper_coloring(single, 3), 1, [1])
    with pytest.raises(NotAHypertree):
        witness_subset(triangle, Coloring((1, 2, 3), 2), 1, [1])
    P = path_graph(4)
    with pytest.raises(ImproperColoring):
        witness_subset(P, Coloring((1, 1, 2, 1), 2), 1, [1])
    coloring = proper_coloring(P, 2)
    other = coloring.color_class(3 - coloring.color(1))
    with pytest.raises(BadParams):
        witness_subset(P, coloring, coloring.color(1), sorted(other)[:1])
    with pytest.raises(BadParams):
        witness_subset(P, coloring, coloring.color(1), [])


@pytest.mark.parametrize("seed", range(8))
def test_witness_on_random_hypertrees(seed):
    rng = random.Random(seed)
    d = rng.choice([2, 3])
    G = random_hypertree(d, rng.randint(d + 1, 8), rng)
    coloring = proper_coloring(G, d)
    for blue in range(1, d + 1):
        B = sorted(coloring.color_class(blue))
        for size in range(1, min(2, len(B)) + 1):
            for b_prime in combinations(B, size):
                _check_witness(G, coloring, blue, b_prime)


@pytest.mark.slow
def test_witness_acceptance():
    """100 hypertrees, every B' of size at most 3 inside one color class."""
    rng = random.Random(10)
    for _ in range(100):
        d = rng.choice([2, 3])
        G = random_hypertree(d, rng.randint(d + 1, 12), rng)
        coloring = proper_coloring(G, d)
        blue = rng.randint(1, d)
        B = sorted(coloring.color_class(blue))
        for size in range(1, min(3, len(B)) + 1):
            for b_prime in combinations(B, size):
                _check_witness(G, coloring, blue, b_prime)


# verify_bound


def test_tree_bound_on_the_six_path(path6):
    report = verify_bound("tree_lb", path6)
    first = report.comparisons[0]
    assert (first.label, first.computed, first.bound) == ("j=2", 7, 6)
    assert first.relation is Relation.AT_LEAST
    assert report.verdict is Verdict.HOLDS
    assert "j=2" in report.strict
    assert report.witnesses["class_sizes"] == [3, 3]


@pytest.mark.parametrize("d,sizes", [(2, (2, 2)), (2, (3, 4)), (3, (2, 2, 2)), (3, (1, 3, 4))])
def test_extremal_hypertrees_attain_the_tree_bound(d, sizes):
    G = generate(FamilySpec(Family.EXTREMAL_HYPERTREE, (d, *sizes)))
    report = verify_bound("tree_lb", G)
    assert report.verdict is Verdict.EQUALITY


def test_tree_bound_preconditions(triangle):
    with pytest.raises(NotAHypertree):
        verify_bound("tree_lb", triangle)


@pytest.mark.parametrize("edge", [{1, 2}, {1, 2, 3}])
def test_a_single_edge_meets_the_tree_bound(edge):
    """Every color class has one vertex, so the j=2 bound is 0 and so is beta_1."""
    report = verify_bound("tree_lb", make_hypergraph(len(edge), [edge]))
    assert [c.label for c in report.comparisons] == ["j=2"]
    assert (report.comparisons[0].computed, report.comparisons[0].bound) == (0, 0)
    assert report.verdict is Verdict.EQUALITY


def test_diameter_theorem_on_examples(star3, path6):
    star = verify_bound("diameter_eq", star3)
    assert star.verdict is Verdict.EQUALITY
    assert star.checks == {"biconditional": True}
    assert star.witnesses["diameter"] == 2

    path = verify_bound("diameter_eq", path6)
    assert path.verdict is Verdict.HOLDS
    assert path.checks["biconditional"]
    assert path.notes == ["diameter 5 > 4; strict inequality at j=2 (7 > 6)"]


def test_diameter_theorem_over_all_small_trees():
    """Equality at every j >= 2 exactly when the diameter is at most four."""
    for order in range(2, 10):
        for T in nx.nonisomorphic_trees(order):
            G = make_hypergraph(order, [{u + 1, v + 1} for u, v in T.edges()])
            report = verify_bound("diameter_eq", G)
            assert report.checks["biconditional"], G
            assert report.verdict is not Verdict.VIOLATED


def test_forest_bound_on_a_forest():
    G = make_hypergraph(7, [{1, 2, 3}, {3, 4, 5}, {5, 6}, {6, 7}])
    report = verify_bound("forest_lb", G)
    assert report.verdict is not Verdict.VIOLATED
    assert report.witnesses["partition"] == list(nearly_even_partition(G.t + G.degree - 1, G.degree).parts)
    assert report.checks["refined_dominates_even"]


def test_forest_bound_without_a_proper_coloring():
    G = make_hypergraph(5, [{1, 2, 3}, {1, 2, 4}, {3, 4, 5}])
    report = verify_bound("forest_lb", G)
    assert report.verdict is not Verdict.VIOLATED
    assert report.notes == ["no proper 3-coloring; refined bound skipped"]
    assert [c.label for c in report.comparisons] == ["j=2"]
    assert report.witnesses["partition"] == [2, 2, 1]
    assert report.witnesses["refined_sizes"] == []
    assert report.checks == {}


@pytest.mark.parametrize("t1,t2", [(1, 0), (2, 1), (3, 2), (3, 3), (4, 4)])
def test_beta35_extremal_attains_equality(t1, t2):
    G = generate(FamilySpec(Family.BETA35_EXTREMAL, (t1, t2)))
    report = verify_bound("beta35", G)
    assert report.verdict is Verdict.EQUALITY
    assert all(report.checks.values())


def test_beta35_on_random_degree3(rng):
    for _ in range(10):
        t = rng.randint(3, 6)
        G = random_pure_hypergraph(3, t, rng.randint(5, 10), rng)
        G = induced(G, G.support)
        report = verify_bound("beta35", G)
        assert report.verdict is not Verdict.VIOLATED
        assert report.witnesses["taylor"] <= report.witnesses["p_count"]


def test_beta35_needs_purity():
    with pytest.raises(NotPure):
        verify_bound("beta35", make_hypergraph(4, [{1, 2, 3}, {3, 4}]))


def test_b36_on_the_unique_ideal():
    report = verify_bound("b36", generate(FamilySpec(Family.DEGREE3_UNIQUE)))
    assert report.status == "evidence"
    assert report.verdict is Verdict.EQUALITY
    assert report.comparisons[0].computed == 20
    assert report.notes == [f"C(6,3) - T(6,7,3) = {comb(6, 3)}"]
    with pytest.raises(NotApplicable):
        verify_bound("b36", path_graph(4))


def test_b36_on_eleven_disjoint_triples():
    G = make_hypergraph(33, [{3 * i + 1, 3 * i + 2, 3 * i + 3} for i in range(11)])
    report = verify_bound("b36", G)
    assert report.comparisons[0].computed == 0
    assert report.verdict is Verdict.HOLDS
    assert report.notes in ([], [f"C(11,3) - T(11,7,3) = {comb(11, 3) - 9}"])


def test_hypertree_betti_numbers_dominate_the_bound_table(star3):
    totals = betti_table(star3).total()
    assert totals[1] >= bound_value("tree_lb", sizes=[1, 3], j=2)


# acceptance runs


@pytest.mark.slow
def test_tree_bound_acceptance():
    rng = random.Random(3)
    for _ in range(500):
        d = rng.choice([2, 3, 4])
        G = random_hypertree(d, rng.randint(d, 14), rng)
        assert verify_bound("tree_lb", G).verdict is not Verdict.VIOLATED
    for d in (2, 3):
        for sizes in product(range(1, 5), repeat=d):
            G = generate(FamilySpec(Family.EXTREMAL_HYPERTREE, (d, *sizes)))
            assert verify_bound("tree_lb", G).verdict is Verdict.EQUALITY


@pytest.mark.slow
def test_forest_bound_acceptance():
    rng = random.Random(4)
    for _ in range(200):
        G = random_hyperforest(rng.choice([2, 3]), rng.randint(1, 6), rng)
        assert verify_bound("forest_lb", G).verdict is not Verdict.VIOLATED


@pytest.mark.slow
def test_beta35_acceptance():
    for t in range(1, 7):
        for G in enumerate_pure_hypergraphs(2, t):
            assert verify_bound("beta35", G).verdict is not Verdict.VIOLATED
    rng = random.Random(5)
    for _ in range(200):
        t = rng.randint(1, 7)
        G = random_pure_hypergraph(3, t, rng.randint(6, 3 * t + 3), rng)
        assert verify_bound("beta35", induced(G, G.support)).verdict is not Verdict.VIOLATED
    for t in range(1, 9):
        t1 = (t + 1) // 2
        G = generate(FamilySpec(Family.BETA35_EXTREMAL, (t1, t - t1)))
        assert verify_bound("beta35", G).verdict is Verdict.EQUALITY
