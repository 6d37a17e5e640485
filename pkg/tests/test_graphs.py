import itertools

import pytest

from compelling import (
    Graph,
    chromatic_number,
    components,
    connected_domination_number,
    diameter,
    disjoint_union,
    format_graph,
    is_bipartite,
    is_connected,
    is_mop,
    is_tree,
    join_dominator,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_double_broom,
    make_empty,
    make_fan,
    make_path,
    make_random_graph,
    make_random_mop,
    make_random_tree,
    make_split_graph,
    make_star,
    minimum_connected_dominating_set,
    mop_three_coloring,
    parse_graph,
    radius,
)
from oracles import brute_chromatic_number, induces_connected, is_dominating


def small_corpus(count=30, max_n=7, seed=99):
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.2, 0.4, 0.6, 0.8))
        out.append(make_random_graph(n, p, seed=rng.getrandbits(32)))
    return out


# ---------------------------------------------------------------------------
# Graph type invariants
# ---------------------------------------------------------------------------


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_graph_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))


def test_graph_rejects_empty():
    with pytest.raises(ValueError):
        Graph(0, ())


def test_adjacency_is_symmetric():
    g = make_random_graph(8, 0.5, seed=4)
    for u in range(g.n):
        for v in g.adj[u]:
            assert u in g.adj[v]
            assert v != u


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_path_edge_count(n):
    assert make_path(n).edge_count == n - 1


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_edge_count_and_regularity(n):
    g = make_cycle(n)
    assert g.edge_count == n
    assert all(g.degree(v) == 2 for v in range(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_edge_count(n):
    assert make_complete(n).edge_count == n * (n - 1) // 2


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 3), (1, 5)])
def test_complete_bipartite_edge_count(a, b):
    g = make_complete_bipartite(a, b)
    assert g.edge_count == a * b
    assert is_bipartite(g)[0]


def test_generator_size_validation():
    with pytest.raises(ValueError):
        make_path(0)
    with pytest.raises(ValueError):
        make_cycle(2)
    with pytest.raises(ValueError):
        make_complete(0)
    with pytest.raises(ValueError):
        make_complete_bipartite(0, 3)
    with pytest.raises(ValueError):
        make_star(0)
    with pytest.raises(ValueError):
        make_split_graph(1)
    with pytest.raises(ValueError):
        make_random_mop(2, 1)


def test_path_examples():
    assert make_path(1).edge_count == 0
    assert make_path(2).edges == ((0, 1),)
    p7 = make_path(7)
    assert p7.edge_count == 6
    assert diameter(p7) == 6


def test_star_structure():
    g = make_star(4)
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_split_graph_m2_exact_edges():
    # clique {0,1}, independent {2,3}; independent vertex m+i misses clique vertex i
    g = make_split_graph(2)
    assert g.edges == ((0, 1), (0, 3), (1, 2))


def test_split_graph_order_and_chromatic():
    for m in (3, 4):
        g = make_split_graph(m)
        assert g.n == 2 * m
        assert chromatic_number(g) == m


def test_double_broom_smallest():
    # one-leaf stars degenerate to a path on four vertices
    g = make_double_broom(1, 1)
    assert g.n == 4 and is_tree(g)
    assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_double_broom_2_2_is_six_vertex_diameter_5():
    g = make_double_broom(2, 2)
    assert g.n == 6 and is_tree(g)
    assert diameter(g) == 5
    # all degrees at most 2: it is the six-vertex path
    assert max(g.degree(v) for v in range(6)) == 2


def test_double_broom_3_3():
    g = make_double_broom(3, 3)
    assert g.n == 8 and is_tree(g)
    assert diameter(g) == 5


def test_fan_contains_induced_path():
    g = make_fan(10)
    assert g.degree(10) == 10
    for i in range(10):
        for j in range(i + 1, 10):
            assert g.has_edge(i, j) == (j == i + 1)


def test_fan_smallest():
    assert make_fan(1).edges == ((0, 1),)


def test_join_dominator_on_empty_graph_is_star():
    # same shape as the star, with the hub last instead of first
    g = join_dominator(make_empty(3))
    assert sorted(g.degree(v) for v in range(4)) == [1, 1, 1, 3]
    assert is_tree(g)


def test_join_dominator_of_path_is_fan():
    assert join_dominator(make_path(3)) == make_fan(3)


def test_wheel_chromatic_number():
    # brute-force oracle value for the cycle-plus-dominator graph
    w = join_dominator(make_cycle(5))
    assert chromatic_number(w) == 4
    assert brute_chromatic_number(w) == 4


# ---------------------------------------------------------------------------
# Maximal outerplanar graphs
# ---------------------------------------------------------------------------


def test_mop_smallest_cases():
    assert make_random_mop(3, 0) == make_complete(3)
    m4 = make_random_mop(4, 5)
    assert m4.edge_count == 5  # the unique triangulation of a square


@pytest.mark.parametrize("seed", range(5))
def test_mop_eight_vertices(seed):
    g = make_random_mop(8, seed)
    assert g.edge_count == 13
    ok, cycle = is_mop(g)
    assert ok and len(cycle) == 8


def test_mop_generator_recognizer_roundtrip():
    for n in range(3, 15):
        for seed in range(20):
            g = make_random_mop(n, seed)
            assert g.edge_count == 2 * n - 3
            ok, cycle = is_mop(g)
            assert ok, (n, seed)
            assert sorted(cycle) == list(range(n))


def test_is_mop_rejects_non_mops():
    assert is_mop(make_cycle(6)) == (False, None)
    assert is_mop(make_complete(4)) == (False, None)
    assert is_mop(make_path(5)) == (False, None)


def test_is_mop_rejects_non_outerplanar_two_tree():
    # two ears stacked on the same edge: reducible to a triangle but the
    # outer-cycle rebuild fails (it contains a K_{2,3})
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
    assert g.edge_count == 2 * g.n - 3
    assert is_mop(g) == (False, None)


def test_mop_three_coloring_is_proper():
    for seed in range(6):
        g = make_random_mop(11, seed)
        colors = mop_three_coloring(g)
        assert set(colors) == {0, 1, 2}
        assert all(colors[u] != colors[v] for u, v in g.edges)


def test_mop_three_coloring_rejects_non_mop():
    with pytest.raises(ValueError):
        mop_three_coloring(make_cycle(5))


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------


def test_chromatic_examples():
    assert chromatic_number(make_cycle(5)) == 3
    assert chromatic_number(make_split_graph(3)) == 3
    # complete graph on 5 vertices minus an edge, plus a leaf on one end
    edges = [e for e in itertools.combinations(range(5), 2) if e != (0, 1)]
    edges.append((0, 5))
    g = Graph.from_edges(6, edges)
    assert chromatic_number(g) == 4


def test_chromatic_number_matches_bruteforce_oracle():
    for g in small_corpus():
        assert chromatic_number(g) == brute_chromatic_number(g)


def test_chromatic_number_cap():
    with pytest.raises(ValueError):
        chromatic_number(make_path(9), max_n=8)


def test_connected_domination_examples():
    assert connected_domination_number(make_star(4)) == 1
    assert connected_domination_number(make_path(5)) == 3


@pytest.mark.parametrize("n", range(3, 11))
def test_connected_domination_of_paths(n):
    assert connected_domination_number(make_path(n)) == n - 2


def test_connected_domination_matches_bruteforce():
    for g in small_corpus(count=15, max_n=10, seed=5):
        if not is_connected(g):
            with pytest.raises(ValueError):
                connected_domination_number(g)
            continue
        want = None
        for size in range(1, g.n + 1):
            combos = (
                set(c)
                for c in itertools.combinations(range(g.n), size)
            )
            if any(is_dominating(g, s) and induces_connected(g, s) for s in combos):
                want = size
                break
        assert connected_domination_number(g) == want


def test_minimum_cds_is_valid_and_deterministic():
    g = make_random_mop(9, 2)
    cds = minimum_connected_dominating_set(g)
    assert is_dominating(g, set(cds)) and induces_connected(g, set(cds))
    assert cds == minimum_connected_dominating_set(g)


def test_distance_parameters():
    assert diameter(make_path(7)) == 6
    assert radius(make_path(7)) == 3
    assert diameter(make_double_broom(3, 3)) == 5
    with pytest.raises(ValueError):
        diameter(make_empty(3))


def test_bipartite_parts():
    ok, parts = is_bipartite(make_cycle(4))
    assert ok and parts == (frozenset({0, 2}), frozenset({1, 3}))
    assert is_bipartite(make_cycle(5)) == (False, None)


def test_components():
    g = disjoint_union(make_path(3), make_complete(2))
    assert components(g) == [frozenset({0, 1, 2}), frozenset({3, 4})]


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def test_format_parse_roundtrip():
    for g in (make_cycle(5), make_path(1), make_random_graph(7, 0.5, seed=3)):
        assert parse_graph(format_graph(g)) == g


def test_format_roundtrip_preserves_outer_cycle():
    g = make_random_mop(8, 4)
    parsed = parse_graph(format_graph(g))
    assert parsed == g
    assert parsed.outer_cycle == g.outer_cycle


def test_parse_accepts_comments():
    g = parse_graph("# a triangle\n3 3\n0 1\n# middle comment\n0 2\n1 2\n")
    assert g == make_complete(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 2\n0 1\n",  # wrong edge count
        "3 1\n1 0\n",  # u >= v
        "3 1\n0 3\n",  # out of range
        "3 2\n0 1\n0 1\n",  # duplicate
        "0 0\n",  # empty graph
        "3 1\n0 1\nouter: 0 1\n",  # outer not a permutation
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_graph(text)


def test_random_generators_deterministic():
    assert make_random_graph(8, 0.5, seed=12) == make_random_graph(8, 0.5, seed=12)
    assert make_random_tree(8, seed=12) == make_random_tree(8, seed=12)
    assert make_random_mop(8, seed=12) == make_random_mop(8, seed=12)


@pytest.mark.parametrize("n", range(1, 10))
def test_random_tree_is_tree(n):
    for seed in range(5):
        assert is_tree(make_random_tree(n, seed))
