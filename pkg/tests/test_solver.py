import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compelling import (
    Coloring,
    SearchTimeout,
    SubsetProperty,
    canonical_colorings,
    chi_bounds,
    compelling_chromatic_number,
    disjoint_union_bounds,
    is_compelling,
    is_compelling_naive,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    make_random_graph,
    rainbow_committees,
    validate_coloring,
)
from oracles import brute_compelling

P = SubsetProperty

PROPERTY_SETTINGS = settings(max_examples=40, deadline=None)


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from((0.2, 0.4, 0.6, 0.8)))
    seed = draw(st.integers(0, 2**20))
    return make_random_graph(n, p, seed)


def solver_corpus(count=25, max_n=8, seed=31):
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        out.append(make_random_graph(n, rng.choice((0.3, 0.5, 0.7)), rng.getrandbits(32)))
    return out


# ---------------------------------------------------------------------------
# Coloring type
# ---------------------------------------------------------------------------


def test_coloring_rejects_gaps_and_negatives():
    with pytest.raises(ValueError):
        Coloring((0, 2))
    with pytest.raises(ValueError):
        Coloring((-1, 0))
    with pytest.raises(ValueError):
        Coloring(())


def test_coloring_classes():
    c = Coloring((0, 1, 0, 1, 2))
    assert c.k == 3
    assert c.classes == ((0, 2), (1, 3), (4,))
    assert c.class_masks == (0b00101, 0b01010, 0b10000)


def test_coloring_canonical_relabels_by_first_use():
    assert Coloring((1, 0, 1, 2, 0)).canonical().colors == (0, 1, 0, 2, 1)


def test_validate_coloring_names_the_bad_edge():
    with pytest.raises(ValueError, match="0 and 1"):
        validate_coloring(make_path(2), Coloring((0, 0)))
    with pytest.raises(ValueError, match="assigns"):
        validate_coloring(make_path(3), Coloring((0, 1)))


def test_rainbow_committees_order():
    c = Coloring((0, 1, 0, 1, 2))
    assert list(rainbow_committees(c)) == [
        (0, 1, 4),
        (0, 3, 4),
        (2, 1, 4),
        (2, 3, 4),
    ]


# ---------------------------------------------------------------------------
# Compellingness checking
# ---------------------------------------------------------------------------


def test_five_cycle_three_coloring():
    c5 = make_cycle(5)
    coloring = Coloring((0, 1, 0, 1, 2))
    dom = is_compelling(c5, coloring, P.DOM)
    assert dom.compelling and dom.counterexample is None
    assert dom.method == "per-vertex-fast"
    conn = is_compelling(c5, coloring, P.CONNECTED)
    assert not conn.compelling
    assert conn.method == "rc-search"
    # least violating committee in class-then-vertex order
    assert conn.counterexample == (2, 1, 4)


def test_five_cycle_four_coloring_compels_connectivity():
    report = is_compelling(make_cycle(5), Coloring((0, 1, 0, 2, 3)), P.CONNECTED)
    assert report.compelling


def test_all_distinct_colors_compel_edge():
    g = make_random_graph(5, 0.5, seed=77)
    assert g.edge_count > 0
    report = is_compelling(g, Coloring(tuple(range(5))), P.EDGE)
    assert report.compelling


def test_is_compelling_rejects_bad_colorings():
    with pytest.raises(ValueError):
        is_compelling(make_path(2), Coloring((0, 0)), P.DOM)
    with pytest.raises(ValueError):
        is_compelling(make_path(3), Coloring((0, 1)), P.DOM)


def test_counterexample_violates_and_is_least():
    import itertools

    from compelling.properties import eval_property_mask

    for g in solver_corpus(count=10, max_n=7, seed=41):
        for k in range(2, min(4, g.n) + 1):
            for coloring in canonical_colorings(g, k):
                for prop in P:
                    report = is_compelling(g, coloring, prop)
                    if report.compelling:
                        assert report.counterexample is None
                        continue
                    cx = report.counterexample
                    # one vertex per class, in class order
                    assert len(cx) == coloring.k
                    assert all(
                        coloring.colors[v] == i for i, v in enumerate(cx)
                    )
                    mask = sum(1 << v for v in cx)
                    assert not eval_property_mask(prop, g, mask)
                    # nothing earlier in committee order violates
                    for committee in rainbow_committees(coloring):
                        if committee == cx:
                            break
                        m = sum(1 << v for v in committee)
                        assert eval_property_mask(prop, g, m)


def test_fast_paths_agree_with_naive_enumeration():
    # every canonical proper coloring with up to 5 colors, all properties
    for g in solver_corpus(count=25, max_n=8, seed=31):
        for k in range(1, min(5, g.n) + 1):
            for coloring in canonical_colorings(g, k):
                for prop in P:
                    fast = is_compelling(g, coloring, prop).compelling
                    assert fast == is_compelling_naive(g, coloring, prop), (
                        g.name,
                        coloring.colors,
                        prop,
                    )


@PROPERTY_SETTINGS
@given(graphs(min_n=2, max_n=6), st.data())
def test_verdict_matches_set_level_oracle(g, data):
    k = data.draw(st.integers(1, min(4, g.n)))
    colorings = list(canonical_colorings(g, k))
    if not colorings:
        return
    coloring = colorings[data.draw(st.integers(0, len(colorings) - 1))]
    prop = data.draw(st.sampled_from(list(P)))
    assert is_compelling(g, coloring, prop).compelling == brute_compelling(
        g, coloring.colors, prop
    )


# ---------------------------------------------------------------------------
# Exact values
# ---------------------------------------------------------------------------


def test_chi_examples():
    assert compelling_chromatic_number(make_cycle(5), P.DOM).value == 3
    assert compelling_chromatic_number(make_cycle(5), P.CONNECTED).value == 4
    assert compelling_chromatic_number(make_path(7), P.EDGE).value == 4
    assert compelling_chromatic_number(make_complete_bipartite(2, 3), P.EDGE).value == 2


def test_chi_infeasible_cases():
    res = compelling_chromatic_number(make_empty(4), P.EDGE)
    assert res.infeasible and res.witness is None
    assert res.lower_bound is None and res.upper_bound is None
    # graph with an isolated vertex: no subset totally dominates
    from compelling import disjoint_union

    g = disjoint_union(make_complete(2), make_empty(1))
    assert compelling_chromatic_number(g, P.TDOM).infeasible
    # connectivity on a disconnected graph: feasible sets exist but no
    # coloring compels, so the scan itself reports infeasible with bounds
    res = compelling_chromatic_number(g, P.CONNECTED)
    assert res.infeasible and res.lower_bound == 2 and res.upper_bound is None


def test_chi_witness_is_compelling_and_canonical_first():
    g = make_cycle(5)
    res = compelling_chromatic_number(g, P.CONNECTED)
    assert res.witness.colors == (0, 1, 0, 2, 3)
    assert is_compelling(g, res.witness, P.CONNECTED).compelling


def test_chi_within_bounds_on_corpus():
    for g in solver_corpus(count=15, max_n=7, seed=51):
        for prop in P:
            bounds = chi_bounds(g, prop)
            res = compelling_chromatic_number(g, prop)
            if bounds is None:
                assert res.infeasible
                continue
            lo, hi = bounds
            assert (res.lower_bound, res.upper_bound) == (lo, hi)
            if res.value is not None:
                assert res.witness.k == res.value
                assert is_compelling(g, res.witness, prop).compelling
                assert lo <= res.value
                if hi is not None:
                    assert res.value <= hi


def test_chi_dom_equals_bruteforce_dominator_chromatic_number():
    for g in solver_corpus(count=12, max_n=8, seed=61):
        want = None
        for k in range(1, g.n + 1):
            if any(
                brute_compelling(g, c.colors, P.DOM) for c in canonical_colorings(g, k)
            ):
                want = k
                break
        assert compelling_chromatic_number(g, P.DOM).value == want


def test_chi_deterministic():
    g = make_random_graph(7, 0.5, seed=71)
    first = compelling_chromatic_number(g, P.EDGE)
    second = compelling_chromatic_number(g, P.EDGE)
    assert first == second


def test_chi_size_cap():
    with pytest.raises(ValueError):
        compelling_chromatic_number(make_path(9), P.DOM, max_n=8)


def test_chi_timeout():
    with pytest.raises(SearchTimeout):
        compelling_chromatic_number(make_path(12), P.EDGE, timeout_s=0.0)


def test_monotonicity_probe():
    # whether compellingness is monotone in the color count is open; record
    # any (graph, property, k) with k compelling but k+1 not, never assert
    findings = []
    scanned = 0
    for g in solver_corpus(count=10, max_n=6, seed=81):
        for prop in P:
            compelled_at = set()
            for k in range(1, g.n + 1):
                if any(
                    is_compelling(g, c, prop).compelling
                    for c in canonical_colorings(g, k)
                ):
                    compelled_at.add(k)
                scanned += 1
            for k in compelled_at:
                if k + 1 <= g.n and k + 1 not in compelled_at:
                    findings.append((g.name, prop.value, k))
    print(f"monotonicity probe: scanned {scanned} levels, findings: {findings}")
    assert scanned > 0


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------


def test_bounds_examples():
    assert chi_bounds(make_path(7), P.EDGE) == (2, 4)
    assert chi_bounds(make_cycle(6), P.CONNECTED) == (4, 6)
    assert chi_bounds(make_complete(4), P.EDGE) == (4, 6)
    assert compelling_chromatic_number(make_complete(4), P.EDGE).value == 4


def test_bounds_infeasible_propagates():
    assert chi_bounds(make_empty(4), P.EDGE) is None


def test_disjoint_union_bounds_examples():
    assert disjoint_union_bounds(P.DOM, [(3, 2), (3, 2)]) == (5, 6)
    assert disjoint_union_bounds(P.DOM, [(4, 2)]) == (4, 4)
    lo, hi = disjoint_union_bounds(P.TDOM, [(2, 2), (3, 3)])
    assert lo == hi == 5


def test_disjoint_union_bounds_rejects_non_distributing():
    with pytest.raises(ValueError):
        disjoint_union_bounds(P.EDGE, [(3, 2), (3, 2)])
    with pytest.raises(ValueError):
        disjoint_union_bounds(P.DOM, [])
