"""Verification suites: seeded corpora plus the cross-checks between the
exact solver, the closed forms, the per-vertex fast paths, and the
polynomial tester.

Each suite returns a :class:`SuiteResult` with one :class:`CheckResult`
per assertion; the CLI's ``verify`` subcommand and the acceptance tests
both run these.  All randomness flows from a single seed, so a rerun with
the same seed reproduces every corpus and every verdict.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .closed_forms import (
    chi_conn_cycle,
    chi_conn_mop,
    chi_conn_path,
    chi_conn_tree,
    chi_edge_cycle,
    chi_edge_path,
    chi_edge_tree,
    edge_compelling_five_coloring,
    is_chord_cover,
    mop_chords,
)
from .graphs import (
    Graph,
    chromatic_number,
    connected_domination_number,
    diameter,
    disjoint_union,
    is_complete,
    is_complete_bipartite,
    is_connected,
    iter_bits,
    join_dominator,
    make_cycle,
    make_double_broom,
    make_fan,
    make_path,
    make_random_graph,
    make_random_mop,
    make_random_tree,
    make_split_graph,
    make_star,
    minimum_connected_dominating_set,
)
from .properties import SubsetProperty, eval_property_mask, min_property_size
from .solver import (
    _dom_compelled,
    _iter_canonical,
    _tdom_compelled,
    compelling_chromatic_number,
    disjoint_union_bounds,
    is_compelling,
)
from .td3 import _tdc_masks, chi_connected_is_3, has_tdc3, is_total_dominator_coloring

DEFAULT_SEED = 1729
CORPUS_SIZE = 500


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def main_corpus(seed: int = DEFAULT_SEED) -> tuple[Graph, ...]:
    """500 seeded random graphs with 3..8 vertices and mixed densities."""
    rng = random.Random(seed)
    out = []
    for i in range(CORPUS_SIZE):
        n = rng.randint(3, 8)
        p = rng.choice((0.3, 0.5, 0.7))
        out.append(make_random_graph(n, p, seed=rng.getrandbits(32), name=f"corpus8[{i}]"))
    return tuple(out)


@lru_cache(maxsize=8)
def td3_corpus(seed: int = DEFAULT_SEED) -> tuple[Graph, ...]:
    """500 seeded random graphs with 3..9 vertices for the tester checks."""
    rng = random.Random(seed + 7)
    out = []
    for i in range(CORPUS_SIZE):
        n = rng.randint(3, 9)
        p = rng.choice((0.3, 0.5, 0.7))
        out.append(make_random_graph(n, p, seed=rng.getrandbits(32), name=f"corpus9[{i}]"))
    return tuple(out)


def named_families(max_n: int = 9) -> list[Graph]:
    """Paths, cycles, stars, double brooms, and fans of order <= max_n."""
    graphs: list[Graph] = []
    graphs += [make_path(n) for n in range(2, max_n + 1)]
    graphs += [make_cycle(n) for n in range(3, max_n + 1)]
    graphs += [make_star(m) for m in range(1, max_n)]
    graphs += [
        make_double_broom(a, b)
        for a in range(1, max_n)
        for b in range(a, max_n)
        if a + b + 2 <= max_n
    ]
    graphs += [make_fan(n) for n in range(1, max_n)]
    return graphs


class SolverCache:
    """Memoizes the exact solver results over a fixed corpus, since several
    suites interrogate the same graphs."""

    def __init__(self) -> None:
        self._chi: dict[Graph, int] = {}
        self._chi_p: dict[tuple[Graph, SubsetProperty], int | None] = {}
        self._m_p: dict[tuple[Graph, SubsetProperty], int | None] = {}
        self._gamma: dict[Graph, int] = {}
        self._conn: dict[Graph, bool] = {}

    def chi(self, g: Graph) -> int:
        if g not in self._chi:
            self._chi[g] = chromatic_number(g)
        return self._chi[g]

    def chi_p(self, g: Graph, prop: SubsetProperty) -> int | None:
        key = (g, prop)
        if key not in self._chi_p:
            self._chi_p[key] = compelling_chromatic_number(g, prop).value
        return self._chi_p[key]

    def m_p(self, g: Graph, prop: SubsetProperty) -> int | None:
        key = (g, prop)
        if key not in self._m_p:
            self._m_p[key] = min_property_size(prop, g)
        return self._m_p[key]

    def gamma_c(self, g: Graph) -> int:
        if g not in self._gamma:
            self._gamma[g] = connected_domination_number(g)
        return self._gamma[g]

    def connected(self, g: Graph) -> bool:
        if g not in self._conn:
            self._conn[g] = is_connected(g)
        return self._conn[g]


@lru_cache(maxsize=8)
def shared_cache(seed: int = DEFAULT_SEED) -> SolverCache:
    """Process-wide cache shared by every suite run at this seed."""
    return SolverCache()


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def _naive_compelled(g: Graph, classes, prop: SubsetProperty) -> bool:
    """Definition-level check: every rainbow committee satisfies prop."""
    for committee in itertools.product(*classes):
        mask = 0
        for v in committee:
            mask |= 1 << v
        if not eval_property_mask(prop, g, mask):
            return False
    return True


def _induced_is_forest(g: Graph, mask: int) -> bool:
    if mask == 0:
        return True
    edges = 0
    verts = 0
    for v in iter_bits(mask):
        verts += 1
        edges += (g.adj_bits[v] & mask).bit_count()
    edges //= 2
    comps = 0
    unseen = mask
    while unseen:
        comps += 1
        frontier = unseen & -unseen
        reach = frontier
        unseen ^= frontier
        while frontier:
            grown = 0
            for v in iter_bits(unseen):
                if g.adj_bits[v] & frontier:
                    grown |= 1 << v
            reach |= grown
            unseen ^= grown
            frontier = grown
    return edges == verts - comps


def _minimal_cds_samples(g: Graph, rng: random.Random, tries: int = 4):
    """The minimum connected dominating set plus a few deletion-minimal
    ones obtained by shrinking the full vertex set in random orders."""
    samples = {tuple(minimum_connected_dominating_set(g))}
    for _ in range(tries):
        order = list(range(g.n))
        rng.shuffle(order)
        current = set(range(g.n))
        changed = True
        while changed:
            changed = False
            for v in order:
                if v in current and len(current) > 1:
                    mask = 0
                    for w in current:
                        if w != v:
                            mask |= 1 << w
                    if eval_property_mask(SubsetProperty.CDOM, g, mask):
                        current.discard(v)
                        changed = True
        samples.add(tuple(sorted(current)))
    return sorted(samples)


def _mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------------------
# Family table suites (exact solver vs closed forms)
# ---------------------------------------------------------------------------


def suite_path_edge(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Edge-compelling values on paths P_2..P_12 against the closed form."""
    result = SuiteResult("path-edge")
    start = time.perf_counter()
    for n in range(2, 13):
        want = chi_edge_path(n)
        got = compelling_chromatic_number(make_path(n), SubsetProperty.EDGE).value
        result.add(f"edge-compelling P_{n}", got == want, f"solver={got} closed={want}")
    elapsed = time.perf_counter() - start
    result.add("paths finished under 10s", elapsed < 10.0, f"{elapsed:.2f}s")
    return result


def suite_cycle_edge(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Edge-compelling values on cycles C_3..C_12 against the closed form."""
    result = SuiteResult("cycle-edge")
    start = time.perf_counter()
    for n in range(3, 13):
        want = chi_edge_cycle(n)
        got = compelling_chromatic_number(make_cycle(n), SubsetProperty.EDGE).value
        result.add(f"edge-compelling C_{n}", got == want, f"solver={got} closed={want}")
    elapsed = time.perf_counter() - start
    result.add("cycles finished under 30s", elapsed < 30.0, f"{elapsed:.2f}s")
    return result


def suite_connected_families(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Connectivity-compelling values on paths and cycles up to order 9."""
    result = SuiteResult("connected-families")
    start = time.perf_counter()
    for n in range(3, 10):
        want = chi_conn_path(n)
        got = compelling_chromatic_number(make_path(n), SubsetProperty.CONNECTED).value
        result.add(
            f"connectivity-compelling P_{n}", got == want, f"solver={got} closed={want}"
        )
    for n in range(3, 10):
        want = chi_conn_cycle(n)
        got = compelling_chromatic_number(make_cycle(n), SubsetProperty.CONNECTED).value
        result.add(
            f"connectivity-compelling C_{n}", got == want, f"solver={got} closed={want}"
        )
    elapsed = time.perf_counter() - start
    result.add("paths and cycles finished under 5min", elapsed < 300.0, f"{elapsed:.2f}s")
    return result


def suite_trees(seed: int = DEFAULT_SEED) -> SuiteResult:
    """50 random trees: interior-count formula and the radius-2/double-broom
    characterization, both against the solver."""
    result = SuiteResult("trees")
    rng = random.Random(seed + 11)
    bad_conn = []
    bad_edge = []
    for i in range(50):
        n = rng.randint(4, 9)
        t = make_random_tree(n, seed=rng.getrandbits(32))
        conn = compelling_chromatic_number(t, SubsetProperty.CONNECTED).value
        if conn != chi_conn_tree(t):
            bad_conn.append((t.name, conn, chi_conn_tree(t)))
        edge = compelling_chromatic_number(t, SubsetProperty.EDGE).value
        if edge != chi_edge_tree(t):
            bad_edge.append((t.name, edge, chi_edge_tree(t)))
    result.add(
        "trees: connectivity value is 1 + interior count",
        not bad_conn,
        f"violations={bad_conn[:3]}" if bad_conn else "50 trees",
    )
    result.add(
        "trees: edge value matches the tree characterization",
        not bad_edge,
        f"violations={bad_edge[:3]}" if bad_edge else "50 trees",
    )
    return result


def suite_mop_claims(seed: int = DEFAULT_SEED) -> SuiteResult:
    """30 random maximal outerplanar graphs: the connected-domination-plus-2
    law and the supporting structural claims."""
    result = SuiteResult("mop-claims")
    rng = random.Random(seed + 13)
    bad_value = []
    bad_acyclic = []
    bad_cover = []
    bad_minimal = []
    for i in range(30):
        n = rng.randint(4, 11)
        g = make_random_mop(n, seed=rng.getrandbits(32))
        got = compelling_chromatic_number(g, SubsetProperty.CONNECTED).value
        want = chi_conn_mop(g)
        if got != want:
            bad_value.append((g.name, got, want))
        cds_samples = _minimal_cds_samples(g, rng)
        for cds in cds_samples:
            mask = g.full_mask & ~_mask_of(cds)
            if not _induced_is_forest(g, mask):
                bad_acyclic.append((g.name, cds))
            complement = [v for v in range(g.n) if v not in cds]
            if not any(
                g.has_edge(u, v) for u, v in itertools.combinations(complement, 2)
            ):
                bad_minimal.append((g.name, cds))
        # every chord cover over chord endpoints is a connected dominating set
        chords = mop_chords(g)
        endpoints = sorted({v for e in chords for v in e})
        for size in range(1, len(endpoints) + 1):
            for combo in itertools.combinations(endpoints, size):
                if is_chord_cover(g, combo):
                    if not eval_property_mask(SubsetProperty.CDOM, g, _mask_of(combo)):
                        bad_cover.append((g.name, combo))
    result.add(
        "mops: connectivity value is connected domination number + 2",
        not bad_value,
        f"violations={bad_value[:3]}" if bad_value else "30 mops",
    )
    result.add(
        "mops: removing a connected dominating set leaves a forest",
        not bad_acyclic,
        f"violations={bad_acyclic[:3]}" if bad_acyclic else "",
    )
    result.add(
        "mops: chord covers are connected dominating sets",
        not bad_cover,
        f"violations={bad_cover[:3]}" if bad_cover else "",
    )
    result.add(
        "mops: complement of a minimal connected dominating set has an edge",
        not bad_minimal,
        f"violations={bad_minimal[:3]}" if bad_minimal else "",
    )
    return result


# ---------------------------------------------------------------------------
# Corpus suites
# ---------------------------------------------------------------------------


def suite_equivalences(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Per-coloring equivalences over every canonical proper coloring with
    at most 4 colors of every corpus graph: the per-vertex dominator and
    total-dominator characterizations, isolate-freeness matching total
    domination, and connectivity matching connected domination on connected
    graphs with an edge."""
    result = SuiteResult("equivalences")
    corpus = main_corpus(seed)
    violations: dict[str, list] = {"dom": [], "tdom": [], "if": [], "conn": []}
    colorings_checked = 0
    for g in corpus:
        conn_with_edge = g.edge_count > 0 and is_connected(g)
        for k in range(1, min(4, g.n) + 1):
            for colors, masks in _iter_canonical(g, k):
                colorings_checked += 1
                classes = [tuple(iter_bits(m)) for m in masks]
                if _dom_compelled(g, masks) != _naive_compelled(
                    g, classes, SubsetProperty.DOM
                ):
                    violations["dom"].append((g.name, tuple(colors)))
                tdom_naive = _naive_compelled(g, classes, SubsetProperty.TDOM)
                if _tdom_compelled(g, masks) != tdom_naive:
                    violations["tdom"].append((g.name, tuple(colors)))
                if (
                    _naive_compelled(g, classes, SubsetProperty.ISOLATE_FREE)
                    != tdom_naive
                ):
                    violations["if"].append((g.name, tuple(colors)))
                if conn_with_edge:
                    if _naive_compelled(
                        g, classes, SubsetProperty.CONNECTED
                    ) != _naive_compelled(g, classes, SubsetProperty.CDOM):
                        violations["conn"].append((g.name, tuple(colors)))
    detail = f"{len(corpus)} graphs, {colorings_checked} colorings"
    result.add(
        "dominator coloring matches domination compelling",
        not violations["dom"],
        detail if not violations["dom"] else f"violations={violations['dom'][:3]}",
    )
    result.add(
        "total dominator coloring matches total-domination compelling",
        not violations["tdom"],
        detail if not violations["tdom"] else f"violations={violations['tdom'][:3]}",
    )
    result.add(
        "isolate-free compelling matches total-domination compelling",
        not violations["if"],
        detail if not violations["if"] else f"violations={violations['if'][:3]}",
    )
    result.add(
        "connectivity compelling matches connected-domination compelling",
        not violations["conn"],
        detail if not violations["conn"] else f"violations={violations['conn'][:3]}",
    )
    return result


def suite_bounds(seed: int = DEFAULT_SEED) -> SuiteResult:
    """General sandwich bounds for the upwards-closed properties, and the
    chromatic/connected-domination bounds for connectivity."""
    result = SuiteResult("bounds")
    corpus = main_corpus(seed)
    cache = shared_cache(seed)
    up_props = (
        SubsetProperty.DOM,
        SubsetProperty.TDOM,
        SubsetProperty.EDGE,
        SubsetProperty.CDOM,
    )
    bad_general = []
    bad_conn = []
    for g in corpus:
        chi = cache.chi(g)
        for prop in up_props:
            m = cache.m_p(g, prop)
            if m is None:
                continue
            value = cache.chi_p(g, prop)
            if value is None or not max(m, chi) <= value <= m + chi:
                bad_general.append((g.name, prop.value, value, m, chi))
        if g.n >= 2 and cache.connected(g):
            gamma = cache.gamma_c(g)
            value = cache.chi_p(g, SubsetProperty.CONNECTED)
            if value is None or not max(chi, gamma) <= value <= chi + gamma:
                bad_conn.append((g.name, value, gamma, chi))
    result.add(
        "upwards-closed sandwich bounds",
        not bad_general,
        f"violations={bad_general[:3]}" if bad_general else f"{len(corpus)} graphs",
    )
    result.add(
        "connectivity bounds via connected domination",
        not bad_conn,
        f"violations={bad_conn[:3]}" if bad_conn else "",
    )
    return result


def suite_disjoint_union(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Disjoint-union bounds for the distributing domination properties on
    sampled pairs of small corpus graphs, including the equality case."""
    result = SuiteResult("disjoint-union")
    corpus = [g for g in main_corpus(seed) if g.n <= 5]
    rng = random.Random(seed + 17)
    pairs = [(rng.choice(corpus), rng.choice(corpus)) for _ in range(40)]
    bad_chain = []
    bad_equality = []
    checked = 0
    for g1, g2 in pairs:
        union = disjoint_union(g1, g2)
        for prop in (SubsetProperty.DOM, SubsetProperty.TDOM):
            m1 = min_property_size(prop, g1)
            m2 = min_property_size(prop, g2)
            if m1 is None or m2 is None:
                continue
            c1 = compelling_chromatic_number(g1, prop).value
            c2 = compelling_chromatic_number(g2, prop).value
            lo, hi = disjoint_union_bounds(prop, [(c1, m1), (c2, m2)])
            cu = compelling_chromatic_number(union, prop).value
            checked += 1
            if cu is None or not lo <= cu <= hi:
                bad_chain.append((g1.name, g2.name, prop.value, lo, cu, hi))
            elif m1 == c1 and m2 == c2 and not lo == cu == hi:
                bad_equality.append((g1.name, g2.name, prop.value, lo, cu, hi))
    result.add(
        "disjoint-union chain holds",
        not bad_chain,
        f"violations={bad_chain[:3]}" if bad_chain else f"{checked} cases",
    )
    result.add(
        "equality when both components are tight",
        not bad_equality,
        f"violations={bad_equality[:3]}" if bad_equality else "",
    )
    return result


def suite_extremal(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Extremal characterizations on the order <= 7 corpus slice: the
    value-2 and value-n characterizations and the high-chromatic collapse
    of the edge-compelling value."""
    result = SuiteResult("extremal")
    corpus = [g for g in main_corpus(seed) if g.n <= 7]
    cache = shared_cache(seed)
    bad_edge2 = []
    bad_conn2 = []
    bad_connn = []
    bad_high = []
    probe_hits: dict[tuple, list[str]] = {}
    for g in corpus:
        cb = is_complete_bipartite(g)
        edge = cache.chi_p(g, SubsetProperty.EDGE)
        conn = cache.chi_p(g, SubsetProperty.CONNECTED)
        chi = cache.chi(g)
        if (edge == 2) != cb:
            bad_edge2.append((g.name, edge, cb))
        if (conn == 2) != cb:
            bad_conn2.append((g.name, conn, cb))
        if (conn == g.n) != is_complete(g):
            bad_connn.append((g.name, conn))
        if 2 * chi >= g.n + 2 and edge != chi:
            bad_high.append((g.name, chi, edge))
        if 2 * chi == g.n + 1 and edge != chi:
            shape = "connected" if cache.connected(g) else "disconnected"
            probe_hits.setdefault((shape, g.n, chi, edge), []).append(g.name)
    for (shape, n, chi, edge), names in sorted(probe_hits.items()):
        result.notes.append(
            f"probe: {len(names)} {shape} graph(s) with n={n} have chromatic "
            f"number (n+1)/2 = {chi} but edge-compelling value {edge} "
            f"(e.g. {', '.join(names[:3])})"
        )
    result.add(
        "edge-compelling equals 2 exactly for complete bipartite",
        not bad_edge2,
        f"violations={bad_edge2[:3]}" if bad_edge2 else f"{len(corpus)} graphs",
    )
    result.add(
        "connectivity-compelling equals 2 exactly for complete bipartite",
        not bad_conn2,
        f"violations={bad_conn2[:3]}" if bad_conn2 else "",
    )
    result.add(
        "connectivity-compelling equals n exactly for complete graphs",
        not bad_connn,
        f"violations={bad_connn[:3]}" if bad_connn else "",
    )
    result.add(
        "chromatic number at least n/2+1 collapses the edge value",
        not bad_high,
        f"violations={bad_high[:3]}" if bad_high else "",
    )
    if not result.notes:
        result.notes.append("probe: no graph at the (n+1)/2 threshold deviated")
    return result


def suite_diameter(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Edge-compelling value 3 forces diameter at most 5 (on connected
    graphs, where diameter is defined)."""
    result = SuiteResult("diameter")
    corpus = main_corpus(seed)
    cache = shared_cache(seed)
    bad = []
    hits = 0
    for g in corpus:
        if not cache.connected(g):
            continue
        if cache.chi_p(g, SubsetProperty.EDGE) == 3:
            hits += 1
            if diameter(g) > 5:
                bad.append((g.name, diameter(g)))
    result.add(
        "edge value 3 implies diameter at most 5",
        not bad,
        f"violations={bad[:3]}" if bad else f"{hits} graphs with value 3",
    )
    return result


def suite_split(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Split graphs S_m: the independent half is a committee under any
    m-coloring, so the edge-compelling value exceeds m."""
    result = SuiteResult("split")
    values = []
    for m in (3, 4, 5):
        g = make_split_graph(m)
        value = compelling_chromatic_number(g, SubsetProperty.EDGE).value
        values.append((m, value))
        result.add(
            f"edge-compelling S_{m} exceeds its chromatic number {m}",
            value is not None and value > m,
            f"value={value}",
        )
    result.notes.append(f"recorded exact values: {values}")
    return result


def suite_td3(seed: int = DEFAULT_SEED) -> SuiteResult:
    """The polynomial tester against brute-force 3-class enumeration, plus
    the connectivity-equals-3 consequence against the exact solver."""
    result = SuiteResult("td3")
    graphs = list(td3_corpus(seed)) + named_families(9)
    bad_agree = []
    bad_sound = []
    slow = 0.0
    for g in graphs:
        t0 = time.perf_counter()
        witness = has_tdc3(g)
        took = time.perf_counter() - t0
        if g.n == 9:
            slow = max(slow, took)
        if witness is not None:
            ok = (
                witness.coloring.k == 3
                and is_total_dominator_coloring(g, witness.coloring)
            )
            if not ok:
                bad_sound.append((g.name, witness))
        if any(not g.adj[v] for v in range(g.n)):
            brute = False
        else:
            brute = any(_tdc_masks(g, masks) for _, masks in _iter_canonical(g, 3))
        if (witness is not None) != brute:
            bad_agree.append((g.name, witness is not None, brute))
    result.add(
        "tester agrees with brute-force 3-class existence",
        not bad_agree,
        f"violations={bad_agree[:3]}" if bad_agree else f"{len(graphs)} graphs",
    )
    result.add(
        "tester witnesses are valid total dominator colorings",
        not bad_sound,
        f"violations={bad_sound[:3]}" if bad_sound else "",
    )
    result.add(
        "tester under 1s per graph at order 9",
        slow < 1.0,
        f"max={slow * 1000:.1f}ms",
    )
    cache = shared_cache(seed)
    bad_conn3 = []
    for g in main_corpus(seed):
        if g.n < 2 or not cache.connected(g):
            continue
        want = cache.chi_p(g, SubsetProperty.CONNECTED) == 3
        if chi_connected_is_3(g) != want:
            bad_conn3.append((g.name, want))
    result.add(
        "connectivity-equals-3 matches the exact solver",
        not bad_conn3,
        f"violations={bad_conn3[:3]}" if bad_conn3 else "",
    )
    return result


def suite_gadget(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Universal-vertex gadget on all 64 labeled 4-vertex graphs: the
    augmented graph has edge-compelling value at most 4 exactly when the
    base graph is 3-colorable."""
    result = SuiteResult("gadget")
    slots = list(itertools.combinations(range(4), 2))
    bad = []
    for bits in range(64):
        edges = [slots[i] for i in range(6) if bits >> i & 1]
        g = Graph.from_edges(4, edges, name=f"G4#{bits}")
        three_colorable = any(
            all(assign[u] != assign[v] for u, v in edges)
            for assign in itertools.product(range(3), repeat=4)
        )
        value = compelling_chromatic_number(join_dominator(g), SubsetProperty.EDGE).value
        if (value is not None and value <= 4) != three_colorable:
            bad.append((bits, value, three_colorable))
    result.add(
        "gadget: edge value at most 4 iff base 3-colorable",
        not bad,
        f"violations={bad[:3]}" if bad else "64 graphs",
    )
    return result


def suite_large_mop(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Five-color construction on an 80-vertex maximal outerplanar graph:
    two unique adjacent colors on an edge plus a proper 3-coloring of the
    rest compels an edge in every committee.  (One-sided check; the exact
    value at this order is out of reach.)"""
    result = SuiteResult("large-mop")
    g = make_random_mop(80, seed=seed + 23)
    coloring = edge_compelling_five_coloring(g)
    report = is_compelling(g, coloring, SubsetProperty.EDGE)
    result.add(
        "five-color construction compels an edge on an 80-vertex mop",
        coloring.k == 5 and report.compelling,
        f"k={coloring.k} compelling={report.compelling}",
    )
    return result


SUITES = {
    "path-edge": suite_path_edge,
    "cycle-edge": suite_cycle_edge,
    "connected-families": suite_connected_families,
    "trees": suite_trees,
    "mop-claims": suite_mop_claims,
    "equivalences": suite_equivalences,
    "bounds": suite_bounds,
    "disjoint-union": suite_disjoint_union,
    "extremal": suite_extremal,
    "diameter": suite_diameter,
    "split": suite_split,
    "td3": suite_td3,
    "gadget": suite_gadget,
    "large-mop": suite_large_mop,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    """Run one suite by name, or every suite for the name 'all'."""
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    if name not in SUITES:
        valid = ", ".join(sorted(SUITES) + ["all"])
        raise ValueError(f"unknown suite {name!r}; expected one of: {valid}")
    return [SUITES[name](seed)]
