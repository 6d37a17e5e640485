"""Small simple-graph toolkit: immutable adjacency-set graphs, family
generators, exact classical invariants, and a plain text file format.

Vertices are always the dense range 0..n-1.  Every function here is pure and
every :class:`Graph` is immutable after construction, so values are safe to
share between threads.  The exponential routines (exact chromatic number,
subset enumerations) take an explicit ``max_n`` cap so callers opt in to
larger searches deliberately.
"""

from __future__ import annotations

import bisect
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

# Default size caps for the exponential routines.  Callers may pass a larger
# max_n explicitly; the defaults keep accidental huge searches from hanging.
EXACT_CHROMATIC_CAP = 16
SUBSET_ENUM_CAP = 20


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_connected(adj_bits: tuple[int, ...], mask: int) -> bool:
    """True if the subgraph induced by the bitmask ``mask`` is connected.

    The empty mask is rejected; a single vertex counts as connected.
    """
    if mask == 0:
        raise ValueError("connectivity of the empty set is undefined")
    reach = mask & -mask
    frontier = reach
    rest = mask ^ reach
    while frontier and rest:
        grown = 0
        for v in iter_bits(rest):
            if adj_bits[v] & frontier:
                grown |= 1 << v
        reach |= grown
        rest ^= grown
        frontier = grown
    return rest == 0


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with set adjacency.

    ``name`` and ``outer_cycle`` are annotations (generator provenance and,
    for maximal outerplanar graphs, the outer-cycle vertex order); they are
    excluded from equality and hashing.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)
    outer_cycle: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from vertex count")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of vertex {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.outer_cycle is not None:
            if sorted(self.outer_cycle) != list(range(self.n)):
                raise ValueError("outer cycle must be a permutation of the vertices")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges,
        name: str = "",
        outer_cycle=None,
    ) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            n,
            tuple(frozenset(s) for s in nbrs),
            name=name,
            outer_cycle=tuple(outer_cycle) if outer_cycle is not None else None,
        )

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks (bit v set iff v is a neighbor)."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adj)

    @cached_property
    def closed_bits(self) -> tuple[int, ...]:
        """Closed neighborhoods N[v] as bitmasks."""
        return tuple(bits | (1 << v) for v, bits in enumerate(self.adj_bits))

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


# ---------------------------------------------------------------------------
# Family generators
# ---------------------------------------------------------------------------


def make_path(n: int) -> Graph:
    """Path v0-v1-...-v(n-1); n >= 1."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def make_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices in index order."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges, name=f"C{n}")


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, itertools.combinations(range(n), 2), name=f"K{n}")


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part A = 0..a-1 and part B = a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides of a complete bipartite graph must be nonempty")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges, name=f"K{a},{b}")


def make_star(m: int) -> Graph:
    """Star K_{1,m}: center 0 with m >= 1 leaves."""
    if m < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)], name=f"K1,{m}")


def make_empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    return Graph.from_edges(n, [], name=f"E{n}")


def make_double_broom(a: int, b: int) -> Graph:
    """Two stars with a and b leaves, one leaf of each joined by an edge.

    Layout: center 0 with leaves 1..a (leaf 1 is the joined one), center a+1
    with leaves a+2..a+b+1 (leaf a+2 is the joined one).  For a, b >= 2 the
    result is a caterpillar of diameter 5; a = 1 or b = 1 degenerates to a
    path or a broom, which this generator allows.
    """
    if a < 1 or b < 1:
        raise ValueError("each star needs at least one leaf")
    s, s2 = 0, a + 1
    edges = [(s, i) for i in range(1, a + 1)]
    edges += [(s2, i) for i in range(a + 2, a + b + 2)]
    edges.append((1, a + 2))
    return Graph.from_edges(a + b + 2, edges, name=f"double_broom({a},{b})")


def make_split_graph(m: int) -> Graph:
    """Clique 0..m-1 plus independent set m..2m-1, with independent vertex
    m+i adjacent to every clique vertex except i."""
    if m < 2:
        raise ValueError("split graph needs m >= 2")
    edges = list(itertools.combinations(range(m), 2))
    edges += [(j, m + i) for i in range(m) for j in range(m) if j != i]
    return Graph.from_edges(2 * m, edges, name=f"S{m}")


def make_fan(n: int) -> Graph:
    """Path on vertices 0..n-1 joined to a universal hub vertex n."""
    if n < 1:
        raise ValueError("fan needs a nonempty path")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges, name=f"fan({n})")


def join_dominator(g: Graph) -> Graph:
    """Add one new vertex adjacent to every existing vertex."""
    edges = list(g.edges) + [(v, g.n) for v in range(g.n)]
    return Graph.from_edges(g.n + 1, edges, name=f"{g.name or 'G'}+dominator")


def make_random_graph(n: int, p: float, seed: int, name: str = "") -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, name=name or f"G({n},{p};{seed})")


def make_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n >= 1 vertices (Pruefer decoding)."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return Graph.from_edges(1, [], name=f"T({n};{seed})")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)], name=f"T({n};{seed})")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return Graph.from_edges(n, edges, name=f"T({n};{seed})")


def make_random_mop(n: int, seed: int) -> Graph:
    """Random maximal outerplanar graph on n >= 3 vertices.

    Ear insertion: start from the triangle 0,1,2 and insert each vertex i
    between a uniformly chosen adjacent pair on the current outer cycle.  The
    final outer-cycle order is recorded on the graph.  2n-3 edges always.
    """
    if n < 3:
        raise ValueError("maximal outerplanar graph needs at least three vertices")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    cycle = [0, 1, 2]
    for v in range(3, n):
        pos = rng.randrange(len(cycle))
        a, b = cycle[pos], cycle[(pos + 1) % len(cycle)]
        edges += [(a, v), (b, v)]
        cycle.insert(pos + 1, v)
    return Graph.from_edges(n, edges, name=f"MOP({n};{seed})", outer_cycle=cycle)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, with h's vertices shifted up by g.n."""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph.from_edges(
        g.n + h.n, edges, name=f"{g.name or 'G'}|{h.name or 'H'}"
    )


# ---------------------------------------------------------------------------
# Maximal outerplanar recognition
# ---------------------------------------------------------------------------


def _mop_reduction(g: Graph):
    """Reduce g to a triangle by repeatedly removing a degree-2 vertex whose
    neighbors are adjacent (lowest index first).

    Returns (removals, triangle) where removals is the list of (v, x, y)
    steps taken, or None when the reduction gets stuck.
    """
    n = g.n
    nbrs = [set(s) for s in g.adj]
    alive = [True] * n
    removals: list[tuple[int, int, int]] = []
    remaining = n
    while remaining > 3:
        pick = None
        for v in range(n):
            if alive[v] and len(nbrs[v]) == 2:
                x, y = sorted(nbrs[v])
                if y in nbrs[x]:
                    pick = (v, x, y)
                    break
        if pick is None:
            return None
        v, x, y = pick
        nbrs[x].discard(v)
        nbrs[y].discard(v)
        nbrs[v].clear()
        alive[v] = False
        removals.append((v, x, y))
        remaining -= 1
    triangle = [v for v in range(n) if alive[v]]
    if any(len(nbrs[v]) != 2 for v in triangle):
        return None
    return removals, triangle


def is_mop(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Recognize maximal outerplanar graphs and recover the outer cycle.

    Reduces by removing triangle ears down to a triangle, then certifies the
    result by rebuilding the outer cycle: each removed ear must reinsert
    between a consecutive pair of the partial cycle.  The rebuild step is
    what rejects the non-outerplanar graphs (some 2-trees) that ear removal
    alone would accept.
    """
    n = g.n
    if n < 3 or g.edge_count != 2 * n - 3:
        return False, None
    reduction = _mop_reduction(g)
    if reduction is None:
        return False, None
    removals, triangle = reduction
    cycle = list(triangle)
    for v, x, y in reversed(removals):
        i = cycle.index(x)
        j = cycle.index(y)
        size = len(cycle)
        if (i + 1) % size == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % size == i:
            cycle.insert(j + 1, v)
        else:
            return False, None
    return True, tuple(cycle)


def mop_three_coloring(g: Graph) -> tuple[int, ...]:
    """A proper 3-coloring of a maximal outerplanar graph.

    Colors the reduction's final triangle 0,1,2 and replays the removed ears
    in reverse, giving each the color its two attachment vertices miss.
    """
    ok, _ = is_mop(g)
    if not ok:
        raise ValueError("not a maximal outerplanar graph")
    removals, triangle = _mop_reduction(g)
    colors = [-1] * g.n
    for c, v in enumerate(triangle):
        colors[v] = c
    for v, x, y in reversed(removals):
        colors[v] = 3 - colors[x] - colors[y]
    return tuple(colors)


# ---------------------------------------------------------------------------
# Classical invariants
# ---------------------------------------------------------------------------


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.add(v)
                    stack.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return mask_connected(g.adj_bits, g.full_mask)


def _bfs_dists(g: Graph, start: int) -> list[int]:
    dist = [-1] * g.n
    dist[start] = 0
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] == -1:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def eccentricities(g: Graph) -> list[int]:
    if not is_connected(g):
        raise ValueError("eccentricities require a connected graph")
    return [max(_bfs_dists(g, v)) for v in range(g.n)]


def diameter(g: Graph) -> int:
    """Largest vertex eccentricity; connected input required."""
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    """Smallest vertex eccentricity; connected input required."""
    return min(eccentricities(g))


def is_bipartite(g: Graph) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """Two-colorability test; on success also returns the bipartition.

    The component containing the lowest unvisited vertex puts that vertex in
    the first part, so the returned parts are deterministic.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.adj[u]:
                    if side[v] == -1:
                        side[v] = 1 - side[u]
                        nxt.append(v)
                    elif side[v] == side[u]:
                        return False, None
            frontier = nxt
    part0 = frozenset(v for v in range(g.n) if side[v] == 0)
    part1 = frozenset(v for v in range(g.n) if side[v] == 1)
    return True, (part0, part1)


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_complete_bipartite(g: Graph) -> bool:
    """True for K_{a,b} with both sides nonempty (hence connected)."""
    ok, parts = is_bipartite(g)
    if not ok:
        return False
    a, b = parts
    return len(a) >= 1 and len(b) >= 1 and g.edge_count == len(a) * len(b)


def _greedy_clique(g: Graph) -> list[int]:
    """Greedy clique, largest degree first; a chromatic lower bound."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    cand = set(range(g.n))
    for v in order:
        if v in cand:
            clique.append(v)
            cand &= g.adj[v]
    return clique


def _greedy_coloring(g: Graph) -> tuple[int, list[int]]:
    """Largest-first greedy coloring; an upper bound for the exact search."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    used = 0
    for v in order:
        taken = {colors[u] for u in g.adj[v] if colors[u] != -1}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used, colors


def chromatic_number(g: Graph, max_n: int = EXACT_CHROMATIC_CAP) -> int:
    """Exact chromatic number by branch and bound.

    A greedy clique seeds both the lower bound and a fixed pre-coloring; the
    search assigns remaining vertices in degree order under the canonical
    new-color rule, pruning against the best coloring found so far.
    """
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, over the cap of {max_n}")
    clique = _greedy_clique(g)
    lower = len(clique)
    upper, _ = _greedy_coloring(g)
    if lower == upper:
        return lower
    in_clique = set(clique)
    rest = sorted((v for v in range(g.n) if v not in in_clique), key=lambda v: (-g.degree(v), v))
    order = clique + rest
    adj_bits = g.adj_bits
    colors = [-1] * g.n
    for i, v in enumerate(clique):
        colors[v] = i
    best = upper
    n = g.n

    def search(idx: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if idx == n:
            best = used
            return
        v = order[idx]
        forbidden = 0
        for u in iter_bits(adj_bits[v]):
            if colors[u] != -1:
                forbidden |= 1 << colors[u]
        limit = min(used + 1, best - 1)
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            search(idx + 1, max(used, c + 1))
            colors[v] = -1

    search(len(clique), lower)
    return best


def connected_domination_number(g: Graph, max_n: int = SUBSET_ENUM_CAP) -> int:
    """Minimum size of a connected dominating set; connected input required."""
    return len(minimum_connected_dominating_set(g, max_n=max_n))


def minimum_connected_dominating_set(
    g: Graph, max_n: int = SUBSET_ENUM_CAP
) -> tuple[int, ...]:
    """First minimum connected dominating set in size-then-lex order."""
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, over the cap of {max_n}")
    if not is_connected(g):
        raise ValueError("connected domination requires a connected graph")
    closed = g.closed_bits
    adj_bits = g.adj_bits
    full = g.full_mask
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            cover = 0
            mask = 0
            for v in combo:
                cover |= closed[v]
                mask |= 1 << v
            if cover == full and mask_connected(adj_bits, mask):
                return combo
    raise AssertionError("unreachable: the whole vertex set always qualifies")


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------
#
# Line 1: "n m".  Then m lines "u v" with 0 <= u < v < n.  Lines starting
# with '#' are comments.  An optional final line "outer: v0 v1 ... v(n-1)"
# records a maximal outerplanar graph's outer-cycle order.


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    if g.outer_cycle is not None:
        lines.append("outer: " + " ".join(str(v) for v in g.outer_cycle))
    return "\n".join(lines) + "\n"


def parse_graph(text: str, name: str = "") -> Graph:
    data_lines = []
    outer_line = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("outer:"):
            if outer_line is not None:
                raise ValueError("duplicate outer-cycle line")
            outer_line = line
            continue
        data_lines.append(line)
    if not data_lines:
        raise ValueError("empty graph file")
    header = data_lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line {data_lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad header line {data_lines[0]!r}") from exc
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if len(data_lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(data_lines) - 1}")
    edges = []
    seen = set()
    for line in data_lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"bad edge line {line!r}") from exc
        if not (0 <= u < v < n):
            raise ValueError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    outer = None
    if outer_line is not None:
        try:
            outer = tuple(int(t) for t in outer_line[len("outer:"):].split())
        except ValueError as exc:
            raise ValueError("bad outer-cycle line") from exc
        if sorted(outer) != list(range(n)):
            raise ValueError("outer cycle is not a permutation of the vertices")
    return Graph.from_edges(n, edges, name=name, outer_cycle=outer)


def load_graph(path) -> Graph:
    p = Path(path)
    return parse_graph(p.read_text(), name=p.name)


def save_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))
