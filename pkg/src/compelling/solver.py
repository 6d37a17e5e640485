"""Compellingness checking and the exact compelling chromatic number.

A rainbow committee of a proper coloring is a vertex set with exactly one
vertex of each color.  A coloring compels a subset property when every
rainbow committee satisfies it; the compelling chromatic number of a graph
is the minimum number of colors over all compelling proper colorings, or
infeasible when none exists at any number of colors.

The checker dispatches per property: DOM, TDOM and ISOLATE_FREE admit
per-vertex tests (a vertex must dominate some color class, or be adjacent
to all of some other class), EDGE is decided by a pruned search for a
multicolored independent set, and CONNECTED / CDOM fall back to committee
enumeration with early exit.  Reported counterexamples are always the
lexicographically least violating committee under class-index-then-vertex
order, so results are reproducible.

Everything here is a pure function; single-threaded execution throughout.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import cached_property

from .graphs import (
    EXACT_CHROMATIC_CAP,
    Graph,
    chromatic_number,
    connected_domination_number,
    is_connected,
    iter_bits,
)
from .properties import (
    SubsetProperty,
    eval_property_mask,
    min_property_size,
)


class SearchTimeout(RuntimeError):
    """Raised when an exact search exceeds its time budget."""


@dataclass(frozen=True)
class Coloring:
    """A total, surjective color assignment: colors[v] in 0..k-1, all used."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.colors:
            raise ValueError("coloring must assign at least one vertex")
        k = max(self.colors) + 1
        seen = set(self.colors)
        if min(self.colors) < 0:
            raise ValueError("negative color index")
        missing = [c for c in range(k) if c not in seen]
        if missing:
            raise ValueError(f"color {missing[0]} is unused; colors must be 0..k-1")

    @cached_property
    def k(self) -> int:
        return max(self.colors) + 1

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Vertices of each color class, ascending, indexed by color."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return tuple(tuple(cls) for cls in out)

    @cached_property
    def class_masks(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return tuple(masks)

    def canonical(self) -> "Coloring":
        """Relabel colors in order of first use (vertex index order)."""
        return Coloring(canonical_colors(self.colors))


def canonical_colors(colors) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def validate_coloring(g: Graph, coloring: Coloring) -> None:
    """Reject colorings that are not total and proper on ``g``."""
    if len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring assigns {len(coloring.colors)} vertices, graph has {g.n}"
        )
    for u, v in g.edges:
        if coloring.colors[u] == coloring.colors[v]:
            raise ValueError(
                f"improper coloring: adjacent vertices {u} and {v} "
                f"both have color {coloring.colors[u]}"
            )


@dataclass(frozen=True)
class CompellingReport:
    """Verdict of a compellingness check.

    ``counterexample`` is present exactly when the verdict is negative: one
    vertex per color class, in class-index order, whose set violates the
    property.  ``method`` records which checker ran ("per-vertex-fast" or
    "rc-search").
    """

    compelling: bool
    counterexample: tuple[int, ...] | None
    method: str


@dataclass(frozen=True)
class ChiResult:
    """Outcome of an exact compelling chromatic number computation.

    ``value`` is None when no compelling coloring exists at any number of
    colors (or when no vertex subset satisfies the property at all, in which
    case the bounds are None as well).  ``witness`` is the first compelling
    coloring in canonical enumeration order.  ``upper_bound`` is None when
    no general upper bound applies.
    """

    value: int | None
    witness: Coloring | None
    lower_bound: int | None
    upper_bound: int | None

    @property
    def infeasible(self) -> bool:
        return self.value is None


# ---------------------------------------------------------------------------
# Rainbow committees
# ---------------------------------------------------------------------------


def rainbow_committees(coloring: Coloring):
    """All committees (one vertex per color class) in lexicographic order
    by class index then vertex index."""
    return itertools.product(*coloring.classes)


def is_compelling_naive(g: Graph, coloring: Coloring, prop: SubsetProperty) -> bool:
    """Reference checker: test the property on every rainbow committee."""
    validate_coloring(g, coloring)
    for committee in rainbow_committees(coloring):
        mask = 0
        for v in committee:
            mask |= 1 << v
        if not eval_property_mask(prop, g, mask):
            return False
    return True


# ---------------------------------------------------------------------------
# Per-property verdict kernels (operate on class bitmasks)
# ---------------------------------------------------------------------------


def _dom_compelled(g: Graph, class_masks) -> bool:
    """Every vertex dominates some color class (its own may be a singleton)."""
    closed = g.closed_bits
    for v in range(g.n):
        cb = closed[v]
        ok = False
        for m in class_masks:
            if not m & ~cb:
                ok = True
                break
        if not ok:
            return False
    return True


def _tdom_compelled(g: Graph, class_masks) -> bool:
    """Every vertex is adjacent to all of some other color class."""
    adj = g.adj_bits
    for v in range(g.n):
        nb = adj[v]
        ok = False
        for m in class_masks:
            if not m & ~nb:
                ok = True
                break
        if not ok:
            return False
    return True


def _find_independent_committee(g: Graph, class_masks) -> tuple[int, ...] | None:
    """Least committee (class-index-then-vertex order) that is an
    independent set, or None when every committee contains an edge.

    Depth-first over classes in index order; a branch dies as soon as some
    remaining class has no vertex nonadjacent to the partial pick.
    """
    adj = g.adj_bits
    k = len(class_masks)
    pick: list[int] = []

    def descend(i: int, avail: int):
        if i == k:
            return tuple(pick)
        for j in range(i, k):
            if not class_masks[j] & avail:
                return None
        for v in iter_bits(class_masks[i] & avail):
            pick.append(v)
            found = descend(i + 1, avail & ~adj[v] & ~(1 << v))
            if found is not None:
                return found
            pick.pop()
        return None

    return descend(0, g.full_mask)


def _find_violating_committee(
    g: Graph, classes, prop: SubsetProperty
) -> tuple[int, ...] | None:
    """Least committee whose vertex set fails ``prop``, or None."""
    for committee in itertools.product(*classes):
        mask = 0
        for v in committee:
            mask |= 1 << v
        if not eval_property_mask(prop, g, mask):
            return committee
    return None


def _compelled_verdict(g: Graph, prop: SubsetProperty, class_masks, classes) -> bool:
    """Fast verdict used inside the chromatic search (no counterexample)."""
    if prop is SubsetProperty.DOM:
        return _dom_compelled(g, class_masks)
    if prop in (SubsetProperty.TDOM, SubsetProperty.ISOLATE_FREE):
        return _tdom_compelled(g, class_masks)
    if prop is SubsetProperty.EDGE:
        return _find_independent_committee(g, class_masks) is None
    return _find_violating_committee(g, classes, prop) is None


def is_compelling(g: Graph, coloring: Coloring, prop: SubsetProperty) -> CompellingReport:
    """Decide whether ``coloring`` compels ``prop`` on ``g``.

    On failure the report carries the least violating rainbow committee.
    """
    validate_coloring(g, coloring)
    masks = coloring.class_masks
    if prop is SubsetProperty.DOM:
        if _dom_compelled(g, masks):
            return CompellingReport(True, None, "per-vertex-fast")
        cx = _find_violating_committee(g, coloring.classes, prop)
        return CompellingReport(False, cx, "per-vertex-fast")
    if prop in (SubsetProperty.TDOM, SubsetProperty.ISOLATE_FREE):
        if _tdom_compelled(g, masks):
            return CompellingReport(True, None, "per-vertex-fast")
        cx = _find_violating_committee(g, coloring.classes, prop)
        return CompellingReport(False, cx, "per-vertex-fast")
    if prop is SubsetProperty.EDGE:
        cx = _find_independent_committee(g, masks)
        return CompellingReport(cx is None, cx, "rc-search")
    cx = _find_violating_committee(g, coloring.classes, prop)
    return CompellingReport(cx is None, cx, "rc-search")


# ---------------------------------------------------------------------------
# Canonical coloring enumeration and the exact search
# ---------------------------------------------------------------------------


def _iter_canonical(g: Graph, k: int):
    """Yield every canonical proper coloring of g with exactly k colors.

    Canonical means a vertex may take color c only when c is at most one
    more than the largest color used on earlier vertices, which picks one
    representative per color permutation.  Yields (colors, class_masks) as
    live lists; consumers must copy anything they keep.
    """
    n = g.n
    if k < 1 or k > n:
        return
    adj = g.adj_bits
    colors = [0] * n
    masks = [0] * k

    def assign(v: int, used: int):
        if v == n:
            if used == k:
                yield colors, masks
            return
        if k - used > n - v:
            return
        nb = adj[v]
        bit = 1 << v
        top = used if used < k else k - 1
        for c in range(top + 1):
            if masks[c] & nb:
                continue
            colors[v] = c
            masks[c] |= bit
            yield from assign(v + 1, used + 1 if c == used else used)
            masks[c] &= ~bit

    yield from assign(0, 0)


def canonical_colorings(g: Graph, k: int):
    """All canonical proper colorings of ``g`` with exactly ``k`` colors."""
    for colors, _ in _iter_canonical(g, k):
        yield Coloring(tuple(colors))


def _classes_from_masks(masks) -> list[tuple[int, ...]]:
    return [tuple(iter_bits(m)) for m in masks]


def chi_bounds(
    g: Graph, prop: SubsetProperty, max_n: int = EXACT_CHROMATIC_CAP
) -> tuple[int, int | None] | None:
    """General bounds on the compelling chromatic number.

    Returns (lower, upper) or None when no subset satisfies the property.
    Lower is max(minimum qualifying size, chromatic number); for CONNECTED
    on a nontrivial connected graph the sharper max(chromatic number,
    connected domination number) applies.  Upper is the qualifying size
    plus the chromatic number for upwards-closed properties, the connected
    domination analogue for CONNECTED, else n when the whole vertex set
    qualifies and unknown otherwise.
    """
    m = min_property_size(prop, g, max_n=max_n)
    if m is None:
        return None
    chi = chromatic_number(g, max_n=max_n)
    if prop is SubsetProperty.CONNECTED and g.n >= 2 and is_connected(g):
        gamma_c = connected_domination_number(g, max_n=max_n)
        return max(chi, gamma_c), chi + gamma_c
    lower = max(m, chi)
    if prop.upwards_closed:
        return lower, m + chi
    if eval_property_mask(prop, g, g.full_mask):
        return lower, g.n
    return lower, None


def compelling_chromatic_number(
    g: Graph,
    prop: SubsetProperty,
    max_n: int = EXACT_CHROMATIC_CAP,
    timeout_s: float | None = None,
) -> ChiResult:
    """Exact minimum number of colors in a proper coloring compelling
    ``prop``, with a witness coloring.

    Scans k upward from the lower bound, enumerating canonical colorings
    and testing each completed one; compellingness is not assumed monotone
    in k, so the first success is the minimum by definition.  The witness
    is the first compelling coloring in canonical enumeration order.
    """
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, over the cap of {max_n}")
    bounds = chi_bounds(g, prop, max_n=max_n)
    if bounds is None:
        return ChiResult(None, None, None, None)
    lower, upper = bounds
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    tick = 0
    for k in range(lower, g.n + 1):
        for colors, masks in _iter_canonical(g, k):
            if deadline is not None:
                tick += 1
                if not tick & 0x3FF and time.monotonic() > deadline:
                    raise SearchTimeout(
                        f"no verdict for {g.name or 'graph'} within {timeout_s}s"
                    )
            classes = _classes_from_masks(masks)
            if _compelled_verdict(g, prop, masks, classes):
                return ChiResult(k, Coloring(tuple(colors)), lower, upper)
    return ChiResult(None, None, lower, upper)


def disjoint_union_bounds(
    prop: SubsetProperty, parts: list[tuple[int, int]]
) -> tuple[int, int]:
    """Bounds on the compelling chromatic number of a disjoint union from
    per-component (chi_p, min qualifying size) pairs.

    Only valid for properties that distribute over disjoint union.  Lower
    bound: max over components of its chi_p plus the other components'
    minimum sizes.  Upper bound: sum of the per-component chi_p values.
    """
    if not prop.distributes_over_disjoint_union:
        raise ValueError(f"{prop.value} does not distribute over disjoint union")
    if not parts:
        raise ValueError("at least one component required")
    total_m = sum(m for _, m in parts)
    lower = max(chi + (total_m - m) for chi, m in parts)
    upper = sum(chi for chi, _ in parts)
    return lower, upper
