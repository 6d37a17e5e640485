"""Polynomial-time test for total dominator chromatic number 3, the brute
force oracle it is validated against, and the connectivity-compelling
consequence.

A total dominator coloring (TDC) is a proper coloring in which every
vertex is adjacent to every vertex of some other color class.  Three-class
TDCs split into structured shapes that can be guessed and checked in
polynomial time:

* case 1:   some class R where all of R are clones whose common open
            neighborhood is exactly the rest of the graph, and the rest is
            2-colorable;
* case 2.1: two same-colored vertices u, v with different target classes,
            and likewise x, y in a second class; the guesses determine all
            three classes;
* case 2.2: u, v as above while the other two classes target each other,
            forcing the subgraph induced by N(u) union N(v) to be complete
            bipartite, which hands over the classes.

Every candidate is re-validated with the full TDC definition before being
returned, so any slack in the case analysis cannot produce a bad witness.
The scan order (case 1 vertices ascending, case 2.2 pairs, case 2.1
pairs-of-pairs, all lexicographic) makes the returned witness
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    EXACT_CHROMATIC_CAP,
    Graph,
    is_complete_bipartite,
    is_connected,
    iter_bits,
)
from .solver import Coloring, _iter_canonical, canonical_colors, validate_coloring


@dataclass(frozen=True)
class TdcWitness:
    """A 3-class total dominator coloring plus how it was found."""

    coloring: Coloring
    case_tag: str
    guessed_vertices: tuple[int, ...]


def _tdc_masks(g: Graph, class_masks) -> bool:
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


def is_total_dominator_coloring(g: Graph, coloring: Coloring) -> bool:
    """Every vertex adjacent to all of some other color class.

    A graph with an isolated vertex has no such coloring.
    """
    validate_coloring(g, coloring)
    return _tdc_masks(g, coloring.class_masks)


def chi_td_bruteforce(g: Graph, max_n: int = EXACT_CHROMATIC_CAP) -> int | None:
    """Minimum class count of a total dominator coloring by canonical
    coloring enumeration; None when an isolated vertex rules them all out."""
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, over the cap of {max_n}")
    if any(not g.adj[v] for v in range(g.n)):
        return None
    for k in range(1, g.n + 1):
        for _, masks in _iter_canonical(g, k):
            if _tdc_masks(g, masks):
                return k
    return None


def _proper_masks(g: Graph, class_masks) -> bool:
    adj = g.adj_bits
    for m in class_masks:
        for v in iter_bits(m):
            if adj[v] & m:
                return False
    return True


def _witness_from_masks(g: Graph, masks, tag: str, guessed) -> TdcWitness | None:
    """Validate a candidate three-class partition and package the witness."""
    if any(m == 0 for m in masks):
        return None
    if masks[0] | masks[1] | masks[2] != g.full_mask:
        return None
    if masks[0] & masks[1] or masks[0] & masks[2] or masks[1] & masks[2]:
        return None
    if not _proper_masks(g, masks):
        return None
    if not _tdc_masks(g, masks):
        return None
    colors = [0] * g.n
    for idx, m in enumerate(masks):
        for v in iter_bits(m):
            colors[v] = idx
    return TdcWitness(Coloring(canonical_colors(colors)), tag, tuple(guessed))


def _split_bipartition(g: Graph, rest: int) -> tuple[int, int] | None:
    """Proper 2-coloring of the subgraph induced by ``rest`` with both
    sides nonempty when possible; None if not 2-colorable or too small.

    When the induced subgraph is edgeless the standard sweep would put
    everything on one side, so one vertex is moved over.
    """
    adj = g.adj_bits
    side_a = 0
    side_b = 0
    unseen = rest
    while unseen:
        root = unseen & -unseen
        side_a |= root
        frontier = root
        unseen ^= root
        cur_a = True
        while frontier:
            grown = 0
            for v in iter_bits(unseen):
                if adj[v] & frontier:
                    grown |= 1 << v
            if cur_a:
                side_b |= grown
            else:
                side_a |= grown
            cur_a = not cur_a
            unseen ^= grown
            frontier = grown
    for v in iter_bits(side_a):
        if adj[v] & side_a:
            return None
    for v in iter_bits(side_b):
        if adj[v] & side_b:
            return None
    if side_b == 0:
        if side_a.bit_count() < 2:
            return None
        move = side_a & -side_a
        side_a ^= move
        side_b = move
    return side_a, side_b


def has_tdc3(g: Graph) -> TdcWitness | None:
    """Find a 3-class total dominator coloring in polynomial time, or
    report that none exists."""
    n = g.n
    if n < 3:
        return None
    if any(not g.adj[v] for v in range(n)):
        return None
    adj = g.adj_bits
    full = g.full_mask

    # Case 1: a class of clones adjacent to everything outside it.
    for v in range(n):
        red = full & ~adj[v]
        rest = adj[v]
        if rest == 0:
            continue
        if all(adj[w] == rest for w in iter_bits(red)):
            split = _split_bipartition(g, rest)
            if split is None:
                continue
            witness = _witness_from_masks(g, (red, *split), "case1", (v,))
            if witness is not None:
                return witness

    # Case 2.2: red pair (u, v); the other two classes pair off against
    # each other, so N(u) union N(v) must induce complete bipartite.
    pair_reds: list[tuple[int, int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            pair_reds.append((u, v, full & ~(adj[u] | adj[v])))
    for u, v, red in pair_reds:
        rest = full & ~red
        if red == 0 or rest == 0:
            continue
        split = _split_bipartition(g, rest)
        if split is None:
            continue
        side_a, side_b = split
        if side_a == 0 or side_b == 0:
            continue
        complete = True
        for w in iter_bits(side_a):
            if adj[w] & rest != side_b:
                complete = False
                break
        if not complete:
            continue
        witness = _witness_from_masks(g, (red, side_a, side_b), "case22", (u, v))
        if witness is not None:
            return witness

    # Case 2.1: guessed pairs determine red and blue outright.
    for u, v, red in pair_reds:
        if red == 0:
            continue
        for x, y, blue in pair_reds:
            if blue == 0 or red & blue:
                continue
            green = full & ~(red | blue)
            if green == 0:
                continue
            witness = _witness_from_masks(
                g, (red, blue, green), "case21", (u, v, x, y)
            )
            if witness is not None:
                return witness
    return None


def chi_td_is_3(g: Graph) -> bool:
    """True exactly when the total dominator chromatic number equals 3.

    The only 2-class total dominator colorings are the bipartition
    colorings of complete bipartite graphs, so those are carved out.
    """
    if any(not g.adj[v] for v in range(g.n)):
        return False
    if is_complete_bipartite(g):
        return False
    return has_tdc3(g) is not None


def chi_connected_is_3(g: Graph) -> bool:
    """True exactly when the connectivity-compelling chromatic number of a
    connected graph equals 3.

    A 3-subset is a total dominating set exactly when it is a connected
    dominating set, so a 3-coloring compels connectivity exactly when it
    is a total dominator coloring; the value-2 case is complete bipartite.
    """
    if not is_connected(g):
        raise ValueError("expected a connected graph")
    if any(not g.adj[v] for v in range(g.n)):
        raise ValueError("expected a graph without isolated vertices")
    if is_complete_bipartite(g):
        return False
    return has_tdc3(g) is not None
