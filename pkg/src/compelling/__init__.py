"""Exact computation of compelling chromatic numbers of small graphs.

A proper coloring compels a subset property when every rainbow committee
(one vertex of each color) satisfies it; the compelling chromatic number
is the minimum number of colors over such colorings.  The package bundles
the graph toolkit, the six built-in properties, the exact solver with
counterexample witnesses, closed forms for the families where the value is
known, a polynomial tester for total dominator chromatic number 3, and
seeded verification suites.
"""

from .closed_forms import (
    chi_conn_cycle,
    chi_conn_mop,
    chi_conn_path,
    chi_conn_tree,
    chi_edge_cycle,
    chi_edge_high_chromatic,
    chi_edge_path,
    chi_edge_tree,
    edge_compelling_five_coloring,
    interior_count,
    is_chord_cover,
    is_double_broom,
    min_chord_cover,
    mop_chords,
)
from .graphs import (
    EXACT_CHROMATIC_CAP,
    SUBSET_ENUM_CAP,
    Graph,
    chromatic_number,
    components,
    connected_domination_number,
    diameter,
    disjoint_union,
    format_graph,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_connected,
    is_mop,
    is_tree,
    join_dominator,
    load_graph,
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
    save_graph,
)
from .properties import (
    SubsetProperty,
    eval_property,
    min_property_size,
    min_property_witness,
)
from .solver import (
    ChiResult,
    Coloring,
    CompellingReport,
    SearchTimeout,
    canonical_colorings,
    chi_bounds,
    compelling_chromatic_number,
    disjoint_union_bounds,
    is_compelling,
    is_compelling_naive,
    rainbow_committees,
    validate_coloring,
)
from .td3 import (
    TdcWitness,
    chi_connected_is_3,
    chi_td_bruteforce,
    chi_td_is_3,
    has_tdc3,
    is_total_dominator_coloring,
)

__version__ = "0.1.0"
