"""Reduced words of permutations and the graphs of their braid relations.

The package enumerates R(pi), builds the move graphs G/C/B, implements
shuffle encodings for 12- and 21-inflations with their decoding maps, and
evaluates the recursive diameter formulas against brute force, including
the classification against the conjectured L2 bounds.
"""

from .errors import (
    InvalidPermutationError,
    PreconditionError,
    RedwordsError,
    TooLargeError,
)
from .perms import (
    Perm,
    all_perms,
    contains_pattern,
    count_321,
    decompose_231,
    decompose_312,
    descending,
    identity,
    inflate,
    inversions,
    symmetry,
)
from .words import apply_word, count_words, is_reduced, word_str, words_of
from .wordgraphs import (
    EdgeKind,
    LabeledGraph,
    build_word_graph,
    contract,
    diameter,
    export_dot,
    graph_json,
    move_counts_along,
)
from .encodings import (
    ballot_sequences,
    build_U,
    build_V,
    encoded_edges,
    eta,
    f_map,
    parse_encoded,
    path_21_iota,
    psi,
    render_encoded,
    shift,
    shuffles,
    stats_21,
)
from .formulas import (
    DiameterBounds,
    DiameterTriple,
    bounds_21_iota,
    delta_recursion,
    diam_12,
    diam_21_single,
    diam_231_avoiding,
    diam_312_avoiding,
    diam_low_family,
)
from .arrangement import ConjectureReport, L2Breakdown, check_2413, classify, l2, sweep
from .oracle import brute_triple, graphs_of

__version__ = "0.1.0"
