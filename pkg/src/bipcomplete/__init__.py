"""Tournament completions of bipartite tournaments and their augmented dicycles."""

from .graph import (
    BipartiteTournament,
    Completion,
    Dicycle,
    GraphError,
    Side,
    Signature,
    Tournament,
    VertexId,
    augmented_dicycles,
    dicycles_of_length,
    make_bipartite,
    make_completion,
    signature,
    vertex,
)
from .dx import build_dx, dx_order, dx_representation, has_4_dicycle, is_acyclic, is_bitransitive
from .tri import (
    build_special_X,
    build_trn,
    has_unique_dicycle,
    is_special,
    one_aug_21,
    one_aug_3,
    outdegree_gap_pair,
    parity_pattern_indices,
    transitive_completion,
)
from .quad import (
    PairDigraph,
    SpecMode,
    c_specifies,
    classify_k22,
    contains_F,
    d_specifies,
    inconsistent_set,
    no_aug,
    repair,
    specifies_digraph,
    violating_pairs,
)

__version__ = "0.1.0"
