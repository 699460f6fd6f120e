"""Word-representability of Riordan and Toeplitz graphs over GF(2)."""

from .cache import CacheRecord, ResultCache
from .classify import IwrResult, classify_instance, iwr, parse_source, scan_family, sieve
from .constructions import (
    blocks,
    label_order_transitive,
    represent_0k1l,
    represent_0k1l0m,
    represent_1k01mk,
    represent_1l0m,
    represent_forest,
    represent_residue_cliques,
    three_color_fixed_distance,
)
from .graphs import (
    LabeledGraph,
    RiordanSpec,
    ToeplitzPattern,
    build_fixed_distance_graph,
    build_riordan_graph,
    build_toeplitz,
    induced_subgraph,
    subsample_pattern,
)
from .semitransitive import (
    Decision,
    Orientation,
    brute_force_word_search,
    decide,
    find_semi_transitive_orientation,
    find_shortcut,
    is_shortcut_free,
)
from .series import Gf2Series, column_series, expand, parse_series, series_add, series_mul
from .words import alternate, cyclic_shift_to_front, d_word, is_uniform, u_word, verify_representant

__version__ = "0.1.0"
