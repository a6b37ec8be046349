"""Short even covers in k-uniform hypergraphs.

Thin wrapper over the C++ core: hypergraph values, GF(2) dependency search,
subset-graph statistics, the cover pipeline and the 3-query code machinery.
"""

from evencover._core import (  # noqa: F401
    ColoredHypergraph,
    Hypergraph,
    LinearCode,
    codegree,
    even_kikuchi_stats,
    find_dependency,
    find_even_cover,
    find_odd_color_cover,
    gen_random,
    hadamard_code,
    load_generator,
    load_hypergraph,
    min_degree_core,
    min_weight_cover_bruteforce,
    normal_form,
    properly_colored,
    store_generator,
    store_hypergraph,
    symmetric_difference,
    verify_even_cover,
)

__all__ = [
    "ColoredHypergraph",
    "Hypergraph",
    "LinearCode",
    "codegree",
    "even_kikuchi_stats",
    "find_dependency",
    "find_even_cover",
    "find_odd_color_cover",
    "gen_random",
    "hadamard_code",
    "load_generator",
    "load_hypergraph",
    "min_degree_core",
    "min_weight_cover_bruteforce",
    "normal_form",
    "properly_colored",
    "store_generator",
    "store_hypergraph",
    "symmetric_difference",
    "verify_even_cover",
]
