"""Laplacian and g-Laplacian matrices of skew gain graphs over a field with an involution."""
from .algebra import (
    COMPLEX,
    RATIONAL,
    FieldBackend,
    GainMatrix,
    Polynomial,
    apply_f,
    char_poly,
    det,
    g_of,
    get_backend,
    poly_roots,
    sqrt_g,
)
from .core import (
    GraphFamily,
    OrientedEdge,
    SkewGainGraph,
    build_graph,
    fixture,
    gain,
    generate,
    load,
    loads,
    random_graph,
)
from .enumeration import (
    cycle_gain,
    elementary_subgraphs,
    essential_spanning_subgraphs,
    matchings,
)
from .matrices import (
    adjacency_matrix,
    bipartite_block,
    f_entrywise,
    g_laplacian,
    incidence,
    incidence_sharp,
    laplacian,
)
from .spectral import bipartite_spectrum_check, laplacian_spectrum, regular_shift_check
from .theorems import (
    charpoly_closed_form,
    charpoly_combinatorial,
    det_lg_closed_form,
    matrix_tree_sum,
    star_closed_forms,
    verify_all,
)

__version__ = "0.1.0"
