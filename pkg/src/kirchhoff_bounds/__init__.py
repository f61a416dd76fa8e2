"""Kirchhoff-index robustness bounds for graphs under link addition and removal."""

from .bounds import (
    BoundReport,
    bound_suite,
    majorization_addition_bound,
    majorization_removal_bound,
    wang_addition_bound,
    wang_removal_bound,
)
from .generators import (
    PerturbedPair,
    RngSeed,
    barabasi_albert,
    erdos_renyi_connected,
    perturb_add,
    perturb_remove_connected,
    watts_strogatz,
)
from .graph import (
    Graph,
    add_edge,
    degree_sequence,
    density,
    diameter,
    from_edge_list,
    is_connected,
    laplacian,
    read_edge_list,
    remove_edge,
    write_edge_list,
)
from .majorization import (
    ConstrainedSet,
    MinimalElement,
    majorizes,
    minimal_element,
    minimal_element_uniform_floor,
    nested_set_check,
    schur_eval,
)
from .spectral import (
    Spectrum,
    check_degree_floors,
    check_interlacing,
    effective_resistance_matrix,
    kirchhoff_index,
    kirchhoff_via_resistance,
    laplacian_spectrum,
)

__version__ = "0.1.0"
