"""Hypercompletely separating set systems: exact minimum sizes, verified
constructions for every ground size, and brute-force search oracles."""

from .construct import CatalogEntry, base_catalog, construct_min, extend_triangular, pair_system
from .formats import ParseError, emit_system, parse_document, parse_system
from .numerics import alpha, is_triangular, min_size, tau, tight_tau_sequence
from .search import (
    BudgetExceededError,
    SearchBudget,
    are_isomorphic,
    canonical_form,
    enumerate_min_classes,
    min_hcsp_size_oracle,
)
from .set_system import (
    SetSystem,
    complement_system,
    disjoint_union,
    elements_of,
    from_masks,
    make,
    mask_of,
    p_k,
    product,
    restrict,
)
from .verify import (
    Classification,
    ExtremalReport,
    check_extremal_triangular,
    classify,
    complete_separation_failure,
    hcsp_failure,
    is_completely_separating,
    is_hcsp,
    is_inclusion_minimal_hcsp,
    is_separating,
    is_size_minimal,
    removable_block,
    separating_failure,
    witness_map,
)

__version__ = "0.1.0"
