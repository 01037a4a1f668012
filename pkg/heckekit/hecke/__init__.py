from .algebra import HeckeElt, bar_involution, ev, mult_standard, standard_basis_product, trace_tau
from .cells import CellPartition, cells, check_rsk_cells, rsk_partition
from .kazhdan_lusztig import (
    KLTable,
    check_bar_invariance,
    check_dual_pairing,
    dual_kl_elt,
    dual_kl_table,
    generator_product,
    kl_elt,
    kl_multiply,
    kl_polynomial,
    kl_table,
    load_kl_table,
    mu,
    pairing_matrix,
    to_kl_basis,
    warm_kl_tables,
)
from .modules import (
    LinearRep,
    cell_module,
    parabolic_module,
    specialize,
    specialize_and_test_specht,
    specialized_character,
    specht_reports,
)
from .wedderburn import cell_involution, verify_wedderburn, wedderburn_basis, wedderburn_elements

__all__ = [
    "HeckeElt",
    "bar_involution",
    "ev",
    "mult_standard",
    "standard_basis_product",
    "trace_tau",
    "CellPartition",
    "cells",
    "check_rsk_cells",
    "rsk_partition",
    "KLTable",
    "check_bar_invariance",
    "check_dual_pairing",
    "dual_kl_elt",
    "dual_kl_table",
    "generator_product",
    "kl_elt",
    "kl_multiply",
    "kl_polynomial",
    "kl_table",
    "load_kl_table",
    "mu",
    "pairing_matrix",
    "to_kl_basis",
    "warm_kl_tables",
    "LinearRep",
    "cell_module",
    "parabolic_module",
    "specialize",
    "specialize_and_test_specht",
    "specialized_character",
    "specht_reports",
    "cell_involution",
    "verify_wedderburn",
    "wedderburn_basis",
    "wedderburn_elements",
]
