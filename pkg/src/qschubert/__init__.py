"""Exact Schubert calculus on Grassmannians.

Classical and quantum products, Gromov-Witten invariants, and puzzle
counting for the type A Grassmannian G(m, N), the Lagrangian
Grassmannian LG(n, 2n), and the maximal orthogonal Grassmannian
OG(n+1, 2n+2), all in exact integer arithmetic.
"""

from .combinat import (LabelString, Partition, conjugate, from_01_string,
                       grassmann_permutation, hat_map, jd_string, partition,
                       rect_dual, remove_columns, skew_component_stats,
                       strict_dual, string012_to_permutation, to_01_string)
from .isotropic import (IsoQHElement, duality_check, gw_lg, gw_og,
                        line_number_check_lg, presentation_report_isotropic,
                        quantum_pieri_lg, quantum_pieri_og,
                        quantum_product_lg, quantum_product_og)
from .puzzle import count_puzzles_1step, count_puzzles_2step
from .qpoly import (ContractViolation, EPoly, expand_in_qtilde,
                    ptilde_structure, qtilde_epoly, qtilde_pieri,
                    qtilde_structure)
from .typea import (QHElement, Report, SpecialMonomial, dims, gw_a,
                    gw_a_puzzle, giambelli_monomials, presentation_report_a,
                    quantum_pieri_a, quantum_product_a)

__version__ = "0.1.0"

__all__ = [
    "ContractViolation", "EPoly", "IsoQHElement", "LabelString", "Partition",
    "QHElement", "Report", "SpecialMonomial", "conjugate",
    "count_puzzles_1step", "count_puzzles_2step", "dims", "duality_check",
    "expand_in_qtilde", "from_01_string", "giambelli_monomials",
    "grassmann_permutation", "gw_a", "gw_a_puzzle", "gw_lg", "gw_og",
    "hat_map", "jd_string", "line_number_check_lg", "partition",
    "presentation_report_a", "presentation_report_isotropic",
    "ptilde_structure", "qtilde_epoly", "qtilde_pieri", "qtilde_structure",
    "quantum_pieri_a", "quantum_pieri_lg", "quantum_pieri_og",
    "quantum_product_a", "quantum_product_lg", "quantum_product_og",
    "rect_dual", "remove_columns", "skew_component_stats", "strict_dual",
    "string012_to_permutation", "to_01_string",
]
