"""Construction, verification and search of nut graphs with exact integer arithmetic."""

from .catalog import CatalogEntry, load_appendix, verify_appendix
from .constructions import (fowler_extend, null_witness_blocks, null_witness_shift,
                            paper_circulant_catalog, paper_rewired_21, thm6_classify)
from .exactla import IntMatrix, KernelDescription, kernel_basis, mat_vec_mul, normalize_primitive
from .formats import from_graph6, parse_adjacency_dict, to_graph6
from .graphcore import (CirculantSpec, Graph, RewireMove, adjacency_matrix, circulant,
                        cycles_complement, degree_profile, rewire)
from .nutcheck import (NutVerdict, Reason, alternating_vector, is_nut, kernel_sum_check,
                       verify_stated_kernel, vt_feasible)
from .search import (SearchConfig, enumerate_order15, rewiring_search, scan_circulants,
                     survey)

__version__ = "0.1.0"
