"""Exact combinatorial model of total Witt groups of Grassmann bundles.

The package is organized around even Young diagrams in a rectangular frame:
`diagrams` holds the combinatorics, `picard` the symbolic line-bundle
calculus, `witt_modules` the graded free modules and the three maps between
neighbouring frames, and `grassmann_witt` the rank tables, classification
and verification reports.  Everything is integer arithmetic; nothing is
floating point.
"""

from .diagrams import (FramedDiagram, JumpTuples, all_diagrams, enumerate_even,
                       from_jump_tuples, peel, shorten, widen)
from .grassmann_witt import (DualityReport, GeneratorClass, WittBasis,
                             bord_vanishes, class_degree, classify,
                             duality_check, expected_rank, induction_report,
                             rank_table, table_json, total_witt_basis)
from .picard import (PicClass, PicClassMod2, base_det, base_det2,
                     canonical_in_pullback_span, cell_canonical_identity,
                     cell_canonicals, les_twists, pullback_to_flag,
                     pushforward_admissible, quotient_det, rel_canonical_fiber,
                     rel_canonical_flag, rel_canonical_grass,
                     relative_dimension, taut_det, taut_det2, twist_class,
                     verify_cond_even)
from .witt_modules import (MAP_NAMES, BasisMap, ExactnessReport, GradedBasis,
                           GradedDegree, PointGenerator, TransportReport,
                           build_basis, degree, map_matrix,
                           verify_degree_transport, verify_exactness)

__version__ = "0.1.0"

__all__ = [
    "FramedDiagram", "JumpTuples", "all_diagrams", "enumerate_even",
    "from_jump_tuples", "peel", "shorten", "widen",
    "PicClass", "PicClassMod2", "base_det", "base_det2", "taut_det",
    "taut_det2", "quotient_det", "rel_canonical_grass", "rel_canonical_flag",
    "rel_canonical_fiber", "pullback_to_flag", "relative_dimension",
    "twist_class", "verify_cond_even", "pushforward_admissible",
    "canonical_in_pullback_span", "cell_canonicals", "cell_canonical_identity",
    "les_twists",
    "MAP_NAMES", "BasisMap", "ExactnessReport", "GradedBasis", "GradedDegree",
    "PointGenerator", "TransportReport", "build_basis", "degree", "map_matrix",
    "verify_degree_transport", "verify_exactness",
    "DualityReport", "GeneratorClass", "WittBasis", "bord_vanishes",
    "class_degree", "classify", "duality_check", "expected_rank",
    "induction_report", "rank_table", "table_json", "total_witt_basis",
    "__version__",
]
