"""F_qR-skew cyclic codes, their Gray images, and CSS quantum codes built from them."""

from .fqr import CodeSpec, GrayMatrix, gray_image_matrix, mixed_dual, module_span
from .gf import FieldContext, field_from_q, make_field, parse_field_descriptor
from .lincode import BudgetExceeded, CodeError, GeneratorMatrix, min_distance, min_distance_detail
from .quantum import CertificateError, QuantumParams, check_dual_containing, compare_codes, css_params
from .rring import RElement
from .search import SearchSpace, reproduce_table1, right_divisors, search_quantum
from .skewpoly import SkewPoly, dagger, parse_compact, parse_poly, right_divmod

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CertificateError",
    "CodeError",
    "CodeSpec",
    "FieldContext",
    "GeneratorMatrix",
    "GrayMatrix",
    "QuantumParams",
    "RElement",
    "SearchSpace",
    "SkewPoly",
    "check_dual_containing",
    "compare_codes",
    "css_params",
    "dagger",
    "field_from_q",
    "gray_image_matrix",
    "make_field",
    "min_distance",
    "min_distance_detail",
    "mixed_dual",
    "module_span",
    "parse_field_descriptor",
    "parse_compact",
    "parse_poly",
    "reproduce_table1",
    "right_divisors",
    "right_divmod",
    "search_quantum",
]
