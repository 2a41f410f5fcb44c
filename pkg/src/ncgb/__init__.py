"""Gröbner bases, minimal generating sets and standard bases in free algebras."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .completion import (
    CompletionResult,
    GroebnerCheck,
    Status,
    TruncatedBasis,
    buchberger,
    is_groebner_up_to,
    overlap_element,
    truncated_gb,
)
from .division import Representation, interreduce, is_normal, reduce, remainder
from .mingen import MinGenOutput, min_gen_set, verify_minimal
from .ordering import OrderSpec, check_monomial_ordering, compare
from .parser import ParseError, ProblemFile, parse, parse_poly, print_canonical
from .poly import FreeAlgebra, Poly
from .scalar import GF, QQ, Field, Scalar
from .stdbasis import check_representation_bound, is_standard_basis, min_standard_basis
from .words import Signature, occurrences, proper_overlaps, wdegree

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND", "CompletionResult", "GroebnerCheck", "Status", "TruncatedBasis",
    "buchberger", "is_groebner_up_to", "overlap_element", "truncated_gb",
    "Representation", "interreduce", "is_normal", "reduce", "remainder",
    "MinGenOutput", "min_gen_set", "verify_minimal",
    "OrderSpec", "check_monomial_ordering", "compare",
    "ParseError", "ProblemFile", "parse", "parse_poly", "print_canonical",
    "FreeAlgebra", "Poly", "GF", "QQ", "Field", "Scalar",
    "check_representation_bound", "is_standard_basis", "min_standard_basis",
    "Signature", "occurrences", "proper_overlaps", "wdegree",
]
