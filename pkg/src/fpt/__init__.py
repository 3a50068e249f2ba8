"""fpt: exact arithmetic over small finite fields.

Plane-orbit enumeration, the associated 0/1-coefficient polynomial
family, zigzag numeration, orders of appearance, Morgan-Voyce
polynomials and trinomial factorization degrees.  Everything is exact;
nothing here uses floating point except the one reported density.
"""

from .errors import BudgetExceeded, FptError
from .fmp import SparseSupport, build_recursive, build_zigzag, eval_fp, theta
from .gf import FieldDesc, FieldElem, enumerate_elements, frobenius, make_field, mult_order
from .upoly import DegreeMultiset, DensePoly, IntPoly, distinct_degree_factor, is_irreducible
from .zigzag import ZigzagSeq, enum_zigzag, negafibonacci, zeckendorf

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DegreeMultiset",
    "DensePoly",
    "FieldDesc",
    "FieldElem",
    "FptError",
    "IntPoly",
    "SparseSupport",
    "ZigzagSeq",
    "build_recursive",
    "build_zigzag",
    "distinct_degree_factor",
    "enum_zigzag",
    "enumerate_elements",
    "eval_fp",
    "frobenius",
    "is_irreducible",
    "make_field",
    "mult_order",
    "negafibonacci",
    "theta",
    "zeckendorf",
]
