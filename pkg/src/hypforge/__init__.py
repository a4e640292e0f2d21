"""Exact construction and verification of metric hypercomplex algebras.

Two independent routes produce multiplication tables in exact arithmetic
over the rationals extended by i and sqrt(2): iterated doubling of the
complex numbers, and a spinor pipeline that builds connecting operators
in dimensions 8, 14, and 16 and contracts them against a controlling
spinor. A verifier checks every asserted identity exactly.
"""

from .scalar import Scalar
from .tensor import Tensor
from .cayley import Element, MultTable, cd_double, cd_generate, multiply
from .clifford import ConnOps, operator_chain, verify_clifford
from .builder import decompose, spinor_pipeline
from .verifier import Report, compare_tables, run_suite

__version__ = "0.1.0"

__all__ = [
    "Scalar", "Tensor", "Element", "MultTable", "cd_double", "cd_generate",
    "multiply", "ConnOps", "operator_chain", "verify_clifford", "decompose",
    "spinor_pipeline", "Report", "compare_tables", "run_suite", "__version__",
]
