"""Hulls of linear and matrix-product codes over GF(p^e), with EAQECC synthesis."""

from .codes import LinearCode
from .eaqecc import EaqeccParams
from .fields import GF, FieldElement, FieldSpec
from .matrices import MatrixGF
from .mpcodes import MatrixProductSpec, MpSigma, RhoMonomialWitness
from .semilinear import MonomialMatrix, SemilinearIsometry

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldSpec",
    "FieldElement",
    "MatrixGF",
    "LinearCode",
    "MonomialMatrix",
    "SemilinearIsometry",
    "MatrixProductSpec",
    "MpSigma",
    "RhoMonomialWitness",
    "EaqeccParams",
    "__version__",
]
