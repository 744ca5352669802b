"""Linear codes [n, k, d]_q: construction, duals, distance, intersections.

A code is stored by the RREF of its generator matrix, which makes the
representation canonical: two equal codes built from different bases compare
equal entrywise.  The parity-check matrix is computed lazily from the kernel
of the generator.
"""

from __future__ import annotations

from . import enumeration
from .errors import Incompatible, FormulaMismatch, TooLarge, ZeroCode
from .matrices import MatrixGF, is_monomial_matrix


class LinearCode:
    __slots__ = ("field", "n", "k", "G", "_H", "_d")

    def __init__(self, generator: MatrixGF, allow_zero: bool = False):
        basis = generator.row_basis()
        if basis.rows == 0 and not allow_zero:
            raise ZeroCode("generator matrix has rank 0")
        self.field = generator.field
        self.n = generator.cols
        self.k = basis.rows
        self.G = basis
        self._H = None
        self._d = None

    @classmethod
    def from_generator(cls, generator: MatrixGF) -> "LinearCode":
        """Public constructor; rejects rank-0 generators."""
        return cls(generator)

    @property
    def H(self) -> MatrixGF:
        """Parity-check matrix: RREF basis of the kernel of G."""
        if self._H is None:
            self._H = self.G.kernel_basis().row_basis()
        return self._H

    def dual(self) -> "LinearCode":
        """Euclidean dual, generated by the parity-check matrix."""
        return LinearCode(self.H, allow_zero=True)

    def min_distance(self) -> int:
        """Exact minimum distance by enumerating all q^k - 1 nonzero codewords."""
        if self.k == 0:
            raise ZeroCode("zero code has no minimum distance")
        if self._d is None:
            self._d = enumeration.min_weight(self.field, self.G)
            if self._d > self.n - self.k + 1:
                raise FormulaMismatch("Singleton bound violated; enumeration bug")
        return self._d

    def is_mds(self) -> bool:
        return self.min_distance() == self.n - self.k + 1

    def params(self) -> str:
        try:
            d = str(self.min_distance())
        except (TooLarge, ZeroCode):
            d = "?"
        return f"[{self.n},{self.k},{d}]_{self.field.q}"

    def intersect_dim(self, other: "LinearCode") -> int:
        """dim(self ∩ other) = k2 - rank(H1 G2^T), cross-checked as k1 - rank(G1 H2^T)."""
        self._check_compatible(other)
        via_h1 = other.k - (self.H @ other.G.transpose()).rank()
        via_h2 = self.k - (self.G @ other.H.transpose()).rank()
        if via_h1 != via_h2:
            raise FormulaMismatch(
                f"intersection rank formulas disagree: {via_h1} vs {via_h2}"
            )
        return via_h1

    def same_code(self, other: "LinearCode") -> bool:
        """Set equality: equal dimensions and full-dimensional intersection."""
        if self.field != other.field or self.n != other.n or self.k != other.k:
            return False
        return self.intersect_dim(other) == self.k

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.same_code(other)

    __hash__ = None

    def apply_monomial(self, mono) -> "LinearCode":
        """Monomially equivalent code with generator G @ M; preserves n, k and weights."""
        dense = mono.dense() if hasattr(mono, "dense") else mono
        if dense.rows != self.n or dense.cols != self.n:
            raise Incompatible(f"monomial matrix must be {self.n}x{self.n}")
        if dense.field != self.field:
            raise Incompatible("monomial matrix over a different field")
        if not is_monomial_matrix(dense):
            raise Incompatible("matrix is not monomial")
        return LinearCode(self.G @ dense, allow_zero=self.k == 0)

    def contains_word(self, word) -> bool:
        """Membership via the parity check: H w^T = 0."""
        if len(word) != self.n:
            raise Incompatible("word length mismatch")
        w = MatrixGF(self.field, [tuple(word)], cols=self.n)
        return (self.H @ w.transpose()).is_zero()

    def _check_compatible(self, other: "LinearCode"):
        if self.field != other.field:
            raise Incompatible("codes over different fields")
        if self.n != other.n:
            raise Incompatible(f"length mismatch: {self.n} vs {other.n}")

    def __repr__(self):
        return f"LinearCode({self.params()})"
