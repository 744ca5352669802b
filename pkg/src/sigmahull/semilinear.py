"""Semilinear isometries, monomial matrices, and hull dimension formulas.

A monomial matrix M = D * P is stored structurally as the permutation and the
diagonal.  P follows the row convention: the perm(i)-th row of P is the i-th
row of the identity, so the row action is (t * P)_j = t_perm(j).  Permutations
are 0-based internally (serialization is 1-based).

A semilinear isometry acts as v -> frobenius_s(v) * M; the associated inner
product is <a, b> = sum a_i * sigma(b)_i, which specializes to the Euclidean,
Hermitian and Galois products for M = I and suitable s.
"""

from __future__ import annotations

from .codes import LinearCode
from .errors import FormulaMismatch, Incompatible, InvalidExponent
from .fields import FieldSpec, check_same_field
from .matrices import MatrixGF, row_space_intersection


class MonomialMatrix:
    __slots__ = ("field", "n", "perm", "diag")

    def __init__(self, field: FieldSpec, perm, diag):
        perm = tuple(int(i) for i in perm)
        diag = tuple(int(d) % field.q for d in diag)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise Incompatible(f"perm is not a permutation of 0..{n - 1}")
        if len(diag) != n or any(d == 0 for d in diag):
            raise Incompatible("diagonal must have n nonzero entries")
        self.field = field
        self.n = n
        self.perm = perm
        self.diag = diag

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MonomialMatrix":
        return cls(field, range(n), [1] * n)

    @classmethod
    def from_dense(cls, m: MatrixGF) -> "MonomialMatrix":
        if m.rows != m.cols:
            raise Incompatible("not square")
        perm = [0] * m.rows
        diag = [0] * m.rows
        for c in range(m.cols):
            nz = [r for r in range(m.rows) if m.data[r][c]]
            if len(nz) != 1:
                raise Incompatible("matrix is not monomial")
            perm[c] = nz[0]
            diag[nz[0]] = m.data[nz[0]][c]
        return cls(m.field, perm, diag)

    def dense(self) -> MatrixGF:
        rows = [[0] * self.n for _ in range(self.n)]
        for c in range(self.n):
            r = self.perm[c]
            rows[r][c] = self.diag[r]
        return MatrixGF(self.field, rows, cols=self.n)

    def apply(self, v) -> tuple[int, ...]:
        """Row action v -> v @ M."""
        if len(v) != self.n:
            raise Incompatible("vector length mismatch")
        f = self.field
        return tuple(f.mul(v[self.perm[c]], self.diag[self.perm[c]]) for c in range(self.n))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        check_same_field(self.field, other.field)
        if self.n != other.n:
            raise Incompatible("size mismatch")
        f = self.field
        inv_a = _inverse_perm(self.perm)
        perm = tuple(self.perm[other.perm[m]] for m in range(self.n))
        diag = tuple(f.mul(self.diag[r], other.diag[inv_a[r]]) for r in range(self.n))
        return MonomialMatrix(f, perm, diag)

    def inverse(self) -> "MonomialMatrix":
        f = self.field
        perm = _inverse_perm(self.perm)
        diag = tuple(f.inv(self.diag[self.perm[r]]) for r in range(self.n))
        return MonomialMatrix(f, perm, diag)

    def transpose(self) -> "MonomialMatrix":
        perm = _inverse_perm(self.perm)
        diag = tuple(self.diag[self.perm[r]] for r in range(self.n))
        return MonomialMatrix(self.field, perm, diag)

    def frobenius(self, s: int) -> "MonomialMatrix":
        f = self.field
        return MonomialMatrix(f, self.perm, (f.frobenius(d, s) for d in self.diag))

    def kron(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Kronecker product of monomial matrices, computed structurally."""
        check_same_field(self.field, other.field)
        f = self.field
        n = other.n
        perm = []
        for c in range(self.n * n):
            c1, c2 = divmod(c, n)
            perm.append(self.perm[c1] * n + other.perm[c2])
        diag = []
        for r in range(self.n * n):
            r1, r2 = divmod(r, n)
            diag.append(f.mul(self.diag[r1], other.diag[r2]))
        return MonomialMatrix(f, perm, diag)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialMatrix)
            and self.field == other.field
            and self.perm == other.perm
            and self.diag == other.diag
        )

    def __hash__(self):
        return hash((self.field, self.perm, self.diag))

    def __repr__(self):
        return f"MonomialMatrix(n={self.n}, perm={self.perm}, diag={self.diag})"


def _inverse_perm(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


class SemilinearIsometry:
    """sigma = (monomial matrix, Frobenius exponent), acting as v -> pi_s(v) @ M."""

    __slots__ = ("mono", "s")

    def __init__(self, mono: MonomialMatrix, s: int):
        if not 1 <= s <= mono.field.e:
            raise InvalidExponent(f"Frobenius exponent {s} outside 1..{mono.field.e}")
        self.mono = mono
        self.s = s

    @classmethod
    def euclidean(cls, field: FieldSpec, n: int) -> "SemilinearIsometry":
        return cls(MonomialMatrix.identity(field, n), field.e)

    @classmethod
    def hermitian(cls, field: FieldSpec, n: int) -> "SemilinearIsometry":
        if field.e % 2:
            raise InvalidExponent("Hermitian product needs even extension degree")
        return cls(MonomialMatrix.identity(field, n), field.e // 2)

    @classmethod
    def galois(cls, field: FieldSpec, n: int, ell: int) -> "SemilinearIsometry":
        """ell-Galois form <a,b> = sum a_i b_i^(p^(e-ell)) for 0 <= ell <= e-1."""
        if not 0 <= ell <= field.e - 1:
            raise InvalidExponent("Galois parameter outside 0..e-1")
        return cls(MonomialMatrix.identity(field, n), field.e - ell if ell else field.e)

    @property
    def field(self) -> FieldSpec:
        return self.mono.field

    @property
    def n(self) -> int:
        return self.mono.n

    def apply(self, v) -> tuple[int, ...]:
        f = self.field
        return self.mono.apply(tuple(f.frobenius(x, self.s) for x in v))

    def inner(self, a, b) -> int:
        """<a, b> = sum a_i * sigma(b)_i."""
        if len(a) != self.n or len(b) != self.n:
            raise Incompatible("vector length mismatch")
        f = self.field
        sb = self.apply(b)
        acc = 0
        for x, y in zip(a, sb):
            acc = f.add(acc, f.mul(x, y))
        return acc

    def image_code(self, code: LinearCode) -> LinearCode:
        """sigma(C), generated by pi_s(G) @ M."""
        self._check(code)
        return LinearCode(code.G.frobenius(self.s) @ self.mono.dense(), allow_zero=code.k == 0)

    def _check(self, code: LinearCode):
        if code.field != self.field:
            raise Incompatible("code and isometry over different fields")
        if code.n != self.n:
            raise Incompatible(f"length mismatch: code n={code.n}, sigma n={self.n}")


def sigma_dual(code: LinearCode, sigma: SemilinearIsometry) -> LinearCode:
    """The annihilator of C under the sigma inner product.

    Generated by pi_s(H) @ (M^-1)^T; always has dimension n - k.
    """
    sigma._check(code)
    gen = code.H.frobenius(sigma.s) @ sigma.mono.inverse().transpose().dense()
    out = LinearCode(gen, allow_zero=True)
    if out.k != code.n - code.k:
        raise FormulaMismatch("sigma dual has wrong dimension")
    return out


def relative_hull_dim(c1: LinearCode, c2: LinearCode, sigma: SemilinearIsometry) -> int:
    """dim(C1 ∩ C2^dual), via both rank formulas (asserted equal)."""
    c1._check_compatible(c2)
    sigma._check(c1)
    s = sigma.s
    m_inv = sigma.mono.inverse().dense()
    via_h = c1.n - c2.k - (c1.H @ m_inv @ c2.H.frobenius(s).transpose()).rank()
    via_g = c1.k - (c2.G.frobenius(s) @ sigma.mono.dense() @ c1.G.transpose()).rank()
    if via_h != via_g:
        raise FormulaMismatch(f"relative hull formulas disagree: {via_h} vs {via_g}")
    return via_h


def bidual_relative_dim(c1: LinearCode, c2: LinearCode, sigma: SemilinearIsometry) -> int:
    """dim((C1^dual)^dual ∩ C2^dual), via both rank formulas (asserted equal)."""
    c1._check_compatible(c2)
    sigma._check(c1)
    s = sigma.s
    m_inv = sigma.mono.inverse().dense()
    via_h = c1.n - c2.k - (c2.H @ m_inv @ c1.H.frobenius(s).transpose()).rank()
    via_g = c1.k - (c1.G.frobenius(s) @ sigma.mono.dense() @ c2.G.transpose()).rank()
    if via_h != via_g:
        raise FormulaMismatch(f"bidual formulas disagree: {via_h} vs {via_g}")
    return via_h


def sigma_hull_dim(code: LinearCode, sigma: SemilinearIsometry) -> int:
    """dim(C ∩ C^dual) = k - rank(pi_s(G) M G^T) = n - k - rank(H M^-1 pi_s(H)^T)."""
    return relative_hull_dim(code, code, sigma)


def sigma_hull(code: LinearCode, sigma: SemilinearIsometry) -> tuple[int, MatrixGF]:
    """Hull dimension and an explicit basis of C ∩ C^dual."""
    dim = sigma_hull_dim(code, sigma)
    dual = sigma_dual(code, sigma)
    basis = row_space_intersection(code.G, dual.G)
    if basis.rows != dim:
        raise FormulaMismatch(
            f"hull basis rank {basis.rows} does not match dimension formula {dim}"
        )
    return dim, basis
