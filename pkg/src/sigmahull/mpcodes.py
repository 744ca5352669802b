"""Matrix-product codes: construction, hull dimension, duality tests.

A matrix-product code combines k constituent codes of common length n through
a k x t defining matrix A (k <= t, full row rank) into a code of length tn
and dimension sum(t_i).  The hull/duality results require square A together
with a compatibility condition: pi_s(A) @ M_hat @ A^T must be monomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import enumeration
from .codes import LinearCode
from .errors import (
    DegenerateDefiningMatrix,
    FormulaMismatch,
    Incompatible,
    NotSquare,
    PreconditionFailed,
)
from .matrices import MatrixGF
from .semilinear import MonomialMatrix, SemilinearIsometry, relative_hull_dim, sigma_dual


class MatrixProductSpec:
    """Defining matrix plus constituent codes."""

    __slots__ = ("A", "constituents", "field", "n")

    def __init__(self, a: MatrixGF, constituents):
        constituents = tuple(constituents)
        if not constituents:
            raise Incompatible("at least one constituent code required")
        field = constituents[0].field
        n = constituents[0].n
        for c in constituents:
            if c.field != field or c.n != n:
                raise Incompatible("constituents must share field and length")
        if a.field != field:
            raise Incompatible("defining matrix over a different field")
        if a.rows != len(constituents):
            raise Incompatible(f"need {a.rows} constituents, got {len(constituents)}")
        if a.rows > a.cols:
            raise Incompatible("defining matrix needs k <= t")
        if a.rank() != a.rows:
            raise DegenerateDefiningMatrix("defining matrix is not full row rank")
        self.A = a
        self.constituents = constituents
        self.field = field
        self.n = n

    @property
    def k(self) -> int:
        return self.A.rows

    @property
    def t(self) -> int:
        return self.A.cols

    @property
    def length(self) -> int:
        return self.t * self.n

    @property
    def total_dim(self) -> int:
        return sum(c.k for c in self.constituents)


@dataclass(frozen=True)
class RhoMonomialWitness:
    """Certificate that pi_s(A) @ M_hat @ A^T = D * P for a permutation rho.

    Column j of the product has its unique nonzero alpha_j in row rho_j.
    """

    rho: tuple[int, ...]
    alphas: tuple[int, ...]

    def monomial(self, field) -> MonomialMatrix:
        k = len(self.rho)
        diag = [0] * k
        for j in range(k):
            diag[self.rho[j]] = self.alphas[j]
        return MonomialMatrix(field, self.rho, diag)


class MpSigma:
    """Isometry data for a square matrix-product code: M = M_hat ⊗ M_tilde."""

    __slots__ = ("tau_hat", "tau_tilde", "s")

    def __init__(self, tau_hat: MonomialMatrix, tau_tilde: MonomialMatrix, s: int):
        if tau_hat.field != tau_tilde.field:
            raise Incompatible("kron factors over different fields")
        self.tau_hat = tau_hat
        self.tau_tilde = tau_tilde
        self.s = s

    def sigma(self) -> SemilinearIsometry:
        """The isometry on length k*n words."""
        return SemilinearIsometry(self.tau_hat.kron(self.tau_tilde), self.s)

    def sigma_tilde(self) -> SemilinearIsometry:
        """The isometry on constituent-length words."""
        return SemilinearIsometry(self.tau_tilde, self.s)


def mp_generator(spec: MatrixProductSpec) -> MatrixGF:
    """Block generator: block (i, j) is a[i, j] * G_i, i.e. rows a_i ⊗ G_i."""
    rows = []
    for i, code in enumerate(spec.constituents):
        a_i = MatrixGF(spec.field, [spec.A.data[i]], cols=spec.t)
        block = a_i.kron(code.G)
        rows.extend(block.data)
    return MatrixGF(spec.field, rows, cols=spec.length)


def assemble(spec: MatrixProductSpec) -> LinearCode:
    """The matrix-product code as a plain linear code of length t*n."""
    code = LinearCode(mp_generator(spec), allow_zero=spec.total_dim == 0)
    if code.k != spec.total_dim:
        raise FormulaMismatch(
            f"assembled dimension {code.k} != sum of constituent dims {spec.total_dim}"
        )
    return code


def rho_monomial_check(
    a: MatrixGF, m_hat: MonomialMatrix, s: int
) -> RhoMonomialWitness | None:
    """Witness for pi_s(A) @ M_hat @ A^T monomial, or None.

    Convention: the product equals D*P with the nonzero of column j sitting in
    row rho(j); reconstructing the monomial matrix from the witness reproduces
    the product exactly.
    """
    if a.rows != a.cols:
        raise NotSquare("rho-monomial condition needs a square defining matrix")
    if m_hat.n != a.rows or m_hat.field != a.field:
        raise Incompatible("M_hat incompatible with A")
    b = a.frobenius(s) @ m_hat.dense() @ a.transpose()
    k = a.rows
    rho = [0] * k
    alphas = [0] * k
    seen_rows = set()
    for j in range(k):
        nz = [r for r in range(k) if b.data[r][j]]
        if len(nz) != 1:
            return None
        rho[j] = nz[0]
        alphas[j] = b.data[nz[0]][j]
        seen_rows.add(nz[0])
    if len(seen_rows) != k:
        return None
    witness = RhoMonomialWitness(tuple(rho), tuple(alphas))
    if witness.monomial(a.field).dense() != b:
        raise FormulaMismatch("witness reconstruction does not reproduce the product")
    return witness


def _witness_or_fail(spec: MatrixProductSpec, ms: MpSigma) -> RhoMonomialWitness:
    if spec.k != spec.t:
        raise NotSquare("hull/duality operations need a square defining matrix")
    if ms.tau_hat.n != spec.k or ms.tau_tilde.n != spec.n:
        raise Incompatible("isometry sizes do not match the matrix-product spec")
    witness = rho_monomial_check(spec.A, ms.tau_hat, ms.s)
    if witness is None:
        raise PreconditionFailed("pi_s(A) @ M_hat @ A^T is not monomial")
    return witness


def mp_hull_terms(spec: MatrixProductSpec, ms: MpSigma) -> list[int]:
    """Per-constituent terms dim(C_i ∩ C_rho(i)^dual) of the hull dimension."""
    witness = _witness_or_fail(spec, ms)
    st = ms.sigma_tilde()
    return [
        relative_hull_dim(spec.constituents[i], spec.constituents[witness.rho[i]], st)
        for i in range(spec.k)
    ]


def mp_hull_dim(spec: MatrixProductSpec, ms: MpSigma) -> int:
    """Hull dimension of the assembled code as the sum of relative hull terms."""
    return sum(mp_hull_terms(spec, ms))


def is_sigma_dual_containing(spec: MatrixProductSpec, ms: MpSigma) -> bool:
    """True iff C_rho(i)^dual ⊆ C_i for every i."""
    witness = _witness_or_fail(spec, ms)
    st = ms.sigma_tilde()
    for i in range(spec.k):
        partner = spec.constituents[witness.rho[i]]
        if relative_hull_dim(spec.constituents[i], partner, st) != spec.n - partner.k:
            return False
    return True


def is_sigma_self_orthogonal(spec: MatrixProductSpec, ms: MpSigma) -> bool:
    """True iff C_i ⊆ C_rho(i)^dual for every i."""
    witness = _witness_or_fail(spec, ms)
    st = ms.sigma_tilde()
    for i in range(spec.k):
        partner = spec.constituents[witness.rho[i]]
        if relative_hull_dim(spec.constituents[i], partner, st) != spec.constituents[i].k:
            return False
    return True


def mp_sigma_dual(spec: MatrixProductSpec, ms: MpSigma) -> MatrixProductSpec:
    """The sigma dual of the assembled code, again in matrix-product form.

    Constituents become the sigma_tilde duals reordered by rho; the defining
    matrix stays A.
    """
    witness = _witness_or_fail(spec, ms)
    st = ms.sigma_tilde()
    duals = [sigma_dual(spec.constituents[witness.rho[i]], st) for i in range(spec.k)]
    return MatrixProductSpec(spec.A, duals)


def row_span_distances(a: MatrixGF) -> list[int]:
    """d_i = minimum distance of the span of the first i rows of A, i = 1..k."""
    if a.rank() != a.rows:
        raise DegenerateDefiningMatrix("defining matrix is not full row rank")
    out = []
    for i in range(1, a.rows + 1):
        prefix = MatrixGF(a.field, a.data[:i], cols=a.cols)
        out.append(enumeration.min_weight(a.field, prefix))
    return out


def is_nonsingular_by_columns(a: MatrixGF) -> bool:
    """Every i x i submatrix of the first i rows (any i columns) is invertible."""
    from itertools import combinations

    for i in range(1, a.rows + 1):
        for cols in combinations(range(a.cols), i):
            sub = MatrixGF(a.field, [[a.data[r][c] for c in cols] for r in range(i)], cols=i)
            if sub.rank() != i:
                return False
    return True
