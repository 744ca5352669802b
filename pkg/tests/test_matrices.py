import random

import pytest

from sigmahull.errors import FieldMismatch, Incompatible
from sigmahull.fields import GF
from sigmahull.matrices import MatrixGF, is_monomial_matrix, row_space_intersection

F3 = GF(3)
F4 = GF(4)


def rand_matrix(rng, f, rows, cols):
    return MatrixGF(f, [[rng.randrange(f.q) for _ in range(cols)] for _ in range(rows)])


def test_rref_examples():
    ident = MatrixGF.identity(F3, 4)
    r, rank, piv = ident.rref()
    assert r == ident and rank == 4 and piv == (0, 1, 2, 3)

    zero = MatrixGF.zeros(F3, 2, 3)
    r, rank, piv = zero.rref()
    assert r == zero and rank == 0 and piv == ()

    m = MatrixGF(F3, [[1, 1, 1], [2, 2, 2]])
    assert m.rank() == 1


def test_kernel_examples():
    assert MatrixGF.identity(F3, 3).kernel_basis().rows == 0

    m = MatrixGF(F3, [[1, 1, 1]])
    ker = m.kernel_basis()
    assert ker.rows == 2
    assert (m @ ker.transpose()).is_zero()

    assert MatrixGF.zeros(F3, 1, 4).kernel_basis() == MatrixGF.identity(F3, 4)


def test_kronecker_examples():
    one = MatrixGF(F3, [[1]])
    b = MatrixGF(F3, [[1, 2], [0, 1]])
    assert one.kron(b) == b
    assert MatrixGF.identity(F3, 2).kron(MatrixGF.identity(F3, 3)) == MatrixGF.identity(F3, 6)
    assert MatrixGF(F3, [[1, 2]]).kron(MatrixGF(F3, [[1, 1, 1]])).data == ((1, 1, 1, 2, 2, 2),)


def test_matmul_validation():
    with pytest.raises(Incompatible):
        MatrixGF(F3, [[1, 2]]) @ MatrixGF(F3, [[1, 2]])
    with pytest.raises(FieldMismatch):
        MatrixGF(F3, [[1]]) @ MatrixGF(F4, [[1]])


def test_empty_shapes():
    empty = MatrixGF(F3, [], cols=3)
    assert empty.transpose().rows == 3 and empty.transpose().cols == 0
    assert empty.rank() == 0
    assert empty.kernel_basis() == MatrixGF.identity(F3, 3)
    # product through a zero inner dimension is the zero matrix
    wide = MatrixGF(F3, [], cols=5)
    assert empty.transpose() @ wide == MatrixGF.zeros(F3, 3, 5)
    with pytest.raises(Incompatible):
        empty @ empty


def test_rank_properties_random():
    rng = random.Random(11)
    for _ in range(150):
        f = (F3, F4)[rng.randrange(2)]
        m = rand_matrix(rng, f, rng.randrange(1, 5), rng.randrange(1, 5))
        assert m.rank() == m.transpose().rank()
        ker = m.kernel_basis()
        assert ker.rows + m.rank() == m.cols
        if ker.rows:
            assert (m @ ker.transpose()).is_zero()


def test_kron_rank_multiplicative():
    rng = random.Random(3)
    for _ in range(60):
        a = rand_matrix(rng, F3, rng.randrange(1, 4), rng.randrange(1, 4))
        b = rand_matrix(rng, F3, rng.randrange(1, 4), rng.randrange(1, 4))
        assert a.kron(b).rank() == a.rank() * b.rank()


def test_frobenius_commutes_with_product():
    rng = random.Random(5)
    f = GF(9)
    for _ in range(60):
        a = rand_matrix(rng, f, rng.randrange(1, 4), rng.randrange(1, 4))
        b = rand_matrix(rng, f, a.cols, rng.randrange(1, 4))
        for s in (1, 2):
            assert (a @ b).frobenius(s) == a.frobenius(s) @ b.frobenius(s)
    ident_s = GF(4)
    m = MatrixGF(ident_s, [[2]])
    assert m.frobenius(1).data == ((3,),)
    assert m.frobenius(2) == m
    assert MatrixGF.zeros(ident_s, 2, 2).frobenius(1) == MatrixGF.zeros(ident_s, 2, 2)


def test_row_space_intersection():
    rng = random.Random(17)
    for _ in range(80):
        f = (F3, F4)[rng.randrange(2)]
        n = rng.randrange(1, 5)
        a = rand_matrix(rng, f, rng.randrange(1, n + 1), n)
        b = rand_matrix(rng, f, rng.randrange(1, n + 1), n)
        inter = row_space_intersection(a, b)
        stacked = MatrixGF.vstack([a, b])
        assert inter.rows == a.rank() + b.rank() - stacked.rank()
        # every intersection vector lies in both row spaces
        for row in inter.data:
            for m in (a, b):
                aug = MatrixGF(f, list(m.data) + [row], cols=n)
                assert aug.rank() == m.rank()


def test_is_monomial_matrix():
    assert is_monomial_matrix(MatrixGF(F3, [[0, 2], [1, 0]]))
    assert not is_monomial_matrix(MatrixGF(F3, [[1, 1], [0, 1]]))
    assert not is_monomial_matrix(MatrixGF(F3, [[1, 0], [1, 0]]))
    assert not is_monomial_matrix(MatrixGF(F3, [[1, 0, 0], [0, 1, 0]]))
