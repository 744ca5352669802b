import random

import pytest

from sigmahull import oracle
from sigmahull.codes import LinearCode
from sigmahull.errors import TooLarge
from sigmahull.fields import GF
from sigmahull.matrices import MatrixGF
from sigmahull.semilinear import SemilinearIsometry
from sigmahull.verify import random_code, random_sigma

F3 = GF(3)


def test_enumerate_examples():
    zero = LinearCode(MatrixGF(F3, [], cols=4), allow_zero=True)
    assert list(oracle.enumerate_codewords(zero)) == [(0, 0, 0, 0)]

    f2 = GF(2)
    c = LinearCode.from_generator(MatrixGF(f2, [[1, 1]]))
    assert list(oracle.enumerate_codewords(c)) == [(0, 0), (1, 1)]

    rep = LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]]))
    words = list(oracle.enumerate_codewords(rep))
    assert words == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]


def test_enumeration_is_lexicographic_in_messages():
    c = LinearCode.from_generator(MatrixGF(F3, [[1, 0, 1], [0, 1, 2]]))
    words = list(oracle.enumerate_codewords(c))
    assert len(words) == 9 and len(set(words)) == 9
    assert words[0] == (0, 0, 0)
    assert words[1] == (0, 1, 2)      # message (0, 1)
    assert words[3] == (1, 0, 1)      # message (1, 0)


def test_budget_guard():
    c = LinearCode.from_generator(MatrixGF.identity(F3, 4))
    with pytest.raises(TooLarge):
        list(oracle.enumerate_codewords(c, budget=10))


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(oracle.BUDGET_ENV, "10")
    assert oracle.enumeration_budget() == 10
    c = LinearCode.from_generator(MatrixGF.identity(F3, 4))
    with pytest.raises(TooLarge):
        oracle.intersection_dim(c, c)
    monkeypatch.delenv(oracle.BUDGET_ENV)
    assert oracle.enumeration_budget() == oracle.DEFAULT_BUDGET


def test_hull_examples():
    rep = LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]]))
    sig = SemilinearIsometry.euclidean(F3, 3)
    assert oracle.oracle_sigma_hull_dim(rep, sig) == 1
    full = LinearCode.from_generator(MatrixGF.identity(F3, 3))
    assert oracle.oracle_sigma_hull_dim(full, sig) == 0
    assert oracle.oracle_relative_dim(rep, full, sig) == 0
    assert oracle.oracle_relative_dim(rep, rep, sig) == oracle.oracle_sigma_hull_dim(rep, sig)


def test_oracle_is_basis_independent():
    rng = random.Random(67)
    for _ in range(40):
        f = GF(rng.choice([3, 4, 5]))
        n = rng.randrange(2, 5)
        code = random_code(rng, f, n, rng.randrange(1, n + 1))
        sig = random_sigma(rng, f, n)
        # rebuild the same code from a randomized basis
        rows = [list(r) for r in code.G.data]
        mixed = []
        for i in range(code.k):
            vec = [0] * n
            for j, row in enumerate(rows):
                coef = rng.randrange(1, f.q) if i == j else rng.randrange(f.q)
                vec = [f.add(v, f.mul(coef, x)) for v, x in zip(vec, row)]
            mixed.append(vec)
        other = LinearCode(MatrixGF(f, mixed, cols=n))
        if not other.same_code(code):
            continue  # the random mix dropped rank; skip
        assert oracle.oracle_sigma_hull_dim(other, sig) == oracle.oracle_sigma_hull_dim(code, sig)


def test_intersection_sizes_are_powers_of_q():
    rng = random.Random(71)
    for _ in range(60):
        f = GF(rng.choice([3, 4, 5, 9]))
        n = rng.randrange(2, 5)
        c1 = random_code(rng, f, n, rng.randrange(1, n + 1))
        c2 = random_code(rng, f, n, rng.randrange(1, n + 1))
        dim = oracle.intersection_dim(c1, c2)  # raises FormulaMismatch if not a power
        assert 0 <= dim <= min(c1.k, c2.k)


def test_subset_and_same_set():
    rep = LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]]))
    assert oracle.is_subset(rep, rep.dual())
    assert not oracle.is_subset(rep.dual(), rep)
    assert oracle.same_set(rep, rep)
    assert not oracle.same_set(rep, rep.dual())
