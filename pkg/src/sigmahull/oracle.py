"""Brute-force ground truth for hulls, duals and intersections.

Everything here works at the level of codeword sets and the inner-product
definition; none of the rank shortcuts being validated are used.  The sigma
dual is obtained by solving the linear system <a, b> = 0 over a basis of the
code, intersections by literal set intersection of enumerated codewords.
Exponential cost is accepted; a budget guards against runaway inputs and can
be overridden with the SIGMAHULL_BUDGET environment variable.
"""

from __future__ import annotations

import os

import numpy as np

from . import enumeration
from .codes import LinearCode
from .errors import FormulaMismatch, InvalidExponent
from .matrices import MatrixGF
from .semilinear import SemilinearIsometry

BUDGET_ENV = "SIGMAHULL_BUDGET"
DEFAULT_BUDGET = 3**12


def enumeration_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def enumerate_codewords(code: LinearCode, budget: int | None = None):
    """Yield all q^k codewords exactly once, in lexicographic message order."""
    words = enumeration.all_codewords(
        code.field, code.G, budget if budget is not None else enumeration_budget()
    )
    for row in words:
        yield tuple(int(x) for x in row)


def _code_ints(code: LinearCode, budget: int) -> np.ndarray:
    return enumeration.codeword_ints(code.field, code.G, budget)


def _dim_from_size(q: int, size: int) -> int:
    dim = 0
    value = 1
    while value < size:
        value *= q
        dim += 1
    if value != size:
        raise FormulaMismatch(f"intersection size {size} is not a power of q={q}")
    return dim


def sigma_dual_by_definition(code: LinearCode, sigma: SemilinearIsometry) -> LinearCode:
    """Solve <a, g> = 0 for all generator rows g, straight from the inner product."""
    sigma._check(code)
    rows = [sigma.apply(g) for g in code.G.data]
    system = MatrixGF(code.field, rows, cols=code.n)
    return LinearCode(system.kernel_basis(), allow_zero=True)


def intersection_dim(c1: LinearCode, c2: LinearCode, budget: int | None = None) -> int:
    """dim(C1 ∩ C2) by enumerating both codeword sets."""
    c1._check_compatible(c2)
    budget = budget if budget is not None else enumeration_budget()
    a = _code_ints(c1, budget)
    b = _code_ints(c2, budget)
    size = int(np.intersect1d(a, b, assume_unique=True).size)
    return _dim_from_size(c1.field.q, size)


def is_subset(inner: LinearCode, outer: LinearCode, budget: int | None = None) -> bool:
    """Set-level containment inner ⊆ outer."""
    inner._check_compatible(outer)
    budget = budget if budget is not None else enumeration_budget()
    a = _code_ints(inner, budget)
    b = _code_ints(outer, budget)
    return int(np.intersect1d(a, b, assume_unique=True).size) == a.size


def same_set(c1: LinearCode, c2: LinearCode, budget: int | None = None) -> bool:
    c1._check_compatible(c2)
    budget = budget if budget is not None else enumeration_budget()
    a = np.sort(_code_ints(c1, budget))
    b = np.sort(_code_ints(c2, budget))
    return a.size == b.size and bool(np.array_equal(a, b))


def oracle_relative_dim(
    c1: LinearCode, c2: LinearCode, sigma: SemilinearIsometry, budget: int | None = None
) -> int:
    """dim(C1 ∩ C2^dual) with the dual taken from the definition, then set intersection."""
    return intersection_dim(c1, sigma_dual_by_definition(c2, sigma), budget)


def oracle_sigma_hull_dim(
    code: LinearCode, sigma: SemilinearIsometry, budget: int | None = None
) -> int:
    return oracle_relative_dim(code, code, sigma, budget)


def weight_distribution(code: LinearCode, budget: int | None = None) -> tuple[int, ...]:
    return enumeration.weight_distribution(
        code.field, code.G, budget if budget is not None else enumeration_budget()
    )


def galois_dual_direct(code: LinearCode, ell: int) -> LinearCode:
    """ell-Galois dual from the definition: kernel of the entrywise p^(e-ell) power of G."""
    e = code.field.e
    if not 0 <= ell <= e - 1:
        raise InvalidExponent(f"Galois parameter {ell} outside 0..{e - 1}")
    powered = code.G.frobenius(e - ell if ell else e)
    return LinearCode(powered.kernel_basis(), allow_zero=True)


def hermitian_dual_direct(code: LinearCode) -> LinearCode:
    """Hermitian dual via the conjugate transpose: kernel of entrywise sqrt(q) power of G."""
    e = code.field.e
    if e % 2:
        raise InvalidExponent("Hermitian dual needs even extension degree")
    return LinearCode(code.G.frobenius(e // 2).kernel_basis(), allow_zero=True)
