"""Search for monomially equivalent codes with a prescribed (relative) hull dimension.

The existence guarantee behind these operations is non-constructive, so the
module substitutes deterministic-then-randomized search: the identity first,
then single-position diagonal perturbations by increasing element index, then
random monomial matrices from a seeded generator, within a trial budget.
Every returned witness is re-verified; exhausting the budget is reported as
such and never treated as a nonexistence proof.  When the monomial group is
small enough the search enumerates it completely.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .codes import LinearCode
from .errors import (
    FieldTooSmall,
    FormulaMismatch,
    Incompatible,
    SearchExhausted,
    TargetOutOfRange,
    TooLarge,
)
from .fields import FieldSpec
from .semilinear import (
    MonomialMatrix,
    SemilinearIsometry,
    relative_hull_dim,
    sigma_hull_dim,
)

DEFAULT_BUDGET = 10_000
EXHAUSTIVE_LIMIT = 10**6


@dataclass
class SteerResult:
    code: LinearCode
    witness: MonomialMatrix
    achieved: int
    trials: int
    exhaustive: bool


def monomial_group_size(q: int, n: int) -> int:
    return (q - 1) ** n * math.factorial(n)


def all_monomials(field: FieldSpec, n: int):
    """Every n x n monomial matrix, in a fixed deterministic order (identity first)."""
    for perm in itertools.permutations(range(n)):
        for diag in itertools.product(range(1, field.q), repeat=n):
            yield MonomialMatrix(field, perm, diag)


def _random_monomial(field: FieldSpec, n: int, rng: random.Random) -> MonomialMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    diag = [rng.randrange(1, field.q) for _ in range(n)]
    return MonomialMatrix(field, perm, diag)


def _candidates(field: FieldSpec, n: int, seed: int):
    """Identity, then single-entry diagonal tweaks, then seeded random monomials."""
    yield MonomialMatrix.identity(field, n)
    for value in range(2, field.q):
        for pos in range(n):
            diag = [1] * n
            diag[pos] = value
            yield MonomialMatrix(field, range(n), diag)
    rng = random.Random(seed)
    while True:
        yield _random_monomial(field, n, rng)


def conjugate_monomial(
    m_tau: MonomialMatrix, m_prime: MonomialMatrix, s: int
) -> MonomialMatrix:
    """The monomial matrix W with pi_s(W) @ M_tau = M_tau @ M_prime.

    Computed as the entrywise p^(e-s) power of M_tau @ M_prime @ M_tau^-1;
    the defining identity is re-checked after construction.
    """
    if m_tau.n != m_prime.n:
        raise Incompatible("monomial sizes differ")
    e = m_tau.field.e
    conj = m_tau @ m_prime @ m_tau.inverse()
    out = conj if s == e else conj.frobenius(e - s)
    if out.frobenius(s) @ m_tau != m_tau @ m_prime:
        raise FormulaMismatch("conjugation identity failed")
    return out


def _search(
    field: FieldSpec,
    n: int,
    predicate,
    budget: int,
    seed: int,
    exhaustive: bool | None,
):
    if exhaustive is None:
        exhaustive = monomial_group_size(field.q, n) <= EXHAUSTIVE_LIMIT
    if exhaustive:
        candidates = all_monomials(field, n)
        limit = monomial_group_size(field.q, n)
    else:
        candidates = _candidates(field, n, seed)
        limit = budget
    trials = 0
    for cand in candidates:
        if trials >= limit:
            break
        trials += 1
        hit = predicate(cand)
        if hit is not None:
            return hit, trials, exhaustive
    raise SearchExhausted(
        f"no witness found in {trials} trials"
        + (" (exhaustive search; none exists)" if exhaustive else ""),
        trials=trials,
    )


def _verify_same_params(original: LinearCode, steered: LinearCode):
    if (steered.n, steered.k) != (original.n, original.k):
        raise FormulaMismatch("monomial image changed code parameters")
    try:
        if steered.min_distance() != original.min_distance():
            raise FormulaMismatch("monomial image changed the minimum distance")
    except TooLarge:
        pass


def steer_relative_hull(
    c1: LinearCode,
    c2: LinearCode,
    sigma: SemilinearIsometry,
    h: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> SteerResult:
    """Monomially equivalent C2' with dim(C1 ∩ C2'^dual) = h.

    Requires q > 2 and max(0, k1 - k2) <= h <= dim(C1 ∩ C2^dual).  Candidates
    are drawn for the inner matrix and converted through conjugate_monomial,
    so the applied witness matches the sigma-twisted construction.
    """
    field = c1.field
    if field.q <= 2:
        raise FieldTooSmall("steering requires q > 2")
    lo = max(0, c1.k - c2.k)
    hi = relative_hull_dim(c1, c2, sigma)
    if not lo <= h <= hi:
        raise TargetOutOfRange(f"h = {h} outside [{lo}, {hi}]")

    def predicate(m_prime: MonomialMatrix):
        witness = conjugate_monomial(sigma.mono, m_prime, sigma.s)
        cand = c2.apply_monomial(witness)
        if relative_hull_dim(c1, cand, sigma) == h:
            return cand, witness
        return None

    (code, witness), trials, exhaustive_used = _search(
        field, c1.n, predicate, budget, seed, exhaustive
    )
    _verify_same_params(c2, code)
    return SteerResult(code, witness, h, trials, exhaustive_used)


def steer_self_hull(
    code: LinearCode,
    sigma: SemilinearIsometry,
    h: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> SteerResult:
    """Monomially equivalent C' with dim Hull(C') = h, same [n, k, d].

    Unlike the relative version both sides of the hull move together, so the
    search condition evaluates the hull of the transformed code directly.
    """
    field = code.field
    if field.q <= 2:
        raise FieldTooSmall("steering requires q > 2")
    hi = sigma_hull_dim(code, sigma)
    if not 0 <= h <= hi:
        raise TargetOutOfRange(f"h = {h} outside [0, {hi}]")

    def predicate(m_prime: MonomialMatrix):
        witness = conjugate_monomial(sigma.mono, m_prime, sigma.s)
        cand = code.apply_monomial(witness)
        if sigma_hull_dim(cand, sigma) == h:
            return cand, witness
        return None

    (steered, witness), trials, exhaustive_used = _search(
        field, code.n, predicate, budget, seed, exhaustive
    )
    _verify_same_params(code, steered)
    return SteerResult(steered, witness, h, trials, exhaustive_used)


def reachable_relative_dims(
    c1: LinearCode, c2: LinearCode, sigma: SemilinearIsometry
) -> set[int]:
    """All values of dim(C1 ∩ (C2 M)^dual) over the full monomial group."""
    if monomial_group_size(c1.field.q, c1.n) > EXHAUSTIVE_LIMIT:
        raise TooLarge("monomial group too large to enumerate")
    out = set()
    for mono in all_monomials(c1.field, c1.n):
        out.add(relative_hull_dim(c1, c2.apply_monomial(mono), sigma))
    return out


def reachable_self_dims(code: LinearCode, sigma: SemilinearIsometry) -> set[int]:
    """All hull dimensions of monomial images of the code."""
    if monomial_group_size(code.field.q, code.n) > EXHAUSTIVE_LIMIT:
        raise TooLarge("monomial group too large to enumerate")
    out = set()
    for mono in all_monomials(code.field, code.n):
        out.add(sigma_hull_dim(code.apply_monomial(mono), sigma))
    return out
