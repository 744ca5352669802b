"""Verification campaigns: every identity is run against the brute-force oracle.

Each suite draws seeded random instances (plus exhaustive small searches where
the claim is about a whole group orbit), compares the rank-formula results
with set-level oracle computations, and collects counterexample certificates
for any disagreement.  Reports are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import oracle, serialize
from .codes import LinearCode
from .errors import SigmaHullError
from .fields import GF, FieldSpec
from .matrices import MatrixGF
from .mpcodes import (
    MatrixProductSpec,
    MpSigma,
    assemble,
    is_sigma_dual_containing,
    is_sigma_self_orthogonal,
    mp_hull_dim,
    mp_sigma_dual,
    rho_monomial_check,
)
from .semilinear import (
    MonomialMatrix,
    SemilinearIsometry,
    relative_hull_dim,
    sigma_dual,
)
from .steering import (
    monomial_group_size,
    reachable_relative_dims,
    steer_relative_hull,
    EXHAUSTIVE_LIMIT,
)
from .eaqecc import eaqecc_from_hull, eaqecc_from_mp

SUITES = ("lemma31", "cor32", "thm31", "thm32", "thm45", "mpdual", "eaqecc")

# Per-side enumeration cap used when drawing instances the oracle must enumerate.
ORACLE_SIDE_CAP = 3**9

_field_cache: dict[int, FieldSpec] = {}


def field_for(q: int) -> FieldSpec:
    if q not in _field_cache:
        _field_cache[q] = GF(q)
    return _field_cache[q]


@dataclass
class VerifyReport:
    suite: str
    seed: int
    requested_trials: int
    instances: int = 0
    passes: int = 0
    failures: int = 0
    counterexamples: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, certificate: dict | None = None):
        self.instances += 1
        if ok:
            self.passes += 1
        else:
            self.failures += 1
            if certificate is not None:
                self.counterexamples.append(certificate)

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"requested_trials: {self.requested_trials}",
            f"instances: {self.instances}",
            f"passes: {self.passes}",
            f"failures: {self.failures}",
        ]
        lines.extend(f"note: {n}" for n in self.notes)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


# -- random instance generators ------------------------------------------------


def random_matrix(rng: random.Random, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
    return MatrixGF(
        field, [[rng.randrange(field.q) for _ in range(cols)] for _ in range(rows)]
    )


def random_code(rng: random.Random, field: FieldSpec, n: int, k: int) -> LinearCode:
    while True:
        m = random_matrix(rng, field, k, n)
        if m.rank() == k:
            return LinearCode(m)


def random_monomial(rng: random.Random, field: FieldSpec, n: int) -> MonomialMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    return MonomialMatrix(field, perm, [rng.randrange(1, field.q) for _ in range(n)])


def random_sigma(rng: random.Random, field: FieldSpec, n: int) -> SemilinearIsometry:
    return SemilinearIsometry(random_monomial(rng, field, n), rng.randrange(1, field.e + 1))


def _enumerable_dim_range(q: int, n: int, cap: int) -> list[int]:
    """Dimensions k with both q^k and q^(n-k) within the per-side cap."""
    return [k for k in range(1, n + 1) if q**k <= cap and q ** (n - k) <= cap]


def draw_code_instance(rng: random.Random, fields, max_n: int):
    """(field, n, k) with both the code and its dual enumerable by the oracle."""
    while True:
        q = rng.choice(list(fields))
        f = field_for(q)
        n = rng.randrange(2, max_n + 1)
        ks = _enumerable_dim_range(q, n, ORACLE_SIDE_CAP)
        if ks:
            return f, n, rng.choice(ks)


# Dense seed with orthogonal rows under the Euclidean form over GF(5); its
# left-monomial orbit provides dense defining matrices where rejection
# sampling is hopeless (q = 5, k = 3).
_DENSE_SEEDS = {(5, 3): [[1, 1, 1], [1, 4, 0], [3, 3, 4]]}


def random_rho_instance(rng: random.Random, field: FieldSpec, k: int, max_tries: int = 300):
    """(A, M_hat, s) passing the rho-monomial check; mixes dense and monomial A."""
    s = rng.randrange(1, field.e + 1)
    if rng.random() >= 0.35:
        for _ in range(max_tries):
            m_hat = random_monomial(rng, field, k)
            a = random_matrix(rng, field, k, k)
            if a.rank() != k:
                continue
            if rho_monomial_check(a, m_hat, s) is not None:
                return a, m_hat, s
        seed = _DENSE_SEEDS.get((field.q, k))
        if seed is not None and s == field.e:
            a = random_monomial(rng, field, k).dense() @ MatrixGF(field, seed)
            m_hat = MonomialMatrix.identity(field, k)
            if rho_monomial_check(a, m_hat, s) is not None:
                return a, m_hat, s
    m_hat = random_monomial(rng, field, k)
    a = random_monomial(rng, field, k).dense()
    return a, m_hat, s


def draw_mp_instance(rng: random.Random, fields, max_n: int, max_k: int = 3):
    """Random square matrix-product instance the oracle can fully enumerate."""
    while True:
        q = rng.choice(list(fields))
        f = field_for(q)
        k = rng.choice([kk for kk in (2, 3) if kk <= max_k])
        n = rng.randrange(2, max_n + 1)
        for _ in range(200):
            dims = [rng.randrange(1, n) for _ in range(k)]
            tot = sum(dims)
            if q**tot <= ORACLE_SIDE_CAP and q ** (k * n - tot) <= ORACLE_SIDE_CAP:
                break
        else:
            continue
        a, m_hat, s = random_rho_instance(rng, f, k)
        spec = MatrixProductSpec(a, [random_code(rng, f, n, d) for d in dims])
        ms = MpSigma(m_hat, random_monomial(rng, f, n), s)
        return spec, ms


# -- certificates ----------------------------------------------------------------


def _code_cert(code: LinearCode) -> dict:
    return serialize.code_to_dict(code)


def _sigma_cert(sigma: SemilinearIsometry) -> dict:
    return serialize.sigma_to_dict(sigma)


def _mp_cert(spec: MatrixProductSpec, ms: MpSigma) -> dict:
    return serialize.mp_spec_to_dict(spec, ms)


# -- suites -------------------------------------------------------------------------


def run_cor32(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Hull dimension: both rank forms vs oracle hulls of the code and its dual."""
    report = VerifyReport("cor32", seed, trials)
    rng = random.Random(seed)
    for index in range(trials):
        f, n, k = draw_code_instance(rng, fields, max_n)
        code = random_code(rng, f, n, k)
        sigma = random_sigma(rng, f, n)
        s = sigma.s
        m_inv = sigma.mono.inverse().dense()
        via_h = n - k - (code.H @ m_inv @ code.H.frobenius(s).transpose()).rank()
        via_g = k - (code.G.frobenius(s) @ sigma.mono.dense() @ code.G.transpose()).rank()
        o_code = oracle.oracle_sigma_hull_dim(code, sigma)
        dual = oracle.sigma_dual_by_definition(code, sigma)
        o_dual = oracle.oracle_sigma_hull_dim(dual, sigma)
        ok = via_h == via_g == o_code == o_dual
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "cor32",
                "index": index,
                "code": _code_cert(code),
                "sigma": _sigma_cert(sigma),
                "rank_via_h": via_h,
                "rank_via_g": via_g,
                "oracle_hull": o_code,
                "oracle_dual_hull": o_dual,
            },
        )
    return report


def run_lemma31(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Both parts: rank formulas vs set-level oracle intersections."""
    report = VerifyReport("lemma31", seed, trials)
    rng = random.Random(seed)
    for index in range(trials):
        f, n, k1 = draw_code_instance(rng, fields, max_n)
        ks = _enumerable_dim_range(f.q, n, ORACLE_SIDE_CAP)
        k2 = rng.choice(ks)
        c1 = random_code(rng, f, n, k1)
        c2 = random_code(rng, f, n, k2)
        sigma = random_sigma(rng, f, n)
        s = sigma.s
        m_inv = sigma.mono.inverse().dense()
        m = sigma.mono.dense()

        p1_h = n - k2 - (c1.H @ m_inv @ c2.H.frobenius(s).transpose()).rank()
        p1_g = k1 - (c2.G.frobenius(s) @ m @ c1.G.transpose()).rank()
        dual2 = oracle.sigma_dual_by_definition(c2, sigma)
        p1_oracle = oracle.intersection_dim(c1, dual2)

        p2_h = n - k2 - (c2.H @ m_inv @ c1.H.frobenius(s).transpose()).rank()
        p2_g = k1 - (c1.G.frobenius(s) @ m @ c2.G.transpose()).rank()
        bidual1 = oracle.sigma_dual_by_definition(
            oracle.sigma_dual_by_definition(c1, sigma), sigma
        )
        p2_oracle = oracle.intersection_dim(bidual1, dual2)

        ok = p1_h == p1_g == p1_oracle and p2_h == p2_g == p2_oracle
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "lemma31",
                "index": index,
                "c1": _code_cert(c1),
                "c2": _code_cert(c2),
                "sigma": _sigma_cert(sigma),
                "part1": [p1_h, p1_g, p1_oracle],
                "part2": [p2_h, p2_g, p2_oracle],
            },
        )
    return report


def run_thm31(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Matrix-product hull dimension formula vs oracle hull of the assembled code."""
    report = VerifyReport("thm31", seed, trials)
    rng = random.Random(seed)
    for index in range(trials):
        spec, ms = draw_mp_instance(rng, fields, max_n)
        predicted = mp_hull_dim(spec, ms)
        actual = oracle.oracle_sigma_hull_dim(assemble(spec), ms.sigma())
        ok = predicted == actual
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "thm31",
                "index": index,
                "spec": _mp_cert(spec, ms),
                "predicted": predicted,
                "oracle": actual,
            },
        )
    return report


def run_thm32(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Dual-containing / self-orthogonal tests vs oracle set containments (iff)."""
    report = VerifyReport("thm32", seed, trials)
    rng = random.Random(seed)
    positive_dc = 0
    positive_so = 0
    for index in range(trials):
        # Bias a share of instances toward satisfied containments so the iff
        # gets exercised in both truth directions.
        spec, ms = draw_mp_instance(rng, fields, max_n)
        if index % 3 == 0:
            spec = _bias_containment(rng, spec, ms, want_so=index % 6 == 0)
        predicted_dc = is_sigma_dual_containing(spec, ms)
        predicted_so = is_sigma_self_orthogonal(spec, ms)
        positive_dc += predicted_dc
        positive_so += predicted_so
        mp = assemble(spec)
        dual = oracle.sigma_dual_by_definition(mp, ms.sigma())
        actual_dc = oracle.is_subset(dual, mp)
        actual_so = oracle.is_subset(mp, dual)
        ok = predicted_dc == actual_dc and predicted_so == actual_so
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "thm32",
                "index": index,
                "spec": _mp_cert(spec, ms),
                "predicted": [predicted_dc, predicted_so],
                "oracle": [actual_dc, actual_so],
            },
        )
    report.notes.append(f"dual_containing_true: {positive_dc}")
    report.notes.append(f"self_orthogonal_true: {positive_so}")
    return report


def _find_code_with_hull(rng, f, n, st, want_k, want_hull, tries=200):
    for _ in range(tries):
        code = random_code(rng, f, n, want_k)
        if relative_hull_dim(code, code, st) == want_hull:
            return code
    return None


def _bias_containment(rng, spec: MatrixProductSpec, ms: MpSigma, want_so: bool):
    """Swap in a constant constituent family C_i = B with the containment satisfied.

    B self-orthogonal gives C_i ⊆ C_rho(i)^dual for any rho; B dual-containing
    gives the reverse.  Enumeration caps are respected; on failure the original
    spec is kept.
    """
    f, n, k = spec.field, spec.n, spec.k
    st = ms.sigma_tilde()
    dims = range(1, n // 2 + 1) if want_so else range((n + 1) // 2, n)
    for want_k in dims:
        tot = k * want_k
        if f.q**tot > ORACLE_SIDE_CAP or f.q ** (k * n - tot) > ORACLE_SIDE_CAP:
            continue
        target_hull = want_k if want_so else n - want_k
        base = _find_code_with_hull(rng, f, n, st, want_k, target_hull)
        if base is not None:
            return MatrixProductSpec(spec.A, [base] * k)
    return spec


def run_mpdual(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """MP form of the sigma dual equals the sigma dual of the assembled code as a set."""
    report = VerifyReport("mpdual", seed, trials)
    rng = random.Random(seed)
    for index in range(trials):
        spec, ms = draw_mp_instance(rng, fields, max_n)
        mp = assemble(spec)
        direct = sigma_dual(mp, ms.sigma())
        via_mp = assemble(mp_sigma_dual(spec, ms))
        ok = oracle.same_set(direct, via_mp)
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "mpdual",
                "index": index,
                "spec": _mp_cert(spec, ms),
            },
        )
    return report


def run_thm45(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Reachable relative-hull dimensions cover the guaranteed interval.

    Exhaustive over the full monomial group, so only small (q, n) instances
    are drawn; the steering search must also realize every h in the interval.
    """
    report = VerifyReport("thm45", seed, trials)
    rng = random.Random(seed)
    usable = [q for q in fields if q > 2]
    for index in range(trials):
        while True:
            q = rng.choice(usable)
            f = field_for(q)
            n = rng.randrange(2, max_n + 1)
            if monomial_group_size(q, n) <= EXHAUSTIVE_LIMIT:
                break
        k1, k2 = rng.randrange(1, n + 1), rng.randrange(1, n + 1)
        c1 = random_code(rng, f, n, k1)
        c2 = random_code(rng, f, n, k2)
        sigma = random_sigma(rng, f, n)
        lo = max(0, k1 - k2)
        hi = relative_hull_dim(c1, c2, sigma)
        reach = reachable_relative_dims(c1, c2, sigma)
        missing = [h for h in range(lo, hi + 1) if h not in reach]
        steer_ok = True
        if not missing:
            for h in range(lo, hi + 1):
                result = steer_relative_hull(c1, c2, sigma, h)
                if relative_hull_dim(c1, result.code, sigma) != h:
                    steer_ok = False
                    break
        ok = not missing and steer_ok
        report.record(
            ok,
            None
            if ok
            else {
                "suite": "thm45",
                "index": index,
                "c1": _code_cert(c1),
                "c2": _code_cert(c2),
                "sigma": _sigma_cert(sigma),
                "interval": [lo, hi],
                "reachable": sorted(reach),
                "missing": missing,
            },
        )
    return report


def run_eaqecc(seed: int, trials: int, max_n: int, fields) -> VerifyReport:
    """Hull-derived records agree with the independent rank path; MP bounds hold."""
    report = VerifyReport("eaqecc", seed, trials)
    rng = random.Random(seed)
    usable = [q for q in fields if q > 2]
    bound_checks = 0
    for index in range(trials):
        f, n, k = draw_code_instance(rng, usable, max_n)
        code = random_code(rng, f, n, k)
        sigma = random_sigma(rng, f, n)
        cert = None
        try:
            rec1, rec2 = eaqecc_from_hull(code, sigma)
            ok = (
                rec1.k + rec1.c == n - 2 * rec1.h
                and rec2.k + rec2.c == n - 2 * rec2.h
                and rec1.k == rec2.c
                and rec2.k == rec1.c
                and rec1.c >= 0
                and rec2.c >= 0
            )
        except SigmaHullError as exc:
            ok = False
            cert = {"error": str(exc)}
        if not ok and cert is None:
            cert = {
                "suite": "eaqecc",
                "index": index,
                "code": _code_cert(code),
                "sigma": _sigma_cert(sigma),
            }
        if ok and index % 4 == 0:
            spec, ms = draw_mp_instance(rng, usable, min(max_n, 4))
            q1, q2, meta = eaqecc_from_mp(spec, ms)
            exact = assemble(spec).min_distance()
            if meta["nonsingular_by_columns"]:
                bound_checks += 1
                if exact < meta["claimed_bound_q1"]:
                    ok = False
                    cert = {
                        "suite": "eaqecc",
                        "index": index,
                        "spec": _mp_cert(spec, ms),
                        "exact_distance": exact,
                        "claimed_bound": meta["claimed_bound_q1"],
                    }
        report.record(ok, cert if not ok else None)
    report.notes.append(f"mp_distance_bound_checks: {bound_checks}")
    return report


_RUNNERS = {
    "cor32": run_cor32,
    "lemma31": run_lemma31,
    "thm31": run_thm31,
    "thm32": run_thm32,
    "thm45": run_thm45,
    "mpdual": run_mpdual,
    "eaqecc": run_eaqecc,
}

DEFAULT_FIELDS = (3, 4, 5, 7, 8, 9)


def run_suite(
    suite: str,
    seed: int = 1,
    trials: int = 100,
    max_n: int = 6,
    fields=DEFAULT_FIELDS,
) -> VerifyReport:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite in ("thm31", "thm32", "mpdual"):
        max_n = min(max_n, 4)
    if suite == "thm45":
        max_n = min(max_n, 3)
        fields = tuple(q for q in fields if q in (3, 4)) or (3, 4)
    if suite in ("thm45", "eaqecc") and not any(q > 2 for q in fields):
        raise ValueError(f"suite {suite!r} requires a field with q > 2")
    return _RUNNERS[suite](seed, trials, max_n, fields)
