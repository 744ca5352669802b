"""Exact arithmetic in GF(p^e).

Field elements are represented by their index idx in [0, q-1]: the base-p
encoding of the little-endian coefficient vector of the element in the
polynomial basis, idx = sum(coeffs[i] * p**i).  The field carries an explicit
monic irreducible modulus; multiplication uses log/antilog tables for
q <= 2**16 and falls back to polynomial arithmetic beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, FieldMismatch, InvalidExponent

_LOG_TABLE_MAX_Q = 1 << 16
_ADD_TABLE_MAX_Q = 1024
_NP_TABLE_MAX_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must be nonzero, little-endian."""
    a = _poly_trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[db], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - factor * b[i]) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, mod, p)


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division of a monic polynomial by all monic polys of degree <= deg/2."""
    e = len(coeffs) - 1
    if e < 1 or coeffs[e] != 1:
        return False
    for d in range(1, e // 2 + 1):
        for value in range(p**d):
            div = _digits(value, p, d) + [1]
            if not _poly_mod(coeffs, div, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest (little-endian, base-p value) monic irreducible of degree e."""
    for value in range(p**e):
        cand = _digits(value, p, e) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {e} over GF({p})")


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, r = divmod(value, p)
        out.append(r)
    return out


class FieldSpec:
    """GF(p^e) with an explicit monic irreducible modulus."""

    __slots__ = (
        "p", "e", "q", "modulus",
        "_coeff_cache", "_exp", "_log", "_add_table", "_np_tables_cache",
    )

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[e] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not is_irreducible(list(modulus), p):
                raise ValueError("modulus is reducible")
        self.modulus = modulus

        self._coeff_cache = None
        self._exp = None
        self._log = None
        self._add_table = None
        self._np_tables_cache = None
        if e > 1:
            if self.q <= _LOG_TABLE_MAX_Q:
                self._coeff_cache = [tuple(_digits(i, p, e)) for i in range(self.q)]
                self._build_log_tables()
            if self.q <= _ADD_TABLE_MAX_Q:
                self._build_add_table()

    # -- construction helpers ------------------------------------------------

    def _build_log_tables(self):
        q = self.q
        factors = _prime_factors(q - 1)
        gen = None
        for g in range(2, q):
            if all(self._pow_poly(g, (q - 1) // f) != 1 for f in factors):
                gen = g
                break
        if gen is None:  # q = 2 has the trivial group
            gen = 1
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_poly(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _build_add_table(self):
        q, p = self.q, self.p
        cc = self._coeff_cache
        table = [0] * (q * q)
        for a in range(q):
            ca = cc[a]
            row = a * q
            for b in range(q):
                cb = cc[b]
                table[row + b] = self.from_coeffs((x + y) % p for x, y in zip(ca, cb))
        self._add_table = table

    # -- polynomial-route arithmetic (always available) ----------------------

    def _mul_poly(self, a: int, b: int) -> int:
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        return self.from_coeffs(_poly_mulmod(list(ca), list(cb), list(self.modulus), self.p))

    def _pow_poly(self, a: int, m: int) -> int:
        result = 1
        base = a
        while m:
            if m & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            m >>= 1
        return result

    # -- element encoding ----------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        if self._coeff_cache is not None:
            return self._coeff_cache[a]
        return tuple(_digits(a, self.p, self.e))

    def from_coeffs(self, cs) -> int:
        idx = 0
        for i, c in enumerate(cs):
            idx += (c % self.p) * self.p**i
        return idx

    def element(self, idx: int) -> "FieldElement":
        return FieldElement(self, idx % self.q)

    # -- arithmetic on element indices ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        p = self.p
        return self.from_coeffs((x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return self.from_coeffs((-x) % p for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return (a * b) % self.p
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero element has no inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_poly(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, m: int) -> int:
        if m < 0:
            return self.pow(self.inv(a), -m)
        if a == 0:
            return 1 if m == 0 else 0
        if self.e == 1:
            return pow(a, m, self.p)
        if self._exp is not None:
            return self._exp[(self._log[a] * m) % (self.q - 1)]
        return self._pow_poly(a, m)

    def frobenius(self, a: int, s: int) -> int:
        """a ** (p**s); an automorphism of the field for 1 <= s <= e."""
        if not 1 <= s <= self.e:
            raise InvalidExponent(f"Frobenius exponent {s} outside 1..{self.e}")
        if self.e == 1 or a < 2:
            return a
        return self.pow(a, self.p**s)

    # -- numpy operation tables (for vectorized enumeration) ------------------

    def np_tables(self):
        """(add, mul) full operation tables as q x q int16 arrays, or None if q too large."""
        if self.q > _NP_TABLE_MAX_Q:
            return None
        if self._np_tables_cache is None:
            import numpy as np

            q = self.q
            if self.e == 1:
                r = np.arange(q, dtype=np.int64)
                add = (r[:, None] + r[None, :]) % q
                mul = (r[:, None] * r[None, :]) % q
            else:
                add = np.array(
                    [[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
                )
                mul = np.array(
                    [[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
                )
            self._np_tables_cache = (add.astype(np.int16), mul.astype(np.int16))
        return self._np_tables_cache

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def GF(q: int, modulus=None) -> FieldSpec:
    """Field of order q = p^e with the canonical (smallest) modulus unless given."""
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return FieldSpec(p, e, modulus)
    raise ValueError(f"{q} is not a prime power")


def check_same_field(a: FieldSpec, b: FieldSpec):
    if a != b:
        raise FieldMismatch(f"field mismatch: {a} vs {b}")


@dataclass(frozen=True)
class FieldElement:
    """A single element of GF(p^e), wrapping its integer index."""

    field: FieldSpec
    idx: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.idx)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            check_same_field(self.field, other.field)
            return other.idx
        return int(other) % self.field.q

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.idx, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.idx, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.idx))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.idx, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.idx, self._other(other)))

    def __pow__(self, m: int):
        return FieldElement(self.field, self.field.pow(self.idx, m))

    def frobenius(self, s: int) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.idx, s))

    def __bool__(self):
        return self.idx != 0

    def __repr__(self):
        return f"{self.field!r}:{self.idx}"
