"""Codeword enumeration engine: vectorized message expansion over GF(q).

Messages are enumerated in lexicographic order (first coordinate most
significant).  When the field provides numpy operation tables the expansion is
vectorized; otherwise a pure-Python fold is used.
"""

from __future__ import annotations

import numpy as np

from .errors import TooLarge
from .fields import FieldSpec
from .matrices import MatrixGF

MIN_DISTANCE_GUARD = 1 << 24
_CHUNK = 1 << 16


def _message_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """(stop-start) x k digit array for lexicographic message indices."""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((stop - start, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        digits[:, j] = idx % q
        idx //= q
    return digits


def codeword_block(field: FieldSpec, gen: MatrixGF, start: int, stop: int) -> np.ndarray:
    """Codewords for message indices [start, stop) as a (stop-start) x n array."""
    k, n = gen.rows, gen.cols
    if k == 0:
        return np.zeros((stop - start, n), dtype=np.int16)
    tables = field.np_tables()
    msgs = _message_block(field.q, k, start, stop)
    if tables is not None:
        add, mul = tables
        g = np.array(gen.data, dtype=np.int64)
        out = np.zeros((stop - start, n), dtype=np.int16)
        for i in range(k):
            out = add[out, mul[msgs[:, i][:, None], g[i][None, :]]]
        return out
    rows = []
    for msg in msgs:
        word = [0] * n
        for i, m in enumerate(msg):
            if m:
                grow = gen.data[i]
                word = [field.add(w, field.mul(int(m), g)) for w, g in zip(word, grow)]
        rows.append(word)
    return np.array(rows, dtype=np.int16).reshape(stop - start, n)


def codeword_count(field: FieldSpec, k: int) -> int:
    return field.q**k


def all_codewords(field: FieldSpec, gen: MatrixGF, budget: int) -> np.ndarray:
    total = codeword_count(field, gen.rows)
    if total > budget:
        raise TooLarge(f"q^k = {total} exceeds enumeration budget {budget}")
    if gen.rows == 0:
        return np.zeros((1, gen.cols), dtype=np.int16)
    return codeword_block(field, gen, 0, total)


def encode_words(field: FieldSpec, words: np.ndarray) -> np.ndarray:
    """Encode codeword rows as int64 scalars (radix q); requires q^n < 2^62."""
    n = words.shape[1]
    if field.q**n >= 1 << 62:
        raise TooLarge("codeword encoding would overflow int64")
    powers = field.q ** np.arange(n, dtype=np.int64)
    return words.astype(np.int64) @ powers


def codeword_ints(field: FieldSpec, gen: MatrixGF, budget: int) -> np.ndarray:
    return encode_words(field, all_codewords(field, gen, budget))


def min_weight(field: FieldSpec, gen: MatrixGF, guard: int | None = None) -> int:
    """Minimum Hamming weight over all nonzero codewords, by chunked enumeration."""
    if guard is None:
        guard = MIN_DISTANCE_GUARD
    total = codeword_count(field, gen.rows)
    if total > guard:
        raise TooLarge(f"q^k = {total} exceeds minimum-distance guard {guard}")
    best = gen.cols + 1
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        block = codeword_block(field, gen, start, stop)
        weights = np.count_nonzero(block, axis=1)
        if start == 0:
            weights = weights[1:]  # drop the zero message
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def weight_distribution(field: FieldSpec, gen: MatrixGF, budget: int) -> tuple[int, ...]:
    """Number of codewords of each Hamming weight 0..n."""
    words = all_codewords(field, gen, budget)
    weights = np.count_nonzero(words, axis=1)
    counts = np.bincount(weights, minlength=gen.cols + 1)
    return tuple(int(c) for c in counts)
