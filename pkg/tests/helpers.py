"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (double loops, brute-force scans) and
shares no code with the library paths it checks.
"""
from __future__ import annotations

import numpy as np

from bentshift import TruthTable


def naive_wht(f: TruthTable) -> np.ndarray:
    """O(4^n) definition-level transform: W(w) = sum_x (-1)^(w.x + f(x))."""
    size = 1 << f.n
    out = np.zeros(size, dtype=np.int64)
    for w in range(size):
        acc = 0
        for x in range(size):
            acc += -1 if (((w & x).bit_count() & 1) ^ f(x)) else 1
        out[w] = acc
    return out


def naive_wht_fast(f: TruthTable) -> np.ndarray:
    """Definition-level transform with a vectorized inner sum (for n up to ~14)."""
    size = 1 << f.n
    idx = np.arange(size)
    par = idx.copy()
    for s in (32, 16, 8, 4, 2, 1):
        par ^= par >> s
    parity = (par & 1).astype(np.int64)  # parity of popcount
    sign_f = 1 - 2 * f.values.astype(np.int64)
    out = np.empty(size, dtype=np.int64)
    for w in range(size):
        out[w] = int(((1 - 2 * parity[idx & w]) * sign_f).sum())
    return out


def naive_convolve(f: TruthTable, g: TruthTable) -> np.ndarray:
    """c[x] = sum_y F(x xor y) G(y) by direct double loop."""
    size = 1 << f.n
    sf = 1 - 2 * f.values.astype(np.int64)
    sg = 1 - 2 * g.values.astype(np.int64)
    out = np.zeros(size, dtype=np.int64)
    for x in range(size):
        out[x] = int((sf[np.arange(size) ^ x] * sg).sum())
    return out


def eval_anf(monomials, x: int) -> int:
    """Evaluate a monomial-set ANF at input x."""
    acc = 0
    for m in monomials:
        if (m & x) == m:
            acc ^= 1
    return acc


def span_rank(rows) -> int:
    """Rank as log2 of the row-span cardinality (brute force)."""
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def all_tables(n: int):
    """Every Boolean function on n variables (2^(2^n) of them; keep n tiny)."""
    size = 1 << n
    for code in range(1 << size):
        yield TruthTable(n, [(code >> i) & 1 for i in range(size)])


def batch_spectra(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Sign vectors and spectra of ALL functions on n variables, batched.

    Returns (tables uint8 of shape (2^2^n, 2^n), spectra int64 same shape).
    """
    size = 1 << n
    count = 1 << size
    codes = np.arange(count, dtype=np.int64)
    tables = ((codes[:, None] >> np.arange(size)[None, :]) & 1).astype(np.uint8)
    spec = 1 - 2 * tables.astype(np.int64)
    h = 1
    while h < size:
        b = spec.reshape(count, -1, 2, h)
        t = b[:, :, 0, :].copy()
        b[:, :, 0, :] += b[:, :, 1, :]
        b[:, :, 1, :] = t - b[:, :, 1, :]
        h <<= 1
    return tables, spec
