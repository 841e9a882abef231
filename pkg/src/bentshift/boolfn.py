"""Truth-table Boolean functions with an exact integer Walsh-Hadamard transform.

Conventions (global): truth-table index i encodes the input whose j-th
variable is bit j of i (little-endian).  Spectra are stored unnormalized:
coeffs[w] = W(w) = sum over x of (-1)^(w.x + f(x)), an even integer; flatness
means |W(w)| = 2^(n/2) everywhere.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    NotBentError,
    ResourceLimitError,
    TruthTableParseError,
)
from .gf2 import BitMatrix, BitVec, rank

__all__ = [
    "MAX_N",
    "TruthTable",
    "Spectrum",
    "wht",
    "is_bent",
    "dual",
    "shift",
    "affine_compose",
    "derivative",
    "is_balanced",
    "anf",
    "degree",
    "convolve",
    "table_to_text",
    "parse_table_text",
    "save_table",
    "load_table",
]

MAX_N = 26  # 2^26 int64 work array caps the butterfly at 512 MiB
_CONVOLVE_MAX_N = 20  # products of two spectra summed 2^n times stay below 2^63


class TruthTable:
    """Boolean function on n variables as a read-only array of 2^n output bits."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values) -> None:
        if n < 1:
            raise ValueError(f"need at least one variable, got n={n}")
        if n > MAX_N:
            raise ResourceLimitError(f"n={n} exceeds the supported cap {MAX_N}")
        arr = np.asarray(values, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} entries for n={n}, got shape {arr.shape}")
        if arr.size and int(arr.max()) > 1:
            raise ValueError("table entries must be 0 or 1")
        arr = arr.copy()
        arr.setflags(write=False)
        self.n = n
        self.values = arr

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Evaluate fn(x) for every input index x."""
        return cls(n, [fn(x) & 1 for x in range(1 << n)])

    @classmethod
    def constant(cls, n: int, bit: int = 0) -> "TruthTable":
        return cls(n, np.full(1 << n, bit & 1, dtype=np.uint8))

    @classmethod
    def from_hex(cls, n: int, text: str) -> "TruthTable":
        size = 1 << n
        nchars = (size + 3) // 4
        if len(text) != nchars:
            raise ValueError(f"expected {nchars} hex digits for n={n}, got {len(text)}")
        bits = np.zeros(4 * nchars, dtype=np.uint8)
        for j, ch in enumerate(text):
            try:
                v = int(ch, 16)
            except ValueError:
                raise ValueError(f"invalid hex digit {ch!r} at offset {j}") from None
            bits[4 * j : 4 * j + 4] = [(v >> b) & 1 for b in range(4)]
        if bits[size:].any():
            raise ValueError("nonzero padding bits past the table end")
        return cls(n, bits[:size])

    def to_hex(self) -> str:
        """Little-endian-nibble hex string of the 2^n output bits."""
        size = 1 << self.n
        nchars = (size + 3) // 4
        padded = np.zeros(4 * nchars, dtype=np.uint8)
        padded[:size] = self.values
        nibbles = padded.reshape(-1, 4) @ np.array([1, 2, 4, 8], dtype=np.uint8)
        return "".join("0123456789abcdef"[int(v)] for v in nibbles)

    def weight(self) -> int:
        return int(self.values.sum())

    def sign_vector(self) -> np.ndarray:
        """(-1)^f as a fresh int64 array."""
        return 1 - 2 * self.values.astype(np.int64)

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.values.shape[0]:
            raise IndexError(f"input {x} out of range for n={self.n}")
        return int(self.values[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.n, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, hex={self.to_hex()!r})"


def _butterfly_i64(a: np.ndarray) -> np.ndarray:
    """In-place radix-2 Hadamard butterfly on a length-2^n int64 array."""
    size = a.shape[0]
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        t = b[:, 0, :].copy()
        b[:, 0, :] += b[:, 1, :]
        b[:, 1, :] = t - b[:, 1, :]
        h <<= 1
    return a


class Spectrum:
    """Unnormalized integer WHT: coeffs[w] = sum_x (-1)^(w.x + f(x))."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs) -> None:
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} coefficients for n={n}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.n = n
        self.coeffs = arr

    def is_flat(self) -> bool:
        if self.n % 2:
            return False
        amp = 1 << (self.n // 2)
        return bool(np.all(np.abs(self.coeffs) == amp))

    def max_abs(self) -> int:
        return int(np.abs(self.coeffs).max())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"Spectrum(n={self.n}, max_abs={self.max_abs()})"


def wht(f: TruthTable) -> Spectrum:
    """Exact integer Walsh-Hadamard transform of the sign vector, O(n 2^n)."""
    return Spectrum(f.n, _butterfly_i64(f.sign_vector()))


def is_bent(f: TruthTable) -> bool:
    """True iff n is even and |W(w)| = 2^(n/2) for every frequency."""
    if f.n % 2:
        return False
    return wht(f).is_flat()


def dual(f: TruthTable) -> TruthTable:
    """Dual bent function: W(w) = 2^(n/2) * (-1)^dual(w)."""
    if f.n % 2:
        raise NotBentError(f"no bent functions on an odd number of variables (n={f.n})")
    sp = wht(f)
    amp = 1 << (f.n // 2)
    bad = np.flatnonzero(np.abs(sp.coeffs) != amp)
    if bad.size:
        w = int(bad[0])
        raise NotBentError(
            f"spectrum is not flat: |W({w})| = {abs(int(sp.coeffs[w]))} != {amp}",
            frequency=w,
        )
    return TruthTable(f.n, (sp.coeffs < 0).astype(np.uint8))


def shift(f: TruthTable, s: BitVec) -> TruthTable:
    """g with g(x) = f(x xor s)."""
    if s.n != f.n:
        raise ValueError(f"shift length {s.n} != n={f.n}")
    idx = np.arange(1 << f.n) ^ s.bits
    return TruthTable(f.n, f.values[idx])


def affine_compose(f: TruthTable, a: BitMatrix, b: BitVec) -> TruthTable:
    """g(x) = f(xA xor b) for invertible A."""
    n = f.n
    if a.rows != n or a.cols != n:
        raise ValueError(f"matrix must be {n}x{n}, got {a.rows}x{a.cols}")
    if b.n != n:
        raise ValueError(f"offset length {b.n} != n={n}")
    if rank(a) != n:
        raise ValueError("transform matrix is singular")
    xa = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        step = 1 << i
        xa[step : 2 * step] = xa[:step] ^ a.row_bits[i]
    return TruthTable(n, f.values[xa ^ b.bits])


def derivative(f: TruthTable, h: BitVec) -> TruthTable:
    """Directional derivative f(x xor h) xor f(x)."""
    if h.n != f.n:
        raise ValueError(f"direction length {h.n} != n={f.n}")
    idx = np.arange(1 << f.n) ^ h.bits
    return TruthTable(f.n, f.values ^ f.values[idx])


def is_balanced(f: TruthTable) -> bool:
    return 2 * f.weight() == 1 << f.n


def anf(f: TruthTable) -> frozenset[int]:
    """Algebraic normal form as the set of monomial masks (Moebius transform)."""
    a = f.values.copy()
    size = a.shape[0]
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        b[:, 1, :] ^= b[:, 0, :]
        h <<= 1
    return frozenset(int(m) for m in np.flatnonzero(a))


def degree(f: TruthTable) -> int:
    """Algebraic degree: largest monomial size in the ANF (0 for constants)."""
    return max((m.bit_count() for m in anf(f)), default=0)


def convolve(f: TruthTable, g: TruthTable) -> np.ndarray:
    """c[x] = sum_y F(x xor y) G(y) on sign vectors, via three butterflies."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: {f.n} != {g.n}")
    if f.n > _CONVOLVE_MAX_N:
        raise ResourceLimitError(
            f"convolve needs n <= {_CONVOLVE_MAX_N} for exact int64 arithmetic"
        )
    size = 1 << f.n
    prod = _butterfly_i64(f.sign_vector()) * _butterfly_i64(g.sign_vector())
    out = _butterfly_i64(prod)
    q, r = np.divmod(out, size)
    assert not r.any()  # butterfly of a product of spectra is divisible by 2^n
    return q


# -- truth-table text format -------------------------------------------------
#
# line 1: n=<k>
# line 2: hex string of the 2^k output bits, little-endian nibbles


def table_to_text(f: TruthTable) -> str:
    return f"n={f.n}\n{f.to_hex()}\n"


def parse_table_text(text: str) -> TruthTable:
    lines = text.splitlines()
    if not lines:
        raise TruthTableParseError("empty input", line=1)
    head = lines[0].strip()
    if not head.startswith("n="):
        raise TruthTableParseError("first line must be 'n=<count>'", line=1, offset=0)
    try:
        n = int(head[2:])
    except ValueError:
        raise TruthTableParseError(f"invalid variable count {head[2:]!r}", line=1, offset=2) from None
    if n < 1:
        raise TruthTableParseError(f"variable count must be positive, got {n}", line=1, offset=2)
    if n > MAX_N:
        raise ResourceLimitError(f"n={n} exceeds the supported cap {MAX_N}")
    if len(lines) < 2:
        raise TruthTableParseError("missing hex table line", line=2)
    body = lines[1].strip()
    for extra in range(2, len(lines)):
        if lines[extra].strip():
            raise TruthTableParseError("unexpected trailing content", line=extra + 1, offset=0)
    nchars = ((1 << n) + 3) // 4
    if len(body) != nchars:
        raise TruthTableParseError(
            f"expected {nchars} hex digits, got {len(body)}", line=2, offset=len(body)
        )
    for j, ch in enumerate(body):
        if ch not in "0123456789abcdefABCDEF":
            raise TruthTableParseError(f"invalid hex digit {ch!r}", line=2, offset=j)
    return TruthTable.from_hex(n, body.lower())


def save_table(f: TruthTable, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(table_to_text(f))


def load_table(path) -> TruthTable:
    with open(path, "r", encoding="ascii") as fh:
        return parse_table_text(fh.read())
