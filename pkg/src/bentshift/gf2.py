"""Bit-packed vectors and matrices over GF(2): rank, solving, kernels.

A vector is a Python int used little-endian: bit i of ``bits`` is component i.
A matrix is a tuple of such row ints.  Gaussian elimination is therefore a
sequence of whole-row XORs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

__all__ = [
    "BitVec",
    "BitMatrix",
    "rank",
    "solve",
    "kernel_basis",
    "random_invertible",
]


@dataclass(frozen=True, slots=True)
class BitVec:
    """Row vector over GF(2); unused high bits must be zero."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative BitVec length {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} do not fit in {self.n} components")

    @classmethod
    def from_iterable(cls, components) -> "BitVec":
        bits = 0
        count = 0
        for i, c in enumerate(components):
            if c not in (0, 1):
                raise ValueError(f"component {i} is {c!r}, expected 0 or 1")
            bits |= int(c) << i
            count = i + 1
        return cls(count, bits)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for length {self.n}")
        return (self.bits >> i) & 1

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitVec") -> int:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return (self.bits & other.bits).bit_count() & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return BitVec(self.n, self.bits ^ other.bits)


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """Row-major matrix over GF(2), rows packed little-endian into ints."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.row_bits) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_bits)}")
        limit = 1 << self.cols
        for i, r in enumerate(self.row_bits):
            if not 0 <= r < limit:
                raise ValueError(f"row {i} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows) -> "BitMatrix":
        vecs = [BitVec.from_iterable(r) for r in rows]
        if not vecs:
            raise ValueError("from_rows needs at least one row")
        cols = vecs[0].n
        if any(v.n != cols for v in vecs):
            raise ValueError("rows have unequal lengths")
        return cls(len(vecs), cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_row_ints(cls, cols: int, ints) -> "BitMatrix":
        ints = tuple(int(r) for r in ints)
        return cls(len(ints), cols, ints)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.row_bits[i])

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range")
        return (self.row_bits[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            c = 0
            for i, r in enumerate(self.row_bits):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def mat_vec(self, v: BitVec) -> BitVec:
        """M x^t as a length-``rows`` vector."""
        if v.n != self.cols:
            raise ValueError(f"vector length {v.n} != {self.cols} columns")
        out = 0
        for i, r in enumerate(self.row_bits):
            out |= ((r & v.bits).bit_count() & 1) << i
        return BitVec(self.rows, out)

    def vec_mat(self, v: BitVec) -> BitVec:
        """x M for a row vector x of length ``rows``."""
        if v.n != self.rows:
            raise ValueError(f"vector length {v.n} != {self.rows} rows")
        out = 0
        t = v.bits
        while t:
            i = (t & -t).bit_length() - 1
            out ^= self.row_bits[i]
            t &= t - 1
        return BitVec(self.cols, out)

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"inner dimensions differ: {self.cols} != {other.rows}")
        out = tuple(other.vec_mat(self.row(i)).bits for i in range(self.rows))
        return BitMatrix(self.rows, other.cols, out)

    __matmul__ = matmul

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.row_bits == self.transpose().row_bits

    def inverse(self) -> "BitMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.cols
        aug = [r | (1 << (n + i)) for i, r in enumerate(self.row_bits)]
        piv = _rref(aug)
        inv_rows = [0] * n
        for c, r in piv.items():
            if c >= n:
                raise ValueError("matrix is singular")
            inv_rows[c] = r >> n
        if len(piv) != n:
            raise ValueError("matrix is singular")
        return BitMatrix(n, n, tuple(inv_rows))


def _lsb(x: int) -> int:
    return (x & -x).bit_length() - 1


def _rref(row_ints) -> dict[int, int]:
    """Reduced row echelon form, lowest-set-bit pivots; {pivot column: row}.

    Invariant: each pivot column is set in exactly one stored row (its own),
    so reducing an incoming row is a single pass over its pivot-column bits.
    """
    pivots: dict[int, int] = {}
    for r in row_ints:
        t = r
        while t:
            c = _lsb(t)
            if c in pivots:
                r ^= pivots[c]  # clears bit c; can only toggle non-pivot bits
                t = r & ~((1 << (c + 1)) - 1)
            else:
                t &= t - 1
        if r:
            c = _lsb(r)
            for pc, pr in pivots.items():
                if (pr >> c) & 1:
                    pivots[pc] = pr ^ r
            pivots[c] = r
    return pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank; the input is not modified."""
    return len(_rref(m.row_bits))


def solve(m: BitMatrix, b: BitVec) -> tuple[BitVec, list[BitVec]] | None:
    """One solution of M x^t = b^t plus a kernel basis, or None if inconsistent.

    The kernel basis vectors are linearly independent and ordered by their
    free column, so the result is deterministic.
    """
    if b.n != m.rows:
        raise ValueError(f"rhs length {b.n} != {m.rows} rows")
    # rhs lives at bit position cols: lsb pivoting can only select it when the
    # coefficient part of a row vanished, which is exactly the inconsistency.
    aug = [r | (((b.bits >> i) & 1) << m.cols) for i, r in enumerate(m.row_bits)]
    piv = _rref(aug)
    if m.cols in piv:
        return None
    x = 0
    for c, r in piv.items():
        x |= ((r >> m.cols) & 1) << c
    kernel = []
    for fc in range(m.cols):
        if fc in piv:
            continue
        v = 1 << fc
        for c, r in piv.items():
            if (r >> fc) & 1:
                v |= 1 << c
        kernel.append(BitVec(m.cols, v))
    return BitVec(m.cols, x), kernel


def kernel_basis(m: BitMatrix) -> list[BitVec]:
    """Basis of {v : M v^t = 0}."""
    result = solve(m, BitVec(m.rows, 0))
    assert result is not None  # homogeneous systems are always consistent
    return result[1]


def random_invertible(n: int, seed: int | random.Random) -> BitMatrix:
    """Uniform random element of GL(n, GF(2)) by rejection; seeded, reproducible."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        mat = BitMatrix(n, n, tuple(rng.getrandbits(n) for _ in range(n)))
        if rank(mat) == n:
            return mat
