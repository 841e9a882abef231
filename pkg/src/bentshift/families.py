"""Constructors for the classical bent-function families, plus Dickson normal form.

All constructors emit truth tables under the global little-endian convention.
Functions on pairs (x, y) of half-width inputs place x in the low m bits of
the table index and y in the high m bits.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._util import parity_table
from .boolfn import MAX_N, TruthTable, is_balanced
from .errors import ResourceLimitError
from .gf2 import BitMatrix, BitVec, random_invertible, rank
from .gf2k import FieldCtx, FieldElement, find_kloosterman_zero, subfield_embedding

__all__ = [
    "IPDescriptor",
    "MMDescriptor",
    "QuadraticForm",
    "PartialSpreadDescriptor",
    "DobbertinDescriptor",
    "TraceMonomialDescriptor",
    "TraceMonomialResult",
    "field_power_permutation",
    "inner_product",
    "maiorana_mcfarland",
    "mm_dual",
    "quadratic",
    "dickson_normalize",
    "dickson_target",
    "partial_spread",
    "dobbertin",
    "trace_monomial",
    "direct_sum",
    "build_table",
    "descriptor_to_dict",
    "descriptor_from_dict",
    "random_descriptor",
    "random_mm",
    "random_quadratic",
    "random_partial_spread",
    "random_dobbertin",
    "random_balanced_table",
]


def inner_product(m: int) -> TruthTable:
    """ip on 2m variables: sum of x_i y_i; the canonical self-dual bent function."""
    if m < 1:
        raise ValueError(f"half-dimension must be positive, got {m}")
    if 2 * m > MAX_N:
        raise ResourceLimitError(f"2m = {2 * m} exceeds the table cap {MAX_N}")
    idx = np.arange(1 << (2 * m))
    x = idx & ((1 << m) - 1)
    y = idx >> m
    return TruthTable(2 * m, parity_table(m)[x & y])


# -- Maiorana-McFarland --------------------------------------------------------


@dataclass(frozen=True)
class MMDescriptor:
    """f(x, y) = x.pi(y) + g(y) on 2m variables."""

    m: int
    pi: tuple[int, ...]
    g: TruthTable

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"half-dimension must be positive, got {self.m}")
        object.__setattr__(self, "pi", tuple(int(v) for v in self.pi))
        if sorted(self.pi) != list(range(1 << self.m)):
            raise ValueError("pi is not a bijection of {0..2^m-1}")
        if self.g.n != self.m:
            raise ValueError(f"g must be on m={self.m} variables, got {self.g.n}")

    def pi_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.pi)
        for v, pv in enumerate(self.pi):
            inv[pv] = v
        return tuple(inv)


def field_power_permutation(ctx: FieldCtx, e: int) -> tuple[int, ...]:
    """x -> x^e over GF(2^k) as an MM permutation table.

    A bijection iff gcd(e, 2^k - 1) = 1 (0 maps to 0 for any e >= 1).
    """
    if e < 1 or math.gcd(e, ctx.order - 1) != 1:
        raise ValueError(
            f"x^{e} is not a permutation of {ctx.name}: "
            f"gcd({e}, {ctx.order - 1}) != 1"
        )
    return tuple(ctx.pow_int(x, e) for x in range(ctx.order))


def maiorana_mcfarland(d: MMDescriptor) -> TruthTable:
    m = d.m
    idx = np.arange(1 << (2 * m))
    x = idx & ((1 << m) - 1)
    y = idx >> m
    pi_arr = np.asarray(d.pi, dtype=np.int64)
    vals = parity_table(m)[x & pi_arr[y]] ^ d.g.values[y]
    return TruthTable(2 * m, vals)


def mm_dual(d: MMDescriptor) -> TruthTable:
    """Closed-form dual: pi_inverse(x).y + g(pi_inverse(x))."""
    m = d.m
    idx = np.arange(1 << (2 * m))
    x = idx & ((1 << m) - 1)
    y = idx >> m
    pinv = np.asarray(d.pi_inverse(), dtype=np.int64)
    vals = parity_table(m)[pinv[x] & y] ^ d.g.values[pinv[x]]
    return TruthTable(2 * m, vals)


# -- quadratic forms and Dickson normal form -----------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """f(x) = x Q x^t + L x^t with Q strictly upper triangular."""

    n: int
    q: BitMatrix
    ell: BitVec

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if self.q.rows != self.n or self.q.cols != self.n:
            raise ValueError(f"Q must be {self.n}x{self.n}")
        for i, row in enumerate(self.q.row_bits):
            if row & ((1 << (i + 1)) - 1):
                raise ValueError(f"Q is not strictly upper triangular at row {i}")
        if self.ell.n != self.n:
            raise ValueError(f"L must have length {self.n}")

    def symplectic(self) -> BitMatrix:
        """B = Q + Q^t: symmetric with zero diagonal."""
        qt = self.q.transpose()
        rows = tuple(a ^ b for a, b in zip(self.q.row_bits, qt.row_bits))
        return BitMatrix(self.n, self.n, rows)


def quadratic(qf: QuadraticForm) -> TruthTable:
    n = qf.n
    idx = np.arange(1 << n)
    par = parity_table(n)
    vals = par[idx & qf.ell.bits].copy()
    for i in range(n):
        row = qf.q.row_bits[i]
        if not row:
            continue
        xi = ((idx >> i) & 1).astype(np.uint8)
        vals ^= xi & par[idx & row]
    return TruthTable(n, vals)


def dickson_target(n: int, h: int) -> BitMatrix:
    """Block-diagonal h copies of [[0,1],[1,0]] padded with zeros."""
    rows = [0] * n
    for i in range(h):
        rows[2 * i] = 1 << (2 * i + 1)
        rows[2 * i + 1] = 1 << (2 * i)
    return BitMatrix(n, n, tuple(rows))


def dickson_normalize(b: BitMatrix) -> tuple[BitMatrix, int]:
    """Invertible R and h with R B R^t equal to dickson_target(n, h) exactly.

    B must be symplectic: symmetric with zero diagonal.  rank(B) = 2h.
    """
    if b.rows != b.cols:
        raise ValueError("matrix must be square")
    n = b.rows
    if not b.is_symmetric():
        raise ValueError("matrix is not symplectic: not symmetric")
    for i in range(n):
        if (b.row_bits[i] >> i) & 1:
            raise ValueError(f"matrix is not symplectic: nonzero diagonal at {i}")
    rows = b.row_bits

    def form(u: int, v: int) -> int:
        w = 0
        t = u
        while t:
            i = (t & -t).bit_length() - 1
            w ^= rows[i]
            t &= t - 1
        return (w & v).bit_count() & 1

    remaining = [1 << i for i in range(n)]
    pairs: list[tuple[int, int]] = []
    while True:
        hit = None
        for i in range(len(remaining)):
            for j in range(i + 1, len(remaining)):
                if form(remaining[i], remaining[j]):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        u = remaining[hit[0]]
        v = remaining[hit[1]]
        rest = [w for k, w in enumerate(remaining) if k not in hit]
        # peel (u, v) off every other basis vector so the pair decouples
        remaining = [
            w ^ (u if form(w, v) else 0) ^ (v if form(w, u) else 0) for w in rest
        ]
        pairs.append((u, v))
    rrows: list[int] = []
    for u, v in pairs:
        rrows.extend((u, v))
    rrows.extend(remaining)
    return BitMatrix(n, n, tuple(rrows)), len(pairs)


# -- partial spreads -----------------------------------------------------------


@dataclass(frozen=True)
class PartialSpreadDescriptor:
    """Parity of the indicators of 2^(m-1) lines y = a_i x over GF(2^m)."""

    ctx: FieldCtx
    slopes: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.ctx.k
        if m < 2:
            raise ValueError("partial spreads need m >= 2 (the parity reading "
                             "of a single line is not bent)")
        object.__setattr__(self, "slopes", tuple(int(a) for a in self.slopes))
        if len(self.slopes) != 1 << (m - 1):
            raise ValueError(f"need exactly {1 << (m - 1)} slopes, got {len(self.slopes)}")
        if len(set(self.slopes)) != len(self.slopes):
            raise ValueError("slopes must be pairwise distinct")
        if any(not 0 < a < (1 << m) for a in self.slopes):
            raise ValueError("slopes must be nonzero field elements")

    @property
    def m(self) -> int:
        return self.ctx.k


def partial_spread(d: PartialSpreadDescriptor) -> TruthTable:
    m = d.m
    vals = np.zeros(1 << (2 * m), dtype=np.uint8)
    for a in d.slopes:
        for x in range(1 << m):
            y = d.ctx.mul_int(a, x)
            vals[(y << m) | x] ^= 1
    return TruthTable(2 * m, vals)


# -- Dobbertin's piecewise class -------------------------------------------------


@dataclass(frozen=True)
class DobbertinDescriptor:
    """f(x, y) = g((x + psi(t)) / t) with t = phi^(-1)(y) for y != 0, else 0.

    g must be balanced and phi a bijection fixing 0 (so the divisor is nonzero
    on the y != 0 branch).  Note: bentness of the output is NOT guaranteed for
    arbitrary phi/psi; it holds when phi is additive and psi affine (the class
    random_dobbertin draws from), which still contains phi = id, psi = 0.
    """

    ctx: FieldCtx
    g: TruthTable
    phi: tuple[int, ...]
    psi: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.ctx.k
        if self.g.n != m:
            raise ValueError(f"g must be on m={m} variables, got {self.g.n}")
        if not is_balanced(self.g):
            raise ValueError("g must be balanced")
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        object.__setattr__(self, "psi", tuple(int(v) for v in self.psi))
        if sorted(self.phi) != list(range(1 << m)):
            raise ValueError("phi is not a bijection of the field")
        if self.phi[0] != 0:
            raise ValueError("phi must fix 0")
        if len(self.psi) != 1 << m or any(not 0 <= v < (1 << m) for v in self.psi):
            raise ValueError("psi must map the field into itself")

    @property
    def m(self) -> int:
        return self.ctx.k

    def phi_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.phi)
        for v, pv in enumerate(self.phi):
            inv[pv] = v
        return tuple(inv)


def dobbertin(d: DobbertinDescriptor) -> TruthTable:
    m = d.m
    size_half = 1 << m
    phi_inv = d.phi_inverse()
    vals = np.zeros(1 << (2 * m), dtype=np.uint8)
    for y in range(1, size_half):
        t = phi_inv[y]
        tinv = d.ctx.inv_int(t)
        # z(x) = (x ^ psi(t)) * tinv; multiplication by tinv is GF(2)-linear
        z = np.zeros(size_half, dtype=np.int64)
        for i in range(m):
            step = 1 << i
            z[step : 2 * step] = z[:step] ^ d.ctx.mul_int(tinv, 1 << i)
        z ^= d.ctx.mul_int(d.psi[t], tinv)
        vals[(y << m) : (y << m) + size_half] = d.g.values[z]
    return TruthTable(2 * m, vals)  # the y = 0 block stays 0


# -- trace monomials -----------------------------------------------------------


class TraceMonomialResult(NamedTuple):
    table: TruthTable
    certified: bool


@dataclass(frozen=True)
class TraceMonomialDescriptor:
    """f_a(x) = trace(a * x^(2^(n/2) - 1)) over GF(2^n)."""

    ctx: FieldCtx
    a: int

    def __post_init__(self) -> None:
        if self.ctx.k % 2:
            raise ValueError(f"ambient degree must be even, got {self.ctx.k}")
        if not 0 <= self.a < self.ctx.order:
            raise ValueError(f"coefficient 0x{self.a:x} outside {self.ctx.name}")


def _subfield_kloosterman(ctx: FieldCtx, av: int, m: int) -> int:
    """Kloosterman sum of av over the embedded copy of GF(2^m) inside ctx."""
    total = 0
    for x in range(1, ctx.order):
        if ctx.pow_int(x, 1 << m) != x:
            continue
        u = ctx.inv_int(x) ^ ctx.mul_int(av, x)
        t = 0
        cur = u
        for _ in range(m):
            t ^= cur
            cur = ctx.mul_int(cur, cur)
        total += 1 - 2 * t
    return total


def trace_monomial(ctx: FieldCtx, a: FieldElement | int) -> TraceMonomialResult:
    """Table of trace(a x^(2^(n/2)-1)) plus a certification flag.

    The flag is True when a is a nonzero element of the half-degree subfield
    whose subfield Kloosterman sum is -1, which guarantees bentness.  The
    table is returned either way so callers can test bentness themselves.
    """
    n = ctx.k
    if n % 2:
        raise ValueError(f"ambient degree must be even, got {n}")
    if isinstance(a, FieldElement):
        if a.ctx != ctx:
            raise ValueError(f"coefficient belongs to {a.ctx.name}, not {ctx.name}")
        av = a.value
    else:
        av = int(a)
        if not 0 <= av < ctx.order:
            raise ValueError(f"coefficient 0x{av:x} outside {ctx.name}")
    m = n // 2
    e = (1 << m) - 1
    vals = np.fromiter(
        (ctx.trace_int(ctx.mul_int(av, ctx.pow_int(x, e))) for x in range(ctx.order)),
        dtype=np.uint8,
        count=ctx.order,
    )
    certified = (
        av != 0
        and ctx.pow_int(av, 1 << m) == av
        and _subfield_kloosterman(ctx, av, m) == -1
    )
    return TraceMonomialResult(TruthTable(n, vals), certified)


# -- direct sums ---------------------------------------------------------------


def direct_sum(f: TruthTable, g: TruthTable) -> TruthTable:
    """(x, y) -> f(x) xor g(y) on f.n + g.n variables."""
    if f.n + g.n > MAX_N:
        raise ResourceLimitError(f"combined width {f.n + g.n} exceeds the table cap {MAX_N}")
    vals = (g.values[:, None] ^ f.values[None, :]).ravel()
    return TruthTable(f.n + g.n, vals)


# -- seeded random descriptors ---------------------------------------------------


def _as_rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_balanced_table(m: int, seed: int | random.Random) -> TruthTable:
    rng = _as_rng(seed)
    size = 1 << m
    ones = rng.sample(range(size), size // 2)
    vals = np.zeros(size, dtype=np.uint8)
    vals[ones] = 1
    return TruthTable(m, vals)


def random_mm(m: int, seed: int | random.Random) -> MMDescriptor:
    rng = _as_rng(seed)
    pi = list(range(1 << m))
    rng.shuffle(pi)
    g = TruthTable(m, [rng.getrandbits(1) for _ in range(1 << m)])
    return MMDescriptor(m, tuple(pi), g)


def random_quadratic(n: int, seed: int | random.Random, bent: bool = True) -> QuadraticForm:
    """Random quadratic form; with bent=True, rejects until rank(Q + Q^t) = n."""
    if bent and n % 2:
        raise ValueError("bent quadratic forms need even n")
    rng = _as_rng(seed)
    while True:
        rows = []
        for i in range(n):
            width = n - i - 1
            rows.append(rng.getrandbits(width) << (i + 1) if width else 0)
        q = BitMatrix(n, n, tuple(rows))
        ell = BitVec(n, rng.getrandbits(n))
        qf = QuadraticForm(n, q, ell)
        if not bent or rank(qf.symplectic()) == n:
            return qf


def random_partial_spread(
    m: int, seed: int | random.Random, ctx: FieldCtx | None = None
) -> PartialSpreadDescriptor:
    rng = _as_rng(seed)
    ctx = ctx or FieldCtx(m)
    slopes = rng.sample(range(1, 1 << m), 1 << (m - 1))
    return PartialSpreadDescriptor(ctx, tuple(slopes))


def random_dobbertin(
    m: int, seed: int | random.Random, ctx: FieldCtx | None = None
) -> DobbertinDescriptor:
    """Random descriptor from the additive-phi / affine-psi subclass (always bent)."""
    rng = _as_rng(seed)
    ctx = ctx or FieldCtx(m)
    size = 1 << m
    phi_rows = random_invertible(m, rng).row_bits
    psi_rows = [rng.getrandbits(m) for _ in range(m)]
    psi_const = rng.getrandbits(m)

    def linmap(rows_, v):
        out = 0
        for i in range(m):
            if (v >> i) & 1:
                out ^= rows_[i]
        return out

    phi = tuple(linmap(phi_rows, v) for v in range(size))
    psi = tuple(linmap(psi_rows, v) ^ psi_const for v in range(size))
    return DobbertinDescriptor(ctx, random_balanced_table(m, rng), phi, psi)


def random_descriptor(family: str, m: int, seed: int | random.Random):
    """Uniform entry point used by the CLI and experiment harnesses."""
    rng = _as_rng(seed)
    if family == "ip":
        return IPDescriptor(m)
    if family == "mm":
        return random_mm(m, rng)
    if family == "quadratic":
        return random_quadratic(2 * m, rng, bent=True)
    if family == "ps":
        return random_partial_spread(m, rng)
    if family == "dobbertin":
        return random_dobbertin(m, rng)
    if family == "trace":
        sub = FieldCtx(m)
        sup = FieldCtx(2 * m)
        a = subfield_embedding(sub, sup).apply(find_kloosterman_zero(sub))
        return TraceMonomialDescriptor(sup, a.value)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class IPDescriptor:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"half-dimension must be positive, got {self.m}")


# -- descriptor dispatch and JSON forms ------------------------------------------


def build_table(d) -> TruthTable:
    if isinstance(d, IPDescriptor):
        return inner_product(d.m)
    if isinstance(d, MMDescriptor):
        return maiorana_mcfarland(d)
    if isinstance(d, QuadraticForm):
        return quadratic(d)
    if isinstance(d, PartialSpreadDescriptor):
        return partial_spread(d)
    if isinstance(d, DobbertinDescriptor):
        return dobbertin(d)
    if isinstance(d, TraceMonomialDescriptor):
        return trace_monomial(d.ctx, d.a).table
    raise TypeError(f"not a family descriptor: {type(d).__name__}")


def descriptor_to_dict(d) -> dict:
    if isinstance(d, IPDescriptor):
        return {"family": "ip", "m": d.m}
    if isinstance(d, MMDescriptor):
        return {"family": "mm", "m": d.m, "pi": list(d.pi), "g": d.g.to_hex()}
    if isinstance(d, QuadraticForm):
        return {
            "family": "quadratic",
            "n": d.n,
            "q_rows": list(d.q.row_bits),
            "l": d.ell.bits,
        }
    if isinstance(d, PartialSpreadDescriptor):
        return {
            "family": "ps",
            "m": d.m,
            "poly": d.ctx.poly,
            "slopes": list(d.slopes),
        }
    if isinstance(d, DobbertinDescriptor):
        return {
            "family": "dobbertin",
            "m": d.m,
            "poly": d.ctx.poly,
            "g": d.g.to_hex(),
            "phi": list(d.phi),
            "psi": list(d.psi),
        }
    if isinstance(d, TraceMonomialDescriptor):
        return {"family": "trace", "n": d.ctx.k, "poly": d.ctx.poly, "a": d.a}
    raise TypeError(f"not a family descriptor: {type(d).__name__}")


def descriptor_from_dict(obj: dict):
    family = obj.get("family")
    if family == "ip":
        return IPDescriptor(int(obj["m"]))
    if family == "mm":
        m = int(obj["m"])
        return MMDescriptor(m, tuple(obj["pi"]), TruthTable.from_hex(m, obj["g"]))
    if family == "quadratic":
        n = int(obj["n"])
        q = BitMatrix(n, n, tuple(int(r) for r in obj["q_rows"]))
        return QuadraticForm(n, q, BitVec(n, int(obj["l"])))
    if family == "ps":
        ctx = FieldCtx(int(obj["m"]), int(obj["poly"]))
        return PartialSpreadDescriptor(ctx, tuple(obj["slopes"]))
    if family == "dobbertin":
        m = int(obj["m"])
        ctx = FieldCtx(m, int(obj["poly"]))
        g = TruthTable.from_hex(m, obj["g"])
        return DobbertinDescriptor(ctx, g, tuple(obj["phi"]), tuple(obj["psi"]))
    if family == "trace":
        ctx = FieldCtx(int(obj["n"]), int(obj["poly"]))
        return TraceMonomialDescriptor(ctx, int(obj["a"]))
    raise ValueError(f"unknown family {family!r}")
