"""GF(2^k) arithmetic in polynomial basis, with trace map and Kloosterman sums.

Field elements are k-bit masks holding the coefficients of the polynomial
basis.  Multiplication is a carry-less multiply reduced by the context's
irreducible polynomial.  Kloosterman sums are computed by direct summation;
the supported range is k <= 16.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SearchExhaustedError

__all__ = [
    "FieldCtx",
    "FieldElement",
    "default_poly",
    "is_irreducible",
    "trace",
    "kloosterman",
    "find_kloosterman_zero",
    "SubfieldEmbedding",
    "subfield_embedding",
]

MAX_K = 16


def _deg(p: int) -> int:
    return p.bit_length() - 1


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(a: int, m: int) -> int:
    dm = _deg(m)
    while a.bit_length() - 1 >= dm and a:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _poly_mulmod(a: int, b: int, m: int) -> int:
    return _poly_mod(_clmul(a, b), m)


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _x_pow_2e_mod(e: int, m: int) -> int:
    """x^(2^e) mod m by repeated squaring."""
    t = _poly_mod(2, m)
    for _ in range(e):
        t = _poly_mulmod(t, t, m)
    return t


def is_irreducible(poly: int, k: int) -> bool:
    """Degree-k irreducibility over GF(2).

    Checks x^(2^k) == x mod poly and that poly shares no factor with
    x^(2^d) - x for any proper divisor d of k (no roots in proper subfields).
    """
    if _deg(poly) != k or k < 1:
        return False
    xm = _poly_mod(2, poly)
    for d in range(1, k):
        if k % d:
            continue
        if _poly_gcd(poly, _x_pow_2e_mod(d, poly) ^ xm) != 1:
            return False
    return _x_pow_2e_mod(k, poly) == xm


@lru_cache(maxsize=None)
def default_poly(k: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree k."""
    if not 1 <= k <= MAX_K:
        raise ValueError(f"supported degrees are 1..{MAX_K}, got {k}")
    for low in range(1 << k):
        cand = (1 << k) | low
        if is_irreducible(cand, k):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, slots=True)
class FieldCtx:
    """GF(2^k) with a fixed irreducible reduction polynomial."""

    k: int
    poly: int = 0  # 0 selects the default polynomial for k

    def __post_init__(self) -> None:
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"supported degrees are 1..{MAX_K}, got {self.k}")
        if self.poly == 0:
            object.__setattr__(self, "poly", default_poly(self.k))
        if not is_irreducible(self.poly, self.k):
            raise ValueError(f"0x{self.poly:x} is not irreducible of degree {self.k}")

    @property
    def order(self) -> int:
        return 1 << self.k

    @property
    def name(self) -> str:
        return f"gf2_{self.k}_poly{self.poly:x}"

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.order))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # int-level arithmetic: the hot path used by table builders
    def mul_int(self, a: int, b: int) -> int:
        return _poly_mod(_clmul(a, b), self.poly)

    def pow_int(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv_int")
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul_int(r, base)
            base = self.mul_int(base, base)
            e >>= 1
        return r

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^k)")
        return self.pow_int(a, self.order - 2)

    def trace_int(self, a: int) -> int:
        t = 0
        cur = a
        for _ in range(self.k):
            t ^= cur
            cur = self.mul_int(cur, cur)
        return t  # lies in {0, 1} for every field element


@dataclass(frozen=True, slots=True)
class FieldElement:
    ctx: FieldCtx
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.ctx.order:
            raise ValueError(f"value 0x{self.value:x} outside {self.ctx.name}")

    def _check(self, other: "FieldElement") -> None:
        if self.ctx != other.ctx:
            raise ValueError(f"mixed contexts {self.ctx.name} and {other.ctx.name}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.ctx.mul_int(self.value, other.value))

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return FieldElement(self.ctx, self.ctx.pow_int(self.ctx.inv_int(self.value), -e))
        return FieldElement(self.ctx, self.ctx.pow_int(self.value, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv_int(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"<{self.ctx.name}:0x{self.value:x}>"


def trace(u: FieldElement) -> int:
    """Trace map to GF(2): sum of u^(2^i) for i < k."""
    return u.ctx.trace_int(u.value)


def kloosterman(ctx: FieldCtx, a: FieldElement | int) -> int:
    """Kl(a) = sum over nonzero x of (-1)^trace(x^-1 + a*x); exact integer."""
    if isinstance(a, FieldElement):
        if a.ctx != ctx:
            raise ValueError(f"element belongs to {a.ctx.name}, not {ctx.name}")
        av = a.value
    else:
        av = int(a)
        if not 0 <= av < ctx.order:
            raise ValueError(f"value 0x{av:x} outside {ctx.name}")
    total = 0
    for x in range(1, ctx.order):
        t = ctx.trace_int(ctx.inv_int(x) ^ ctx.mul_int(av, x))
        total += 1 - 2 * t
    return total


def find_kloosterman_zero(ctx: FieldCtx) -> FieldElement:
    """Smallest nonzero a with Kl(a) = -1, by exhaustive scan."""
    for a in range(1, ctx.order):
        if kloosterman(ctx, a) == -1:
            return ctx.element(a)
    raise SearchExhaustedError(f"no nonzero a with Kl(a) = -1 in {ctx.name}")


class SubfieldEmbedding:
    """Embedding of GF(2^d) into GF(2^k) for d | k, through a root of the sub poly."""

    def __init__(self, sub: FieldCtx, sup: FieldCtx) -> None:
        if sup.k % sub.k:
            raise ValueError(f"{sub.k} does not divide {sup.k}: no subfield embedding")
        self.sub = sub
        self.sup = sup
        self.root = self._find_root()
        pw = [1]
        for _ in range(sub.k - 1):
            pw.append(sup.mul_int(pw[-1], self.root))
        self._powers = pw

    def _find_root(self) -> int:
        for cand in range(self.sup.order):
            # Horner evaluation of sub.poly at cand inside sup
            acc = 0
            for bit in range(_deg(self.sub.poly), -1, -1):
                acc = self.sup.mul_int(acc, cand) ^ ((self.sub.poly >> bit) & 1)
            if acc == 0:
                return cand
        raise AssertionError("unreachable: irreducible polys split in extension fields")

    def apply(self, elt: FieldElement | int) -> FieldElement:
        v = elt.value if isinstance(elt, FieldElement) else int(elt)
        out = 0
        for i in range(self.sub.k):
            if (v >> i) & 1:
                out ^= self._powers[i]
        return self.sup.element(out)


def subfield_embedding(sub: FieldCtx, sup: FieldCtx) -> SubfieldEmbedding:
    return SubfieldEmbedding(sub, sup)
