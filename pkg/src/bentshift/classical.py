"""Classical baselines: the adaptive 3m+1-query solver with dual access, full
spectral deconvolution, and the consistent-candidate census that demonstrates
the exponential lower bound without dual access."""
from __future__ import annotations

import random

import numpy as np

from .boolfn import Spectrum, TruthTable, _butterfly_i64, wht
from .errors import InconsistentShiftError, ResourceLimitError
from .gf2 import BitMatrix, BitVec, solve
from .oracles import ShiftOracle

__all__ = [
    "adaptive_mm_solve",
    "spectral_deconvolve",
    "exhaustive_solve",
    "candidate_census",
    "CENSUS_MAX_M",
]

CENSUS_MAX_M = 4


def adaptive_mm_solve(oracle: ShiftOracle, descriptor) -> BitVec:
    """Recover (s1, s2) for f(x, y) = x.pi(y) in exactly 3m+1 classical queries.

    Query plan: g(0,0) gives s1.pi(s2); g(e_i, 0) peel off the bits of
    pi(s2); dual queries at (pi(s2), e_i) give the bits of s2; finally
    g(0, pi_inverse(e_i) xor s2) gives the bits of s1.  Requires the
    descriptor's g-part to be identically zero and the dual channel.
    """
    from .families import MMDescriptor  # local import avoids a cycle

    if not isinstance(descriptor, MMDescriptor):
        raise ValueError("adaptive solver requires a Maiorana-McFarland descriptor")
    if descriptor.g.weight() != 0:
        raise ValueError("adaptive solver requires the descriptor's g to be zero")
    m = descriptor.m
    if oracle.n != 2 * m:
        raise ValueError(f"oracle width {oracle.n} != 2m = {2 * m}")
    pinv = descriptor.pi_inverse()

    base = oracle.query_g(0)  # s1 . pi(s2)
    pi_s2 = 0
    for i in range(m):
        pi_s2 |= (oracle.query_g(1 << i) ^ base) << i
    s2 = 0
    for i in range(m):
        s2 |= oracle.query_dual(pi_s2 | (1 << (m + i))) << i
    s1 = 0
    for i in range(m):
        s1 |= oracle.query_g((pinv[1 << i] ^ s2) << m) << i
    return BitVec(2 * m, s1 | (s2 << m))


def _flat_sign(spectrum: Spectrum) -> np.ndarray:
    amp = 1 << (spectrum.n // 2)
    bad = np.flatnonzero(np.abs(spectrum.coeffs) != amp)
    if spectrum.n % 2 or bad.size:
        raise InconsistentShiftError("reference table is not bent")
    return np.sign(spectrum.coeffs)


def spectral_deconvolve(f_table: TruthTable, g_table: TruthTable) -> BitVec:
    """Recover s from full tables of a bent f and g = f(. + s).

    The shifted spectrum carries the linear phase (-1)^(s.w); multiplying by
    the sign of the reference spectrum and transforming back turns it into a
    delta at s.  Raises if the peak pattern does not match an exact shift.
    """
    if f_table.n != g_table.n:
        raise ValueError(f"dimension mismatch: {f_table.n} != {g_table.n}")
    n = f_table.n
    sf = _flat_sign(wht(f_table))
    wg = wht(g_table).coeffs
    u = _butterfly_i64(wg * sf)
    # for a true shift u = +-2^(n/2) * 2^n * delta_s
    peak = (1 << (n // 2)) << n
    nz = np.flatnonzero(u)
    if nz.size != 1 or abs(int(u[nz[0]])) != peak:
        raise InconsistentShiftError("g is not an exact shift of f")
    return BitVec(n, int(nz[0]))


def exhaustive_solve(oracle: ShiftOracle) -> BitVec:
    """Read both tables through the counted channels (2 * 2^n queries) and
    deconvolve; always correct for bent f."""
    size = 1 << oracle.n
    f = TruthTable(oracle.n, [oracle.query_f(x) for x in range(size)])
    g = TruthTable(oracle.n, [oracle.query_g(x) for x in range(size)])
    return spectral_deconvolve(f, g)


# -- candidate census ------------------------------------------------------------


def _solution_values(rows: list[tuple[int, int]], m: int) -> list[int] | None:
    """All v with x.v = bit for every (x, bit) row, or None if inconsistent."""
    mat = BitMatrix(len(rows), m, tuple(x for x, _ in rows))
    rhs = BitVec(len(rows), sum(bit << i for i, (_, bit) in enumerate(rows)))
    sol = solve(mat, rhs)
    if sol is None:
        return None
    x0, kern = sol
    vals = [x0.bits]
    for k in kern:
        vals = vals + [v ^ k.bits for v in vals]
    return vals


def _has_system_of_distinct_values(allowed: dict[int, list[int]], size: int) -> bool:
    """Kuhn matching: can each constrained point take a distinct value?

    Unconstrained points can absorb any leftover values, so a permutation
    exists iff the constrained points are saturated.
    """
    if len(allowed) > size:
        return False
    match: dict[int, int] = {}  # value -> point

    def try_assign(u: int, seen: set[int]) -> bool:
        for v in allowed[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match or try_assign(match[v], seen):
                match[v] = u
                return True
        return False

    for u in allowed:
        if not try_assign(u, set()):
            return False
    return True


def candidate_census(oracle: ShiftOracle, budget: int, seed: int) -> int:
    """Count shifts consistent with a budget of classical queries.

    The oracle must hide an MM instance with zero g-part (the adversarial
    subfamily): a candidate shift (s1, s2) survives when SOME permutation pi'
    matches every recorded f-answer and, after shifting, every g-answer.
    Strategy: half the budget on seeded random probes of g, half reading f at
    the points (e_i, y) that pin pi down value by value; both halves extend
    prefix-style, so the count is monotone non-increasing in the budget.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    fam = oracle.family or {}
    if fam.get("family") != "mm":
        raise ValueError("census requires a Maiorana-McFarland oracle")
    if int(fam.get("g", "0"), 16) != 0:
        raise ValueError("census requires the descriptor's g to be zero")
    m = int(fam["m"])
    if m > CENSUS_MAX_M:
        raise ResourceLimitError(f"census supports m <= {CENSUS_MAX_M}, got {m}")
    size = 1 << m
    points = 1 << (2 * m)

    budget_eff = min(budget, 2 * points)
    g_count = min(budget_eff // 2, points)
    f_count = min(budget_eff - g_count, points)
    g_count = min(budget_eff - f_count, points)

    rng = random.Random(seed)
    g_order = list(range(points))
    rng.shuffle(g_order)
    f_pref = [(1 << i) | (y << m) for y in range(size) for i in range(m)]
    in_pref = set(f_pref)
    f_order = f_pref + [p for p in range(points) if p not in in_pref]

    f_by_y: dict[int, list[tuple[int, int]]] = {}
    for p in f_order[:f_count]:
        x, y = p & (size - 1), p >> m
        f_by_y.setdefault(y, []).append((x, oracle.query_f(p)))
    g_by_y: dict[int, list[tuple[int, int]]] = {}
    for p in g_order[:g_count]:
        x, y = p & (size - 1), p >> m
        g_by_y.setdefault(y, []).append((x, oracle.query_g(p)))

    count = 0
    for s2h in range(size):
        for s1h in range(size):
            allowed: dict[int, list[int]] = {}
            feasible = True
            for u in range(size):
                rows = list(f_by_y.get(u, []))
                rows += [(x ^ s1h, bit) for x, bit in g_by_y.get(u ^ s2h, [])]
                if not rows:
                    continue
                vals = _solution_values(rows, m)
                if vals is None:
                    feasible = False
                    break
                allowed[u] = vals
            if feasible and _has_system_of_distinct_values(allowed, size):
                count += 1
    return count
