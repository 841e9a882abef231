"""Complete enumeration over tiny parameter spaces.

Sampling catches typos; exhausting every case at small sizes catches
convention mistakes (bit order, transposes, pivot choices) outright.
"""
import itertools

import numpy as np
import pytest

import bentshift as bs
from bentshift import BitMatrix, BitVec, TruthTable
from bentshift.classical import adaptive_mm_solve, spectral_deconvolve
from bentshift.families import (
    MMDescriptor,
    PartialSpreadDescriptor,
    QuadraticForm,
    dickson_normalize,
    dickson_target,
    maiorana_mcfarland,
    mm_dual,
    partial_spread,
    quadratic,
)
from bentshift.gf2 import rank, solve
from bentshift.gf2k import FieldCtx
from bentshift.oracles import make_instance
from bentshift.qsim import run_a1
from helpers import all_tables


def test_solve_exhaustive_tiny_systems():
    for rows, cols in ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)):
        for ints in itertools.product(range(1 << cols), repeat=rows):
            m = BitMatrix(rows, cols, ints)
            for bbits in range(1 << rows):
                b = BitVec(rows, bbits)
                res = solve(m, b)
                solutions = [
                    x
                    for x in range(1 << cols)
                    if all(
                        ((r & x).bit_count() & 1) == ((bbits >> i) & 1)
                        for i, r in enumerate(ints)
                    )
                ]
                if res is None:
                    assert not solutions
                    continue
                x0, kern = res
                assert x0.bits in solutions
                # particular solution + kernel span enumerates all solutions
                span = {0}
                for k in kern:
                    span |= {v ^ k.bits for v in span}
                assert sorted(x0.bits ^ v for v in span) == solutions


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dickson_exhaustive_all_symplectic(n):
    # every symplectic B arises from exactly one strictly upper triangular Q
    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(positions)):
        rows = [0] * n
        for bit, (i, j) in enumerate(positions):
            if (mask >> bit) & 1:
                rows[i] |= 1 << j
        q = BitMatrix(n, n, tuple(rows))
        b = QuadraticForm(n, q, BitVec(n, 0)).symplectic()
        r, h = dickson_normalize(b)
        assert r.matmul(b).matmul(r.transpose()) == dickson_target(n, h)
        assert rank(b) == 2 * h
        assert rank(r) == n


def test_mm_duality_exhaustive_m1():
    for pi in ((0, 1), (1, 0)):
        for gcode in range(4):
            d = MMDescriptor(1, pi, TruthTable(1, [gcode & 1, gcode >> 1]))
            f = maiorana_mcfarland(d)
            assert bs.is_bent(f)
            assert mm_dual(d) == bs.dual(f)
            assert bs.dual(mm_dual(d)) == f


def test_ps_exhaustive_m2():
    ctx = FieldCtx(2)
    for slopes in itertools.combinations((1, 2, 3), 2):
        f = partial_spread(PartialSpreadDescriptor(ctx, slopes))
        assert bs.is_bent(f)
        assert f(0) == 0


def test_quadratic_exhaustive_n2():
    # the 8 bent functions on 2 variables are exactly the full-rank quadratics
    bent_tables = set()
    for qmask in range(2):
        q = BitMatrix(2, 2, (qmask << 1, 0))
        for lbits in range(4):
            for c in range(2):
                qf = QuadraticForm(2, q, BitVec(2, lbits))
                t = quadratic(qf)
                if c:
                    t = TruthTable(2, t.values ^ 1)
                if bs.is_bent(t):
                    bent_tables.add(tuple(t.values))
                    assert qmask == 1  # bent iff the quadratic term is present
    assert len(bent_tables) == 8


def test_adaptive_solver_exhaustive_m2():
    for pi in itertools.permutations(range(4)):
        d = MMDescriptor(2, pi, TruthTable.constant(2, 0))
        for sbits in range(16):
            inst = make_instance(d, s=BitVec(4, sbits), with_dual=True)
            assert adaptive_mm_solve(inst.oracle, d) == inst.s
            assert inst.oracle.stats.total() == 7


def test_a1_exhaustive_m1():
    for pi in ((0, 1), (1, 0)):
        for gcode in range(4):
            d = MMDescriptor(1, pi, TruthTable(1, [gcode & 1, gcode >> 1]))
            for sbits in range(4):
                inst = make_instance(d, s=BitVec(2, sbits))
                assert run_a1(inst.oracle) == inst.s


def test_deconvolve_exhaustive_n2():
    bent = [f for f in all_tables(2) if bs.is_bent(f)]
    assert len(bent) == 8
    for f in bent:
        for sbits in range(4):
            s = BitVec(2, sbits)
            assert spectral_deconvolve(f, bs.shift(f, s)) == s


def test_dual_pairs_exhaustive_n2():
    # duality is an involution pairing up all 8 bent functions on 2 variables
    for f in all_tables(2):
        if bs.is_bent(f):
            d = bs.dual(f)
            assert bs.is_bent(d)
            assert bs.dual(d) == f


def test_trace_monomial_exhaustive_coefficients_n4():
    # certification is exact: certified coefficients are bent, and within the
    # subfield the uncertified nonzero ones are those with Kl != -1
    sup = FieldCtx(4)
    m = 2
    for a in range(16):
        res = bs.trace_monomial(sup, a)
        if res.certified:
            assert bs.is_bent(res.table)
        elif a != 0 and sup.pow_int(a, 1 << m) == a:
            # in-subfield but uncertified: Kloosterman sum is not -1
            assert not bs.is_bent(res.table)
