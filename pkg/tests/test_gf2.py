import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bentshift import BitMatrix, BitVec, kernel_basis, random_invertible, rank, solve
from helpers import span_rank


def test_bitvec_basics():
    v = BitVec.from_iterable([1, 0, 1, 1])
    assert v.n == 4 and v.bits == 0b1101
    assert v.to_list() == [1, 0, 1, 1]
    assert v.weight() == 3
    assert v.bit(0) == 1 and v.bit(1) == 0
    assert (v ^ BitVec(4, 0b1111)).bits == 0b0010


def test_bitvec_tail_bits_rejected():
    with pytest.raises(ValueError):
        BitVec(3, 0b1000)
    with pytest.raises(ValueError):
        BitVec.from_iterable([0, 2])


def test_dot_is_a_bit():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 12)
        u = BitVec(n, rng.getrandbits(n))
        v = BitVec(n, rng.getrandbits(n))
        assert u.dot(v) in (0, 1)
    with pytest.raises(ValueError):
        BitVec(2, 0).dot(BitVec(3, 0))


def test_rank_trivial_examples():
    assert rank(BitMatrix.zeros(3, 3)) == 0
    assert rank(BitMatrix.identity(4)) == 4
    assert rank(BitMatrix.from_rows([[0, 1], [1, 0]])) == 2


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_rank_matches_span_enumeration(rows, cols, rnd):
    ints = [rnd.getrandbits(cols) for _ in range(rows)]
    m = BitMatrix(rows, cols, tuple(ints))
    assert rank(m) == span_rank(ints)


def test_solve_identity_system():
    m = BitMatrix.identity(3)
    x, kern = solve(m, BitVec(3, 0b101))
    assert x.bits == 0b101
    assert kern == []


def test_solve_parity_equation():
    m = BitMatrix.from_rows([[1, 1]])
    x, kern = solve(m, BitVec(1, 0))
    assert x.bits == 0
    assert [k.bits for k in kern] == [0b11]


def test_solve_inconsistent():
    m = BitMatrix.from_rows([[1, 0], [1, 0]])
    assert solve(m, BitVec(2, 0b01)) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(BitMatrix.identity(3), BitVec(2, 0))


def test_solve_properties_fuzz():
    rng = random.Random(7)
    for _ in range(500):
        rows = rng.randint(1, 7)
        cols = rng.randint(1, 7)
        ints = [rng.getrandbits(cols) for _ in range(rows)]
        m = BitMatrix(rows, cols, tuple(ints))
        b = BitVec(rows, rng.getrandbits(rows))
        res = solve(m, b)
        consistent = any(
            all(((r & x).bit_count() & 1) == ((b.bits >> i) & 1) for i, r in enumerate(ints))
            for x in range(1 << cols)
        )
        if res is None:
            assert not consistent
            continue
        assert consistent
        x, kern = res
        assert m.mat_vec(x) == b
        for k in kern:
            assert m.mat_vec(k).bits == 0
        assert len(kern) == cols - rank(m)
        if kern:
            kmat = BitMatrix(len(kern), cols, tuple(k.bits for k in kern))
            assert rank(kmat) == len(kern)


def test_kernel_basis_regression():
    # Rows whose reduction once produced a non-kernel vector: every basis
    # vector must actually annihilate all rows.
    m = BitMatrix(4, 5, (0b00110, 0b10111, 0b11101, 0b01001))
    kern = kernel_basis(m)
    assert [k.bits for k in kern] == [0b11111]
    for k in kern:
        assert m.mat_vec(k).bits == 0


def test_random_invertible_n1():
    assert random_invertible(1, 0).row_bits == (1,)


def test_random_invertible_rank_and_determinism():
    for seed in (0, 1, 99):
        m = random_invertible(4, seed)
        assert rank(m) == 4
        assert m == random_invertible(4, seed)


def test_matrix_algebra():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 8)
        a = random_invertible(n, rng)
        ainv = a.inverse()
        assert a.matmul(ainv) == BitMatrix.identity(n)
        assert a.transpose().transpose() == a
        v = BitVec(n, rng.getrandbits(n))
        # (vA)^T = A^T v^T
        assert a.vec_mat(v) == a.transpose().mat_vec(v)


def test_inverse_singular():
    with pytest.raises(ValueError):
        BitMatrix.zeros(2, 2).inverse()
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[1, 1], [1, 1]]).inverse()
