import random

import numpy as np
import pytest

import bentshift as bs
from bentshift import (
    BitMatrix,
    BitVec,
    DobbertinDescriptor,
    FieldCtx,
    MMDescriptor,
    PartialSpreadDescriptor,
    QuadraticForm,
    TruthTable,
)
from bentshift.families import (
    build_table,
    descriptor_from_dict,
    descriptor_to_dict,
    dickson_normalize,
    dickson_target,
    direct_sum,
    dobbertin,
    inner_product,
    maiorana_mcfarland,
    mm_dual,
    partial_spread,
    quadratic,
    random_balanced_table,
    random_descriptor,
    random_dobbertin,
    random_mm,
    random_partial_spread,
    random_quadratic,
    trace_monomial,
)
from helpers import batch_spectra


# -- inner product --------------------------------------------------------------


def test_ip1_table():
    assert list(inner_product(1).values) == [0, 0, 0, 1]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_ip_bent_and_self_dual(m):
    f = inner_product(m)
    assert bs.is_bent(f)
    assert bs.dual(f) == f


def test_ip_is_mm_with_identity():
    d = MMDescriptor(2, tuple(range(4)), TruthTable.constant(2, 0))
    assert maiorana_mcfarland(d) == inner_product(2)


# -- Maiorana-McFarland ------------------------------------------------------------


def test_mm_rejects_non_bijection():
    with pytest.raises(ValueError):
        MMDescriptor(2, (0, 0, 1, 2), TruthTable.constant(2, 0))


def test_mm_m1_with_g():
    # f(x, y) = x y + y is still bent
    d = MMDescriptor(1, (0, 1), TruthTable(1, [0, 1]))
    f = maiorana_mcfarland(d)
    assert list(f.values) == [0, 0, 1, 0]
    assert bs.is_bent(f)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_mm_dual_matches_transform(m):
    rng = random.Random(40 + m)
    for _ in range(50):
        d = random_mm(m, rng)
        f = maiorana_mcfarland(d)
        assert bs.is_bent(f)
        assert mm_dual(d) == bs.dual(f)


def test_field_power_permutations():
    from bentshift.families import field_power_permutation

    ctx = FieldCtx(3)
    for e in (1, 2, 3, 5):  # all coprime to 7
        pi = field_power_permutation(ctx, e)
        assert sorted(pi) == list(range(8)) and pi[0] == 0
        d = MMDescriptor(3, pi, TruthTable.constant(3, 0))
        f = maiorana_mcfarland(d)
        assert bs.is_bent(f)
        assert mm_dual(d) == bs.dual(f)
    with pytest.raises(ValueError):
        field_power_permutation(FieldCtx(2), 3)  # gcd(3, 3) = 3: x^3 == 1 on units
    with pytest.raises(ValueError):
        field_power_permutation(ctx, 0)


def test_mm_dual_example_identity():
    d = MMDescriptor(1, (0, 1), TruthTable.constant(1, 0))
    assert mm_dual(d) == inner_product(1)


# -- quadratic forms and Dickson ----------------------------------------------------


def test_quadratic_strict_upper_enforced():
    with pytest.raises(ValueError):
        QuadraticForm(2, BitMatrix.from_rows([[1, 0], [0, 0]]), BitVec(2, 0))
    with pytest.raises(ValueError):
        QuadraticForm(2, BitMatrix.from_rows([[0, 0], [1, 0]]), BitVec(2, 0))


def test_quadratic_evaluation():
    # f = x1 x2 + x1: Q upper with (1,2) entry, L = e1
    qf = QuadraticForm(2, BitMatrix.from_rows([[0, 1], [0, 0]]), BitVec(2, 0b01))
    f = quadratic(qf)
    assert list(f.values) == [0, 1, 0, 0]  # x1 x2 + x1 over (00,10,01,11)


def test_dickson_already_canonical():
    r, h = dickson_normalize(BitMatrix.from_rows([[0, 1], [1, 0]]))
    assert h == 1
    assert r == BitMatrix.identity(2)


def test_dickson_zero_form():
    r, h = dickson_normalize(BitMatrix.zeros(4, 4))
    assert h == 0
    assert bs.rank(r) == 4


def test_dickson_rejects_non_symplectic():
    with pytest.raises(ValueError):
        dickson_normalize(BitMatrix.from_rows([[0, 1], [0, 0]]))  # not symmetric
    with pytest.raises(ValueError):
        dickson_normalize(BitMatrix.from_rows([[1, 1], [1, 0]]))  # diagonal


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8])
def test_dickson_random_forms(n):
    rng = random.Random(50 + n)
    for _ in range(30):
        qf = random_quadratic(n, rng, bent=False)
        b = qf.symplectic()
        r, h = dickson_normalize(b)
        assert r.matmul(b).matmul(r.transpose()) == dickson_target(n, h)
        assert bs.rank(r) == n
        assert bs.rank(b) == 2 * h  # rank of a symplectic matrix is even


def test_full_rank_six_gives_h3_and_bent():
    rng = random.Random(77)
    qf = random_quadratic(6, rng, bent=True)
    b = qf.symplectic()
    _, h = dickson_normalize(b)
    assert h == 3
    assert bs.is_bent(quadratic(qf))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_full_rank_quadratics_bent(n):
    rng = random.Random(60 + n)
    for _ in range(20):
        assert bs.is_bent(quadratic(random_quadratic(n, rng, bent=True)))


# -- partial spreads ----------------------------------------------------------------


def test_ps_m2_frozen():
    d = PartialSpreadDescriptor(FieldCtx(2), (1, 2))  # slopes {1, w}
    f = partial_spread(d)
    assert bs.is_bent(f)
    assert f(0) == 0


def test_ps_descriptor_validation():
    ctx = FieldCtx(2)
    with pytest.raises(ValueError):
        PartialSpreadDescriptor(ctx, (1, 1))  # duplicate
    with pytest.raises(ValueError):
        PartialSpreadDescriptor(ctx, (0, 1))  # zero slope
    with pytest.raises(ValueError):
        PartialSpreadDescriptor(ctx, (1,))  # wrong count
    with pytest.raises(ValueError):
        PartialSpreadDescriptor(FieldCtx(1), (1,))  # m = 1 not supported


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_ps_random_bent(m):
    rng = random.Random(70 + m)
    for _ in range(10):
        f = partial_spread(random_partial_spread(m, rng))
        assert bs.is_bent(f)
        assert f(0) == 0


def test_ps_slopes_from_balanced_function():
    # slopes = the support of a balanced g on GF(8) with g(0) = 0
    g = [0, 1, 0, 1, 1, 0, 0, 1]
    slopes = tuple(a for a in range(8) if g[a])
    f = partial_spread(PartialSpreadDescriptor(FieldCtx(3), slopes))
    assert bs.is_bent(f)


# -- Dobbertin ------------------------------------------------------------------------


def test_dobbertin_identity_phi():
    # g(x / y) for y != 0: simplest member of the class
    ctx = FieldCtx(2)
    g = TruthTable(2, [0, 1, 1, 0])
    d = DobbertinDescriptor(ctx, g, (0, 1, 2, 3), (0, 0, 0, 0))
    f = dobbertin(d)
    assert bs.is_bent(f)
    # the y = 0 branch is identically 0
    assert not f.values[:4].any()
    # spot-check: y=1 (t=1, tinv=1) row is g(x)
    assert list(f.values[4:8]) == [0, 1, 1, 0]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_dobbertin_random_bent(m):
    rng = random.Random(80 + m)
    for _ in range(10):
        f = dobbertin(random_dobbertin(m, rng))
        assert bs.is_bent(f)
        assert not f.values[: 1 << m].any()


def test_dobbertin_validation():
    ctx = FieldCtx(2)
    bal = TruthTable(2, [0, 1, 1, 0])
    with pytest.raises(ValueError):
        DobbertinDescriptor(ctx, TruthTable(2, [1, 1, 1, 0]), (0, 1, 2, 3), (0,) * 4)
    with pytest.raises(ValueError):
        DobbertinDescriptor(ctx, bal, (0, 1, 2, 2), (0,) * 4)  # not a bijection
    with pytest.raises(ValueError):
        DobbertinDescriptor(ctx, bal, (1, 0, 2, 3), (0,) * 4)  # phi(0) != 0


def test_dobbertin_nonadditive_phi_breaks_bentness():
    # The piecewise display does NOT stay bent for arbitrary permutations phi:
    # swapping two nonzero values of phi with a nonlinear g already fails.
    # This pins the boundary that random_dobbertin deliberately avoids.
    ctx = FieldCtx(3)
    g = TruthTable(3, [((v & 1) & ((v >> 1) & 1)) ^ ((v >> 2) & 1) for v in range(8)])
    assert bs.is_balanced(g)
    phi = list(range(8))
    phi[1], phi[2] = phi[2], phi[1]
    d = DobbertinDescriptor(ctx, g, tuple(phi), (0,) * 8)
    assert not bs.is_bent(dobbertin(d))


# -- trace monomials -----------------------------------------------------------------


def test_trace_monomial_n4():
    sub, sup = FieldCtx(2), FieldCtx(4)
    a = bs.subfield_embedding(sub, sup).apply(bs.find_kloosterman_zero(sub))
    res = trace_monomial(sup, a)
    assert res.certified
    assert bs.is_bent(res.table)


def test_trace_monomial_zero_coefficient():
    res = trace_monomial(FieldCtx(4), 0)
    assert not res.certified
    assert res.table == TruthTable.constant(4, 0)
    assert not bs.is_bent(res.table)


def test_trace_monomial_n6_from_search():
    sub, sup = FieldCtx(3), FieldCtx(6)
    a = bs.subfield_embedding(sub, sup).apply(bs.find_kloosterman_zero(sub))
    res = trace_monomial(sup, a)
    assert res.certified
    assert bs.is_bent(res.table)


def test_trace_monomial_odd_degree_rejected():
    with pytest.raises(ValueError):
        trace_monomial(FieldCtx(3), 1)


def test_trace_monomial_uncertified_outside_subfield():
    sup = FieldCtx(4)
    outside = next(
        v for v in range(2, sup.order) if sup.pow_int(v, 4) != v
    )
    assert not trace_monomial(sup, outside).certified


# -- direct sums ---------------------------------------------------------------------


def test_direct_sum_is_ip_up_to_variable_order():
    t = direct_sum(inner_product(1), inner_product(1))
    # reorder variables (1,2,3,4) -> (1,3,2,4): permutation matrix rows e1,e3,e2,e4
    perm = BitMatrix(4, 4, (0b0001, 0b0100, 0b0010, 0b1000))
    assert bs.affine_compose(t, perm, BitVec(4, 0)) == inner_product(2)


def test_direct_sum_of_random_bent_is_bent():
    rng = random.Random(90)
    for m1, m2 in ((1, 1), (1, 2), (2, 2)):
        f = maiorana_mcfarland(random_mm(m1, rng))
        g = maiorana_mcfarland(random_mm(m2, rng))
        assert bs.is_bent(direct_sum(f, g))


# -- exhaustive counts ----------------------------------------------------------------


def test_exactly_8_bent_functions_on_2_vars():
    _, spectra = batch_spectra(2)
    flat = np.all(np.abs(spectra) == 2, axis=1)
    assert int(flat.sum()) == 8


# -- descriptors, serialization, generators -------------------------------------------


@pytest.mark.parametrize("family", ["ip", "mm", "quadratic", "ps", "dobbertin", "trace"])
def test_descriptor_roundtrip(family):
    d = random_descriptor(family, 2, 123)
    d2 = descriptor_from_dict(descriptor_to_dict(d))
    assert build_table(d) == build_table(d2)
    assert descriptor_to_dict(d) == descriptor_to_dict(d2)


@pytest.mark.parametrize("family", ["ip", "mm", "quadratic", "ps", "dobbertin", "trace"])
def test_random_descriptor_deterministic_and_bent(family):
    a = build_table(random_descriptor(family, 2, 9))
    b = build_table(random_descriptor(family, 2, 9))
    assert a == b
    assert bs.is_bent(a)


def test_random_balanced_table():
    for m in (1, 2, 4):
        t = random_balanced_table(m, 3)
        assert bs.is_balanced(t)


def test_unknown_family():
    with pytest.raises(ValueError):
        random_descriptor("nope", 2, 0)
    with pytest.raises(ValueError):
        descriptor_from_dict({"family": "nope"})
