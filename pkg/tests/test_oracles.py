import pytest

import bentshift as bs
from bentshift import BitVec, DualAccessError, TruthTable
from bentshift.families import IPDescriptor, random_mm
from bentshift.oracles import load_instance, make_instance, save_instance


def test_zero_shift_instance():
    inst = make_instance(IPDescriptor(1), s=BitVec(2, 0))
    assert inst.g == inst.f


def test_instance_consistency():
    for seed in range(5):
        inst = make_instance(random_mm(3, seed), seed=seed)
        assert inst.g == bs.shift(inst.f, inst.s)
        assert inst.f_dual == bs.dual(inst.f)


def test_instance_seeded_reproducibility():
    a = make_instance(random_mm(3, 7), seed=42)
    b = make_instance(random_mm(3, 7), seed=42)
    assert a.s == b.s and a.f == b.f and a.g == b.g


def test_query_g_example():
    # ip1 with s = (1,1): g(0) = f((1,1)) = 1
    inst = make_instance(IPDescriptor(1), s=BitVec(2, 0b11))
    assert inst.oracle.query_g(0) == 1


def test_query_counters_sum():
    inst = make_instance(random_mm(2, 1), seed=1)
    o = inst.oracle
    for x in range(5):
        o.query_f(x)
    for x in range(3):
        o.query_g(x)
    o.query_dual(0)
    assert o.stats.total() == 9
    assert (o.stats.f, o.stats.g, o.stats.dual) == (5, 3, 1)


def test_query_purity():
    inst = make_instance(random_mm(2, 2), seed=3)
    o = inst.oracle
    assert all(o.query_f(x) == o.query_f(x) for x in range(16))
    assert all(o.query_g(x) == o.query_g(x) for x in range(16))


def test_dual_denied_without_dual():
    inst = make_instance(random_mm(2, 3), seed=4, with_dual=False)
    with pytest.raises(DualAccessError):
        inst.oracle.query_dual(0)
    with pytest.raises(DualAccessError):
        inst.oracle.phase_access("dual")
    assert not inst.oracle.has_dual


def test_phase_access_counts_once_per_application():
    inst = make_instance(random_mm(2, 4), seed=5)
    o = inst.oracle
    t1 = o.phase_access("g")
    t2 = o.phase_access("g")
    assert t1 == t2 == inst.g
    assert o.stats.g_phase == 2
    o.note_phase("f", 3)
    assert o.stats.f_phase == 3
    with pytest.raises(ValueError):
        o.phase_access("nope")


def test_fresh_oracle_isolated_counters():
    inst = make_instance(random_mm(2, 5), seed=6)
    a, b = inst.oracle, inst.fresh_oracle()
    a.query_f(0)
    assert b.stats.total() == 0


def test_verify_solution_replay():
    inst = make_instance(random_mm(3, 6), seed=7)
    assert inst.verify_solution(inst.s)
    wrong = BitVec(inst.n, inst.s.bits ^ 1)
    assert not inst.verify_solution(wrong)


def test_oracle_family_metadata_is_public_descriptor():
    d = random_mm(2, 8)
    inst = make_instance(d, seed=9)
    assert inst.oracle.family["family"] == "mm"
    assert "s" not in inst.oracle.family  # the secret never crosses the surface


def test_mismatched_tables_rejected():
    f = TruthTable.constant(2, 0)
    g = TruthTable.constant(3, 0)
    with pytest.raises(ValueError):
        bs.ShiftOracle(f, g)


def test_instance_save_load_roundtrip(tmp_path):
    inst = make_instance(random_mm(2, 10), seed=11)
    save_instance(inst, tmp_path / "case")
    again = load_instance(tmp_path / "case")
    assert again.f == inst.f and again.g == inst.g and again.s == inst.s
    assert again.f_dual == inst.f_dual
    # secret lives in its own file so the rest can be served blind
    assert (tmp_path / "case.secret.json").exists()
    assert (tmp_path / "case.f.tt").exists()
