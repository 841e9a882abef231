"""Real-amplitude state-vector simulation of the two hidden-shift algorithms.

Every circuit here uses only Hadamard layers, +-1 phase oracles, and CNOT
blocks, so amplitudes stay real.  Qubit q is bit q of the basis index
(little-endian, consistent with the truth-table convention).

Algorithm A1 (dual access): H, U_g, H, U_dual, H, measure -> |s> exactly.
Algorithm A2 (no dual): on 2n+1 qubits (y = bits 0..n-1, x = bits n..2n-1,
control b = bit 2n): H everywhere, CNOT x into y, U_g on y conditioned on
b = 1, U_f on y conditioned on b = 0, CNOT x into y, H on the top n+1
qubits, measure them.  Each measured word a satisfies (1, s) . a = 0 and is
uniform over that hyperplane when f is bent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolfn import TruthTable
from .errors import ResourceLimitError
from .gf2 import BitMatrix, BitVec, kernel_basis, rank
from .oracles import ShiftOracle

__all__ = [
    "MAX_QUBITS",
    "StateVector",
    "hadamard_all",
    "phase_oracle",
    "run_a1",
    "run_a2_sample",
    "run_a2_samples",
    "run_a2",
    "A2Result",
    "analytic_a2_samples",
]

MAX_QUBITS = 25
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class StateVector:
    """Real amplitudes over the computational basis of num_qubits qubits."""

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int, amplitudes: np.ndarray) -> None:
        if num_qubits < 1:
            raise ValueError(f"need at least one qubit, got {num_qubits}")
        if num_qubits > MAX_QUBITS:
            raise ResourceLimitError(f"{num_qubits} qubits exceed the cap {MAX_QUBITS}")
        arr = np.asarray(amplitudes, dtype=np.float64)
        if arr.shape != (1 << num_qubits,):
            raise ValueError(f"expected {1 << num_qubits} amplitudes")
        self.num_qubits = num_qubits
        self.amplitudes = arr

    @classmethod
    def zeros(cls, num_qubits: int) -> "StateVector":
        if num_qubits < 1:
            raise ValueError(f"need at least one qubit, got {num_qubits}")
        if num_qubits > MAX_QUBITS:
            raise ResourceLimitError(f"{num_qubits} qubits exceed the cap {MAX_QUBITS}")
        amps = np.zeros(1 << num_qubits)
        amps[0] = 1.0
        return cls(num_qubits, amps)

    def norm(self) -> float:
        return float(np.sqrt(np.dot(self.amplitudes, self.amplitudes)))

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy())


def _check_register(num_qubits: int, register: Sequence[int]) -> tuple[int, ...]:
    reg = tuple(int(q) for q in register)
    if len(set(reg)) != len(reg):
        raise ValueError("register qubits must be distinct")
    for q in reg:
        if not 0 <= q < num_qubits:
            raise ValueError(f"qubit {q} out of range for {num_qubits} qubits")
    return reg


def _h_qubit_inplace(amps: np.ndarray, q: int) -> None:
    b = amps.reshape(-1, 2, 1 << q)
    t = b[:, 0, :].copy()
    b[:, 0, :] = (t + b[:, 1, :]) * _INV_SQRT2
    b[:, 1, :] = (t - b[:, 1, :]) * _INV_SQRT2


def hadamard_all(psi: StateVector, register: Sequence[int]) -> StateVector:
    """Apply H to each qubit of the register; norm preserved."""
    reg = _check_register(psi.num_qubits, register)
    out = psi.amplitudes.copy()
    for q in reg:
        _h_qubit_inplace(out, q)
    return StateVector(psi.num_qubits, out)


def _register_values(num_qubits: int, register: tuple[int, ...]) -> np.ndarray:
    """For each basis index, the value read out of the register qubits."""
    idx = np.arange(1 << num_qubits)
    x = np.zeros_like(idx)
    for j, q in enumerate(register):
        x |= ((idx >> q) & 1) << j
    return x


def phase_oracle(psi: StateVector, table: TruthTable, register: Sequence[int]) -> StateVector:
    """Multiply each amplitude by (-1)^table(x) where x is the register content."""
    reg = _check_register(psi.num_qubits, register)
    if len(reg) != table.n:
        raise ValueError(f"register width {len(reg)} != table width {table.n}")
    sign = 1.0 - 2.0 * table.values[_register_values(psi.num_qubits, reg)]
    return StateVector(psi.num_qubits, psi.amplitudes * sign)


def _controlled_register_swap(
    psi: StateVector, control: int, reg_a: Sequence[int], reg_b: Sequence[int]
) -> StateVector:
    """Fredkin block: swap the two registers when the control qubit is 1."""
    ra = _check_register(psi.num_qubits, reg_a)
    rb = _check_register(psi.num_qubits, reg_b)
    if len(ra) != len(rb):
        raise ValueError("swap registers must have equal width")
    idx = np.arange(1 << psi.num_qubits)
    a_vals = _register_values(psi.num_qubits, ra)
    b_vals = _register_values(psi.num_qubits, rb)
    swapped = idx
    for j, (qa, qb) in enumerate(zip(ra, rb)):
        swapped = swapped & ~(1 << qa) & ~(1 << qb)
        swapped |= ((b_vals >> j) & 1) << qa
        swapped |= ((a_vals >> j) & 1) << qb
    src = np.where((idx >> control) & 1 == 1, swapped, idx)
    return StateVector(psi.num_qubits, psi.amplitudes[src])


def run_a1(oracle: ShiftOracle, record_norms: list | None = None) -> BitVec:
    """Two-phase-query exact recovery of s through the dual channel.

    Deterministic: the final state is a computational basis state up to a
    global sign, so the outcome is read off rather than sampled.  When
    ``record_norms`` is a list, the state norm after each of the five gate
    layers is appended to it (transcript support).
    """
    n = oracle.n
    reg = range(n)
    psi = StateVector.zeros(n)
    steps = []
    psi = hadamard_all(psi, reg)
    steps.append(psi.norm())
    psi = phase_oracle(psi, oracle.phase_access("g"), reg)
    steps.append(psi.norm())
    psi = hadamard_all(psi, reg)
    steps.append(psi.norm())
    psi = phase_oracle(psi, oracle.phase_access("dual"), reg)
    steps.append(psi.norm())
    psi = hadamard_all(psi, reg)
    steps.append(psi.norm())
    if record_norms is not None:
        record_norms.extend(steps)
    amps = psi.amplitudes
    peak = int(np.argmax(np.abs(amps)))
    if abs(abs(amps[peak]) - 1.0) > 1e-12:
        raise RuntimeError(
            "final state is not a basis state; the oracle's f is not bent or "
            "its dual table is wrong"
        )
    return BitVec(n, peak)


def _a2_final_probs(f: TruthTable, g: TruthTable) -> np.ndarray:
    """Exact measurement distribution of the top n+1 qubits of the A2 circuit."""
    n = f.n
    nq = 2 * n + 1
    if nq > MAX_QUBITS:
        raise ResourceLimitError(
            f"A2 needs {nq} qubits for n={n}; cap is {MAX_QUBITS}"
        )
    half = 1 << n
    psi = StateVector.zeros(nq)
    psi = hadamard_all(psi, range(nq))
    amps = psi.amplitudes
    a3 = amps.reshape(2, half, half)  # [b, x, y]
    idx = np.arange(half)
    for x in range(1, half):  # CNOT block: y ^= x
        a3[:, x, :] = a3[:, x, idx ^ x]
    a3[1] *= (1.0 - 2.0 * g.values)[None, :]  # U_g on y when b = 1
    a3[0] *= (1.0 - 2.0 * f.values)[None, :]  # U_f on y when b = 0
    for x in range(1, half):
        a3[:, x, :] = a3[:, x, idx ^ x]
    psi = hadamard_all(psi, range(n, nq))  # H on x register and control
    probs = (psi.amplitudes ** 2).reshape(1 << (n + 1), half).sum(axis=1)
    total = float(probs.sum())
    if abs(total - 1.0) > 1e-9:
        raise RuntimeError(f"probability mass {total} drifted from 1")
    return probs


def _draw(probs: np.ndarray, rng: np.random.Generator, count: int) -> np.ndarray:
    """Exact cumulative-probability inversion.

    Queries are scaled by the total mass so every pick lands strictly inside
    the cdf, i.e. always on a positive-probability cell (zero-probability
    cells are zero-width plateaus that searchsorted skips).
    """
    cdf = np.cumsum(probs)
    return np.searchsorted(cdf, rng.random(count) * cdf[-1], side="right")


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def run_a2_samples(oracle: ShiftOracle, count: int, rng=None) -> list[BitVec]:
    """Run the A2 circuit ``count`` times; each run costs one f-phase and one
    g-phase application.  Returns measured words a of length n+1 with bit 0
    the control-qubit outcome."""
    if count < 1:
        raise ValueError("count must be positive")
    gen = _as_generator(rng)
    probs = _a2_final_probs(oracle._table("f"), oracle._table("g"))
    oracle.note_phase("f", count)
    oracle.note_phase("g", count)
    n = oracle.n
    out = []
    for j in _draw(probs, gen, count):
        b = int(j) >> n
        w = int(j) & ((1 << n) - 1)
        out.append(BitVec(n + 1, b | (w << 1)))
    return out


def run_a2_sample(oracle: ShiftOracle, rng=None) -> BitVec:
    """One A2 circuit execution and measurement."""
    return run_a2_samples(oracle, 1, rng)[0]


def analytic_a2_samples(s: BitVec, count: int, rng=None) -> list[BitVec]:
    """Reference sampler: uniform draws from the hyperplane {a : (1,s).a = 0},
    bypassing the circuit entirely."""
    gen = _as_generator(rng)
    out = []
    for _ in range(count):
        w = int(gen.integers(0, 1 << s.n))
        a0 = (w & s.bits).bit_count() & 1
        out.append(BitVec(s.n + 1, a0 | (w << 1)))
    return out


@dataclass
class A2Result:
    success: bool
    shift: BitVec | None
    rounds_used: int
    samples: list[BitVec]


def run_a2(oracle: ShiftOracle, max_rounds: int | None = None, rng=None) -> A2Result:
    """Collect A2 samples until they pin down s, then solve over GF(2).

    Each sample is one linear condition a . (1, s) = 0; when the sample
    matrix has rank n its kernel is exactly {0, (1, s)}.  Fails only if
    max_rounds (default 3(n+1)) is exhausted.
    """
    n = oracle.n
    if max_rounds is None:
        max_rounds = 3 * (n + 1)
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    gen = _as_generator(rng)
    # the circuit is deterministic, so its distribution is computed once; each
    # round still costs one f-phase and one g-phase application
    probs = _a2_final_probs(oracle._table("f"), oracle._table("g"))
    mask = (1 << n) - 1

    def draw_rounds(k: int) -> list[BitVec]:
        oracle.note_phase("f", k)
        oracle.note_phase("g", k)
        return [
            BitVec(n + 1, (int(j) >> n) | ((int(j) & mask) << 1))
            for j in _draw(probs, gen, k)
        ]

    samples = draw_rounds(min(n, max_rounds))
    rows = [s.bits for s in samples]
    while True:
        mat = BitMatrix(len(rows), n + 1, tuple(rows))
        if rank(mat) == n:
            kern = kernel_basis(mat)
            assert len(kern) == 1 and kern[0].bit(0) == 1
            return A2Result(True, BitVec(n, kern[0].bits >> 1), len(rows), samples)
        if len(rows) >= max_rounds:
            return A2Result(False, None, len(rows), samples)
        nxt = draw_rounds(1)[0]
        samples.append(nxt)
        rows.append(nxt.bits)
