"""Query-counted oracle access to hidden-shift instances.

Solvers only ever touch a ShiftOracle; the secret shift lives on the
enclosing HiddenShiftInstance.  Counters are the honesty mechanism: every
classical bit query and every phase-oracle application increments exactly
one channel.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, asdict
from pathlib import Path

from .boolfn import TruthTable, dual, load_table, save_table, shift
from .errors import DualAccessError
from .families import build_table, descriptor_from_dict, descriptor_to_dict
from .gf2 import BitVec

__all__ = [
    "QueryStats",
    "ShiftOracle",
    "HiddenShiftInstance",
    "make_instance",
    "save_instance",
    "load_instance",
]


@dataclass
class QueryStats:
    """Per-channel counters: classical bit queries and phase-oracle applications."""

    f: int = 0
    g: int = 0
    dual: int = 0
    f_phase: int = 0
    g_phase: int = 0
    dual_phase: int = 0

    def total(self) -> int:
        return self.f + self.g + self.dual + self.f_phase + self.g_phase + self.dual_phase

    def as_dict(self) -> dict:
        return asdict(self)


class ShiftOracle:
    """O_f (and O_{f,f~} when a dual table is attached) with query accounting."""

    def __init__(
        self,
        f: TruthTable,
        g: TruthTable,
        dual_table: TruthTable | None = None,
        family: dict | None = None,
    ) -> None:
        if g.n != f.n or (dual_table is not None and dual_table.n != f.n):
            raise ValueError("oracle tables must share the same variable count")
        self._f = f
        self._g = g
        self._dual = dual_table
        self.family = family
        self.stats = QueryStats()

    @property
    def n(self) -> int:
        return self._f.n

    @property
    def has_dual(self) -> bool:
        return self._dual is not None

    def query_f(self, x: int) -> int:
        self.stats.f += 1
        return self._f(x)

    def query_g(self, x: int) -> int:
        self.stats.g += 1
        return self._g(x)

    def query_dual(self, w: int) -> int:
        if self._dual is None:
            raise DualAccessError("this oracle does not expose the dual channel")
        self.stats.dual += 1
        return self._dual(w)

    # phase access: one call = one application of the phase oracle U, counted
    # once regardless of register width

    def phase_access(self, channel: str) -> TruthTable:
        self.note_phase(channel)
        return self._table(channel)

    def note_phase(self, channel: str, count: int = 1) -> None:
        if channel == "f":
            self.stats.f_phase += count
        elif channel == "g":
            self.stats.g_phase += count
        elif channel == "dual":
            if self._dual is None:
                raise DualAccessError("this oracle does not expose the dual channel")
            self.stats.dual_phase += count
        else:
            raise ValueError(f"unknown channel {channel!r}")

    def _table(self, channel: str) -> TruthTable:
        if channel == "f":
            return self._f
        if channel == "g":
            return self._g
        if channel == "dual":
            if self._dual is None:
                raise DualAccessError("this oracle does not expose the dual channel")
            return self._dual
        raise ValueError(f"unknown channel {channel!r}")


class HiddenShiftInstance:
    """A concrete (f, g = f(. + s), optional dual) with its withheld secret."""

    def __init__(
        self,
        descriptor,
        f: TruthTable,
        s: BitVec,
        g: TruthTable,
        f_dual: TruthTable | None,
    ) -> None:
        if s.n != f.n:
            raise ValueError(f"shift length {s.n} != n={f.n}")
        self.descriptor = descriptor
        self.f = f
        self.s = s
        self.g = g
        self.f_dual = f_dual
        self.oracle = ShiftOracle(f, g, f_dual, family=descriptor_to_dict(descriptor))

    @property
    def n(self) -> int:
        return self.f.n

    def fresh_oracle(self) -> ShiftOracle:
        """Independent counters over the same instance (for parallel solvers)."""
        return ShiftOracle(self.f, self.g, self.f_dual, family=self.oracle.family)

    def verify_solution(self, cand: BitVec) -> bool:
        """Replay check: does shifting f by the candidate reproduce g?"""
        return shift(self.f, cand) == self.g


def make_instance(
    descriptor,
    s: BitVec | None = None,
    seed: int | None = None,
    with_dual: bool = True,
) -> HiddenShiftInstance:
    """Build a consistent instance; s is drawn from seed when not given."""
    f = build_table(descriptor)
    if s is None:
        rng = random.Random(seed)
        s = BitVec(f.n, rng.getrandbits(f.n))
    g = shift(f, s)
    f_dual = dual(f) if with_dual else None
    return HiddenShiftInstance(descriptor, f, s, g, f_dual)


def save_instance(instance: HiddenShiftInstance, basepath) -> None:
    """Write descriptor + tables; the secret goes to a separate file so the
    rest can be served as a blind challenge."""
    base = Path(basepath)
    base.parent.mkdir(parents=True, exist_ok=True)
    meta = {
        "schema": 1,
        "descriptor": descriptor_to_dict(instance.descriptor),
        "has_dual": instance.f_dual is not None,
    }
    (base.parent / (base.name + ".instance.json")).write_text(json.dumps(meta, indent=2))
    save_table(instance.f, base.parent / (base.name + ".f.tt"))
    save_table(instance.g, base.parent / (base.name + ".g.tt"))
    if instance.f_dual is not None:
        save_table(instance.f_dual, base.parent / (base.name + ".dual.tt"))
    secret = {"schema": 1, "s": instance.s.bits, "n": instance.s.n}
    (base.parent / (base.name + ".secret.json")).write_text(json.dumps(secret, indent=2))


def load_instance(basepath) -> HiddenShiftInstance:
    base = Path(basepath)
    meta = json.loads((base.parent / (base.name + ".instance.json")).read_text())
    descriptor = descriptor_from_dict(meta["descriptor"])
    f = load_table(base.parent / (base.name + ".f.tt"))
    g = load_table(base.parent / (base.name + ".g.tt"))
    f_dual = None
    if meta.get("has_dual"):
        f_dual = load_table(base.parent / (base.name + ".dual.tt"))
    secret = json.loads((base.parent / (base.name + ".secret.json")).read_text())
    s = BitVec(int(secret["n"]), int(secret["s"]))
    return HiddenShiftInstance(descriptor, f, s, g, f_dual)
