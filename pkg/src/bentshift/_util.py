"""Small shared helpers."""
from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def parity_table(nbits: int) -> np.ndarray:
    """Read-only lookup: parity_table(m)[v] = popcount(v) mod 2 for v < 2^m."""
    if nbits < 0:
        raise ValueError(f"negative bit width {nbits}")
    v = np.arange(1 << nbits, dtype=np.int64)
    for s in (32, 16, 8, 4, 2, 1):
        v ^= v >> s
    t = (v & 1).astype(np.uint8)
    t.setflags(write=False)
    return t


def derive_seed(master: int, index: int) -> int:
    """Per-trial seed derived from a master seed by counter (scheduling independent)."""
    ss = np.random.SeedSequence([abs(int(master)), int(index)])
    return int(ss.generate_state(1)[0])
