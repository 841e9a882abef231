"""Independent bentness characterizations used as cross-validation oracles.

Three routes that must agree with the spectral test: difference-set
uniformity of the support, the circulant Hadamard (autocorrelation)
condition, and balancedness of all nonzero-direction derivatives.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfn import TruthTable, convolve, derivative, is_balanced
from .errors import ResourceLimitError
from .gf2 import BitVec

__all__ = [
    "DifferenceSetReport",
    "difference_set_check",
    "circulant_hadamard_check",
    "balanced_derivative_check",
]

_HADAMARD_MAX_N = 12


@dataclass(frozen=True)
class DifferenceSetReport:
    """Counts of pairwise differences of the support D = {x : f(x) = 1}.

    ``counts[d]`` is the number of ordered pairs (a, b) in D x D, a != b, with
    a xor b = d; self-pairs are excluded, so counts[0] = 0.  ``lam`` is the
    common count when uniform, else None.  Callers must still apply the
    parameter test (k in {2^(n-1) +- 2^((n-2)/2)}): the empty and full sets
    are uniform without being bent supports.
    """

    v: int
    k: int
    lam: int | None
    uniform: bool
    counts: np.ndarray

    def bent_parameters(self) -> bool:
        n = self.v.bit_length() - 1
        if n < 2 or n % 2:
            return False
        half = 1 << (n - 1)
        dev = 1 << ((n - 2) // 2)
        return self.uniform and self.k in (half - dev, half + dev)


def difference_set_check(f: TruthTable) -> DifferenceSetReport:
    """O(|D|^2) count of the difference multiset of the support of f."""
    size = 1 << f.n
    support = np.flatnonzero(f.values).astype(np.int64)
    counts = np.zeros(size, dtype=np.int64)
    for e in support:
        counts += np.bincount(support ^ e, minlength=size)
    counts[0] = 0  # drop the |D| self-pairs
    k = int(support.size)
    uniform = bool(np.all(counts[1:] == counts[1])) if size > 1 else True
    lam = int(counts[1]) if uniform and size > 1 else None
    counts.setflags(write=False)
    return DifferenceSetReport(v=size, k=k, lam=lam, uniform=uniform, counts=counts)


def circulant_hadamard_check(f: TruthTable) -> bool:
    """Gram condition on the shifted sign vectors: autocorrelation vanishes off 0.

    Equivalent to the 2^n x 2^n group-circulant sign matrix A_f satisfying
    A_f A_f^T = 2^n I, but computed in O(n 2^n) via three butterflies.
    """
    if f.n > _HADAMARD_MAX_N:
        raise ResourceLimitError(
            f"circulant Hadamard check supports n <= {_HADAMARD_MAX_N}, got {f.n}"
        )
    ac = convolve(f, f)
    return not np.any(ac[1:])  # ac[0] = 2^n always


def balanced_derivative_check(f: TruthTable) -> bool:
    """True iff f(x xor h) xor f(x) is balanced for every nonzero h."""
    for h in range(1, 1 << f.n):
        if not is_balanced(derivative(f, BitVec(f.n, h))):
            return False
    return True
