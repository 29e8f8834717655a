"""Classical cost function, Boolean oracle and brute-force counting.

Everything here is the ground truth the quantum simulation is checked
against. A bit string ``x`` may be given as a 0/1 sequence, a '0101' string
or an already packed int (see :mod:`hyperramsey.encoding`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .encoding import bits_to_int, binomial, subset_index
from .errors import InconclusiveError, InfeasibleSizeError

DEFAULT_ENUM_CAP = 28
_CHUNK = 1 << 20


@dataclass(frozen=True)
class RamseyInstance:
    N: int
    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.m < self.r or self.n < self.r:
            raise ValueError(f"m and n must be >= r (got m={self.m}, n={self.n}, r={self.r})")
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")

    @property
    def n_inputs(self) -> int:
        return binomial(self.N, self.r)

    @property
    def n_clique_sets(self) -> int:
        return binomial(self.N, self.m)

    @property
    def n_indep_sets(self) -> int:
        return binomial(self.N, self.n)

    def __str__(self):
        return f"(N={self.N}, m={self.m}, n={self.n}, r={self.r})"


@lru_cache(maxsize=None)
def subset_bit_positions(N: int, k: int, r: int) -> tuple[tuple[int, ...], ...]:
    """For every k-subset of {1..N} (rank order), the 0-based input bits of its r-subsets."""
    index = subset_index(N, r)
    return tuple(
        tuple(index[sub] for sub in combinations(group, r))
        for group in combinations(range(1, N + 1), k)
    )


@lru_cache(maxsize=None)
def subset_masks(N: int, k: int, r: int) -> tuple[int, ...]:
    return tuple(sum(1 << p for p in pos) for pos in subset_bit_positions(N, k, r))


def _packed(x, inst: RamseyInstance) -> int:
    if isinstance(x, (int, np.integer)):
        x = int(x)
        if x < 0 or x >> inst.n_inputs:
            raise ValueError(f"packed value {x} does not fit in {inst.n_inputs} bits")
        return x
    if len(x) != inst.n_inputs:
        raise ValueError(f"expected {inst.n_inputs} bits, got {len(x)}")
    return bits_to_int(x)


def _count_full(value: int, positions, want: int) -> int:
    # early exit on the first bit that breaks the pattern
    count = 0
    for pos in positions:
        for p in pos:
            if (value >> p) & 1 != want:
                break
        else:
            count += 1
    return count


def clique_count(x: Sequence[int] | str | int, inst: RamseyInstance) -> int:
    """Number of m-vertex sets all of whose r-subsets are edges."""
    return _count_full(_packed(x, inst), subset_bit_positions(inst.N, inst.m, inst.r), 1)


def independent_count(x: Sequence[int] | str | int, inst: RamseyInstance) -> int:
    """Number of n-vertex sets none of whose r-subsets are edges."""
    return _count_full(_packed(x, inst), subset_bit_positions(inst.N, inst.n, inst.r), 0)


def cost(x: Sequence[int] | str | int, inst: RamseyInstance) -> int:
    return clique_count(x, inst) + independent_count(x, inst)


def oracle_bit(x: Sequence[int] | str | int, inst: RamseyInstance) -> int:
    return int(cost(x, inst) == 0)


def _check_cap(inst: RamseyInstance, cap: int) -> None:
    if inst.n_inputs > cap:
        raise InfeasibleSizeError(
            f"{inst} needs 2^{inst.n_inputs} strings; enumeration cap is 2^{cap}"
        )


def _solution_mask(values: np.ndarray, inst: RamseyInstance) -> np.ndarray:
    bad = np.zeros(values.shape, dtype=bool)
    for mask in subset_masks(inst.N, inst.m, inst.r):
        mask = np.uint64(mask)
        bad |= (values & mask) == mask
    for mask in subset_masks(inst.N, inst.n, inst.r):
        bad |= (values & np.uint64(mask)) == 0
    return ~bad


def solution_table(inst: RamseyInstance, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Boolean array ``f`` with ``f[x]`` = oracle bit of packed string ``x``."""
    _check_cap(inst, cap)
    values = np.arange(1 << inst.n_inputs, dtype=np.uint64)
    return _solution_mask(values, inst)


def count_solutions(inst: RamseyInstance, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exact number of strings with zero cost, by exhaustive enumeration."""
    _check_cap(inst, cap)
    total = 1 << inst.n_inputs
    count = 0
    for start in range(0, total, _CHUNK):
        values = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        count += int(np.count_nonzero(_solution_mask(values, inst)))
    return count


def ramsey_classical(m: int, n: int, r: int, lower_bound: int, n_max: int | None = None,
                     cap: int = DEFAULT_ENUM_CAP) -> int:
    """Least N > lower_bound with no zero-cost string."""
    if n_max is None:
        n_max = lower_bound + 16
    for N in range(lower_bound + 1, n_max + 1):
        if count_solutions(RamseyInstance(N, m, n, r), cap) == 0:
            return N
    raise InconclusiveError(f"no N <= {n_max} settles R({m},{n};{r})")
