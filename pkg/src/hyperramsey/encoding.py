"""Bijection between r-uniform hypergraphs on vertices 1..N and bit strings.

Bit k (1-based) of a string is the indicator of the k-th r-subset of
{1, ..., N}, where subsets are ordered lexicographically as ascending tuples.
For r = 2 this gives the order {1,2}, {1,3}, ..., {1,N}, {2,3}, ..., {N-1,N}.

Internally a bit string is also packed into a Python int with subset k at
bit position k - 1; that packing is what the simulator sees on the input
register (qubit offset + k - 1 holds subset k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n >= 0 and k >= 0, got ({n}, {k})")
    return math.comb(n, k)


def _check_subset(members: Sequence[int], n_vertices: int, r: int) -> tuple[int, ...]:
    members = tuple(int(v) for v in members)
    if len(members) != r:
        raise ValueError(f"expected {r} members, got {len(members)}")
    if any(b <= a for a, b in zip(members, members[1:])):
        raise ValueError(f"members must be strictly ascending: {members}")
    if members and (members[0] < 1 or members[-1] > n_vertices):
        raise ValueError(f"members must lie in [1, {n_vertices}]: {members}")
    return members


def rank_subset(members: Sequence[int], n_vertices: int, r: int) -> int:
    """1-based lexicographic rank of an ascending r-subset of {1..N}."""
    members = _check_subset(members, n_vertices, r)
    rank = 0
    lo = 1
    for i, c in enumerate(members):
        for v in range(lo, c):
            rank += math.comb(n_vertices - v, r - i - 1)
        lo = c + 1
    return rank + 1


def unrank_subset(k: int, n_vertices: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_subset`."""
    total = binomial(n_vertices, r)
    if not 1 <= k <= total:
        raise ValueError(f"rank {k} outside [1, {total}]")
    rest = k - 1
    out = []
    v = 1
    for i in range(r):
        while True:
            block = math.comb(n_vertices - v, r - i - 1)
            if rest < block:
                break
            rest -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


@lru_cache(maxsize=None)
def subsets(n_vertices: int, r: int) -> tuple[tuple[int, ...], ...]:
    """All r-subsets of {1..N} in canonical (rank) order."""
    return tuple(combinations(range(1, n_vertices + 1), r))


@lru_cache(maxsize=None)
def subset_index(n_vertices: int, r: int) -> dict[tuple[int, ...], int]:
    """Map from ascending r-subset to its 0-based bit position."""
    return {s: i for i, s in enumerate(subsets(n_vertices, r))}


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 1..n_vertices.

    ``edges`` holds one 0/1 entry per r-subset in canonical order.
    """

    n_vertices: int
    uniformity: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if self.uniformity < 2:
            raise ValueError("uniformity must be at least 2")
        if self.n_vertices < self.uniformity:
            raise ValueError("need at least r vertices")
        edges = tuple(int(b) for b in self.edges)
        if any(b not in (0, 1) for b in edges):
            raise ValueError("edge bits must be 0 or 1")
        expected = binomial(self.n_vertices, self.uniformity)
        if len(edges) != expected:
            raise ValueError(f"expected {expected} edge bits, got {len(edges)}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edge_sets(cls, n_vertices: int, r: int, edge_sets: Iterable[Iterable[int]]) -> "Hypergraph":
        bits = [0] * binomial(n_vertices, r)
        for e in edge_sets:
            bits[rank_subset(sorted(e), n_vertices, r) - 1] = 1
        return cls(n_vertices, r, tuple(bits))

    def edge_sets(self) -> list[tuple[int, ...]]:
        return [s for s, b in zip(subsets(self.n_vertices, self.uniformity), self.edges) if b]


def encode(graph: Hypergraph) -> tuple[int, ...]:
    return graph.edges


def decode(bits: Sequence[int] | str, n_vertices: int, r: int) -> Hypergraph:
    return Hypergraph(n_vertices, r, to_bits(bits))


def to_bits(bits: Sequence[int] | str) -> tuple[int, ...]:
    """Normalize a '0101' string or 0/1 sequence to a tuple of ints."""
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return tuple(int(c) for c in bits)
    return tuple(int(b) for b in bits)


def bits_to_int(bits: Sequence[int] | str) -> int:
    """Pack bits so that position k (1-based) lands at integer bit k - 1."""
    value = 0
    for i, b in enumerate(to_bits(bits)):
        if b:
            value |= 1 << i
    return value


def int_to_bits(value: int, length: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(length))


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in bits)


def format_hypergraph(graph: Hypergraph) -> str:
    """Two-line text form: ``N r`` then the edge bit string."""
    return f"{graph.n_vertices} {graph.uniformity}\n{bits_to_str(graph.edges)}\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) not in (1, 2):
        raise ValueError("hypergraph text must have a header line and a bit string line")
    n_vertices, r = (int(tok) for tok in lines[0].split())
    bits = lines[1] if len(lines) == 2 else ""
    return decode(bits, n_vertices, r)
