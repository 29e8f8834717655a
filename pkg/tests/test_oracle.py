import random
from itertools import combinations, permutations

import numpy as np
import pytest

from brute import count_good, edges_of, has_clique, has_independent
from hyperramsey.encoding import Hypergraph, binomial, bits_to_int, encode, subsets
from hyperramsey.errors import InconclusiveError, InfeasibleSizeError
from hyperramsey.oracle import (
    RamseyInstance, clique_count, cost, count_solutions, independent_count, oracle_bit,
    ramsey_classical, solution_table,
)

PENTAGON = encode(Hypergraph.from_edge_sets(5, 2, [{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}]))
INST_5332 = RamseyInstance(5, 3, 3, 2)


def test_instance_validation():
    with pytest.raises(ValueError):
        RamseyInstance(5, 1, 3, 2)
    with pytest.raises(ValueError):
        RamseyInstance(5, 3, 3, 1)
    with pytest.raises(ValueError):
        RamseyInstance(0, 3, 3, 2)
    inst = RamseyInstance(13, 4, 4, 3)
    assert (inst.n_inputs, inst.n_clique_sets, inst.n_indep_sets) == (286, 715, 715)


def test_all_ones_and_all_zeros():
    inst = RamseyInstance(6, 3, 4, 2)
    ones, zeros = (1,) * 15, (0,) * 15
    assert clique_count(ones, inst) == binomial(6, 3)
    assert clique_count(zeros, inst) == 0
    assert independent_count(zeros, inst) == binomial(6, 4)
    assert independent_count(ones, inst) == 0
    assert cost(zeros, inst) == binomial(6, 4)
    assert cost(ones, inst) == binomial(6, 3)
    assert oracle_bit(ones, inst) == 0


def test_pentagon():
    assert clique_count(PENTAGON, INST_5332) == 0
    assert independent_count(PENTAGON, INST_5332) == 0
    assert cost(PENTAGON, INST_5332) == 0
    assert oracle_bit(PENTAGON, INST_5332) == 1


def test_empty_sums_when_m_n_exceed_N():
    inst = RamseyInstance(2, 3, 3, 2)
    for x in ("0", "1"):
        assert oracle_bit(x, inst) == 1


def test_length_mismatch():
    with pytest.raises(ValueError):
        cost((0, 1), INST_5332)
    with pytest.raises(ValueError):
        cost(1 << 10, INST_5332)


@pytest.mark.parametrize("N,m,n,r,expected", [
    # expected values from tests/brute.py (independent enumeration)
    (5, 3, 3, 2, 12),
    (6, 3, 3, 2, 0),
    (2, 3, 3, 2, 2),
    (4, 3, 3, 2, 18),
    (3, 3, 3, 2, 6),
    (3, 3, 2, 2, 0),
])
def test_count_solutions_frozen(N, m, n, r, expected):
    assert count_solutions(RamseyInstance(N, m, n, r)) == expected


@pytest.mark.parametrize("N,m,n,r", [(4, 3, 3, 2), (4, 2, 3, 2), (5, 4, 3, 2), (5, 3, 4, 3), (5, 4, 4, 3), (6, 4, 5, 4)])
def test_count_solutions_matches_reference(N, m, n, r):
    assert count_solutions(RamseyInstance(N, m, n, r)) == count_good(N, m, n, r)


def test_count_matches_sum_of_oracle_bits():
    inst = RamseyInstance(5, 3, 4, 2)
    total = sum(oracle_bit(x, inst) for x in range(1 << inst.n_inputs))
    assert count_solutions(inst) == total
    assert np.count_nonzero(solution_table(inst)) == total


def test_oracle_bit_matches_reference_per_string():
    N, m, n, r = 5, 3, 3, 3
    inst = RamseyInstance(N, m, n, r)
    rng = random.Random(7)
    for _ in range(200):
        bits = tuple(rng.randint(0, 1) for _ in range(inst.n_inputs))
        edges = edges_of(bits, N, r)
        ref = not has_clique(edges, N, m, r) and not has_independent(edges, N, n, r)
        assert oracle_bit(bits, inst) == int(ref)


def test_count_cap():
    with pytest.raises(InfeasibleSizeError, match="2\\^28"):
        count_solutions(RamseyInstance(8, 3, 3, 3))
    with pytest.raises(InfeasibleSizeError):
        count_solutions(RamseyInstance(6, 3, 3, 2), cap=10)


def _permute(bits, N, r, perm):
    order = subsets(N, r)
    index = {s: i for i, s in enumerate(order)}
    out = [0] * len(bits)
    for s, b in zip(order, bits):
        out[index[tuple(sorted(perm[v] for v in s))]] = b
    return tuple(out)


@pytest.mark.parametrize("N,m,n,r", [(5, 3, 3, 2), (6, 3, 4, 2), (6, 4, 4, 3), (5, 3, 4, 3)])
def test_cost_permutation_invariant(N, m, n, r):
    inst = RamseyInstance(N, m, n, r)
    rng = random.Random(N + m + n + r)
    for _ in range(50):
        bits = tuple(rng.randint(0, 1) for _ in range(inst.n_inputs))
        labels = list(range(1, N + 1))
        rng.shuffle(labels)
        perm = dict(zip(range(1, N + 1), labels))
        assert cost(_permute(bits, N, r, perm), inst) == cost(bits, inst)


@pytest.mark.parametrize("N,m,n,r", [(5, 3, 4, 2), (6, 3, 5, 2), (6, 4, 3, 3)])
def test_complement_duality(N, m, n, r):
    inst, swapped = RamseyInstance(N, m, n, r), RamseyInstance(N, n, m, r)
    for x in range(0, 1 << inst.n_inputs, 97):
        comp = x ^ ((1 << inst.n_inputs) - 1)
        assert cost(x, inst) == cost(comp, swapped)


def test_ramsey_classical():
    assert ramsey_classical(3, 3, 2, lower_bound=2) == 6
    assert ramsey_classical(2, 2, 2, lower_bound=1) == 2
    assert ramsey_classical(3, 2, 2, lower_bound=2) == 3


def test_ramsey_monotone_after_threshold():
    assert count_solutions(RamseyInstance(6, 3, 3, 2)) == 0
    assert count_solutions(RamseyInstance(7, 3, 3, 2)) == 0


def test_ramsey_classical_cap():
    with pytest.raises(InconclusiveError):
        ramsey_classical(3, 3, 2, lower_bound=2, n_max=5)


@pytest.mark.parametrize("chunk", [1, 7, 1 << 10, 1 << 20])
def test_count_independent_of_chunking(monkeypatch, chunk):
    import hyperramsey.oracle as oracle_mod
    monkeypatch.setattr(oracle_mod, "_CHUNK", chunk)
    assert count_solutions(RamseyInstance(5, 3, 3, 2)) == 12
