"""Independent reference implementations used as test oracles.

Written directly from the definitions with frozensets and itertools; shares
no code with the package under test.
"""
from itertools import combinations, product


def edge_order(N, r):
    return [frozenset(c) for c in combinations(range(1, N + 1), r)]


def edges_of(bits, N, r):
    return {e for e, b in zip(edge_order(N, r), bits) if b == 1}


def has_clique(edges, N, k, r):
    return any(all(frozenset(s) in edges for s in combinations(S, r))
               for S in combinations(range(1, N + 1), k))


def has_independent(edges, N, k, r):
    return any(all(frozenset(s) not in edges for s in combinations(S, r))
               for S in combinations(range(1, N + 1), k))


def count_good(N, m, n, r):
    """Number of r-uniform hypergraphs on N vertices with no m-clique and no n-independent set."""
    total = 0
    B = len(edge_order(N, r))
    for bits in product((0, 1), repeat=B):
        edges = edges_of(bits, N, r)
        if not has_clique(edges, N, m, r) and not has_independent(edges, N, n, r):
            total += 1
    return total
