"""Shared set-based reference oracles.

Everything here recomputes definitions with plain Python sets and
itertools enumeration, deliberately sharing no representation tricks with
the package (no bitmask XOR, no incremental updates), so agreement is a
genuine cross-check rather than the same code twice.
"""
from __future__ import annotations

from itertools import combinations

from wodkit import Graph


def neighbor_sets(g: Graph) -> list[set[int]]:
    return [{u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)]


def odd_set(g: Graph, c: set[int]) -> set[int]:
    nbrs = neighbor_sets(g)
    return {u for u in range(g.n) if len(nbrs[u] & c) % 2 == 1}


def closed_odd_set(g: Graph, c: set[int]) -> set[int]:
    nbrs = neighbor_sets(g)
    return {u for u in range(g.n) if len((nbrs[u] | {u}) & c) % 2 == 1}


def is_wod_oracle(g: Graph, b: set[int]) -> bool:
    rest = sorted(set(range(g.n)) - b)
    for r in range(len(rest) + 1):
        for c in combinations(rest, r):
            if b <= odd_set(g, set(c)):
                return True
    return False


def kappa_oracle(g: Graph) -> tuple[int, int]:
    """(value, smallest attaining mask) by ascending full enumeration."""
    best_v, best_m = -1, 0
    for m in range(1 << g.n):
        c = {i for i in range(g.n) if m >> i & 1}
        v = len(odd_set(g, c) - c)
        if v > best_v:
            best_v, best_m = v, m
    return best_v, best_m


def kappa_prime_oracle(g: Graph) -> tuple[int, int]:
    """(value, smallest attaining mask) over odd-cardinality D."""
    best_v, best_m = g.n + 1, 0
    for m in range(1, 1 << g.n):
        d = {i for i in range(g.n) if m >> i & 1}
        if len(d) % 2 == 0:
            continue
        v = len(d | odd_set(g, d))
        if v < best_v:
            best_v, best_m = v, m
    return best_v, best_m


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        )
