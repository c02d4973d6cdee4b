"""Weak odd domination membership, certificates, and verification.

A set B is weakly odd dominated (WOD) when some C disjoint from B puts
every vertex of B in Odd(C).  Membership is polynomial: B is WOD exactly
when the GF(2) system  cut_matrix(V\\B) . x = 1  is solvable, where the
rows of that matrix are indexed by B and the columns by V\\B.  The
complementary characterization says B is non-WOD exactly when some odd-
cardinality D inside B keeps Odd(D) inside B; such a D falls out of the
stacked system (all-ones row over cut_matrix(B)) . d = (1, 0, ..., 0).

The two outcomes are mutually exclusive and exhaustive, and the rank
increment pi(B) in {0, 1} decides between them.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .gf2 import BitMatrix, BitVector, solve, rank
from .graph import Graph, VertexSet, cut_matrix

__all__ = [
    "WodKind",
    "WodCertificate",
    "is_wod",
    "pi",
    "wod_certificate",
    "non_wod_certificate",
    "verify_wod_certificate",
    "verify_non_wod_certificate",
    "is_wod_bruteforce",
    "BRUTEFORCE_LIMIT",
]

BRUTEFORCE_LIMIT = 25


class WodKind(Enum):
    WOD = "WOD"
    NON_WOD = "NON_WOD"


@dataclass(frozen=True)
class WodCertificate:
    """Checkable witness: C proving B is WOD, or D proving it is not."""

    kind: WodKind
    witness: VertexSet


def _check_set(g: Graph, s: VertexSet) -> None:
    if s.universe != g.n:
        raise ValueError(
            f"vertex set over universe {s.universe} used with graph of order {g.n}"
        )


def _wod_system(g: Graph, b: VertexSet) -> tuple[BitMatrix, BitVector, list[int]]:
    # cut matrix of V\B has rows indexed by B and columns by V\B
    outside = (~b).to_sorted_list()
    m = cut_matrix(g, ~b)
    return m, BitVector.ones(len(b)), outside


def is_wod(g: Graph, b: VertexSet) -> bool:
    """True when some C disjoint from B has B inside Odd(C).

    Decided by solvability of the GF(2) cut system; the empty set is WOD
    and the full vertex set is not (for n >= 1).
    """
    _check_set(g, b)
    m, ones, _ = _wod_system(g, b)
    return solve(m, ones) is not None


def pi(g: Graph, b: VertexSet) -> int:
    """Rank increment of stacking B's all-ones indicator row on cut_matrix(B).

    Always 0 or 1; equals 0 exactly when B is WOD.
    """
    _check_set(g, b)
    m = cut_matrix(g, b)
    width = m.n_cols
    stacked = BitMatrix(((1 << width) - 1 if width else 0,) + m.rows, width)
    return rank(stacked) - rank(m)


def wod_certificate(g: Graph, b: VertexSet) -> Optional[VertexSet]:
    """Canonical dominating witness C for a WOD set B, else None.

    C is the solver's canonical solution (free variables zero) mapped back
    to vertex indices, so repeated runs return the same set.
    """
    _check_set(g, b)
    m, ones, outside = _wod_system(g, b)
    x = solve(m, ones)
    if x is None:
        return None
    return VertexSet.from_indices(g.n, (outside[j] for j in range(len(outside)) if x[j]))


def non_wod_certificate(g: Graph, b: VertexSet) -> Optional[VertexSet]:
    """Canonical odd witness D for a non-WOD set B, else None.

    Solves the stacked system (all-ones row over cut_matrix(B)) . d = (1, 0...):
    the first row forces |D| odd, the rest force Odd(D) inside B.
    """
    _check_set(g, b)
    members = b.to_sorted_list()
    m = cut_matrix(g, b)
    width = m.n_cols
    stacked = BitMatrix(((1 << width) - 1 if width else 0,) + m.rows, width)
    rhs = BitVector(1, m.n_rows + 1)
    x = solve(stacked, rhs)
    if x is None:
        return None
    return VertexSet.from_indices(g.n, (members[j] for j in range(len(members)) if x[j]))


def verify_wod_certificate(g: Graph, b: VertexSet, c: VertexSet) -> bool:
    """Pure predicate: C disjoint from B and every v in B sees C oddly.

    Recomputes neighbor parities vertex by vertex; shares no code with the
    solver path.
    """
    _check_set(g, b)
    _check_set(g, c)
    if b.mask & c.mask:
        return False
    for v in b:
        if (g.adj[v] & c.mask).bit_count() % 2 == 0:
            return False
    return True


def verify_non_wod_certificate(g: Graph, b: VertexSet, d: VertexSet) -> bool:
    """Pure predicate: D inside B, |D| odd, and Odd(D) inside B."""
    _check_set(g, b)
    _check_set(g, d)
    if d.mask & ~b.mask:
        return False
    if len(d) % 2 == 0:
        return False
    outside = ~b
    for u in outside:
        if (g.adj[u] & d.mask).bit_count() % 2 == 1:
            return False
    return True


def is_wod_bruteforce(g: Graph, b: VertexSet) -> bool:
    """Reference oracle: exhaust all C inside V\\B.

    Guarded to |V\\B| <= BRUTEFORCE_LIMIT since the scan is exponential.
    Used by tests to cross-check the linear-algebra path.
    """
    _check_set(g, b)
    comp = ~b.mask & ((1 << g.n) - 1)
    free = comp.bit_count()
    if free > BRUTEFORCE_LIMIT:
        raise ValueError(
            f"complement has {free} vertices, brute force capped at {BRUTEFORCE_LIMIT}"
        )
    target = b.mask
    sub = comp
    while True:
        odd = 0
        m = sub
        while m:
            low = m & -m
            odd ^= g.adj[low.bit_length() - 1]
            m ^= low
        if target & ~odd == 0:
            return True
        if sub == 0:
            return False
        sub = (sub - 1) & comp
