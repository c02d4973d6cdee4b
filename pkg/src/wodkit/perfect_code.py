"""Perfect codes and their ties to the extremal WOD quantities.

A perfect code is an independent set C such that every vertex outside C
has exactly one neighbor in C.  Two equivalences connect codes to the
solvers: kappa(G) meets its degree upper bound n*Delta/(Delta+1) exactly
when G has a perfect code of maximum-degree vertices, and for a delta-
regular graph with n/(n-delta) odd, kappa'(G) meets its lower bound
n/(n-delta) exactly when the complement graph has a perfect code.  The K4
gadget turns perfect-code existence in a cubic graph into a kappa' target
on a complement graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    VertexSet,
    complement,
    complete_multipartite,
    disjoint_union,
    max_degree,
    min_degree,
)
from .solvers import DEFAULT_CAP, CapExceededError, kappa, kappa_prime

__all__ = [
    "PerfectCode",
    "PreconditionError",
    "is_perfect_code",
    "find_perfect_code",
    "check_kappa_equality",
    "check_kappa_prime_equality",
    "k4_gadget_reduction",
]


class PreconditionError(ValueError):
    """An operation's structural precondition does not hold for this graph."""


@dataclass(frozen=True)
class PerfectCode:
    code: VertexSet


def is_perfect_code(g: Graph, c: VertexSet) -> bool:
    """True when c is independent and covers every outside vertex exactly once."""
    if c.universe != g.n:
        raise ValueError(
            f"vertex set over universe {c.universe} used with graph of order {g.n}"
        )
    for v in c:
        if g.adj[v] & c.mask:
            return False
    for v in ~c:
        if (g.adj[v] & c.mask).bit_count() != 1:
            return False
    return True


def _gosper_next(m: int) -> int:
    u = m & -m
    v = m + u
    return v | (((m ^ v) >> 2) // u)


def find_perfect_code(g: Graph, *, cap: int = DEFAULT_CAP) -> Optional[PerfectCode]:
    """Lexicographically smallest perfect code, or None.

    Regular graphs admit a counting shortcut: every perfect code partitions
    the vertices into closed neighborhoods of size Delta+1, so the code
    size must be exactly n/(Delta+1) and only that layer is searched.
    """
    if g.n > cap:
        raise CapExceededError(
            f"order {g.n} exceeds the enumeration cap {cap}; "
            "pass a larger cap explicitly to proceed"
        )
    if g.n == 0:
        return PerfectCode(VertexSet.empty(0))
    if g.is_regular():
        d = g.degree(0)
        if g.n % (d + 1) != 0:
            return None
        size = g.n // (d + 1)
        limit = 1 << g.n
        m = (1 << size) - 1
        while m < limit:
            c = VertexSet(m, g.n)
            if is_perfect_code(g, c):
                return PerfectCode(c)
            m = _gosper_next(m)
        return None
    for m in range(1, 1 << g.n):
        c = VertexSet(m, g.n)
        if is_perfect_code(g, c):
            return PerfectCode(c)
    return None


def check_kappa_equality(g: Graph, *, cap: int = DEFAULT_CAP) -> bool:
    """Evaluate both sides of the kappa upper-bound equality independently.

    Left side: kappa(G) == n*Delta/(Delta+1) (as exact rationals).  Right
    side: G has a perfect code whose members all have degree Delta.  The
    two sides are computed by unrelated search routines; the function
    reports whether the biconditional holds, which it must for every graph.
    """
    if g.n < 1:
        raise ValueError("equality check requires at least one vertex")
    if g.n > cap:
        raise CapExceededError(
            f"order {g.n} exceeds the enumeration cap {cap}; "
            "pass a larger cap explicitly to proceed"
        )
    delta = max_degree(g)
    lhs = kappa(g, cap=cap).value * (delta + 1) == g.n * delta
    if g.is_regular():
        # every vertex has degree Delta, so the degree restriction is vacuous
        rhs = find_perfect_code(g, cap=cap) is not None
    else:
        full_degree = VertexSet.from_indices(
            g.n, (v for v in range(g.n) if g.degree(v) == delta)
        )
        rhs = False
        sub = full_degree.mask
        while sub:
            if is_perfect_code(g, VertexSet(sub, g.n)):
                rhs = True
                break
            sub = (sub - 1) & full_degree.mask
    return lhs == rhs


def check_kappa_prime_equality(g: Graph, *, cap: int = DEFAULT_CAP) -> bool:
    """Evaluate both sides of the kappa' lower-bound equality independently.

    Requires a delta-regular graph with n/(n-delta) an odd integer; other
    inputs raise PreconditionError.  Left side: kappa'(G) == n/(n-delta).
    Right side: the complement graph has a perfect code.
    """
    if g.n < 1:
        raise ValueError("equality check requires at least one vertex")
    if g.n > cap:
        raise CapExceededError(
            f"order {g.n} exceeds the enumeration cap {cap}; "
            "pass a larger cap explicitly to proceed"
        )
    if not g.is_regular():
        raise PreconditionError("graph is not regular")
    delta = min_degree(g)
    if g.n % (g.n - delta) != 0:
        raise PreconditionError(
            f"n/(n-delta) = {g.n}/{g.n - delta} is not an integer"
        )
    ratio = g.n // (g.n - delta)
    if ratio % 2 == 0:
        raise PreconditionError(f"n/(n-delta) = {ratio} is even")
    lhs = kappa_prime(g, cap=cap).value == ratio
    rhs = find_perfect_code(complement(g), cap=cap) is not None
    return lhs == rhs


def k4_gadget_reduction(g: Graph) -> tuple[Graph, int]:
    """Reduce perfect-code existence in a cubic graph to a kappa' target.

    Returns (H, t) such that g has a perfect code iff kappa'(H) = t.  When
    n/4 is odd, H is the plain complement and t = n/4; when n/4 is even, a
    disjoint K4 is added first (it always carries a perfect code and flips
    the parity of the count), giving t = n/4 + 1.  Cubic graphs with n not
    divisible by 4 cannot have a perfect code at all, so they are rejected
    instead of being given a meaningless target.
    """
    if g.n < 1:
        raise PreconditionError("empty graph is not 3-regular")
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise PreconditionError("graph is not 3-regular")
    if g.n % 4 != 0:
        raise PreconditionError(
            f"a perfect code in a cubic graph has size n/4, impossible for n={g.n}"
        )
    quarter = g.n // 4
    if quarter % 2 == 1:
        return complement(g), quarter
    k4 = complete_multipartite(1, 4)
    return complement(disjoint_union(g, k4)), quarter + 1
