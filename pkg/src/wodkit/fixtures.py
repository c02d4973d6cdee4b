"""Named reference graphs and the frozen small cubic-graph corpus.

CUBIC_GRAPH6 holds every cubic graph (connected or not) on 4, 6, 8, and 10
vertices as graph6 literals, one isomorphism class each: 1, 2, 6, and 21
graphs.  The connected counts (1, 2, 5, 19) match the published
enumeration of connected cubic graphs, and the disconnected entries are
the complete inventory of component splits (4+4 for order 8, 4+6 for
order 10).  The hypercube is among the order-8 entries and the Petersen
graph among the order-10 entries.
"""
from __future__ import annotations

from .graph import Graph, complete_multipartite, parse_graph6

__all__ = [
    "CUBIC_GRAPH6",
    "CUBIC_ORDERS",
    "petersen",
    "q3",
    "k4",
    "k33",
    "prism",
    "cycle",
    "cubic_graphs",
    "all_cubic_graphs",
    "named_fixture",
    "FIXTURE_NAMES",
]

CUBIC_GRAPH6: dict[int, tuple[str, ...]] = {
    4: (
        "C~",
    ),
    6: (
        "Ehuo",
        "ElhW",
    ),
    8: (
        "GLgImG",
        "GU``qW",
        "G`G}eO",
        "GaKkn?",
        "GbdcHS",
        "G~?GW[",
    ),
    10: (
        "I?ub?NOKO",
        "IAiAjQCKG",
        "IBbB@oEaG",
        "ICTacY_Gg",
        "IC`HV@QL?",
        "IGcVAIgDO",
        "IJBCSOsAo",
        "ILQQS?dAo",
        "ILbAOWo?w",
        "IS@hu@GCW",
        "ISOXKPoOo",
        "IUHDOHDEO",
        "IWd?X`P`_",
        "IY_GIiaE_",
        "IdH?YCw`O",
        "Ihd?KObD_",
        "IiGWtA@@g",
        "Iic_PCT`_",
        "IoLSQCo@W",
        "I~?GGCLAo",
        "I~?GGSI@W",
    ),
}

CUBIC_ORDERS = (4, 6, 8, 10)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes i to i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def q3() -> Graph:
    """3-dimensional hypercube: vertices 0..7, edges between masks differing in one bit."""
    edges = [
        (u, v)
        for u in range(8)
        for v in range(u + 1, 8)
        if (u ^ v).bit_count() == 1
    ]
    return Graph.from_edges(8, edges)


def k4() -> Graph:
    return complete_multipartite(1, 4)


def k33() -> Graph:
    return complete_multipartite(3, 2)


def prism() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5 joined by a matching."""
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return Graph.from_edges(6, tri + [(i, i + 3) for i in range(3)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cubic_graphs(n: int) -> list[Graph]:
    """All cubic graphs of order n from the frozen corpus."""
    if n not in CUBIC_GRAPH6:
        raise ValueError(f"no cubic corpus for order {n}, available: {CUBIC_ORDERS}")
    return [parse_graph6(s) for s in CUBIC_GRAPH6[n]]


def all_cubic_graphs() -> list[tuple[int, Graph]]:
    return [(n, g) for n in CUBIC_ORDERS for g in cubic_graphs(n)]


_NAMED = {
    "petersen": petersen,
    "q3": q3,
    "k4": k4,
    "k33": k33,
    "prism": prism,
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
}

FIXTURE_NAMES = tuple(sorted(_NAMED)) + tuple(f"cubic-{n}" for n in CUBIC_ORDERS)


def named_fixture(name: str) -> list[Graph]:
    """Graphs behind a fixture name; cubic-N expands to the whole order-N corpus."""
    if name in _NAMED:
        return [_NAMED[name]()]
    if name.startswith("cubic-"):
        try:
            order = int(name.split("-", 1)[1])
        except ValueError:
            raise ValueError(f"unknown fixture {name!r}") from None
        return cubic_graphs(order)
    raise ValueError(f"unknown fixture {name!r}, available: {', '.join(FIXTURE_NAMES)}")
