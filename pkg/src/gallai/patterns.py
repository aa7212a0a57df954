"""The fixed catalog of small graphs used by the recognizers.

``F1``..``F9`` are the forbidden induced subgraphs for Gallai forests,
``F8minus`` is the exceptional graph whose Gallai graph is a tree although
it is not built from K2/K3/gem blocks, and ``Gem`` is P4 plus a dominating
vertex. Vertex numbering follows the drawing order of each figure.
"""

from __future__ import annotations

from .graph import Graph

_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "F1": (4, [(0, 3), (1, 3), (2, 3)]),
    "F2": (5, [(0, 1), (1, 4), (4, 0), (2, 3), (3, 4), (4, 2)]),
    "F3": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4), (2, 4), (2, 5), (1, 5)]),
    "F4": (6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)]),
    "F5": (6, [(0, 1), (1, 2), (2, 4), (4, 5), (5, 3), (3, 0), (1, 3), (3, 4), (4, 1)]),
    "F6": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5)]),
    "F7": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (2, 6), (3, 6), (4, 6)]),
    "F8": (7, [(0, 1), (1, 2), (2, 3), (3, 6), (6, 5), (5, 4), (4, 0), (4, 1), (1, 5), (5, 2), (2, 6)]),
    "F9": (7, [(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0), (3, 1), (1, 4), (4, 2),
               (1, 6), (6, 2), (3, 6), (6, 4)]),
    # a=0, b=1, e=2, f=3, c=4, d=5
    "F8minus": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 1), (1, 4), (4, 2)]),
    "Gem": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
}

CATALOG: dict[str, Graph] = {name: Graph.from_edges(n, e) for name, (n, e) in _EDGES.items()}

FORBIDDEN: tuple[str, ...] = tuple(f"F{i}" for i in range(1, 10))

F8_MINUS = CATALOG["F8minus"]
GEM = CATALOG["Gem"]
CLAW = CATALOG["F1"]


def forbidden_patterns() -> list[tuple[str, Graph]]:
    return [(name, CATALOG[name]) for name in FORBIDDEN]
