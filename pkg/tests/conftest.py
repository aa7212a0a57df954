"""Brute-force oracles shared by the test modules.

These are deliberately naive (enumerate permutations / subsets) and share
no code with the library's search routines.
"""

from __future__ import annotations

import itertools

import pytest

from gallai.graph import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    eg = {frozenset(e) for e in g.edges()}
    eh = {frozenset(e) for e in h.edges()}
    if len(eg) != len(eh):
        return False
    for perm in itertools.permutations(range(g.n)):
        if {frozenset((perm[u], perm[v])) for u, v in eg} == eh:
            return True
    return False


def induces_cycle(g: Graph, subset: tuple[int, ...]) -> bool:
    """Does ``subset`` (size >= 4) induce a chordless cycle?"""
    if len(subset) < 4:
        return False
    inside = set(subset)
    for v in subset:
        if sum(1 for w in g.neighbors(v) if w in inside) != 2:
            return False
    # 2-regular: a cycle iff connected
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == inside


def brute_chordal(g: Graph) -> bool:
    for k in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if induces_cycle(g, subset):
                return False
    return True


def brute_homogeneous_sets(g: Graph) -> list[frozenset[int]]:
    """All non-trivial homogeneous sets."""
    out = []
    for k in range(2, g.n):
        for subset in itertools.combinations(range(g.n), k):
            s = set(subset)
            if all(
                len({g.has_edge(x, u) for u in s}) == 1 for x in range(g.n) if x not in s
            ):
                out.append(frozenset(s))
    return out


def brute_gallai_edges(g: Graph) -> set[frozenset[tuple[int, int]]]:
    """Gallai adjacency straight from the definition, over all pairs of edges."""
    edges = [tuple(e) for e in g.edges()]
    out = set()
    for e, f in itertools.combinations(edges, 2):
        shared = set(e) & set(f)
        if len(shared) != 1:
            continue
        (a,) = set(e) - shared
        (b,) = set(f) - shared
        if not g.has_edge(a, b):
            out.add(frozenset((e, f)))
    return out


def star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


TRIANGLE_TWO_PENDANTS = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


@pytest.fixture
def p4() -> Graph:
    return Graph.path(4)


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
