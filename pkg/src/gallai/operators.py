"""Line graph, Gallai graph and anti-Gallai graph, all labelled by source edges."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Edge, Graph, bits, complement, induced_subgraph, mask_of


@dataclass(frozen=True)
class LabeledGraph:
    """A graph on the edges of ``source``; vertex ``i`` is the ``i``-th source edge."""

    graph: Graph
    labels: tuple[Edge, ...]
    source_n: int

    def index_of(self, e: tuple[int, int]) -> int:
        return self.labels.index(Edge.of(*e))

    def restrict(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced by the vertices in ``keep`` (ascending relabelling)."""
        return induced_subgraph(self.graph, keep)


_LINE, _GALLAI, _ANTI = 0, 1, 2


def _derived(g: Graph, mode: int) -> LabeledGraph:
    adj = g.adj
    edges = g.edges()
    eid = [dict() for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        eid[u][v] = i
        eid[v][u] = i
    out = [0] * len(edges)
    for v in range(g.n):
        nb = bits(adj[v])
        ids = eid[v]
        for a_pos, a in enumerate(nb):
            ea = ids[a]
            row = adj[a]
            for b in nb[a_pos + 1:]:
                if mode != _LINE:
                    triangle = row >> b & 1
                    if (mode == _GALLAI) == bool(triangle):
                        continue
                eb = ids[b]
                out[ea] |= 1 << eb
                out[eb] |= 1 << ea
    return LabeledGraph(Graph(out, check=False), tuple(edges), g.n)


def line_graph(g: Graph) -> LabeledGraph:
    """Edges of ``g`` as vertices, adjacent when they share an endpoint."""
    return _derived(g, _LINE)


def gallai(g: Graph) -> LabeledGraph:
    """Edges sharing an endpoint whose other ends are non-adjacent (no spanned triangle)."""
    return _derived(g, _GALLAI)


def anti_gallai(g: Graph) -> LabeledGraph:
    """Edges sharing an endpoint that lie in a common triangle."""
    return _derived(g, _ANTI)


def gallai_adjacency(g: Graph) -> list[int]:
    """Bitmask adjacency of the Gallai graph without building label objects.

    Same vertex numbering as :func:`gallai`; used on the hot path of the
    exhaustive sweeps.
    """
    adj = g.adj
    n = g.n
    eid = [[0] * n for _ in range(n)]
    m = 0
    for u in range(n):
        row = adj[u] >> (u + 1)
        v = u + 1
        while row:
            if row & 1:
                eid[u][v] = eid[v][u] = m
                m += 1
            row >>= 1
            v += 1
    out = [0] * m
    for v in range(n):
        nb = bits(adj[v])
        ids = eid[v]
        for a_pos, a in enumerate(nb):
            ea = ids[a]
            row = adj[a]
            for b in nb[a_pos + 1:]:
                if not row >> b & 1:
                    eb = ids[b]
                    out[ea] |= 1 << eb
                    out[eb] |= 1 << ea
    return out


def apex_embedding(h: Graph) -> tuple[Graph, int]:
    """Realise ``h`` inside a Gallai graph.

    Returns ``(G, x)`` where ``x = h.n`` is joined to every vertex of ``h``
    and ``G - x`` is the complement of ``h``. In ``gallai(G)`` the edges
    ``xv`` induce a copy of ``h`` under ``xv -> v``.
    """
    co = complement(h)
    x = h.n
    full = (1 << h.n) - 1
    adj = [nb | (1 << x) for nb in co.adj] + [full]
    return Graph(adj, check=False), x


def apex_restriction(g: Graph, apex: int) -> Graph:
    """Subgraph of ``gallai(g)`` on the edges at ``apex``, vertex ``i`` = ``i``-th neighbour."""
    lg = gallai(g)
    keep = [i for i, e in enumerate(lg.labels) if apex in e]
    return lg.restrict(keep)


def labels_inside(lg: LabeledGraph, s: Iterable[int]) -> list[int]:
    """Derived-graph vertices whose source edge has both ends in ``s``."""
    m = mask_of(s)
    return [i for i, (u, v) in enumerate(lg.labels) if m >> u & 1 and m >> v & 1]
