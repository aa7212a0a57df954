"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so adjacency tests
are a shift-and-mask and neighbourhood intersections are a single ``&``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import NamedTuple

MAX_VERTICES = 1 << 16
ISOMORPHISM_CAP = 10

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised for structurally invalid graphs or out-of-range vertex sets."""


class Edge(NamedTuple):
    """An undirected edge, always stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def label(self) -> str:
        return f"{self.u}-{self.v}"


def _bits_slow(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_SMALL = 1 << 12
_BITS_TABLE = [_bits_slow(m) for m in range(_SMALL)]


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in ascending order."""
    if mask < _SMALL:
        return _BITS_TABLE[mask]
    return _bits_slow(mask)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    Build one with :meth:`from_edges` or directly from a sequence of
    neighbourhood bitmasks (validated for symmetry and loop-freeness).
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, adj: Sequence[int], *, check: bool = True) -> None:
        adj = tuple(adj)
        n = len(adj)
        if check:
            if n > MAX_VERTICES:
                raise GraphError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
            full = (1 << n) - 1
            for v, nb in enumerate(adj):
                if nb & ~full:
                    raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
                if nb >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                for u in bits(nb):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise GraphError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj, check=False)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls([0] * n, check=False)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls([full ^ (1 << v) for v in range(n)], check=False)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges in canonical order, sorted by ``(u, v)`` with ``u < v``."""
        out = []
        for u, nb in enumerate(self.adj):
            for v in bits(nb >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in ascending order."""
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        nb = 0
        for w in bits(g.adj[v] & mask_of(members)):
            nb |= 1 << index[w]
        adj.append(nb)
    return Graph(adj, check=False)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph([full ^ nb ^ (1 << v) for v, nb in enumerate(g.adj)], check=False)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v, nb in enumerate(g.adj):
        m = 0
        for w in bits(nb):
            m |= 1 << perm[w]
        adj[perm[v]] = m
    return Graph(adj, check=False)


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by their least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = g.adj[low.bit_length() - 1] & ~comp
            comp |= fresh
            frontier |= fresh
        seen |= comp
        out.append(comp)
    return out


def connected_components(g: Graph) -> list[VertexSet]:
    return [tuple(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component (the null graph is not connected)."""
    return g.n > 0 and component_masks(g)[0] == (1 << g.n) - 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def find_cycle(g: Graph) -> list[int] | None:
    """Vertices of some cycle of ``g`` in traversal order, or ``None`` for a forest.

    Uses a DFS from the lowest-indexed vertex of each component; the first
    back edge closes the reported cycle.
    """
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == parent[v]:
                    continue
                if depth[w] < 0:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    stack.append((w, iter(g.neighbors(w))))
                    break
                if depth[w] < depth[v]:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return cycle
            else:
                stack.pop()
    return None


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs with at most ``ISOMORPHISM_CAP`` vertices."""
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or ``None``.

    Backtracks over degree-compatible assignments in vertex order.
    """
    if g.n > ISOMORPHISM_CAP or h.n > ISOMORPHISM_CAP:
        raise GraphError(f"isomorphism test is capped at {ISOMORPHISM_CAP} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return None
    n = g.n
    phi = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(v + 1):
                return True
            used ^= 1 << w
        phi[v] = -1
        return False

    return list(phi) if extend(0) else None
