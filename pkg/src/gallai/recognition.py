"""Decision procedures for "the Gallai graph of G is a forest / a tree".

Every public recognizer returns a :class:`~gallai.certificates.Verdict`
whose certificate can be re-checked with :func:`gallai.checks.validate`.
Ties are always broken towards smaller vertex indices, so verdicts are
reproducible byte for byte.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .certificates import (
    BLOCK_SHAPE,
    CUT_VERTEX_BLOCKS,
    CUT_VERTEX_DEGREE,
    GEM_CUT_DEGREE,
    GEM_CUT_VERTICES,
    TRIANGLE_CUT_VERTICES,
    BlockViolation,
    ChordlessCycle,
    GallaiCycle,
    GallaiDisconnection,
    NonIndependentHomogeneousSet,
    Ok,
    PatternEmbedding,
    Verdict,
)
from .graph import (
    Edge,
    Graph,
    VertexSet,
    bits,
    component_masks,
    find_cycle,
    induced_subgraph,
    is_connected,
    is_isomorphic_small,
    is_tree,
)
from .operators import gallai
from .patterns import CATALOG, F8_MINUS, FORBIDDEN, GEM

PATTERN_CAP = 8


class RecognitionError(ValueError):
    """Input violates a recognizer's precondition."""


class Route(str, enum.Enum):
    DIRECT = "direct"
    CHARACTERIZATION = "characterization"
    STRUCTURAL = "structural"


# -- chordality -------------------------------------------------------------


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order, starting from vertex 0.

    Labels are kept as integers: a vertex visited at step ``i`` adds bit
    ``n - i`` to each unvisited neighbour, so integer comparison is the
    lexicographic comparison of the label sequences. Ties go to the
    smallest vertex index.
    """
    n = g.n
    label = [0] * n
    unvisited = (1 << n) - 1
    order = []
    for step in range(n):
        best = -1
        best_label = -1
        for v in bits(unvisited):
            if label[v] > best_label:
                best, best_label = v, label[v]
        order.append(best)
        unvisited ^= 1 << best
        weight = 1 << (n - step)
        for w in bits(g.adj[best] & unvisited):
            label[w] |= weight
    return order


def _chordless_cycle_through(g: Graph, v: int, p: int, w: int) -> list[int] | None:
    """Cycle ``v, p, ..., w`` closed by a shortest ``p``-``w`` path avoiding N[v] - {p, w}.

    ``p`` and ``w`` must be non-adjacent neighbours of ``v``.
    """
    allowed = ((1 << g.n) - 1) & ~(g.adj[v] | (1 << v)) | (1 << p) | (1 << w)
    prev = {p: -1}
    frontier = [p]
    seen = 1 << p
    while frontier:
        nxt = []
        for x in frontier:
            for y in bits(g.adj[x] & allowed & ~seen):
                seen |= 1 << y
                prev[y] = x
                if y == w:
                    path = [w]
                    while path[-1] != p:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return [v] + path
                nxt.append(y)
        frontier = nxt
    return None


def find_chordless_cycle(g: Graph, failure: tuple[int, int, int] | None = None) -> list[int] | None:
    """Some induced cycle of length at least 4, or ``None`` if ``g`` is chordal.

    ``failure`` is an elimination-check failure triple to start from, if
    the caller already has one.
    """
    if failure is None:
        _, failure = _check_elimination(g, lex_bfs(g))
    if failure is not None:
        cycle = _chordless_cycle_through(g, *failure)
        if cycle is not None:
            return cycle
    # exhaustive fallback, only reached if the fast path did not produce a cycle
    for v in range(g.n):
        nb = g.neighbors(v)
        for i, p in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.has_edge(p, w):
                    cycle = _chordless_cycle_through(g, v, p, w)
                    if cycle is not None:
                        return cycle
    return None


def _check_elimination(g: Graph, order: list[int]) -> tuple[bool, tuple[int, int, int] | None]:
    """Check that each vertex's earlier-visited neighbours form a clique.

    On failure returns ``(v, p, w)``: ``p`` is the latest-visited earlier
    neighbour of ``v`` and ``w`` another earlier neighbour not adjacent to ``p``.
    """
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier_mask = 0
    for v in order:
        earlier = g.adj[v] & earlier_mask
        if earlier:
            p = max(bits(earlier), key=pos.__getitem__)
            rest = earlier & ~(1 << p) & ~g.adj[p]
            if rest:
                return False, (v, p, bits(rest)[0])
        earlier_mask |= 1 << v
    return True, None


def is_chordal(g: Graph) -> Verdict:
    """Chordality via Lex-BFS; the Ok certificate carries a perfect elimination ordering."""
    order = lex_bfs(g)
    ok, failure = _check_elimination(g, order)
    if ok:
        return Verdict(True, Ok(tuple(reversed(order))), "chordal")
    cycle = find_chordless_cycle(g, failure)
    assert cycle is not None
    return Verdict(False, ChordlessCycle(tuple(cycle)), "chordal")


# -- induced patterns ------------------------------------------------------


def find_induced_pattern(g: Graph, p: Graph) -> tuple[int, ...] | None:
    """Lexicographically least injective map V(p) -> V(g) that is an induced embedding."""
    k = p.n
    if k > PATTERN_CAP:
        raise RecognitionError(f"pattern has {k} vertices; the cap is {PATTERN_CAP}")
    if k > g.n:
        return None
    gadj = g.adj
    full = (1 << g.n) - 1
    pdeg = p.degrees()
    # candidates with enough degree for each pattern vertex
    deg_ok = []
    for i in range(k):
        m = 0
        for v in range(g.n):
            if gadj[v].bit_count() >= pdeg[i]:
                m |= 1 << v
        deg_ok.append(m)
    # for pattern vertex i, which earlier pattern vertices are adjacent
    back = [[(j, p.has_edge(i, j)) for j in range(i)] for i in range(k)]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = deg_ok[i] & ~used
        for j, adjacent in back[i]:
            cand &= gadj[image[j]] if adjacent else full & ~gadj[image[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def find_forbidden_pattern(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """First of F1..F9 (in catalog order) occurring as an induced subgraph."""
    for name in FORBIDDEN:
        found = find_induced_pattern(g, CATALOG[name])
        if found is not None:
            return name, found
    return None


def is_gallai_forest(g: Graph) -> Verdict:
    """Decide whether the Gallai graph of ``g`` is a forest without building it.

    True exactly for chordal graphs with no induced F1..F9.
    """
    chordal = is_chordal(g)
    if not chordal.answer:
        return Verdict(False, chordal.certificate, "forest")
    hit = find_forbidden_pattern(g)
    if hit is not None:
        return Verdict(False, PatternEmbedding(*hit), "forest")
    return Verdict(True, Ok(), "forest")


# -- homogeneous sets ------------------------------------------------------


def homogeneous_closure(g: Graph, seed: int) -> int:
    """Smallest homogeneous set (as a bitmask) containing the vertex mask ``seed``."""
    u = seed
    full = (1 << g.n) - 1
    adj = g.adj
    grew = True
    while grew:
        grew = False
        outside = full & ~u
        while outside:
            low = outside & -outside
            outside ^= low
            hit = adj[low.bit_length() - 1] & u
            if hit and hit != u:
                u |= low
                grew = True
    return u


def is_homogeneous(g: Graph, members: int) -> bool:
    outside = ((1 << g.n) - 1) & ~members
    for x in bits(outside):
        hit = g.adj[x] & members
        if hit and hit != members:
            return False
    return True


def find_bad_homogeneous_set(g: Graph) -> tuple[VertexSet, Edge] | None:
    """A non-trivial homogeneous set containing an edge, with that edge.

    Edges are tried in canonical order; the first whose homogeneous closure
    is a proper subset of V(g) wins.
    """
    full = (1 << g.n) - 1
    for e in g.edges():
        closure = homogeneous_closure(g, (1 << e.u) | (1 << e.v))
        if closure != full:
            return tuple(bits(closure)), e
    return None


# -- blocks ----------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks as sorted vertex tuples; ``incidence`` maps each cut-vertex to its block indices."""

    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet
    incidence: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def blocks_of(self, v: int) -> tuple[int, ...]:
        return self.incidence.get(v, ())


def biconnected_blocks(g: Graph) -> list[VertexSet]:
    """Blocks of ``g`` (any graph) as sorted vertex tuples; isolated vertices are skipped.

    Iterative Hopcroft-Tarjan over an edge stack.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[VertexSet] = []
    clock = 0
    for root in range(n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    members = 0
                    while True:
                        a, b = edge_stack.pop()
                        members |= (1 << a) | (1 << b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(tuple(bits(members)))
    return blocks


def _min_edge(g: Graph, block: VertexSet) -> tuple[int, int]:
    inside = 0
    for v in block:
        inside |= 1 << v
    for u in block:
        rest = g.adj[u] & inside & ~((1 << (u + 1)) - 1)
        if rest:
            return (u, bits(rest)[0])
    return (block[0], block[0])


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Block decomposition of a connected graph, blocks ordered by least edge."""
    if not is_connected(g):
        raise RecognitionError("block_cut_tree needs a connected graph")
    if g.n == 1:
        return BlockCutTree(((0,),), (), {})
    blocks = sorted(biconnected_blocks(g), key=lambda b: _min_edge(g, b))
    where: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            where.setdefault(v, []).append(i)
    cuts = tuple(sorted(v for v, bs in where.items() if len(bs) >= 2))
    return BlockCutTree(tuple(blocks), cuts, {v: tuple(where[v]) for v in cuts})


# -- Gallai trees ----------------------------------------------------------


def _require_no_isolated(g: Graph) -> None:
    if g.n == 0:
        raise RecognitionError("the null graph has no Gallai tree question")
    for v, nb in enumerate(g.adj):
        if not nb:
            raise RecognitionError(f"vertex {v} is isolated")


def _block_kind(g: Graph, block: VertexSet) -> str | None:
    size = len(block)
    if size == 2:
        return "K2"
    if size == 3:
        h = induced_subgraph(g, block)
        return "K3" if h.m == 3 else None
    if size == 5:
        h = induced_subgraph(g, block)
        return "Gem" if h.m == 7 and is_isomorphic_small(h, GEM) else None
    return None


def _disconnection(g: Graph) -> GallaiDisconnection:
    """Least edge of each of the first two components (``g`` has no isolated vertices)."""
    picked = []
    for c in component_masks(g)[:2]:
        u = bits(c)[0]
        picked.append(Edge.of(u, bits(g.adj[u])[0]))
    return GallaiDisconnection(picked[0], picked[1])


def is_gallai_tree_structural(g: Graph) -> Verdict:
    """Decide "Gallai graph is a tree" from the block structure of ``g``.

    Accepts F8minus outright; otherwise ``g`` must be connected with blocks
    K2, K3 or gem, cut-vertices in at most two blocks and of degree at most
    three, K3-blocks with exactly two cut-vertices, and gem-blocks with
    exactly one cut-vertex of degree two inside the gem.
    """
    _require_no_isolated(g)
    q, r = "tree", Route.STRUCTURAL.value
    if g.n == F8_MINUS.n and g.m == F8_MINUS.m and is_isomorphic_small(g, F8_MINUS):
        return Verdict(True, Ok(), q, r)
    if not is_connected(g):
        return Verdict(False, _disconnection(g), q, r)
    bct = block_cut_tree(g)
    kinds = []
    for b in bct.blocks:
        kind = _block_kind(g, b)
        if kind is None:
            return Verdict(False, BlockViolation(b, BLOCK_SHAPE), q, r)
        kinds.append(kind)
    for c in bct.cut_vertices:
        first = bct.blocks[bct.blocks_of(c)[0]]
        if len(bct.blocks_of(c)) > 2:
            return Verdict(False, BlockViolation(first, CUT_VERTEX_BLOCKS, c), q, r)
        if g.degree(c) > 3:
            return Verdict(False, BlockViolation(first, CUT_VERTEX_DEGREE, c), q, r)
    cut_mask = 0
    for c in bct.cut_vertices:
        cut_mask |= 1 << c
    for b, kind in zip(bct.blocks, kinds):
        cuts = [v for v in b if cut_mask >> v & 1]
        if kind == "K3" and len(cuts) != 2:
            return Verdict(False, BlockViolation(b, TRIANGLE_CUT_VERTICES), q, r)
        if kind == "Gem":
            if len(cuts) != 1:
                return Verdict(False, BlockViolation(b, GEM_CUT_VERTICES), q, r)
            inside = 0
            for v in b:
                inside |= 1 << v
            if (g.adj[cuts[0]] & inside).bit_count() != 2:
                return Verdict(False, BlockViolation(b, GEM_CUT_DEGREE, cuts[0]), q, r)
    return Verdict(True, Ok(), q, r)


def _gallai_tree_direct(g: Graph) -> Verdict:
    q, r = "tree", Route.DIRECT.value
    lg = gallai(g)
    if is_tree(lg.graph):
        return Verdict(True, Ok(), q, r)
    cycle = find_cycle(lg.graph)
    if cycle is not None:
        return Verdict(False, GallaiCycle(tuple(lg.labels[i] for i in cycle)), q, r)
    comps = component_masks(lg.graph)
    a, b = (bits(c)[0] for c in comps[:2])
    return Verdict(False, GallaiDisconnection(lg.labels[a], lg.labels[b]), q, r)


def _gallai_tree_characterization(g: Graph) -> Verdict:
    q, r = "tree", Route.CHARACTERIZATION.value
    forest = is_gallai_forest(g)
    if not forest.answer:
        return Verdict(False, forest.certificate, q, r)
    bad = find_bad_homogeneous_set(g)
    if bad is not None:
        return Verdict(False, NonIndependentHomogeneousSet(*bad), q, r)
    return Verdict(True, Ok(), q, r)


def is_gallai_tree(g: Graph, route: Route | str = Route.DIRECT) -> Verdict:
    """Decide whether the Gallai graph of ``g`` is a tree.

    ``direct`` builds the Gallai graph; ``characterization`` combines the
    forest test with the homogeneous-set test; ``structural`` inspects blocks.
    ``g`` must have at least one vertex and no isolated vertices.
    """
    route = Route(route)
    _require_no_isolated(g)
    if route is Route.DIRECT:
        return _gallai_tree_direct(g)
    if route is Route.CHARACTERIZATION:
        return _gallai_tree_characterization(g)
    return is_gallai_tree_structural(g)


def gallai_forest_direct(g: Graph) -> Verdict:
    """Forest question answered by building the Gallai graph, with a cycle certificate."""
    lg = gallai(g)
    cycle = find_cycle(lg.graph)
    if cycle is None:
        return Verdict(True, Ok(), "forest", Route.DIRECT.value)
    return Verdict(False, GallaiCycle(tuple(lg.labels[i] for i in cycle)), "forest", Route.DIRECT.value)


__all__ = [
    "BlockCutTree",
    "RecognitionError",
    "Route",
    "biconnected_blocks",
    "block_cut_tree",
    "find_bad_homogeneous_set",
    "find_chordless_cycle",
    "find_forbidden_pattern",
    "find_induced_pattern",
    "gallai_forest_direct",
    "homogeneous_closure",
    "is_chordal",
    "is_gallai_forest",
    "is_gallai_tree",
    "is_gallai_tree_structural",
    "is_homogeneous",
    "lex_bfs",
]
