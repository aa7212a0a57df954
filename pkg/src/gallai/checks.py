"""Independent re-validation of certificates against their input graph.

These checks deliberately avoid the search code that produced the
certificates; each one only inspects the claimed witness.
"""

from __future__ import annotations

from .certificates import (
    BLOCK_CONDITIONS,
    BlockViolation,
    Certificate,
    ChordlessCycle,
    GallaiCycle,
    GallaiDisconnection,
    NonIndependentHomogeneousSet,
    Ok,
    PatternEmbedding,
    Verdict,
)
from .graph import Graph, component_masks, mask_of
from .operators import gallai
from .patterns import CATALOG


def is_induced_cycle(g: Graph, cycle: tuple[int, ...] | list[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or not all(0 <= v < g.n for v in cycle):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def is_induced_embedding(g: Graph, p: Graph, mapping: tuple[int, ...] | list[int]) -> bool:
    if len(mapping) != p.n or len(set(mapping)) != p.n:
        return False
    if not all(0 <= v < g.n for v in mapping):
        return False
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if p.has_edge(i, j) != g.has_edge(mapping[i], mapping[j]):
                return False
    return True


def is_elimination_ordering(g: Graph, ordering: tuple[int, ...]) -> bool:
    """Each vertex's neighbours later in ``ordering`` are pairwise adjacent."""
    if sorted(ordering) != list(range(g.n)):
        return False
    later = (1 << g.n) - 1
    for v in ordering:
        later &= ~(1 << v)
        nb = [w for w in range(g.n) if later >> w & 1 and g.has_edge(v, w)]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not g.has_edge(a, b):
                    return False
    return True


def _homogeneous(g: Graph, members: set[int]) -> bool:
    for x in range(g.n):
        if x in members:
            continue
        hits = {g.has_edge(x, u) for u in members}
        if len(hits) > 1:
            return False
    return True


def _gallai_adjacent(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    shared = set(e) & set(f)
    if len(shared) != 1:
        return False
    (a,) = set(e) - shared
    (b,) = set(f) - shared
    return not g.has_edge(a, b)


def validate(g: Graph, cert: Certificate) -> bool:
    """Does ``cert`` witness what it claims about ``g``?

    ``Ok`` is valid on its own unless it carries an elimination ordering,
    which is then checked.
    """
    if isinstance(cert, Ok):
        return cert.ordering is None or is_elimination_ordering(g, cert.ordering)
    if isinstance(cert, ChordlessCycle):
        return is_induced_cycle(g, cert.cycle)
    if isinstance(cert, PatternEmbedding):
        p = CATALOG.get(cert.pattern)
        return p is not None and is_induced_embedding(g, p, cert.mapping)
    if isinstance(cert, NonIndependentHomogeneousSet):
        members = set(cert.members)
        u, v = cert.edge
        return (
            2 <= len(members) < g.n
            and all(0 <= x < g.n for x in members)
            and u in members
            and v in members
            and g.has_edge(u, v)
            and _homogeneous(g, members)
        )
    if isinstance(cert, GallaiCycle):
        edges = cert.edges
        k = len(edges)
        if k < 3 or len(set(edges)) != k:
            return False
        if not all(g.has_edge(*e) for e in edges):
            return False
        return all(_gallai_adjacent(g, edges[i], edges[(i + 1) % k]) for i in range(k))
    if isinstance(cert, GallaiDisconnection):
        if not (g.has_edge(*cert.first) and g.has_edge(*cert.second)):
            return False
        lg = gallai(g)
        a, b = lg.labels.index(cert.first), lg.labels.index(cert.second)
        return not any(c >> a & 1 and c >> b & 1 for c in component_masks(lg.graph))
    if isinstance(cert, BlockViolation):
        return _validate_block_violation(g, cert)
    return False


def _validate_block_violation(g: Graph, cert: BlockViolation) -> bool:
    # local import: the block decomposition is shared plumbing, not the claim under test
    from .graph import induced_subgraph, is_connected, is_isomorphic_small
    from .patterns import GEM
    from .recognition import block_cut_tree

    if cert.condition not in BLOCK_CONDITIONS or not is_connected(g):
        return False
    bct = block_cut_tree(g)
    if tuple(cert.block) not in bct.blocks:
        return False
    block = cert.block
    h = induced_subgraph(g, block)
    is_k3 = len(block) == 3 and h.m == 3
    is_gem = len(block) == 5 and is_isomorphic_small(h, GEM)
    cuts = [v for v in block if v in bct.cut_vertices]
    c = cert.vertex
    if cert.condition == "block-shape":
        return len(block) != 2 and not is_k3 and not is_gem
    if cert.condition == "cut-vertex-blocks":
        return c in bct.cut_vertices and c in block and len(bct.blocks_of(c)) > 2
    if cert.condition == "cut-vertex-degree":
        return c in bct.cut_vertices and c in block and g.degree(c) > 3
    if cert.condition == "triangle-cut-vertices":
        return is_k3 and len(cuts) != 2
    if cert.condition == "gem-cut-vertices":
        return is_gem and len(cuts) != 1
    # gem-cut-degree
    return (
        is_gem
        and cuts == [c]
        and (g.adj[c] & mask_of(block)).bit_count() != 2
    )


def validate_verdict(g: Graph, verdict: Verdict) -> bool:
    """Certificate is valid and its kind is consistent with the answer."""
    if verdict.answer != isinstance(verdict.certificate, Ok):
        return False
    return validate(g, verdict.certificate)
