"""Exhaustive small-graph sweeps that cross-check the recognizers.

Each sweep enumerates every graph up to ``n_max`` vertices (labelled by
default, one per isomorphism class with ``dedup=True``), evaluates two or
more independent routes to the same answer and records every graph on
which they disagree.

Work is cut into fixed-size chunks of the bit-vector range and the chunk
results are merged in range order, so the report does not depend on the
number of worker processes.
"""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .formats import from_bitvector, pair_index, parse_graph6, to_bitvector, to_graph6
from .graph import Graph, bits, component_masks, induced_subgraph, is_forest, is_isomorphic_small
from .operators import apex_embedding, apex_restriction, gallai, gallai_adjacency, labels_inside
from .recognition import Route, find_bad_homogeneous_set, is_gallai_forest, is_gallai_tree

LABELED_CAP = 8
DEDUP_CAP = 9
CHUNK = 1 << 14


class HarnessError(ValueError):
    pass


@dataclass
class Mismatch:
    graph6: str
    question: str
    answers: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "question": self.question, "answers": self.answers}


@dataclass
class CrosscheckReport:
    question: str
    n_max: int
    graphs_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "graphs": self.graphs_checked,
            "mismatches": len(self.mismatches),
            "ms": round(self.elapsed * 1000),
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps(m.to_dict(), separators=(",", ":")) for m in self.mismatches]
        lines.append(json.dumps(self.summary(), separators=(",", ":")))
        return "\n".join(lines) + "\n"


# -- enumeration -----------------------------------------------------------


def _canonical_search(g: Graph, bound: int, stop_below: bool) -> int:
    """Least bit-vector over all relabellings of ``g`` that is below ``bound``.

    Positions are filled from ``n - 1`` down to ``0``; a partial assignment
    is pruned when a lower bound on every completion reaches ``bound``.
    With ``stop_below`` the search returns as soon as anything smaller than
    ``bound`` turns up. Returns ``bound`` itself if nothing smaller exists.
    """
    n = g.n
    adj = g.adj
    best = bound
    at = [0] * n

    # lowest possible contribution of r still-unknown bits in row k
    row_floor = [[0] * (n + 1) for _ in range(n)]
    for k in range(n):
        acc = 0
        for r in range(1, k + 1):
            acc |= 1 << pair_index(r - 1, k)
            row_floor[k][r] = acc

    def search(p: int, free: int, known: int) -> bool:
        nonlocal best
        if p < 0:
            if known < best:
                best = known
                return stop_below
            return False
        options = []
        for v in bits(free):
            at[p] = v
            value = known
            nb = adj[v]
            for k in range(p + 1, n):
                if nb >> at[k] & 1:
                    value |= 1 << pair_index(p, k)
            rest = free & ~(1 << v)
            floor = value
            for k in range(p + 1, n):
                floor |= row_floor[k][(adj[at[k]] & rest).bit_count()]
            floor |= row_floor[p][(nb & rest).bit_count()]
            inner = 0
            for u in bits(rest):
                inner += (adj[u] & rest).bit_count()
            floor += (1 << (inner // 2)) - 1
            if floor < best:
                options.append((floor, v, value, rest))
        # best-first, so the first leaf is already close to the minimum
        options.sort()
        for floor, v, value, rest in options:
            if floor >= best:
                break
            at[p] = v
            if search(p - 1, rest, value):
                return True
        return False

    search(n - 1, (1 << n) - 1, 0)
    return best


def canonical_bitvector(g: Graph) -> int:
    """Minimum bit-vector over all relabellings of ``g``."""
    own = to_bitvector(g)
    return _canonical_search(g, own, stop_below=False)


def is_canonical(g: Graph) -> bool:
    own = to_bitvector(g)
    return _canonical_search(g, own, stop_below=True) == own


@lru_cache(maxsize=None)
def _canonical_reps(n: int) -> tuple[int, ...]:
    """Bit-vectors of the canonical representatives on ``n`` vertices, ascending.

    Every graph on ``n`` vertices is an ``(n-1)``-vertex graph plus one of
    its minimum-degree vertices, so it suffices to extend each smaller
    representative by a new vertex whose degree is minimum in the result.
    """
    if n <= 1:
        return (0,)
    found = set()
    shift = (n - 1) * (n - 2) // 2
    for base in _canonical_reps(n - 1):
        deg = from_bitvector(n - 1, base).degrees()
        for row in range(1 << (n - 1)):
            d = row.bit_count()
            if any(deg[u] + (row >> u & 1) < d for u in range(n - 1)):
                continue
            found.add(canonical_bitvector(from_bitvector(n, base | (row << shift))))
    return tuple(sorted(found))


def _bitvectors(n: int, dedup: bool) -> tuple[int, ...] | range:
    if n < 0:
        raise HarnessError("vertex count must be non-negative")
    if dedup:
        if n > DEDUP_CAP:
            raise HarnessError(f"dedup enumeration is capped at n={DEDUP_CAP}")
        return _canonical_reps(n)
    if n > LABELED_CAP:
        raise HarnessError(f"labelled enumeration is capped at n={LABELED_CAP}")
    return range(1 << (n * (n - 1) // 2))


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All graphs on ``n`` vertices in ascending bit-vector order.

    Labelled mode yields every adjacency bit-vector once; dedup mode yields
    the minimum bit-vector of each isomorphism class.
    """
    for x in _bitvectors(n, dedup):
        yield from_bitvector(n, x)


# -- per-graph checks ------------------------------------------------------


def _has_isolated(g: Graph) -> bool:
    return 0 in g.adj


def check_theorem1(g: Graph) -> dict[str, Any] | None:
    direct = is_forest(Graph(gallai_adjacency(g), check=False))
    characterization = is_gallai_forest(g).answer
    return {"direct": direct, "characterization": characterization}


def check_theorem2(g: Graph) -> dict[str, Any] | None:
    if g.n == 0 or _has_isolated(g):
        return None
    return {r.value: is_gallai_tree(g, r).answer for r in Route}


def check_prop1(g: Graph) -> dict[str, Any] | None:
    if g.n == 0 or _has_isolated(g):
        return None
    gamma = Graph(gallai_adjacency(g), check=False)
    connected = len(component_masks(gamma)) <= 1
    independent = find_bad_homogeneous_set(g) is None
    return {"gallai_connected": connected, "homogeneous_sets_independent": independent}


def heredity_holds(g: Graph, subset: int) -> bool:
    """Gallai graph of ``g[S]`` equals the induced part of Gallai(g) under the label map."""
    members = bits(subset)
    small = gallai(induced_subgraph(g, members))
    big = gallai(g)
    keep = labels_inside(big, members)
    mapped = [(members[u], members[v]) for u, v in small.labels]
    if mapped != [tuple(big.labels[i]) for i in keep]:
        return False
    return small.graph == big.restrict(keep)


def check_heredity(g: Graph) -> dict[str, Any] | None:
    for subset in range(1 << g.n):
        if not heredity_holds(g, subset):
            return {"subset": list(bits(subset)), "holds": False, "expected": True}
    return {"holds": True, "expected": True}


def embedding_holds(h: Graph) -> bool:
    g, apex = apex_embedding(h)
    restricted = apex_restriction(g, apex)
    return restricted == h and is_isomorphic_small(restricted, h)


def check_embedding(h: Graph) -> dict[str, Any] | None:
    return {"holds": embedding_holds(h), "expected": True}


@dataclass(frozen=True)
class _Question:
    name: str
    check: Callable[[Graph], dict[str, Any] | None]
    labeled_cap: int
    dedup_cap: int
    dedup_default: bool = False


QUESTIONS: dict[str, _Question] = {
    "thm1": _Question("thm1", check_theorem1, 7, 8),
    "thm2": _Question("thm2", check_theorem2, 7, 8),
    "prop1": _Question("prop1", check_prop1, 7, 8),
    "heredity": _Question("heredity", check_heredity, 6, 6),
    "embedding": _Question("embedding", check_embedding, 5, 5, dedup_default=True),
}


def _disagrees(answers: dict[str, Any]) -> bool:
    values = list(answers.values()) if "expected" not in answers else [answers["holds"], answers["expected"]]
    return any(v != values[0] for v in values[1:])


def _sweep_chunk(name: str, n: int, xs: tuple[int, ...] | range) -> tuple[int, list[Mismatch]]:
    check = QUESTIONS[name].check
    count = 0
    found = []
    for x in xs:
        g = from_bitvector(n, x)
        answers = check(g)
        if answers is None:
            continue
        count += 1
        if _disagrees(answers):
            found.append(Mismatch(to_graph6(g), name, answers))
    return count, found


def crosscheck(
    name: str,
    n_max: int,
    dedup: bool | None = None,
    workers: int = 1,
    n_min: int = 1,
) -> CrosscheckReport:
    """Run the sweep ``name`` over all graphs with ``n_min..n_max`` vertices."""
    if name not in QUESTIONS:
        raise HarnessError(f"unknown cross-check {name!r}; choose from {', '.join(QUESTIONS)}")
    q = QUESTIONS[name]
    if dedup is None:
        dedup = q.dedup_default
    cap = q.dedup_cap if dedup else q.labeled_cap
    if n_max > cap:
        raise HarnessError(f"{name} is capped at n_max={cap}{' with dedup' if dedup else ''}")
    started = time.perf_counter()
    report = CrosscheckReport(name, n_max)
    jobs = []
    for n in range(n_min, n_max + 1):
        xs = _bitvectors(n, dedup)
        for start in range(0, len(xs), CHUNK):
            jobs.append((name, n, xs[start:start + CHUNK]))
    if workers <= 1:
        results = (_sweep_chunk(*job) for job in jobs)
        for count, found in results:
            report.graphs_checked += count
            report.mismatches.extend(found)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for count, found in pool.map(_sweep_chunk, *zip(*jobs)):
                report.graphs_checked += count
                report.mismatches.extend(found)
    report.elapsed = time.perf_counter() - started
    return report


def crosscheck_theorem1(n_max: int, **kw: Any) -> CrosscheckReport:
    return crosscheck("thm1", n_max, **kw)


def crosscheck_theorem2(n_max: int, **kw: Any) -> CrosscheckReport:
    return crosscheck("thm2", n_max, **kw)


def crosscheck_prop1(n_max: int, **kw: Any) -> CrosscheckReport:
    return crosscheck("prop1", n_max, **kw)


def crosscheck_heredity(n_max: int, **kw: Any) -> CrosscheckReport:
    return crosscheck("heredity", n_max, **kw)


def crosscheck_embedding(n_max: int, **kw: Any) -> CrosscheckReport:
    return crosscheck("embedding", n_max, **kw)


def recheck(m: Mismatch) -> bool:
    """Re-run the routes on a reported graph; true iff they still disagree."""
    answers = QUESTIONS[m.question].check(parse_graph6(m.graph6))
    return answers is not None and _disagrees(answers)

