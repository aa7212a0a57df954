"""Exit criteria: exhaustive sweeps, catalog spot checks, certificate soundness.

Each test records one PASS/FAIL line, printed in the pytest summary under
"acceptance criteria". The full module takes several minutes.
"""

from collections import Counter

from gallai.checks import validate_verdict
from gallai.formats import from_bitvector, parse_graph6, to_graph6
from gallai.graph import Graph, find_cycle, is_isomorphic_small, is_tree
from gallai.harness import (
    crosscheck_embedding,
    crosscheck_heredity,
    crosscheck_prop1,
    crosscheck_theorem1,
    crosscheck_theorem2,
    recheck,
)
from gallai.operators import anti_gallai, gallai, line_graph
from gallai.patterns import CATALOG, F8_MINUS, FORBIDDEN, GEM
from gallai.recognition import Route, gallai_forest_direct, is_gallai_forest, is_gallai_tree

from conftest import record

RUNTIME_TARGET_S = 300.0


def test_criterion1_theorem1_sweep():
    report = crosscheck_theorem1(7)
    expected = sum(1 << (n * (n - 1) // 2) for n in range(1, 8))
    assert all(recheck(m) for m in report.mismatches)
    ok = report.ok and report.graphs_checked == expected and report.elapsed < RUNTIME_TARGET_S
    record(
        "1 thm1 n<=7",
        ok,
        f"{report.graphs_checked} graphs, {len(report.mismatches)} mismatches, {report.elapsed:.0f}s",
    )
    assert report.graphs_checked == expected
    assert report.mismatches == []
    assert report.elapsed < RUNTIME_TARGET_S


def test_criterion2_theorem2_sweep():
    report = crosscheck_theorem2(7)
    f8_routes = {r.value: is_gallai_tree(F8_MINUS, r).answer for r in Route}
    ok = report.ok and all(f8_routes.values())
    record(
        "2 thm2 n<=7 three-route agreement",
        ok,
        f"{report.graphs_checked} graphs, {len(report.mismatches)} mismatches, F8minus {f8_routes}",
    )
    assert report.mismatches == []
    assert all(f8_routes.values())


def test_criterion3_prop1_sweep():
    report = crosscheck_prop1(7)
    record("3 prop1 n<=7", report.ok, f"{report.graphs_checked} graphs, {len(report.mismatches)} mismatches")
    assert report.mismatches == []


def test_criterion4_heredity_and_embedding():
    heredity = crosscheck_heredity(5)
    embedding = crosscheck_embedding(5)
    ok = heredity.ok and embedding.ok
    record(
        "4 heredity n<=5 and embedding n<=5",
        ok,
        f"heredity {heredity.graphs_checked} graphs / {len(heredity.mismatches)} mismatches, "
        f"embedding {embedding.graphs_checked} classes / {len(embedding.mismatches)} mismatches",
    )
    assert heredity.mismatches == [] and embedding.mismatches == []


def test_criterion5_catalog_spot_checks():
    failures = []
    for name in FORBIDDEN:
        if find_cycle(gallai(CATALOG[name]).graph) is None:
            failures.append(f"Gallai({name}) acyclic")
    p3_p4 = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)])
    if not is_isomorphic_small(gallai(GEM).graph, p3_p4):
        failures.append("Gallai(gem) not P3+P4")
    for k in range(4, 9):
        if not is_isomorphic_small(gallai(Graph.cycle(k)).graph, Graph.cycle(k)):
            failures.append(f"Gallai(C{k}) not C{k}")
    f8 = gallai(F8_MINUS).graph
    if not (f8.n == 9 and is_tree(f8)):
        failures.append("Gallai(F8minus) not a tree on 9 vertices")
    record("5 catalog spot checks", not failures, "; ".join(failures) or "F1..F9, gem, C4..C8, F8minus")
    assert failures == []


def _select_false_graphs(total=1000):
    """Deterministic stride through the n<=7 ranges, keeping graphs with a false forest or tree verdict."""
    quota = {5: 150, 6: 300, 7: total - 450}
    picked = []
    for n, want in quota.items():
        size = 1 << (n * (n - 1) // 2)
        got = 0
        i = 0
        while got < want and i < size:
            x = (i * 40503 + 12345) % size
            i += 1
            g = from_bitvector(n, x)
            tree_false = 0 not in g.adj and not is_gallai_tree(g, Route.CHARACTERIZATION).answer
            if tree_false or not is_gallai_forest(g).answer:
                picked.append(g)
                got += 1
    return picked


def test_criterion6_certificate_soundness():
    graphs = _select_false_graphs()
    kinds = Counter()
    bad = []
    for g in graphs:
        verdicts = [is_gallai_forest(g), gallai_forest_direct(g)]
        if 0 not in g.adj:
            verdicts += [is_gallai_tree(g, r) for r in Route]
        for v in verdicts:
            kinds[v.certificate.kind] += 1
            if not validate_verdict(g, v):
                bad.append((to_graph6(g), v))
    needed = {
        "chordless_cycle",
        "pattern_embedding",
        "non_independent_homogeneous_set",
        "gallai_cycle",
        "gallai_disconnection",
        "block_violation",
    }
    ok = len(graphs) == 1000 and not bad and needed <= set(kinds)
    record("6 certificate soundness", ok, f"{len(graphs)} graphs, {sum(kinds.values())} verdicts, {len(bad)} invalid")
    assert len(graphs) == 1000
    assert bad == []
    assert needed <= set(kinds)


def test_criterion7_round_trip_and_partition():
    failures = 0
    count = 0
    for n in range(0, 7):
        for x in range(1 << (n * (n - 1) // 2)):
            g = from_bitvector(n, x)
            count += 1
            if parse_graph6(to_graph6(g)) != g:
                failures += 1
                continue
            ga = set(gallai(g).graph.edges())
            an = set(anti_gallai(g).graph.edges())
            li = set(line_graph(g).graph.edges())
            if ga & an or ga | an != li:
                failures += 1
    record("7 graph6 round-trip and E(Gallai)+E(anti-Gallai)=E(line), n<=6", failures == 0, f"{count} graphs")
    assert failures == 0
