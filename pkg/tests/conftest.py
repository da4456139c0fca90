import numpy as np
import pytest

from graphzip import LabeledGraph


def make_graph(labels, edges, directed=False, edge_label="x"):
    """``labels``: str (one char per vertex) or dict; edges: (u, v) or (u, v, label)."""
    if isinstance(labels, str):
        labels = dict(enumerate(labels))
    g = LabeledGraph(directed)
    for v, lab in labels.items():
        g.add_vertex(v, lab)
    for e in edges:
        u, v, lab = e if len(e) == 3 else (*e, edge_label)
        g.add_edge(u, v, lab)
    return g


def triangle(labels="AAA", ids=(0, 1, 2)):
    a, b, c = ids
    return make_graph(dict(zip(ids, labels)), [(a, b), (b, c), (a, c)])


def path(n, label="A", ids=None):
    ids = list(ids or range(n))
    return make_graph({v: label for v in ids}, list(zip(ids, ids[1:])))


def star(leaves, label="A"):
    return make_graph({v: label for v in range(leaves + 1)}, [(0, i) for i in range(1, leaves + 1)])


def clique(n, label="A"):
    return make_graph(
        {v: label for v in range(n)}, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def random_graph(rng, n, p, vlabels="AB", elabels="xy", directed=False):
    g = LabeledGraph(directed)
    for v in range(n):
        g.add_vertex(v, vlabels[int(rng.integers(len(vlabels)))])
    for u in range(n):
        for v in range(n):
            if u == v or (not directed and v < u):
                continue
            if rng.random() < p:
                g.add_edge(u, v, elabels[int(rng.integers(len(elabels)))])
    return g


def random_connected_pattern(rng, host, max_edges):
    """Random connected subgraph of ``host`` grown edge by edge, ids shuffled."""
    edges = host.edges
    if not edges:
        return None
    start = edges[int(rng.integers(len(edges)))]
    chosen = {start}
    target = int(rng.integers(1, max_edges + 1))
    while len(chosen) < target:
        verts = {x for e in chosen for x in (e.src, e.dst)}
        frontier = sorted(host.incident_edges(verts) - chosen)
        if not frontier:
            break
        chosen.add(frontier[int(rng.integers(len(frontier)))])
    sub = host.edge_subgraph(chosen)
    perm = rng.permutation(100)[: sub.n_vertices]
    remap = dict(zip(sorted(sub.vertices), (int(x) for x in perm)))
    g = LabeledGraph(host.directed)
    for v, lab in sub.vertices.items():
        g.add_vertex(remap[v], lab)
    for e in sub.iter_edges():
        g.add_edge(remap[e.src], remap[e.dst], e.label)
    return g


def permuted(g, rng):
    """Isomorphic copy of ``g`` with shuffled vertex ids and insertion order."""
    ids = [int(x) for x in rng.permutation(max(len(g), 1) * 3)[: len(g)]]
    remap = dict(zip(sorted(g.vertices), ids))
    h = LabeledGraph(g.directed)
    for v in sorted(g.vertices, key=lambda v: remap[v]):
        h.add_vertex(remap[v], g.label(v))
    edges = g.edges
    for i in rng.permutation(len(edges)):
        e = edges[int(i)]
        h.add_edge(remap[e.src], remap[e.dst], e.label)
    return h


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
