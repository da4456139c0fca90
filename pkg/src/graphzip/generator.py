"""Synthetic graphs with planted ground-truth patterns.

A fixed number of copies of a pattern is planted into a random background
graph so that planted edges make up a requested fraction (``coverage``) of
all edges. The result is written as an edge stream plus a ground-truth file
holding the pattern and how many copies were planted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FeasibilityError, SpecError
from .graph import LabeledGraph
from .stream_io import EdgeRecord, VertexRecord, format_graph, format_records

# vertex ids -> edges, per named shape
_SHAPES = {
    "3-CLIQ": (3, [(0, 1), (0, 2), (1, 2)]),
    "4-CLIQ": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "4-STAR": (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    "4-PATH": (4, [(0, 1), (1, 2), (2, 3)]),
    "5-PATH": (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    # complete binary tree on 8 nodes, heap numbering
    "8-TREE": (8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7)]),
}

PATTERN_NAMES = tuple(_SHAPES)
ORDERS = ("blocks", "shuffle")


@dataclass
class PatternSpec:
    """Which pattern to plant and how to label it.

    ``vertex_labels`` is either one label for every vertex or one label per
    vertex position; ``graph`` overrides ``name`` with a custom pattern.
    """

    name: str = "3-CLIQ"
    vertex_labels: tuple | str = "P"
    edge_label: str = "p"
    graph: LabeledGraph | None = None
    directed: bool = False


@dataclass
class GenConfig:
    vertices: int = 1000
    edges: int = 5000
    coverage: float = 0.5
    vertex_alphabet: int = 10
    edge_alphabet: int = 5
    seed: int = 0
    directed: bool = False
    #: draw background labels from the pattern's labels too
    overlap_labels: bool = False
    #: "blocks" keeps each planted copy contiguous in the stream,
    #: "shuffle" permutes every edge independently
    order: str = "blocks"


@dataclass
class Generated:
    stream: str
    truth: str
    plant_count: int
    pattern: LabeledGraph
    graph: LabeledGraph
    instances: list = field(default_factory=list)
    edge_order: list = field(default_factory=list)


def make_pattern(spec: PatternSpec | str) -> LabeledGraph:
    if isinstance(spec, str):
        spec = PatternSpec(spec)
    if spec.graph is not None:
        g = spec.graph.compact()
        if g.n_edges == 0 or not g.is_connected():
            raise SpecError("custom pattern must be connected with at least one edge")
        return g
    try:
        n, edges = _SHAPES[spec.name.upper()]
    except KeyError:
        raise SpecError(
            f"unknown pattern {spec.name!r}; choose one of {', '.join(PATTERN_NAMES)}"
        ) from None
    labels = spec.vertex_labels
    if isinstance(labels, str):
        labels = [labels] * n
    if len(labels) != n:
        raise SpecError(f"{spec.name} needs {n} vertex labels, got {len(labels)}")
    g = LabeledGraph(spec.directed)
    for i, lab in enumerate(labels):
        g.add_vertex(i, lab)
    for u, v in edges:
        g.add_edge(u, v, spec.edge_label)
    return g


def plant_count(config: GenConfig, pattern_edges: int) -> int:
    return int(np.floor(config.coverage * config.edges / pattern_edges + 1e-9))


def _check(config: GenConfig, pattern: LabeledGraph) -> int:
    if not 0.0 < config.coverage <= 1.0:
        raise FeasibilityError(f"coverage must be in (0, 1], got {config.coverage}")
    if config.order not in ORDERS:
        raise FeasibilityError(f"order must be one of {ORDERS}, got {config.order!r}")
    if config.vertex_alphabet < 1 or config.edge_alphabet < 1:
        raise FeasibilityError("label alphabets must be nonempty")
    k = pattern.n_vertices
    if config.vertices < k:
        raise FeasibilityError(f"vertices={config.vertices} is smaller than the pattern ({k})")
    n = plant_count(config, pattern.n_edges)
    if n < 1:
        raise FeasibilityError(
            f"coverage {config.coverage} of {config.edges} edges is too small "
            f"for one {pattern.n_edges}-edge instance"
        )
    if n * pattern.n_edges > config.edges:
        raise FeasibilityError(
            f"{n} instances need {n * pattern.n_edges} edges, only {config.edges} available"
        )
    background = config.edges - n * pattern.n_edges
    pairs = config.vertices * (config.vertices - 1)
    if not config.directed:
        pairs //= 2
    if config.edges > pairs:
        raise FeasibilityError(
            f"{config.edges} edges exceed the {pairs} vertex pairs of {config.vertices} vertices"
        )
    del background
    return n


def _assign_instances(rng, config, pattern, n):
    """Vertex tuples for each planted copy.

    Copies are vertex-disjoint while the vertex budget allows; otherwise
    vertices are reused, a vertex only ever playing pattern positions with
    the same label, and no two copies share a vertex pair.
    """
    k = pattern.n_vertices
    if n * k <= config.vertices:
        ids = rng.permutation(config.vertices)[: n * k]
        return [tuple(int(x) for x in ids[i * k:(i + 1) * k]) for i in range(n)], set(ids.tolist())

    # group positions by label; each group gets a share of the vertices
    groups: dict[str, list] = {}
    for pos in range(k):
        groups.setdefault(pattern.label(pos), []).append(pos)
    order = sorted(groups)
    shares = {lab: len(groups[lab]) for lab in order}
    perm = rng.permutation(config.vertices).tolist()
    pools = {}
    start = 0
    total = sum(shares.values())
    for i, lab in enumerate(order):
        size = config.vertices * shares[lab] // total if i < len(order) - 1 else config.vertices - start
        pools[lab] = perm[start:start + size]
        start += size
        if len(pools[lab]) < len(groups[lab]):
            raise FeasibilityError(f"not enough vertices for label {lab!r}")

    # deal each pool round-robin so reuse is spread evenly
    decks = {lab: [] for lab in order}

    def draw(lab):
        if not decks[lab]:
            decks[lab] = rng.permutation(pools[lab]).tolist()
        return decks[lab].pop()

    pattern_edges = list(pattern.iter_edges())
    taken = set()
    instances = []
    for _ in range(n):
        for _attempt in range(1000):
            image = [None] * k
            chosen = set()
            ok = True
            for pos in range(k):
                lab = pattern.label(pos)
                v = draw(lab)
                tries = 0
                while v in chosen and tries < 50:
                    decks[lab].insert(0, v)
                    v = draw(lab)
                    tries += 1
                if v in chosen:
                    ok = False
                    break
                image[pos] = v
                chosen.add(v)
            if not ok:
                continue
            pairs = {_pair(image[e.src], image[e.dst], config.directed) for e in pattern_edges}
            if pairs & taken:
                continue
            taken |= pairs
            instances.append(tuple(image))
            break
        else:
            raise FeasibilityError("could not place edge-disjoint pattern copies; add vertices")
    used = {v for inst in instances for v in inst}
    return instances, used


def _pair(u, v, directed):
    return (u, v) if directed or u < v else (v, u)


def generate(config: GenConfig, spec: PatternSpec | str) -> Generated:
    """Plant copies of ``spec`` into a random graph described by ``config``."""
    if isinstance(spec, str):
        spec = PatternSpec(spec, directed=config.directed)
    elif spec.directed != config.directed and spec.graph is None:
        spec = PatternSpec(spec.name, spec.vertex_labels, spec.edge_label, None, config.directed)
    pattern = make_pattern(spec)
    if pattern.directed != config.directed:
        raise SpecError("pattern directedness differs from the config")
    n = _check(config, pattern)
    rng = np.random.default_rng(config.seed)

    instances, planted_vertices = _assign_instances(rng, config, pattern, n)

    pat_vlabels = sorted(set(pattern.vertices.values()))
    pat_elabels = sorted({e.label for e in pattern.iter_edges()})
    bg_vlabels = [f"v{i}" for i in range(config.vertex_alphabet)]
    bg_elabels = [f"e{i}" for i in range(config.edge_alphabet)]
    if config.overlap_labels:
        bg_vlabels = sorted(set(bg_vlabels) | set(pat_vlabels))
        bg_elabels = sorted(set(bg_elabels) | set(pat_elabels))

    labels: dict[int, str] = {}
    for inst in instances:
        for pos, v in enumerate(inst):
            labels[v] = pattern.label(pos)
    for v in range(config.vertices):
        if v not in labels:
            labels[v] = bg_vlabels[int(rng.integers(len(bg_vlabels)))]

    units = []
    taken = set()
    pattern_edges = sorted(pattern.iter_edges())
    for inst in instances:
        block = []
        for e in pattern_edges:
            block.append((inst[e.src], inst[e.dst], e.label))
            taken.add(_pair(inst[e.src], inst[e.dst], config.directed))
        units.append(block)

    n_bg = config.edges - n * pattern.n_edges
    bg = []
    while len(bg) < n_bg:
        want = n_bg - len(bg)
        us = rng.integers(config.vertices, size=2 * want)
        vs = rng.integers(config.vertices, size=2 * want)
        ls = rng.integers(len(bg_elabels), size=2 * want)
        for u, v, lab in zip(us.tolist(), vs.tolist(), ls.tolist()):
            if u == v:
                continue
            p = _pair(u, v, config.directed)
            if p in taken:
                continue
            taken.add(p)
            bg.append((u, v, bg_elabels[lab]))
            if len(bg) == n_bg:
                break
    units.extend([edge] for edge in bg)

    if config.order == "shuffle":
        flat = [edge for unit in units for edge in unit]
        edge_order = [flat[i] for i in rng.permutation(len(flat))]
    else:
        edge_order = []
        for i in rng.permutation(len(units)):
            unit = units[i]
            edge_order.extend(unit[j] for j in rng.permutation(len(unit)))

    graph = LabeledGraph(config.directed)
    for v in range(config.vertices):
        graph.add_vertex(v, labels[v])
    for u, v, lab in edge_order:
        graph.add_edge(u, v, lab)

    recs = [VertexRecord(v, labels[v]) for v in range(config.vertices)]
    recs += [EdgeRecord(u, v, lab) for u, v, lab in edge_order]
    name = spec.name if spec.graph is None else "custom"
    header = (
        f"# generated pattern={name} count={n} vertices={config.vertices} "
        f"edges={config.edges} coverage={config.coverage} seed={config.seed} order={config.order}\n"
    )
    stream = header + format_records(recs, config.directed)
    truth = f"# truth pattern={name} count={n}\n" + format_graph(pattern)
    return Generated(stream, truth, n, pattern, graph, instances,
                     [graph.normalize(*e) for e in edge_order])


def read_truth(source) -> list:
    """Parse a ground-truth file into ``[(name, count, pattern), ...]``.

    A file may hold several truth blocks, each starting with a
    ``# truth pattern=<name> count=<n>`` line.
    """
    from .stream_io import read_graph

    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    blocks = []
    cur = None
    for line in text.splitlines():
        if line.startswith("# truth"):
            meta = dict(tok.split("=", 1) for tok in line[len("# truth"):].split() if "=" in tok)
            cur = [meta.get("pattern", "?"), int(meta.get("count", 0)), []]
            blocks.append(cur)
        elif cur is not None:
            cur[2].append(line)
    if not blocks:
        # plain stream file: treat it as a single unnamed truth pattern
        blocks = [["?", 0, text.splitlines()]]
    out = []
    for name, count, lines in blocks:
        out.append((name, count, read_graph(_lines_io(lines))))
    return out


def _lines_io(lines):
    import io
    return io.StringIO("\n".join(lines) + "\n")
