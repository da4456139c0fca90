"""Labeled graph container used for batches, patterns and generated graphs.

Vertices carry one label each, edges carry one label each. A graph is either
directed or undirected as a whole. Self-loops are rejected; inserting an edge
that already exists (same endpoints and label, orientation-insensitive when
undirected) is a no-op. Two edges between the same pair of vertices are
allowed only if their labels differ.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DanglingEdgeError,
    GraphError,
    LabelConflictError,
    SelfLoopError,
    UnknownVertexError,
)

_EMPTY = frozenset()

#: Label given to vertices that were never declared with one.
UNLABELED = "_"


class Edge(NamedTuple):
    src: int
    dst: int
    label: str


class GraphSignature(NamedTuple):
    n_vertices: int
    n_edges: int
    vertex_labels: tuple
    edge_labels: tuple


def _check_label(label):
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise GraphError(f"invalid label {label!r}: must be a nonempty token")


class LabeledGraph:
    """Vertex- and edge-labeled simple graph.

    >>> g = LabeledGraph().add_vertex(0, "A").add_vertex(1, "B")
    >>> g.add_edge(1, 0, "x").edges
    [Edge(src=0, dst=1, label='x')]
    """

    __slots__ = ("directed", "_labels", "_edges", "_out", "_in")

    def __init__(self, directed: bool = False):
        self.directed = bool(directed)
        self._labels: dict[int, str] = {}
        self._edges: dict[Edge, None] = {}
        self._out: dict[int, dict[int, set]] = {}
        # undirected graphs share one adjacency map for both directions
        self._in = {} if self.directed else self._out

    # construction

    def add_vertex(self, vid: int, label: str = UNLABELED) -> "LabeledGraph":
        old = self._labels.get(vid)
        if old is not None:
            if old != label:
                raise LabelConflictError(
                    f"vertex {vid} already labeled {old!r}, got {label!r}"
                )
            return self
        if not isinstance(vid, int) or isinstance(vid, bool) or vid < 0:
            raise GraphError(f"vertex id must be a nonnegative int, got {vid!r}")
        _check_label(label)
        self._labels[vid] = label
        self._out[vid] = {}
        if self.directed:
            self._in[vid] = {}
        return self

    def normalize(self, src: int, dst: int, label: str) -> Edge:
        if not self.directed and dst < src:
            src, dst = dst, src
        return Edge(src, dst, label)

    def add_edge(self, src: int, dst: int, label: str = UNLABELED) -> "LabeledGraph":
        if src == dst:
            raise SelfLoopError(f"self-loop on vertex {src}")
        for v in (src, dst):
            if v not in self._labels:
                raise DanglingEdgeError(f"edge ({src}, {dst}) references missing vertex {v}")
        _check_label(label)
        e = self.normalize(src, dst, label)
        if e in self._edges:
            return self
        self._edges[e] = None
        self._out[src].setdefault(dst, set()).add(label)
        self._in[dst].setdefault(src, set()).add(label)
        return self

    @classmethod
    def from_edges(cls, edges, labels, directed=False) -> "LabeledGraph":
        """Build from ``(src, dst, label)`` triples and a ``{vid: label}`` map."""
        g = cls(directed)
        for vid, lab in labels.items():
            g.add_vertex(vid, lab)
        for src, dst, lab in edges:
            g.add_edge(src, dst, lab)
        return g

    def copy(self) -> "LabeledGraph":
        g = LabeledGraph(self.directed)
        g._labels = dict(self._labels)
        g._edges = dict(self._edges)
        g._out = {v: {w: set(s) for w, s in nb.items()} for v, nb in self._out.items()}
        if self.directed:
            g._in = {v: {w: set(s) for w, s in nb.items()} for v, nb in self._in.items()}
        else:
            g._in = g._out
        return g

    def edge_subgraph(self, edges: Iterable[Edge]) -> "LabeledGraph":
        """Subgraph made of ``edges`` and their endpoints, keeping ids and labels."""
        g = LabeledGraph(self.directed)
        edges = sorted(edges)
        for e in edges:
            if e not in self._edges:
                raise GraphError(f"{e} is not an edge of this graph")
            g.add_vertex(e.src, self._labels[e.src])
            g.add_vertex(e.dst, self._labels[e.dst])
        for e in edges:
            g.add_edge(*e)
        return g

    def compact(self) -> "LabeledGraph":
        """Copy with vertex ids renumbered 0..n-1 in ascending id order."""
        remap = {v: i for i, v in enumerate(sorted(self._labels))}
        g = LabeledGraph(self.directed)
        for v, i in remap.items():
            g.add_vertex(i, self._labels[v])
        for e in sorted(self._edges):
            g.add_edge(remap[e.src], remap[e.dst], e.label)
        return g

    # queries

    @property
    def vertices(self) -> dict:
        return self._labels

    @property
    def edges(self) -> list:
        return list(self._edges)

    def __len__(self):
        return len(self._labels)

    @property
    def n_vertices(self) -> int:
        return len(self._labels)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def label(self, vid: int) -> str:
        try:
            return self._labels[vid]
        except KeyError:
            raise UnknownVertexError(vid) from None

    def __contains__(self, vid):
        return vid in self._labels

    def has_edge(self, src, dst, label) -> bool:
        return self.normalize(src, dst, label) in self._edges

    def iter_edges(self) -> Iterator[Edge]:
        return iter(self._edges)

    def out_labels(self, src, dst) -> set:
        """Labels of edges leaving ``src`` toward ``dst`` (either way if undirected)."""
        return self._out[src].get(dst, _EMPTY)

    def successors(self, v) -> dict:
        return self._out[v]

    def predecessors(self, v) -> dict:
        return self._in[v]

    def neighbors(self, v) -> set:
        if self.directed:
            return self._out[v].keys() | self._in[v].keys()
        return set(self._out[v])

    def degree(self, v) -> int:
        d = sum(len(s) for s in self._out[v].values())
        if self.directed:
            d += sum(len(s) for s in self._in[v].values())
        return d

    def incident_edges(self, vs) -> set:
        out = set()
        for v in vs:
            if v not in self._labels:
                raise UnknownVertexError(v)
            for w, labs in self._out[v].items():
                for lab in labs:
                    out.add(self.normalize(v, w, lab))
            if self.directed:
                for w, labs in self._in[v].items():
                    for lab in labs:
                        out.add(Edge(w, v, lab))
        return out

    def signature(self) -> GraphSignature:
        return GraphSignature(
            len(self._labels),
            len(self._edges),
            tuple(sorted(self._labels.values())),
            tuple(sorted(e.label for e in self._edges)),
        )

    def label_profile(self) -> tuple:
        """Multiset of (label, degree) pairs; a cheap isomorphism invariant."""
        return tuple(sorted(Counter(
            (lab, self.degree(v)) for v, lab in self._labels.items()
        ).items()))

    def is_connected(self) -> bool:
        if not self._labels:
            return False
        start = next(iter(self._labels))
        seen = {start}
        todo = deque([start])
        while todo:
            v = todo.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self._labels)

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.directed == other.directed
            and self._labels == other._labels
            and self._edges.keys() == other._edges.keys()
        )

    __hash__ = None

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"<LabeledGraph {kind} |V|={self.n_vertices} |E|={self.n_edges}>"


# Module-level aliases mirroring the method API.

def add_vertex(g: LabeledGraph, vid: int, label: str) -> LabeledGraph:
    return g.add_vertex(vid, label)


def add_edge(g: LabeledGraph, e: Edge) -> LabeledGraph:
    return g.add_edge(*e)


def signature(g: LabeledGraph) -> GraphSignature:
    return g.signature()


def incident_edges(g: LabeledGraph, vs) -> set:
    return g.incident_edges(vs)
