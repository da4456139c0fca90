"""Edge-stream text format and batching.

Format (whitespace separated, ``#`` starts a comment)::

    graph undirected
    v 0 A
    v 1 B
    e 0 1 x 1357000000

The ``graph`` header gives directedness; vertex lines declare labels; edge
lines carry an optional integer timestamp. An edge that references an
undeclared vertex declares it implicitly with label ``_``.
"""

from __future__ import annotations

import io
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

from .errors import FormatError, GraphError, LabelConflictError, ParseError
from .graph import UNLABELED, LabeledGraph


class VertexRecord(NamedTuple):
    id: int
    label: str
    kind: str = "vertex"


class EdgeRecord(NamedTuple):
    src: int
    dst: int
    label: str
    timestamp: int | None = None
    kind: str = "edge"


@dataclass
class StreamBatch:
    graph: LabeledGraph
    index: int
    timestamps: tuple = ()

    @property
    def edge_count(self) -> int:
        return self.graph.n_edges


def _open_text(source):
    if source == "-" or source is None:
        return sys.stdin, "<stdin>", False
    if isinstance(source, (str, os.PathLike)):
        try:
            return open(source, encoding="utf-8"), str(source), True
        except OSError as exc:
            raise OSError(f"cannot read {source}: {exc.strerror}") from exc
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8")), "<bytes>", True
    return source, getattr(source, "name", "<stream>"), False


def _int(tok, what, lineno, name):
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno, name) from None
    if v < 0 and what != "timestamp":
        raise ParseError(f"{what} must be nonnegative, got {v}", lineno, name)
    return v


class EdgeStream:
    """Iterator of vertex/edge records from one text source.

    The header is read eagerly so ``directed`` is known before iteration,
    which also works for stdin.
    """

    def __init__(self, source, directed: bool | None = None):
        self._fh, self.name, self._owned = _open_text(source)
        self.directed = directed
        self._lineno = 0
        self._pending = None
        self._read_header()

    def _read_header(self):
        for raw in self._fh:
            self._lineno += 1
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            if tok[0] == "graph":
                self._set_direction(tok)
            else:
                self._pending = (self._lineno, tok)
            return
        self._pending = None

    def _set_direction(self, tok):
        if len(tok) != 2 or tok[1] not in ("directed", "undirected"):
            raise ParseError("header must be 'graph directed|undirected'", self._lineno, self.name)
        flag = tok[1] == "directed"
        if self.directed is not None and self.directed != flag:
            raise FormatError(
                f"stream declares {tok[1]} but {'directed' if self.directed else 'undirected'} "
                "was expected", self._lineno, self.name,
            )
        self.directed = flag

    def _record(self, lineno, tok):
        kind = tok[0]
        if kind == "v":
            if len(tok) != 3:
                raise ParseError("vertex line needs: v <id> <label>", lineno, self.name)
            return VertexRecord(_int(tok[1], "vertex id", lineno, self.name), tok[2])
        if kind == "e":
            if len(tok) not in (4, 5):
                raise ParseError("edge line needs: e <src> <dst> <label> [<time>]", lineno, self.name)
            src = _int(tok[1], "vertex id", lineno, self.name)
            dst = _int(tok[2], "vertex id", lineno, self.name)
            if src == dst:
                raise ParseError(f"self-loop on vertex {src}", lineno, self.name)
            ts = _int(tok[4], "timestamp", lineno, self.name) if len(tok) == 5 else None
            return EdgeRecord(src, dst, tok[3], ts)
        if kind == "graph":
            self._set_direction(tok)
            return None
        raise ParseError(f"unknown record type {kind!r}", lineno, self.name)

    def __iter__(self) -> Iterator:
        if self.directed is None:
            self.directed = False
        try:
            if self._pending is not None:
                rec = self._record(*self._pending)
                self._pending = None
                if rec is not None:
                    yield rec
            for raw in self._fh:
                self._lineno += 1
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                rec = self._record(self._lineno, line.split())
                if rec is not None:
                    yield rec
        finally:
            self.close()

    @property
    def lineno(self) -> int:
        return self._lineno

    def close(self):
        if self._owned:
            self._fh.close()
            self._owned = False


def parse_stream(source, directed: bool | None = None) -> EdgeStream:
    """Open ``source`` (path, ``-`` for stdin, file object or bytes) as a record stream."""
    return EdgeStream(source, directed)


class _Assembler:
    """Builds batch graphs while remembering vertex labels across batches."""

    def __init__(self, directed, name="<stream>"):
        self.directed = directed
        self.name = name
        self.labels: dict[int, str] = {}
        self.pending: dict[int, str] = {}
        self.reset()

    def reset(self):
        self.graph = LabeledGraph(self.directed)
        self.times = []
        self.n_records = 0

    def vertex(self, rec, lineno=None):
        old = self.labels.get(rec.id)
        if old is not None and old != rec.label:
            raise LabelConflictError(
                f"{self.name}:{lineno or '?'}: vertex {rec.id} relabeled {old!r} -> {rec.label!r}"
            )
        self.labels[rec.id] = rec.label

    def edge(self, rec):
        for v in (rec.src, rec.dst):
            if v not in self.labels:
                self.labels[v] = UNLABELED
            self.graph.add_vertex(v, self.labels[v])
        self.graph.add_edge(rec.src, rec.dst, rec.label)
        if rec.timestamp is not None:
            self.times.append(rec.timestamp)
        self.n_records += 1

    def take(self, index):
        ts = (min(self.times), max(self.times)) if self.times else ()
        batch = StreamBatch(self.graph, index, ts)
        self.reset()
        return batch


def batch_stream(records: Iterable, alpha: int, directed: bool | None = None) -> Iterator[StreamBatch]:
    """Group edge records into batches of ``alpha`` edges; the last may be smaller."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if directed is None:
        directed = getattr(records, "directed", None)
    asm = _Assembler(bool(directed), getattr(records, "name", "<stream>"))
    index = 0
    for rec in records:
        if rec.kind == "vertex":
            asm.vertex(rec, getattr(records, "lineno", None))
            continue
        try:
            asm.edge(rec)
        except GraphError as exc:
            raise ParseError(str(exc), getattr(records, "lineno", None), asm.name) from None
        if asm.n_records == alpha:
            yield asm.take(index)
            index += 1
    if asm.n_records:
        yield asm.take(index)


def batch_per_file(paths: Iterable, directed: bool | None = None) -> Iterator[StreamBatch]:
    """One batch per file, in the given order; vertex labels carry over between files."""
    asm = None
    for index, path in enumerate(paths):
        stream = EdgeStream(path, directed)
        if asm is None:
            directed = stream.directed
            asm = _Assembler(bool(directed), stream.name)
        asm.name = stream.name
        for rec in stream:
            if rec.kind == "vertex":
                asm.vertex(rec, stream.lineno)
            else:
                try:
                    asm.edge(rec)
                except GraphError as exc:
                    raise ParseError(str(exc), stream.lineno, stream.name) from None
        yield asm.take(index)


def list_batch_files(directory) -> list:
    """Regular files of ``directory`` in name order, skipping hidden files."""
    d = Path(directory)
    if not d.is_dir():
        raise OSError(f"cannot read {directory}: not a directory")
    return sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))


def format_records(records: Iterable, directed: bool) -> str:
    out = [f"graph {'directed' if directed else 'undirected'}"]
    for rec in records:
        if rec.kind == "vertex":
            out.append(f"v {rec.id} {rec.label}")
        elif rec.timestamp is None:
            out.append(f"e {rec.src} {rec.dst} {rec.label}")
        else:
            out.append(f"e {rec.src} {rec.dst} {rec.label} {rec.timestamp}")
    return "\n".join(out) + "\n"


def format_graph(g: LabeledGraph, edge_order=None) -> str:
    """Serialize a graph in stream format: all vertices, then edges."""
    recs = [VertexRecord(v, g.label(v)) for v in sorted(g.vertices)]
    recs += [EdgeRecord(*e) for e in (edge_order if edge_order is not None else g.iter_edges())]
    return format_records(recs, g.directed)


def read_graph(source) -> LabeledGraph:
    """Load a whole stream file as one graph."""
    stream = parse_stream(source)
    g = None
    labels = {}
    edges = []
    for rec in stream:
        if rec.kind == "vertex":
            if labels.get(rec.id, rec.label) != rec.label:
                raise LabelConflictError(f"vertex {rec.id} relabeled")
            labels[rec.id] = rec.label
        else:
            edges.append(rec)
    g = LabeledGraph(bool(stream.directed))
    for v, lab in labels.items():
        g.add_vertex(v, lab)
    for rec in edges:
        for v in (rec.src, rec.dst):
            if v not in g:
                g.add_vertex(v, UNLABELED)
        g.add_edge(rec.src, rec.dst, rec.label)
    return g
