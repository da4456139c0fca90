"""Batch compression loop.

For every batch the dictionary is frozen, each stored pattern is searched for
in the batch, and every occurrence is grown by all batch edges touching it.
Grown occurrences become new dictionary patterns. Batch edges that no
occurrence touched are stored as single-edge patterns.

Searches for different patterns are independent and may run on a thread pool;
their effects are applied afterwards in pattern insertion order, so the
resulting dictionary does not depend on the number of threads.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .dictionary import PatternDictionary
from .errors import EmbeddingMismatchError, OversizeBatchError
from .graph import LabeledGraph
from .isomorphism import Embedding, enumerate_embeddings, is_valid_embedding

log = logging.getLogger(__name__)

DEFAULT_ALPHA = 5
DEFAULT_THETA = 50


@dataclass
class BatchResult:
    index: int
    edges: int
    embeddings_found: dict = field(default_factory=dict)
    edges_used: int = 0
    singletons_added: int = 0
    elapsed: float = 0.0
    dict_size_after: int = 0
    cum_score: int = 0
    timestamps: tuple = ()

    @property
    def leftover(self) -> int:
        return self.edges - self.edges_used

    @property
    def edges_per_sec(self) -> float:
        if self.edges == 0 or self.elapsed <= 0:
            return 0.0
        return self.edges / self.elapsed


def extend_embedding(pattern: LabeledGraph, emb: Embedding, batch: LabeledGraph):
    """Grow one occurrence by every batch edge incident to it.

    Returns ``(grown, consumed)``: ``grown`` is the occurrence plus its
    extension edges, in batch vertex ids; ``consumed`` is the set of batch
    edges it covers (matched plus extension). ``grown`` has the same edge
    count as ``pattern`` when nothing could be added.
    """
    if not is_valid_embedding(pattern, batch, emb):
        raise EmbeddingMismatchError("embedding does not witness pattern in batch")
    consumed = batch.incident_edges(emb.host_vertices)
    return batch.edge_subgraph(consumed), consumed


def _search(pattern, batch):
    embs = enumerate_embeddings(pattern, batch)
    grown = []
    for emb in embs:
        # inline of extend_embedding; the embedding is valid by construction
        consumed = batch.incident_edges(emb.host_vertices)
        extended = len(consumed) > pattern.n_edges
        grown.append((batch.edge_subgraph(consumed) if extended else None, consumed))
    return len(embs), grown


def process_batch(
    d: PatternDictionary,
    batch: LabeledGraph,
    alpha: int,
    *,
    index: int = 0,
    executor: ThreadPoolExecutor | None = None,
    timestamps: tuple = (),
) -> BatchResult:
    """Run one compression step of ``batch`` against ``d`` (mutated in place)."""
    if batch.n_edges > alpha:
        raise OversizeBatchError(f"batch has {batch.n_edges} edges, alpha is {alpha}")
    t0 = time.perf_counter()
    result = BatchResult(index=index, edges=batch.n_edges, timestamps=timestamps)

    frozen = d.snapshot()
    if batch.n_edges and frozen:
        patterns = [e.pattern for e in frozen]
        if executor is not None and len(patterns) > 1:
            found = list(executor.map(_search, patterns, [batch] * len(patterns)))
        else:
            found = [_search(p, batch) for p in patterns]
    else:
        found = [(0, [])] * len(frozen)

    used = set()
    # counts first, so a trim triggered by an insertion cannot drop them
    for entry, (n, _) in zip(frozen, found):
        if n:
            d.increment(entry, n)
            result.embeddings_found[entry.seq] = n
    for entry, (_, grown) in zip(frozen, found):
        for g, consumed in grown:
            used |= consumed
            if g is not None:
                d.insert_or_increment(g, 1)

    for e in batch.iter_edges():
        if e in used:
            continue
        single = LabeledGraph(batch.directed)
        single.add_vertex(e.src, batch.label(e.src)).add_vertex(e.dst, batch.label(e.dst))
        single.add_edge(*e)
        d.insert_or_increment(single, 1)
        result.singletons_added += 1

    result.edges_used = len(used)
    result.elapsed = time.perf_counter() - t0
    result.dict_size_after = len(d)
    result.cum_score = d.total_score()
    return result


def mine_stream(
    batches: Iterable,
    alpha: int = DEFAULT_ALPHA,
    theta: int = DEFAULT_THETA,
    *,
    threads: int = 1,
    directed: bool | None = None,
    on_batch=None,
):
    """Mine an iterable of batches; returns ``(dictionary, [BatchResult, ...])``.

    ``batches`` yields either :class:`LabeledGraph` objects or objects with
    ``graph``/``index``/``timestamps`` attributes (see ``stream_io``).
    """
    if alpha < 1 or theta < 1:
        raise ValueError("alpha and theta must be >= 1")
    d = None
    results = []
    executor = ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None
    try:
        for i, item in enumerate(batches):
            graph = getattr(item, "graph", item)
            if d is None:
                d = PatternDictionary(
                    theta=theta, alpha=alpha,
                    directed=graph.directed if directed is None else directed,
                )
            res = process_batch(
                d, graph, alpha,
                index=getattr(item, "index", i),
                executor=executor,
                timestamps=getattr(item, "timestamps", ()),
            )
            results.append(res)
            if on_batch is not None:
                on_batch(res, d)
            log.debug(
                "batch %d: %d edges, %d used, dict=%d, %.4fs",
                res.index, res.edges, res.edges_used, res.dict_size_after, res.elapsed,
            )
    finally:
        if executor is not None:
            executor.shutdown()
    if d is None:
        d = PatternDictionary(theta=theta, alpha=alpha, directed=bool(directed))
    return d, results
