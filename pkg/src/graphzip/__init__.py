"""Streaming mining of compressing subgraph patterns with a bounded dictionary."""

from .compressor import BatchResult, extend_embedding, mine_stream, process_batch
from .dictionary import PatternDictionary, PatternEntry, score
from .evaluate import AccuracyReport, accuracy, dict_histogram, rate_summary, stats_csv
from .generator import GenConfig, PatternSpec, generate, make_pattern, read_truth
from .graph import Edge, GraphSignature, LabeledGraph
from .isomorphism import (
    Embedding,
    brute_force_embeddings,
    enumerate_embeddings,
    is_isomorphic,
)
from .stream_io import StreamBatch, batch_per_file, batch_stream, parse_stream

__version__ = "0.1.0"

__all__ = [
    "AccuracyReport",
    "BatchResult",
    "Edge",
    "Embedding",
    "GenConfig",
    "GraphSignature",
    "LabeledGraph",
    "PatternDictionary",
    "PatternEntry",
    "PatternSpec",
    "StreamBatch",
    "accuracy",
    "batch_per_file",
    "batch_stream",
    "brute_force_embeddings",
    "dict_histogram",
    "enumerate_embeddings",
    "extend_embedding",
    "generate",
    "is_isomorphic",
    "make_pattern",
    "mine_stream",
    "parse_stream",
    "process_batch",
    "rate_summary",
    "read_truth",
    "score",
    "stats_csv",
]
