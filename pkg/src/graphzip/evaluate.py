"""Recovery accuracy against planted patterns, and run instrumentation."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .dictionary import PatternDictionary
from .errors import TruthSetError
from .isomorphism import is_isomorphic

STATS_HEADER = ("batch", "edges", "seconds", "edges_per_sec", "dict_size", "cum_score")


@dataclass
class AccuracyReport:
    total: int
    matched: int
    flags: list = field(default_factory=list)
    names: list = field(default_factory=list)

    @property
    def accuracy(self) -> float:
        return self.matched / self.total if self.total else 0.0

    def format(self) -> str:
        lines = [f"accuracy={self.accuracy:.3f} matched={self.matched}/{self.total}"]
        for i, ok in enumerate(self.flags):
            name = self.names[i] if i < len(self.names) else f"#{i}"
            lines.append(f"  {name}: {'matched' if ok else 'missing'}")
        return "\n".join(lines)


def accuracy(truth: list, d: PatternDictionary, names=None) -> AccuracyReport:
    """Fraction of truth patterns that have an isomorphic dictionary entry."""
    for i in range(len(truth)):
        for j in range(i + 1, len(truth)):
            if is_isomorphic(truth[i], truth[j]):
                raise TruthSetError(f"truth patterns {i} and {j} are isomorphic")
    flags = [d.find(t) is not None for t in truth]
    return AccuracyReport(len(truth), sum(flags), flags, list(names or []))


def stats_rows(results) -> list:
    rows = []
    for r in results:
        rate = r.edges / r.elapsed if r.edges and r.elapsed > 0 else 0.0
        rows.append((r.index, r.edges, r.elapsed, rate, r.dict_size_after, r.cum_score))
    return rows


def stats_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(STATS_HEADER)
    for idx, edges, sec, rate, size, cum in stats_rows(results):
        w.writerow((idx, edges, f"{sec:.6f}", f"{rate:.3f}", size, cum))
    return buf.getvalue()


def dict_histogram(d: PatternDictionary) -> list:
    """``(edge_count, frequency)`` per entry, in rank order."""
    return [(e.edge_count, e.frequency) for e in d.ranked()]


def dict_histogram_csv(d: PatternDictionary) -> str:
    lines = ["edge_count,frequency"]
    lines += [f"{n},{f}" for n, f in dict_histogram(d)]
    return "\n".join(lines) + "\n"


@dataclass
class RateSummary:
    batches: int
    median: float
    p90: float
    slow_decile_mean: float
    ratio: float


def rate_summary(results, warmup: float = 0.1) -> RateSummary:
    """Per-batch timing spread after dropping the first ``warmup`` fraction of batches.

    ``ratio`` is the 90th-percentile batch time over the median batch time.
    """
    times = np.array([r.elapsed for r in results], dtype=float)
    times = times[int(len(times) * warmup):]
    if times.size == 0:
        return RateSummary(0, 0.0, 0.0, 0.0, 0.0)
    med = float(np.median(times))
    p90 = float(np.percentile(times, 90))
    slow = np.sort(times)[int(np.floor(0.9 * times.size)):]
    return RateSummary(
        int(times.size), med, p90, float(slow.mean()), p90 / med if med > 0 else float("inf")
    )
