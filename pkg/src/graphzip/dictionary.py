"""Bounded pattern dictionary with compression scores.

Each entry holds a connected pattern, how often it has been observed and the
score ``(|E| - 1) * (F - 1)``. Entries are pairwise non-isomorphic. When the
dictionary grows past ``2 * theta`` entries it is sorted by
``(score desc, edge count desc, insertion seq asc)`` and cut back to ``theta``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

from .errors import FormatError, InvalidPatternError, ParseError
from .graph import LabeledGraph
from .isomorphism import is_isomorphic

HEADER_PREFIX = "# graphzip-dict v1"


def score(edge_count: int, frequency: int) -> int:
    """Compression score of a pattern with ``edge_count`` edges seen ``frequency`` times."""
    if edge_count < 1:
        raise InvalidPatternError("a pattern needs at least one edge")
    if frequency <= 1:
        return 0
    return (edge_count - 1) * (frequency - 1)


@dataclass(eq=False)
class PatternEntry:
    pattern: LabeledGraph
    frequency: int
    seq: int
    score: int = 0

    def __post_init__(self):
        self.rescore()

    @property
    def edge_count(self) -> int:
        return self.pattern.n_edges

    def rescore(self):
        self.score = score(self.pattern.n_edges, self.frequency)

    def sort_key(self):
        return (-self.score, -self.pattern.n_edges, self.seq)

    def __repr__(self):
        return (
            f"PatternEntry(|V|={self.pattern.n_vertices}, |E|={self.pattern.n_edges}, "
            f"freq={self.frequency}, score={self.score}, seq={self.seq})"
        )


@dataclass(eq=False)
class PatternDictionary:
    """Score-ordered pattern store with a ``theta`` capacity policy.

    ``alpha`` optionally caps pattern edge count (patterns cannot outgrow a
    batch); ``None`` disables the check.
    """

    theta: int = 50
    alpha: int | None = None
    directed: bool = False
    entries: list = field(default_factory=list)
    trims: int = 0
    _index: dict = field(default_factory=dict, repr=False)
    _next_seq: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.theta < 1:
            raise ValueError("theta must be >= 1")
        if self.alpha is not None and self.alpha < 1:
            raise ValueError("alpha must be >= 1")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def capacity(self) -> int:
        return 2 * self.theta

    def _validate(self, pattern):
        if pattern.n_edges == 0:
            raise InvalidPatternError("pattern has no edges")
        if not pattern.is_connected():
            raise InvalidPatternError("pattern is not connected")
        if pattern.directed != self.directed:
            raise InvalidPatternError("pattern directedness does not match the dictionary")
        if self.alpha is not None and pattern.n_edges > self.alpha:
            raise InvalidPatternError(
                f"pattern has {pattern.n_edges} edges, more than alpha={self.alpha}"
            )

    def find(self, pattern: LabeledGraph):
        """Entry isomorphic to ``pattern``, or ``None``."""
        for entry in self._index.get(pattern.signature(), ()):
            if is_isomorphic(entry.pattern, pattern):
                return entry
        return None

    def __contains__(self, pattern):
        return self.find(pattern) is not None

    def insert_or_increment(self, pattern: LabeledGraph, count: int = 1) -> PatternEntry:
        """Add ``count`` observations of ``pattern``; may trigger a trim.

        Returns the entry that absorbed the observations (it may have been
        trimmed away already if it ranked below ``theta``).
        """
        if count < 1:
            raise ValueError("count must be positive")
        self._validate(pattern)
        entry = self.find(pattern)
        if entry is not None:
            entry.frequency += count
            entry.rescore()
            return entry
        entry = PatternEntry(pattern.compact(), count, self._next_seq)
        self._next_seq += 1
        self.entries.append(entry)
        self._index.setdefault(entry.pattern.signature(), []).append(entry)
        if len(self.entries) > self.capacity:
            self.trim()
        return entry

    def increment(self, entry: PatternEntry, count: int):
        """Bump an existing entry by ``count``; a no-op if it was trimmed away."""
        if count <= 0:
            return
        entry.frequency += count
        entry.rescore()

    def ranked(self) -> list:
        return sorted(self.entries, key=PatternEntry.sort_key)

    def trim(self):
        """Keep only the ``theta`` best entries; a no-op at or below capacity ``theta``."""
        if len(self.entries) <= self.theta:
            return self
        keep = self.ranked()[: self.theta]
        self.entries = keep
        self._index = {}
        for e in keep:
            self._index.setdefault(e.pattern.signature(), []).append(e)
        self.trims += 1
        return self

    def top_k(self, k: int) -> list:
        if k <= 0:
            return []
        return self.ranked()[:k]

    def total_score(self) -> int:
        return sum(e.score for e in self.entries)

    def snapshot(self) -> list:
        """Current entries in insertion order."""
        return sorted(self.entries, key=lambda e: e.seq)

    # serialization

    def dumps(self) -> str:
        buf = io.StringIO()
        buf.write(
            f"{HEADER_PREFIX} directed={int(self.directed)} "
            f"alpha={self.alpha if self.alpha is not None else 0} theta={self.theta}\n"
        )
        for rank, entry in enumerate(self.ranked()):
            buf.write("\n")
            buf.write(f"p {rank} score={entry.score} freq={entry.frequency}\n")
            g = entry.pattern
            for vid in sorted(g.vertices):
                buf.write(f"v {vid} {g.label(vid)}\n")
            for e in sorted(g.iter_edges()):
                buf.write(f"e {e.src} {e.dst} {e.label}\n")
        return buf.getvalue()

    def dump(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    @classmethod
    def loads(cls, text: str, source=None) -> "PatternDictionary":
        return _parse_dict(text.splitlines(), source)

    @classmethod
    def load(cls, path) -> "PatternDictionary":
        with open(path, encoding="utf-8") as fh:
            return _parse_dict(fh.read().splitlines(), str(path))


def _kv(token, key, lineno, source):
    name, sep, value = token.partition("=")
    if name != key or not sep:
        raise ParseError(f"expected {key}=<int>, got {token!r}", lineno, source)
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"bad integer in {token!r}", lineno, source) from None


def _parse_dict(lines, source=None) -> PatternDictionary:
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise FormatError("missing graphzip-dict header", 1, source)
    parts = lines[0][len(HEADER_PREFIX):].split()
    if len(parts) != 3:
        raise FormatError("header needs directed=, alpha=, theta=", 1, source)
    directed = _kv(parts[0], "directed", 1, source)
    alpha = _kv(parts[1], "alpha", 1, source)
    theta = _kv(parts[2], "theta", 1, source)
    d = PatternDictionary(theta=max(theta, 1), alpha=alpha or None, directed=bool(directed))

    blocks = []
    cur = None
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if tok[0] == "p":
                if len(tok) != 4:
                    raise ParseError("p line needs rank, score=, freq=", lineno, source)
                cur = [int(tok[1]), _kv(tok[2], "score", lineno, source),
                       _kv(tok[3], "freq", lineno, source), LabeledGraph(bool(directed)), lineno]
                blocks.append(cur)
            elif tok[0] == "v":
                if cur is None or len(tok) != 3:
                    raise ParseError("malformed vertex line", lineno, source)
                cur[3].add_vertex(int(tok[1]), tok[2])
            elif tok[0] == "e":
                if cur is None or len(tok) != 4:
                    raise ParseError("malformed edge line", lineno, source)
                cur[3].add_edge(int(tok[1]), int(tok[2]), tok[3])
            else:
                raise ParseError(f"unknown record {tok[0]!r}", lineno, source)
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None

    for rank, sc, freq, g, lineno in sorted(blocks, key=lambda b: b[0]):
        if g.n_edges == 0 or not g.is_connected():
            raise ParseError("pattern block is empty or disconnected", lineno, source)
        if freq < 1:
            raise ParseError("frequency must be positive", lineno, source)
        entry = PatternEntry(g, freq, d._next_seq)
        if entry.score != sc:
            raise ParseError(
                f"score={sc} disagrees with (|E|-1)(F-1)={entry.score}", lineno, source
            )
        d._next_seq += 1
        d.entries.append(entry)
        d._index.setdefault(g.signature(), []).append(entry)
    return d


# Functional aliases.

def insert_or_increment(d: PatternDictionary, pattern: LabeledGraph, count: int = 1):
    d.insert_or_increment(pattern, count)
    return d


def trim(d: PatternDictionary) -> PatternDictionary:
    return d.trim()


def top_k(d: PatternDictionary, k: int) -> list:
    return d.top_k(k)
