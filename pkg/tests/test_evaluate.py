import csv
import io

import pytest

from conftest import clique, make_graph, path, star, triangle
from graphzip import PatternDictionary, accuracy, dict_histogram, stats_csv
from graphzip.compressor import BatchResult
from graphzip.errors import TruthSetError
from graphzip.evaluate import rate_summary


def _dict(*patterns):
    d = PatternDictionary(theta=20)
    for g, f in patterns:
        d.insert_or_increment(g, f)
    return d


def test_accuracy_examples():
    assert accuracy([triangle()], _dict((triangle(), 2))).accuracy == 1.0
    truth = [triangle(), path(3), star(3), clique(4), make_graph("AB", [(0, 1)])]
    d = _dict(*[(g, 1) for g in truth[:4]])
    rep = accuracy(truth, d)
    assert rep.accuracy == pytest.approx(0.8)
    assert rep.flags == [True, True, True, True, False]
    assert accuracy([triangle()], PatternDictionary()).accuracy == 0.0


def test_containment_is_not_a_match():
    # a 4-clique contains triangles but is not one
    assert accuracy([triangle()], _dict((clique(4), 5))).matched == 0


def test_duplicate_truth_rejected():
    with pytest.raises(TruthSetError):
        accuracy([triangle(), triangle(ids=(4, 5, 6))], PatternDictionary())


def test_accuracy_monotone_in_dictionary():
    truth = [triangle(), path(4)]
    d = _dict((path(3), 1))
    prev = accuracy(truth, d).accuracy
    for g in (path(4), star(2, "B"), triangle()):
        d.insert_or_increment(g)
        cur = accuracy(truth, d).accuracy
        assert cur >= prev
        prev = cur
    assert prev == 1.0


def test_report_format():
    rep = accuracy([triangle()], _dict((triangle(), 1)), names=["3-CLIQ"])
    assert rep.format().splitlines() == ["accuracy=1.000 matched=1/1", "  3-CLIQ: matched"]


def _results():
    return [
        BatchResult(index=0, edges=5, elapsed=0.5, dict_size_after=5, cum_score=0),
        BatchResult(index=1, edges=0, elapsed=0.1, dict_size_after=5, cum_score=0),
        BatchResult(index=2, edges=4, elapsed=2.0, dict_size_after=8, cum_score=3),
    ]


def test_stats_csv():
    text = stats_csv(_results())
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["batch", "edges", "seconds", "edges_per_sec", "dict_size", "cum_score"]
    assert len(rows) == 4
    assert float(rows[1][3]) == pytest.approx(10.0)
    assert float(rows[2][3]) == 0.0
    assert float(rows[3][3]) == pytest.approx(2.0)
    assert stats_csv(_results()) == text


def test_histogram():
    d = _dict((path(6), 9), (make_graph("AB", [(0, 1)]), 40))
    assert sorted(dict_histogram(d)) == [(1, 40), (5, 9)]
    assert dict_histogram(PatternDictionary()) == []
    assert len(dict_histogram(d)) == len(d)


def test_rate_summary():
    res = [BatchResult(index=i, edges=1, elapsed=t) for i, t in enumerate([9.0] + [1.0] * 18 + [2.0])]
    s = rate_summary(res, warmup=0.1)
    assert s.batches == 18
    assert s.median == 1.0
    assert s.ratio == pytest.approx(s.p90 / s.median)
