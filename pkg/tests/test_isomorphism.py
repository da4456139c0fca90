from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    clique,
    make_graph,
    path,
    permuted,
    random_connected_pattern,
    random_graph,
    star,
    triangle,
)
from graphzip import brute_force_embeddings, enumerate_embeddings, is_isomorphic
from graphzip.errors import EmptyPatternError, OracleSizeError
from graphzip.isomorphism import is_valid_embedding


def _edge_sets(embs):
    return {e.matched_edges for e in embs}


def _bijections_exist(g1, g2):
    # independent oracle: try every vertex bijection
    v1, v2 = sorted(g1.vertices), sorted(g2.vertices)
    if len(v1) != len(v2) or g1.n_edges != g2.n_edges:
        return False
    for image in permutations(v2):
        m = dict(zip(v1, image))
        if all(g1.label(v) == g2.label(m[v]) for v in v1) and all(
            g2.has_edge(m[e.src], m[e.dst], e.label) for e in g1.iter_edges()
        ):
            return True
    return False


def _subsets_isomorphic_to(pattern, host):
    """Count host edge subsets of pattern size whose induced edge-subgraph is isomorphic."""
    n = 0
    for subset in combinations(host.edges, pattern.n_edges):
        if _bijections_exist(pattern, host.edge_subgraph(subset)):
            n += 1
    return n


def test_triangle_vs_renumbered_triangle():
    assert is_isomorphic(triangle(), triangle(ids=(7, 3, 5)))


def test_path_vs_star():
    p3, s3 = path(4), star(3)
    assert p3.signature() == s3.signature()
    assert _bijections_exist(p3, s3) is False
    assert is_isomorphic(p3, s3) is False


def test_signature_mismatch_is_not_isomorphic():
    assert not is_isomorphic(triangle("ABC"), triangle("ABD"))
    assert not is_isomorphic(path(3), path(4))


def test_directedness_must_agree():
    a = make_graph("AB", [(0, 1)], directed=True)
    b = make_graph("AB", [(0, 1)])
    assert not is_isomorphic(a, b)
    assert not is_isomorphic(a, make_graph("AB", [(1, 0)], directed=True))


def test_single_edge_pattern_in_host():
    pattern = make_graph("AB", [(0, 1)])
    host = make_graph("ABAC", [(0, 1), (2, 1), (3, 1), (0, 3)])
    assert len(enumerate_embeddings(pattern, host)) == 2


def test_triangle_in_k4():
    expected = _subsets_isomorphic_to(triangle(), clique(4))
    assert expected == 4
    assert len(enumerate_embeddings(triangle(), clique(4))) == expected


def test_two_path_in_triangle():
    expected = _subsets_isomorphic_to(path(3), triangle())
    assert expected == 3
    assert len(enumerate_embeddings(path(3), triangle())) == expected


def test_automorphic_maps_collapse():
    embs = brute_force_embeddings(triangle(), triangle())
    assert len(embs) == 1
    assert len(enumerate_embeddings(triangle(), triangle())) == 1


def test_pattern_larger_than_host():
    assert brute_force_embeddings(clique(4), triangle()) == []
    assert enumerate_embeddings(clique(4), triangle()) == []


def test_errors():
    empty = make_graph("A", [])
    with pytest.raises(EmptyPatternError):
        enumerate_embeddings(empty, triangle())
    with pytest.raises(OracleSizeError):
        brute_force_embeddings(path(2), path(11))


def test_directed_orientation_respected():
    pattern = make_graph("AB", [(0, 1)], directed=True)
    host = make_graph("ABAB", [(0, 1), (3, 2)], directed=True)
    embs = enumerate_embeddings(pattern, host)
    assert len(embs) == 1 and embs[0].vertex_map == {0: 0, 1: 1}


def test_host_extra_edges_allowed():
    # non-induced matching: a path embeds into a triangle
    embs = enumerate_embeddings(path(3), triangle())
    for emb in embs:
        assert is_valid_embedding(path(3), triangle(), emb)


def test_edge_labels_must_match():
    pattern = make_graph("AA", [(0, 1, "x")])
    host = make_graph("AA", [(0, 1, "y")])
    assert enumerate_embeddings(pattern, host) == []


def test_parallel_label_edges():
    pattern = make_graph("AB", [(0, 1, "x"), (0, 1, "y")])
    host = make_graph("ABB", [(0, 1, "x"), (0, 1, "y"), (0, 2, "x")])
    assert len(enumerate_embeddings(pattern, host)) == 1
    assert len(brute_force_embeddings(pattern, host)) == 1


def _oracle_trial(rng, directed):
    n = int(rng.integers(2, 9))
    host = random_graph(rng, n, float(rng.uniform(0.2, 0.8)), directed=directed)
    if host.n_edges == 0:
        return True
    if rng.random() < 0.8:
        pattern = random_connected_pattern(rng, host, 4)
    else:
        other = random_graph(rng, 5, 0.6, directed=directed)
        pattern = random_connected_pattern(rng, other, 4) if other.n_edges else None
    if pattern is None:
        return True
    fast = enumerate_embeddings(pattern, host)
    slow = brute_force_embeddings(pattern, host)
    assert all(is_valid_embedding(pattern, host, e) for e in fast)
    return _edge_sets(fast) == _edge_sets(slow) and len(fast) == len(slow)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), directed=st.booleans())
def test_matches_brute_force(seed, directed):
    assert _oracle_trial(np.random.default_rng(seed), directed)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 7), directed=st.booleans())
def test_isomorphism_properties(seed, n, directed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, 0.5, directed=directed)
    h = permuted(g, rng)
    assert is_isomorphic(g, g)
    assert is_isomorphic(g, h) and is_isomorphic(h, g)
    other = random_graph(rng, n, 0.5, directed=directed)
    verdict = is_isomorphic(g, other)
    assert verdict == is_isomorphic(other, g)
    assert verdict == _bijections_exist(g, other)
    if g.n_edges and g.is_connected():
        same_size = (g.n_vertices, g.n_edges) == (other.n_vertices, other.n_edges)
        assert verdict == (same_size and bool(enumerate_embeddings(g, other)))
