"""Exact graph isomorphism and subgraph-isomorphism enumeration.

Matching is label-exact and non-induced: a pattern edge ``(u, v, l)`` must map
to a host edge ``(f(u), f(v), l)``, but the host may have additional edges
between mapped vertices. An embedding is identified by the set of host edges
it covers, so automorphic re-mappings of one occurrence are reported once.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

from .errors import EmptyPatternError, GraphError, OracleSizeError
from .graph import Edge, LabeledGraph

ORACLE_MAX_VERTICES = 10


class Embedding:
    """A witnessed occurrence of a pattern inside a host graph.

    Equality and hashing use ``matched_edges`` only.
    """

    __slots__ = ("vertex_map", "matched_edges")

    def __init__(self, vertex_map: dict, matched_edges: frozenset):
        self.vertex_map = vertex_map
        self.matched_edges = frozenset(matched_edges)

    @property
    def host_vertices(self) -> set:
        return set(self.vertex_map.values())

    def sort_key(self):
        return tuple(sorted(self.matched_edges))

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.matched_edges == other.matched_edges

    def __hash__(self):
        return hash(self.matched_edges)

    def __repr__(self):
        return f"Embedding({self.vertex_map}, {sorted(self.matched_edges)})"


def _matched_edges(pattern, host, mapping):
    return frozenset(
        host.normalize(mapping[e.src], mapping[e.dst], e.label) for e in pattern.iter_edges()
    )


def is_valid_embedding(pattern: LabeledGraph, host: LabeledGraph, emb: Embedding) -> bool:
    """Replay ``emb`` against ``host`` and check every embedding invariant."""
    vm = emb.vertex_map
    if set(vm) != set(pattern.vertices):
        return False
    if len(set(vm.values())) != len(vm):
        return False
    for pv, hv in vm.items():
        if hv not in host or host.label(hv) != pattern.label(pv):
            return False
    want = set()
    for e in pattern.iter_edges():
        he = host.normalize(vm[e.src], vm[e.dst], e.label)
        if not host.has_edge(*he):
            return False
        want.add(he)
    return want == set(emb.matched_edges) and len(want) == pattern.n_edges


def _labels_fit(pattern, host):
    hv = Counter(host.vertices.values())
    for lab, n in Counter(pattern.vertices.values()).items():
        if hv[lab] < n:
            return False
    he = Counter(e.label for e in host.iter_edges())
    for lab, n in Counter(e.label for e in pattern.iter_edges()).items():
        if he[lab] < n:
            return False
    return True


def _match_order(pattern, by_label):
    """Order pattern vertices: rarest host label first, then stay connected."""
    remaining = set(pattern.vertices)
    order = []
    placed = set()

    def key(v):
        links = sum(1 for w in pattern.neighbors(v) if w in placed)
        return (-links, len(by_label.get(pattern.label(v), ())), -pattern.degree(v), v)

    while remaining:
        v = min(remaining, key=key)
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def _iter_maps(pattern: LabeledGraph, host: LabeledGraph, exact: bool = False):
    """Yield injective label-preserving maps pattern -> host covering every pattern edge.

    With ``exact`` the degrees must agree vertex-by-vertex, which is only
    meaningful for full isomorphism tests.
    """
    by_label: dict[str, list] = {}
    for hv, lab in host.vertices.items():
        by_label.setdefault(lab, []).append(hv)

    order = _match_order(pattern, by_label)
    directed = pattern.directed
    pos = {v: i for i, v in enumerate(order)}

    plan = []
    for i, v in enumerate(order):
        checks = []
        parent = None
        for w in pattern.neighbors(v):
            j = pos[w]
            if j >= i:
                continue
            out_l = frozenset(pattern.out_labels(v, w))
            in_l = frozenset(pattern.out_labels(w, v)) if directed else frozenset()
            checks.append((j, out_l, in_l))
            if parent is None or j < parent[0]:
                # directed: follow an edge we know exists in the host
                parent = (j, bool(out_l))
        if directed:
            outd = sum(len(s) for s in pattern.successors(v).values())
            ind = sum(len(s) for s in pattern.predecessors(v).values())
            deg = (outd, ind)
        else:
            deg = (pattern.degree(v), 0)
        plan.append((pattern.label(v), parent, tuple(sorted(checks)), deg))

    def host_deg(hv):
        if directed:
            return (
                sum(len(s) for s in host.successors(hv).values()),
                sum(len(s) for s in host.predecessors(hv).values()),
            )
        return (host.degree(hv), 0)

    hdeg_cache: dict = {}
    n = len(order)
    mapped = [None] * n
    used = set()

    def candidates(i):
        label, parent, checks, deg = plan[i]
        if parent is None:
            pool = by_label.get(label, ())
        else:
            j, via_out = parent
            hp = mapped[j]
            if not directed:
                pool = host.successors(hp)
            elif via_out:
                # pattern edge v -> parent, so host candidate is a predecessor of hp
                pool = host.predecessors(hp)
            else:
                pool = host.successors(hp)
        for hv in pool:
            if hv in used or host.label(hv) != label:
                continue
            hd = hdeg_cache.get(hv)
            if hd is None:
                hd = hdeg_cache[hv] = host_deg(hv)
            if exact:
                if hd != deg:
                    continue
            elif hd[0] < deg[0] or hd[1] < deg[1]:
                continue
            ok = True
            for j, out_l, in_l in checks:
                hw = mapped[j]
                if out_l and not out_l <= host.out_labels(hv, hw):
                    ok = False
                    break
                if in_l and not in_l <= host.out_labels(hw, hv):
                    ok = False
                    break
                if exact:
                    if set(host.out_labels(hv, hw)) != out_l:
                        ok = False
                        break
                    if directed and set(host.out_labels(hw, hv)) != in_l:
                        ok = False
                        break
            if ok:
                yield hv

    def extend(i):
        if i == n:
            yield {order[k]: mapped[k] for k in range(n)}
            return
        for hv in sorted(candidates(i)):
            mapped[i] = hv
            used.add(hv)
            yield from extend(i + 1)
            used.discard(hv)
        mapped[i] = None

    yield from extend(0)


def _check_direction(pattern, host):
    if pattern.directed != host.directed:
        raise GraphError("pattern and host must agree on directedness")


def _collect(pattern, host, maps):
    best: dict[frozenset, dict] = {}
    for m in maps:
        key = _matched_edges(pattern, host, m)
        prev = best.get(key)
        if prev is None or sorted(m.items()) < sorted(prev.items()):
            best[key] = m
    embs = [Embedding(m, k) for k, m in best.items()]
    embs.sort(key=Embedding.sort_key)
    return embs


def enumerate_embeddings(pattern: LabeledGraph, host: LabeledGraph) -> list:
    """All occurrences of ``pattern`` in ``host``, one per distinct host edge set.

    Results are sorted by their matched edges so the output does not depend on
    search order.
    """
    if pattern.n_edges == 0:
        raise EmptyPatternError("pattern has no edges")
    _check_direction(pattern, host)
    if (
        pattern.n_vertices > host.n_vertices
        or pattern.n_edges > host.n_edges
        or not _labels_fit(pattern, host)
    ):
        return []
    return _collect(pattern, host, _iter_maps(pattern, host))


def brute_force_embeddings(pattern: LabeledGraph, host: LabeledGraph) -> list:
    """Reference enumeration by trying every injective vertex map. Small hosts only."""
    if host.n_vertices > ORACLE_MAX_VERTICES:
        raise OracleSizeError(
            f"host has {host.n_vertices} vertices; oracle limit is {ORACLE_MAX_VERTICES}"
        )
    if pattern.n_edges == 0:
        raise EmptyPatternError("pattern has no edges")
    _check_direction(pattern, host)
    pv = sorted(pattern.vertices)
    hv = sorted(host.vertices)
    if len(pv) > len(hv):
        return []

    def maps():
        for image in permutations(hv, len(pv)):
            m = dict(zip(pv, image))
            if any(pattern.label(v) != host.label(m[v]) for v in pv):
                continue
            if all(host.has_edge(m[e.src], m[e.dst], e.label) for e in pattern.iter_edges()):
                yield m

    return _collect(pattern, host, maps())


def is_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.directed != g2.directed:
        return False
    if g1.signature() != g2.signature():
        return False
    if g1.label_profile() != g2.label_profile():
        return False
    if g1.n_vertices == 0:
        return True
    return next(_iter_maps(g1, g2, exact=True), None) is not None


__all__ = [
    "Edge",
    "Embedding",
    "brute_force_embeddings",
    "enumerate_embeddings",
    "is_isomorphic",
    "is_valid_embedding",
]
