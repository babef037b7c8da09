"""Chordal-graph machinery: MCS orders, maximal cliques, clique trees, and
measure-balanced maximal-clique separators."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, RestrictionMeasure, components_within


class NotChordalError(ValueError):
    pass


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order together with the chordality verdict.

    When ``chordal`` is true, ``order`` is a perfect elimination ordering:
    each vertex's later neighbors form a clique.
    """

    order: tuple[int, ...]
    chordal: bool


def mcs_order(H: Graph) -> EliminationOrder:
    """Maximum cardinality search.

    The reversed visit order is a perfect elimination ordering iff H is
    chordal; the verdict is verified with the standard parent check.
    Ties are broken by lowest vertex id for determinism.
    """
    n = H.n
    weight = [0] * n
    visited = [False] * n
    visit: list[int] = []
    # lazy-deletion heap keyed by (-weight, vertex)
    heap = [(0, v) for v in range(n)]
    heapq.heapify(heap)
    while len(visit) < n:
        w, v = heapq.heappop(heap)
        if visited[v] or -w != weight[v]:
            continue
        visited[v] = True
        visit.append(v)
        for u in H.adj[v]:
            if not visited[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    order = tuple(reversed(visit))
    pos = {v: i for i, v in enumerate(order)}
    chordal = True
    for v in order:
        later = [u for u in H.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        u0 = min(later, key=lambda u: pos[u])
        if any(u != u0 and u not in H.adj[u0] for u in later):
            chordal = False
            break
    return EliminationOrder(order, chordal)


def maximal_cliques_chordal(H: Graph, ord: EliminationOrder) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph, from its elimination order.

    There are at most n of them.  Output is sorted by (smallest member,
    members) for determinism.
    """
    if not ord.chordal:
        raise NotChordalError("maximal_cliques_chordal requires a chordal graph")
    pos = {v: i for i, v in enumerate(ord.order)}
    candidates = []
    for v in ord.order:
        later = frozenset(u for u in H.adj[v] if pos[u] > pos[v])
        candidates.append(later | {v})
    # drop candidates contained in another; scanning larger ones first means
    # every container is already kept when a contained candidate is tested
    candidates.sort(key=lambda c: (-len(c), sorted(c)))
    kept: list[frozenset[int]] = []
    by_vertex: dict[int, list[int]] = {}
    for c in candidates:
        x = min(c)
        if any(c <= kept[i] for i in by_vertex.get(x, ())):
            continue
        idx = len(kept)
        kept.append(c)
        for v in c:
            by_vertex.setdefault(v, []).append(idx)
    kept.sort(key=lambda c: (min(c), sorted(c)))
    return kept


@dataclass(frozen=True)
class CliqueTree:
    """Tree over the maximal cliques satisfying the running-intersection
    property: for every vertex, the nodes containing it form a subtree."""

    nodes: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]


def clique_tree(H: Graph, cliques: list[frozenset[int]]) -> CliqueTree:
    """Maximum-weight spanning tree on clique-intersection sizes.

    Candidate edges only exist between cliques sharing a vertex; forests
    arising from a disconnected H are joined by zero-weight edges, which
    preserves running intersection because those cliques share nothing.
    """
    k = len(cliques)
    by_vertex: dict[int, list[int]] = {}
    for i, c in enumerate(cliques):
        for v in c:
            by_vertex.setdefault(v, []).append(i)
    weights: dict[tuple[int, int], int] = {}
    for ids in by_vertex.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                key = (ids[a], ids[b]) if ids[a] < ids[b] else (ids[b], ids[a])
                weights[key] = weights.get(key, 0) + 1
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for (i, j), w in sorted(weights.items(), key=lambda kv: (-kv[1], kv[0])):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j))
    # connect leftover forest components
    for i in range(1, k):
        if find(i) != find(0):
            parent[find(i)] = find(0)
            edges.append((0, i))
    return CliqueTree(tuple(cliques), tuple(edges))


@dataclass(frozen=True)
class CliqueSeparator:
    clique: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]
    larger_measure: int


def _pack_components(comps: list[frozenset[int]], comp_w: list[int]):
    """Greedy largest-first packing of components into two sides.

    Component weights are measure counts, which are additive here because
    every measure part (a clique of G, hence of H) meets at most one
    component of H minus the separator clique.
    """
    order = sorted(range(len(comps)), key=lambda i: (-comp_w[i], min(comps[i])))
    side = [[], []]
    w = [0, 0]
    size = [0, 0]
    for i in order:
        # lighter bin first, ties by vertex count, then bin 0
        t = 1 if (w[1], size[1]) < (w[0], size[0]) else 0
        side[t].append(i)
        w[t] += comp_w[i]
        size[t] += len(comps[i])
    a = frozenset().union(*(comps[i] for i in side[0])) if side[0] else frozenset()
    b = frozenset().union(*(comps[i] for i in side[1])) if side[1] else frozenset()
    return a, b, max(w[0], w[1])


def _evaluate_clique(H: Graph, mu_part_of, clique: frozenset[int], all_vs: frozenset[int]):
    rest = all_vs - clique
    comps = components_within(H.adj, rest)
    comp_w = [len({mu_part_of[v] for v in c}) for c in comps]
    return _pack_components(comps, comp_w)


def balanced_clique_separator(H: Graph, G: Graph, mu: RestrictionMeasure,
                              max_evals: Optional[int] = None) -> Optional[CliqueSeparator]:
    """Best 2/3-measure-balanced maximal-clique separator of H, or None.

    Every maximal clique of H is evaluated: remove it, pack the components
    of the remainder into two sides largest-first, and keep the clique whose
    larger side is smallest.  A clique qualifies only when both sides have
    measure at most 2/3 of the whole (exact rational comparison
    3*mu(side) <= 2*mu(V)).  When ``max_evals`` caps the search on large
    inputs, a clique-tree descent toward the heavy side is used instead of
    the exhaustive scan; it returns a valid balanced clique when it finds
    one, not necessarily the global minimizer.
    """
    if H.n != G.n:
        raise ValueError("H and G must share the vertex set")
    for u, v in G.edges():
        if not H.has_edge(u, v):
            raise ValueError(f"G edge ({u},{v}) missing from H")
    ord_ = mcs_order(H)
    if not ord_.chordal:
        raise NotChordalError("balanced_clique_separator requires chordal H")
    if H.n == 0:
        return None
    cliques = maximal_cliques_chordal(H, ord_)
    all_vs = frozenset(range(H.n))
    part_of = mu.part_of
    total = mu.of(all_vs)

    def qualifies(larger):
        return 3 * larger <= 2 * total

    best: Optional[CliqueSeparator] = None

    def consider(K, a, b, larger):
        nonlocal best
        cand = CliqueSeparator(K, a, b, larger)
        if best is None:
            best = cand
            return
        key = (larger, len(K), sorted(K))
        bkey = (best.larger_measure, len(best.clique), sorted(best.clique))
        if key < bkey:
            best = cand

    if max_evals is None or len(cliques) <= max_evals:
        for K in cliques:
            a, b, larger = _evaluate_clique(H, part_of, K, all_vs)
            if qualifies(larger):
                consider(K, a, b, larger)
        return best

    # budgeted descent: walk the clique tree toward the heavy side
    tree = clique_tree(H, cliques)
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(cliques))}
    for i, j in tree.edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    cur = max(range(len(cliques)), key=lambda i: (len(cliques[i]), sorted(cliques[i])))
    visited = set()
    for _ in range(max_evals):
        if cur in visited:
            break
        visited.add(cur)
        K = cliques[cur]
        rest = all_vs - K
        comps = components_within(H.adj, rest)
        comp_w = [len({part_of[v] for v in c}) for c in comps]
        a, b, larger = _pack_components(comps, comp_w)
        if qualifies(larger):
            consider(K, a, b, larger)
            break
        if not comps:
            break
        heavy = comps[max(range(len(comps)), key=lambda i: comp_w[i])]
        step = None
        for j in sorted(nbrs[cur]):
            if j not in visited and cliques[j] & heavy:
                step = j
                break
        if step is None:
            break
        cur = step
    return best
