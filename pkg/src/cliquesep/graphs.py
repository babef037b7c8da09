"""Graphs, ordered clique covers, the edge-gap length statistic, and restriction measures.

A restriction measure counts how many parts of a fixed clique partition touch a
vertex set.  It is monotone, subadditive, and exactly additive across edgeless
splits, which is what the separator engine relies on.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Immutable after construction; adjacency is a tuple of frozensets so
    membership tests are O(1).  ``labels``, when present, maps local ids back
    to the ids of a parent graph (set by :func:`induced_subgraph`).
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.labels = tuple(labels) if labels is not None else None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        """Yield each edge once as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(G: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on ``s`` with local ids 0..|s|-1.

    The returned graph's ``labels`` gives the id of each local vertex in ``G``
    (composed with ``G.labels`` if ``G`` is itself induced).
    """
    vs = sorted(set(s))
    for v in vs:
        if not (0 <= v < G.n):
            raise ValueError(f"vertex {v} out of range")
    local = {v: i for i, v in enumerate(vs)}
    edges = []
    for i, v in enumerate(vs):
        for w in G.adj[v]:
            j = local.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    if G.labels is not None:
        labels = [G.labels[v] for v in vs]
    else:
        labels = vs
    return Graph(len(vs), edges, labels=labels)


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by smallest member."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in G.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def components_within(adj, members: frozenset) -> list[frozenset]:
    """Components of the subgraph induced by ``members`` of a graph given by
    its adjacency tuple.  Avoids building a Graph object in hot paths."""
    seen = set()
    comps = []
    for s in sorted(members):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in members and w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


@dataclass(frozen=True)
class OrderedCliqueCover:
    """A partition of the host's vertices into cliques, with a part order.

    ``index_of`` maps each vertex to the index of its part.  Parts must be
    pairwise disjoint and cover every vertex; use :func:`verify_clique_cover`
    to check the clique condition against the host.
    """

    host: Graph
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))

    @property
    def index_of(self) -> dict[int, int]:
        cached = getattr(self, "_index_of", None)
        if cached is None:
            cached = {}
            for i, p in enumerate(self.parts):
                for v in p:
                    if v in cached:
                        raise ValueError(f"vertex {v} appears in two parts")
                    cached[v] = i
            object.__setattr__(self, "_index_of", cached)
        return cached

    def __len__(self):
        return len(self.parts)


def verify_clique_cover(cover: OrderedCliqueCover, explain: bool = False):
    """True iff the parts are disjoint cliques of the host covering all vertices.

    With ``explain=True`` returns (ok, detail) where detail names the violation.
    """
    host = cover.host
    seen: set[int] = set()
    for i, part in enumerate(cover.parts):
        for v in part:
            if v < 0 or v >= host.n:
                return (False, f"vertex {v} out of range") if explain else False
            if v in seen:
                return (False, f"vertex {v} in two parts") if explain else False
            seen.add(v)
        members = sorted(part)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                u, w = members[a], members[b]
                if not host.has_edge(u, w):
                    detail = f"part {i}: {u},{w} not adjacent in host"
                    return (False, detail) if explain else False
    if len(seen) != host.n:
        missing = next(v for v in range(host.n) if v not in seen)
        return (False, f"vertex {missing} uncovered") if explain else False
    return (True, None) if explain else True


@dataclass(frozen=True)
class LengthReport:
    """Maximum part-index gap spanned by an edge; 0 for edgeless graphs."""

    value: int
    witness_edge: Optional[tuple[int, int]]


def cover_length(G: Graph, cover: OrderedCliqueCover) -> LengthReport:
    """max over edges xy of G of |index_of(x) - index_of(y)|.

    The cover's host may be a supergraph of G; every vertex of G must be
    covered.
    """
    idx = cover.index_of
    best = 0
    witness = None
    for u, v in G.edges():
        if u not in idx or v not in idx:
            missing = u if u not in idx else v
            raise ValueError(f"vertex {missing} of G missing from cover")
        gap = abs(idx[u] - idx[v])
        if gap > best or witness is None:
            best = gap
            witness = (u, v)
    # edgeless G still needs the coverage precondition to hold
    if witness is None:
        for v in range(G.n):
            if v not in idx:
                raise ValueError(f"vertex {v} of G missing from cover")
    return LengthReport(best, witness)


@dataclass(frozen=True)
class RestrictionMeasure:
    """mu(F) = number of parts of a fixed clique partition of G touching F."""

    cover: OrderedCliqueCover

    @property
    def part_of(self) -> dict[int, int]:
        return self.cover.index_of

    def of(self, s: Iterable[int]) -> int:
        part_of = self.part_of
        return len({part_of[v] for v in s})

    @property
    def total(self) -> int:
        return len(self.cover.parts)


def measure(mu: RestrictionMeasure, s: Iterable[int]) -> int:
    return mu.of(s)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    checked: int
    failure: Optional[str]


def check_measure_axioms(mu: RestrictionMeasure, G: Graph, trials: int = 1000,
                         seed: int = 0) -> AxiomReport:
    """Sample random subgraph pairs and test the three measure axioms.

    (i) monotonicity over nested pairs, (ii) subadditivity over arbitrary
    pairs, (iii) exact additivity over disjoint pairs with no joining edge.
    The report carries the first counterexample found, if any.
    """
    rng = random.Random(seed)
    n = G.n
    verts = list(range(n))
    checked = 0
    for _ in range(trials):
        # (i) nested pair
        b = rng.sample(verts, rng.randint(0, n))
        a = [v for v in b if rng.random() < 0.5]
        if mu.of(a) > mu.of(b):
            return AxiomReport(False, checked, f"monotonicity: A={sorted(a)} B={sorted(b)}")
        checked += 1
        # (ii) arbitrary pair
        x = rng.sample(verts, rng.randint(0, n))
        y = rng.sample(verts, rng.randint(0, n))
        if mu.of(set(x) | set(y)) > mu.of(x) + mu.of(y):
            return AxiomReport(False, checked, f"subadditivity: A={sorted(x)} B={sorted(y)}")
        checked += 1
        # (iii) edgeless disjoint split: group components of a random subset
        s = frozenset(rng.sample(verts, rng.randint(0, n)))
        comps = components_within(G.adj, s)
        if len(comps) >= 2:
            rng.shuffle(comps)
            half = len(comps) // 2
            left = frozenset().union(*comps[:half])
            right = frozenset().union(*comps[half:])
            if mu.of(left | right) != mu.of(left) + mu.of(right):
                return AxiomReport(False, checked,
                                   f"additivity: A={sorted(left)} B={sorted(right)}")
            checked += 1
    return AxiomReport(True, checked, None)
