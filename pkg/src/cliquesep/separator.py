"""Two-route balanced separator engine.

Given a graph G, an ordered clique cover of a supergraph G1 with small edge-gap
length, a chordal supergraph G2, and a restriction measure, produce a vertex
separator whose removal leaves two sides of measure at most 2/3 of the whole,
together with a cover of the separator by certified units.  The chordal route
removes a maximal clique of G2; the length route removes a window of
consecutive cover parts.  The cheaper valid candidate wins.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import chordal
from .graphs import Graph, OrderedCliqueCover, RestrictionMeasure, cover_length

G_CLIQUE = "G-CLIQUE"
UNIT_BOX = "UNIT-BOX"
MEASURE_PART = "MEASURE-PART"

CHORDAL = "CHORDAL"
LENGTH_WINDOW = "LENGTH-WINDOW"


@dataclass(frozen=True)
class CoverUnit:
    members: frozenset[int]
    certificate: str


@dataclass(frozen=True)
class SeparatorResult:
    s: frozenset[int]
    units: tuple[CoverUnit, ...]
    side_a: frozenset[int]
    side_b: frozenset[int]
    route: str
    cost: int


class NoSeparatorFound(RuntimeError):
    """Neither route produced a balanced candidate; carries a diagnostic dump."""

    def __init__(self, diagnostic: dict):
        super().__init__("no balanced separator found")
        self.diagnostic = diagnostic


Certifier = Callable[[frozenset, int], CoverUnit]


def clique_certifier(members: frozenset, part_index: int) -> CoverUnit:
    return CoverUnit(members, G_CLIQUE)


def unit_box_certifier(members: frozenset, part_index: int) -> CoverUnit:
    return CoverUnit(members, UNIT_BOX)


def chordal_route(G: Graph, G2: Graph, g1_cover: OrderedCliqueCover,
                  mu: RestrictionMeasure, certifier: Certifier = clique_certifier,
                  max_clique_evals: Optional[int] = None) -> Optional[SeparatorResult]:
    """Balanced maximal-clique separator of G2, covered by one unit per
    g1-cover part the clique touches."""
    found = chordal.balanced_clique_separator(G2, G, mu, max_evals=max_clique_evals)
    if found is None:
        return None
    idx = g1_cover.index_of
    groups: dict[int, set[int]] = {}
    for v in found.clique:
        groups.setdefault(idx[v], set()).add(v)
    units = tuple(certifier(frozenset(groups[i]), i) for i in sorted(groups))
    return SeparatorResult(found.clique, units, found.side_a, found.side_b,
                           CHORDAL, len(units))


def length_window_route(G: Graph, g1_cover: OrderedCliqueCover,
                        mu: RestrictionMeasure) -> Optional[SeparatorResult]:
    """Remove a window of consecutive g1-cover parts.

    Edges of G span at most l part indices, so the parts before and after a
    window of l parts cannot interact.  Among balanced windows the one of
    minimum measure wins; if no window of width l balances, the width grows
    until the (always balanced) full-range window is reached.
    """
    parts = g1_cover.parts
    k = len(parts)
    if k == 0:
        return None
    length = cover_length(G, g1_cover).value
    all_vs = frozenset().union(*parts)
    total = mu.of(all_vs)
    prefix = []
    acc: set[int] = set()
    for p in parts:
        acc |= p
        prefix.append(frozenset(acc))

    def side_sets(i, j):
        """Vertices in parts < i and parts > j."""
        a = prefix[i - 1] if i > 0 else frozenset()
        b = all_vs - prefix[j]
        return a, b

    def side_measures(a, b):
        wa, wb = mu.of(a), mu.of(b)
        if 3 * wa <= 2 * total and 3 * wb <= 2 * total:
            return max(wa, wb)
        return None

    widths = []
    if length == 0:
        widths.append(0)
    widths.extend(range(max(length, 1), k + 1))
    for w in widths:
        # ties among equal-cost windows go to the better-balanced, then
        # leftmost one
        best = None
        if w == 0:
            # an edgeless gap between consecutive parts: empty separator
            for i in range(1, k):
                a, b = side_sets(i, i - 1)
                larger = side_measures(a, b)
                if larger is None:
                    continue
                key = (0, larger, i)
                if best is None or key < best[0]:
                    best = (key, frozenset(), a, b)
        else:
            for i in range(0, k - w + 1):
                s = frozenset().union(*parts[i:i + w])
                a, b = side_sets(i, i + w - 1)
                larger = side_measures(a, b)
                if larger is None:
                    continue
                key = (mu.of(s), larger, i)
                if best is None or key < best[0]:
                    best = (key, s, a, b)
        if best is None:
            continue
        (cost, _larger, _i), s, a, b = best
        units = _measure_part_units(mu, s)
        return SeparatorResult(s, units, a, b, LENGTH_WINDOW, cost)
    return None


def _measure_part_units(mu: RestrictionMeasure, s: frozenset) -> tuple[CoverUnit, ...]:
    groups: dict[int, set[int]] = {}
    part_of = mu.part_of
    for v in s:
        groups.setdefault(part_of[v], set()).add(v)
    return tuple(CoverUnit(frozenset(groups[i]), MEASURE_PART)
                 for i in sorted(groups))


def separate(G: Graph, g1_cover: OrderedCliqueCover, G2: Optional[Graph],
             mu: RestrictionMeasure, certifier: Certifier = clique_certifier,
             max_clique_evals: Optional[int] = None) -> SeparatorResult:
    """Best of both routes by unit count; CHORDAL wins ties.

    G2 may be None to skip the chordal route (the length route alone always
    succeeds for a nonempty cover, falling back to the full-range window).
    """
    candidates = []
    if G2 is not None:
        cand = chordal_route(G, G2, g1_cover, mu, certifier, max_clique_evals)
        if cand is not None:
            candidates.append(cand)
    cand = length_window_route(G, g1_cover, mu)
    if cand is not None:
        candidates.append(cand)
    if not candidates:
        raise NoSeparatorFound(_diagnostic(G, g1_cover, mu))
    best = min(candidates, key=lambda r: (r.cost, 0 if r.route == CHORDAL else 1))
    return best


def _diagnostic(G, g1_cover, mu):
    return {
        "n": G.n,
        "edges": sorted(G.edges()),
        "g1_parts": [sorted(p) for p in g1_cover.parts],
        "measure_parts": [sorted(p) for p in mu.cover.parts],
    }


def check_separator(G: Graph, mu: RestrictionMeasure,
                    res: SeparatorResult) -> list[str]:
    """Contract violations of a SeparatorResult, empty when valid.

    Checks the three-way partition, the edge cut, the 2/3 balance, and that
    the units exactly cover the separator.  Certificate geometry is validated
    by the callers that know the instance.
    """
    problems = []
    all_vs = frozenset(range(G.n))
    if res.s | res.side_a | res.side_b != all_vs:
        problems.append("s, side_a, side_b do not cover V")
    if (res.s & res.side_a) or (res.s & res.side_b) or (res.side_a & res.side_b):
        problems.append("s, side_a, side_b overlap")
    for u, v in G.edges():
        if (u in res.side_a and v in res.side_b) or (u in res.side_b and v in res.side_a):
            problems.append(f"edge ({u},{v}) crosses the sides")
            break
    total = mu.of(all_vs)
    for name, side in (("side_a", res.side_a), ("side_b", res.side_b)):
        if 3 * mu.of(side) > 2 * total:
            problems.append(f"{name} exceeds 2/3 of the measure")
    covered: set[int] = set()
    for unit in res.units:
        if covered & unit.members:
            problems.append("units overlap")
        covered |= unit.members
        if unit.certificate == G_CLIQUE:
            mem = sorted(unit.members)
            for a in range(len(mem)):
                for b in range(a + 1, len(mem)):
                    if not G.has_edge(mem[a], mem[b]):
                        problems.append(f"G-CLIQUE unit not a clique: {mem}")
        elif unit.certificate == MEASURE_PART:
            part_of = mu.part_of
            if len({part_of[v] for v in unit.members}) > 1:
                problems.append("MEASURE-PART unit spans two measure parts")
    if covered != res.s:
        problems.append("units do not exactly cover s")
    if res.cost != len(res.units):
        problems.append("cost does not match the unit count")
    return problems
