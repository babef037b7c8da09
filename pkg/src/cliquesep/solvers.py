"""Separator-driven exact and PTAS solvers.

Three applications share the same recursion skeleton: split into connected
components, solve leaves exactly when the restriction measure is small, and
otherwise divide through a balanced separator.  The exact minimizers (piercing
and disc cover) run a separator-guided branch-and-bound with certified
pruning; the maximizer (independent set) enumerates independent selections
inside the separator.  Every public solver re-verifies feasibility of its
answer with a geometry-only scan before returning.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .geometry import (Disc, GridFrame, PointSite, Rect, SCALE,
                       candidate_discs, candidate_pierce_points,
                       greedy_cover_and_is_rects, greedy_disc_cover,
                       helly_point, quarter_cell_partition,
                       rect_intersection_graph, sq_dist, strip_cover_rects,
                       strip_adjacency_graph_points, unit_distance_graph,
                       vertical_strip_cover_points, x_chordal_graph,
                       y_chordal_graph_points, y_overlap_graph)
from .graphs import (OrderedCliqueCover, RestrictionMeasure,
                     components_within, cover_length, induced_subgraph)
from .separator import (G_CLIQUE, MEASURE_PART, UNIT_BOX, CoverUnit,
                        SeparatorResult, clique_certifier, separate,
                        unit_box_certifier)

TraceHook = Callable[[int, int, str, int], None]

_CHORDAL_BUDGET_OPS = 2_000_000


@dataclass(frozen=True)
class SolveConfig:
    """Knobs shared by all solvers.

    epsilon: PTAS approximation parameter in (0, 1).
    base_threshold: exact recursion becomes a leaf at measure <= t0.
    ptas_leaf_constant: PTAS switches to the exact solver at
        measure <= c0 / epsilon^2.
    enum_budget_factor: beam width multiplier for the incumbent-seeding dive
        of the branch-and-bound minimizers.
    """

    epsilon: Optional[float] = None
    base_threshold: int = 4
    ptas_leaf_constant: int = 8
    enum_budget_factor: int = 3

    def __post_init__(self):
        if self.epsilon is not None and not (0 < float(self.epsilon) < 1):
            raise ValueError("epsilon must lie in (0, 1)")
        if self.base_threshold < 1 or self.ptas_leaf_constant < 1:
            raise ValueError("thresholds must be at least 1")

    def eps_exact(self) -> Fraction:
        if self.epsilon is None:
            raise ValueError("this solver needs epsilon")
        return Fraction(str(self.epsilon))

    def ptas_leaf_threshold(self) -> Fraction:
        e = self.eps_exact()
        return Fraction(self.ptas_leaf_constant) / (e * e)


@dataclass(frozen=True)
class MisSolution:
    chosen: frozenset[int]
    certified_independent: bool

    @property
    def value(self) -> int:
        return len(self.chosen)


@dataclass(frozen=True)
class PierceSolution:
    points: tuple[PointSite, ...]

    @property
    def value(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CoverSolution:
    discs: tuple[Disc, ...]

    @property
    def value(self) -> int:
        return len(self.discs)


# ---------------------------------------------------------------------------
# post-hoc feasibility checks (geometry-only, no solver code paths)


def verify_independent_rects(rects: Sequence[Rect], chosen) -> bool:
    ids = sorted(chosen)
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            if rects[ids[a]].intersects(rects[ids[b]]):
                return False
    return True


def verify_piercing(rects: Sequence[Rect], points: Sequence[PointSite]) -> bool:
    return all(any(r.contains_point(p.x, p.y) for p in points) for r in rects)


def verify_disc_cover(points: Sequence[PointSite], discs: Sequence[Disc]) -> bool:
    return all(any(d.covers(p) for d in discs) for p in points)


# ---------------------------------------------------------------------------
# solver contexts: one-time global structures per instance


class _BaseContext:
    kind = "?"

    def mu_of(self, F) -> int:
        part_of = self.part_of
        return len({part_of[v] for v in F})

    def components(self, F):
        return components_within(self.G.adj, F)

    def neighbors_of_set(self, I, F):
        out = set()
        for v in I:
            out |= self.G.adj[v] & F
        return frozenset(out - set(I))

    def separate_subset(self, F: frozenset, depth: int,
                        trace: Optional[TraceHook] = None) -> SeparatorResult:
        """Separator for the induced subproblem on F, in global ids."""
        vs = sorted(F)
        local = {v: i for i, v in enumerate(vs)}
        Gf = induced_subgraph(self.G, vs)
        G1f = induced_subgraph(self.G1, vs)
        G2f = induced_subgraph(self.G2, vs)
        line_of = self.line_of
        by_line: dict[int, list[int]] = {}
        for v in vs:
            by_line.setdefault(line_of[v], []).append(local[v])
        g1_parts = tuple(frozenset(by_line[k]) for k in sorted(by_line))
        g1_cov = OrderedCliqueCover(G1f, g1_parts)
        part_of = self.part_of
        by_part: dict[int, list[int]] = {}
        for v in vs:
            by_part.setdefault(part_of[v], []).append(local[v])
        mu_parts = tuple(frozenset(by_part[k]) for k in sorted(by_part))
        mu_f = RestrictionMeasure(OrderedCliqueCover(Gf, mu_parts))
        nf, m2f = len(vs), G2f.m
        work = nf * (nf + m2f)
        if work <= _CHORDAL_BUDGET_OPS:
            max_evals = None
        else:
            max_evals = max(4, _CHORDAL_BUDGET_OPS // (5 * (nf + m2f)))
        res = separate(Gf, g1_cov, G2f, mu_f, certifier=self.certifier,
                       max_clique_evals=max_evals)
        out = SeparatorResult(
            s=frozenset(vs[i] for i in res.s),
            units=tuple(CoverUnit(frozenset(vs[i] for i in u.members),
                                  u.certificate) for u in res.units),
            side_a=frozenset(vs[i] for i in res.side_a),
            side_b=frozenset(vs[i] for i in res.side_b),
            route=res.route,
            cost=res.cost,
        )
        if trace is not None:
            trace(depth, len(mu_parts), out.route, out.cost)
        return out


class RectContext(_BaseContext):
    kind = "rects"
    certifier = staticmethod(clique_certifier)

    def __init__(self, rects: Sequence[Rect]):
        self.rects = list(rects)
        self.G = rect_intersection_graph(self.rects)
        self.G1 = y_overlap_graph(self.rects)
        self.G2 = x_chordal_graph(self.rects)
        self.strip_cover = strip_cover_rects(self.rects)
        self.line_of = [r.stab_line for r in self.rects]
        self.measure_cover, self.witness = greedy_cover_and_is_rects(self.rects)
        self.mu = RestrictionMeasure(self.measure_cover)
        self.part_of = dict(self.mu.part_of)


class PointContext(_BaseContext):
    kind = "points"
    certifier = staticmethod(unit_box_certifier)

    def __init__(self, points: Sequence[PointSite]):
        self.points = list(points)
        self.frame = GridFrame.for_points(self.points)
        self.G = unit_distance_graph(self.points)
        self.G1 = strip_adjacency_graph_points(self.points, self.frame)
        self.G2 = y_chordal_graph_points(self.points)
        self.strip_cover = vertical_strip_cover_points(self.points, self.frame)
        self.line_of = [self.frame.strip_index(p.x) for p in self.points]
        self.quarters = quarter_cell_partition(self.points, self.frame)
        parts = tuple(group for _, group in self.quarters)
        self.measure_cover = OrderedCliqueCover(self.G, parts)
        self.mu = RestrictionMeasure(self.measure_cover)
        self.part_of = dict(self.mu.part_of)
        self.feasible_discs = greedy_disc_cover(self.points, self.frame)


# ---------------------------------------------------------------------------
# maximum independent set (rectangles)


def _class_reps(ctx, members, F, exclude):
    """Deduplicate clique members by their adjacency outside ``exclude``.

    Members of one clique with identical neighborhoods in F (ignoring the
    clique itself) are interchangeable for independent-set purposes; the
    lowest id represents each class.
    """
    classes: dict[frozenset, int] = {}
    for v in sorted(members):
        sig = frozenset(ctx.G.adj[v] & F) - exclude
        if sig not in classes:
            classes[sig] = v
    return sorted(classes.values())


def _independent_selections(ctx, units, F):
    """All independent subsets of the separator picking at most one vertex per
    clique unit, up to neighborhood-equivalence inside each unit."""
    options = []
    for unit in units:
        options.append(_class_reps(ctx, unit.members, F, unit.members))
    chosen: list[int] = []

    def rec(i):
        if i == len(options):
            yield frozenset(chosen)
            return
        yield from rec(i + 1)  # skip this unit
        for v in options[i]:
            if all(v not in ctx.G.adj[u] for u in chosen):
                chosen.append(v)
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


def _mis_leaf(ctx, F: frozenset) -> frozenset:
    """Exact MIS when few measure parts touch F: one pick per clique part."""
    by_part: dict[int, list[int]] = {}
    for v in F:
        by_part.setdefault(ctx.part_of[v], []).append(v)
    groups = [frozenset(by_part[k]) for k in sorted(by_part)]
    reps = [_class_reps(ctx, g, F, g) for g in groups]
    best: list[int] = []
    chosen: list[int] = []

    def rec(i):
        nonlocal best
        if len(chosen) + (len(reps) - i) <= len(best):
            return
        if i == len(reps):
            if len(chosen) > len(best):
                best = list(chosen)
            return
        for v in reps[i]:
            if all(v not in ctx.G.adj[u] for u in chosen):
                chosen.append(v)
                rec(i + 1)
                chosen.pop()
        rec(i + 1)

    rec(0)
    return frozenset(best)


def _mis_subset(ctx, F: frozenset, cfg: SolveConfig, depth: int,
                trace: Optional[TraceHook], memo: dict) -> frozenset:
    if not F:
        return frozenset()
    hit = memo.get(F)
    if hit is not None:
        return hit
    comps = ctx.components(F)
    if len(comps) > 1:
        out = frozenset().union(*(_mis_subset(ctx, c, cfg, depth, trace, memo)
                                  for c in comps))
        memo[F] = out
        return out
    if ctx.mu_of(F) <= cfg.base_threshold:
        out = _mis_leaf(ctx, F)
        memo[F] = out
        return out
    res = ctx.separate_subset(F, depth, trace)
    best: Optional[frozenset] = None
    for I in _independent_selections(ctx, res.units, F):
        rem = F - res.s - ctx.neighbors_of_set(I, F)
        sol = set(I)
        for comp in components_within(ctx.G.adj, rem):
            sol |= _mis_subset(ctx, comp, cfg, depth + 1, trace, memo)
        cand = frozenset(sol)
        if best is None or len(cand) > len(best) or \
                (len(cand) == len(best) and sorted(cand) < sorted(best)):
            best = cand
    memo[F] = best
    return best


def mis_exact(rects: Sequence[Rect], cfg: Optional[SolveConfig] = None,
              trace: Optional[TraceHook] = None,
              ctx: Optional[RectContext] = None) -> MisSolution:
    """Optimal independent set of unit-height rectangles."""
    cfg = cfg or SolveConfig()
    ctx = ctx or RectContext(rects)
    chosen = _mis_subset(ctx, frozenset(range(len(ctx.rects))), cfg, 0, trace, {})
    return MisSolution(chosen, verify_independent_rects(ctx.rects, chosen))


def _mis_ptas_subset(ctx, F: frozenset, cfg: SolveConfig, threshold: Fraction,
                     depth: int, trace, memo) -> frozenset:
    if not F:
        return frozenset()
    comps = ctx.components(F)
    if len(comps) > 1:
        return frozenset().union(*(_mis_ptas_subset(ctx, c, cfg, threshold,
                                                    depth, trace, memo)
                                   for c in comps))
    if ctx.mu_of(F) <= threshold:
        return _mis_subset(ctx, F, cfg, depth, trace, memo)
    res = ctx.separate_subset(F, depth, trace)
    sol = set(_mis_ptas_subset(ctx, res.side_a, cfg, threshold, depth + 1,
                               trace, memo))
    sol |= _mis_ptas_subset(ctx, res.side_b, cfg, threshold, depth + 1,
                            trace, memo)
    # the separator was discarded; greedily re-admit what still fits
    for v in sorted(res.s):
        if not (ctx.G.adj[v] & sol):
            sol.add(v)
    return frozenset(sol)


def mis_ptas(rects: Sequence[Rect], cfg: SolveConfig,
             trace: Optional[TraceHook] = None,
             ctx: Optional[RectContext] = None) -> MisSolution:
    """(1-eps)-approximate independent set; exact below the measure leaf."""
    ctx = ctx or RectContext(rects)
    threshold = cfg.ptas_leaf_threshold()
    chosen = _mis_ptas_subset(ctx, frozenset(range(len(ctx.rects))), cfg,
                              threshold, 0, trace, {})
    return MisSolution(chosen, verify_independent_rects(ctx.rects, chosen))


# ---------------------------------------------------------------------------
# generic covering branch-and-bound
#
# Both minimizers share this shape: "items" must be hit/covered by
# "choices"; a choice covers a set of items.  Branch on the lowest-id
# uncovered item over the choices covering it; prune with an
# instance-specific packing lower bound.


class _CoverSearch:
    def __init__(self, item_choices, choice_items, lower_bound):
        self.item_choices = item_choices  # item -> tuple of choice ids
        self.choice_items = choice_items  # choice id -> frozenset of items
        self.lower_bound = lower_bound    # frozenset items -> int

    def greedy(self, items: frozenset) -> list[int]:
        picked = []
        uncovered = set(items)
        while uncovered:
            target = min(uncovered)
            cands = self.item_choices[target]
            best = max(cands, key=lambda c: (len(self.choice_items[c] & uncovered), -c))
            picked.append(best)
            uncovered -= self.choice_items[best]
        return picked

    def solve(self, items: frozenset):
        """Minimum choice set covering ``items``; returns (cost, chosen ids)."""
        seed = self.greedy(items)
        best = [len(seed), list(seed)]

        def rec(uncovered: frozenset, picked: list[int]):
            if not uncovered:
                if len(picked) < best[0]:
                    best[0] = len(picked)
                    best[1] = list(picked)
                return
            if len(picked) + self.lower_bound(uncovered) >= best[0]:
                return
            target = min(uncovered)
            cands = sorted(self.item_choices[target],
                           key=lambda c: (-len(self.choice_items[c] & uncovered), c))
            seen_effects = set()
            for c in cands:
                effect = self.choice_items[c] & uncovered
                if effect in seen_effects:
                    continue
                seen_effects.add(effect)
                picked.append(c)
                rec(uncovered - effect, picked)
                picked.pop()

        rec(items, [])
        return best[0], best[1]


def _split_search(search: _CoverSearch, mandatory: frozenset, rest: frozenset,
                  solve_rest):
    """B&B over the mandatory items; leftovers go to the side recursion."""
    seed = search.greedy(mandatory | rest)
    best_cost = len(seed)
    best_sol = list(seed)

    def rec(uncov_mand: frozenset, uncov_rest: frozenset, picked: list[int]):
        nonlocal best_cost, best_sol
        if not uncov_mand:
            extra_cost, extra = solve_rest(uncov_rest)
            total = len(picked) + extra_cost
            if total < best_cost:
                best_cost = total
                best_sol = list(picked) + list(extra)
            return
        if len(picked) + search.lower_bound(uncov_mand | uncov_rest) >= best_cost:
            return
        target = min(uncov_mand)
        cands = sorted(search.item_choices[target],
                       key=lambda c: (-len(search.choice_items[c]
                                          & (uncov_mand | uncov_rest)), c))
        seen_effects = set()
        for c in cands:
            eff_m = search.choice_items[c] & uncov_mand
            eff_r = search.choice_items[c] & uncov_rest
            key = (eff_m, eff_r)
            if key in seen_effects:
                continue
            seen_effects.add(key)
            picked.append(c)
            rec(uncov_mand - eff_m, uncov_rest - eff_r, picked)
            picked.pop()

    rec(mandatory, rest, [])
    return best_cost, best_sol


# ---------------------------------------------------------------------------
# piercing (rectangles)


class PierceContext(RectContext):
    def __init__(self, rects: Sequence[Rect]):
        super().__init__(rects)
        self.cand_points = candidate_pierce_points(self.rects)
        self.point_rects = [frozenset(i for i, r in enumerate(self.rects)
                                      if r.contains_point(p.x, p.y))
                            for p in self.cand_points]
        self.rect_points = [tuple(c for c, mask in enumerate(self.point_rects)
                                  if i in mask)
                            for i in range(len(self.rects))]

    def disjoint_lower_bound(self, F: frozenset) -> int:
        """Pairwise-disjoint rectangles in F each need their own point."""
        kept: list[int] = []
        for i in sorted(F, key=lambda i: (self.rects[i].x_hi, self.rects[i].y_lo, i)):
            if all(i not in self.G.adj[j] for j in kept):
                kept.append(i)
        return len(kept)

    def search(self, F: frozenset) -> _CoverSearch:
        item_choices = {i: self.rect_points[i] for i in F}
        return _CoverSearch(item_choices, self.point_rects,
                            self.disjoint_lower_bound)


def _pierce_subset(ctx: PierceContext, F: frozenset, cfg: SolveConfig,
                   depth: int, trace, memo) -> tuple[int, list[int]]:
    """Optimal piercing of the rectangles in F; returns (size, point ids)."""
    if not F:
        return 0, []
    hit = memo.get(F)
    if hit is not None:
        return hit
    comps = ctx.components(F)
    if len(comps) > 1:
        cost, sol = 0, []
        for c in comps:
            cc, cs = _pierce_subset(ctx, c, cfg, depth, trace, memo)
            cost += cc
            sol += cs
        memo[F] = (cost, sol)
        return cost, sol
    search = ctx.search(F)
    if ctx.mu_of(F) <= cfg.base_threshold:
        cost, sol = search.solve(F)
        memo[F] = (cost, sol)
        return cost, sol
    res = ctx.separate_subset(F, depth, trace)

    def solve_rest(rest: frozenset):
        cost, sol = 0, []
        for comp in components_within(ctx.G.adj, rest):
            cc, cs = _pierce_subset(ctx, comp, cfg, depth + 1, trace, memo)
            cost += cc
            sol += cs
        return cost, sol

    cost, sol = _split_search(search, res.s, F - res.s, solve_rest)
    memo[F] = (cost, sol)
    return cost, sol


def pierce_exact(rects: Sequence[Rect], cfg: Optional[SolveConfig] = None,
                 trace: Optional[TraceHook] = None,
                 ctx: Optional[PierceContext] = None) -> PierceSolution:
    """Minimum piercing set, drawn from the corner candidate grid."""
    cfg = cfg or SolveConfig()
    ctx = ctx or PierceContext(rects)
    _, ids = _pierce_subset(ctx, frozenset(range(len(ctx.rects))), cfg, 0,
                            trace, {})
    pts = tuple(ctx.cand_points[i] for i in sorted(set(ids)))
    if not verify_piercing(ctx.rects, pts):
        raise AssertionError("pierce_exact produced an infeasible solution")
    return PierceSolution(pts)


def _pierce_ptas_subset(ctx: PierceContext, F: frozenset, cfg: SolveConfig,
                        threshold: Fraction, depth: int, trace,
                        memo) -> list[PointSite]:
    if not F:
        return []
    comps = ctx.components(F)
    if len(comps) > 1:
        out = []
        for c in comps:
            out += _pierce_ptas_subset(ctx, c, cfg, threshold, depth, trace, memo)
        return out
    if ctx.mu_of(F) <= threshold:
        _, ids = _pierce_subset(ctx, F, cfg, depth, trace, memo)
        return [ctx.cand_points[i] for i in sorted(set(ids))]
    res = ctx.separate_subset(F, depth, trace)
    # every separator unit is a rectangle clique: one Helly point retires it
    points = [helly_point([ctx.rects[i] for i in sorted(u.members)])
              for u in res.units]
    out = list(points)
    for side in (res.side_a, res.side_b):
        left = frozenset(i for i in side
                         if not any(ctx.rects[i].contains_point(p.x, p.y)
                                    for p in points))
        out += _pierce_ptas_subset(ctx, left, cfg, threshold, depth + 1,
                                   trace, memo)
    return out


def pierce_ptas(rects: Sequence[Rect], cfg: SolveConfig,
                trace: Optional[TraceHook] = None,
                ctx: Optional[PierceContext] = None) -> PierceSolution:
    """(1+eps)-approximate piercing; exact below the measure leaf."""
    ctx = ctx or PierceContext(rects)
    threshold = cfg.ptas_leaf_threshold()
    pts = _pierce_ptas_subset(ctx, frozenset(range(len(ctx.rects))), cfg,
                              threshold, 0, trace, {})
    uniq = tuple(sorted(set(pts)))
    if not verify_piercing(ctx.rects, uniq):
        raise AssertionError("pierce_ptas produced an infeasible solution")
    return PierceSolution(uniq)


# ---------------------------------------------------------------------------
# disc cover (points)


class CoverContext(PointContext):
    def __init__(self, points: Sequence[PointSite]):
        super().__init__(points)
        self.candidates = candidate_discs(self.points, self.G)
        self.disc_points = [frozenset(i for i, p in enumerate(self.points)
                                      if d.covers(p))
                            for d in self.candidates]
        self.point_discs = [tuple(c for c, mask in enumerate(self.disc_points)
                                  if i in mask)
                            for i in range(len(self.points))]

    def scatter_lower_bound(self, F: frozenset) -> int:
        """Points pairwise farther than one unit each need their own disc."""
        limit = SCALE * SCALE
        kept: list[int] = []
        for i in sorted(F):
            if all(sq_dist(self.points[i], self.points[j]) > limit for j in kept):
                kept.append(i)
        return len(kept)

    def search(self, F: frozenset) -> _CoverSearch:
        item_choices = {i: self.point_discs[i] for i in F}
        return _CoverSearch(item_choices, self.disc_points,
                            self.scatter_lower_bound)

    def candidate_covering(self, group: frozenset) -> int:
        """A candidate disc covering the whole group (must exist whenever the
        group fits in some unit-diameter disc, by the replacement argument)."""
        for c, mask in enumerate(self.disc_points):
            if group <= mask:
                return c
        raise AssertionError("no candidate disc covers a coverable group")


def _cover_subset(ctx: CoverContext, F: frozenset, cfg: SolveConfig,
                  depth: int, trace, memo) -> tuple[int, list[int]]:
    """Optimal disc cover of the points in F; returns (size, candidate ids)."""
    if not F:
        return 0, []
    hit = memo.get(F)
    if hit is not None:
        return hit
    comps = ctx.components(F)
    if len(comps) > 1:
        cost, sol = 0, []
        for c in comps:
            cc, cs = _cover_subset(ctx, c, cfg, depth, trace, memo)
            cost += cc
            sol += cs
        memo[F] = (cost, sol)
        return cost, sol
    search = ctx.search(F)
    if ctx.mu_of(F) <= cfg.base_threshold:
        cost, sol = search.solve(F)
        memo[F] = (cost, sol)
        return cost, sol
    res = ctx.separate_subset(F, depth, trace)

    def solve_rest(rest: frozenset):
        cost, sol = 0, []
        for comp in components_within(ctx.G.adj, rest):
            cc, cs = _cover_subset(ctx, comp, cfg, depth + 1, trace, memo)
            cost += cc
            sol += cs
        return cost, sol

    cost, sol = _split_search(search, res.s, F - res.s, solve_rest)
    memo[F] = (cost, sol)
    return cost, sol


def disccover_exact(points: Sequence[PointSite],
                    cfg: Optional[SolveConfig] = None,
                    trace: Optional[TraceHook] = None,
                    ctx: Optional[CoverContext] = None) -> CoverSolution:
    """Minimum unit-diameter disc cover, drawn from the candidate set."""
    cfg = cfg or SolveConfig()
    ctx = ctx or CoverContext(points)
    _, ids = _cover_subset(ctx, frozenset(range(len(ctx.points))), cfg, 0,
                           trace, {})
    discs = tuple(ctx.candidates[i] for i in sorted(set(ids)))
    if not verify_disc_cover(ctx.points, discs):
        raise AssertionError("disccover_exact produced an infeasible solution")
    return CoverSolution(discs)


def _quarter_groups(ctx: CoverContext, members: frozenset):
    """Split a unit's members at its bounding-box midpoints: at most four
    groups, each inside a half-unit square and hence candidate-coverable."""
    xs = [ctx.points[i].x for i in members]
    ys = [ctx.points[i].y for i in members]
    mx = Fraction(min(xs) + max(xs), 2)
    my = Fraction(min(ys) + max(ys), 2)
    groups: dict[tuple[bool, bool], set[int]] = {}
    for i in members:
        key = (Fraction(ctx.points[i].x) > mx, Fraction(ctx.points[i].y) > my)
        groups.setdefault(key, set()).add(i)
    return [frozenset(g) for _, g in sorted(groups.items())]


def _cover_ptas_subset(ctx: CoverContext, F: frozenset, cfg: SolveConfig,
                       threshold: Fraction, depth: int, trace,
                       memo) -> list[int]:
    if not F:
        return []
    comps = ctx.components(F)
    if len(comps) > 1:
        out = []
        for c in comps:
            out += _cover_ptas_subset(ctx, c, cfg, threshold, depth, trace, memo)
        return out
    if ctx.mu_of(F) <= threshold:
        _, ids = _cover_subset(ctx, F, cfg, depth, trace, memo)
        return ids
    res = ctx.separate_subset(F, depth, trace)
    chosen: list[int] = []
    for unit in res.units:
        if unit.certificate == MEASURE_PART:
            groups = [unit.members]
        else:
            groups = _quarter_groups(ctx, unit.members)
        for g in groups:
            chosen.append(ctx.candidate_covering(g))
    covered = frozenset().union(*(ctx.disc_points[c] for c in chosen))
    for side in (res.side_a, res.side_b):
        chosen += _cover_ptas_subset(ctx, side - covered, cfg, threshold,
                                     depth + 1, trace, memo)
    return chosen


def disccover_ptas(points: Sequence[PointSite], cfg: SolveConfig,
                   trace: Optional[TraceHook] = None,
                   ctx: Optional[CoverContext] = None) -> CoverSolution:
    """(1+eps)-approximate disc cover; exact below the measure leaf."""
    ctx = ctx or CoverContext(points)
    threshold = cfg.ptas_leaf_threshold()
    ids = _cover_ptas_subset(ctx, frozenset(range(len(ctx.points))), cfg,
                             threshold, 0, trace, {})
    discs = tuple(ctx.candidates[i] for i in sorted(set(ids)))
    if not verify_disc_cover(ctx.points, discs):
        raise AssertionError("disccover_ptas produced an infeasible solution")
    return CoverSolution(discs)


# ---------------------------------------------------------------------------
# separator profiling (benchmark harness and contract sweeps)


@dataclass(frozen=True)
class SeparatorCall:
    n: int
    mu: int
    length: int
    cost: int
    route: str


def check_separator_call(ctx, F: frozenset, res: SeparatorResult) -> list[str]:
    """Contract violations of one separator call on subset F, in global ids."""
    problems = []
    if res.s | res.side_a | res.side_b != F:
        problems.append("s, side_a, side_b do not partition F")
    if (res.s & res.side_a) or (res.s & res.side_b) or (res.side_a & res.side_b):
        problems.append("s, side_a, side_b overlap")
    if any(ctx.G.adj[u] & res.side_b for u in res.side_a):
        problems.append("an edge crosses the sides")
    total = ctx.mu_of(F)
    for name, side in (("side_a", res.side_a), ("side_b", res.side_b)):
        if 3 * ctx.mu_of(side) > 2 * total:
            problems.append(f"{name} exceeds 2/3 of the measure")
    covered: set[int] = set()
    for unit in res.units:
        if covered & unit.members:
            problems.append("units overlap")
        covered |= unit.members
        mem = sorted(unit.members)
        if unit.certificate == G_CLIQUE:
            for a in range(len(mem)):
                for b in range(a + 1, len(mem)):
                    if mem[b] not in ctx.G.adj[mem[a]]:
                        problems.append(f"G-CLIQUE unit not a clique: {mem}")
        elif unit.certificate == MEASURE_PART:
            if len({ctx.part_of[v] for v in mem}) > 1:
                problems.append("MEASURE-PART unit spans two measure parts")
        elif unit.certificate == UNIT_BOX:
            xs = [ctx.points[v].x for v in mem]
            ys = [ctx.points[v].y for v in mem]
            if mem and (max(xs) - min(xs) > SCALE or max(ys) - min(ys) > SCALE):
                problems.append(f"UNIT-BOX unit exceeds a 1x1 box: {mem}")
        else:
            problems.append(f"unknown certificate {unit.certificate!r}")
    if covered != res.s:
        problems.append("units do not exactly cover s")
    if res.cost != len(res.units):
        problems.append("cost does not match the unit count")
    return problems


def separation_profile(ctx, t0: int = 4, validator=None) -> list[SeparatorCall]:
    """Drive the bare separation recursion and record every separator call.

    ``validator(F, res)`` is invoked per call when given (contract sweeps).
    """
    rows: list[SeparatorCall] = []

    def rec(F: frozenset, depth: int):
        if not F:
            return
        comps = ctx.components(F)
        if len(comps) > 1:
            for c in comps:
                rec(c, depth)
            return
        if ctx.mu_of(F) <= t0:
            return
        vs = sorted(F)
        by_line: dict[int, list[int]] = {}
        for v in vs:
            by_line.setdefault(ctx.line_of[v], []).append(v)
        # the restricted strip cover keeps length <= the global one
        local = {v: i for i, v in enumerate(vs)}
        Gf = induced_subgraph(ctx.G, vs)
        parts = tuple(frozenset(local[v] for v in by_line[k])
                      for k in sorted(by_line))
        g1_cov = OrderedCliqueCover(Gf, parts)  # host unused by cover_length
        length = cover_length(Gf, g1_cov).value
        res = ctx.separate_subset(F, depth)
        if validator is not None:
            validator(F, res)
        rows.append(SeparatorCall(len(F), ctx.mu_of(F), length, res.cost,
                                  res.route))
        rec(res.side_a, depth + 1)
        rec(res.side_b, depth + 1)

    rec(frozenset(range(ctx.G.n)), 0)
    return rows
