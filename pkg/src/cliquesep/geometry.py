"""Geometric types and builders with exact arithmetic.

Coordinates are scaled integers: one geometric unit equals ``SCALE`` ticks, so
decimal inputs with at most six fractional digits are represented exactly and
every predicate (rectangle intersection, distance at most one, disc coverage)
reduces to integer or rational comparisons.  Disc centers arising from
two-point constructions are quadratic surds a + b*sqrt(r) with rational a, b,
r; coverage tests against them are still exact.

All sets are closed: boundary contact counts as intersection/coverage, and a
point pair at distance exactly one unit is adjacent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graphs import Graph, OrderedCliqueCover

SCALE = 10 ** 6  # ticks per geometric unit


def parse_coord(text: str) -> int:
    """Exact decimal string -> scaled integer.  At most 6 fractional digits."""
    text = text.strip()
    neg = text.startswith("-")
    if neg or text.startswith("+"):
        body = text[1:]
    else:
        body = text
    if "." in body:
        whole, frac = body.split(".", 1)
    else:
        whole, frac = body, ""
    if len(frac) > 6:
        raise ValueError(f"coordinate {text!r} has more than 6 fractional digits")
    if not (whole or frac) or not (whole + frac).isdigit():
        raise ValueError(f"malformed coordinate {text!r}")
    value = int(whole or "0") * SCALE + int((frac + "000000")[:6])
    return -value if neg else value


def format_coord(value: int) -> str:
    """Scaled integer -> canonical decimal string (round-trips exactly)."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole, frac = divmod(value, SCALE)
    text = f"{whole}.{frac:06d}".rstrip("0").rstrip(".")
    return sign + text


@dataclass(frozen=True, order=True)
class Rect:
    """Closed axis-parallel rectangle of height exactly one unit."""

    x_lo: int
    x_hi: int
    y_lo: int

    def __post_init__(self):
        if self.x_lo >= self.x_hi:
            raise ValueError("rectangle needs x_lo < x_hi")

    @property
    def y_hi(self) -> int:
        return self.y_lo + SCALE

    @property
    def stab_line(self) -> int:
        """Lowest integer horizontal line (in units) crossing the rectangle."""
        return -((-self.y_lo) // SCALE)

    def intersects(self, other: "Rect") -> bool:
        return (self.x_lo <= other.x_hi and other.x_lo <= self.x_hi
                and abs(self.y_lo - other.y_lo) <= SCALE)

    def contains_point(self, x: int, y: int) -> bool:
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi


@dataclass(frozen=True, order=True)
class PointSite:
    x: int
    y: int


def sq_dist(p: PointSite, q: PointSite) -> int:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


@dataclass(frozen=True)
class Disc:
    """Closed disc of unit diameter with center (ax + bx*sqrt(r), ay + by*sqrt(r)).

    Rational-centered discs have bx = by = 0 and r = 0.
    """

    ax: Fraction
    ay: Fraction
    bx: Fraction
    by: Fraction
    r: Fraction

    @classmethod
    def rational(cls, cx, cy) -> "Disc":
        return cls(Fraction(cx), Fraction(cy), Fraction(0), Fraction(0), Fraction(0))

    def key(self):
        return (self.ax, self.ay, self.bx, self.by, self.r)

    def covers(self, p: PointSite) -> bool:
        """Exact test |p - center|^2 <= (SCALE/2)^2 for a surd center."""
        dxa = Fraction(p.x) - self.ax
        dya = Fraction(p.y) - self.ay
        dxb = -self.bx
        dyb = -self.by
        rat = dxa * dxa + dya * dya + (dxb * dxb + dyb * dyb) * self.r
        irr = 2 * (dxa * dxb + dya * dyb)
        # decide rat + irr*sqrt(r) <= SCALE^2/4
        bound = Fraction(SCALE * SCALE, 4)
        d = bound - rat
        if irr == 0 or self.r == 0:
            return d >= 0
        if irr > 0:
            return d >= 0 and irr * irr * self.r <= d * d
        return d >= 0 or irr * irr * self.r >= d * d

    def center_float(self) -> tuple[float, float]:
        s = math.sqrt(float(self.r))
        return (float(self.ax) + float(self.bx) * s,
                float(self.ay) + float(self.by) * s)


@dataclass(frozen=True)
class GridFrame:
    """Unit grid with offset (ox, oy); no input point may lie on a cell line."""

    ox: Fraction
    oy: Fraction

    @classmethod
    def for_points(cls, points: Sequence[PointSite]) -> "GridFrame":
        """Scan fractional offsets until no point sits on a cell boundary.

        Integer point coordinates never coincide with a half-tick offset, so
        the very first candidate works; the scan is kept for robustness.
        """
        for den in range(2, 2 * len(points) + 4):
            off = Fraction(1, den)
            frame = cls(off, off)
            if frame.valid_for(points):
                return frame
        raise RuntimeError("no boundary-avoiding grid offset found")

    def valid_for(self, points: Iterable[PointSite]) -> bool:
        for p in points:
            if (Fraction(p.x) - self.ox) % SCALE == 0:
                return False
            if (Fraction(p.y) - self.oy) % SCALE == 0:
                return False
        return True

    def strip_index(self, x: int) -> int:
        return math.floor((Fraction(x) - self.ox) / SCALE)

    def row_index(self, y: int) -> int:
        return math.floor((Fraction(y) - self.oy) / SCALE)

    def cell_of(self, p: PointSite) -> tuple[int, int]:
        return (self.strip_index(p.x), self.row_index(p.y))

    def quarter_of(self, p: PointSite) -> tuple[int, int]:
        half = Fraction(SCALE, 2)
        qx = math.floor((Fraction(p.x) - self.ox) / half)
        qy = math.floor((Fraction(p.y) - self.oy) / half)
        return (qx, qy)

    def quarter_center(self, qx: int, qy: int) -> tuple[Fraction, Fraction]:
        half = Fraction(SCALE, 2)
        return (self.ox + (qx + Fraction(1, 2)) * half,
                self.oy + (qy + Fraction(1, 2)) * half)


class BoundaryPointError(ValueError):
    pass


# ---------------------------------------------------------------------------
# intersection-graph builders


def rect_intersection_graph(rects: Sequence[Rect]) -> Graph:
    """Edge iff closed rectangles intersect.

    Rectangles on the same stab line always overlap vertically, and only
    adjacent stab lines can interact, so the sweep runs per line pair.
    """
    n = len(rects)
    by_line: dict[int, list[int]] = {}
    for i, r in enumerate(rects):
        by_line.setdefault(r.stab_line, []).append(i)
    edges = []
    for line, ids in by_line.items():
        for other in (ids, by_line.get(line + 1, [])):
            same = other is ids
            pool = ids if same else ids + other
            pool = sorted(pool, key=lambda i: (rects[i].x_lo, i))
            active: list[int] = []
            for i in pool:
                ri = rects[i]
                active = [j for j in active if rects[j].x_hi >= ri.x_lo]
                for j in active:
                    if same or (rects[j].stab_line != ri.stab_line):
                        if abs(rects[j].y_lo - ri.y_lo) <= SCALE:
                            edges.append((min(i, j), max(i, j)))
                active.append(i)
    return Graph(n, set(edges))


def unit_distance_graph(points: Sequence[PointSite]) -> Graph:
    """Edge iff squared Euclidean distance <= SCALE^2, exactly."""
    n = len(points)
    cell: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(points):
        cell.setdefault((p.x // SCALE, p.y // SCALE), []).append(i)
    limit = SCALE * SCALE
    edges = []
    for (cx, cy), ids in cell.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                other = cell.get((cx + dx, cy + dy))
                if other is None:
                    continue
                for i in ids:
                    for j in other:
                        if i < j and sq_dist(points[i], points[j]) <= limit:
                            edges.append((i, j))
    return Graph(n, set(edges))


def _interval_overlap_graph(n: int, intervals: list[tuple[int, int]]) -> Graph:
    """Closed-interval overlap graph via a sweep; output sensitive."""
    order = sorted(range(n), key=lambda i: (intervals[i][0], i))
    active: list[int] = []
    edges = []
    for i in order:
        lo, hi = intervals[i]
        active = [j for j in active if intervals[j][1] >= lo]
        edges.extend((min(i, j), max(i, j)) for j in active)
        active.append(i)
    return Graph(n, edges)


def y_overlap_graph(rects: Sequence[Rect]) -> Graph:
    """G1 for rectangles: edge iff vertical extents overlap."""
    return _interval_overlap_graph(len(rects),
                                   [(r.y_lo, r.y_hi) for r in rects])


def x_chordal_graph(rects: Sequence[Rect]) -> Graph:
    """G2 for rectangles: edge iff horizontal extents overlap (interval graph)."""
    return _interval_overlap_graph(len(rects),
                                   [(r.x_lo, r.x_hi) for r in rects])


def strip_cover_rects(rects: Sequence[Rect]) -> OrderedCliqueCover:
    """Ordered cover of the y-overlap graph G1 by stab-line strips.

    Part i collects the rectangles whose lowest stabbing integer line is the
    i-th occupied line; intersecting rectangles land at most one part apart.
    """
    by_line: dict[int, list[int]] = {}
    for i, r in enumerate(rects):
        by_line.setdefault(r.stab_line, []).append(i)
    parts = [frozenset(by_line[line]) for line in sorted(by_line)]
    return OrderedCliqueCover(y_overlap_graph(rects), tuple(parts))


def strip_adjacency_graph_points(points: Sequence[PointSite], frame: GridFrame) -> Graph:
    """G1 for points: edge iff vertical-strip indices differ by at most one."""
    strips = [frame.strip_index(p.x) for p in points]
    by_strip: dict[int, list[int]] = {}
    for i, s in enumerate(strips):
        by_strip.setdefault(s, []).append(i)
    edges = []
    for s, ids in by_strip.items():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.append((ids[a], ids[b]))
        for j in by_strip.get(s + 1, []):
            for i in ids:
                edges.append((min(i, j), max(i, j)))
    return Graph(len(points), set(edges))


def vertical_strip_cover_points(points: Sequence[PointSite],
                                frame: GridFrame) -> OrderedCliqueCover:
    """Ordered cover of G1 by vertical unit strips, left to right."""
    if not frame.valid_for(points):
        raise BoundaryPointError("a point lies on a grid boundary line")
    by_strip: dict[int, list[int]] = {}
    for i, p in enumerate(points):
        by_strip.setdefault(frame.strip_index(p.x), []).append(i)
    parts = [frozenset(by_strip[s]) for s in sorted(by_strip)]
    return OrderedCliqueCover(strip_adjacency_graph_points(points, frame),
                              tuple(parts))


def y_chordal_graph_points(points: Sequence[PointSite]) -> Graph:
    """G2 for points: edge iff |dy| <= 1 unit (a unit-interval graph)."""
    return _interval_overlap_graph(
        len(points), [(p.y - SCALE // 2, p.y + SCALE - SCALE // 2) for p in points])


# ---------------------------------------------------------------------------
# clique covers and candidate solution sets


def greedy_cover_and_is_rects(rects: Sequence[Rect]):
    """Sweep clique cover of the intersection graph plus an independent witness.

    Per stab line, rectangles are cut into cliques at the first right edge of
    the running common x-intersection; the cutting rectangle of each clique is
    its witness.  Witnesses from the larger of the odd/even line classes are
    pairwise disjoint, so |witness| >= |cover| / 2 and |cover| <= 2*alpha(G).

    Returns (cover, witness) where cover is an OrderedCliqueCover of the
    intersection graph itself and witness is a frozenset of rect indices.
    """
    G = rect_intersection_graph(rects)
    by_line: dict[int, list[int]] = {}
    for i, r in enumerate(rects):
        by_line.setdefault(r.stab_line, []).append(i)
    parts: list[frozenset[int]] = []
    line_of_part: list[int] = []
    witnesses: list[tuple[int, int]] = []  # (line, rect id)
    for line in sorted(by_line):
        ids = sorted(by_line[line], key=lambda i: (rects[i].x_hi, i))
        current: list[int] = []
        cut = None
        for i in ids:
            if cut is None or rects[i].x_lo > cut:
                if current:
                    parts.append(frozenset(current))
                    line_of_part.append(line)
                current = [i]
                cut = rects[i].x_hi
                witnesses.append((line, i))
            else:
                current.append(i)
        if current:
            parts.append(frozenset(current))
            line_of_part.append(line)
    cover = OrderedCliqueCover(G, tuple(parts))
    odd = frozenset(i for line, i in witnesses if line % 2)
    even = frozenset(i for line, i in witnesses if not line % 2)
    witness = odd if len(odd) > len(even) else even
    if not witness and witnesses:
        witness = frozenset(i for _, i in witnesses[:1])
    return cover, witness


def candidate_discs(points: Sequence[PointSite], G: Graph) -> list[Disc]:
    """Unit-diameter discs through each adjacent point pair, plus one disc
    centered at every point; at most 2|E| + n after deduplication.

    For an edge xy the two centers are the intersections of the radius-1/2
    circles about x and y; they coincide when the distance is exactly one.
    """
    seen: dict[tuple, Disc] = {}

    def add(d: Disc):
        seen.setdefault(d.key(), d)

    for p in points:
        add(Disc.rational(p.x, p.y))
    for u, v in G.edges():
        p, q = points[u], points[v]
        mx = Fraction(p.x + q.x, 2)
        my = Fraction(p.y + q.y, 2)
        ux = q.x - p.x
        uy = q.y - p.y
        d2 = ux * ux + uy * uy
        k = Fraction(SCALE * SCALE - d2, 4 * d2)
        if k == 0:
            add(Disc.rational(mx, my))
        else:
            add(Disc(mx, my, Fraction(-uy), Fraction(ux), k))
            add(Disc(mx, my, Fraction(uy), Fraction(-ux), k))
    return sorted(seen.values(), key=lambda d: d.key())


def greedy_disc_cover(points: Sequence[PointSite], frame: GridFrame) -> list[Disc]:
    """Feasible cover: one disc per nonempty quarter cell, centered there.

    A quarter cell has diagonal sqrt(1/2) < 1, so its centered unit-diameter
    disc covers it; any clique of the distance graph fits a 1x1 box and hence
    touches at most four unit cells, giving |C| <= 16 * cliquecover(G).
    """
    quarters = quarter_cell_partition(points, frame)
    discs = []
    for (qx, qy), _ in quarters:
        cx, cy = frame.quarter_center(qx, qy)
        discs.append(Disc.rational(cx, cy))
    return discs


def quarter_cell_partition(points: Sequence[PointSite], frame: GridFrame):
    """Nonempty quarter cells with their point-index groups, in key order."""
    groups: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(points):
        groups.setdefault(frame.quarter_of(p), []).append(i)
    return [(key, frozenset(ids)) for key, ids in sorted(groups.items())]


def candidate_pierce_points(rects: Sequence[Rect]) -> list[PointSite]:
    """Corner grid (right edge x top edge) restricted to covered points.

    Any piercing point slides right to the nearest right edge among the
    rectangles it pierces and then up to the nearest top edge, so some
    minimum piercing set lives on this grid.
    """
    xs = sorted({r.x_hi for r in rects})
    ys = sorted({r.y_hi for r in rects})
    out = []
    for x in xs:
        for y in ys:
            if any(r.contains_point(x, y) for r in rects):
                out.append(PointSite(x, y))
    return out


def helly_point(rects_clique: Sequence[Rect]) -> PointSite:
    """A point in the common intersection of pairwise-intersecting rectangles.

    Axis-parallel boxes have the Helly property in the plane, so
    (max x_lo, max y_lo) works; raises if the input is not a clique.
    """
    if not rects_clique:
        raise ValueError("empty rectangle family")
    x = max(r.x_lo for r in rects_clique)
    y = max(r.y_lo for r in rects_clique)
    for r in rects_clique:
        if not r.contains_point(x, y):
            raise ValueError("rectangles are not pairwise intersecting")
    return PointSite(x, y)
