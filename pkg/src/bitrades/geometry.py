"""Triangle dissections attached to solved bitrades.

Each delta triple of a solved pointed bitrade yields a triangle bounded
by the lines y = row value, x = col value, x + y = sym value.  For a
spherical bitrade with a separated solution these triangles dissect the
outer triangle of the pivot.  The reverse direction recovers a pointed
bitrade from a dissection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import COL, ROW, SYM, BitradeError, Label, Triple, build_bitrade
from .solver import PointedBitrade, is_separated_solution


class NotSeparatedSolution(BitradeError):
    """The solution values collide within a role, so no dissection exists."""

    def __init__(self, witness):
        self.witness = witness
        role, a, b = witness
        super().__init__(f"solution does not separate {a} and {b}")


class ValenceSix(BitradeError):
    """A dissection vertex lies on six triangle corners; extraction is ambiguous."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"vertex {point} has six incident triangle corners")


@dataclass(frozen=True)
class TriangleGeom:
    """A triangle cut out by a horizontal, a vertical and a diagonal line."""

    source: object  # Triple, or None for free-standing triangles
    lines: tuple  # (horizontal y, vertical x, diagonal x + y), Fractions

    @property
    def corners(self):
        c1, c2, c3 = self.lines
        return ((c2, c1), (c2, c3 - c2), (c3 - c1, c1))

    @property
    def degenerate(self):
        c1, c2, c3 = self.lines
        return c1 + c2 == c3

    @property
    def upright(self):
        c1, c2, c3 = self.lines
        return c3 > c1 + c2

    @property
    def leg(self):
        c1, c2, c3 = self.lines
        return abs(c3 - c1 - c2)

    @property
    def area(self):
        return self.leg * self.leg / 2


def triangles(sol):
    """One triangle per delta triple, from the solution values."""
    v = sol.values
    return [
        TriangleGeom(q, (v[q.row], v[q.col], v[q.sym])) for q in sol.bitrade.delta
    ]


def outer_triangle(sol):
    v = sol.values
    a = sol.pivot
    return TriangleGeom(a, (v[a.row], v[a.col], v[a.sym]))


def polygon_area(points):
    """Signed shoelace area (positive = counterclockwise)."""
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
        total += x1 * y2 - x2 * y1
    return total / 2


def clip_polygon(subject, clipper):
    """Intersection of a polygon with a convex polygon (exact arithmetic)."""
    if polygon_area(clipper) < 0:
        clipper = clipper[::-1]
    output = list(subject)
    for (ax, ay), (bx, by) in zip(clipper, clipper[1:] + clipper[:1]):
        if not output:
            break
        def side(p):
            return (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
        result = []
        for p, q in zip(output, output[1:] + output[:1]):
            sp, sq = side(p), side(q)
            if sp >= 0:
                result.append(p)
            if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
                t = sp / (sp - sq)
                result.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        output = result
    return output


def interiors_overlap(t1, t2):
    clipped = clip_polygon(list(t1.corners), list(t2.corners))
    return len(clipped) >= 3 and polygon_area(clipped) != 0


@dataclass(frozen=True)
class DissectionReport:
    contained: bool
    non_degenerate: bool
    pairwise_disjoint: bool
    area_total: Fraction
    area_outer: Fraction
    contiguous_sides: bool
    valence_six_points: tuple
    is_dissection: bool
    is_separated_dissection: bool


def _side_intervals(tri):
    """((kind, line value), (lo, hi)) for the three sides of a triangle."""
    c1, c2, c3 = tri.lines
    xs = sorted((c2, c3 - c1))
    ys = sorted((c1, c3 - c2))
    return [
        (("h", c1), tuple(xs)),
        (("v", c2), tuple(ys)),
        (("d", c3), tuple(xs)),
    ]


def _contiguous(intervals):
    intervals = sorted(intervals)
    hi = intervals[0][1]
    for lo, up in intervals[1:]:
        if lo > hi:
            return False
        hi = max(hi, up)
    return True


def verify_dissection(sol, tris=None):
    """Check that the triangles of a solution dissect the outer triangle."""
    if tris is None:
        tris = triangles(sol)
    sigma = outer_triangle(sol)
    sigma_poly = list(sigma.corners)
    non_degenerate = all(not t.degenerate for t in tris)

    contained = True
    for t in tris:
        if t.degenerate:
            continue
        clipped = clip_polygon(list(t.corners), sigma_poly)
        if abs(polygon_area(clipped)) != t.area:
            contained = False
            break

    pairwise_disjoint = True
    solid = [t for t in tris if not t.degenerate]
    for i, t1 in enumerate(solid):
        for t2 in solid[i + 1:]:
            if interiors_overlap(t1, t2):
                pairwise_disjoint = False
                break
        if not pairwise_disjoint:
            break

    area_total = sum((t.area for t in tris), Fraction(0))

    by_line = {}
    for t in solid:
        for key, iv in _side_intervals(t):
            by_line.setdefault(key, []).append(iv)
    contiguous = all(_contiguous(ivs) for ivs in by_line.values())

    corner_count = {}
    for t in solid:
        for p in t.corners:
            corner_count[p] = corner_count.get(p, 0) + 1
    valence_six = tuple(sorted(p for p, k in corner_count.items() if k == 6))

    is_dissection = (
        non_degenerate and contained and pairwise_disjoint and area_total == sigma.area
    )
    return DissectionReport(
        contained=contained,
        non_degenerate=non_degenerate,
        pairwise_disjoint=pairwise_disjoint,
        area_total=area_total,
        area_outer=sigma.area,
        contiguous_sides=contiguous,
        valence_six_points=valence_six,
        is_dissection=is_dissection,
        is_separated_dissection=is_dissection and contiguous and not valence_six,
    )


def dissect(sol):
    """Triangles plus verification; raises if the solution is not separated."""
    ok, witness = is_separated_solution(sol)
    if not ok:
        raise NotSeparatedSolution(witness)
    tris = triangles(sol)
    report = verify_dissection(sol, tris)
    if not report.is_dissection:
        raise BitradeError(
            "separated solution did not produce a dissection; "
            f"report: {report}"
        )
    return tris, report


def extract_bitrade(line_triples):
    """Recover a pointed bitrade from a dissection given as line triples.

    Each input is (horizontal, vertical, diagonal) line values of one
    triangle.  The triangles become the delta; interior vertices and the
    outer triple become the star.  The pivot is the outer triple.
    """
    tris = [TriangleGeom(None, tuple(Fraction(v) for v in t)) for t in line_triples]
    if any(t.degenerate for t in tris):
        raise BitradeError("degenerate triangle in dissection input")

    def universe(role, values):
        prefix = "rcs"[role]
        return {v: Label(role, i, f"{prefix}{i}") for i, v in enumerate(sorted(values))}

    rows = universe(ROW, {t.lines[0] for t in tris})
    cols = universe(COL, {t.lines[1] for t in tris})
    syms = universe(SYM, {t.lines[2] for t in tris})

    delta = [Triple(rows[t.lines[0]], cols[t.lines[1]], syms[t.lines[2]]) for t in tris]

    outer = Triple(rows[min(rows)], cols[min(cols)], syms[max(syms)])
    sigma_corners = set(
        TriangleGeom(None, (min(rows), min(cols), max(syms))).corners
    )
    corner_count = {}
    for t in tris:
        for p in t.corners:
            corner_count[p] = corner_count.get(p, 0) + 1

    star = [outer]
    for (x, y), k in sorted(corner_count.items()):
        if (x, y) in sigma_corners:
            continue
        if k == 6:
            raise ValenceSix((x, y))
        if y not in rows or x not in cols or x + y not in syms:
            raise BitradeError(f"vertex {(x, y)} does not lie on three dissection lines")
        star.append(Triple(rows[y], cols[x], syms[x + y]))

    return PointedBitrade(build_bitrade(star, delta), outer)


def _fmt(v):
    return f"{float(v):.9g}"


def to_svg(sol, side_px=600, labels=False):
    """Render the dissection as an SVG string, mapped to an equilateral outline.

    The affine map sends (x, y) to (x + y/2, sqrt(3) y / 2); SVG's
    downward y axis is flipped so the outer triangle sits point-up.
    """
    tris = triangles(sol)
    sigma = outer_triangle(sol)
    height = math.sqrt(3) / 2

    def project(p):
        x, y = float(p[0]), float(p[1])
        ex, ey = x + y / 2, height * y
        return (side_px * ex, side_px * (height - ey) + side_px * 0.02)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(side_px * 1.04)}" height="{_fmt(side_px * height + side_px * 0.04)}" '
        f'viewBox="0 0 {_fmt(side_px * 1.04)} {_fmt(side_px * height + side_px * 0.04)}">'
    ]
    margin = side_px * 0.02

    def pts(tri):
        out = []
        for p in tri.corners:
            px, py = project(p)
            out.append(f"{_fmt(px + margin)},{_fmt(py)}")
        return " ".join(out)

    parts.append(
        f'<polygon points="{pts(sigma)}" fill="none" stroke="black" stroke-width="2"/>'
    )
    for tri in sorted(tris, key=lambda t: t.source):
        fill = "#cfe8ff" if tri.upright else "#ffe3c2"
        parts.append(
            f'<polygon points="{pts(tri)}" fill="{fill}" stroke="black" stroke-width="1"/>'
        )
        if labels:
            cx = sum(p[0] for p in tri.corners) / 3
            cy = sum(p[1] for p in tri.corners) / 3
            px, py = project((cx, cy))
            name = ",".join(tri.source.names())
            parts.append(
                f'<text x="{_fmt(px + margin)}" y="{_fmt(py)}" font-size="10" '
                f'text-anchor="middle">{name}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
