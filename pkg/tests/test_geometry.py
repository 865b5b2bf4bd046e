from fractions import Fraction

import pytest

from bitrades.core import BitradeError
from bitrades.geometry import (
    NotSeparatedSolution,
    TriangleGeom,
    ValenceSix,
    clip_polygon,
    dissect,
    extract_bitrade,
    interiors_overlap,
    outer_triangle,
    polygon_area,
    to_svg,
    triangles,
    verify_dissection,
)
from bitrades.core import is_isotopic
from bitrades.solver import PointedBitrade, solve_pointed
from conftest import GRID16_LINES, triple_by_names

H = Fraction(1, 2)


def solve(T, r, c, s):
    return solve_pointed(PointedBitrade(T, triple_by_names(T, r, c, s)))


class TestTriangleGeom:
    def test_upright(self):
        t = TriangleGeom(None, (Fraction(0), Fraction(0), Fraction(1)))
        assert t.upright and not t.degenerate
        assert t.leg == 1 and t.area == H
        assert set(t.corners) == {(0, 0), (0, 1), (1, 0)}

    def test_inverted(self):
        t = TriangleGeom(None, (H, H, H))
        assert not t.upright and not t.degenerate
        assert t.leg == H and t.area == Fraction(1, 8)
        assert set(t.corners) == {(H, H), (H, 0), (0, H)}

    def test_degenerate(self):
        t = TriangleGeom(None, (H, H, Fraction(1)))
        assert t.degenerate and t.area == 0


class TestPolygonOps:
    def test_area(self):
        assert polygon_area([(0, 0), (1, 0), (1, 1), (0, 1)]) == 1
        assert polygon_area([(0, 0), (0, 1), (1, 1), (1, 0)]) == -1

    def test_clip_disjoint(self):
        a = [(0, 0), (1, 0), (0, 1)]
        b = [(5, 5), (6, 5), (5, 6)]
        clipped = clip_polygon(a, b)
        assert clipped == [] or polygon_area(clipped) == 0

    def test_clip_contained(self):
        outer = [(0, 0), (4, 0), (4, 4), (0, 4)]
        inner = [(1, 1), (2, 1), (1, 2)]
        clipped = clip_polygon(inner, outer)
        assert abs(polygon_area(clipped)) == H

    def test_overlap_detection(self):
        t1 = TriangleGeom(None, (Fraction(0), Fraction(0), Fraction(1)))
        t2 = TriangleGeom(None, (Fraction(0), Fraction(0), H))
        t3 = TriangleGeom(None, (H, H, Fraction(3, 2)))
        assert interiors_overlap(t1, t2)
        assert not interiors_overlap(t2, t3)

    def test_touching_is_not_overlap(self):
        # share only an edge
        t1 = TriangleGeom(None, (Fraction(0), Fraction(0), H))
        t2 = TriangleGeom(None, (H, H, H))
        assert not interiors_overlap(t1, t2)


class TestDissect:
    def test_intercalate_triangles(self, intercalate):
        sol = solve(intercalate, "r0", "c0", "s0")
        tris, report = dissect(sol)
        assert len(tris) == 4
        legs = sorted(t.leg for t in tris)
        assert legs == [H, H, H, H]
        assert sum(t.area for t in tris) == H
        assert sum(1 for t in tris if not t.upright) == 1
        assert report.is_dissection and report.is_separated_dissection

    def test_outer_triangle(self, intercalate):
        sol = solve(intercalate, "r0", "c0", "s0")
        sigma = outer_triangle(sol)
        assert sigma.lines == (0, 0, 1) and sigma.area == H

    def test_ex45_dissection(self, ex45):
        sol = solve(ex45, "r0", "c0", "s4")
        tris, report = dissect(sol)
        assert len(tris) == 12
        assert report.area_total == H

    def test_collision_raises(self, nested):
        sol = solve(nested.bitrade, "r1", "c1", "s0")
        with pytest.raises(NotSeparatedSolution) as e:
            dissect(sol)
        assert {lab.name for lab in e.value.witness[1:]} == {"r0", "r2"}

    def test_report_on_collision_solution(self, nested):
        # verification itself still runs and reports the failure
        sol = solve(nested.bitrade, "r1", "c1", "s0")
        report = verify_dissection(sol)
        assert not report.is_dissection


class TestExtract:
    def test_round_trip_all_separated_pivots(self, spherical_corpus):
        from bitrades.solver import is_separated_solution

        for T in spherical_corpus.values():
            for pivot in T.star:
                sol = solve_pointed(PointedBitrade(T, pivot))
                if not is_separated_solution(sol)[0]:
                    continue
                tris, _ = dissect(sol)
                back = extract_bitrade([t.lines for t in tris])
                assert is_isotopic(back.bitrade, T) is not None

    def test_nested_fixture(self, nested):
        T = nested.bitrade
        assert T.size == 7
        assert nested.pivot == T.star[0]

    def test_valence_six(self):
        with pytest.raises(ValenceSix) as e:
            extract_bitrade(GRID16_LINES)
        assert e.value.point[0].denominator == 4

    def test_degenerate_input(self):
        with pytest.raises(BitradeError, match="degenerate"):
            extract_bitrade([(0, 0, 0)])


class TestSvg:
    def test_deterministic(self, ex45):
        sol = solve(ex45, "r0", "c0", "s4")
        assert to_svg(sol) == to_svg(sol)

    def test_structure(self, intercalate):
        sol = solve(intercalate, "r0", "c0", "s0")
        svg = to_svg(sol, labels=True)
        assert svg.startswith("<svg")
        assert svg.count("<polygon") == 5  # outline + 4 triangles
        assert svg.count("<text") == 4

    def test_significant_digits(self, ex45):
        sol = solve(ex45, "r0", "c0", "s4")
        svg = to_svg(sol).replace('"', " ").replace(",", " ")
        for token in svg.split():
            if token.count(".") == 1:
                digits = token.replace(".", "").replace("-", "").lstrip("0")
                assert len(digits) <= 9
