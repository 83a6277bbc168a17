"""Tests for polygon geometry and boundary quantizers"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from condquant.core import AllocationInfeasibleError, GeometryError, InvalidProblemError, SearchBudgetError
from condquant.polygon import (
    AffineMap2,
    Point2,
    PolygonSpec,
    base_side_points,
    boundary_distance,
    exhaustive_side_counts,
    polygon_coefficient,
    polygon_error_mk,
    polygon_quantizer,
    rotation_map,
    side_counts,
    side_error,
    vertices,
)

SQRT2_2 = math.sqrt(2) / 2
coords = st.floats(min_value=-10, max_value=10, allow_nan=False)


def close(p: Point2, x: float, y: float, tol: float = 1e-12) -> bool:
    return abs(p.x - x) <= tol and abs(p.y - y) <= tol


class TestPolygonSpec:
    """Test PolygonSpec invariants"""

    def test_rejects_small_m(self):
        with pytest.raises(InvalidProblemError):
            PolygonSpec(2)

    def test_square_measurements(self, square):
        assert square.side_length == pytest.approx(math.sqrt(2))
        assert square.central_angle == pytest.approx(math.pi / 2)
        assert square.density == pytest.approx(1 / (4 * math.sqrt(2)))

    def test_point_must_be_finite(self):
        with pytest.raises(GeometryError):
            Point2(math.nan, 0.0)


class TestVertices:
    """Test vertex placement on the unit circle"""

    def test_square(self, square):
        a1, a2, *_ = vertices(square)
        assert close(a1, -SQRT2_2, -SQRT2_2)
        assert close(a2, SQRT2_2, -SQRT2_2)

    def test_hexagon(self):
        assert close(vertices(PolygonSpec(6))[0], -0.5, -math.sqrt(3) / 2)

    @pytest.mark.parametrize("m", [3, 4, 5, 7, 12, 64])
    def test_unit_circumradius(self, m):
        pts = vertices(PolygonSpec(m))
        assert len(pts) == m
        assert all(abs(math.hypot(p.x, p.y) - 1) <= 1e-12 for p in pts)
        assert pts[0].y == pytest.approx(pts[1].y, abs=1e-15)


class TestRotationMap:
    """Test the map carrying each side onto the next"""

    @pytest.mark.parametrize("m", range(3, 65))
    def test_is_rotation(self, m):
        spec = PolygonSpec(m)
        t = rotation_map(spec)
        theta = spec.central_angle
        assert abs(t.a - math.cos(theta)) <= 1e-12
        assert abs(t.b + math.sin(theta)) <= 1e-12
        assert abs(t.c - math.sin(theta)) <= 1e-12
        assert abs(t.d - math.cos(theta)) <= 1e-12
        assert np.allclose(t.power(m), np.eye(2), rtol=0, atol=1e-10)

    def test_square_maps_a1_to_a2(self, square):
        a1, a2, *_ = vertices(square)
        image = rotation_map(square).apply(a1)
        assert close(image, a2.x, a2.y)

    @pytest.mark.parametrize("m", [3, 5, 8, 13])
    def test_cyclic_action(self, m):
        """Test that T^(i-1) carries A1A2 onto A_i A_(i+1)"""
        spec = PolygonSpec(m)
        verts = np.array([[p.x, p.y] for p in vertices(spec)])
        base = verts[:2]
        t = rotation_map(spec)
        for i in range(m):
            image = base @ t.power(i).T
            expected = np.array([verts[i], verts[(i + 1) % m]])
            assert np.allclose(image, expected, rtol=0, atol=1e-10)

    @given(x1=coords, y1=coords, x2=coords, y2=coords, m=st.integers(min_value=3, max_value=40))
    def test_preserves_distance(self, x1, y1, x2, y2, m):
        t = rotation_map(PolygonSpec(m))
        p, q = Point2(x1, y1), Point2(x2, y2)
        assert abs(t.apply(p).distance(t.apply(q)) - p.distance(q)) <= 1e-12

    def test_rejects_non_isometry(self):
        with pytest.raises(GeometryError) as exc:
            AffineMap2(2.0, 0.0, 0.0, 0.5)
        assert exc.value.deviation > 0

    def test_apply_array_matches_apply(self, triangle):
        t = rotation_map(triangle)
        xy = np.array([[0.3, -0.2], [1.0, 0.0]])
        rows = t.apply_array(xy)
        for row, (x, y) in zip(rows, xy):
            assert close(t.apply(Point2(x, y)), row[0], row[1], 1e-15)


class TestSidePoints:
    """Test placement and error on the base side A1A2"""

    def test_endpoints_only(self, square):
        a1, a2, *_ = vertices(square)
        p, q = base_side_points(square, 2)
        assert close(p, a1.x, a1.y) and close(q, a2.x, a2.y)

    def test_midpoint(self, square):
        mid = base_side_points(square, 3)[1]
        assert close(mid, 0.0, -SQRT2_2)

    def test_equal_gaps(self, triangle):
        pts = base_side_points(triangle, 5)
        gaps = [p.distance(q) for p, q in zip(pts, pts[1:])]
        assert gaps == pytest.approx([triangle.side_length / 4] * 4, abs=1e-12)

    def test_needs_both_vertices(self, square):
        with pytest.raises(AllocationInfeasibleError):
            base_side_points(square, 1)
        with pytest.raises(AllocationInfeasibleError):
            side_error(square, 1)

    def test_side_error_values(self, square, triangle):
        assert side_error(square, 2) == pytest.approx(1 / 24, abs=1e-15)
        assert side_error(triangle, 3) == pytest.approx(1 / 48, abs=1e-15)

    def test_side_error_decreasing(self, triangle):
        errors = [side_error(triangle, c) for c in range(2, 50)]
        assert all(b < a for a, b in zip(errors, errors[1:]))


class TestPolygonQuantizer:
    """Test full boundary quantizers"""

    def test_square_eight(self, square):
        q = polygon_quantizer(square, 8)
        assert q.side_counts == (3, 3, 3, 3)
        assert len(q.points) == 8
        assert abs(q.error - 1 / 24) <= 1e-12

    def test_minimal_is_vertices(self):
        spec = PolygonSpec(5)
        q = polygon_quantizer(spec, 5)
        assert len(q.points) == 5
        for p, v in zip(q.points, vertices(spec)):
            assert close(p, v.x, v.y)
        assert q.error == pytest.approx(math.sin(math.pi / 5) ** 2 / 3, abs=1e-15)

    def test_lowest_index_sides_get_extra(self, triangle):
        q = polygon_quantizer(triangle, 7)
        assert q.side_counts == (4, 3, 3)
        assert sum(q.side_counts) == 7 + 3
        assert len({(round(p.x, 9), round(p.y, 9)) for p in q.points}) == 7

    def test_infeasible(self, square):
        with pytest.raises(AllocationInfeasibleError):
            polygon_quantizer(square, 3)

    @pytest.mark.parametrize("m", [3, 4, 6, 8, 12])
    def test_points_on_boundary(self, m):
        spec = PolygonSpec(m)
        for n in range(m, 41):
            q = polygon_quantizer(spec, n)
            assert len(q.points) == n
            assert float(boundary_distance(spec, q.points_array()).max()) <= 1e-12

    def test_side_counts_balanced(self):
        for m in range(3, 9):
            spec = PolygonSpec(m)
            for n in range(m, 60):
                counts = side_counts(spec, n)
                assert max(counts) - min(counts) <= 1
                assert sum(counts) == n + m


class TestPolygonErrors:
    """Test lattice errors and the limiting coefficient"""

    def test_lattice_values(self):
        assert polygon_error_mk(PolygonSpec(6), 1) == pytest.approx(1 / 12, abs=1e-15)
        assert polygon_error_mk(PolygonSpec(4), 10) == pytest.approx(1 / 600, abs=1e-15)

    @pytest.mark.parametrize("m", range(3, 13))
    def test_lattice_matches_quantizer(self, m):
        """Test (mk)^2 V_mk against the limiting coefficient for k up to 100"""
        spec = PolygonSpec(m)
        coefficient = polygon_coefficient(spec)
        for k in range(1, 101):
            n = m * k
            error = polygon_quantizer(spec, n).error
            assert abs(error - polygon_error_mk(spec, k)) <= 1e-12
            assert abs(n * n * error - coefficient) <= 1e-12

    def test_coefficient_values(self):
        assert polygon_coefficient(PolygonSpec(3)) == pytest.approx(9 / 4, abs=1e-12)
        assert polygon_coefficient(PolygonSpec(4)) == pytest.approx(8 / 3, abs=1e-12)
        assert abs(polygon_coefficient(PolygonSpec(10**6)) - math.pi ** 2 / 3) <= 1e-9

    def test_coefficient_increasing(self):
        values = [polygon_coefficient(PolygonSpec(m)) for m in range(3, 200)]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_balance_against_exhaustive(self, m):
        """Test that the exhaustive optimum is balanced and matches the balanced error"""
        spec = PolygonSpec(m)
        for n in range(m, 31):
            best = exhaustive_side_counts(spec, n)
            assert max(best) - min(best) <= 1
            assert sorted(best) == sorted(side_counts(spec, n))
            assert sum(side_error(spec, c) for c in best) == pytest.approx(
                polygon_quantizer(spec, n).error, abs=1e-15
            )

    def test_exhaustive_budget(self):
        with pytest.raises(SearchBudgetError):
            exhaustive_side_counts(PolygonSpec(6), 30, cap=100)
