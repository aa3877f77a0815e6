import numpy as np
import pytest

from berezin import geometry


def test_hull_square_with_interior_point():
    pts = np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]])
    hull = geometry.convex_hull(pts)
    np.testing.assert_allclose(hull, [[0, 0], [1, 0], [1, 1], [0, 1]])


def test_hull_collinear_points():
    pts = np.array([[0, 0], [1, 1], [2, 2], [0.5, 0.5]])
    hull = geometry.convex_hull(pts)
    np.testing.assert_allclose(hull, [[0, 0], [2, 2]])


def test_hull_duplicates_collapse():
    pts = np.array([[1.0, 2.0]] * 5)
    hull = geometry.convex_hull(pts)
    assert hull.shape == (1, 2)


def test_hull_starts_at_lexicographic_minimum_ccw():
    rng = np.random.default_rng(71)
    pts = rng.normal(size=(200, 2))
    hull = geometry.convex_hull(pts)
    # first vertex is the lexicographic minimum
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    np.testing.assert_allclose(hull[0], pts[order[0]])
    # counterclockwise orientation means positive signed area
    assert geometry.polygon_area(hull) > 0
    # every input point lies inside (within numerical slack)
    depth = geometry.hull_signed_depth(pts, pts)
    assert depth.min() >= -1e-12


def test_polygon_area_unit_square():
    square = np.array([[0, 0], [1, 0], [1, 1], [0, 1]])
    np.testing.assert_allclose(geometry.polygon_area(square), 1.0)


def test_default_tolerance_scales_with_diameter():
    pts = np.array([[0, 0], [10, 0]])
    np.testing.assert_allclose(geometry.default_tolerance(pts), 1e-2)
    tiny = np.array([[0, 0], [1e-12, 0]])
    np.testing.assert_allclose(geometry.default_tolerance(tiny), 1e-12)


def test_classify_point_segment_region():
    point = np.array([[1.0, 1.0], [1.0, 1.0 + 1e-15]])
    assert geometry.classify_shape(point).tag == "POINT"

    seg = np.column_stack([np.linspace(0, 1, 50), np.zeros(50)])
    shape = geometry.classify_shape(seg)
    assert shape.tag == "SEGMENT"

    rng = np.random.default_rng(9)
    blob = rng.normal(size=(300, 2))
    assert geometry.classify_shape(blob).tag == "REGION2D"


def test_convexity_report_filled_square():
    # tolerance chosen to match the density of the random cloud: with 20000
    # points the typical spacing is ~7e-3, so tol = 0.02 keeps the interior
    # covered while still resolving the annulus hole below
    rng = np.random.default_rng(31)
    pts = rng.uniform(0, 1, size=(20000, 2))
    rep = geometry.convexity_report(pts, tol=0.02)
    assert rep.shape.tag == "REGION2D"
    assert rep.verdict == "CONVEX"
    assert rep.coverage_ratio >= 0.99


def test_convexity_report_annulus_not_convex():
    rng = np.random.default_rng(32)
    theta = rng.uniform(0, 2 * np.pi, 20000)
    radius = rng.uniform(0.8, 1.0, 20000)
    pts = np.column_stack([radius * np.cos(theta), radius * np.sin(theta)])
    rep = geometry.convexity_report(pts)
    assert rep.verdict == "NOT_CONVEX"
    assert rep.coverage_ratio <= 0.90


def test_convexity_report_dense_segment_convex():
    xs = np.linspace(0, 1, 2000)
    pts = np.column_stack([xs, 2 * xs])
    rep = geometry.convexity_report(pts)
    assert rep.shape.tag == "SEGMENT"
    assert rep.verdict == "CONVEX"


def test_convexity_report_gappy_segment_not_convex():
    xs = np.concatenate([np.linspace(0, 0.3, 300), np.linspace(0.8, 1.0, 200)])
    pts = np.column_stack([xs, np.zeros_like(xs)])
    rep = geometry.convexity_report(pts)
    assert rep.shape.tag == "SEGMENT"
    assert rep.verdict == "NOT_CONVEX"
    assert rep.max_gap >= 0.5 - 1e-9


def test_exact_finite_modes():
    same = np.array([[1.5, 0.0], [1.5, 0.0]])
    rep = geometry.convexity_report(same, exact_finite=True)
    assert (rep.verdict, rep.shape.tag) == ("CONVEX", "POINT")

    two = np.array([[1.0, 0.0], [2.0, 0.0]])
    rep = geometry.convexity_report(two, exact_finite=True)
    assert rep.verdict == "NOT_CONVEX"
    assert rep.shape.tag == "SEGMENT"


def test_report_json_round_trip():
    import json

    rng = np.random.default_rng(44)
    rep = geometry.convexity_report(rng.uniform(size=(5000, 2)))
    payload = rep.to_json_dict()
    text = json.dumps(payload)
    back = json.loads(text)
    assert back["verdict"] == rep.verdict
    assert back["shape"] == rep.shape.tag
    assert isinstance(back["hull"], list)


def test_hausdorff_distance_known_value():
    a = np.array([[0.0, 0.0], [1.0, 0.0]])
    b = np.array([[0.0, 0.0], [1.0, 1.0]])
    np.testing.assert_allclose(geometry.hausdorff_distance(a, b), 1.0)
    np.testing.assert_allclose(
        geometry.hausdorff_distance(a, b), geometry.hausdorff_distance(b, a)
    )


def test_hausdorff_zero_on_identical_sets():
    rng = np.random.default_rng(12)
    pts = rng.normal(size=(500, 2))
    assert geometry.hausdorff_distance(pts, pts) == 0.0


def test_hull_signed_depth_on_square():
    sq = np.array([[0, 0], [1, 0], [1, 1], [0, 1]])
    q = np.array([[0.5, 0.5], [0.5, 0.0], [1.2, 0.5]])
    depth = geometry.hull_signed_depth(sq, q)
    np.testing.assert_allclose(depth, [0.5, 0.0, -0.2], atol=1e-12)


def test_hull_signed_depth_degenerate_hulls():
    single = np.array([[1.0, 2.0], [1.0, 2.0]])
    depth = geometry.hull_signed_depth(single, np.array([[1.0, 2.0], [1.0, 3.0]]))
    np.testing.assert_allclose(depth, [0.0, -1.0], atol=1e-15)

    seg = np.array([[0.0, 0.0], [2.0, 0.0]])
    depth = geometry.hull_signed_depth(seg, np.array([[1.0, 0.0], [3.0, 0.0]]))
    np.testing.assert_allclose(depth, [0.0, -1.0], atol=1e-15)


def test_thread_count_env_override(monkeypatch):
    monkeypatch.setenv("BEREZIN_THREADS", "2")
    rng = np.random.default_rng(55)
    pts = rng.uniform(size=(3000, 2))
    rep = geometry.convexity_report(pts, tol=0.05)
    assert rep.verdict == "CONVEX"
