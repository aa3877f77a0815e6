"""Planar convexity machinery for sampled Berezin ranges.

Points are (n, 2) float arrays.  The central entry point is
:func:`convexity_report`, which classifies a sample cloud as a POINT, a
SEGMENT or a genuine 2-D region and then issues a CONVEX / NOT_CONVEX /
INCONCLUSIVE verdict:

* POINT        -> CONVEX,
* SEGMENT      -> CONVEX iff the largest gap between consecutive projections
                  onto the segment direction is small,
* REGION2D     -> coverage test: fraction of a uniform grid over the hull
                  interior lying within tol of some sample (>= 0.99 CONVEX,
                  <= 0.90 NOT_CONVEX, INCONCLUSIVE in between).

Sampling cannot certify convexity of a continuum, hence the INCONCLUSIVE
band; the thresholds are deliberately conservative.
"""
from __future__ import annotations

import dataclasses
import os

import numpy as np
from scipy.spatial import cKDTree

__all__ = [
    "ShapeClass",
    "ConvexityReport",
    "convex_hull",
    "polygon_area",
    "classify_shape",
    "convexity_report",
    "hausdorff_distance",
    "hull_signed_depth",
    "default_tolerance",
]

# Orientation tests treat cross products below this as collinear.
_CROSS_EPS = 1e-12

# Verdict thresholds for the REGION2D coverage test.
_COVERAGE_CONVEX = 0.99
_COVERAGE_NOT_CONVEX = 0.90

# A SEGMENT is convex when no projection gap exceeds this many tolerances.
_GAP_FACTOR = 10.0


def _workers() -> int:
    """Thread cap for KD-tree queries, from the BEREZIN_THREADS env var."""
    try:
        n = int(os.environ.get("BEREZIN_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        raise ValueError("empty point set")
    pts = pts.reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    return pts


def convex_hull(points) -> np.ndarray:
    """Convex hull vertices in counterclockwise order (monotone chain).

    Collinear boundary points are removed; degenerate inputs return one
    (all points equal) or two (all collinear) vertices.  The first vertex
    is the lexicographically smallest point.
    """
    pts = np.unique(_as_points(points), axis=0)
    if len(pts) == 1:
        return pts
    # np.unique sorts lexicographically, which is what the chain needs.
    x, y = pts[:, 0], pts[:, 1]

    def half_chain(order):
        chain = []
        for i in order:
            while len(chain) >= 2:
                ox, oy = x[chain[-2]], y[chain[-2]]
                ax, ay = x[chain[-1]], y[chain[-1]]
                if (ax - ox) * (y[i] - oy) - (ay - oy) * (x[i] - ox) <= _CROSS_EPS:
                    chain.pop()
                else:
                    break
            chain.append(i)
        return chain

    idx = range(len(pts))
    lower = half_chain(idx)
    upper = half_chain(reversed(range(len(pts))))
    hull_idx = lower[:-1] + upper[:-1]
    if len(hull_idx) < 2:  # fully collinear sets collapse the chains
        hull_idx = [lower[0], lower[-1]] if len(lower) > 1 else lower
    return pts[hull_idx]


def polygon_area(vertices) -> float:
    """Shoelace area of a counterclockwise polygon (0 for <3 vertices)."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def default_tolerance(points) -> float:
    """Default classification tolerance: 1e-3 of the sample diameter."""
    diam, _ = _diameter(_as_points(points))
    return max(1e-3 * diam, 1e-12)


def _diameter(pts: np.ndarray):
    """Exact diameter and the realizing pair, via the hull."""
    hull = convex_hull(pts)
    if len(hull) == 1:
        return 0.0, (hull[0], hull[0])
    diff = hull[:, None, :] - hull[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    i, j = np.unravel_index(np.argmax(d2), d2.shape)
    return float(np.sqrt(d2[i, j])), (hull[i], hull[j])


def _segment_distances(pts: np.ndarray, p0: np.ndarray, p1: np.ndarray) -> np.ndarray:
    seg = p1 - p0
    L2 = float(seg @ seg)
    if L2 == 0.0:
        return np.linalg.norm(pts - p0, axis=1)
    t = np.clip((pts - p0) @ seg / L2, 0.0, 1.0)
    proj = p0 + t[:, None] * seg
    return np.linalg.norm(pts - proj, axis=1)


@dataclasses.dataclass(frozen=True)
class ShapeClass:
    """Classification of a planar sample: POINT, SEGMENT or REGION2D."""

    tag: str
    endpoints: np.ndarray | None = None  # SEGMENT: (2, 2); POINT: (1, 2)
    hull: np.ndarray | None = None  # REGION2D
    area: float = 0.0


def classify_shape(points, tol: float | None = None) -> ShapeClass:
    """Classify a point cloud at tolerance ``tol``.

    POINT if the diameter is <= tol; SEGMENT if every point lies within tol
    of the segment joining the maximal-distance pair; REGION2D otherwise
    (with hull vertices and hull area attached).
    """
    pts = _as_points(points)
    if tol is None:
        tol = default_tolerance(pts)
    if tol <= 0:
        raise ValueError("tolerance must be > 0")
    diam, (p0, p1) = _diameter(pts)
    if diam <= tol:
        center = pts.mean(axis=0, keepdims=True)
        return ShapeClass("POINT", endpoints=center)
    if np.max(_segment_distances(pts, p0, p1)) <= tol:
        return ShapeClass("SEGMENT", endpoints=np.vstack([p0, p1]))
    hull = convex_hull(pts)
    return ShapeClass("REGION2D", hull=hull, area=polygon_area(hull))


@dataclasses.dataclass(frozen=True)
class ConvexityReport:
    shape: ShapeClass
    verdict: str  # CONVEX | NOT_CONVEX | INCONCLUSIVE
    coverage_ratio: float
    max_gap: float
    tolerance: float
    sample_count: int
    exact_finite_mode: bool = False

    def to_json_dict(self) -> dict:
        hull = self.shape.hull
        if hull is None:
            hull = self.shape.endpoints
        return {
            "shape": self.shape.tag,
            "verdict": self.verdict,
            "coverage_ratio": self.coverage_ratio,
            "max_gap": self.max_gap,
            "tolerance": self.tolerance,
            "sample_count": self.sample_count,
            "hull": [[float(x), float(y)] for x, y in np.atleast_2d(hull)],
        }


def _hull_interior_grid(hull: np.ndarray, steps: int) -> np.ndarray:
    """Uniform grid over the hull's bounding box, filtered to the hull."""
    lo = hull.min(axis=0)
    hi = hull.max(axis=0)
    xs = np.linspace(lo[0], hi[0], steps)
    ys = np.linspace(lo[1], hi[1], steps)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    # CCW hull: a point is inside iff it is on the left of every edge.
    inside = np.ones(len(grid), dtype=bool)
    nxt = np.roll(np.arange(len(hull)), -1)
    for i, j in zip(range(len(hull)), nxt):
        ex, ey = hull[j] - hull[i]
        cross = ex * (grid[:, 1] - hull[i, 1]) - ey * (grid[:, 0] - hull[i, 0])
        inside &= cross >= -_CROSS_EPS
    return grid[inside]


def _segment_coverage(pts, p0, p1, tol, steps=512):
    """1-D analog of the region coverage test: probe points along the segment."""
    t = np.linspace(0.0, 1.0, steps)
    probes = p0 + t[:, None] * (p1 - p0)
    dist, _ = cKDTree(pts).query(probes, workers=_workers())
    return float(np.mean(dist <= tol))


def convexity_report(
    points,
    tol: float | None = None,
    exact_finite: bool = False,
    grid_steps: int = 200,
) -> ConvexityReport:
    """Issue a convexity verdict for a sampled planar set.

    Parameters
    ----------
    points : array-like, shape (n, 2)
        The sample cloud.
    tol : float, optional
        Classification tolerance; defaults to 1e-3 of the sample diameter.
    exact_finite : bool
        Treat the input as a complete finite set (e.g. the Berezin set of a
        finite matrix read off the diagonal).  A finite set with two or more
        distinct points is never convex; the verdict is CONVEX iff all points
        are exactly equal.
    grid_steps : int
        Resolution per axis of the coverage grid for REGION2D inputs
        (at least 200).
    """
    pts = _as_points(points)
    n_samples = len(pts)
    if tol is None:
        tol = default_tolerance(pts)
    if tol <= 0:
        raise ValueError("tolerance must be > 0")

    if exact_finite:
        distinct = np.unique(pts, axis=0)
        if len(distinct) == 1:
            shape = ShapeClass("POINT", endpoints=distinct[:1])
            return ConvexityReport(shape, "CONVEX", 1.0, 0.0, tol, n_samples, True)
        shape = classify_shape(pts, tol)
        if shape.tag == "POINT":
            # Distinct values closer than tol: still a finite non-convex set.
            diam, (p0, p1) = _diameter(pts)
            shape = ShapeClass("SEGMENT", endpoints=np.vstack([p0, p1]))
        return ConvexityReport(shape, "NOT_CONVEX", 0.0, 0.0, tol, n_samples, True)

    shape = classify_shape(pts, tol)
    if shape.tag == "POINT":
        return ConvexityReport(shape, "CONVEX", 1.0, 0.0, tol, n_samples)

    if shape.tag == "SEGMENT":
        p0, p1 = shape.endpoints
        direction = (p1 - p0) / np.linalg.norm(p1 - p0)
        proj = np.sort((pts - p0) @ direction)
        max_gap = float(np.max(np.diff(proj))) if len(proj) > 1 else 0.0
        verdict = "CONVEX" if max_gap <= _GAP_FACTOR * tol else "NOT_CONVEX"
        coverage = _segment_coverage(pts, p0, p1, tol)
        return ConvexityReport(shape, verdict, coverage, max_gap, tol, n_samples)

    grid = _hull_interior_grid(shape.hull, max(int(grid_steps), 200))
    dist, _ = cKDTree(pts).query(grid, workers=_workers())
    coverage = float(np.mean(dist <= tol))
    max_gap = float(np.max(dist))
    if coverage >= _COVERAGE_CONVEX:
        verdict = "CONVEX"
    elif coverage <= _COVERAGE_NOT_CONVEX:
        verdict = "NOT_CONVEX"
    else:
        verdict = "INCONCLUSIVE"
    return ConvexityReport(shape, verdict, coverage, max_gap, tol, n_samples)


def hausdorff_distance(a, b) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    pa = _as_points(a)
    pb = _as_points(b)
    workers = _workers()
    d_ab, _ = cKDTree(pb).query(pa, workers=workers)
    d_ba, _ = cKDTree(pa).query(pb, workers=workers)
    return float(max(d_ab.max(), d_ba.max()))


def hull_signed_depth(hull_points, query_points) -> np.ndarray:
    """Signed distance of each query point into the convex hull of a point set.

    Positive means inside, negative outside.  For a point inside a
    non-degenerate hull the value is the distance to the nearest edge line;
    for degenerate hulls (a point or a collinear set) it is the negated
    distance to the hull point or segment, so containment tests reduce to
    ``depth >= -tol`` in every case.
    """
    hull = convex_hull(hull_points)
    q = _as_points(query_points)
    if hull.shape[0] == 1:
        return -np.hypot(q[:, 0] - hull[0, 0], q[:, 1] - hull[0, 1])
    if hull.shape[0] == 2:
        return -_segment_distances(q, hull[0], hull[1])
    edges = np.roll(hull, -1, axis=0) - hull
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    rel = q[:, None, :] - hull[None, :, :]
    cross = edges[None, :, 0] * rel[:, :, 1] - edges[None, :, 1] * rel[:, :, 0]
    return np.min(cross / lengths[None, :], axis=1)
