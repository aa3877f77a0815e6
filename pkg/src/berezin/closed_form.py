"""Closed-form Berezin transforms of composition operators on the disk.

For a self-map phi and the Hardy-space kernel, the transform evaluates to

    (1 - |z|^2) / (1 - conj(z) phi(z)),

and the Bergman-space transform is its square.  This module also carries the
explicit real/imaginary decomposition for Blaschke symbols on the Bergman
space, the conjugation symmetry partner point, radial boundary limits, and
grid sampling of whole Berezin ranges.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import symbols as sym
from .kernels import BERGMAN, HARDY, SpaceSpec

__all__ = [
    "DiskPoint",
    "PolarGrid",
    "RangeSample",
    "BoundaryLimit",
    "hardy_transform",
    "bergman_transform",
    "blaschke_real_imag",
    "conjugation_partner",
    "boundary_limit",
    "sample_range",
    "model_transform",
]

TWO_PI = 2.0 * math.pi


@dataclasses.dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk in polar form, r in [0,1)."""

    r: float
    theta: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.r < 1.0) or not math.isfinite(self.theta):
            raise ValueError(f"disk point requires 0 <= r < 1, got r={self.r}")
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)

    @classmethod
    def from_complex(cls, z) -> "DiskPoint":
        z = complex(z)
        return cls(abs(z), math.atan2(z.imag, z.real))

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def re(self) -> float:
        return self.z.real

    @property
    def im(self) -> float:
        return self.z.imag


@dataclasses.dataclass(frozen=True)
class PolarGrid:
    """Sorted radius and angle samples; radii live in [0, r_max], r_max < 1."""

    r_values: np.ndarray
    theta_values: np.ndarray

    def __post_init__(self) -> None:
        r = np.asarray(self.r_values, dtype=float)
        t = np.asarray(self.theta_values, dtype=float)
        if r.size == 0 or t.size == 0:
            raise ValueError("grid must be nonempty")
        if np.any(np.diff(r) <= 0) or np.any(np.diff(t) <= 0):
            raise ValueError("grid values must be strictly increasing")
        if r[0] < 0 or r[-1] >= 1.0:
            raise ValueError("radii must lie in [0, 1)")
        if t[0] < 0 or t[-1] >= TWO_PI:
            raise ValueError("angles must lie in [0, 2*pi)")
        object.__setattr__(self, "r_values", r)
        object.__setattr__(self, "theta_values", t)

    @classmethod
    def regular(cls, r_steps: int = 200, theta_steps: int = 256,
                r_max: float = 0.998) -> "PolarGrid":
        """Radii uniform in r^2 on [0, r_max^2], angles uniform in [0, 2*pi).

        Uniform spacing in r^2 equidistributes |z|^2, the variable every
        closed form actually depends on.
        """
        if not (0.0 < r_max < 1.0):
            raise ValueError("r_max must lie in (0, 1)")
        r = np.sqrt(np.linspace(0.0, r_max**2, int(r_steps)))
        t = np.linspace(0.0, TWO_PI, int(theta_steps), endpoint=False)
        return cls(r, t)

    @classmethod
    def default(cls) -> "PolarGrid":
        return cls.regular()

    def mesh(self) -> np.ndarray:
        """Complex points z = r * exp(i theta), shape (len(r), len(theta))."""
        return self.r_values[:, None] * np.exp(1j * self.theta_values)[None, :]


@dataclasses.dataclass(frozen=True)
class RangeSample:
    """Berezin-transform values over a polar grid (r-major layout)."""

    space: SpaceSpec
    symbol: sym.SymbolSpec | None  # None for non-composition operators
    grid: PolarGrid
    values: np.ndarray

    def points(self) -> np.ndarray:
        """Values as an (n, 2) array of planar points, r-major order."""
        flat = self.values.ravel()
        return np.column_stack([flat.real, flat.imag])

    def berezin_number(self) -> float:
        return float(np.max(np.abs(self.values)))


def _as_complex(z):
    """DiskPoint | complex | array -> complex scalar or ndarray."""
    if isinstance(z, DiskPoint):
        return z.z
    arr = np.asarray(z, dtype=complex)
    return complex(arr) if arr.ndim == 0 else arr


def hardy_transform(symbol: sym.SymbolSpec, z):
    """Berezin transform of C_phi on the Hardy space at z.

    Returns (1 - |z|^2) / (1 - conj(z) phi(z)); for elliptic symbols this is
    (1 - |z|^2) / (1 - alpha |z|^2), a function of r alone.  Vectorized over
    arrays of z.
    """
    zc = _as_complex(z)
    s = np.abs(zc) ** 2
    return (1.0 - s) / (1.0 - np.conj(zc) * sym.apply(symbol, zc))


def bergman_transform(symbol: sym.SymbolSpec, z):
    """Berezin transform of C_phi on the Bergman space: the square of the
    Hardy expression with the same symbol and point."""
    return hardy_transform(symbol, z) ** 2


def blaschke_real_imag(alpha, z):
    """Real and imaginary parts of the Bergman transform for a Blaschke symbol.

    Uses the explicit decomposition: with s = |z|^2,

        X = (1 - s) (1 - Re(conj(alpha) z)) + 2 Im(conj(alpha) z)^2
        Y = Im(conj(alpha) z) (1 + s - 2 Re(conj(alpha) z))
        k = (1 - s) / ((1 - s)^2 + 4 Im(alpha conj(z))^2)

    and Re = k^2 (X^2 - Y^2), Im = 2 k^2 X Y.  The pair must coincide with
    the direct ``bergman_transform`` value; that agreement is this module's
    central invariant.
    """
    alpha = complex(alpha)
    zc = _as_complex(z)
    s = np.abs(zc) ** 2
    aw = np.conj(alpha) * zc
    im_aw = np.imag(aw)
    x = (1.0 - s) * (1.0 - np.real(aw)) + 2.0 * im_aw**2
    y = im_aw * (1.0 + s - 2.0 * np.real(aw))
    # Im(alpha conj(z)) = -Im(conj(alpha) z), so the squares agree.
    k = (1.0 - s) / ((1.0 - s) ** 2 + 4.0 * im_aw**2)
    return k**2 * (x**2 - y**2), 2.0 * k**2 * x * y


def conjugation_partner(alpha, z: DiskPoint) -> DiskPoint:
    """The point where the Blaschke Bergman transform takes the conjugate value.

    For alpha = rho * exp(i psi) != 0 and z = r * exp(i theta) the partner is
    r * exp(i (2 psi - theta)) (angles mod 2*pi); for alpha = 0 the symmetry
    statement is vacuous and z itself is returned.
    """
    if isinstance(alpha, sym.SymbolSpec):
        if alpha.kind != "blaschke":
            raise ValueError("conjugation partner is defined for Blaschke symbols")
        alpha = alpha.alpha
    alpha = complex(alpha)
    if alpha == 0:
        return z
    psi = math.atan2(alpha.imag, alpha.real)
    return DiskPoint(z.r, (2.0 * psi - z.theta) % TWO_PI)


@dataclasses.dataclass(frozen=True)
class BoundaryLimit:
    """Extrapolated radial limit of |transform| with a convergence flag."""

    value: float
    converged: bool
    samples: np.ndarray  # |transform| at r = 1 - 10^-k, k = 2..6


def boundary_limit(space: SpaceSpec, symbol: sym.SymbolSpec, theta: float) -> BoundaryLimit:
    """Numerically extrapolated limit of |transform(r e^{i theta})| as r -> 1.

    Samples r in {1 - 10^-k : k = 2..6} and applies Aitken extrapolation to
    the tail (exact for geometric convergence).  A sequence whose last three
    samples spread by more than 1e-2 is flagged as non-convergent; the value
    is still reported.
    """
    transform = hardy_transform if space.kind == "hardy" else bergman_transform
    if space.kind not in ("hardy", "bergman"):
        raise ValueError("boundary limits are defined for hardy/bergman spaces")
    radii = 1.0 - 10.0 ** (-np.arange(2.0, 7.0))
    zs = radii * np.exp(1j * float(theta))
    samples = np.abs(transform(symbol, zs))
    v1, v2, v3 = samples[-3:]
    denom = v3 - 2.0 * v2 + v1
    if abs(denom) > 1e-300:
        value = v3 - (v3 - v2) ** 2 / denom
    else:
        value = v3
    converged = float(np.max(samples[-3:]) - np.min(samples[-3:])) <= 1e-2
    return BoundaryLimit(float(value), converged, samples)


def sample_range(space: SpaceSpec, symbol: sym.SymbolSpec, grid: PolarGrid) -> RangeSample:
    """Evaluate the closed-form transform at every grid point.

    Only the Hardy and Bergman tags have composition closed forms here; the
    model and l2 spaces are handled by the matrix-oracle module.
    """
    if space.kind == "hardy":
        values = hardy_transform(symbol, grid.mesh())
    elif space.kind == "bergman":
        values = bergman_transform(symbol, grid.mesh())
    else:
        raise ValueError(
            f"sample_range supports hardy/bergman spaces, got {space.label}"
        )
    return RangeSample(space, symbol, grid, values)


def model_transform(n: int, z):
    """Closed-form Berezin transform of the model-space shift M_{z^n}.

    At lambda the value is lambda (1 - |lambda|^(2n-2)) / (1 - |lambda|^(2n));
    for n = 1 the operator is 0 and so is the transform.
    """
    n = int(n)
    zc = _as_complex(z)
    if n == 1:
        return np.zeros_like(np.asarray(zc)) if np.ndim(zc) else 0j
    s = np.abs(zc) ** 2
    return zc * (1.0 - s ** (n - 1)) / (1.0 - s**n)
