"""Disk self-maps used as composition symbols.

Three families are supported, each validated at construction time:

* elliptic rotations/contractions  phi(z) = alpha z  with |alpha| <= 1,
* disk automorphisms  phi(z) = (a z + b)/(conj(b) z + conj(a))  with
  |a|^2 - |b|^2 = 1,
* Blaschke factors  phi_alpha(z) = (z - alpha)/(1 - conj(alpha) z)  with
  |alpha| < 1.
"""
from __future__ import annotations

import dataclasses

import numpy as np

__all__ = [
    "SymbolError",
    "SymbolSpec",
    "elliptic",
    "automorphism",
    "blaschke",
    "apply",
    "taylor_coeffs",
    "symbol_series",
]

_AUTOMORPHISM_TOL = 1e-12


class SymbolError(ValueError):
    """Raised for invalid symbol parameters."""


@dataclasses.dataclass(frozen=True)
class SymbolSpec:
    """A validated composition symbol.  Use the factory functions below."""

    kind: str  # "elliptic" | "automorphism" | "blaschke"
    alpha: complex = 0j  # elliptic / blaschke parameter
    a: complex = 0j  # automorphism parameters
    b: complex = 0j

    @property
    def label(self) -> str:
        if self.kind == "automorphism":
            return f"automorphism(a={self.a}, b={self.b})"
        return f"{self.kind}(alpha={self.alpha})"


def elliptic(alpha) -> SymbolSpec:
    """phi(z) = alpha*z with alpha in the closed unit disk."""
    alpha = complex(alpha)
    if abs(alpha) > 1.0 + 1e-15:
        raise SymbolError(f"elliptic symbol requires |alpha| <= 1, got {abs(alpha)}")
    return SymbolSpec("elliptic", alpha=alpha)


def automorphism(a, b) -> SymbolSpec:
    """phi(z) = (a z + b)/(conj(b) z + conj(a)), |a|^2 - |b|^2 = 1."""
    a, b = complex(a), complex(b)
    defect = abs(abs(a) ** 2 - abs(b) ** 2 - 1.0)
    if defect > _AUTOMORPHISM_TOL:
        raise SymbolError(
            "automorphism requires |a|^2 - |b|^2 = 1 "
            f"(defect {defect:.3e} exceeds {_AUTOMORPHISM_TOL})"
        )
    return SymbolSpec("automorphism", a=a, b=b)


def blaschke(alpha) -> SymbolSpec:
    """phi_alpha(z) = (z - alpha)/(1 - conj(alpha) z) with |alpha| < 1."""
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise SymbolError(f"Blaschke factor requires |alpha| < 1, got {abs(alpha)}")
    return SymbolSpec("blaschke", alpha=alpha)


def apply(symbol: SymbolSpec, z):
    """Evaluate phi(z).  Accepts complex scalars or arrays (vectorized)."""
    z = np.asarray(getattr(z, "z", z), dtype=complex)
    if symbol.kind == "elliptic":
        out = symbol.alpha * z
    elif symbol.kind == "automorphism":
        a, b = symbol.a, symbol.b
        out = (a * z + b) / (np.conj(b) * z + np.conj(a))
    else:
        al = symbol.alpha
        out = (z - al) / (1.0 - np.conj(al) * z)
    if out.ndim == 0:
        return complex(out)
    return out


def symbol_series(symbol: SymbolSpec, truncation: int) -> np.ndarray:
    """First ``truncation`` Taylor coefficients of phi at the origin.

    For the rational families the denominator is expanded as an exact
    geometric series (no numerical differentiation), so the coefficients
    carry no cancellation error.
    """
    N = int(truncation)
    if N < 1:
        raise ValueError("truncation must be >= 1")
    coeffs = np.zeros(N, dtype=complex)
    if symbol.kind == "elliptic":
        if N > 1:
            coeffs[1] = symbol.alpha
        return coeffs
    if symbol.kind == "blaschke":
        al = symbol.alpha
        # (z - alpha) * sum_m conj(alpha)^m z^m
        geom = np.conj(al) ** np.arange(N)
        coeffs = -al * geom
        coeffs[1:] += geom[:-1]
        return coeffs
    a, b = symbol.a, symbol.b
    # (a z + b)/(conj(b) z + conj(a)) = (a z + b)/conj(a) * sum_m t^m z^m
    # with t = -conj(b)/conj(a)
    t = -np.conj(b) / np.conj(a)
    geom = t ** np.arange(N) / np.conj(a)
    coeffs = b * geom
    coeffs[1:] += a * geom[:-1]
    return coeffs


def taylor_coeffs(symbol: SymbolSpec, power: int, truncation: int) -> np.ndarray:
    """First ``truncation`` Taylor coefficients of phi(z)**power.

    Computed by repeated truncated power-series multiplication starting from
    ``symbol_series``; power 0 returns (1, 0, ..., 0).
    """
    k = int(power)
    if k < 0:
        raise ValueError("power must be >= 0")
    N = int(truncation)
    out = np.zeros(N, dtype=complex)
    out[0] = 1.0
    if k == 0:
        return out
    base = symbol_series(symbol, N)
    for _ in range(k):
        out = np.convolve(out, base)[:N]
    return out
