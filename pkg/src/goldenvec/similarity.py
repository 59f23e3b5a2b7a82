"""Golden pairs and similarity sets for 1-D, 2-D, and 3-D vectors.

Two nonzero vectors a, b form a golden pair when ||b + a|| * ||a|| = ||b||**2;
the ratio ||b|| / ||a|| then equals phi1 of the angle between them.  The
similarity set of a vector collects, for every direction, the unique partner
vector pointing that way.  Every emitted sample carries its golden-pair
residual |(||s + a|| * ||a||) - ||s||**2| so results can be verified without
re-deriving the branch functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branches import phi1, phi1_many
from .quartic import TWO_PI

__all__ = [
    "DegenerateSumError",
    "SimilaritySample2D",
    "SimilaritySample3D",
    "SumSimilarityResult",
    "direction_angle",
    "golden_pair_residual",
    "golden_partners_1d",
    "is_golden_pair",
    "proportion",
    "similar_vector_2d",
    "similar_vector_3d",
    "similarity_set_2d",
    "similarity_set_3d",
    "sum_similarity_sets_2d",
]


class DegenerateSumError(ValueError):
    """The two vectors cancel, so the direction of their sum is undefined."""


def _as_vector(v, dim: int, name: str = "vector") -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (dim,):
        raise ValueError(f"{name} must have {dim} components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} components must be finite")
    return arr


def proportion(a, b) -> float:
    """||a|| / ||b||, the scale-invariant proportion of two vectors."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    nb = float(np.linalg.norm(b))
    if nb == 0.0:
        raise ZeroDivisionError("proportion is undefined for a zero second vector")
    return float(np.linalg.norm(a)) / nb


def golden_pair_residual(a, b) -> float:
    """| ||b + a|| * ||a|| - ||b||**2 |, the direct golden-pair violation."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    na = float(np.linalg.norm(a))
    nb2 = float(np.linalg.norm(b)) ** 2
    return abs(float(np.linalg.norm(b + a)) * na - nb2)


def is_golden_pair(a, b, tol: float) -> bool:
    """Whether (a, b) is a golden pair, with residual at most tol * ||b||**2."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    nb2 = float(np.linalg.norm(b)) ** 2
    if np.linalg.norm(a) == 0.0 or nb2 == 0.0:
        raise ValueError("golden pairs are defined for nonzero vectors only")
    return golden_pair_residual(a, b) <= tol * nb2


def golden_partners_1d(a: float) -> tuple[float, float]:
    """Both numbers forming a golden pair with a nonzero real number.

    For a > 0 the partners are (|a| * phi1(0), -|a| * phi1(pi)); for a < 0
    the signs mirror.  Each partner b satisfies ||b + a|| * ||a|| = ||b||**2.
    """
    if not math.isfinite(a):
        raise ValueError(f"input must be finite, got {a!r}")
    if a == 0.0:
        raise ValueError("golden partners are undefined for zero")
    mag = abs(a)
    aligned = mag * phi1(0.0)
    opposed = mag * phi1(math.pi)
    if a > 0:
        return (aligned, -opposed)
    return (opposed, -aligned)


def direction_angle(a) -> float:
    """Polar angle of a nonzero 2-D vector, in [0, 2*pi)."""
    a = _as_vector(a, 2)
    if np.linalg.norm(a) == 0.0:
        raise ValueError("direction of the zero vector is undefined")
    return float(np.remainder(math.atan2(a[1], a[0]), TWO_PI))


@dataclass(frozen=True, eq=False)
class SimilaritySample2D:
    """One member of a 2-D similarity set: direction angle, vector, ratio."""

    phi: float
    vector: np.ndarray
    ggr: float
    residual: float


@dataclass(frozen=True, eq=False)
class SimilaritySample3D:
    """One member of a 3-D similarity set."""

    phi: float
    psi: float
    vector: np.ndarray
    ggr: float
    residual: float


@dataclass(frozen=True, eq=False)
class SumSimilarityResult:
    """Similarity set of a vector sum, plus the largest projection residual.

    max_sum_residual bounds, over all sampled directions, how far the
    rotated-frame component sum ||a1||*e(alpha1 - phi) + ||a2||*e(alpha2 - phi)
    strays from ||a1 + a2||*e(gamma - phi).
    """

    samples: list[SimilaritySample2D]
    max_sum_residual: float


def _residuals_2d(samples: np.ndarray, a: np.ndarray) -> np.ndarray:
    na = float(np.linalg.norm(a))
    ns2 = np.einsum("ij,ij->i", samples, samples)
    nsa = np.linalg.norm(samples + a, axis=1)
    return np.abs(nsa * na - ns2)


def similar_vector_2d(a, phi: float) -> SimilaritySample2D:
    """The vector in golden ratio with a, pointing along the angle phi."""
    a = _as_vector(a, 2)
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise ValueError("similarity sets are undefined for the zero vector")
    if not math.isfinite(phi):
        raise ValueError(f"angle must be finite, got {phi!r}")
    alpha = direction_angle(a)
    g = phi1(alpha - phi)
    vec = na * g * np.array([math.cos(phi), math.sin(phi)])
    res = golden_pair_residual(a, vec)
    return SimilaritySample2D(phi=float(phi), vector=vec, ggr=g, residual=res)


def similarity_set_2d(a, count: int) -> list[SimilaritySample2D]:
    """Similarity set of a 2-D vector at count uniform directions.

    Directions are phi = 2*pi*k/count for k = 0 .. count-1.
    """
    a = _as_vector(a, 2)
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise ValueError("similarity sets are undefined for the zero vector")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    phis = TWO_PI * np.arange(count) / count
    alpha = direction_angle(a)
    ggr = phi1_many(alpha - phis)
    vecs = (na * ggr)[:, None] * np.column_stack([np.cos(phis), np.sin(phis)])
    residuals = _residuals_2d(vecs, a)
    return [
        SimilaritySample2D(phi=float(p), vector=v, ggr=float(g), residual=float(r))
        for p, v, g, r in zip(phis, vecs, ggr, residuals)
    ]


def sum_similarity_sets_2d(a1, a2, count: int) -> SumSimilarityResult:
    """Similarity set of a1 + a2, with the angle-wise summation verified.

    The set of the sum equals the angle-wise sum of the two individual
    sets.  For every sampled direction the rotated-frame identity
    ||a1 + a2||*e(gamma - phi) = ||a1||*e(alpha1 - phi) + ||a2||*e(alpha2 - phi)
    is evaluated and the largest violation is attached to the result.
    """
    a1 = _as_vector(a1, 2, "a1")
    a2 = _as_vector(a2, 2, "a2")
    n1 = float(np.linalg.norm(a1))
    n2 = float(np.linalg.norm(a2))
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("similarity sets are undefined for the zero vector")
    total = a1 + a2
    nt = float(np.linalg.norm(total))
    if nt == 0.0:
        raise DegenerateSumError(
            "a1 + a2 is the zero vector, so the direction of the sum is undefined"
        )
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")

    phis = TWO_PI * np.arange(count) / count
    gamma = direction_angle(total)
    alpha1 = direction_angle(a1)
    alpha2 = direction_angle(a2)

    def frame(norm, ang):
        return norm * np.column_stack([np.cos(ang - phis), np.sin(ang - phis)])

    gap = frame(nt, gamma) - frame(n1, alpha1) - frame(n2, alpha2)
    max_residual = float(np.linalg.norm(gap, axis=1).max())
    return SumSimilarityResult(
        samples=similarity_set_2d(total, count),
        max_sum_residual=max_residual,
    )


def _unit_3d(phi, psi) -> np.ndarray:
    sin_phi = np.sin(phi)
    return np.stack(
        [sin_phi * np.cos(psi), sin_phi * np.sin(psi), np.cos(phi)], axis=-1
    )


def similar_vector_3d(a, phi: float, psi: float) -> SimilaritySample3D:
    """The vector in golden ratio with a along the direction (phi, psi).

    phi is the polar angle in [0, pi], psi the azimuth; the direction is
    [sin(phi)cos(psi), sin(phi)sin(psi), cos(phi)].
    """
    a = _as_vector(a, 3)
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise ValueError("similarity sets are undefined for the zero vector")
    if not (math.isfinite(phi) and math.isfinite(psi)):
        raise ValueError("angles must be finite")
    if not 0.0 <= phi <= math.pi:
        raise ValueError(f"polar angle must lie in [0, pi], got {phi!r}")
    e = _unit_3d(phi, psi)
    cos_theta = min(1.0, max(-1.0, float(a @ e) / na))
    theta = math.acos(cos_theta)
    g = phi1(theta)
    vec = na * g * e
    return SimilaritySample3D(
        phi=float(phi), psi=float(psi), vector=vec, ggr=g,
        residual=golden_pair_residual(a, vec),
    )


def similarity_set_3d(a, n_phi: int, n_psi: int) -> list[SimilaritySample3D]:
    """Similarity set of a 3-D vector on an (n_phi x n_psi) direction grid.

    Polar angles are a closed uniform grid on [0, pi] (poles included once
    per azimuth); azimuths are psi = 2*pi*k/n_psi for k = 0 .. n_psi-1.
    Samples are emitted polar-major, matching the grid order.
    """
    a = _as_vector(a, 3)
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise ValueError("similarity sets are undefined for the zero vector")
    if n_phi < 1 or n_psi < 1:
        raise ValueError(f"grid counts must be at least 1, got {n_phi} x {n_psi}")

    phis = np.linspace(0.0, math.pi, n_phi)
    psis = TWO_PI * np.arange(n_psi) / n_psi
    phi_grid, psi_grid = np.meshgrid(phis, psis, indexing="ij")
    e = _unit_3d(phi_grid.ravel(), psi_grid.ravel())
    cos_theta = np.clip(e @ (a / na), -1.0, 1.0)
    ggr = phi1_many(np.arccos(cos_theta))
    vecs = na * ggr[:, None] * e

    ns2 = np.einsum("ij,ij->i", vecs, vecs)
    residuals = np.abs(np.linalg.norm(vecs + a, axis=1) * na - ns2)
    return [
        SimilaritySample3D(
            phi=float(p), psi=float(s), vector=v, ggr=float(g), residual=float(r)
        )
        for p, s, v, g, r in zip(
            phi_grid.ravel(), psi_grid.ravel(), vecs, ggr, residuals
        )
    ]
