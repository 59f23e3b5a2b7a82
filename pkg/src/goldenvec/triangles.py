"""Triangles as 6-D vectors with an edge-difference inner product.

An ordered vertex triple (v_a, v_b, v_c) is treated as one 6-D vector whose
inner product with another triangle sums the 2-D dot products of matched
edge differences.  Unit triangles (norm 1, one vertex at the origin) form a
two-parameter family (phi, lam): lam is the angle between the two sides
leaving the origin and phi rotates the whole triangle.  Scaling a unit
triangle by ||V|| * phi1(angle(V, E)) produces the triangle in golden ratio
with V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branches import phi1

__all__ = [
    "DegenerateParameterError",
    "TriangleVec",
    "UnitTriangleParams",
    "similar_triangle",
    "tri_angle",
    "tri_inner",
    "tri_norm",
    "triangle_similarity_set",
    "unit_triangle",
    "vertex_angle",
]

#: A computed side coefficient at or below this magnitude means the
#: parameters collapse the triangle.
_DEGENERATE_TOL = 1e-12


class DegenerateParameterError(ValueError):
    """Unit-triangle parameters collapse a side to length zero."""


def _vec2(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (2,):
        raise ValueError(f"{name} must be a 2-D point, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must have finite components")
    return arr


@dataclass(frozen=True, eq=False)
class TriangleVec:
    """Ordered vertex triple treated as a single 6-D vector."""

    v_a: np.ndarray
    v_b: np.ndarray
    v_c: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v_a", _vec2(self.v_a, "v_a"))
        object.__setattr__(self, "v_b", _vec2(self.v_b, "v_b"))
        object.__setattr__(self, "v_c", _vec2(self.v_c, "v_c"))

    def translated(self, c) -> "TriangleVec":
        c = _vec2(c, "translation")
        return TriangleVec(self.v_a + c, self.v_b + c, self.v_c + c)

    def vertices(self) -> np.ndarray:
        return np.stack([self.v_a, self.v_b, self.v_c])


@dataclass(frozen=True)
class UnitTriangleParams:
    """Rotation angle phi and inter-side angle lam, both in (0, pi)."""

    phi: float
    lam: float

    def __post_init__(self):
        for name, value in (("phi", self.phi), ("lam", self.lam)):
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if not 0.0 < value < math.pi:
                raise ValueError(f"{name} must lie in (0, pi), got {value!r}")


def tri_inner(v1: TriangleVec, v2: TriangleVec) -> float:
    """Inner product: sum of dot products of the three edge differences."""
    return float(
        (v1.v_a - v1.v_b) @ (v2.v_a - v2.v_b)
        + (v1.v_b - v1.v_c) @ (v2.v_b - v2.v_c)
        + (v1.v_c - v1.v_a) @ (v2.v_c - v2.v_a)
    )


def tri_norm(v: TriangleVec) -> float:
    """Norm induced by the edge-difference inner product."""
    return math.sqrt(tri_inner(v, v))


def unit_triangle(params: UnitTriangleParams) -> TriangleVec:
    """The norm-1 triangle with one vertex at the origin for given (phi, lam).

    The side toward v_c leaves the origin at polar angle phi, the side
    toward v_b at polar angle lam + phi.  The v_b side coefficient changes
    sign for large phi; the norm stays exactly 1 either way, but past the
    sign change the interior angle at the origin reads pi - lam instead of
    lam.  Parameters that collapse a side raise DegenerateParameterError.
    """
    phi, lam = params.phi, params.lam
    ec_norm = math.sqrt(2.0) * math.sin(phi) / math.sqrt(4.0 - math.cos(lam) ** 2)
    eb_norm = 0.5 * ec_norm * math.cos(lam) + math.cos(phi) / math.sqrt(2.0)
    if abs(ec_norm) <= _DEGENERATE_TOL or abs(eb_norm) <= _DEGENERATE_TOL:
        raise DegenerateParameterError(
            f"parameters (phi={phi!r}, lam={lam!r}) collapse a side "
            f"(coefficients {eb_norm:.3e}, {ec_norm:.3e})"
        )
    return TriangleVec(
        np.zeros(2),
        eb_norm * np.array([math.cos(lam + phi), math.sin(lam + phi)]),
        ec_norm * np.array([math.cos(phi), math.sin(phi)]),
    )


def tri_angle(v: TriangleVec, e: TriangleVec) -> float:
    """Angle between a triangle vector and a unit triangle, in [0, pi]."""
    nv = tri_norm(v)
    if nv == 0.0:
        raise ValueError("angle is undefined for a fully degenerate triangle")
    ne = tri_norm(e)
    if abs(ne - 1.0) > 1e-9:
        raise ValueError(f"second argument must have unit norm, got {ne!r}")
    cos_theta = min(1.0, max(-1.0, tri_inner(v, e) / nv))
    return math.acos(cos_theta)


def vertex_angle(v: TriangleVec) -> float:
    """Interior angle at the first vertex, between the two incident sides."""
    side_b = v.v_b - v.v_a
    side_c = v.v_c - v.v_a
    nb = float(np.linalg.norm(side_b))
    nc = float(np.linalg.norm(side_c))
    if nb == 0.0 or nc == 0.0:
        raise ValueError("vertex angle is undefined when an incident side has length 0")
    cos_angle = min(1.0, max(-1.0, float(side_b @ side_c) / (nb * nc)))
    return math.acos(cos_angle)


def _scaled(e: TriangleVec, factor: float, c) -> TriangleVec:
    c = _vec2(c, "translation")
    return TriangleVec(
        factor * e.v_a + c, factor * e.v_b + c, factor * e.v_c + c
    )


def similar_triangle(v: TriangleVec, params: UnitTriangleParams, c=(0.0, 0.0)) -> TriangleVec:
    """The triangle in golden ratio with v for one (phi, lam), shifted by c.

    Builds the unit triangle E, measures the 6-D angle theta between v and
    E, and returns ||v|| * phi1(theta) * E translated by c.
    """
    nv = tri_norm(v)
    if nv == 0.0:
        raise ValueError("similarity is undefined for a fully degenerate triangle")
    e = unit_triangle(params)
    theta = tri_angle(v, e)
    return _scaled(e, nv * phi1(theta), c)


def triangle_similarity_set(
    v: TriangleVec, phi_list, lam: float, c=(0.0, 0.0)
) -> list[TriangleVec]:
    """One similar triangle per rotation angle, at a fixed inter-side angle.

    Every phi must lie in (0, pi); offenders are rejected by value.
    """
    if tri_norm(v) == 0.0:
        raise ValueError("similarity is undefined for a fully degenerate triangle")
    phi_values = [float(p) for p in phi_list]
    bad = [p for p in phi_values if not (math.isfinite(p) and 0.0 < p < math.pi)]
    if bad:
        raise ValueError(f"rotation angles must lie in (0, pi), offending values: {bad}")
    return [
        similar_triangle(v, UnitTriangleParams(phi=p, lam=lam), c) for p in phi_values
    ]
