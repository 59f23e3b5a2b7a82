"""Branch functions of the golden quartic over angle grids.

phi1 is the generalized golden ratio: the unique positive real root of
x**4 - x**2 - 2*x*cos(alpha) - 1 as a function of the angle.  phi2 is the
negative real root, phi3/phi4 the conjugate complex pair with phi3 taken
in the upper half plane.  All four are even and 2*pi-periodic in alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .quartic import (
    TWO_PI,
    BranchValues,
    classify_many,
    classify_roots,
    solve_golden_quartic,
    solve_many,
)

__all__ = [
    "BranchTable",
    "BranchValues",
    "branch_arrays",
    "branch_values",
    "cosine_approximation",
    "cosine_approximation_many",
    "mean_ggr",
    "phi1",
    "phi1_many",
    "phi2",
    "phi3",
    "phi4",
    "sample_branches",
]


def branch_values(alpha: float) -> BranchValues:
    """All four branch values at one angle."""
    return classify_roots(solve_golden_quartic(alpha))


def branch_arrays(alphas) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (phi1, phi2, phi3) over a 1-D array of angles."""
    return classify_many(solve_many(np.asarray(alphas, dtype=float)))


def phi1(alpha: float) -> float:
    """The generalized golden ratio at one angle (positive real root)."""
    return branch_values(alpha).phi1


def phi2(alpha: float) -> float:
    """The negative real root at one angle."""
    return branch_values(alpha).phi2


def phi3(alpha: float) -> complex:
    """The complex root with positive imaginary part at one angle."""
    return branch_values(alpha).phi3


def phi4(alpha: float) -> complex:
    """The complex root with negative imaginary part (conjugate of phi3)."""
    return branch_values(alpha).phi4


def phi1_many(alphas) -> np.ndarray:
    """Vectorized phi1 over a 1-D array of angles."""
    return branch_arrays(alphas)[0]


@lru_cache(maxsize=1)
def _fit_constant() -> float:
    # (phi1(0) + phi1(pi)) / 2, computed at full precision instead of
    # hardcoding the 4-decimal classic 1.1180
    return 0.5 * (phi1(0.0) + phi1(math.pi))


def cosine_approximation(alpha: float) -> float:
    """Cosine fit to phi1: (phi1(0) + phi1(pi))/2 + cos(alpha)/2.

    Matches phi1 exactly at alpha = 0 and alpha = pi.  The largest gap to
    phi1 over a period is about 0.158, near the quarter turn.
    """
    if not math.isfinite(alpha):
        raise ValueError(f"angle must be finite, got {alpha!r}")
    return _fit_constant() + 0.5 * math.cos(alpha)


def cosine_approximation_many(alphas) -> np.ndarray:
    alphas = np.asarray(alphas, dtype=float)
    if not np.all(np.isfinite(alphas)):
        raise ValueError("angles must be finite")
    return _fit_constant() + 0.5 * np.cos(alphas)


@dataclass(frozen=True, eq=False)
class BranchTable:
    """Branch values sampled over a uniform angle grid, endpoints included."""

    start: float
    stop: float
    count: int
    alphas: np.ndarray
    phi1: np.ndarray
    phi2: np.ndarray
    phi3: np.ndarray

    @property
    def phi4(self) -> np.ndarray:
        return np.conj(self.phi3)

    def rows(self) -> list[BranchValues]:
        return [
            BranchValues(
                alpha=float(a),
                phi1=float(p1),
                phi2=float(p2),
                phi3=complex(p3),
                phi4=complex(p3).conjugate(),
            )
            for a, p1, p2, p3 in zip(self.alphas, self.phi1, self.phi2, self.phi3)
        ]


def sample_branches(start: float, stop: float, count: int) -> BranchTable:
    """Sample all branches on a uniform grid of `count` points over [start, stop].

    Requires count >= 2 and start < stop; both endpoints are included.
    """
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ValueError("start and stop must be finite")
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    if not start < stop:
        raise ValueError(f"start must be less than stop, got [{start}, {stop}]")
    alphas = np.linspace(start, stop, count)
    p1, p2, p3 = branch_arrays(alphas)
    return BranchTable(
        start=float(start), stop=float(stop), count=int(count),
        alphas=alphas, phi1=p1, phi2=p2, phi3=p3,
    )


def mean_ggr(count: int) -> float:
    """Trapezoidal mean of phi1 over [0, 2*pi] on a `count`-point uniform grid."""
    if count < 1000:
        raise ValueError(f"count must be at least 1000, got {count}")
    grid = np.linspace(0.0, TWO_PI, count)
    values = phi1_many(grid)
    trapezoid = getattr(np, "trapezoid", None) or np.trapz
    return float(trapezoid(values, grid) / TWO_PI)
