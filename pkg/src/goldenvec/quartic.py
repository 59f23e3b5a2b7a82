"""Roots of the golden quartic x**4 - x**2 - 2*x*cos(alpha) - 1.

For every real angle the quartic has exactly two real roots, one positive
and one negative, plus one complex-conjugate pair.  Roots are computed as
eigenvalues of the companion matrix (batched over angle grids) and then
polished with a fixed number of Newton steps, which drives every residual
far below the required 1e-10 bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

#: A root counts as real when |Im| does not exceed this.  The conjugate
#: pair never comes closer than about 0.786 to the real axis over a full
#: angle period, so the margin is enormous.
REAL_TOL = 1e-9

#: Required residual bound |p(root)| for every returned root.
RESIDUAL_TOL = 1e-10

_NEWTON_PASSES = 3
_PERMUTATIONS = np.array(list(itertools.permutations(range(4))))


class ClassificationError(RuntimeError):
    """Root multiset does not split into two real roots plus a conjugate pair."""


def reduce_angle(alpha: float) -> float:
    """Reduce a finite angle to [0, 2*pi).  Lossless for the quartic's roots."""
    if not math.isfinite(alpha):
        raise ValueError(f"angle must be finite, got {alpha!r}")
    return float(np.remainder(alpha, TWO_PI))


def _reduce_angles(alphas: np.ndarray) -> np.ndarray:
    alphas = np.asarray(alphas, dtype=float)
    if not np.all(np.isfinite(alphas)):
        raise ValueError("angles must be finite")
    return np.remainder(alphas, TWO_PI)


def solve_many(alphas: np.ndarray) -> np.ndarray:
    """Solve the golden quartic at each angle of a 1-D array.

    Parameters
    ----------
    alphas : array_like
        Angles in radians, any finite values.

    Returns
    -------
    numpy.ndarray
        Complex array of shape (n, 4).  Each row holds the four roots at
        that angle, sorted by real part and then imaginary part.
    """
    reduced = np.atleast_1d(_reduce_angles(alphas))
    cos_a = np.cos(reduced)
    n = reduced.shape[0]

    companion = np.zeros((n, 4, 4))
    companion[:, 1, 0] = 1.0
    companion[:, 2, 1] = 1.0
    companion[:, 3, 2] = 1.0
    # last column: negated coefficients of 1, x, x**2, x**3 for the monic quartic
    companion[:, 0, 3] = 1.0
    companion[:, 1, 3] = 2.0 * cos_a
    companion[:, 2, 3] = 1.0

    roots = np.linalg.eigvals(companion)
    c = cos_a[:, None]
    for _ in range(_NEWTON_PASSES):
        p = (roots * roots - 1.0) * roots * roots - 2.0 * c * roots - 1.0
        dp = (4.0 * roots * roots - 2.0) * roots - 2.0 * c
        roots = roots - p / dp
    # complex sort orders by (Re, Im), the deterministic output contract
    return np.sort(roots, axis=1)


def residuals_many(roots: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """|p(root)| for each entry of an (n, 4) root array at the paired angles."""
    reduced = np.atleast_1d(_reduce_angles(alphas))
    c = np.cos(reduced)[:, None]
    p = (roots * roots - 1.0) * roots * roots - 2.0 * c * roots - 1.0
    return np.abs(p)


@dataclass(frozen=True, eq=False)
class RootQuartet:
    """Four roots of the golden quartic at one angle, with residuals."""

    alpha: float
    roots: np.ndarray
    residuals: np.ndarray


@dataclass(frozen=True)
class BranchValues:
    """Regrouped branch values at one angle.

    phi1 is the positive real root, phi2 the negative real root, phi3 the
    complex root with positive imaginary part, and phi4 its conjugate.
    """

    alpha: float
    phi1: float
    phi2: float
    phi3: complex
    phi4: complex


@dataclass(frozen=True, eq=False)
class RootPaths:
    """Continuously tracked root paths over an angle grid.

    paths has shape (4, n); column j holds the four roots at grid[j],
    assigned so that consecutive values along each row move minimally.
    """

    grid: np.ndarray
    paths: np.ndarray


def solve_golden_quartic(alpha: float) -> RootQuartet:
    """Solve the golden quartic at a single angle.

    Parameters
    ----------
    alpha : float
        Angle in radians, any finite value.

    Returns
    -------
    RootQuartet
        The four roots sorted by (Re, Im), each with |p(root)| <= 1e-10.
    """
    if not isinstance(alpha, (int, float)) or not math.isfinite(alpha):
        raise ValueError(f"angle must be finite, got {alpha!r}")
    roots = solve_many(np.array([alpha], dtype=float))[0]
    res = residuals_many(roots[None, :], np.array([alpha], dtype=float))[0]
    return RootQuartet(alpha=float(alpha), roots=roots, residuals=res)


def classify_many(roots: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split (n, 4) root rows into branch arrays (phi1, phi2, phi3).

    phi4 is the exact conjugate of phi3 and is not materialized.  Raises
    ClassificationError if any row fails the 2-real / conjugate-pair
    pattern, which would signal a solver failure.
    """
    roots = np.atleast_2d(roots)
    real_mask = np.abs(roots.imag) <= REAL_TOL
    if np.any(real_mask.sum(axis=1) != 2):
        bad = int(np.argmax(real_mask.sum(axis=1) != 2))
        raise ClassificationError(
            f"expected exactly 2 real roots, row {bad} has {int(real_mask[bad].sum())}"
        )
    real_vals = np.where(real_mask, roots.real, np.nan)
    phi1 = np.nanmax(real_vals, axis=1)
    phi2 = np.nanmin(real_vals, axis=1)
    if np.any(phi1 <= 0.0) or np.any(phi2 >= 0.0):
        raise ClassificationError("real roots do not split into positive/negative")

    idx = np.arange(roots.shape[0])
    im_masked = np.where(real_mask, -np.inf, roots.imag)
    phi3 = roots[idx, np.argmax(im_masked, axis=1)]
    partner = roots[idx, np.argmin(np.where(real_mask, np.inf, roots.imag), axis=1)]
    if np.any(np.abs(partner - np.conj(phi3)) > REAL_TOL):
        raise ClassificationError("complex roots are not a conjugate pair")
    return phi1, phi2, phi3


def classify_roots(q: RootQuartet) -> BranchValues:
    """Regroup a RootQuartet into branch values.

    phi4 is constructed as the exact conjugate of phi3.
    """
    phi1, phi2, phi3 = classify_many(q.roots[None, :])
    p3 = complex(phi3[0])
    return BranchValues(
        alpha=q.alpha,
        phi1=float(phi1[0]),
        phi2=float(phi2[0]),
        phi3=p3,
        phi4=p3.conjugate(),
    )


def track_roots(grid) -> RootPaths:
    """Track the four roots continuously over a strictly increasing angle grid.

    Paths start from the sorted roots at the first grid point.  At every
    following point the new roots are assigned to paths by the permutation
    minimizing the total displacement (all 24 candidates are tried, so the
    assignment is exactly optimal).
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a non-empty 1-D sequence of angles")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing")

    all_roots = solve_many(grid)
    paths = np.empty((4, grid.size), dtype=complex)
    paths[:, 0] = all_roots[0]
    rows = np.arange(4)
    for j in range(1, grid.size):
        prev = paths[:, j - 1]
        cand = all_roots[j]
        dist = np.abs(prev[:, None] - cand[None, :])
        costs = dist[rows, _PERMUTATIONS].sum(axis=1)
        paths[:, j] = cand[_PERMUTATIONS[np.argmin(costs)]]
    return RootPaths(grid=grid, paths=paths)
