"""Acceptance gate: twelve criteria, one printed verdict line per criterion.

Criterion 3 is an expected failure, marked strict.  It compares the solver
against four-decimal reference roots, but those references are truncated
prints and one (1.5322) is a misprint for 1.5325...; the true roots sit up
to 3.1e-4 away, so the stated 5e-5 tolerance cannot hold.  The test keeps
the stated tolerance and reports every delta; the unit tests in
test_quartic.py pin the full-precision roots at 1e-12 instead.
"""

import itertools
import math

import numpy as np
import pytest
from conftest import run_cli

from goldenvec import (
    DegenerateParameterError,
    TriangleVec,
    UnitTriangleParams,
    branch_arrays,
    mean_ggr,
    phi1,
    similarity_set_2d,
    similarity_set_3d,
    solve_golden_quartic,
    solve_many,
    sum_similarity_sets_2d,
    tri_norm,
    triangle_similarity_set,
    unit_triangle,
    vertex_angle,
)

GRID_POINTS = 10_007


def verdict(number: int, ok: bool, label: str) -> bool:
    print(f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {label}")
    return ok


def test_criterion_01_golden_constants():
    d0 = abs(phi1(0.0) - 1.6180339887)
    dpi = abs(phi1(math.pi) - 0.6180339887)
    ok = d0 <= 1e-9 and dpi <= 1e-9
    assert verdict(1, ok, f"phi1 at 0 and pi (deltas {d0:.1e}, {dpi:.1e})")


def test_criterion_02_perpendicular_value():
    value = phi1(math.pi / 2)
    d = abs(value - 1.2720196495)
    square_gap = abs(value**2 - phi1(0.0))
    ok = d <= 1e-9 and square_gap <= 1e-9
    assert verdict(
        2, ok, f"phi1(pi/2) and its square (deltas {d:.1e}, {square_gap:.1e})"
    )


@pytest.mark.xfail(
    strict=True,
    reason="the four-decimal reference roots are truncated prints (1.5322 is "
    "a misprint for 1.5325...); the true roots differ by up to 3.1e-4, so the "
    "stated 5e-5 tolerance cannot hold",
)
def test_criterion_03_four_decimal_root_fixtures():
    references = {
        45.0: (-0.8492, 1.5322, -0.3416 + 0.8072j, -0.3416 - 0.8072j),
        100.0: (-1.3455, 1.1894, 0.0780 + 0.7865j, 0.0780 - 0.7865j),
    }
    worst = 0.0
    details = []
    for deg, printed in references.items():
        roots = solve_golden_quartic(math.radians(deg)).roots
        for ref in printed:
            delta = min(abs(ref - r) for r in roots)
            details.append(f"    {deg:g} deg, reference {ref}: delta {delta:.2e}")
            worst = max(worst, delta)
    ok = worst <= 5e-5
    verdict(3, ok, f"four-decimal root fixtures at 5e-5 (worst delta {worst:.2e})")
    for line in details:
        print(line)
    assert ok


def test_criterion_04_identity_suite():
    grid = np.linspace(0.0, 2.0 * math.pi, GRID_POINTS)
    roots = solve_many(grid)
    gaps = {
        "sum": np.abs(roots.sum(axis=1)).max(),
        "product": np.abs(np.prod(roots, axis=1) + 1.0).max(),
        "pairs": np.abs(
            sum(
                roots[:, i] * roots[:, j]
                for i, j in itertools.combinations(range(4), 2)
            )
            + 1.0
        ).max(),
        # Vieta-consistent sign: +2cos(alpha); the opposite sign fails at 0
        "triples": np.abs(
            sum(
                roots[:, i] * roots[:, j] * roots[:, k]
                for i, j, k in itertools.combinations(range(4), 3)
            )
            - 2.0 * np.cos(grid)
        ).max(),
    }
    p1, p2, p3 = branch_arrays(grid)
    s1, s2, s3 = branch_arrays(grid + math.pi)
    gaps["shift_real"] = np.abs(p1 + s2).max()
    gaps["shift_complex"] = np.abs(p3 + np.conj(s3)).max()
    for name, other in (("evenness", -grid), ("periodicity", grid + 2.0 * math.pi)):
        q1, q2, q3 = branch_arrays(other)
        gaps[name] = max(
            np.abs(q1 - p1).max(), np.abs(q2 - p2).max(), np.abs(q3 - p3).max()
        )
    bounded = (
        np.abs(p1 + p2).max() <= 1.0 + 1e-12
        and np.abs(p3.real).max() <= 0.5 + 1e-12
    )
    ok = bounded and all(g <= 1e-9 for g in gaps.values())
    worst = max(gaps.values())
    assert verdict(
        4,
        ok,
        f"identity suite on {GRID_POINTS} points, triple sign +2cos "
        f"(worst gap {worst:.1e})",
    ), gaps


def test_criterion_05_unit_ratio_angle():
    d = abs(phi1(2.0 * math.pi / 3.0) - 1.0)
    assert verdict(5, d <= 1e-9, f"phi1(2pi/3) = 1 (delta {d:.1e})")


def test_criterion_06_mean_of_the_ratio():
    mean = mean_ggr(100_000)
    d_mean = abs(mean - 1.192880)
    d_cross = abs(phi1(1.7385) - mean)
    ok = d_mean <= 1e-4 and d_cross <= 5e-4
    assert verdict(
        6, ok, f"mean 1.192880 and crossing angle (deltas {d_mean:.1e}, {d_cross:.1e})"
    )


def test_criterion_07_square_root_of_two_point():
    d = abs(phi1(math.radians(290.70)) - 1.41421356)
    assert verdict(7, d <= 1e-3, f"phi1 at 290.70 deg vs sqrt(2) (delta {d:.1e})")


def test_criterion_08_golden_pair_oracle_2d():
    worst = 0.0
    for a in ([1.0, 2.0], [-1.0, 3.0], [1.0, 0.0]):
        samples = similarity_set_2d(a, 128)
        worst = max(worst, max(s.residual for s in samples))
    assert verdict(
        8, worst <= 1e-9, f"2-D pair residuals, 3 vectors x 128 (worst {worst:.1e})"
    )


def test_criterion_09_sum_rule():
    reference = similarity_set_2d([1.0, 1.0], 128)
    worst_coincide = 0.0
    for a1, a2 in (([0, 1], [1, 0]), ([1, 2], [0, -1]), ([2, 3], [-1, -2])):
        result = sum_similarity_sets_2d(a1, a2, 128)
        for s, r in zip(result.samples, reference):
            worst_coincide = max(worst_coincide, np.abs(s.vector - r.vector).max())
    worst_projection = max(
        sum_similarity_sets_2d(a1, a2, 128).max_sum_residual
        for a1, a2 in (([1, 2], [-1, 3]), ([2, -3], [1, 5]))
    )
    ok = worst_coincide <= 1e-12 and worst_projection <= 1e-12
    assert verdict(
        9,
        ok,
        f"sum sets coincide and project (gaps {worst_coincide:.1e}, "
        f"{worst_projection:.1e})",
    )


def test_criterion_10_golden_pair_oracle_3d():
    worst = 0.0
    for axis in ([0.0, 0.0, 1.0], [1.0, 0.0, 0.0]):
        samples = similarity_set_3d(axis, 257, 512)
        worst = max(worst, max(s.residual for s in samples))
    assert verdict(
        10, worst <= 1e-9, f"3-D pair residuals, 257 x 512 grids (worst {worst:.1e})"
    )


def test_criterion_11_triangle_fixtures():
    v = TriangleVec([0.0, 0.0], [3.0, 2.0], [5.0, 0.0])
    angle_deg = math.degrees(vertex_angle(v))
    d_angle = abs(angle_deg - 33.69)
    d_ratio = abs(phi1(math.radians(angle_deg)) - 1.5702)

    rng = np.random.default_rng(20260816)
    worst_norm = 0.0
    valid = 0
    while valid < 1000:
        params = UnitTriangleParams(
            float(rng.uniform(0.01, math.pi - 0.01)),
            float(rng.uniform(0.01, math.pi - 0.01)),
        )
        try:
            e = unit_triangle(params)
        except DegenerateParameterError:
            continue
        worst_norm = max(worst_norm, abs(tri_norm(e) - 1.0))
        valid += 1

    fixtures = (
        (TriangleVec([0, 0], [0, 2], [3, 2]), 56.31, 120, 23),
        (TriangleVec([0, 0], [0, 2], [3, 3]), 45.0, 135, 26),
        (TriangleVec([1, 2], [3.5, 4 * math.sin(math.pi / 3)], [7, 2]), 60.0, 150, 29),
    )
    counts_ok = True
    worst_res = 0.0
    for source, lam_deg, last_deg, expected in fixtures:
        phis = [math.radians(d) for d in range(10, last_deg + 1, 5)]
        sets = triangle_similarity_set(source, phis, math.radians(lam_deg))
        counts_ok = counts_ok and len(sets) == expected
        nv = tri_norm(source)
        for s in sets:
            summed = TriangleVec(
                s.v_a + source.v_a, s.v_b + source.v_b, s.v_c + source.v_c
            )
            worst_res = max(worst_res, abs(tri_norm(summed) * nv - tri_norm(s) ** 2))

    ok = (
        d_angle <= 0.01
        and d_ratio <= 5e-5
        and worst_norm <= 1e-12
        and counts_ok
        and worst_res <= 1e-9
    )
    assert verdict(
        11,
        ok,
        f"triangle fixtures: angle delta {d_angle:.1e} deg, ratio delta "
        f"{d_ratio:.1e}, unit-norm gap {worst_norm:.1e}, counts 23/26/29 "
        f"{'ok' if counts_ok else 'WRONG'}, pair residual {worst_res:.1e}",
    )


def test_criterion_12_cli_determinism(verify_runs):
    invocations = [
        ("eval", "--deg", "45"),
        ("branches", "--count", "129"),
        ("polar", "--selector", "sum23", "--count", "129"),
        ("sim2d", "--vector", "1,2", "--count", "64"),
        ("sumsets", "--a1", "2,3", "--a2", "-1,-2", "--count", "64"),
        ("sim3d", "--vector", "1,1,1", "--nphi", "17", "--npsi", "32"),
        (
            "triangle", "--verts", "0,0 3,2 5,0",
            "--lambda-deg", "33.69", "--phi-deg", "20,40,70",
        ),
    ]
    mismatched = []
    for args in invocations:
        first = run_cli(*args)
        second = run_cli(*args)
        if first.returncode != 0 or first.stdout != second.stdout:
            mismatched.append(args[0])
    v1, v2 = verify_runs
    if v1.stdout != v2.stdout or v1.returncode != 0:
        mismatched.append("verify")
    ok = not mismatched
    assert verdict(
        12,
        ok,
        "byte-identical reruns for all 8 commands"
        + ("" if ok else f" (mismatched: {', '.join(mismatched)})"),
    )
