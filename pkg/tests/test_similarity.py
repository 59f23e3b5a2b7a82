"""Similarity-set tests against the defining golden-pair equation.

The master oracle is the residual | ||s + a|| * ||a|| - ||s||**2 |, which
every emitted sample must satisfy up to 1e-9 * max(1, ||s||**2).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goldenvec import (
    DegenerateSumError,
    direction_angle,
    golden_pair_residual,
    golden_partners_1d,
    is_golden_pair,
    phi1,
    proportion,
    similar_vector_2d,
    similar_vector_3d,
    similarity_set_2d,
    similarity_set_3d,
    sum_similarity_sets_2d,
)

TWO_PI = 2.0 * math.pi
PHI = 1.6180339887498949


def oracle_ok(sample, a, tol=1e-9):
    ns2 = float(np.dot(sample.vector, sample.vector))
    return sample.residual <= tol * max(1.0, ns2)


def test_proportion_is_a_scale_invariant_ratio():
    assert proportion([3.0, 4.0], [1.0, 0.0]) == pytest.approx(5.0, abs=1e-15)
    assert proportion([6.0, 8.0], [2.0, 0.0]) == pytest.approx(5.0, abs=1e-15)
    assert proportion([1.0, 0.0], [3.0, 4.0]) == pytest.approx(0.2, abs=1e-15)


def test_proportion_rejects_a_zero_reference():
    with pytest.raises(ZeroDivisionError):
        proportion([1.0, 0.0], [0.0, 0.0])


def test_golden_pair_residual_vanishes_for_the_classic_pair():
    a = np.array([1.0, 0.0])
    b = PHI * a
    assert golden_pair_residual(a, b) <= 1e-12
    assert is_golden_pair(a, b, 1e-9)
    assert not is_golden_pair(a, 2.0 * a, 1e-9)


def test_is_golden_pair_rejects_zero_vectors():
    with pytest.raises(ValueError):
        is_golden_pair([0.0, 0.0], [1.0, 0.0], 1e-9)


def test_line_partners_for_a_positive_number():
    aligned, opposed = golden_partners_1d(2.0)
    assert aligned == pytest.approx(2.0 * PHI, abs=1e-12)
    assert opposed == pytest.approx(-2.0 * (PHI - 1.0), abs=1e-12)
    for b in (aligned, opposed):
        assert abs(abs(b + 2.0) * 2.0 - b * b) <= 1e-9


def test_line_partners_mirror_for_a_negative_number():
    # the tuple is ordered by direction: positive axis first, negative second
    plus_dir, minus_dir = golden_partners_1d(-2.0)
    pos_plus, pos_minus = golden_partners_1d(2.0)
    assert plus_dir == pytest.approx(-pos_minus, abs=1e-12)
    assert minus_dir == pytest.approx(-pos_plus, abs=1e-12)
    for b in (plus_dir, minus_dir):
        assert abs(abs(b - 2.0) * 2.0 - b * b) <= 1e-9


@pytest.mark.parametrize("bad", [0.0, math.inf, math.nan])
def test_line_partners_reject_bad_input(bad):
    with pytest.raises(ValueError):
        golden_partners_1d(bad)


def test_direction_angle_covers_the_full_turn():
    assert direction_angle([1.0, 1.0]) == pytest.approx(math.pi / 4, abs=1e-15)
    assert direction_angle([0.0, -1.0]) == pytest.approx(3 * math.pi / 2, abs=1e-12)
    with pytest.raises(ValueError):
        direction_angle([0.0, 0.0])


def test_similar_vector_points_along_the_requested_angle():
    a = [1.0, 2.0]
    s = similar_vector_2d(a, 0.3)
    assert math.atan2(s.vector[1], s.vector[0]) == pytest.approx(0.3, abs=1e-12)
    expected = np.linalg.norm(a) * phi1(direction_angle(a) - 0.3)
    assert np.linalg.norm(s.vector) == pytest.approx(expected, abs=1e-12)
    assert oracle_ok(s, a)


def test_similarity_set_2d_satisfies_the_pair_equation():
    for a in ([1.0, 2.0], [-1.0, 3.0], [1.0, 0.0]):
        samples = similarity_set_2d(a, 128)
        assert len(samples) == 128
        assert all(oracle_ok(s, a) for s in samples)
        phis = np.array([s.phi for s in samples])
        assert np.abs(phis - TWO_PI * np.arange(128) / 128).max() <= 1e-15


def test_similarity_set_ratio_matches_the_sample_norms():
    a = [2.0, -1.0]
    na = float(np.linalg.norm(a))
    for s in similarity_set_2d(a, 16):
        assert s.ggr == pytest.approx(np.linalg.norm(s.vector) / na, abs=1e-12)


def test_similarity_set_rejects_degenerate_input():
    with pytest.raises(ValueError):
        similarity_set_2d([0.0, 0.0], 8)
    with pytest.raises(ValueError):
        similarity_set_2d([1.0, 0.0], 0)
    with pytest.raises(ValueError):
        similar_vector_2d([1.0, 0.0], math.nan)


@settings(derandomize=True, max_examples=60, deadline=None)
@given(
    x=st.floats(-50.0, 50.0),
    y=st.floats(-50.0, 50.0),
    phi=st.floats(0.0, TWO_PI),
)
def test_any_similar_vector_forms_a_golden_pair(x, y, phi):
    a = np.array([x, y])
    if np.linalg.norm(a) < 1e-6:
        a = np.array([1.0, 1.0])
    s = similar_vector_2d(a, phi)
    assert oracle_ok(s, a)


def test_sum_sets_verify_the_projection_identity():
    for a1, a2 in (([1.0, 2.0], [-1.0, 3.0]), ([2.0, -3.0], [1.0, 5.0])):
        result = sum_similarity_sets_2d(a1, a2, 128)
        assert result.max_sum_residual <= 1e-12
        total = np.add(a1, a2)
        assert all(oracle_ok(s, total) for s in result.samples)


def test_sum_sets_depend_only_on_the_vector_sum():
    reference = similarity_set_2d([1.0, 1.0], 128)
    for a1, a2 in (([0, 1], [1, 0]), ([1, 2], [0, -1]), ([2, 3], [-1, -2])):
        result = sum_similarity_sets_2d(a1, a2, 128)
        for s, r in zip(result.samples, reference):
            assert np.abs(s.vector - r.vector).max() <= 1e-12


def test_sum_sets_reject_cancelling_and_zero_inputs():
    with pytest.raises(DegenerateSumError):
        sum_similarity_sets_2d([1.0, 2.0], [-1.0, -2.0], 8)
    with pytest.raises(ValueError):
        sum_similarity_sets_2d([0.0, 0.0], [1.0, 0.0], 8)


def test_similar_vector_3d_respects_the_polar_range():
    a = [0.0, 0.0, 1.0]
    s = similar_vector_3d(a, 2 * math.pi / 3, 0.0)
    assert np.linalg.norm(s.vector) == pytest.approx(1.0, abs=1e-9)
    assert oracle_ok(s, a)
    with pytest.raises(ValueError):
        similar_vector_3d(a, -0.1, 0.0)
    with pytest.raises(ValueError):
        similar_vector_3d(a, math.pi + 0.1, 0.0)


def test_similarity_set_3d_grid_shape_and_oracle():
    a = [1.0, 0.0, 0.0]
    samples = similarity_set_3d(a, 33, 64)
    assert len(samples) == 33 * 64
    assert all(oracle_ok(s, a) for s in samples)
    # polar-major order: the first azimuth block sits at the north pole
    assert samples[0].phi == 0.0
    assert samples[63].phi == 0.0
    assert samples[64].phi == pytest.approx(math.pi / 32, abs=1e-12)


def test_similarity_set_3d_pole_samples_align_with_the_axis():
    samples = similarity_set_3d([0.0, 0.0, 1.0], 3, 4)
    for s in samples[:4]:
        assert s.vector[2] == pytest.approx(PHI, abs=1e-9)
        assert abs(s.vector[0]) <= 1e-12
        assert abs(s.vector[1]) <= 1e-12


def test_similarity_set_3d_rejects_degenerate_input():
    with pytest.raises(ValueError):
        similarity_set_3d([0.0, 0.0, 0.0], 3, 4)
    with pytest.raises(ValueError):
        similarity_set_3d([0.0, 0.0, 1.0], 0, 4)
