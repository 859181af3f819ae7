import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rebit.canonical import (
    CanonicalForm,
    canonical_decompose,
    decompose_channel,
    reconstruct,
    reconstruction_residual,
)
from rebit.channel import AffineChannel, as_affine, compose, orthogonal_channel
from rebit.cp import is_cp
from rebit.linalg import rotation_matrix, svd2


def test_already_diagonal_is_fixed_point():
    r1, (lam1, lam2), r2 = canonical_decompose(np.diag([0.5, 0.3]))
    assert r1.angle == 0.0 and r2.angle == 0.0
    assert (lam1, lam2) == (0.5, 0.3)


def test_reflection_absorbed_as_negative_scale():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    r1, (lam1, lam2), r2 = canonical_decompose(a)
    assert r1.angle == pytest.approx(math.pi / 2)
    assert (lam1, lam2) == (1.0, -1.0)
    assert r2.angle == 0.0
    rebuilt = r1.matrix @ np.diag([lam1, lam2]) @ r2.matrix
    assert np.abs(rebuilt - a).max() < 1e-12


def test_left_rotation_recovered():
    a = rotation_matrix(math.pi / 4) @ np.diag([0.8, 0.2])
    r1, (lam1, lam2), r2 = canonical_decompose(a)
    assert r1.angle == pytest.approx(math.pi / 4)
    assert (lam1, lam2) == pytest.approx((0.8, 0.2))
    rebuilt = r1.matrix @ np.diag([lam1, lam2]) @ r2.matrix
    assert np.abs(rebuilt - a).max() <= 1e-10


def test_zero_matrix_canonical():
    r1, (lam1, lam2), r2 = canonical_decompose(np.zeros((2, 2)))
    assert (lam1, lam2) == (0.0, 0.0)
    assert r1.angle == 0.0 and r2.angle == 0.0


def test_decompose_identity_channel():
    form = decompose_channel(AffineChannel.identity())
    assert (form.theta1, form.theta2) == (0.0, 0.0)
    assert (form.lam1, form.lam2) == (1.0, 1.0)
    assert np.abs(form.shift).max() == 0.0


def test_decompose_diagonal_keeps_shift():
    form = decompose_channel(AffineChannel(np.diag([0.5, 0.3]), np.array([0.1, 0.2])))
    assert (form.lam1, form.lam2) == (0.5, 0.3)
    assert np.allclose(form.shift, [0.1, 0.2])
    assert form.theta1 == 0.0 and form.theta2 == 0.0


def test_decompose_rotated_shift_moves_to_diagonal_frame():
    a = rotation_matrix(math.pi / 2) @ np.diag([0.6, 0.4])
    form = decompose_channel(AffineChannel(a, np.array([0.2, 0.0])))
    assert form.theta1 == pytest.approx(math.pi / 2)
    assert (form.lam1, form.lam2) == pytest.approx((0.6, 0.4))
    # rot(-pi/2) @ (0.2, 0) = (0, -0.2)
    assert np.allclose(form.shift, [0.0, -0.2], atol=1e-15)


def test_reconstruct_identity_form():
    form = CanonicalForm(theta1=0.0, theta2=0.0, lam1=1.0, lam2=1.0, shift=np.zeros(2))
    channel = reconstruct(form)
    assert np.abs(channel.a - np.eye(2)).max() == 0.0
    assert np.abs(channel.w).max() == 0.0


def test_reconstruct_reflection_form():
    form = CanonicalForm(theta1=math.pi / 2, theta2=0.0, lam1=1.0, lam2=-1.0, shift=np.zeros(2))
    channel = reconstruct(form)
    assert np.abs(channel.a - np.array([[0.0, 1.0], [1.0, 0.0]])).max() < 1e-12


def test_canonical_form_validates_convention():
    with pytest.raises(ValueError):
        CanonicalForm(theta1=0.0, theta2=0.0, lam1=-0.5, lam2=0.0, shift=np.zeros(2))
    with pytest.raises(ValueError):
        CanonicalForm(theta1=0.0, theta2=0.0, lam1=0.3, lam2=0.8, shift=np.zeros(2))


def test_roundtrip_random_channels():
    rng = np.random.default_rng(77)
    for _ in range(10_000):
        channel = AffineChannel(rng.uniform(-2.0, 2.0, (2, 2)), rng.uniform(-2.0, 2.0, 2))
        form = decompose_channel(channel)
        assert form.lam1 >= abs(form.lam2) >= 0.0
        assert reconstruction_residual(channel, form) <= 1e-10


def test_determinant_and_singular_values_preserved():
    rng = np.random.default_rng(78)
    for _ in range(2000):
        a = rng.uniform(-2.0, 2.0, (2, 2))
        form = decompose_channel(AffineChannel(a, np.zeros(2)))
        det_a = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        assert abs(det_a - form.lam1 * form.lam2) <= 1e-10
        _, s1, s2, _ = svd2(a)
        assert abs(form.lam1 - s1) <= 1e-10
        assert abs(abs(form.lam2) - s2) <= 1e-10


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(-2.0, 2.0), min_size=6, max_size=6))
def test_roundtrip_hypothesis(entries):
    channel = AffineChannel(np.array(entries[:4]).reshape(2, 2), np.array(entries[4:]))
    assert reconstruction_residual(channel, decompose_channel(channel)) <= 1e-10


def test_factorization_as_composition_of_channels():
    rng = np.random.default_rng(79)
    for _ in range(200):
        channel = AffineChannel(rng.uniform(-1.0, 1.0, (2, 2)), rng.uniform(-0.3, 0.3, 2))
        form = decompose_channel(channel)
        # dressing rotations act on Bloch vectors through half-angle operators
        left = as_affine(orthogonal_channel(rotation_matrix(form.theta1 / 2.0)))
        right = as_affine(orthogonal_channel(rotation_matrix(form.theta2 / 2.0)))
        middle = AffineChannel(np.diag([form.lam1, form.lam2]), form.shift)
        rebuilt = compose(left, compose(middle, right))
        assert np.abs(rebuilt.a - channel.a).max() <= 1e-12
        assert np.abs(rebuilt.w - channel.w).max() <= 1e-12


def test_cp_verdict_invariant_under_factorization():
    rng = np.random.default_rng(80)
    for _ in range(500):
        channel = AffineChannel(rng.uniform(-1.0, 1.0, (2, 2)), rng.uniform(-0.5, 0.5, 2))
        form = decompose_channel(channel)
        diagonal_part = AffineChannel(np.diag([form.lam1, form.lam2]), form.shift)
        assert is_cp(channel).is_cp == is_cp(diagonal_part).is_cp
