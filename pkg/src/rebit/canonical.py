"""Rotation-diagonal-rotation factorization of affine channels.

Every linear part A factors as rot(theta1) @ diag(lam1, lam2) @ rot(theta2)
with both outer factors proper rotations.  The convention fixed here:
lam1 = sigma1 >= 0 carries the larger singular value, lam2 = sign(det A) *
sigma2 carries the only possible negative sign, and a pair of sign flips is
absorbed into theta1 as a rotation by pi.  The shift transforms into the
diagonal frame as s = rot(theta1)^t @ w.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import AffineChannel
from .linalg import TAU, Rotation2, rotation_matrix, svd2


@dataclass(frozen=True)
class CanonicalForm:
    """Factorization data (theta1, theta2, lam1, lam2, shift-in-diagonal-frame)."""

    theta1: float
    theta2: float
    lam1: float
    lam2: float
    shift: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "theta1", float(self.theta1) % TAU)
        object.__setattr__(self, "theta2", float(self.theta2) % TAU)
        shift = np.array(self.shift, dtype=float)
        if shift.shape != (2,) or not np.all(np.isfinite(shift)):
            raise ValueError("shift must be a finite 2-vector")
        shift.flags.writeable = False
        object.__setattr__(self, "shift", shift)
        if self.lam1 < 0.0:
            raise ValueError(f"lam1 must be nonnegative, got {self.lam1!r}")
        if abs(self.lam2) > self.lam1 + 1e-12:
            raise ValueError("requires lam1 >= |lam2|")

    def to_json_dict(self) -> dict:
        return {
            "theta1": self.theta1,
            "theta2": self.theta2,
            "lambda": [self.lam1, self.lam2],
            "shift": [self.shift[0], self.shift[1]],
        }


def canonical_decompose(a: np.ndarray) -> tuple[Rotation2, tuple[float, float], Rotation2]:
    """Factor a 2x2 matrix as rot(theta1) @ diag(lam1, lam2) @ rot(theta2).

    Built on :func:`rebit.linalg.svd2`; the left SVD factor's reflection, if
    any, is folded into the sign of lam2 so both returned factors are proper
    rotations.  The zero matrix gives identity rotations and lam = (0, 0).
    """
    o1, s1, s2, o2 = svd2(a)
    if o1[0, 0] * o1[1, 1] - o1[0, 1] * o1[1, 0] < 0.0:
        # o1 = r1 @ diag(1, -1); push the reflection into the second scale
        r1 = np.column_stack([o1[:, 0], -o1[:, 1]])
        lam2 = -s2
    else:
        r1 = o1
        lam2 = s2
    theta1 = math.atan2(r1[1, 0], r1[0, 0])
    theta2 = math.atan2(o2[0, 1], o2[0, 0])  # angle of o2.T
    return Rotation2(theta1), (s1, lam2), Rotation2(theta2)


def decompose_channel(channel: AffineChannel) -> CanonicalForm:
    """Canonical form of an affine channel, shift mapped into the diagonal frame."""
    r1, (lam1, lam2), r2 = canonical_decompose(channel.a)
    s = r1.matrix.T @ channel.w
    return CanonicalForm(theta1=r1.angle, theta2=r2.angle, lam1=lam1, lam2=lam2, shift=s)


def reconstruct(form: CanonicalForm) -> AffineChannel:
    """Rebuild the affine channel described by a canonical form."""
    r1 = rotation_matrix(form.theta1)
    a = r1 @ np.diag([form.lam1, form.lam2]) @ rotation_matrix(form.theta2)
    return AffineChannel(a, r1 @ form.shift)


def reconstruction_residual(channel: AffineChannel, form: CanonicalForm) -> float:
    """Max-abs mismatch between the channel and its rebuilt canonical form."""
    rebuilt = reconstruct(form)
    return float(
        max(np.abs(rebuilt.a - channel.a).max(), np.abs(rebuilt.w - channel.w).max())
    )
