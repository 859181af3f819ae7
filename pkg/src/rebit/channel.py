"""Affine representation of candidate rebit channels.

A candidate channel is the pair (A, w) acting on Bloch vectors as
v -> w + A v; trace preservation is built into the representation.  Complete
positivity is *not* assumed here: deciding it is the job of :mod:`rebit.cp`,
and this module happily represents non-admissible maps so the whole parameter
space can be explored.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .bloch import SIGMA_1, SIGMA_2, bloch_from_density

UNITAL_TOL = 1e-12
ORTHO_TOL = 1e-12
POSITIVITY_TOL = 1e-9


class NotPositiveError(ValueError):
    """The channel pushed a state outside the Bloch disk."""

    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(f"output Bloch vector has norm {norm!r} > 1")


def _frozen_array(a, shape) -> np.ndarray:
    a = np.array(a, dtype=float)
    if a.shape != shape:
        raise ValueError(f"expected shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("entries must be finite")
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class AffineChannel:
    """Candidate channel (A, w) on Bloch vectors: v -> w + A v."""

    a: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", _frozen_array(self.a, (2, 2)))
        object.__setattr__(self, "w", _frozen_array(self.w, (2,)))

    @classmethod
    def identity(cls) -> "AffineChannel":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def diagonal(cls, lam1: float, lam2: float, w1: float = 0.0, w2: float = 0.0) -> "AffineChannel":
        return cls(np.diag([lam1, lam2]), np.array([w1, w2]))

    def to_json_dict(self, name: str | None = None) -> dict:
        doc = {"A": [[self.a[0, 0], self.a[0, 1]], [self.a[1, 0], self.a[1, 1]]],
               "w": [self.w[0], self.w[1]]}
        if name is not None:
            doc["name"] = name
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "AffineChannel":
        """Parse the channel wire format {"A": 2x2, "w": 2-vector, "name"?}."""
        if not isinstance(doc, dict):
            raise ValueError("channel document must be a JSON object")
        unknown = set(doc) - {"A", "w", "name"}
        if unknown:
            raise ValueError(f"unknown channel document fields: {sorted(unknown)}")
        if "A" not in doc or "w" not in doc:
            raise ValueError("channel document requires fields 'A' and 'w'")
        if "name" in doc and not isinstance(doc["name"], str):
            raise ValueError("channel document field 'name' must be a string")
        try:
            a = np.array(doc["A"], dtype=float)
            w = np.array(doc["w"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"channel document entries are not numeric: {exc}") from None
        return cls(a, w)


@dataclass(frozen=True)
class OrthogonalChannel:
    """Conjugation rho -> Omega rho Omega^t together with its Bloch map."""

    omega: np.ndarray
    bloch_map: np.ndarray = field(compare=False)

    def conjugate(self, rho: np.ndarray) -> np.ndarray:
        return self.omega @ np.asarray(rho, dtype=float) @ self.omega.T


def apply(channel: AffineChannel, rho: np.ndarray) -> np.ndarray:
    """Apply the channel to a state; output trace is 1 by construction.

    Raises :class:`NotPositiveError` when the image Bloch vector leaves the
    disk by more than ``POSITIVITY_TOL``, which signals the map is not even
    positive on this state.
    """
    v = channel.w + channel.a @ bloch_from_density(rho)
    norm = math.hypot(v[0], v[1])
    if norm > 1.0 + POSITIVITY_TOL:
        raise NotPositiveError(norm)
    return 0.5 * np.array([[1.0 + v[0], v[1]], [v[1], 1.0 - v[0]]])


def compose(first: AffineChannel, second: AffineChannel) -> AffineChannel:
    """Channel running ``second`` first: v -> w1 + A1 (w2 + A2 v)."""
    return AffineChannel(first.a @ second.a, first.w + first.a @ second.w)


def is_unital(channel: AffineChannel) -> bool:
    """True when the maximally mixed state is fixed (zero shift)."""
    return math.hypot(channel.w[0], channel.w[1]) <= UNITAL_TOL


def orthogonal_channel(omega: np.ndarray) -> OrthogonalChannel:
    """Build the conjugation channel for Omega in O(2).

    The induced Bloch map is computed entrywise from the trace formula
    R_jk = Tr(sigma_j Omega sigma_k Omega^t) / 2.  Rotations by alpha induce
    the Bloch rotation by 2*alpha; reflections induce Bloch reflections, so
    det(R) always equals det(Omega).
    """
    omega = np.asarray(omega, dtype=float)
    if omega.shape != (2, 2) or not np.all(np.isfinite(omega)):
        raise ValueError("Omega must be a finite 2x2 matrix")
    if np.abs(omega.T @ omega - np.eye(2)).max() > ORTHO_TOL:
        raise ValueError("Omega is not orthogonal")
    sig = (SIGMA_1, SIGMA_2)
    r = np.empty((2, 2))
    for j in range(2):
        for k in range(2):
            r[j, k] = 0.5 * np.trace(sig[j] @ omega @ sig[k] @ omega.T)
    return OrthogonalChannel(omega=omega, bloch_map=r)


def as_affine(channel: OrthogonalChannel) -> AffineChannel:
    """The orthogonal channel as an affine pair (R_Omega, 0); unital."""
    return AffineChannel(channel.bloch_map, np.zeros(2))


def rotation_channel(alpha: float) -> OrthogonalChannel:
    """Orthogonal channel of the rotation operator by ``alpha``.

    Its Bloch map is the rotation by ``2 * alpha``.
    """
    c, s = math.cos(alpha), math.sin(alpha)
    return orthogonal_channel(np.array([[c, -s], [s, c]]))
