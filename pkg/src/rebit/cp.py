"""Chi-matrix construction and the complete-positivity decision procedure.

For the diagonal map with scale coefficients (lam1, lam2) and shift
(w1, w2), the chi matrix in the orthonormal basis (sigma_0, sigma_1,
sigma_2)/sqrt(2) is

    chi = 1/2 * [[1+lam1+lam2, w1,           w2          ],
                 [w1,          1+lam1-lam2,  0           ],
                 [w2,          0,            1-lam1+lam2 ]]

and the map is completely positive iff chi is positive semi-definite.  The
closed-form test used everywhere: the three q-values (the unital eigenvalues)
must be nonnegative and the determinant condition must hold in multiplied-out
form

    w1^2 (1-lam1+lam2) + w2^2 (1+lam1-lam2) <= 8 q0 q1 q2,

which stays meaningful when any factor vanishes, unlike the divided ellipse
form.  For diagonal channels the verdict is computed at the literal diagonal
coefficients, which is the frame the rank taxonomy lives in; everything else
is routed through the canonical factorization first.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import SIGMA_0, SIGMA_1, SIGMA_2
from .canonical import decompose_channel
from .channel import AffineChannel
from .linalg import Sym3, eig_sym3

CP_TOL = 1e-9  # one-sided boundary slack: the admissible region is closed
DIAGONAL_TOL = 1e-12


def chi_matrix(lam1: float, lam2: float, w1: float = 0.0, w2: float = 0.0) -> Sym3:
    """Chi matrix of the diagonal map, assembled entrywise."""
    return Sym3(
        d00=0.5 * (1.0 + lam1 + lam2),
        d01=0.5 * w1,
        d02=0.5 * w2,
        d11=0.5 * (1.0 + lam1 - lam2),
        d12=0.0,
        d22=0.5 * (1.0 - lam1 + lam2),
    )


def chi_general(channel: AffineChannel) -> Sym3:
    """Chi matrix computed from the defining trace sums.

    chi_rs = 1/4 * sum_k Tr[sigma_s sigma_k sigma_r C(sigma_k)] with
    C(sigma_0) = I + w1 sigma_1 + w2 sigma_2 and C(sigma_j) = lam_j sigma_j.
    Only diagonal channels are accepted; decompose first otherwise.  Agrees
    with :func:`chi_matrix` to machine precision and serves as its
    independent derivation route in the tests.
    """
    a = channel.a
    if abs(a[0, 1]) > DIAGONAL_TOL or abs(a[1, 0]) > DIAGONAL_TOL:
        raise ValueError("chi_general requires a diagonal channel; decompose first")
    sig = (SIGMA_0, SIGMA_1, SIGMA_2)
    images = (
        SIGMA_0 + channel.w[0] * SIGMA_1 + channel.w[1] * SIGMA_2,
        a[0, 0] * SIGMA_1,
        a[1, 1] * SIGMA_2,
    )
    chi = np.zeros((3, 3))
    for r in range(3):
        for s in range(3):
            chi[r, s] = 0.25 * math.fsum(
                np.trace(sig[s] @ sig[k] @ sig[r] @ images[k]) for k in range(3)
            )
    return Sym3.from_matrix(chi)


def q_values(lam1: float, lam2: float) -> tuple[float, float, float]:
    """Diagonal chi entries (q0, q1, q2); the unital eigenvalues."""
    return (
        0.5 * (1.0 + lam1 + lam2),
        0.5 * (1.0 + lam1 - lam2),
        0.5 * (1.0 - lam1 + lam2),
    )


def charpoly_coeffs(lam1: float, lam2: float, w1: float = 0.0, w2: float = 0.0) -> tuple[float, float, float]:
    """Sign-condition coefficients (a, b, det_chi) of the chi matrix.

    a/2 is the trace and det_chi the determinant of chi.  b is the disk-bound
    coefficient: b >= 0 exactly when ||w||^2 <= 3 + 2(lam1+lam2) -
    (lam1+lam2)^2, and the determinant condition makes it redundant.  All
    three being nonnegative certifies, through the sign pattern of the
    characteristic cubic, that no eigenvalue of chi is negative.
    """
    ssum = lam1 + lam2
    a = 3.0 + ssum
    b = 3.0 - (w1 * w1 + w2 * w2) + 2.0 * ssum - ssum * ssum
    det_chi = 0.125 * (
        (1.0 - lam1 + lam2) * ((1.0 + lam1 + lam2) * (1.0 + lam1 - lam2) - w1 * w1)
        - w2 * w2 * (1.0 + lam1 - lam2)
    )
    return a, b, det_chi


def shift_region_contains(
    lam1: float, lam2: float, w1: float, w2: float, tol: float = CP_TOL
) -> tuple[bool, float]:
    """Determinant condition in multiplied-out form, with its slack.

    margin = 8 q0 q1 q2 - w1^2 (1-lam1+lam2) - w2^2 (1+lam1-lam2); the shift
    is admissible when the margin is nonnegative (within ``tol``).  Callers
    must already have checked q0, q1, q2 >= 0.
    """
    q0, q1, q2 = q_values(lam1, lam2)
    margin = 8.0 * q0 * q1 * q2 - w1 * w1 * (2.0 * q2) - w2 * w2 * (2.0 * q1)
    return margin >= -tol, margin


@dataclass(frozen=True)
class CpReport:
    """Structured complete-positivity verdict for one channel."""

    q: tuple[float, float, float]
    a: float
    b: float
    det_chi: float
    margin: float
    is_cp: bool
    kraus_rank: int

    def to_json_dict(self) -> dict:
        return {
            "q": list(self.q),
            "a": self.a,
            "b": self.b,
            "det_chi": self.det_chi,
            "margin": self.margin,
            "is_cp": self.is_cp,
            "kraus_rank": self.kraus_rank,
        }


def diagonal_frame(channel: AffineChannel) -> tuple[float, float, float, float]:
    """Scale and shift coefficients of the channel's diagonal representation.

    Diagonal channels keep their literal coefficients (signs and ordering
    included), because the rank taxonomy distinguishes e.g. diag(-1, 0) from
    diag(1, 0).  Anything else goes through the canonical factorization,
    whose data is invariant under orthogonal dressing.
    """
    a = channel.a
    if abs(a[0, 1]) <= DIAGONAL_TOL and abs(a[1, 0]) <= DIAGONAL_TOL:
        return float(a[0, 0]), float(a[1, 1]), float(channel.w[0]), float(channel.w[1])
    form = decompose_channel(channel)
    return form.lam1, form.lam2, float(form.shift[0]), float(form.shift[1])


def is_cp(channel: AffineChannel, tol: float = CP_TOL) -> CpReport:
    """Decide complete positivity and assemble the full report."""
    lam1, lam2, w1, w2 = diagonal_frame(channel)
    q = q_values(lam1, lam2)
    _, margin = shift_region_contains(lam1, lam2, w1, w2, tol)
    a, b, det_chi = charpoly_coeffs(lam1, lam2, w1, w2)
    verdict = min(q) >= -tol and margin >= -tol
    eigs = eig_sym3(chi_matrix(lam1, lam2, w1, w2))
    rank = sum(1 for e in eigs if e > tol)
    return CpReport(q=q, a=a, b=b, det_chi=det_chi, margin=margin, is_cp=verdict, kraus_rank=rank)


def admissible_pentagon() -> list[tuple[float, float]]:
    """Vertices of the unital admissibility region, counterclockwise."""
    return [(-1.0, 0.0), (0.0, -1.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
