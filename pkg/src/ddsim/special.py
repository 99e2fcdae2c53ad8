"""Structure tests (Z, Metzler, M, H, Hurwitz) and positive diagonal scalings.

A Hurwitz Metzler matrix, and more generally a Hurwitz H-matrix, can be made
strictly row-dominant by a positive diagonal similarity.  The scaling vector
is constructed, not searched: ``d`` solves ``M_A d = 1`` where ``M_A`` is the
comparison matrix; a nonsingular M-matrix has an entrywise nonnegative
inverse, so ``d > 0`` and the rows of ``diag(d)^{-1} A diag(d)`` keep margins
``1 / d_i``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (Axis, DominanceReport, SINGULAR_SV_RTOL, as_matrix,
                   comparison_matrix, is_diag_dominant)
from .errors import NumericallySingular, PreconditionViolated

#: Default tolerance on eigenvalue real parts for Hurwitz / M-matrix tests.
HURWITZ_TOL = 1e-9


class DiagonalSign(enum.Enum):
    ALL_NEGATIVE = "AllNegative"
    MIXED = "Mixed"


@dataclass(frozen=True)
class ScalingCertificate:
    """Positive diagonal ``K`` with ``B = K A K^{-1}`` strictly row-dominant."""

    K: np.ndarray
    B: np.ndarray
    dominance: DominanceReport
    diagonal_sign: DiagonalSign


def _off_diagonal(a):
    mask = ~np.eye(a.shape[0], dtype=bool)
    return a[mask]


def is_z_matrix(a) -> bool:
    """All off-diagonal entries nonpositive (exact sign test)."""
    return bool(np.all(_off_diagonal(as_matrix(a)) <= 0.0))


def is_metzler(a) -> bool:
    """All off-diagonal entries nonnegative (exact sign test)."""
    return bool(np.all(_off_diagonal(as_matrix(a)) >= 0.0))


def is_hurwitz(a, tol: float = HURWITZ_TOL) -> bool:
    """All eigenvalue real parts below ``-tol``."""
    return bool(np.max(np.linalg.eigvals(as_matrix(a)).real) < -tol)


def is_m_matrix(a, tol: float = HURWITZ_TOL) -> bool:
    """Z-matrix whose eigenvalue real parts all exceed ``tol`` (nonsingular
    convention; singular M-matrices such as graph Laplacians test False)."""
    a = as_matrix(a)
    if not is_z_matrix(a):
        return False
    return bool(np.min(np.linalg.eigvals(a).real) > tol)


def is_h_matrix(a, tol: float = HURWITZ_TOL) -> bool:
    """Comparison matrix is an M-matrix."""
    return is_m_matrix(comparison_matrix(a), tol)


def _positive_scaling(a) -> ScalingCertificate:
    m = comparison_matrix(a)
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] < SINGULAR_SV_RTOL * sv[0]:
        raise NumericallySingular(
            f"comparison matrix is numerically singular "
            f"(sv ratio {sv[-1]:.3e} / {sv[0]:.3e})")
    d = np.linalg.solve(m, np.ones(a.shape[0]))
    if np.any(d <= 0.0):
        raise NumericallySingular(
            "scaling vector has nonpositive entries; the comparison matrix is "
            "not a usable M-matrix at working precision")
    # K = diag(d)^{-1}, rescaled so its largest entry is exactly 1
    k = d.min() / d
    b = a * (k[:, None] / k[None, :])
    np.fill_diagonal(b, np.diag(a))
    dominance = is_diag_dominant(b, Axis.ROW, strict=True, tol=0.0)
    if not dominance.strict:
        raise NumericallySingular(
            "scaled matrix misses strict dominance at working precision")
    sign = (DiagonalSign.ALL_NEGATIVE if np.all(np.diag(a) < 0.0)
            else DiagonalSign.MIXED)
    return ScalingCertificate(K=np.diag(k), B=b, dominance=dominance,
                              diagonal_sign=sign)


def metzler_hurwitz_scaling(a, tol: float = HURWITZ_TOL) -> ScalingCertificate:
    """Scaling certificate for a Metzler Hurwitz matrix.

    Raises :class:`PreconditionViolated` unless ``a`` is Metzler with all
    eigenvalue real parts below ``-tol``.
    """
    a = as_matrix(a)
    if not is_metzler(a):
        raise PreconditionViolated("matrix is not Metzler", offender=a)
    if not is_hurwitz(a, tol):
        raise PreconditionViolated("matrix is not Hurwitz", offender=a)
    return _positive_scaling(a)


def h_matrix_scaling(a, tol: float = HURWITZ_TOL) -> ScalingCertificate:
    """Scaling certificate for a Hurwitz H-matrix.

    Same scaling vector construction as the Metzler case, applied to the
    comparison matrix.  The diagonal sign is reported, not asserted: a
    Hurwitz H-matrix is expected to come out all-negative.
    """
    a = as_matrix(a)
    if not is_hurwitz(a, tol):
        raise PreconditionViolated("matrix is not Hurwitz", offender=a)
    if not is_h_matrix(a, tol):
        raise PreconditionViolated("matrix is not an H-matrix", offender=a)
    return _positive_scaling(a)
