"""Dense square matrices: dominance predicates, comparison matrix, Gershgorin discs.

Matrices are plain ``numpy.ndarray`` values.  Real matrices are the inputs of
every public decision routine; complex arrays are accepted by the predicates
so that certificates produced by the complex construction path can be checked
with the same code (all comparisons go through magnitudes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import SingularTransform

#: Relative singular-value gap below which a transform counts as singular.
SINGULAR_SV_RTOL = 1e-12


class Axis(enum.Enum):
    ROW = "Row"
    COLUMN = "Column"


def as_matrix(values) -> np.ndarray:
    """Validate ``values`` as a dense square real matrix and return float64.

    Rejects complex entries, non-square shapes, empty matrices and
    non-finite values.
    """
    arr = np.asarray(values)
    if np.iscomplexobj(arr):
        raise ValueError("matrix entries must be real")
    arr = arr.astype(float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"matrix must be square, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("matrix must have dimension at least 1")
    if not np.isfinite(arr).all():
        raise ValueError("matrix entries must be finite")
    return arr


def _square(values) -> np.ndarray:
    """Like :func:`as_matrix` but keeps complex dtype when present."""
    arr = np.asarray(values)
    if not np.iscomplexobj(arr):
        arr = arr.astype(float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"matrix must be square and non-empty, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("matrix entries must be finite")
    return arr


def default_dominance_tol(a) -> float:
    """Scale-aware slack for dominance comparisons: 1e-12 * (1 + max |a_ij|)."""
    a = _square(a)
    return 1e-12 * (1.0 + float(np.abs(a).max()))


def _off_diagonal_sums(a: np.ndarray, axis: Axis) -> np.ndarray:
    off = np.abs(a)
    np.fill_diagonal(off, 0.0)
    return off.sum(axis=1) if axis is Axis.ROW else off.sum(axis=0)


@dataclass(frozen=True)
class GershgorinDisc:
    """One disc: centred at a diagonal entry, radius the off-diagonal abs sum."""

    center: float
    radius: float
    index: int
    axis: Axis

    def contains_origin(self) -> bool:
        return abs(self.center) <= self.radius


@dataclass(frozen=True)
class DominanceReport:
    """Per-index dominance margins plus the strict / non-strict verdicts.

    ``margins[i] = |a_ii| - sum_{j != i} |a_ij|`` (row axis; column sums for
    the column axis).  ``strict`` holds when every margin exceeds ``tol``,
    ``non_strict`` when every margin is at least ``-tol``.
    """

    axis: Axis
    margins: np.ndarray
    tol: float
    requested_strict: bool
    strict: bool
    non_strict: bool

    @property
    def satisfied(self) -> bool:
        """The verdict matching the strictness that was asked for."""
        return self.strict if self.requested_strict else self.non_strict


def is_diag_dominant(a, axis: Axis = Axis.ROW, strict: bool = False,
                     tol: float | None = None) -> DominanceReport:
    """Check diagonal dominance of ``a`` along ``axis``.

    Total function: always returns a report, never raises on content.
    Complex entries are compared by magnitude.
    """
    a = _square(a)
    if tol is None:
        tol = default_dominance_tol(a)
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    margins = np.abs(np.diag(a)) - _off_diagonal_sums(a, axis)
    return DominanceReport(
        axis=axis,
        margins=margins,
        tol=tol,
        requested_strict=strict,
        strict=bool(np.all(margins > tol)),
        non_strict=bool(np.all(margins >= -tol)),
    )


def comparison_matrix(a) -> np.ndarray:
    """Absolute values on the diagonal, negated absolute values elsewhere."""
    a = as_matrix(a)
    m = -np.abs(a)
    np.fill_diagonal(m, np.abs(np.diag(a)))
    return m


def gershgorin_discs(a, axis: Axis = Axis.ROW) -> list[GershgorinDisc]:
    """All discs of ``a`` along ``axis``; their union contains the spectrum."""
    a = as_matrix(a)
    radii = _off_diagonal_sums(a, axis)
    diag = np.diag(a)
    return [
        GershgorinDisc(center=float(diag[i]), radius=float(radii[i]), index=i, axis=axis)
        for i in range(a.shape[0])
    ]


def similarity_residual(a, p, b) -> float:
    """Relative failure of ``b = p a p^{-1}``: ||pa - bp||_F / (||a||_F + 1).

    Raises :class:`SingularTransform` when the smallest singular value of
    ``p`` falls below ``SINGULAR_SV_RTOL`` times the largest.
    """
    a = _square(a)
    p = _square(p)
    b = _square(b)
    if not (a.shape == p.shape == b.shape):
        raise ValueError("a, p, b must share one square shape")
    sv = np.linalg.svd(p, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] < SINGULAR_SV_RTOL * sv[0]:
        raise SingularTransform(
            f"transform is numerically singular (sv ratio {sv[-1]:.3e} / {sv[0]:.3e})"
        )
    return float(np.linalg.norm(p @ a - b @ p) / (np.linalg.norm(a) + 1.0))
