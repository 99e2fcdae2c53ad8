"""Brute-force cross-validation of the 2x2 trichotomy and randomized
falsification of impossibility verdicts.

The 2x2 similarity class of a rotation-like cell is exactly two-dimensional
in the parameters (x, y), so a grid scan over them is exhaustive up to
resolution.  The grid always contains the symmetry anchors x = 0 and
|y| = 1 (when the ranges cover them): those are the only points where the
boundary equality ``|alpha| = |beta|`` can be met, so including them makes
the scan decisive on the boundary as well.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import TwoByTwoParams
from .core import Axis, as_matrix, is_diag_dominant

#: Transforms with 2-norm condition number above this are rejected.
COND_LIMIT = 1e12
_BATCH = 4096


@dataclass(frozen=True)
class GridSearchResult:
    found: bool
    witness: TwoByTwoParams | None
    best_margin: float
    samples: int


@dataclass(frozen=True)
class RandomSearchResult:
    found: bool
    witness: np.ndarray | None
    best_margin: float
    samples: int


def _axis_values(lo, hi, steps, anchor):
    vals = np.linspace(lo, hi, steps)
    if lo < anchor < hi and anchor not in vals:
        vals = np.sort(np.append(vals, anchor))
    return vals


def _log_magnitudes(lo, hi, steps, anchor=1.0):
    vals = np.logspace(np.log10(lo), np.log10(hi), steps)
    if lo < anchor < hi and anchor not in vals:
        vals = np.sort(np.append(vals, anchor))
    return vals


def grid_search_2x2(alpha: float, beta: float,
                    x_range: tuple[float, float] = (-10.0, 10.0),
                    y_abs_range: tuple[float, float] = (0.01, 10.0),
                    steps: int = 400, strict: bool = False) -> GridSearchResult:
    """Scan (x, y) for a dominance witness of the pair ``(alpha, beta)``.

    ``y_abs_range`` is the magnitude interval |y| in (0, inf); both signs are
    scanned, log-spaced, ``steps`` values in total.  The witness is the first
    feasible point in scan order (x outer, y inner); ``best_margin`` is the
    largest min-row margin seen over the whole grid (negative when every
    point violates dominance).
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    y_lo, y_hi = y_abs_range
    if not 0.0 < y_lo <= y_hi:
        raise ValueError("y magnitude range must be positive")

    xs = _axis_values(float(x_range[0]), float(x_range[1]), steps, anchor=0.0)
    mags = _log_magnitudes(float(y_lo), float(y_hi), max(1, steps // 2))
    ys = np.concatenate([-mags, mags])

    r = np.hypot(beta, xs)
    m1 = np.abs(alpha - xs)[:, None] - r[:, None] / np.abs(ys)[None, :]
    m2 = np.abs(alpha + xs)[:, None] - r[:, None] * np.abs(ys)[None, :]
    margins = np.minimum(m1, m2)
    feasible = margins > 0.0 if strict else margins >= 0.0

    best = float(margins.max())
    samples = int(margins.size)
    if not feasible.any():
        return GridSearchResult(found=False, witness=None,
                                best_margin=best, samples=samples)
    flat = int(np.argmax(feasible.ravel()))
    i, j = np.unravel_index(flat, margins.shape)
    witness = TwoByTwoParams(alpha=float(alpha), beta=float(beta),
                             x=float(xs[i]), y=float(ys[j]))
    return GridSearchResult(found=True, witness=witness,
                            best_margin=best, samples=samples)


def _batch_margins(b_stack):
    """Worst row / column margin per matrix in a stack, and the per-matrix
    score max(worst_row, worst_col)."""
    mag = np.abs(b_stack)
    diag = np.diagonal(mag, axis1=1, axis2=2)
    row = (diag - (mag.sum(axis=2) - diag)).min(axis=1)
    col = (diag - (mag.sum(axis=1) - diag)).min(axis=1)
    return np.maximum(row, col)


def random_similarity_search(a, trials: int = 1000, seed: int = 0,
                             strict: bool = False) -> RandomSearchResult:
    """Try ``trials`` random well-conditioned transforms on ``a``.

    The identity is always the first candidate; the rest have standard
    normal entries, rejected (not counted) when the condition number
    exceeds ``COND_LIMIT``.  A candidate qualifies when ``P A P^{-1}`` is
    diagonally dominant on either axis.  Results are deterministic given
    the seed.  Failure to find a witness is evidence, not proof.
    """
    a = as_matrix(a)
    if trials < 1:
        raise ValueError("trials must be positive")
    n = a.shape[0]
    rng = np.random.default_rng(seed)

    examined = 0
    best = -np.inf
    pending = [np.eye(n)[None, :, :]]
    while examined < trials:
        if not pending:
            batch = rng.standard_normal((_BATCH, n, n))
            conds = np.linalg.cond(batch)
            batch = batch[np.isfinite(conds) & (conds <= COND_LIMIT)]
            if batch.shape[0] == 0:
                continue
            pending.append(batch)
        batch = pending.pop()[: trials - examined]
        transformed = batch @ a @ np.linalg.inv(batch)
        scores = _batch_margins(transformed)
        qualifying = np.flatnonzero(scores > 0.0 if strict else scores >= 0.0)
        for idx in qualifying:
            p = batch[idx]
            b = p @ a @ np.linalg.inv(p)
            ok_row = is_diag_dominant(b, Axis.ROW, strict=strict, tol=0.0).satisfied
            ok_col = is_diag_dominant(b, Axis.COLUMN, strict=strict, tol=0.0).satisfied
            if ok_row or ok_col:
                best = max(best, float(scores[: idx + 1].max()))
                return RandomSearchResult(found=True, witness=p.copy(),
                                          best_margin=best,
                                          samples=examined + int(idx) + 1)
        best = max(best, float(scores.max())) if scores.size else best
        examined += batch.shape[0]
    return RandomSearchResult(found=False, witness=None,
                              best_margin=float(best), samples=examined)
