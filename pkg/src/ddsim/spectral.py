"""Eigenstructure extraction and real Jordan normal form for small dense matrices.

Jordan structure is ill-posed in floating point; this module is deliberately
scoped to small dimensions (target n <= 12), uses conservative singular-value
thresholds, and fails honestly with :class:`IllConditionedJordan` instead of
returning a form it cannot certify.  Every returned form carries a verified
similarity residual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_matrix, similarity_residual, SINGULAR_SV_RTOL
from .errors import ClusterAmbiguity, IllConditionedJordan

#: Default relative eigenvalue clustering tolerance.
CLUSTER_TOL = 1e-7
#: Singular values below RANK_RTOL * sigma_max count as zero.
RANK_RTOL = 1e-8
#: Inter-cluster gaps within this factor of the tolerance are ambiguous.
AMBIGUITY_FACTOR = 2.0
#: Smallest acceptable angle (as a singular value) when picking chain tops.
_TOP_SELECT_TOL = 1e-6


def jordan_residual_tol(a) -> float:
    """Acceptance threshold for the Jordan similarity residual."""
    return 1e-6 * (1.0 + float(np.linalg.norm(np.asarray(a))))


@dataclass(frozen=True)
class RealEigenvalue:
    value: float
    alg_mult: int
    geo_mult: int


@dataclass(frozen=True)
class ComplexPair:
    """A conjugate pair alpha +/- beta*j with beta > 0; multiplicities count pairs."""

    alpha: float
    beta: float
    alg_mult: int
    geo_mult: int

    @property
    def modulus(self) -> float:
        return float(np.hypot(self.alpha, self.beta))


@dataclass(frozen=True)
class EigenStructure:
    real_eigs: tuple[RealEigenvalue, ...]
    complex_pairs: tuple[ComplexPair, ...]

    def multiplicity_total(self) -> int:
        return (sum(e.alg_mult for e in self.real_eigs)
                + 2 * sum(p.alg_mult for p in self.complex_pairs))


@dataclass(frozen=True)
class RealJordanBlock:
    """Upper Jordan block: ``eigenvalue`` on the diagonal, 1s above it."""

    eigenvalue: float
    size: int

    @property
    def dim(self) -> int:
        return self.size


@dataclass(frozen=True)
class ComplexJordanBlock:
    """Chain of 2x2 rotation-like cells coupled by identity cells above the diagonal.

    Occupies a ``2 * chain_length`` square region: each diagonal cell is
    ``[[alpha, beta], [-beta, alpha]]`` and consecutive cells are coupled by
    a 2x2 identity on the superdiagonal.
    """

    alpha: float
    beta: float
    chain_length: int

    @property
    def dim(self) -> int:
        return 2 * self.chain_length


@dataclass(frozen=True)
class RealJordanForm:
    """Block-diagonal real Jordan matrix ``J`` with ``J = P A P^{-1}``."""

    J: np.ndarray
    P: np.ndarray
    blocks: tuple
    residual: float


class _Cluster:
    """One eigenvalue cluster: representative value, members, spread."""

    def __init__(self, members):
        self.members = np.asarray(members)
        self.rep = complex(self.members.mean())
        self.radius = float(np.abs(self.members - self.rep).max()) if len(members) else 0.0
        self.alg_mult = len(members)


def _single_linkage_1d(values, tol):
    values = np.sort(np.asarray(values))
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            groups.append(values[start:i])
            start = i
    return groups


def _single_linkage_complex(values, tol):
    values = list(values)
    parent = list(range(len(values)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if abs(values[i] - values[j]) <= tol:
                parent[find(i)] = find(j)
    groups = {}
    for i, v in enumerate(values):
        groups.setdefault(find(i), []).append(v)
    # deterministic order: by (real, imag) of the group mean
    out = list(groups.values())
    out.sort(key=lambda g: (np.mean(g).real, np.mean(g).imag))
    return out


def _check_grouping_unambiguous(groups, tol, kind):
    """Raise ClusterAmbiguity when two groups nearly touch under the tolerance."""
    reps = [np.mean(g) for g in groups]
    for i in range(len(groups)):
        for j in range(i + 1, len(groups)):
            gap = min(abs(u - v) for u in groups[i] for v in groups[j])
            if gap <= AMBIGUITY_FACTOR * tol:
                merged = [g for k, g in enumerate(groups) if k not in (i, j)]
                merged.append(list(groups[i]) + list(groups[j]))
                raise ClusterAmbiguity(
                    f"{kind} eigenvalue clusters at {reps[i]:.6g} and {reps[j]:.6g} "
                    f"are separated by {gap:.3e}, within {AMBIGUITY_FACTOR}x the "
                    f"clustering tolerance {tol:.3e}",
                    groupings=[[list(g) for g in groups],
                               [list(g) for g in merged]],
                )


def _eig_clusters(a, cluster_tol):
    """Cluster the spectrum of ``a`` into real groups and conjugate-pair groups.

    Returns ``(real_clusters, pair_clusters, scale)`` where pair clusters hold
    only the upper-half-plane representatives.
    """
    a = as_matrix(a)
    scale = 1.0 + float(np.linalg.norm(a))
    tol = cluster_tol * scale
    w = np.linalg.eigvals(a)

    imag = w.imag
    near_real = np.abs(imag) <= tol
    if np.any((np.abs(imag) > tol) & (np.abs(imag) <= AMBIGUITY_FACTOR * tol)):
        raise ClusterAmbiguity(
            "an eigenvalue sits near the real axis within "
            f"{AMBIGUITY_FACTOR}x the clustering tolerance {tol:.3e}; "
            "its realness cannot be decided",
            groupings=[list(w[near_real].real), list(w.real)],
        )
    real_vals = w[near_real].real
    upper = w[imag > tol]

    real_groups = _single_linkage_1d(real_vals, tol)
    pair_groups = _single_linkage_complex(upper, tol)
    _check_grouping_unambiguous(real_groups, tol, "real")
    _check_grouping_unambiguous(pair_groups, tol, "complex")

    real_clusters = [_Cluster(g) for g in real_groups]
    real_clusters.sort(key=lambda c: c.rep.real)
    pair_clusters = [_Cluster(g) for g in pair_groups]
    pair_clusters.sort(key=lambda c: (c.rep.real, c.rep.imag))
    return real_clusters, pair_clusters, scale


def _nullspace(m, extra_tol=0.0):
    """Orthonormal nullspace basis of ``m`` with a combined sv threshold."""
    u, s, vh = np.linalg.svd(m)
    smax = s[0] if s.size else 0.0
    thresh = max(RANK_RTOL * smax, extra_tol)
    nullity = int(np.sum(s <= thresh))
    if nullity == 0:
        return np.zeros((m.shape[0], 0), dtype=m.dtype)
    return vh[len(s) - nullity:].conj().T


def _cluster_nullity(a, cluster, complex_field):
    lam = cluster.rep if complex_field else cluster.rep.real
    m = (a.astype(complex) if complex_field else a) - lam * np.eye(a.shape[0], dtype=complex if complex_field else float)
    # widen the rank threshold by the cluster spread: variation below the
    # clustering tolerance is "zero" by the clustering decision itself
    return _nullspace(m, extra_tol=2.0 * cluster.radius).shape[1]


def eigen_structure(a, cluster_tol: float = CLUSTER_TOL) -> EigenStructure:
    """Eigenvalues of ``a`` grouped into clusters with both multiplicities.

    Real eigenvalues and conjugate pairs are reported separately; geometric
    multiplicity is the numerical nullity of ``a - lambda I`` (over the
    complex field for pairs).  Raises :class:`ClusterAmbiguity` when the
    grouping is not numerically decidable at this tolerance.
    """
    a = as_matrix(a)
    real_clusters, pair_clusters, _ = _eig_clusters(a, cluster_tol)
    real_eigs = tuple(
        RealEigenvalue(value=float(c.rep.real), alg_mult=c.alg_mult,
                       geo_mult=_cluster_nullity(a, c, complex_field=False))
        for c in real_clusters
    )
    complex_pairs = tuple(
        ComplexPair(alpha=float(c.rep.real), beta=float(c.rep.imag),
                    alg_mult=c.alg_mult,
                    geo_mult=_cluster_nullity(a, c, complex_field=True))
        for c in pair_clusters
    )
    for e in real_eigs:
        if not (1 <= e.geo_mult <= e.alg_mult):
            raise IllConditionedJordan(
                f"inconsistent multiplicities for eigenvalue {e.value:.6g}: "
                f"geometric {e.geo_mult}, algebraic {e.alg_mult}")
    for p in complex_pairs:
        if not (1 <= p.geo_mult <= p.alg_mult):
            raise IllConditionedJordan(
                f"inconsistent multiplicities for pair {p.alpha:.6g}+/-{p.beta:.6g}j: "
                f"geometric {p.geo_mult}, algebraic {p.alg_mult}")
    return EigenStructure(real_eigs=real_eigs, complex_pairs=complex_pairs)


def _jordan_chains(a, cluster, complex_field):
    """Jordan chains for one eigenvalue cluster, longest first.

    Chains are built top-down from the nullspace filtration of the powers of
    ``m = a - lambda I``: the number of chains of length >= k is the nullity
    increment between consecutive powers, chain tops at height k are chosen
    independent of ker(m^{k-1}) and of taller chains via SVD, and the rest of
    each chain is generated exactly as v_{j-1} = m v_j.
    """
    n = a.shape[0]
    lam = cluster.rep if complex_field else cluster.rep.real
    dtype = complex if complex_field else float
    m = a.astype(dtype) - lam * np.eye(n, dtype=dtype)
    sig = float(np.linalg.norm(m, 2))
    alg = cluster.alg_mult

    bases = [np.zeros((n, 0), dtype=dtype)]
    nullities = [0]
    power = np.eye(n, dtype=dtype)
    for k in range(1, alg + 1):
        power = power @ m
        # cluster spread perturbs m^k by roughly k * radius * ||m||^{k-1}
        extra = 2.0 * k * cluster.radius * max(1.0, sig) ** (k - 1)
        nb = _nullspace(power, extra_tol=extra)
        bases.append(nb)
        nullities.append(nb.shape[1])
        if nullities[-1] > alg:
            raise IllConditionedJordan(
                f"nullity {nullities[-1]} of power {k} exceeds the cluster "
                f"multiplicity {alg} near eigenvalue {lam:.6g}")
        if nullities[-1] == nullities[-2]:
            break
        if nullities[-1] == alg:
            break
    if nullities[-1] != alg:
        raise IllConditionedJordan(
            f"nullspace filtration saturated at {nullities[-1]} < algebraic "
            f"multiplicity {alg} near eigenvalue {lam:.6g}")

    height = len(nullities) - 1
    widths = [nullities[k] - nullities[k - 1] for k in range(1, height + 1)]
    if any(widths[i + 1] > widths[i] for i in range(len(widths) - 1)):
        raise IllConditionedJordan(
            f"non-monotone nullity increments {widths} near eigenvalue {lam:.6g}")

    chains = []
    for k in range(height, 0, -1):
        taller = widths[k] if k < height else 0
        new_count = widths[k - 1] - taller
        if new_count == 0:
            continue
        blocked = [bases[k - 1]]
        blocked += [ch[k - 1][:, None] for ch in chains if len(ch) > k]
        s_mat = np.concatenate(blocked, axis=1) if blocked else np.zeros((n, 0), dtype=dtype)
        cand = bases[k]
        if s_mat.shape[1]:
            u, s, _ = np.linalg.svd(s_mat, full_matrices=False)
            rank = int(np.sum(s > RANK_RTOL * s[0])) if s.size else 0
            u = u[:, :rank]
            cand = cand - u @ (u.conj().T @ cand)
        uc, sc, _ = np.linalg.svd(cand, full_matrices=False)
        if sc.size < new_count or sc[new_count - 1] < _TOP_SELECT_TOL:
            raise IllConditionedJordan(
                f"cannot separate {new_count} chain top(s) at height {k} "
                f"near eigenvalue {lam:.6g}")
        for t in range(new_count):
            vs = [uc[:, t]]
            for _ in range(k - 1):
                vs.append(m @ vs[-1])
            vs.reverse()
            norm_max = max(float(np.linalg.norm(v)) for v in vs)
            chains.append([v / norm_max for v in vs])
    chains.sort(key=len, reverse=True)
    return chains


def _assemble_jordan(blocks, n) -> np.ndarray:
    j = np.zeros((n, n))
    pos = 0
    for b in blocks:
        if isinstance(b, RealJordanBlock):
            for i in range(b.size):
                j[pos + i, pos + i] = b.eigenvalue
                if i + 1 < b.size:
                    j[pos + i, pos + i + 1] = 1.0
            pos += b.size
        else:
            for c in range(b.chain_length):
                r = pos + 2 * c
                j[r, r] = b.alpha
                j[r, r + 1] = b.beta
                j[r + 1, r] = -b.beta
                j[r + 1, r + 1] = b.alpha
                if c + 1 < b.chain_length:
                    j[r, r + 2] = 1.0
                    j[r + 1, r + 3] = 1.0
            pos += 2 * b.chain_length
    return j


def real_jordan_form(a, cluster_tol: float = CLUSTER_TOL) -> RealJordanForm:
    """Real Jordan normal form ``J = P A P^{-1}`` with real ``P``.

    Real eigenvalues give upper Jordan blocks; conjugate pairs give chains of
    2x2 rotation-like cells coupled by identity cells above the diagonal.
    Block order is deterministic: real blocks by ascending eigenvalue, then
    pair blocks by (alpha, beta); longer chains first inside a cluster.

    Raises :class:`IllConditionedJordan` when the chain construction or the
    final residual check fails; callers may retry with another
    ``cluster_tol``.
    """
    a = as_matrix(a)
    n = a.shape[0]
    real_clusters, pair_clusters, _ = _eig_clusters(a, cluster_tol)

    blocks = []
    columns = []
    for cluster in real_clusters:
        lam = float(cluster.rep.real)
        for chain in _jordan_chains(a, cluster, complex_field=False):
            blocks.append(RealJordanBlock(eigenvalue=lam, size=len(chain)))
            columns.extend(chain)
    for cluster in pair_clusters:
        alpha, beta = float(cluster.rep.real), float(cluster.rep.imag)
        for chain in _jordan_chains(a, cluster, complex_field=True):
            blocks.append(ComplexJordanBlock(alpha=alpha, beta=beta,
                                             chain_length=len(chain)))
            for w in chain:
                columns.append(w.real.copy())
                columns.append(w.imag.copy())

    if sum(b.dim for b in blocks) != n:
        raise IllConditionedJordan(
            "block dimensions do not add up to the matrix dimension")
    q = np.column_stack(columns)
    sv = np.linalg.svd(q, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] < SINGULAR_SV_RTOL * sv[0]:
        raise IllConditionedJordan(
            f"Jordan basis is numerically singular (sv ratio {sv[-1]:.3e} / {sv[0]:.3e})")
    p = np.linalg.inv(q)
    j = _assemble_jordan(blocks, n)
    residual = similarity_residual(a, p, j)
    tol = jordan_residual_tol(a)
    if residual > tol:
        raise IllConditionedJordan(
            f"Jordan residual {residual:.3e} exceeds tolerance {tol:.3e}")
    return RealJordanForm(J=j, P=p, blocks=tuple(blocks), residual=residual)
