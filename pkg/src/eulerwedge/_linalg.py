"""Rank-revealing helpers for real subspaces of R^m.

Subspaces are passed around as ``(m, k)`` matrices whose columns span them.
All decisions go through singular values compared against an absolute
tolerance on an orthonormalised representation, so they do not depend on
how the spanning set was scaled.
"""

import warnings

import numpy as np
import scipy.linalg

from .errors import DegenerateRankWarning

DEFAULT_TOL = 1e-9

# singular values inside (tol / _GUARD, tol * _GUARD) are reported as near-threshold
_GUARD = 1e2


def _as_columns(A, m=None):
    A = np.asarray(A, dtype=float)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.size == 0:
        rows = m if m is not None else A.shape[0]
        return np.zeros((rows, 0))
    return A


def _check_threshold(s, tol, what):
    close = s[(s > tol / _GUARD) & (s < tol * _GUARD)]
    if close.size:
        warnings.warn(
            f"{what}: singular value {close[0]:.3e} is within a factor "
            f"{_GUARD:g} of the tolerance {tol:.1e}",
            DegenerateRankWarning,
            stacklevel=3,
        )


def singular_values(A):
    A = _as_columns(A)
    if A.shape[1] == 0 or A.shape[0] == 0:
        return np.zeros(0)
    return np.linalg.svd(A, compute_uv=False)


def orth(A, tol=DEFAULT_TOL, relative=False, warn=False):
    """Orthonormal basis of the column span of ``A``.

    With ``relative=True`` the cut-off is ``tol * s_max`` instead of ``tol``.
    """
    A = _as_columns(A)
    m = A.shape[0]
    if A.shape[1] == 0:
        return np.zeros((m, 0))
    U, s, _ = np.linalg.svd(A, full_matrices=False)
    cut = tol * (s[0] if (relative and s.size) else 1.0)
    if warn:
        _check_threshold(s, cut, "orth")
    r = int(np.sum(s > cut))
    return U[:, :r]


def rank(A, tol=DEFAULT_TOL, warn=False):
    A = _as_columns(A)
    if A.shape[1] == 0:
        return 0
    s = singular_values(A)
    if warn:
        _check_threshold(s, tol, "rank")
    return int(np.sum(s > tol))


def null_space(A, tol=DEFAULT_TOL):
    """Orthonormal basis of ``{x : A x = 0}``."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n)
    _, s, Vt = np.linalg.svd(A, full_matrices=True)
    r = int(np.sum(s > tol))
    return Vt[r:].T.copy()


def projector(Q):
    Q = _as_columns(Q)
    return Q @ Q.T


def canonical(A, tol=DEFAULT_TOL):
    """Deterministic orthonormal basis that depends only on the span.

    The orthogonal projector onto the span is representation independent;
    a column-pivoted QR of it with a sign convention fixes the basis.
    """
    Q = orth(A, tol)
    m, k = Q.shape
    if k == 0:
        return Q
    P = Q @ Q.T
    Qc, R, _ = scipy.linalg.qr(P, pivoting=True, mode="economic")
    Qc = Qc[:, :k]
    signs = np.sign(np.diag(R)[:k])
    signs[signs == 0] = 1.0
    return Qc * signs


def contains(A, B, tol=DEFAULT_TOL):
    """True iff span(B) is contained in span(A), up to ``tol``."""
    B = _as_columns(B)
    if B.shape[1] == 0:
        return True
    QB = orth(B, tol)
    if QB.shape[1] == 0:
        return True
    QA = orth(A, tol)
    resid = QB - QA @ (QA.T @ QB)
    return bool(np.linalg.norm(resid, 2) <= tol)


def residual_outside(A, B, tol=DEFAULT_TOL):
    """Largest distance of a unit vector of span(B) to span(A)."""
    QB = orth(B, tol)
    if QB.shape[1] == 0:
        return 0.0
    QA = orth(A, tol)
    return float(np.linalg.norm(QB - QA @ (QA.T @ QB), 2))


def same_span(A, B, tol=DEFAULT_TOL):
    QA, QB = orth(A, tol), orth(B, tol)
    if QA.shape[1] != QB.shape[1]:
        return False
    if QA.shape[1] == 0:
        return True
    return bool(np.linalg.norm(QA @ QA.T - QB @ QB.T, 2) <= tol)


def span_distance(A, B, tol=DEFAULT_TOL):
    """Spectral-norm distance between the orthogonal projectors."""
    QA, QB = orth(A, tol), orth(B, tol)
    return float(np.linalg.norm(QA @ QA.T - QB @ QB.T, 2))


def intersect(bases, tol=DEFAULT_TOL, m=None):
    """Intersection of the spans of the given bases.

    Computed as the common fixed space of the orthogonal projectors, i.e. the
    null space of the stacked complementary projectors.
    """
    bases = [_as_columns(B, m) for B in bases]
    if not bases:
        if m is None:
            raise ValueError("empty intersection needs the ambient dimension")
        return np.eye(m)
    m = bases[0].shape[0]
    blocks = []
    for B in bases:
        Q = orth(B, tol)
        blocks.append(np.eye(m) - Q @ Q.T)
    return null_space(np.vstack(blocks), np.sqrt(tol))


def add(bases, tol=DEFAULT_TOL, m=None):
    bases = [_as_columns(B, m) for B in bases]
    if not bases:
        return np.zeros((m, 0))
    return orth(np.hstack(bases), tol)


def complement(A, tol=DEFAULT_TOL, m=None):
    """Orthogonal complement of span(A)."""
    A = _as_columns(A, m)
    Q = orth(A, tol)
    return null_space(Q.T, tol) if Q.shape[1] else np.eye(A.shape[0])


def principal_angles(A, B, tol=DEFAULT_TOL):
    QA, QB = orth(A, tol), orth(B, tol)
    if QA.shape[1] == 0 or QB.shape[1] == 0:
        return np.zeros(0)
    s = np.clip(np.linalg.svd(QA.T @ QB, compute_uv=False), -1.0, 1.0)
    return np.arccos(s)
