"""Finite-dimensional real Lie algebras given by structure constants.

A :class:`LieAlgebra` stores ``c[i, j, k]``, the coefficient of the k-th basis
vector in ``[b_i, b_j]``.  Elements are plain coefficient vectors.  Matrix
algebras additionally keep their defining matrices so group elements can be
pushed through ``Ad``.

The Euler analysis (3-grading, the involution ``tau_h``, the ideal
``n_h = g_1 + [g_1, g_-1] + g_-1`` and anti-ellipticity) works numerically
with rank-revealing factorizations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from . import _linalg as la
from .errors import (
    AutomorphismViolation,
    CriteriaDisagree,
    DimensionMismatch,
    JacobiViolation,
    NotEuler,
    NumericalFailure,
)

EIGEN_TOL = 1e-8
SUBSPACE_TOL = 1e-9
JACOBI_TOL = 1e-10


@dataclass
class LieAlgebra:
    labels: List[str]
    c: np.ndarray
    name: str = "custom"
    matrices: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float)
        d = len(self.labels)
        if self.c.shape != (d, d, d):
            raise DimensionMismatch(
                f"structure constants have shape {self.c.shape}, expected {(d, d, d)}"
            )

    @property
    def dim(self) -> int:
        return len(self.labels)

    def element(self, coeffs) -> np.ndarray:
        x = np.asarray(coeffs, dtype=float).reshape(-1)
        if x.shape[0] != self.dim:
            raise DimensionMismatch(f"element has {x.shape[0]} coefficients, algebra has dim {self.dim}")
        return x

    def basis_vector(self, label_or_index) -> np.ndarray:
        i = self.labels.index(label_or_index) if isinstance(label_or_index, str) else label_or_index
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", self.element(x), self.element(y), self.c)

    def to_matrix(self, x) -> np.ndarray:
        if self.matrices is None:
            raise ValueError(f"{self.name} has no matrix realization")
        return np.einsum("i,iab->ab", self.element(x), self.matrices)

    def coords_of_matrix(self, M) -> np.ndarray:
        """Coefficients of a matrix in the defining basis (least squares, checked)."""
        if self.matrices is None:
            raise ValueError(f"{self.name} has no matrix realization")
        B = self.matrices.reshape(self.dim, -1).T
        x, *_ = np.linalg.lstsq(B, np.asarray(M, dtype=float).reshape(-1), rcond=None)
        if np.linalg.norm(B @ x - np.asarray(M).reshape(-1)) > 1e-9 * max(1.0, np.linalg.norm(M)):
            raise ValueError("matrix does not lie in the algebra")
        return x

    def jacobi_residual(self) -> Tuple[float, Tuple[int, int, int]]:
        c = self.c
        T = np.einsum("jlk,ikm->ijlm", c, c)
        S = T + T.transpose(2, 0, 1, 3) + T.transpose(1, 2, 0, 3)
        norms = np.linalg.norm(S, axis=3)
        idx = np.unravel_index(int(np.argmax(norms)), norms.shape) if norms.size else (0, 0, 0)
        return float(norms.max()) if norms.size else 0.0, tuple(int(i) for i in idx)

    def verify(self, tol: float = JACOBI_TOL) -> "LieAlgebra":
        anti = np.abs(self.c + self.c.transpose(1, 0, 2))
        if anti.size and anti.max() > tol:
            i, j, _ = np.unravel_index(int(np.argmax(anti)), anti.shape)
            raise JacobiViolation((int(i), int(j), int(j)), anti.max())
        res, triple = self.jacobi_residual()
        if res > tol:
            raise JacobiViolation(triple, res)
        return self


# ---------------------------------------------------------------------------
# construction


def _snap(c: np.ndarray, max_den: int = 64, tol: float = 1e-12) -> np.ndarray:
    """Replace entries that are rational with small denominator by that rational."""
    out = c.copy()
    flat = out.reshape(-1)
    for n, v in enumerate(flat):
        q = Fraction(float(v)).limit_denominator(max_den)
        if abs(float(q) - v) < tol:
            flat[n] = float(q)
    return out


def from_matrices(mats: Sequence[np.ndarray], labels: Sequence[str], name: str = "custom") -> LieAlgebra:
    """Structure constants of a matrix Lie algebra spanned by ``mats``."""
    M = np.array(mats, dtype=float)
    d = M.shape[0]
    B = M.reshape(d, -1).T
    if np.linalg.matrix_rank(B) < d:
        raise ValueError("matrices are linearly dependent")
    comms = np.array([M[i] @ M[j] - M[j] @ M[i] for i in range(d) for j in range(d)])
    rhs = comms.reshape(d * d, -1).T
    coef, *_ = np.linalg.lstsq(B, rhs, rcond=None)
    if np.linalg.norm(B @ coef - rhs) > 1e-9 * max(1.0, np.linalg.norm(rhs)):
        raise ValueError("span of the matrices is not closed under the commutator")
    c = _snap(coef.T.reshape(d, d, d))
    return LieAlgebra(list(labels), c, name=name, matrices=M).verify()


def from_brackets(dim: int, labels: Sequence[str], brackets, name: str = "custom") -> LieAlgebra:
    """Algebra from a list of ``(i, j, coeffs)`` with antisymmetric completion."""
    c = np.zeros((dim, dim, dim))
    for i, j, coeffs in brackets:
        coeffs = np.asarray(coeffs, dtype=float)
        c[i, j] = coeffs
        c[j, i] = -coeffs
    return LieAlgebra(list(labels), c, name=name).verify()


def _unit(n, i, j):
    E = np.zeros((n, n))
    E[i, j] = 1.0
    return E


def sl(n: int) -> LieAlgebra:
    """sl(n, R) with basis H_1..H_{n-1} (H_i = E_ii - E_{i+1,i+1}) then E_ij, i != j."""
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    mats, labels = [], []
    for i in range(n - 1):
        mats.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
        labels.append(f"H{i + 1}")
    for i, j in itertools.permutations(range(n), 2):
        mats.append(_unit(n, i, j))
        labels.append(f"E{i + 1}{j + 1}")
    if n == 2:
        labels = ["h", "e", "f"]
        mats = [mats[0], mats[1], mats[2]]
    return from_matrices(mats, labels, name=f"sl{n}")


def gl(n: int) -> LieAlgebra:
    mats = [_unit(n, i, j) for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return from_matrices(mats, labels, name=f"gl{n}")


def minkowski_metric(n: int, p: int = 1) -> np.ndarray:
    return np.diag([1.0] * p + [-1.0] * (n - p))


def _so_mats(p: int, q: int):
    n = p + q
    eta = minkowski_metric(n, p)
    mats, labels = [], []
    for i, j in itertools.combinations(range(n), 2):
        mats.append(eta @ (_unit(n, i, j) - _unit(n, j, i)))
        labels.append(f"M{i}{j}")
    return mats, labels


def so(p: int, q: int = 0) -> LieAlgebra:
    """so(p, q) preserving diag(+1 x p, -1 x q); basis M_ij = eta (E_ij - E_ji).

    For so(1, d) the generator M01 acts as (x0, x1, ...) -> (x1, x0, 0, ...).
    """
    mats, labels = _so_mats(p, q)
    return from_matrices(mats, labels, name=f"so({p},{q})")


def sp(two_n: int) -> LieAlgebra:
    if two_n % 2 or two_n < 2:
        raise ValueError("sp needs an even dimension")
    n = two_n // 2
    Om = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
    mats, labels = [], []
    for i in range(two_n):
        for j in range(i, two_n):
            S = _unit(two_n, i, j) + _unit(two_n, j, i)
            if i == j:
                S = S / 2
            mats.append(Om @ S)
            labels.append(f"S{i}{j}")
    return from_matrices(mats, labels, name=f"sp{two_n}")


def aff1() -> LieAlgebra:
    """aff(R) with basis (h, x), [h, x] = x."""
    h = np.array([[1.0, 0.0], [0.0, 0.0]])
    x = np.array([[0.0, 1.0], [0.0, 0.0]])
    return from_matrices([h, x], ["h", "x"], name="aff1")


def poincare(d: int) -> LieAlgebra:
    """Lie algebra of R^{1,d-1} x| so(1, d-1), realized by (d+1)x(d+1) affine matrices.

    Basis: translations P0..P{d-1}, then M_ij (i < j) of so(1, d-1).
    """
    if d < 2:
        raise ValueError("poincare(d) needs spacetime dimension d >= 2")
    lor, lor_labels = _so_mats(1, d - 1)
    mats, labels = [], []
    for mu in range(d):
        T = np.zeros((d + 1, d + 1))
        T[mu, d] = 1.0
        mats.append(T)
        labels.append(f"P{mu}")
    for X, lab in zip(lor, lor_labels):
        A = np.zeros((d + 1, d + 1))
        A[:d, :d] = X
        mats.append(A)
        labels.append(lab)
    return from_matrices(mats, labels, name=f"poincare{d}")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra([f"a{i}" for i in range(n)], np.zeros((n, n, n)), name=f"abelian{n}")


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    d1, d2 = L1.dim, L2.dim
    c = np.zeros((d1 + d2,) * 3)
    c[:d1, :d1, :d1] = L1.c
    c[d1:, d1:, d1:] = L2.c
    labels = [f"{l}@1" for l in L1.labels] + [f"{l}@2" for l in L2.labels]
    return LieAlgebra(labels, c, name=f"{L1.name}+{L2.name}").verify()


def semidirect(action: Sequence[np.ndarray], L: LieAlgebra, module_labels: Sequence[str] = None) -> LieAlgebra:
    """r x| l for an abelian ideal r = R^m acted on by ``action[a]`` (one m x m matrix per basis of l).

    Basis order: r first, then l.
    """
    A = np.array(action, dtype=float)
    if A.shape[0] != L.dim or A.shape[1] != A.shape[2]:
        raise DimensionMismatch("need one square action matrix per basis element of l")
    m = A.shape[1]
    d = m + L.dim
    c = np.zeros((d, d, d))
    c[m:, m:, m:] = L.c
    for a in range(L.dim):
        for i in range(m):
            c[m + a, i, :m] = A[a][:, i]
            c[i, m + a, :m] = -A[a][:, i]
    labels = list(module_labels) if module_labels else [f"r{i}" for i in range(m)]
    out = LieAlgebra(labels + list(L.labels), c, name=f"R{m}x|{L.name}")
    return out.verify()


BUILTINS = {
    "sl2": lambda: sl(2),
    "sl3": lambda: sl(3),
    "gl2": lambda: gl(2),
    "so12": lambda: so(1, 2),
    "so13": lambda: so(1, 3),
    "aff1": aff1,
    "poincare2": lambda: poincare(2),
    "poincare3": lambda: poincare(3),
    "poincare4": lambda: poincare(4),
    "sp4": lambda: sp(4),
}


def build_algebra(kind: str, *args) -> LieAlgebra:
    """Dispatch on a kind name: sl, gl, so, sp, aff, poincare, direct_sum, semidirect, custom."""
    table = {
        "sl": sl,
        "gl": gl,
        "so": so,
        "sp": sp,
        "aff": lambda *a: aff1(),
        "poincare": poincare,
        "direct_sum": direct_sum,
        "semidirect": semidirect,
        "custom": from_brackets,
        "abelian": abelian,
    }
    if kind in BUILTINS and not args:
        return BUILTINS[kind]()
    if kind not in table:
        raise ValueError(f"unknown algebra kind {kind!r}")
    return table[kind](*args)


# ---------------------------------------------------------------------------
# adjoint action


def ad_matrix(L: LieAlgebra, x) -> np.ndarray:
    """Matrix of ad x: column j holds [x, b_j]."""
    return np.einsum("i,ijk->kj", L.element(x), L.c)


def Ad_exp(L: LieAlgebra, x) -> np.ndarray:
    """Ad(exp x) = exp(ad x)."""
    return scipy.linalg.expm(ad_matrix(L, x))


def Ad_of_matrix(L: LieAlgebra, g: np.ndarray) -> np.ndarray:
    """Coordinate matrix of X -> g X g^{-1} for a matrix algebra."""
    g = np.asarray(g, dtype=float)
    ginv = np.linalg.inv(g)
    cols = [L.coords_of_matrix(g @ X @ ginv) for X in L.matrices]
    return np.array(cols).T


def automorphism_residual(L: LieAlgebra, A: np.ndarray) -> float:
    """max_ij |A[b_i, b_j] - [A b_i, A b_j]|."""
    A = np.asarray(A, dtype=float)
    lhs = np.einsum("ijk,mk->ijm", L.c, A)
    rhs = np.einsum("ai,bj,abm->ijm", A, A, L.c)
    return float(np.abs(lhs - rhs).max()) if L.dim else 0.0


# ---------------------------------------------------------------------------
# Euler analysis


def _scale(M):
    return max(1.0, float(np.linalg.norm(M, 2)))


def _eigenvalues(ad):
    try:
        return np.linalg.eigvals(ad)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalFailure(f"eigendecomposition failed: {exc}") from exc


def _eigenspace(ad, nu, tol):
    d = ad.shape[0]
    return la.null_space(ad - nu * np.eye(d), tol * _scale(ad))


def _integral_spectrum(ad, tol):
    w = _eigenvalues(ad)
    if np.any(np.abs(w.imag) > tol):
        return None
    r = np.round(w.real)
    if np.any(np.abs(w.real - r) > tol):
        return None
    return sorted({int(v) for v in r})


def _eigenbasis(ad, values, tol):
    """Eigenspace bases for the given integer eigenvalues, or None if not diagonalizable."""
    d = ad.shape[0]
    spaces = {nu: _eigenspace(ad, nu, tol) for nu in values}
    if sum(S.shape[1] for S in spaces.values()) != d:
        return None
    B = np.hstack([spaces[nu] for nu in values])
    D = np.concatenate([[nu] * spaces[nu].shape[1] for nu in values]).astype(float)
    cond = np.linalg.cond(B)
    if not np.isfinite(cond) or cond > 1.0 / tol:
        return None
    resid = np.linalg.norm(B @ np.diag(D) @ np.linalg.inv(B) - ad, 2)
    if resid > tol * _scale(ad):
        return None
    return spaces


def is_euler(L: LieAlgebra, h, tol: float = EIGEN_TOL) -> bool:
    """ad h is non-zero, diagonalizable, with spectrum in {-1, 0, 1}."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    ad = ad_matrix(L, h)
    if np.linalg.norm(ad) <= tol:
        return False
    values = _integral_spectrum(ad, tol)
    if values is None or not set(values) <= {-1, 0, 1}:
        return False
    return _eigenbasis(ad, values, tol) is not None


def _require_euler(L, h, tol):
    if not is_euler(L, h, tol):
        raise NotEuler("element is not an Euler element")


def grading(L: LieAlgebra, h, tol: float = EIGEN_TOL):
    """Orthonormal bases (g_1, g_0, g_-1) of the ad h eigenspaces."""
    _require_euler(L, h, tol)
    ad = ad_matrix(L, h)
    spaces = _eigenbasis(ad, [-1, 0, 1], tol)
    g = {nu: spaces.get(nu, np.zeros((L.dim, 0))) for nu in (-1, 0, 1)}
    worst = 0.0
    for i, j in itertools.product((-1, 0, 1), repeat=2):
        for a in range(g[i].shape[1]):
            for b in range(g[j].shape[1]):
                z = L.bracket(g[i][:, a], g[j][:, b])
                if abs(i + j) >= 2:
                    worst = max(worst, np.linalg.norm(z))
                else:
                    worst = max(worst, np.linalg.norm(ad @ z - (i + j) * z))
    if worst > 1e-9 * _scale(ad):
        raise NumericalFailure(f"grading compatibility residual {worst:.2e}")
    return g[1], g[0], g[-1]


def grading_operator(L: LieAlgebra, h, tol: float = EIGEN_TOL) -> np.ndarray:
    """exp(i pi ad h) for ad h diagonalizable with integral spectrum.

    Acts as (-1)^nu on the nu-eigenspace; the identity when ad h = 0.
    """
    ad = ad_matrix(L, h)
    values = _integral_spectrum(ad, tol)
    if values is None:
        raise NumericalFailure("spectrum of ad h is not integral")
    spaces = _eigenbasis(ad, values, tol)
    if spaces is None:
        raise NumericalFailure("ad h is not diagonalizable")
    B = np.hstack([spaces[nu] for nu in values])
    D = np.concatenate([[(-1.0) ** nu] * spaces[nu].shape[1] for nu in values])
    return B @ np.diag(D) @ np.linalg.inv(B)


def tau_h(L: LieAlgebra, h, tol: float = EIGEN_TOL, aut_tol: float = 1e-9) -> np.ndarray:
    """The involution acting as +1 on g_0(h) and -1 on g_{+-1}(h)."""
    _require_euler(L, h, tol)
    T = grading_operator(L, h, tol)
    if np.linalg.norm(T @ T - np.eye(L.dim), 2) > aut_tol:
        raise AutomorphismViolation("tau_h is not involutive")
    res = automorphism_residual(L, T)
    if res > aut_tol:
        raise AutomorphismViolation(f"tau_h automorphism residual {res:.2e}")
    return T


def integrality_check(L: LieAlgebra, h, tol: float = EIGEN_TOL) -> bool:
    """exp(2 pi i ad h) = id, i.e. ad h diagonalizable with integer eigenvalues."""
    ad = ad_matrix(L, h)
    values = _integral_spectrum(ad, tol)
    if values is None:
        return False
    return _eigenbasis(ad, values, tol) is not None


def exp_2pi_residual(L: LieAlgebra, h) -> float:
    """|| exp(2 pi i ad h) - id ||, the group-level form of the integrality test."""
    ad = ad_matrix(L, h)
    E = scipy.linalg.expm(2j * np.pi * ad)
    return float(np.linalg.norm(E - np.eye(L.dim), 2))


def centralizer(L: LieAlgebra, h, tol: float = SUBSPACE_TOL) -> np.ndarray:
    """Kernel of ad h."""
    ad = ad_matrix(L, h)
    return la.null_space(ad, tol * _scale(ad))


def _commutator_span(L, A, B):
    cols = [L.bracket(A[:, a], B[:, b]) for a in range(A.shape[1]) for b in range(B.shape[1])]
    return np.array(cols).T if cols else np.zeros((L.dim, 0))


def is_ideal(L: LieAlgebra, basis, tol: float = SUBSPACE_TOL) -> bool:
    Q = la.orth(basis, tol)
    if Q.shape[1] == 0:
        return True
    for i in range(L.dim):
        img = ad_matrix(L, L.basis_vector(i)) @ Q
        if la.residual_outside(Q, img, tol) > 1e-9 and np.linalg.norm(img) > tol:
            return False
    return True


def n_h(L: LieAlgebra, h, tol: float = SUBSPACE_TOL, eig_tol: float = EIGEN_TOL) -> np.ndarray:
    """Orthonormal basis of g_1 + [g_1, g_-1] + g_-1."""
    g1, _, gm1 = grading(L, h, eig_tol)
    N = la.orth(np.hstack([g1, gm1, _commutator_span(L, g1, gm1)]), tol)
    if not is_ideal(L, N, tol):
        raise NumericalFailure("n_h failed the ideal check")
    return N


def n_h_natural(L: LieAlgebra, h, tol: float = SUBSPACE_TOL, eig_tol: float = EIGEN_TOL) -> np.ndarray:
    """n_h + R h."""
    return la.orth(np.hstack([n_h(L, h, tol, eig_tol), L.element(h).reshape(-1, 1)]), tol)


def is_anti_elliptic(L: LieAlgebra, h, tol: float = SUBSPACE_TOL, eig_tol: float = EIGEN_TOL) -> bool:
    """n_h + R h = g, cross-checked against g_0(h) in R h + [g_1, g_-1]."""
    by_dim = n_h_natural(L, h, tol, eig_tol).shape[1] == L.dim
    g1, g0, gm1 = grading(L, h, eig_tol)
    target = np.hstack([L.element(h).reshape(-1, 1), _commutator_span(L, g1, gm1)])
    by_inclusion = la.contains(target, g0, 1e-8)
    if by_dim != by_inclusion:
        raise CriteriaDisagree(
            f"dimension criterion says {by_dim}, inclusion criterion says {by_inclusion}"
        )
    return by_dim


def h_in_commutator(L: LieAlgebra, h, tol: float = SUBSPACE_TOL, eig_tol: float = EIGEN_TOL) -> bool:
    """h lies in [g_1(h), g_-1(h)]."""
    g1, _, gm1 = grading(L, h, eig_tol)
    span = la.orth(_commutator_span(L, g1, gm1), tol)
    x = L.element(h)
    if span.shape[1] == 0:
        return False
    r = x - span @ (span.T @ x)
    return bool(np.linalg.norm(r) <= 1e-8 * max(1.0, np.linalg.norm(x)))


@dataclass
class EulerReport:
    is_euler: bool
    spectrum: List[float]
    grading_bases: Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]] = None
    tau_matrix: Optional[np.ndarray] = None
    n_h_basis: Optional[np.ndarray] = None
    n_h_natural_basis: Optional[np.ndarray] = None
    anti_elliptic: Optional[bool] = None
    h_in_commutator: Optional[bool] = None

    def to_dict(self) -> dict:
        def mat(M):
            return None if M is None else np.asarray(M).tolist()

        out = {"is_euler": self.is_euler, "spectrum": list(self.spectrum)}
        if self.is_euler:
            g1, g0, gm1 = self.grading_bases
            out.update(
                grading_dims=[g1.shape[1], g0.shape[1], gm1.shape[1]],
                grading_bases={"g1": mat(g1), "g0": mat(g0), "g-1": mat(gm1)},
                tau_matrix=mat(self.tau_matrix),
                n_h_dim=self.n_h_basis.shape[1],
                n_h_basis=mat(self.n_h_basis),
                n_h_natural_dim=self.n_h_natural_basis.shape[1],
                n_h_natural_basis=mat(self.n_h_natural_basis),
                anti_elliptic=self.anti_elliptic,
                h_in_commutator=self.h_in_commutator,
            )
        return out


def euler_report(L: LieAlgebra, h, tol: float = SUBSPACE_TOL, eig_tol: float = EIGEN_TOL) -> EulerReport:
    ad = ad_matrix(L, h)
    spectrum = sorted(float(v) for v in np.real_if_close(_eigenvalues(ad)).real)
    if not is_euler(L, h, eig_tol):
        return EulerReport(is_euler=False, spectrum=spectrum)
    return EulerReport(
        is_euler=True,
        spectrum=spectrum,
        grading_bases=grading(L, h, eig_tol),
        tau_matrix=tau_h(L, h, eig_tol),
        n_h_basis=n_h(L, h, tol, eig_tol),
        n_h_natural_basis=n_h_natural(L, h, tol, eig_tol),
        anti_elliptic=is_anti_elliptic(L, h, tol, eig_tol),
        h_in_commutator=h_in_commutator(L, h, tol, eig_tol),
    )


# ---------------------------------------------------------------------------
# TOML custom algebras


def _line_of(text: str, needle: str) -> Optional[int]:
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return n
    return None


def loads_toml(text: str, name: str = "custom") -> LieAlgebra:
    """Parse the custom-algebra TOML format.

    ``dim``, ``labels`` and ``brackets = [{i, j, coeffs}, ...]``; pairs not listed
    bracket to zero and ``[b_j, b_i] = -[b_i, b_j]`` is filled in.
    """
    from .errors import ParseError

    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(str(exc), getattr(exc, "lineno", None)) from exc
    if "dim" not in data or not isinstance(data["dim"], int) or data["dim"] < 1:
        raise ParseError("missing or invalid 'dim'", _line_of(text, "dim"))
    dim = data["dim"]
    labels = data.get("labels", [f"b{i}" for i in range(dim)])
    if len(labels) != dim:
        raise ParseError(f"{len(labels)} labels for dim {dim}", _line_of(text, "labels"))
    c = np.zeros((dim, dim, dim))
    seen = {}
    for entry in data.get("brackets", []):
        try:
            i, j, coeffs = int(entry["i"]), int(entry["j"]), [float(v) for v in entry["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed bracket entry {entry!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim) or len(coeffs) != dim:
            raise ParseError(f"bracket entry out of range: {entry!r}")
        v = np.array(coeffs)
        if i == j and np.any(v):
            raise ParseError(f"[b{i}, b{i}] must vanish")
        for key, val in (((i, j), v), ((j, i), -v)):
            if key in seen and not np.allclose(seen[key], val):
                raise ParseError(f"conflicting entries for bracket {key}")
            seen[key] = val
            c[key] = val
    return LieAlgebra(list(labels), c, name=data.get("name", name)).verify()


def load_toml(path) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_toml(fh.read(), name=str(path))


def resolve_algebra(ref: str) -> LieAlgebra:
    """``builtin:NAME`` or a path to a TOML file."""
    if ref.startswith("builtin:"):
        key = ref.split(":", 1)[1]
        if key not in BUILTINS:
            raise ValueError(f"unknown builtin algebra {key!r}; known: {sorted(BUILTINS)}")
        return BUILTINS[key]()
    return load_toml(ref)
