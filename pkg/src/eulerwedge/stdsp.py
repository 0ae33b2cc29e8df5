"""Standard subspaces of C^n and their modular data.

C^n is realified as R^{2n} by stacking real and imaginary parts,
z = x + iy  ->  (x; y).  Multiplication by i is the orthogonal matrix I,
complex linear maps are the real matrices commuting with I and antilinear maps
those anticommuting with it.  With this convention

    Re<xi, eta> = xi . eta,        Im<xi, eta> = -xi . (I eta),

so the symplectic complement of V is the Euclidean complement of IV.

Real subspaces are stored by a canonical orthonormal basis, so two objects
describing the same subspace compare equal regardless of how they were built.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np
import scipy.linalg

from . import _linalg as la
from .errors import (
    DimensionMismatch,
    ModularRelationViolation,
    NotModularPair,
    NotStandard,
    NumericalFailure,
)

TOL = 1e-9
# random_standard rejects draws whose [V, iV] is worse conditioned than this
RANDOM_COND = 100.0

# ---------------------------------------------------------------------------
# realification


def complex_structure(n: int) -> np.ndarray:
    Z, E = np.zeros((n, n)), np.eye(n)
    return np.block([[Z, -E], [E, Z]])


def conjugation(n: int) -> np.ndarray:
    """z -> conj(z)."""
    return np.diag(np.concatenate([np.ones(n), -np.ones(n)]))


def realify(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    return np.block([[A.real, -A.imag], [A.imag, A.real]])


def complexify(M) -> np.ndarray:
    """Inverse of :func:`realify` for a complex-linear real matrix."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0] // 2
    return M[:n, :n] + 1j * M[n:, :n]


def antilinear(A) -> np.ndarray:
    """Real matrix of z -> A conj(z)."""
    A = np.asarray(A, dtype=complex)
    return realify(A) @ conjugation(A.shape[0])


def antilinear_to_complex(M) -> np.ndarray:
    """A with M z = A conj(z)."""
    M = np.asarray(M, dtype=float)
    return complexify(M @ conjugation(M.shape[0] // 2))


def to_real(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return np.concatenate([v.real, v.imag], axis=0)


def to_complex(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.shape[0] // 2
    return x[:n] + 1j * x[n:]


def _herm_fn(A, fn):
    w, U = np.linalg.eigh((A + A.conj().T) / 2)
    return (U * fn(w)) @ U.conj().T


# ---------------------------------------------------------------------------
# types


@dataclass(eq=False)
class RealSubspace:
    n: int
    basis: np.ndarray

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=float)
        if B.size == 0:
            B = np.zeros((2 * self.n, 0))
        if B.shape[0] != 2 * self.n:
            raise DimensionMismatch(f"basis has {B.shape[0]} rows, expected {2 * self.n}")
        self.basis = la.canonical(B, TOL)

    @classmethod
    def from_complex_vectors(cls, vectors, n=None) -> "RealSubspace":
        """Real span of the given complex vectors (columns)."""
        V = np.asarray(vectors, dtype=complex)
        if V.ndim == 1:
            V = V.reshape(-1, 1)
        return cls(V.shape[0] if n is None else n, to_real(V))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def complex_basis(self) -> np.ndarray:
        return to_complex(self.basis)

    def equals(self, other: "RealSubspace", tol: float = TOL) -> bool:
        return self.n == other.n and la.same_span(self.basis, other.basis, tol)

    def contains(self, other: "RealSubspace", tol: float = TOL) -> bool:
        return la.contains(self.basis, other.basis, tol)

    def distance(self, other: "RealSubspace") -> float:
        return la.span_distance(self.basis, other.basis)


def zero_subspace(n: int) -> RealSubspace:
    return RealSubspace(n, np.zeros((2 * n, 0)))


def whole_space(n: int) -> RealSubspace:
    return RealSubspace(n, np.eye(2 * n))


def real_form(n: int) -> RealSubspace:
    """R^n inside C^n."""
    return RealSubspace(n, np.vstack([np.eye(n), np.zeros((n, n))]))


@dataclass(eq=False)
class ModularPair:
    Delta: np.ndarray
    J: np.ndarray

    def __post_init__(self):
        self.Delta = np.asarray(self.Delta, dtype=complex)
        self.J = np.asarray(self.J, dtype=float)
        self.validate()

    @property
    def n(self) -> int:
        return self.Delta.shape[0]

    def validate(self, tol: float = 1e-10):
        n = self.n
        D, J, I = self.Delta, self.J, complex_structure(n)
        if J.shape != (2 * n, 2 * n):
            raise NotModularPair("J has the wrong size")
        if np.linalg.norm(D - D.conj().T) > tol * max(1.0, np.linalg.norm(D)):
            raise NotModularPair("Delta is not hermitian")
        w = np.linalg.eigvalsh((D + D.conj().T) / 2)
        if w.min() <= 0:
            raise NotModularPair("Delta is not positive definite")
        if np.linalg.norm(J @ J - np.eye(2 * n)) > tol * 2 * n:
            raise NotModularPair("J is not an involution")
        if np.linalg.norm(J.T @ J - np.eye(2 * n)) > tol * 2 * n:
            raise NotModularPair("J is not isometric")
        if np.linalg.norm(J @ I + I @ J) > tol * 2 * n:
            raise NotModularPair("J is not antilinear")
        lhs = J @ realify(D) @ J
        rhs = realify(_herm_fn(D, lambda x: 1 / x))
        # inverting Delta costs a factor cond(Delta) in accuracy
        rel = max(10 * tol, 1e-14 * w.max() / w.min())
        if np.linalg.norm(lhs - rhs) > rel * max(1.0, np.linalg.norm(rhs)):
            raise NotModularPair("J Delta J differs from Delta^-1")

    def delta_power(self, s: complex) -> np.ndarray:
        """Delta^s as a complex matrix."""
        return _herm_fn(self.Delta, lambda x: x ** s)

    def modular_unitary(self, t: float) -> "AntiUnitaryOp":
        """Delta^{it}."""
        w, U = np.linalg.eigh(self.Delta)
        return AntiUnitaryOp.unitary((U * np.exp(1j * t * np.log(w))) @ U.conj().T)

    def tomita(self) -> np.ndarray:
        """S = J Delta^{1/2} as a real matrix."""
        return self.J @ realify(self.delta_power(0.5))

    def equals(self, other: "ModularPair", tol: float = TOL) -> bool:
        return bool(
            np.linalg.norm(self.Delta - other.Delta) <= tol * max(1.0, np.linalg.norm(self.Delta))
            and np.linalg.norm(self.J - other.J) <= tol * max(1.0, np.linalg.norm(self.J))
        )


@dataclass(eq=False)
class AntiUnitaryOp:
    """Real orthogonal matrix; parity +1 if complex linear, -1 if antilinear."""

    matrix: np.ndarray
    parity: int = 1

    def __post_init__(self):
        M = self.matrix = np.asarray(self.matrix, dtype=float)
        m = M.shape[0]
        if M.shape != (m, m) or m % 2:
            raise DimensionMismatch("operator must be a square matrix of even size")
        if np.linalg.norm(M.T @ M - np.eye(m)) > 1e-9 * m:
            raise ValueError("operator is not orthogonal")
        I = complex_structure(m // 2)
        if np.linalg.norm(M @ I - self.parity * I @ M) > 1e-9 * m:
            raise ValueError(f"operator does not satisfy the parity {self.parity} law with I")

    @property
    def n(self) -> int:
        return self.matrix.shape[0] // 2

    @classmethod
    def unitary(cls, U) -> "AntiUnitaryOp":
        return cls(realify(U), 1)

    @classmethod
    def antiunitary(cls, A) -> "AntiUnitaryOp":
        """z -> A conj(z)."""
        return cls(antilinear(A), -1)

    @classmethod
    def identity(cls, n: int) -> "AntiUnitaryOp":
        return cls(np.eye(2 * n), 1)

    def __matmul__(self, other: "AntiUnitaryOp") -> "AntiUnitaryOp":
        return AntiUnitaryOp(self.matrix @ other.matrix, self.parity * other.parity)

    def adjoint(self) -> "AntiUnitaryOp":
        return AntiUnitaryOp(self.matrix.T, self.parity)

    def apply(self, V: RealSubspace) -> RealSubspace:
        return RealSubspace(V.n, self.matrix @ V.basis)


# ---------------------------------------------------------------------------
# core calculus


def is_cyclic(V: RealSubspace, tol: float = TOL) -> bool:
    I = complex_structure(V.n)
    return la.rank(np.hstack([V.basis, I @ V.basis]), tol, warn=True) == 2 * V.n


def is_separating(V: RealSubspace, tol: float = TOL) -> bool:
    I = complex_structure(V.n)
    return la.rank(np.hstack([V.basis, I @ V.basis]), tol, warn=True) == 2 * V.dim


def is_standard(V: RealSubspace, tol: float = TOL) -> bool:
    return is_cyclic(V, tol) and is_separating(V, tol)


def symplectic_complement(V: RealSubspace) -> RealSubspace:
    I = complex_structure(V.n)
    return RealSubspace(V.n, la.complement(I @ V.basis, TOL, m=2 * V.n))


def tomita_operator(V: RealSubspace, tol: float = TOL) -> np.ndarray:
    """Real matrix of S(xi + i eta) = xi - i eta, xi, eta in V."""
    if not is_standard(V, tol):
        raise NotStandard("subspace is not standard")
    I = complex_structure(V.n)
    B = np.hstack([V.basis, I @ V.basis])
    D = np.diag(np.concatenate([np.ones(V.dim), -np.ones(V.dim)]))
    return B @ D @ np.linalg.inv(B)


def modular_from_subspace(V: RealSubspace, tol: float = TOL) -> ModularPair:
    """(Delta, J) from the polar decomposition S = J Delta^{1/2}."""
    S = tomita_operator(V, tol)
    # SVD keeps J orthogonal to machine precision even when S is badly conditioned
    W, s, Vt = np.linalg.svd(S)
    if s.min() <= 0:
        raise NumericalFailure("Tomita operator is singular")
    J = W @ Vt
    J = (J + J.T) / 2
    D = (Vt.T * s ** 2) @ Vt
    return ModularPair(complexify((D + D.T) / 2), J)


def _fix_direct(T: np.ndarray, tol: float) -> np.ndarray:
    return la.null_space(T - np.eye(T.shape[0]), tol)


def subspace_from_modular_direct(p: ModularPair, tol: float = 1e-8) -> RealSubspace:
    """Fix(J Delta^{1/2}) as a plain null space; reference method for tests."""
    return RealSubspace(p.n, _fix_direct(p.tomita(), tol * max(1.0, np.linalg.norm(p.tomita(), 2))))


def subspace_from_modular(p: ModularPair, tol: float = TOL) -> RealSubspace:
    """V = Fix(J Delta^{1/2}).

    Eigenvectors v of Delta with eigenvalue lambda < 1/e are paired with Jv
    (eigenvalue 1/lambda); each pair contributes v + lambda^{1/2} Jv and
    iv - i lambda^{1/2} Jv.  The spectral band [1/e, e] is treated by a
    direct null space, where S is well conditioned.
    """
    n = p.n
    w, U = np.linalg.eigh(p.Delta)
    I = complex_structure(n)
    cols = []
    low = w < np.exp(-1)
    mid = ~low & (w <= np.exp(1))
    for k in np.flatnonzero(low):
        v = to_real(U[:, k])
        Jv = p.J @ v
        s = np.sqrt(w[k])
        c = 1.0 / np.sqrt(1 + w[k])
        cols.append(c * (v + s * Jv))
        cols.append(c * (I @ v - s * (I @ Jv)))
    if mid.any():
        Q = to_real(U[:, mid])
        Q = np.hstack([Q, I @ Q])
        Sb = Q.T @ p.tomita() @ Q
        N = _fix_direct(Sb, 1e-8)
        cols.extend((Q @ N).T)
    B = np.array(cols).T if cols else np.zeros((2 * n, 0))
    V = RealSubspace(n, B)
    if V.dim != n or not is_standard(V, tol):
        raise NumericalFailure(f"fixed space has dimension {V.dim}, expected {n}")
    return V


def kms_residual(p: ModularPair, V: RealSubspace) -> float:
    """max over basis vectors of |Delta^{1/2} xi - J xi|."""
    D = realify(p.delta_power(0.5))
    R = D @ V.basis - p.J @ V.basis
    return float(np.abs(R).max()) if R.size else 0.0


def transform(U: AntiUnitaryOp, V: RealSubspace, verify: bool = True, tol: float = TOL) -> RealSubspace:
    """UV, with its modular data checked against that of V.

    S_{UV} = U S_V U*, so Delta_{UV} = U Delta U* and J_{UV} = U J U* as real
    matrices.  Read on the modular group this is
    U Delta^{it} U* = Delta_{UV}^{eps(U) it}, the sign coming from the
    antilinearity of U when eps(U) = -1.
    """
    if not is_standard(V, tol):
        raise NotStandard("subspace is not standard")
    W = U.apply(V)
    if verify:
        p, q = modular_from_subspace(V), modular_from_subspace(W)
        Ur = U.matrix
        t = 0.3
        lhs = Ur @ p.modular_unitary(t).matrix @ Ur.T
        rhs = q.modular_unitary(U.parity * t).matrix
        D_exp = Ur @ realify(p.Delta) @ Ur.T
        err = max(np.linalg.norm(lhs - rhs),
                  np.linalg.norm(realify(q.Delta) - D_exp) / max(1.0, np.linalg.norm(D_exp)),
                  np.linalg.norm(q.J - Ur @ p.J @ Ur.T))
        if err > 1e-8:
            raise NumericalFailure(f"transformation law violated (residual {err:.2e})")
    return W


def intersect_family(V: RealSubspace, ops: Sequence[AntiUnitaryOp], tol: float = TOL) -> RealSubspace:
    """The intersection of U V over U in ops (the whole space for an empty family)."""
    bases = [U.matrix @ V.basis for U in ops]
    if not bases:
        return whole_space(V.n)
    return RealSubspace(V.n, la.intersect(bases, tol, m=2 * V.n))


def fixed_part(V: RealSubspace, tol: float = 1e-8) -> RealSubspace:
    """ker(Delta_V - 1) n V, the reference for V n V'."""
    p = modular_from_subspace(V)
    K = la.null_space(realify(p.Delta) - np.eye(2 * V.n), tol)
    return RealSubspace(V.n, la.intersect([K, V.basis], TOL, m=2 * V.n))


# ---------------------------------------------------------------------------
# constructions


def _sum_embeddings(n1: int, n2: int):
    n = n1 + n2
    E1 = np.zeros((2 * n, 2 * n1))
    E2 = np.zeros((2 * n, 2 * n2))
    E1[:n1, :n1] = np.eye(n1)
    E1[n:n + n1, n1:] = np.eye(n1)
    E2[n1:n, :n2] = np.eye(n2)
    E2[n + n1:, n2:] = np.eye(n2)
    return E1, E2


def direct_sum(V1: RealSubspace, V2: RealSubspace) -> RealSubspace:
    E1, E2 = _sum_embeddings(V1.n, V2.n)
    return RealSubspace(V1.n + V2.n, np.hstack([E1 @ V1.basis, E2 @ V2.basis]))


def direct_sum_op(U1: AntiUnitaryOp, U2: AntiUnitaryOp) -> AntiUnitaryOp:
    if U1.parity != U2.parity:
        raise DimensionMismatch("blockwise operators must have the same parity")
    E1, E2 = _sum_embeddings(U1.n, U2.n)
    return AntiUnitaryOp(E1 @ U1.matrix @ E1.T + E2 @ U2.matrix @ E2.T, U1.parity)


def direct_sum_pair(p1: ModularPair, p2: ModularPair) -> ModularPair:
    D = scipy.linalg.block_diag(p1.Delta, p2.Delta)
    E1, E2 = _sum_embeddings(p1.n, p2.n)
    return ModularPair(D, E1 @ p1.J @ E1.T + E2 @ p2.J @ E2.T)


@dataclass
class Doubled:
    n: int
    V: RealSubspace
    pair: ModularPair
    ops: List[AntiUnitaryOp]


def doubling(unitaries: Sequence, Delta, J=None, twisted: Optional[Sequence] = None) -> Doubled:
    """H + conj(H) with V~ = {(v, conj(Delta^{1/2} v))}.

    The second summand is written in conjugated coordinates, so an operator
    B on H acts there as conj(B).  U(g) doubles to U(g) + conj(U(tau(g)));
    U(tau(g)) is taken from ``twisted``, or computed as J U(g) J when J is given,
    or else taken to be U(g).
    """
    D = np.asarray(Delta, dtype=complex)
    n = D.shape[0]
    half = _herm_fn(D, np.sqrt)
    inv = _herm_fn(D, lambda x: 1 / x)
    G = np.vstack([np.eye(n), np.conj(half)])
    Gi = np.vstack([1j * np.eye(n), np.conj(1j * half)])
    V = RealSubspace.from_complex_vectors(np.hstack([G, Gi]), 2 * n)
    Dt = scipy.linalg.block_diag(D, np.conj(inv))
    swap = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
    pair = ModularPair(Dt, antilinear(swap))
    ops = []
    for k, U in enumerate(unitaries):
        U = np.asarray(U, dtype=complex)
        if twisted is not None:
            Ut = np.asarray(twisted[k], dtype=complex)
        elif J is not None:
            Ut = complexify(np.asarray(J) @ realify(U) @ np.asarray(J))
        else:
            Ut = U
        ops.append(AntiUnitaryOp.unitary(scipy.linalg.block_diag(U, np.conj(Ut))))
    return Doubled(2 * n, V, pair, ops)


def tensor(V1: RealSubspace, V2: RealSubspace, tol: float = TOL) -> RealSubspace:
    """Real span of v (x) w over real bases of V1 and V2."""
    if not (is_standard(V1, tol) and is_standard(V2, tol)):
        raise NotStandard("tensor factors must be standard")
    A, B = V1.complex_basis(), V2.complex_basis()
    cols = [np.kron(A[:, i], B[:, j]) for i in range(A.shape[1]) for j in range(B.shape[1])]
    return RealSubspace.from_complex_vectors(np.array(cols).T, V1.n * V2.n)


def tensor_pair(p1: ModularPair, p2: ModularPair) -> ModularPair:
    A1, A2 = antilinear_to_complex(p1.J), antilinear_to_complex(p2.J)
    return ModularPair(np.kron(p1.Delta, p2.Delta), antilinear(np.kron(A1, A2)))


def tensor_op(U1: AntiUnitaryOp, U2: AntiUnitaryOp) -> AntiUnitaryOp:
    if U1.parity != U2.parity:
        raise DimensionMismatch("tensor factors must have the same parity")
    if U1.parity == 1:
        return AntiUnitaryOp.unitary(np.kron(complexify(U1.matrix), complexify(U2.matrix)))
    return AntiUnitaryOp.antiunitary(np.kron(antilinear_to_complex(U1.matrix), antilinear_to_complex(U2.matrix)))


def bgl_pair(K, J, tol: float = 1e-10):
    """Delta = exp(-2 pi K) with the conjugation J; returns (pair, V)."""
    K = np.asarray(K, dtype=complex)
    if np.linalg.norm(K - K.conj().T) > tol * max(1.0, np.linalg.norm(K)):
        raise ModularRelationViolation("K is not hermitian")
    J = np.asarray(J, dtype=float)
    n = K.shape[0]
    D = _herm_fn(K, lambda k: np.exp(-2 * np.pi * k))
    lhs = J @ realify(D) @ J
    rhs = realify(_herm_fn(K, lambda k: np.exp(2 * np.pi * k)))
    if np.linalg.norm(lhs - rhs) > 1e-9 * max(1.0, np.linalg.norm(rhs)):
        raise ModularRelationViolation("J Delta J != Delta^-1; need J K J = -K")
    pair = ModularPair(D, J)
    return pair, subspace_from_modular(pair)


def swap_conjugation(n: int = 1) -> np.ndarray:
    """(z1, z2) -> (conj z2, conj z1) on C^n + C^n."""
    S = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
    return antilinear(S)


def graph_pair(lam: float) -> ModularPair:
    """Delta = diag(lam, 1/lam) on C^2 with the swap conjugation."""
    return ModularPair(np.diag([lam, 1 / lam]), swap_conjugation(1))


def random_standard(n: int, rng: np.random.Generator) -> RealSubspace:
    """A generic real n-dimensional subspace of R^{2n}, standard with probability one."""
    while True:
        V = RealSubspace(n, rng.standard_normal((2 * n, n)))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if is_standard(V) and np.linalg.cond(np.hstack([V.basis, complex_structure(n) @ V.basis])) < RANDOM_COND:
                return V


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))
