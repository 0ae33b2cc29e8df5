"""Abstract wedges: Euler couples (h, tau) acted on by a Z/2-graded group.

Group elements are carried at the level of the adjoint representation, as an
automorphism matrix together with a parity.  For the Poincare group the
affine matrix is kept alongside so that semigroup membership can be decided
exactly from the geometry of the right wedge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import scipy.linalg
import scipy.optimize

from . import causal, cones, liealg
from .errors import InvariantViolation, NoGeometricRealization

AUT_TOL = 1e-9


class Verdict(str, enum.Enum):
    IN = "In"
    OUT = "Out"
    UNKNOWN = "Unknown"


@dataclass
class GradedGroupElement:
    matrix: np.ndarray
    parity: int = 1
    geometric: Optional[causal.IsometryElement] = field(default=None, repr=False)

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=float)
        if self.parity not in (1, -1):
            raise ValueError("parity must be +1 or -1")

    def __matmul__(self, other: "GradedGroupElement") -> "GradedGroupElement":
        geo = None
        if self.geometric is not None and other.geometric is not None:
            geo = self.geometric @ other.geometric
        return GradedGroupElement(self.matrix @ other.matrix, self.parity * other.parity, geo)

    def inverse(self) -> "GradedGroupElement":
        geo = self.geometric.inverse() if self.geometric is not None else None
        return GradedGroupElement(np.linalg.inv(self.matrix), self.parity, geo)

    @classmethod
    def identity(cls, n: int) -> "GradedGroupElement":
        return cls(np.eye(n), 1)

    @classmethod
    def exp(cls, L: liealg.LieAlgebra, x) -> "GradedGroupElement":
        return cls(liealg.Ad_exp(L, x), 1)

    def check(self, L: liealg.LieAlgebra, tol: float = AUT_TOL) -> "GradedGroupElement":
        res = liealg.automorphism_residual(L, self.matrix)
        if res > tol * max(1.0, np.linalg.norm(self.matrix) ** 2):
            raise InvariantViolation(f"matrix is not a Lie algebra automorphism (residual {res:.2e})")
        return self


def twisted_adjoint(g: GradedGroupElement, x) -> np.ndarray:
    """eps(g) Ad(g) x."""
    return g.parity * (g.matrix @ np.asarray(x, dtype=float))


@dataclass
class EulerCouple:
    algebra: liealg.LieAlgebra
    h: np.ndarray
    tau: GradedGroupElement

    def __post_init__(self):
        self.h = self.algebra.element(self.h)
        self.verify()

    def verify(self, tol: float = AUT_TOL) -> "EulerCouple":
        T = self.tau.matrix
        n = self.algebra.dim
        if self.tau.parity != -1:
            raise InvariantViolation("tau must have parity -1")
        if np.linalg.norm(T @ T - np.eye(n)) > tol * n:
            raise InvariantViolation("tau is not an involution")
        if np.linalg.norm(T @ self.h - self.h) > tol * max(1.0, np.linalg.norm(self.h)):
            raise InvariantViolation("Ad(tau) does not fix h")
        if liealg.is_euler(self.algebra, self.h):
            if np.linalg.norm(T - liealg.grading_operator(self.algebra, self.h)) > 1e-8 * n:
                raise InvariantViolation("Ad(tau) differs from tau_h")
        return self

    def same_as(self, other: "EulerCouple", tol: float = 1e-8) -> bool:
        return bool(
            np.linalg.norm(self.h - other.h) <= tol
            and np.linalg.norm(self.tau.matrix - other.tau.matrix) <= tol
        )

    def to_dict(self) -> dict:
        return {"h": self.h.tolist(), "tau": self.tau.matrix.tolist()}


def standard_couple(L: liealg.LieAlgebra, h) -> EulerCouple:
    """(h, tau_h) for an Euler element h."""
    return EulerCouple(L, h, GradedGroupElement(liealg.tau_h(L, h), -1))


def act_on_wedge(g: GradedGroupElement, W: EulerCouple) -> EulerCouple:
    """g.(h, tau) = (Ad^eps(g) h, g tau g^-1)."""
    tau = GradedGroupElement(g.matrix @ W.tau.matrix @ np.linalg.inv(g.matrix), -1)
    return EulerCouple(W.algebra, twisted_adjoint(g, W.h), tau)


def dual_wedge(W: EulerCouple) -> EulerCouple:
    return EulerCouple(W.algebra, -W.h, W.tau)


def fixes(g: GradedGroupElement, W: EulerCouple, tol: float = 1e-8) -> bool:
    return act_on_wedge(g, W).same_as(W, tol)


# ---------------------------------------------------------------------------
# order


@dataclass
class GeometricRealization:
    """Region of a homogeneous space plus the point action of group elements."""

    region: Callable[[np.ndarray], bool]
    act: Callable[[GradedGroupElement, np.ndarray], np.ndarray]
    dim: int
    box: float = 5.0


@dataclass
class WedgeOrderConfig:
    invariant_cone: cones.PolyhedralCone
    stabilizer_test: Optional[Callable[[GradedGroupElement, EulerCouple], bool]] = None
    realization: Optional[GeometricRealization] = None
    poincare_d: Optional[int] = None
    n_starts: int = 200
    max_iter: int = 100
    seed: int = 0

    def __post_init__(self):
        if not cones.is_pointed(self.invariant_cone):
            raise InvariantViolation("invariant cone contains a line")

    def in_stabilizer(self, g: GradedGroupElement, W: EulerCouple) -> bool:
        if self.stabilizer_test is not None:
            return bool(self.stabilizer_test(g, W))
        return fixes(g, W)


def _poincare_base(W: EulerCouple, d: int) -> bool:
    L = W.algebra
    return L.dim == d + d * (d - 1) // 2 and np.allclose(W.h, L.basis_vector("M01"))


def poincare_decode(L: liealg.LieAlgebra, A: np.ndarray) -> causal.IsometryElement:
    """Recover (Lambda, v) from the Ad-matrix of an affine Poincare element."""
    d = int(round((-1 + np.sqrt(1 + 8 * L.dim)) / 2))
    A = np.asarray(A, dtype=float)
    Lam = A[:d, :d]
    rows, rhs = [], []
    for k in range(d, L.dim):
        # Ad(g) M_k has translation part -(Lam M_k Lam^-1) v
        Mk = L.matrices[k][:d, :d]
        rows.append(-(Lam @ Mk @ np.linalg.inv(Lam)))
        rhs.append(A[:d, k])
    v, *_ = np.linalg.lstsq(np.vstack(rows), np.concatenate(rhs), rcond=None)
    return causal.IsometryElement(Lam, v)


def poincare_element(L: liealg.LieAlgebra, iso: causal.IsometryElement) -> GradedGroupElement:
    return GradedGroupElement(liealg.Ad_of_matrix(L, iso.affine()), 1, iso)


def poincare_couple(d: int) -> EulerCouple:
    L = liealg.poincare(d)
    return standard_couple(L, L.basis_vector("M01"))


def poincare_config(d: int, **kw) -> WedgeOrderConfig:
    L = liealg.poincare(d)

    def act(g, pts):
        iso = g.geometric if g.geometric is not None else poincare_decode(L, g.matrix)
        return iso.apply(pts)

    real = GeometricRealization(causal.in_wedge_WR, act, d)
    return WedgeOrderConfig(cones.poincare_translation_cone(d), realization=real, poincare_d=d, **kw)


def _search_factorization(cfg: WedgeOrderConfig, W: EulerCouple, g: GradedGroupElement):
    """Look for g = exp(c+) exp(y) exp(c-) with c+- in C+-, y in g_0(h)."""
    L = W.algebra
    Cp, Cm = cones.graded_cone_parts(L, cfg.invariant_cone, W.h, seed=cfg.seed)
    _, g0, _ = liealg.grading(L, W.h)
    Gp, Gm = Cp.generators, Cm.generators
    kp, k0, km = Gp.shape[0], g0.shape[1], Gm.shape[0]
    target = g.matrix

    def unpack(z):
        a, y, b = z[:kp], z[kp:kp + k0], z[kp + k0:]
        cp = Gp.T @ a if kp else np.zeros(L.dim)
        cm = Gm.T @ b if km else np.zeros(L.dim)
        return cp, g0 @ y, cm

    def resid(z):
        cp, y, cm = unpack(z)
        M = liealg.Ad_exp(L, cp) @ liealg.Ad_exp(L, y) @ liealg.Ad_exp(L, cm)
        return (M - target).ravel()

    n = kp + k0 + km
    lo = np.concatenate([np.zeros(kp), -np.inf * np.ones(k0), np.zeros(km)])
    hi = np.inf * np.ones(n)
    rng = np.random.default_rng(cfg.seed)
    scale = max(1.0, np.linalg.norm(target))
    for _ in range(cfg.n_starts):
        z0 = np.concatenate([rng.exponential(1.0, kp), rng.normal(0, 1, k0), rng.exponential(1.0, km)])
        if n == 0:
            return np.linalg.norm(resid(z0)) <= 1e-9 * scale
        sol = scipy.optimize.least_squares(resid, z0, bounds=(lo, hi), max_nfev=cfg.max_iter,
                                           xtol=1e-15, ftol=1e-15, gtol=1e-15)
        if np.linalg.norm(sol.fun) <= 1e-9 * scale:
            cp, y, cm = unpack(sol.x)
            s = GradedGroupElement.exp(L, y)
            if cfg.in_stabilizer(s, W):
                return True
    return False


def _sampled_escape(cfg: WedgeOrderConfig, g: GradedGroupElement, n: int = 4000):
    real = cfg.realization
    pts = causal.sample_region(real.region, real.dim, n, cfg.seed, real.box)
    imgs = real.act(g, pts)
    out = np.flatnonzero(~causal._mask(real.region, imgs))
    return pts[out[0]] if out.size else None


def semigroup_member(cfg: WedgeOrderConfig, W: EulerCouple, g: GradedGroupElement,
                     require_out_certificate: bool = False) -> Verdict:
    """Is g in S_W = exp(C_+) G_W exp(C_-)?"""
    if g.parity != 1:
        raise ValueError("semigroup membership is defined for parity +1 elements")
    if require_out_certificate and cfg.realization is None:
        raise NoGeometricRealization("no geometric realization attached to certify Out")
    if cfg.poincare_d is not None and _poincare_base(W, cfg.poincare_d):
        iso = g.geometric if g.geometric is not None else poincare_decode(W.algebra, g.matrix)
        return Verdict.IN if causal.compression_member_poincare(iso) else Verdict.OUT
    if cfg.in_stabilizer(g, W):
        return Verdict.IN
    if _search_factorization(cfg, W, g):
        return Verdict.IN
    if cfg.realization is not None and _sampled_escape(cfg, g) is not None:
        return Verdict.OUT
    return Verdict.UNKNOWN


def wedge_leq(cfg: WedgeOrderConfig, W: EulerCouple, g1: GradedGroupElement, g2: GradedGroupElement):
    """g1.W <= g2.W iff g2^-1 g1 in S_W.  Returns True, False or Verdict.UNKNOWN."""
    v = semigroup_member(cfg, W, g2.inverse() @ g1)
    if v is Verdict.UNKNOWN:
        return Verdict.UNKNOWN
    return v is Verdict.IN
