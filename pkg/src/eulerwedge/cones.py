"""Finitely generated convex cones.

Membership is a nonnegative least-squares problem.  Round cones such as the
light cone or the invariant cone of sl(2) are carried as a finite set of
boundary rays together with an exact membership predicate; the predicate is
used wherever invariance matters, the rays wherever a generator list is
needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np
import scipy.optimize

from . import _linalg as la
from . import liealg
from .errors import DimensionMismatch, NotInvariant, NotSkewHermitian, SolverFailure

MEMBER_TOL = 1e-9


@dataclass
class PolyhedralCone:
    ambient_dim: int
    generators: np.ndarray = None
    predicate: Optional[Callable[[np.ndarray, float], bool]] = field(default=None, repr=False)
    name: str = ""

    def __post_init__(self):
        G = np.zeros((0, self.ambient_dim)) if self.generators is None else np.asarray(self.generators, dtype=float)
        G = G.reshape(-1, self.ambient_dim) if G.size else np.zeros((0, self.ambient_dim))
        keep = np.linalg.norm(G, axis=1) > 0
        self.generators = G[keep]

    @classmethod
    def from_list(cls, gens, ambient_dim=None, name=""):
        gens = [np.asarray(g, dtype=float) for g in gens]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient dimension needed for an empty generator list")
            ambient_dim = gens[0].shape[0]
        if any(g.shape != (ambient_dim,) for g in gens):
            raise DimensionMismatch("generators have inconsistent lengths")
        return cls(ambient_dim, np.array(gens) if gens else None, name=name)

    @property
    def n_generators(self) -> int:
        return self.generators.shape[0]

    def contains(self, x, tol: float = MEMBER_TOL) -> bool:
        """Exact predicate when one is attached, otherwise :func:`cone_member`."""
        x = np.asarray(x, dtype=float)
        if self.predicate is not None:
            return bool(self.predicate(x, tol))
        return cone_member(self, x, tol)

    def negated(self) -> "PolyhedralCone":
        pred = None
        if self.predicate is not None:
            p = self.predicate
            pred = lambda x, tol: p(-np.asarray(x), tol)  # noqa: E731
        return PolyhedralCone(self.ambient_dim, -self.generators, pred, name=f"-{self.name}")

    def embedded(self, indices, dim: int) -> "PolyhedralCone":
        """The same cone placed on the coordinates ``indices`` of R^dim."""
        idx = list(indices)
        G = np.zeros((self.n_generators, dim))
        G[:, idx] = self.generators
        pred = None
        if self.predicate is not None:
            p = self.predicate
            rest = [i for i in range(dim) if i not in idx]

            def pred(x, tol):
                x = np.asarray(x)
                return bool(np.all(np.abs(x[rest]) <= tol) and p(x[idx], tol))

        return PolyhedralCone(dim, G, pred, name=self.name)

    def to_dict(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "generators": self.generators.tolist()}


def cone_member(C: PolyhedralCone, x, tol: float = MEMBER_TOL) -> bool:
    """x lies within ``tol`` (relative to |x|) of the nonnegative span of the generators."""
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != C.ambient_dim:
        raise DimensionMismatch(f"vector of length {x.shape[0]} for a cone in R^{C.ambient_dim}")
    scale = max(1.0, float(np.linalg.norm(x)))
    if C.n_generators == 0:
        return bool(np.linalg.norm(x) <= tol * scale)
    try:
        _, resid = scipy.optimize.nnls(C.generators.T, x, maxiter=50 * C.ambient_dim + 10 * C.n_generators)
    except RuntimeError as exc:
        raise SolverFailure(f"nnls did not converge: {exc}") from exc
    return bool(resid <= tol * scale)


def is_pointed(C: PolyhedralCone, tol: float = 1e-9) -> bool:
    """No line inside: the only nonnegative combination summing to zero is trivial."""
    k = C.n_generators
    if k == 0:
        return True
    G = C.generators / np.linalg.norm(C.generators, axis=1, keepdims=True)
    res = scipy.optimize.linprog(
        -np.ones(k), A_eq=G.T, b_eq=np.zeros(C.ambient_dim), bounds=[(0, 1)] * k, method="highs"
    )
    if res.status != 0:
        raise SolverFailure(res.message)
    return bool(-res.fun <= tol)


def prune(gens, tol: float = 1e-9) -> np.ndarray:
    """Drop zero, duplicate and redundant generators (those inside the cone of the rest)."""
    G = [g / np.linalg.norm(g) for g in np.asarray(gens, dtype=float).reshape(len(gens), -1) if np.linalg.norm(g) > tol]
    out = []
    for g in G:
        if not any(np.linalg.norm(g - h) <= 1e-8 for h in out):
            out.append(g)
    i = 0
    while i < len(out) and len(out) > 1:
        rest = out[:i] + out[i + 1:]
        _, r = scipy.optimize.nnls(np.array(rest).T, out[i])
        if r <= 1e-8:
            out.pop(i)
        else:
            i += 1
    return np.array(out) if out else np.zeros((0, len(gens[0]) if len(gens) else 0))


def facets(C: PolyhedralCone, tol: float = 1e-9) -> np.ndarray:
    """Inner facet normals of a full-dimensional pointed cone (rows n with n.x >= 0 on C).

    Brute force over (n-1)-subsets of generators; meant for n <= 6.
    """
    n = C.ambient_dim
    if n > 6:
        raise ValueError("facet enumeration is limited to dimension <= 6")
    G = prune(C.generators, tol)
    if la.rank(G.T, 1e-9) < n:
        raise ValueError("cone is not full-dimensional")
    normals = []
    for subset in itertools.combinations(range(G.shape[0]), n - 1):
        N = la.null_space(G[list(subset)], 1e-9)
        if N.shape[1] != 1:
            continue
        v = N[:, 0]
        s = G @ v
        if np.all(s >= -tol):
            pass
        elif np.all(s <= tol):
            v = -v
        else:
            continue
        if not any(np.linalg.norm(v - w) < 1e-8 for w in normals):
            normals.append(v)
    return np.array(normals)


# ---------------------------------------------------------------------------
# standard cones


def _sphere_points(k: int, n: int) -> np.ndarray:
    """n roughly uniform unit vectors in R^k (deterministic)."""
    if k == 1:
        return np.array([[1.0], [-1.0]])
    if k == 2:
        t = 2 * np.pi * np.arange(n) / n
        return np.stack([np.cos(t), np.sin(t)], axis=1)
    if k == 3:
        i = np.arange(n) + 0.5
        phi = np.arccos(1 - 2 * i / n)
        theta = np.pi * (1 + 5 ** 0.5) * i
        return np.stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)], axis=1)
    pts = np.random.default_rng(12345).standard_normal((n, k))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def light_cone(d: int, n_rays: int = 64) -> PolyhedralCone:
    """Closed forward light cone {x0 >= |x|} in R^{1,d-1}."""
    U = _sphere_points(d - 1, n_rays)
    G = np.hstack([np.ones((U.shape[0], 1)), U])

    def pred(x, tol):
        x = np.asarray(x)
        return bool(x[0] + tol >= np.linalg.norm(x[1:]))

    return PolyhedralCone(d, G, pred, name=f"V+({d})")


def sl2_invariant_cone(n_rays: int = 64) -> PolyhedralCone:
    """{a H + b e + c f : b >= 0, c <= 0, a^2 <= -bc} in the basis (h, e, f) of sl(2)."""
    th = np.pi * np.arange(n_rays) / n_rays
    s, t = np.cos(th), np.sin(th)
    G = np.stack([s * t, s * s, -t * t], axis=1)

    def pred(x, tol):
        a, b, c = np.asarray(x, dtype=float)
        return bool(b >= -tol and c <= tol and a * a <= -b * c + tol)

    return PolyhedralCone(3, G, pred, name="C(sl2)")


def poincare_translation_cone(d: int, n_rays: int = 64) -> PolyhedralCone:
    """Closed forward light cone inside the translation ideal of poincare(d)."""
    L = liealg.poincare(d)
    return light_cone(d, n_rays).embedded(range(d), L.dim)


# ---------------------------------------------------------------------------
# graded parts and Lie wedges


def _spectral_projectors(L, h, tol):
    g1, g0, gm1 = liealg.grading(L, h, tol)
    B = np.hstack([g1, g0, gm1])
    Binv = np.linalg.inv(B)
    k1, k0 = g1.shape[1], g0.shape[1]
    P = {}
    for nu, sl in ((1, slice(0, k1)), (0, slice(k1, k1 + k0)), (-1, slice(k1 + k0, B.shape[1]))):
        P[nu] = B[:, sl] @ Binv[sl, :]
    return P, (g1, g0, gm1)


def check_invariance(L, C: PolyhedralCone, h, n_samples: int = 64, seed: int = 0, t_max: float = 2.0,
                     tol: float = 1e-7) -> None:
    """Sampled test that exp(t ad h) maps generators of C into C."""
    if C.n_generators == 0:
        return
    rng = np.random.default_rng(seed)
    h = L.element(h)
    for t in rng.uniform(-t_max, t_max, n_samples):
        E = liealg.Ad_exp(L, t * h)
        g = C.generators[rng.integers(C.n_generators)]
        y = E @ g
        if not C.contains(y / np.linalg.norm(y), tol):
            raise NotInvariant(f"exp({t:.3f} ad h) moves a generator out of the cone")


def graded_cone_parts(L, C: PolyhedralCone, h, n_samples: int = 64, seed: int = 0, tol: float = 1e-9):
    """(C_+, C_-) with C_+ = C n g_1(h) and C_- = -C n g_-1(h).

    For a cone invariant under exp(R ad h) the intersection with g_{+-1}
    equals the image of the spectral projector, so generators are projected.
    """
    if C.ambient_dim != L.dim:
        raise DimensionMismatch("cone and algebra dimensions differ")
    check_invariance(L, C, h, n_samples, seed)
    P, _ = _spectral_projectors(L, h, liealg.EIGEN_TOL)
    out = []
    for nu, sign in ((1, 1.0), (-1, -1.0)):
        if C.n_generators == 0:
            out.append(PolyhedralCone(L.dim, None))
            continue
        proj = sign * (C.generators @ P[nu].T)
        proj = proj[np.linalg.norm(proj, axis=1) > 1e-9 * max(1.0, np.linalg.norm(C.generators, axis=1).max())]
        G = prune(proj) if proj.shape[0] else np.zeros((0, L.dim))
        part = PolyhedralCone(L.dim, G if G.size else None, name=f"C{'+' if nu > 0 else '-'}")
        target = C if sign > 0 else C.negated()
        for g in part.generators:
            if np.linalg.norm(P[nu] @ g - g) > 1e-9 or not target.contains(g, 1e-7):
                raise NotInvariant("projected generator left the cone; invariance fails")
        out.append(part)
    return out[0], out[1]


@dataclass
class LieWedge:
    """edge + cone: the set edge_span + nonnegative span of cone generators."""

    edge: np.ndarray
    cone: PolyhedralCone

    @property
    def ambient_dim(self) -> int:
        return self.cone.ambient_dim

    def member(self, x, tol: float = MEMBER_TOL) -> bool:
        x = np.asarray(x, dtype=float)
        Q = la.orth(self.edge)
        P = np.eye(self.ambient_dim) - Q @ Q.T
        quot = PolyhedralCone(self.ambient_dim, (P @ self.cone.generators.T).T if self.cone.n_generators else None)
        return cone_member(quot, P @ x, tol)

    def to_dict(self) -> dict:
        return {"edge": self.edge.tolist(), "edge_dim": int(self.edge.shape[1]),
                "cone_generators": self.cone.generators.tolist()}


def lie_wedge_LSW(g0_basis, C_plus: PolyhedralCone, C_minus: PolyhedralCone) -> LieWedge:
    """g_0 + C_+ + C_-."""
    gens = [G for G in (C_plus.generators, C_minus.generators) if G.size]
    G = np.vstack(gens) if gens else None
    return LieWedge(la.orth(g0_basis), PolyhedralCone(C_plus.ambient_dim, G, name="L(S_W)"))


# ---------------------------------------------------------------------------
# positive cone of a finite-dimensional representation


@dataclass
class FiniteDimRep:
    algebra: "liealg.LieAlgebra"
    images: np.ndarray

    def __post_init__(self):
        self.images = np.asarray(self.images, dtype=complex)
        if self.images.shape[0] != self.algebra.dim:
            raise DimensionMismatch("one image per basis element required")
        for i, A in enumerate(self.images):
            if np.linalg.norm(A + A.conj().T) > 1e-9 * max(1.0, np.linalg.norm(A)):
                raise NotSkewHermitian(f"image of basis element {i} is not skew-hermitian")
        worst = 0.0
        for i, j in itertools.combinations(range(self.algebra.dim), 2):
            lhs = self.images[i] @ self.images[j] - self.images[j] @ self.images[i]
            rhs = np.einsum("k,kab->ab", self.algebra.c[i, j], self.images)
            worst = max(worst, float(np.linalg.norm(lhs - rhs)))
        if worst > 1e-8:
            raise ValueError(f"images violate the bracket relations (residual {worst:.2e})")

    def __call__(self, x) -> np.ndarray:
        return np.einsum("i,iab->ab", self.algebra.element(x), self.images)


def positive_cone_member(rep: FiniteDimRep, x, tol: float = MEMBER_TOL) -> bool:
    """-i dU(x) >= 0."""
    A = rep(x)
    H = -1j * A
    if np.linalg.norm(H - H.conj().T) > 1e-9 * max(1.0, np.linalg.norm(H)):
        raise NotSkewHermitian("operator is not skew-hermitian")
    return bool(np.linalg.eigvalsh((H + H.conj().T) / 2).min() >= -tol)
