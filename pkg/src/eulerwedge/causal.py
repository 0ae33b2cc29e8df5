"""Minkowski and de Sitter wedges for the boost in the (x0, x1)-plane.

Points are coordinate vectors (x0, x1, ..., xd) with the metric
diag(1, -1, ..., -1).  De Sitter space is the hyperboloid
x1^2 + ... + xd^2 - x0^2 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.linalg

from .errors import EmptyRegionSample, InvariantViolation, NotOnManifold, NotProper

MANIFOLD_TOL = 1e-9


def eta(n: int) -> np.ndarray:
    return np.diag([1.0] + [-1.0] * (n - 1))


def minkowski_inner(x, y) -> float:
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return float(x[0] * y[0] - x[1:] @ y[1:])


def in_wedge_WR(x):
    """|x0| < x1.  A 2-d array of points gives a boolean array."""
    x = np.asarray(x, dtype=float)
    if x.ndim == 2:
        return np.abs(x[:, 0]) < x[:, 1]
    return bool(abs(x[0]) < x[1])


def in_closed_wedge_WR(x, tol: float = 0.0):
    x = np.asarray(x, dtype=float)
    if x.ndim == 2:
        return np.abs(x[:, 0]) <= x[:, 1] + tol
    return bool(abs(x[0]) <= x[1] + tol)


def boost_generator(n: int) -> np.ndarray:
    """h(x0, x1, ...) = (x1, x0, 0, ..., 0)."""
    B = np.zeros((n, n))
    B[0, 1] = B[1, 0] = 1.0
    return B


def boost(t: float, n: int) -> np.ndarray:
    L = np.eye(n)
    L[0, 0] = L[1, 1] = np.cosh(t)
    L[0, 1] = L[1, 0] = np.sinh(t)
    return L


def flow(t: float, m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return boost(t, m.shape[0]) @ m


def modular_vector_field(m, h_kind: str = "boost_01") -> np.ndarray:
    if h_kind != "boost_01":
        raise ValueError(f"unsupported generator {h_kind!r}; only boost_01 is built in")
    m = np.asarray(m, dtype=float)
    return boost_generator(m.shape[0]) @ m


def modular_vector_field_fd(m, step: float = 1e-6) -> np.ndarray:
    """Central difference of t -> exp(t h).m at t = 0."""
    return (flow(step, m) - flow(-step, m)) / (2 * step)


def on_de_sitter(m, tol: float = MANIFOLD_TOL) -> bool:
    m = np.asarray(m, dtype=float)
    return bool(abs(m[1:] @ m[1:] - m[0] ** 2 - 1.0) <= tol * max(1.0, m @ m))


def _require_dS(m, tol=MANIFOLD_TOL):
    if not on_de_sitter(m, tol):
        raise NotOnManifold(f"point {np.asarray(m).tolist()} is not on de Sitter space")


def in_open_forward_cone(v, tol: float = 0.0) -> bool:
    v = np.asarray(v, dtype=float)
    return bool(v[0] - np.linalg.norm(v[1:]) > tol)


def positivity_region_member(space: str, m, tol: float = 1e-12) -> bool:
    """The modular vector field at m is future timelike (and tangent, on de Sitter)."""
    m = np.asarray(m, dtype=float)
    X = modular_vector_field(m)
    if space == "minkowski":
        return in_open_forward_cone(X, tol)
    if space in ("deSitter", "desitter", "dS"):
        _require_dS(m)
        if abs(minkowski_inner(X, m)) > 1e-10 * max(1.0, m @ m):
            raise NotOnManifold("modular vector field is not tangent")
        return in_open_forward_cone(X, tol)
    raise ValueError(f"unknown space {space!r}")


def wedge_region_dS_member(m) -> bool:
    _require_dS(m)
    return in_wedge_WR(m)


def de_sitter_point(x0: float, direction) -> np.ndarray:
    """Point on dS with time coordinate x0 and spatial direction ``direction``."""
    u = np.asarray(direction, dtype=float)
    u = u / np.linalg.norm(u)
    return np.concatenate([[x0], np.sqrt(1.0 + x0 * x0) * u])


def sample_de_sitter(d: int, n: int, seed: int = 0, t_max: float = 3.0) -> np.ndarray:
    """n points on dS^d: x0 uniform in [-t_max, t_max], spatial direction uniform."""
    rng = np.random.default_rng(seed)
    x0 = rng.uniform(-t_max, t_max, n)
    u = rng.standard_normal((n, d))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return np.hstack([x0[:, None], np.sqrt(1 + x0 ** 2)[:, None] * u])


def timelike_component(m) -> int:
    """+1 / -1 for the two components of {X_h timelike}, 0 where X_h is not timelike.

    The components are {x1 > |x0|} and {x1 < -|x0|}; on de Sitter space they
    are swapped by (x0, x1) -> (-x0, -x1).
    """
    X = modular_vector_field(m)
    if in_open_forward_cone(X):
        return 1
    if in_open_forward_cone(-X):
        return -1
    return 0


# ---------------------------------------------------------------------------
# Poincare group


@dataclass
class IsometryElement:
    lorentz: np.ndarray
    translation: Optional[np.ndarray] = None

    def __post_init__(self):
        self.lorentz = np.asarray(self.lorentz, dtype=float)
        n = self.lorentz.shape[0]
        self.translation = np.zeros(n) if self.translation is None else np.asarray(self.translation, dtype=float)
        E = eta(n)
        if np.linalg.norm(self.lorentz.T @ E @ self.lorentz - E) > 1e-9 * max(1.0, np.linalg.norm(self.lorentz) ** 2):
            raise InvariantViolation("Lorentz part does not preserve the Minkowski metric")

    @property
    def dim(self) -> int:
        return self.lorentz.shape[0]

    @property
    def proper(self) -> bool:
        return bool(np.linalg.det(self.lorentz) > 0)

    @property
    def orthochronous(self) -> bool:
        return bool(self.lorentz[0, 0] > 0)

    def apply(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.ndim == 2:
            return x @ self.lorentz.T + self.translation
        return self.lorentz @ x + self.translation

    def __matmul__(self, other: "IsometryElement") -> "IsometryElement":
        return IsometryElement(self.lorentz @ other.lorentz, self.lorentz @ other.translation + self.translation)

    def inverse(self) -> "IsometryElement":
        Li = eta(self.dim) @ self.lorentz.T @ eta(self.dim)
        return IsometryElement(Li, -Li @ self.translation)

    def affine(self) -> np.ndarray:
        n = self.dim
        A = np.eye(n + 1)
        A[:n, :n] = self.lorentz
        A[:n, n] = self.translation
        return A

    @classmethod
    def from_affine(cls, A) -> "IsometryElement":
        A = np.asarray(A, dtype=float)
        n = A.shape[0] - 1
        return cls(A[:n, :n], A[:n, n])

    @classmethod
    def translation_by(cls, v) -> "IsometryElement":
        v = np.asarray(v, dtype=float)
        return cls(np.eye(v.shape[0]), v)

    @classmethod
    def from_generator(cls, X, v=None) -> "IsometryElement":
        """exp of a Lorentz generator X, followed by translation v."""
        return cls(scipy.linalg.expm(np.asarray(X, dtype=float)), v)


def rotation(n: int, i: int, j: int, angle: float) -> np.ndarray:
    """Rotation by ``angle`` in the spatial (x_i, x_j)-plane, i, j >= 1."""
    R = np.eye(n)
    c, s = np.cos(angle), np.sin(angle)
    R[i, i] = R[j, j] = c
    R[i, j], R[j, i] = -s, s
    return R


def in_wedge_stabilizer(L, tol: float = 1e-9) -> bool:
    """L lies in SO(1,1)^ x SO(rotations of x2..xd)."""
    L = np.asarray(L, dtype=float)
    if np.abs(L[:2, 2:]).max(initial=0.0) > tol or np.abs(L[2:, :2]).max(initial=0.0) > tol:
        return False
    B = L[:2, :2]
    if B[0, 0] <= 0 or abs(np.linalg.det(B) - 1) > tol or abs(B[0, 0] - B[1, 1]) > tol or abs(B[0, 1] - B[1, 0]) > tol:
        return False
    R = L[2:, 2:]
    if R.size == 0:
        return True
    return bool(np.linalg.norm(R.T @ R - np.eye(R.shape[0])) <= tol and np.linalg.det(R) > 0)


def compression_member_poincare(g: IsometryElement, tol: float = 1e-9) -> bool:
    """g W_R is contained in W_R: translation in the closed wedge, Lorentz part in the stabilizer."""
    if not (g.proper and g.orthochronous):
        raise NotProper("element is not in the proper orthochronous Poincare group")
    return in_closed_wedge_WR(g.translation, tol) and in_wedge_stabilizer(g.lorentz, tol)


@dataclass
class CompressionVerdict:
    consistent: bool
    point: Optional[np.ndarray] = None
    image: Optional[np.ndarray] = None
    n_checked: int = 0

    @property
    def kind(self) -> str:
        return "ConsistentIn" if self.consistent else "WitnessOut"

    def to_dict(self) -> dict:
        out = {"verdict": self.kind, "n_checked": self.n_checked}
        if self.point is not None:
            out["point"] = self.point.tolist()
            out["image"] = self.image.tolist()
        return out


def _mask(region: Callable, pts: np.ndarray) -> np.ndarray:
    """Evaluate ``region`` on many points, in one call when it accepts arrays."""
    try:
        m = np.asarray(region(pts))
        if m.shape == (pts.shape[0],) and m.dtype == bool:
            return m
    except (ValueError, TypeError, IndexError):
        pass
    return np.array([bool(region(p)) for p in pts], dtype=bool)


def sample_region(region: Callable, n_dim: int, n: int, seed: int = 0, box: float = 5.0,
                  max_draws: int = 100) -> np.ndarray:
    """n points of ``region`` by rejection from the cube [-box, box]^n_dim."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    pts = []
    count = 0
    for _ in range(max_draws):
        cand = rng.uniform(-box, box, (max(4 * n, 64), n_dim))
        keep = cand[_mask(region, cand)]
        pts.append(keep)
        count += keep.shape[0]
        if count >= n:
            return np.vstack(pts)[:n]
    if count == 0:
        raise EmptyRegionSample("no sample point landed in the region")
    return np.vstack(pts)


def sampled_compression_check(g: IsometryElement, region: Callable = in_wedge_WR, n: int = 10_000,
                              seed: int = 0, box: float = 5.0) -> CompressionVerdict:
    pts = sample_region(region, g.dim, n, seed, box)
    imgs = g.apply(pts)
    out = np.flatnonzero(~_mask(region, imgs))
    if out.size:
        k = out[0]
        return CompressionVerdict(False, pts[k], imgs[k], len(pts))
    return CompressionVerdict(True, n_checked=len(pts))
