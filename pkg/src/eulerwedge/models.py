"""Grid models of two concrete representations.

* The U(1)-current one-particle space L^2(R_+, p dp) with the affine action
  (U(b, a)F)(p) = e^{ibp} a F(ap).
* The Aff(R) representations on L^2(R) generated by p-translations and
  multiplication by e^{+-i s e^p}.

Everything here is approximate.  Diagnostics are reported at two resolutions
so that acceptance can key off the refinement trend.

U(1) conventions
----------------
Nodes are p_j = e^{u_j} on a periodic, uniform grid in u = log p.  A function
F on R_+ is stored as G_j = sqrt(h) p_j F(p_j), which makes the l^2 norm of G
the quadrature value of int p |F|^2 dp and turns dilations into translations
in u.  The dilation generator is K = -i d/du, so Delta = e^{-2 pi K}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.integrate
import scipy.special
from numpy.polynomial import legendre

from . import _linalg as la
from . import stdsp
from .errors import (
    EmptyDictionary,
    GeneratorIllConditioned,
    PreconditionViolated,
    ResolutionTooCoarse,
)

MIN_NODES = 16
COND_LIMIT = 1e12
DEFAULT_KAPPA_MAX = 1.5


@dataclass
class Grid:
    variable: str  # "log" (p on R_+) or "linear" (p on R)
    nodes: np.ndarray
    weights: np.ndarray
    step: float

    def __post_init__(self):
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("grid nodes must be strictly increasing")
        if np.any(self.weights <= 0):
            raise ValueError("grid weights must be positive")

    @property
    def size(self) -> int:
        return self.nodes.size


# ---------------------------------------------------------------------------
# U(1)-current


@dataclass
class U1Current:
    grid: Grid
    u: np.ndarray
    kappa: np.ndarray = field(init=False)

    def __post_init__(self):
        self.kappa = 2 * np.pi * np.fft.fftfreq(self.N, d=self.h)

    @property
    def N(self) -> int:
        return self.grid.size

    @property
    def h(self) -> float:
        return self.grid.step

    @property
    def p(self) -> np.ndarray:
        return self.grid.nodes

    @property
    def period(self) -> float:
        return self.N * self.h

    # operators -----------------------------------------------------------
    def translation(self, b: float) -> np.ndarray:
        """Diagonal of U(b, 1)."""
        return np.exp(1j * b * self.p)

    def dilation_multiplier(self, a: float) -> np.ndarray:
        return np.exp(1j * self.kappa * np.log(a))

    def dilate(self, a: float, G) -> np.ndarray:
        """U(0, a) as a band-limited shift by log a in u."""
        G = np.asarray(G, dtype=complex)
        mult = self.dilation_multiplier(a)
        if G.ndim == 2:
            mult = mult[:, None]
        return np.fft.ifft(mult * np.fft.fft(G, axis=0), axis=0)

    def dilation(self, a: float) -> np.ndarray:
        return self.dilate(a, np.eye(self.N))

    def apply(self, b: float, a: float, G) -> np.ndarray:
        """U(b, a) = U(b, 1) U(0, a)."""
        out = self.dilate(a, G)
        t = self.translation(b)
        return t[:, None] * out if out.ndim == 2 else t * out

    def J(self, G) -> np.ndarray:
        return -np.conj(np.asarray(G, dtype=complex))

    def J_real(self) -> np.ndarray:
        return stdsp.antilinear(-np.eye(self.N))

    def K_symbol(self) -> np.ndarray:
        """Eigenvalue of the fourth-order difference generator on e^{i kappa u}."""
        kh = self.kappa * self.h
        return (8 * np.sin(kh) - np.sin(2 * kh)) / (6 * self.h)

    def K(self) -> np.ndarray:
        """-i d/du by periodic fourth-order central differences."""
        N, h = self.N, self.h
        D = np.zeros((N, N))
        for off, c in ((1, 8.0), (2, -1.0)):
            D += c * (np.eye(N, k=off) + np.eye(N, k=off - N))
            D -= c * (np.eye(N, k=-off) + np.eye(N, k=N - off))
        return -1j * D / (12 * h)

    # quadrature ----------------------------------------------------------
    def sample(self, F_hat) -> np.ndarray:
        """Grid vector of a function on R_+ (callable or values at the nodes)."""
        vals = F_hat(self.p) if callable(F_hat) else np.asarray(F_hat)
        return np.sqrt(self.h) * self.p * vals

    def inner(self, G1, G2) -> complex:
        return complex(np.vdot(G1, G2))

    def inner_product_1(self, f_hat, g_hat) -> complex:
        """sum h p^2 conj(f_hat) g_hat, the grid value of <f, g>_1."""
        return self.inner(self.sample(f_hat), self.sample(g_hat))

    # checks --------------------------------------------------------------
    def unitarity_defect(self, a: float) -> float:
        D = self.dilation(a)
        return float(np.linalg.norm(D.conj().T @ D - np.eye(self.N), 2))

    def interior_test_vector(self, width: float = 0.08) -> np.ndarray:
        """Smooth vector concentrated in the middle of the u-window."""
        c = self.u[0] + 0.5 * self.period
        G = np.exp(-((self.u - c) / (width * self.period)) ** 2 / 2).astype(complex)
        return G / np.linalg.norm(G)

    def group_law_residual(self, pairs: Sequence[tuple], G=None) -> float:
        """max over (b, a) of |U(0,a)U(b,1)U(0,a)^-1 G - U(ab,1) G| / |G|."""
        G = self.interior_test_vector() if G is None else G
        worst = 0.0
        for b, a in pairs:
            lhs = self.dilate(a, self.translation(b) * self.dilate(1 / a, G))
            rhs = self.translation(a * b) * G
            worst = max(worst, float(np.linalg.norm(lhs - rhs) / np.linalg.norm(G)))
        return worst

    def distribution_eigen_residual(self, k: int = 3) -> float:
        """U(0, e^t) 1 = e^t 1 for t = k h, checked node to node on interior nodes.

        The constant function F = 1 is not square integrable, so the check
        maps samples exactly rather than going through the periodic shift.
        """
        G = self.sample(lambda p: np.ones_like(p))
        t = k * self.h
        shifted = G[k:]  # G(u + t) on nodes 0..N-k-1
        return float(np.max(np.abs(shifted - np.exp(t) * G[:-k])) / np.max(np.abs(G)))


def build_u1_current(N: int = 512, p_min: float = 1e-4, p_max: float = 1e2) -> U1Current:
    if N < MIN_NODES:
        raise ResolutionTooCoarse(f"N = {N} is below the minimum of {MIN_NODES} nodes")
    if not 0 < p_min < p_max:
        raise ValueError("need 0 < p_min < p_max")
    u = np.linspace(np.log(p_min), np.log(p_max), N, endpoint=False)
    h = float(u[1] - u[0])
    p = np.exp(u)
    return U1Current(Grid("log", p, h * p * p, h), u)


def gaussian_hat(p, c: float = 0.0, s: float = 1.0):
    """Fourier transform int e^{ipx} f(x) dx of f(x) = exp(-(x - c)^2 / (2 s^2))."""
    p = np.asarray(p, dtype=float)
    return np.sqrt(2 * np.pi) * s * np.exp(1j * p * c - (s * p) ** 2 / 2)


def gaussian_inner_oracle(c1, s1, c2, s2) -> complex:
    """<f, g>_1 for two Gaussians by adaptive quadrature over p in (0, inf)."""
    def integrand(p, part):
        v = p * np.conj(gaussian_hat(p, c1, s1)) * gaussian_hat(p, c2, s2)
        return float(v.real if part == 0 else v.imag)

    re = scipy.integrate.quad(integrand, 0, np.inf, args=(0,), epsabs=1e-15, epsrel=1e-13, limit=400)[0]
    im = scipy.integrate.quad(integrand, 0, np.inf, args=(1,), epsabs=1e-15, epsrel=1e-13, limit=400)[0]
    return complex(re, im)


def inner_product_convergence(Ns=(16, 32, 64), p_min=1e-6, p_max=1e2,
                              gaussians=((0.0, 1.0), (0.3, 0.8))) -> dict:
    (c1, s1), (c2, s2) = gaussians
    exact = gaussian_inner_oracle(c1, s1, c2, s2)
    errs = []
    for N in Ns:
        ops = build_u1_current(N, p_min, p_max)
        val = ops.inner_product_1(lambda p: gaussian_hat(p, c1, s1), lambda p: gaussian_hat(p, c2, s2))
        errs.append(abs(val - exact))
    ratios = [errs[i + 1] / errs[i] if errs[i] > 0 else 0.0 for i in range(len(errs) - 1)]
    return {"N": list(Ns), "errors": errs, "ratios": ratios, "oracle": [exact.real, exact.imag]}


# ---------------------------------------------------------------------------
# BGL subspace on the grid


@dataclass
class GridSubspace:
    vectors: np.ndarray  # complex, one column per real basis vector
    kappas: np.ndarray
    residuals: np.ndarray

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def real_basis(self, tol: float = 1e-10) -> np.ndarray:
        return la.orth(stdsp.to_real(self.vectors), tol, relative=True)

    def real_subspace(self) -> stdsp.RealSubspace:
        return stdsp.RealSubspace.from_complex_vectors(self.vectors)


def _band(ops: U1Current, kappa_max: float) -> np.ndarray:
    return np.abs(ops.kappa) <= kappa_max + 1e-12


def delta_power_exact(ops: U1Current, G, s: float, kappa_max: float) -> np.ndarray:
    """Spectral Delta^s = e^{-2 pi s kappa} on vectors supported in |kappa| <= kappa_max."""
    c = np.fft.fft(np.asarray(G, dtype=complex))
    band = _band(ops, kappa_max)
    leak = np.linalg.norm(c[~band])
    if leak > 1e-9 * np.linalg.norm(c):
        raise ValueError(f"vector leaks outside the band |kappa| <= {kappa_max} ({leak:.1e})")
    out = np.zeros_like(c)
    out[band] = c[band] * np.exp(-2 * np.pi * s * ops.kappa[band])
    return np.fft.ifft(out)


def kms_residual_grid(ops: U1Current, xi, kappa_max: float) -> float:
    """|Delta^{1/2} xi - J xi| / |xi| with the spectral Delta^{1/2}."""
    lhs = delta_power_exact(ops, xi, 0.5, kappa_max)
    return float(np.linalg.norm(lhs - ops.J(xi)) / np.linalg.norm(xi))


def bgl_subspace_grid(ops: U1Current, kappa_max: float = DEFAULT_KAPPA_MAX) -> GridSubspace:
    """Fixed vectors of J Delta_K^{1/2} in the band |kappa| <= kappa_max.

    Delta_K = e^{-2 pi K} uses the difference generator K.  On a Fourier mode
    pair (kappa, -kappa) its fixed space is spanned by
    e^{i kappa u} - e^{-pi k} e^{-i kappa u} and i(e^{i kappa u} + e^{-pi k} e^{-i kappa u}),
    with k the discrete eigenvalue.  Residuals are measured against the
    exact spectral Delta^{1/2}, so they quantify the discretisation error.
    """
    ksym = ops.K_symbol()
    band = _band(ops, kappa_max)
    kmax = float(np.max(np.abs(ksym[band])))
    if np.exp(2 * np.pi * kmax) > COND_LIMIT:
        raise GeneratorIllConditioned(
            f"Delta condition number e^(2 pi {kmax:.3g}) exceeds {COND_LIMIT:g}; lower kappa_max"
        )
    cols, kap = [], []
    cols.append(1j * np.ones(ops.N))
    kap.append(0.0)
    for m in range(1, ops.N // 2):
        kappa = ops.kappa[m]
        if kappa > kappa_max + 1e-12:
            break
        plus, minus = np.exp(1j * kappa * ops.u), np.exp(-1j * kappa * ops.u)
        w = np.exp(-np.pi * ksym[m])
        cols += [plus - w * minus, 1j * (plus + w * minus)]
        kap += [kappa, kappa]
    vecs = np.column_stack(cols)
    vecs /= np.linalg.norm(vecs, axis=0)
    res = np.array([kms_residual_grid(ops, v, kappa_max) for v in vecs.T])
    return GridSubspace(vecs, np.array(kap), res)


def kms_trend(N: int = 512, kappa_max: float = DEFAULT_KAPPA_MAX, p_min=1e-4, p_max=1e2) -> dict:
    """Worst KMS residual at N and 2N over the same band."""
    vals = []
    for n in (N, 2 * N):
        V = bgl_subspace_grid(build_u1_current(n, p_min, p_max), kappa_max)
        vals.append(float(V.residuals.max()))
    ratio = vals[1] / vals[0] if vals[0] > 0 else 0.0
    return {"N": [N, 2 * N], "kms_residual": vals, "ratio": ratio, "improves": bool(ratio <= 0.5)}


# ---------------------------------------------------------------------------
# test-function subspaces H^(k)(O)

MAX_NODES_GL = 2000


@functools.lru_cache(maxsize=16)
def _gauss_legendre(Q: int):
    return scipy.special.roots_legendre(Q)


def _bump_transform(q, M: int) -> np.ndarray:
    """int_{-1}^{1} e^{iqx} P_j(x) exp(-1/(1-x^2)) dx for j < M, Gauss-Legendre.

    Values are zeroed where |q| exceeds what the node count resolves; the true
    transform is below 1e-20 there.
    """
    q = np.asarray(q, dtype=float)
    qmax = float(np.abs(q).max(initial=0.0))
    Q = int(min(MAX_NODES_GL, max(200, 1.5 * qmax + 64)))
    x, w = _gauss_legendre(Q)
    bump = np.exp(-1.0 / (1.0 - x * x))
    V = legendre.legvander(x, M - 1) * (w * bump)[:, None]
    out = np.exp(1j * np.outer(q, x)) @ V
    out[np.abs(q) > (Q - 64) / 1.5] = 0.0
    return out


def _intervals(O) -> list:
    if O is None:
        raise EmptyDictionary("no interval given")
    O = [tuple(O)] if np.isscalar(O[0]) else [tuple(I) for I in O]
    out = []
    for a, b in O:
        if not (np.isfinite(a) and np.isfinite(b)):
            raise ValueError("intervals must be bounded; use half_line_study for half-lines")
        if b > a:
            out.append((float(a), float(b)))
    if not out:
        raise EmptyDictionary("all intervals are empty")
    return out


def dictionary_vectors(ops: U1Current, O, k: int, M: int) -> np.ndarray:
    """Grid vectors of f^{(k-1)} for f = P_j bump on each interval of O."""
    if M < 1:
        raise EmptyDictionary("dictionary size M must be positive")
    if k < 1:
        raise ValueError("derivative order k must be >= 1")
    cols = []
    for a, b in _intervals(O):
        c, half = (a + b) / 2, (b - a) / 2
        F = _bump_transform(half * ops.p, M) * (half * np.exp(1j * ops.p * c))[:, None]
        cols.append(F)
    F = np.hstack(cols)
    weight = np.sqrt(ops.h) * ops.p * (-1j * ops.p) ** (k - 1)
    return weight[:, None] * F


@dataclass
class TestFunctionSpace:
    vectors: np.ndarray
    basis: np.ndarray  # orthonormal, realified
    singular_values: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def test_function_subspace(ops: U1Current, O, k: int, M: int = 20, rel_cut: float = 1e-10) -> TestFunctionSpace:
    vecs = dictionary_vectors(ops, O, k, M)
    A = stdsp.to_real(vecs)
    s = la.singular_values(A)
    if s.size == 0 or s[0] == 0:
        raise EmptyDictionary("dictionary vanishes on the grid")
    return TestFunctionSpace(vecs, la.orth(A, rel_cut, relative=True), s)


def _quotient_profile(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    R = X - Y @ (Y.T @ X)
    return la.singular_values(R)


def codimension_profile(ops: U1Current, O, k: int, l: int, M_k: int = 20, M_l: int = 40,
                        rel_cut: float = 1e-10, cut: float = 1e-3) -> dict:
    """Singular values of H^(k)(O) modulo H^(l)(O).

    The expected codimension for a bounded interval is l - k.  The gap ratio is
    s[l-k-1] / s[l-k] and the estimate counts values above ``cut * s[0]``; the
    leading profile is returned so the cut is auditable.
    """
    if l <= k:
        raise ValueError("need l > k")
    X = test_function_subspace(ops, O, k, M_k, rel_cut).basis
    Y = test_function_subspace(ops, O, l, M_l, rel_cut).basis
    s = _quotient_profile(X, Y)
    expected = l - k
    top = s[: min(12, s.size)]
    estimate = int(np.sum(s > cut * s[0]))
    gap = float(s[expected - 1] / max(s[expected], 1e-300)) if s.size > expected else float("inf")
    return {"k": k, "l": l, "expected": expected, "estimate": estimate, "gap_ratio": gap,
            "profile": top.tolist(), "dim_k": X.shape[1], "dim_l": Y.shape[1]}


def half_line_study(ops: U1Current, lengths: Iterable[float] = (2, 4, 8, 16, 32), M: int = 30) -> dict:
    """Distance of H^(1)((0,1)) from H^(2)((0,L)) as L grows.

    H^(2)((0, L)) contains H^(2)((0, 1)) and psi_1 - psi_L, where psi_1 is a
    bump on (0, 1) and psi_L the bump on (1, L) with the same integral.  The
    leftover is the moment direction, whose distance is of order 1/L; on the
    half line it closes, which is the statement H^(2) = H^(1) there.
    """
    X = test_function_subspace(ops, (0, 1), 1, M).basis
    Y0 = dictionary_vectors(ops, (0, 1), 2, 2 * M)
    psi1 = dictionary_vectors(ops, (0, 1), 1, 1)[:, 0]
    out = []
    for L in lengths:
        psiL = dictionary_vectors(ops, (1, L), 1, 1)[:, 0]
        # first node sits at p ~ p_min, where psi-hat(p) ~ int psi
        r = psi1[0] / psiL[0]
        Y = la.orth(stdsp.to_real(np.column_stack([Y0, psi1 - r * psiL])), 1e-10, relative=True)
        out.append(float(_quotient_profile(X, Y)[0]))
    L = np.asarray(list(lengths), dtype=float)
    slope = float(np.polyfit(np.log(L), np.log(out), 1)[0])
    return {"L": L.tolist(), "distance": out, "loglog_slope": slope,
            "decreasing": bool(np.all(np.diff(out) < 0))}


# ---------------------------------------------------------------------------
# regularity


def regularity_demo(ops: U1Current, sample: Sequence[tuple], radii: Sequence[float] = (1.0, 0.3, 0.1, 0.03),
                    kappa_max: float = DEFAULT_KAPPA_MAX, tol: float = 1e-3) -> dict:
    """Approximate dimension of V_N = cap_{g in N} U(g) V as N shrinks.

    V is the band-limited grid BGL subspace and the intersection is taken at a
    loose tolerance, since U(g) moves V slightly out of the band.  Only the
    trajectory is reported.
    """
    V = bgl_subspace_grid(ops, kappa_max)
    base = V.real_basis()
    traj = []
    for r in radii:
        nbhd = [(b, a) for b, a in sample if abs(b) <= r and abs(np.log(a)) <= r]
        Q = base
        for b, a in nbhd:
            if Q.shape[1] == 0:
                break
            B = la.orth(stdsp.to_real(ops.apply(b, a, V.vectors)), 1e-10, relative=True)
            U, s, _ = np.linalg.svd(Q.T @ B, full_matrices=False)
            Q = Q @ U[:, s > 1 - tol]
        rc = la.rank(np.hstack([Q, stdsp.realify(1j * np.eye(ops.N)) @ Q]), tol) if Q.shape[1] else 0
        traj.append({"radius": r, "n_elements": len(nbhd), "dim_V_N": int(Q.shape[1]),
                     "complex_rank": int(rc // 2) if rc else 0})
    return {"dim_V": base.shape[1], "trajectory": traj}


# ---------------------------------------------------------------------------
# Aff(R) on L^2(R)


@dataclass
class AffRep:
    grid: Grid
    sign: int = 1

    @property
    def N(self) -> int:
        return self.grid.size

    @property
    def h(self) -> float:
        return self.grid.step

    @property
    def p(self) -> np.ndarray:
        return self.grid.nodes

    def shift(self, f, t: float, margin: float = 0.0) -> np.ndarray:
        """(U(t) f)(p) = f(p + t) with zero fill, linear interpolation off-grid.

        Mass within ``margin`` of the edge the function moves towards would be
        lost, which is refused.
        """
        f = np.asarray(f, dtype=complex)
        if margin > 0:
            edge = self.p < self.p[0] + abs(t) + margin if t > 0 else self.p > self.p[-1] - abs(t) - margin
            if np.linalg.norm(f[edge]) > 1e-12 * max(np.linalg.norm(f), 1e-300):
                raise PreconditionViolated("support margin", "test function too close to the grid edge")
        k = t / self.h
        if abs(k - round(k)) < 1e-12:
            k = int(round(k))
            out = np.zeros_like(f)
            if k >= 0:
                out[: self.N - k] = f[k:]
            else:
                out[-k:] = f[: self.N + k]
            return out
        re = np.interp(self.p + t, self.p, f.real, left=0.0, right=0.0)
        im = np.interp(self.p + t, self.p, f.imag, left=0.0, right=0.0)
        return re + 1j * im

    def x_generator(self) -> np.ndarray:
        """Diagonal of the generator of s -> e^{+-i s e^p}."""
        return self.sign * 1j * np.exp(self.p)

    def x_flow(self, s: float) -> np.ndarray:
        return np.exp(self.sign * 1j * s * np.exp(self.p))

    def apply(self, s: float, t: float, f) -> np.ndarray:
        return self.x_flow(s) * self.shift(f, t)

    def D(self) -> np.ndarray:
        """d/dp by central differences with Dirichlet ends."""
        N = self.N
        return (np.eye(N, k=1) - np.eye(N, k=-1)) / (2 * self.h)

    def packet(self, p0: float, k0: float, sigma: float) -> np.ndarray:
        f = np.exp(-((self.p - p0) / sigma) ** 2 / 2 + 1j * k0 * self.p)
        return f / np.linalg.norm(f)


def build_aff_rep(N: int = 1024, p_range: float = 16.0, sign: int = 1) -> AffRep:
    if N < MIN_NODES:
        raise ResolutionTooCoarse(f"N = {N} is below the minimum of {MIN_NODES} nodes")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    p = np.linspace(-p_range, p_range, N)
    h = float(p[1] - p[0])
    if h > 0.5:
        raise ResolutionTooCoarse(f"grid step {h:.3g} is too coarse for the x-generator")
    return AffRep(Grid("linear", p, np.full(N, h), h), sign)


def spectral_flatness(rep: AffRep, packets=((0.0, 0.0), (-4.0, 3.0), (4.0, -3.0)), sigma: float = 0.25,
                      boundary: float = 0.05, threshold: float = 0.05) -> dict:
    """Spectral weights of localized packets over the eigenvectors of i d/dp.

    Eigenvectors in the outer ``boundary`` fraction of the spectrum are the
    boundary bins and are skipped.  The test passes when no remaining
    eigenvector carries more than ``threshold`` of any packet.
    """
    H = 1j * rep.D()
    evals, evecs = np.linalg.eigh(H)
    n_cut = int(np.ceil(boundary * rep.N))
    inner = np.zeros(rep.N, dtype=bool)
    inner[n_cut: rep.N - n_cut] = True
    worst = []
    for p0, k0 in packets:
        w = np.abs(evecs.conj().T @ rep.packet(p0, k0, sigma)) ** 2
        worst.append(float(w[inner].max()))
    m = max(worst)
    return {"max_weight": m, "per_packet": worst, "threshold": threshold, "passed": bool(m < threshold)}


def commutator_residual(rep: AffRep, p0: float = 0.0, sigma: float = 0.5) -> float:
    """|[d/dp, X] f - X f| / |X f| on a packet, with X the x-generator."""
    f = rep.packet(p0, 0.0, sigma)
    X = rep.x_generator()
    D = rep.D()
    lhs = D @ (X * f) - X * (D @ f)
    return float(np.linalg.norm(lhs - X * f) / np.linalg.norm(X * f))


def aff_group_law_residual(rep: AffRep, pairs: Sequence[tuple], sigma: float = 0.5) -> float:
    """U(t) X(s) U(-t) = X(e^t s) on an interior packet, t a multiple of the step."""
    f = rep.packet(0.0, 0.0, sigma)
    worst = 0.0
    for s, k in pairs:
        t = k * rep.h
        lhs = rep.shift(rep.x_flow(s) * rep.shift(f, -t), t)
        rhs = rep.x_flow(np.exp(t) * s) * f
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return worst


def aff_trend(N: int = 512, p_range: float = 16.0) -> dict:
    vals, flat = [], []
    for n in (N, 2 * N):
        rep = build_aff_rep(n, p_range)
        vals.append(commutator_residual(rep))
        flat.append(spectral_flatness(rep))
    ratio = vals[1] / vals[0]
    return {"N": [N, 2 * N], "commutator_residual": vals, "ratio": ratio, "improves": bool(ratio <= 0.5),
            "flatness": flat}


def codimension_report(N: int = 1024, p_min: float = 1e-4, p_max: float = 300.0, O=(-1.0, 1.0),
                       pairs=((1, 2), (1, 3), (2, 3)), M_k: int = 20, M_l: int = 40) -> dict:
    ops = build_u1_current(N, p_min, p_max)
    rows = [codimension_profile(ops, O, k, l, M_k, M_l) for k, l in pairs]
    return {"N": N, "interval": list(O), "pairs": rows}
