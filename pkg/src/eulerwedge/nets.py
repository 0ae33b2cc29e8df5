"""Maximal and minimal nets of real subspaces over a finite family of wedges.

With a finite family ``{g_1, ..., g_m}`` the intersection defining
``H^max(O)`` runs over fewer wedges than in the continuum, so the result can
only be too large; dually ``H^min(O)`` can only be too small.

Regions are described by :class:`Region`.  Inclusions between wedges and
double cones in Minkowski space are decided exactly; anything else is
sampled, and a sample that falls within ``margin`` of the boundary makes the
verdict :class:`AmbiguousInclusion`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import causal, stdsp
from . import _linalg as la
from .errors import AmbiguousInclusion, PreconditionViolated
from .stdsp import AntiUnitaryOp, RealSubspace


@dataclass
class Region:
    """A region of Minkowski space.

    ``kind`` is ``"wedge"`` (the image g.W_R, ``element`` = g), ``"double_cone"``
    (``tips`` = (past tip, future tip)), ``"empty"``, ``"everything"`` or
    ``"sampled"`` (``predicate`` and ``sampler`` required; ``margin`` optional,
    positive inside).
    """

    kind: str
    dim: int
    element: Optional[causal.IsometryElement] = None
    tips: Optional[tuple] = None
    predicate: Optional[Callable[[np.ndarray], bool]] = None
    sampler: Optional[Callable[[int, np.random.Generator], np.ndarray]] = None
    margin: Optional[Callable[[np.ndarray], float]] = None
    label: str = ""

    def contains_point(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        if self.kind == "wedge":
            return causal.in_wedge_WR(self.element.inverse().apply(x))
        if self.kind == "double_cone":
            lo, hi = self.tips
            return _in_open_diamond(x, lo, hi)
        if self.kind == "empty":
            return False
        if self.kind == "everything":
            return True
        return bool(self.predicate(x))

    def moved(self, g: causal.IsometryElement) -> "Region":
        if self.kind == "wedge":
            return wedge_region(g @ self.element, self.label)
        if self.kind == "double_cone":
            return Region("double_cone", self.dim, tips=(g.apply(self.tips[0]), g.apply(self.tips[1])), label=self.label)
        if self.kind in ("empty", "everything"):
            return self
        gi = g.inverse()
        pred, samp, marg = self.predicate, self.sampler, self.margin
        return Region(
            "sampled", self.dim,
            predicate=lambda x: pred(gi.apply(x)),
            sampler=(lambda n, rng: g.apply(samp(n, rng))) if samp else None,
            margin=(lambda x: marg(gi.apply(x))) if marg else None,
            label=self.label,
        )

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if self.kind == "wedge":
            pts = causal.sample_region(causal.in_wedge_WR, self.dim, n, int(rng.integers(2**31)))
            return self.element.apply(pts)
        if self.sampler is not None:
            return self.sampler(n, rng)
        raise ValueError(f"region of kind {self.kind!r} has no sampler")


def _causal_le(a, b, tol=0.0) -> bool:
    d = np.asarray(b) - np.asarray(a)
    return bool(d[0] + tol >= np.linalg.norm(d[1:]))


def _in_open_diamond(x, lo, hi) -> bool:
    d1, d2 = np.asarray(x) - lo, hi - np.asarray(x)
    return bool(d1[0] > np.linalg.norm(d1[1:]) and d2[0] > np.linalg.norm(d2[1:]))


def wedge_region(g: Optional[causal.IsometryElement] = None, label: str = "", dim: int = None) -> Region:
    if g is None:
        g = causal.IsometryElement(np.eye(dim))
    return Region("wedge", g.dim, element=g, label=label or "gW")


def double_cone(center, radius: float, label: str = "") -> Region:
    c = np.asarray(center, dtype=float)
    e0 = np.zeros_like(c)
    e0[0] = radius
    return Region("double_cone", c.shape[0], tips=(c - e0, c + e0), label=label or "D")


def _wedge_contains_points(g: causal.IsometryElement, pts, tol=1e-12) -> bool:
    gi = g.inverse()
    return all(causal.in_closed_wedge_WR(gi.apply(p), tol) for p in pts)


def included(O1: Region, O2: Region, n: int = 2000, seed: int = 0, margin: float = 1e-6) -> bool:
    """O1 is a subset of O2."""
    if O1.kind == "empty" or O2.kind == "everything":
        return True
    if O2.kind == "empty":
        return False
    if O1.kind == "everything":
        return False
    if O2.kind == "wedge":
        if O1.kind == "wedge":
            rel = O2.element.inverse() @ O1.element
            return causal.compression_member_poincare(rel)
        if O1.kind == "double_cone":
            # wedges are causally convex: the open diamond lies inside iff its tips are in the closure
            return _wedge_contains_points(O2.element, O1.tips)
    if O2.kind == "double_cone":
        if O1.kind == "wedge":
            return False
        if O1.kind == "double_cone":
            lo, hi = O2.tips
            return _causal_le(lo, O1.tips[0], 1e-12) and _causal_le(O1.tips[1], hi, 1e-12)
    return _sampled_inclusion(O1, O2, n, seed, margin)


def _sampled_inclusion(O1: Region, O2: Region, n, seed, margin) -> bool:
    rng = np.random.default_rng(seed)
    pts = O1.sample(n, rng)
    ambiguous = False
    for p in pts:
        inside = O2.contains_point(p)
        m = O2.margin(p) if O2.margin is not None else None
        if not inside:
            if m is None or m < -margin:
                return False
            ambiguous = True
        elif m is not None and m < margin:
            ambiguous = True
    if ambiguous:
        raise AmbiguousInclusion(f"samples of {O1.label or O1.kind} lie within {margin} of the boundary of {O2.label or O2.kind}")
    return True


# ---------------------------------------------------------------------------
# configurations


@dataclass
class WedgeFamily:
    """The wedge regions g.W_R, g in ``elements``."""

    elements: List[causal.IsometryElement]
    labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"g{i}" for i in range(len(self.elements))]

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def region_of(self, i: int) -> Region:
        return wedge_region(self.elements[i], self.labels[i])

    @property
    def base_region(self) -> Region:
        return wedge_region(dim=self.dim, label="W")


def _same_element(a: causal.IsometryElement, b: causal.IsometryElement, tol=1e-9) -> bool:
    return bool(np.linalg.norm(a.affine() - b.affine()) <= tol)


@dataclass
class NetConfig:
    family: WedgeFamily
    rep: List[AntiUnitaryOp]
    V: RealSubspace
    n_samples: int = 2000
    seed: int = 0

    def __post_init__(self):
        if len(self.rep) != len(self.family.elements):
            raise ValueError("need one operator per family element")
        self.check_homomorphism()

    def index_of(self, g: causal.IsometryElement) -> Optional[int]:
        for i, h in enumerate(self.family.elements):
            if _same_element(g, h):
                return i
        return None

    def check_homomorphism(self, tol: float = 1e-9):
        els = self.family.elements
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                k = self.index_of(a @ b)
                if k is None:
                    continue
                lhs = self.rep[i].matrix @ self.rep[j].matrix
                if np.linalg.norm(lhs - self.rep[k].matrix) > tol * lhs.shape[0]:
                    raise PreconditionViolated("Hom", f"U({self.family.labels[i]})U({self.family.labels[j]}) != U(product)")


def _qualifying(cfg: NetConfig, O: Region, outer: bool) -> List[int]:
    out = []
    for i in range(len(cfg.family.elements)):
        Wg = cfg.family.region_of(i)
        ok = included(O, Wg, cfg.n_samples, cfg.seed) if outer else included(Wg, O, cfg.n_samples, cfg.seed)
        if ok:
            out.append(i)
    return out


def h_max(cfg: NetConfig, O: Region) -> RealSubspace:
    """Intersection of U(g)V over family members with O inside gW (whole space if none)."""
    idx = _qualifying(cfg, O, outer=True)
    return stdsp.intersect_family(cfg.V, [cfg.rep[i] for i in idx])


def h_min(cfg: NetConfig, O: Region) -> RealSubspace:
    """Span of U(g)V over family members with gW inside O ({0} if none)."""
    idx = _qualifying(cfg, O, outer=False)
    n = cfg.V.n
    if not idx:
        return stdsp.zero_subspace(n)
    return RealSubspace(n, la.add([cfg.rep[i].matrix @ cfg.V.basis for i in idx], stdsp.TOL))


# ---------------------------------------------------------------------------
# reports


def direct_net_report(cfg: NetConfig) -> Dict:
    """Verdicts (i)-(vii) of the equivalence for the base wedge W.

    (i) is tested on the family members that compress W; with a finite
    family a True for (i) certifies (ii) and (v) only relative to the family.
    """
    W = cfg.family.base_region
    V = cfg.V
    compressors = _qualifying(cfg, W, outer=False)
    violator = None
    for i in compressors:
        if not la.contains(V.basis, cfg.rep[i].matrix @ V.basis, 1e-8):
            violator = cfg.family.labels[i]
            break
    Hmax, Hmin = h_max(cfg, W), h_min(cfg, W)
    verdicts = {
        "i_SW_in_SV": violator is None,
        "ii_hmax_eq_V": Hmax.equals(V),
        "iii_hmax_standard": stdsp.is_standard(Hmax),
        "iv_hmax_cyclic": stdsp.is_cyclic(Hmax),
        "v_hmin_eq_V": Hmin.equals(V),
        "vi_hmin_standard": stdsp.is_standard(Hmin),
        "vii_hmin_separating": stdsp.is_separating(Hmin),
    }
    values = set(verdicts.values())
    return {
        "verdicts": verdicts,
        "consistent": len(values) == 1,
        "counterexample": violator,
        "compressors": [cfg.family.labels[i] for i in compressors],
        "hmax_dim": Hmax.dim,
        "hmin_dim": Hmin.dim,
        "note": "finite family: (i) is checked only on listed compressors",
    }


def sandwich_check(cfg: NetConfig, H: Callable[[Region], RealSubspace], probes: Sequence[Region] = ()) -> bool:
    """h_min(O) <= H(O) <= h_max(O) on all probed regions, after checking the axioms.

    The axioms are tested on the family wedge regions plus ``probes``:
    (Iso) H(O1) <= H(O2) whenever O1 <= O2, (Cov) H(gO) = U(g)H(O) for
    family members g, and H(W) = V.
    """
    W = cfg.family.base_region
    regions = [cfg.family.region_of(i) for i in range(len(cfg.family.elements))] + list(probes)
    values = [H(O) for O in regions]
    if not H(W).equals(cfg.V, 1e-8):
        raise PreconditionViolated("H(W)=V")
    for a, Oa in enumerate(regions):
        for b, Ob in enumerate(regions):
            if a != b and included(Oa, Ob, cfg.n_samples, cfg.seed):
                if not values[b].contains(values[a], 1e-8):
                    raise PreconditionViolated("Iso", f"{Oa.label} <= {Ob.label} but H is not monotone")
    for i, g in enumerate(cfg.family.elements):
        for a, Oa in enumerate(regions):
            if Oa.kind != "wedge":
                continue
            moved = Oa.moved(g)
            for b, Ob in enumerate(regions):
                if Ob.kind == "wedge" and _same_element(Ob.element, moved.element):
                    if not values[b].equals(cfg.rep[i].apply(values[a]), 1e-8):
                        raise PreconditionViolated("Cov", f"H({cfg.family.labels[i]}.{Oa.label}) != U(g)H(O)")
    for O, val in zip(regions, values):
        if not (val.contains(h_min(cfg, O), 1e-8) and h_max(cfg, O).contains(val, 1e-8)):
            return False
    return True


def regularity_probe(V: RealSubspace, ops: Sequence[AntiUnitaryOp], tol: float = stdsp.TOL) -> Dict:
    VN = stdsp.intersect_family(V, ops, tol)
    I = stdsp.complex_structure(V.n)
    r = la.rank(np.hstack([VN.basis, I @ VN.basis]), tol)
    return {"cyclic_rank": r, "regular": r == 2 * V.n, "dim_VN": VN.dim}


def degeneracy_report(V: RealSubspace, ops: Sequence[AntiUnitaryOp], tol: float = stdsp.TOL) -> Dict:
    """V_G (intersection over ops) against V n V'."""
    VG = stdsp.intersect_family(V, ops, tol)
    Vp = stdsp.symplectic_complement(V)
    VV = RealSubspace(V.n, la.intersect([V.basis, Vp.basis], tol, m=2 * V.n))
    return {"V_G": VG, "V_cap_Vprime": VV, "equals_V_cap_Vprime": VG.equals(VV, 1e-8),
            "dim_V_G": VG.dim, "dim_V_cap_Vprime": VV.dim}


# ---------------------------------------------------------------------------
# toy configurations on R^{1,1}


def toy_family(d: int = 2):
    """Boosts, wedge translations and their inverses in R^{1,d-1}."""
    E = lambda v: causal.IsometryElement.translation_by(v)  # noqa: E731
    B = lambda t: causal.IsometryElement(causal.boost(t, d))  # noqa: E731
    e = lambda *c: np.array(list(c) + [0.0] * (d - len(c)))  # noqa: E731
    els = [causal.IsometryElement(np.eye(d)), B(0.5), B(-0.5), E(e(0, 1)), E(e(0.5, 1)), E(e(0, -1)), E(e(-0.5, -1)),
           E(e(1, 0))]
    labels = ["id", "boost+", "boost-", "a", "b", "a^-1", "b^-1", "time"]
    return WedgeFamily(els, labels)


def good_toy(lam: float = 4.0, d: int = 2) -> NetConfig:
    """Every U(g) is a function of Delta, so commutes with Delta and J and preserves V."""
    p = stdsp.graph_pair(lam)
    V = stdsp.subspace_from_modular(p)
    fam = toy_family(d)
    rep = []
    for g in fam.elements:
        t = np.arcsinh(g.lorentz[0, 1])
        rep.append(p.modular_unitary(-t / (2 * np.pi)))
    return NetConfig(fam, rep, V)


def counterexample_toy(lam: float = 4.0, d: int = 2, seed: int = 3) -> NetConfig:
    """As :func:`good_toy`, but the compressor ``a`` and its inverse act by a generic unitary."""
    cfg = good_toy(lam, d)
    U = AntiUnitaryOp.unitary(stdsp.random_unitary(cfg.V.n, np.random.default_rng(seed)))
    rep = list(cfg.rep)
    labels = cfg.family.labels
    rep[labels.index("a")] = U
    rep[labels.index("a^-1")] = U.adjoint()
    return NetConfig(cfg.family, rep, cfg.V)


def isotony_violating_net(cfg: NetConfig) -> Callable[[Region], RealSubspace]:
    """h_max, except that proper subwedges of W get the whole space, breaking (Iso)."""
    W = cfg.family.base_region

    def H(O: Region) -> RealSubspace:
        if O.kind == "wedge" and included(O, W) and not included(W, O):
            return stdsp.whole_space(cfg.V.n)
        return h_max(cfg, O)

    return H
