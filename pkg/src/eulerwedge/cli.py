"""Command line front end.

Every command prints one JSON report on stdout (or a plain-text rendering
with ``--format text``).  Exit status is 0 on success, 1 on a domain error
and 2 on an input, I/O or parse error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import math
import os
import sys
from importlib import resources
from typing import Any, List, Optional, Sequence

import numpy as np

from . import __version__, causal, cones, liealg, models, nets, rootsys, stdsp, wedgespace
from . import _linalg as la
from .errors import EulerWedgeError, ParseError

SCHEMA_VERSION = 1
DEFAULT_TOL = 1e-9
EIGEN_TOL = 1e-8


# ---------------------------------------------------------------------------
# JSON output


def _plain(obj: Any) -> Any:
    """Convert numpy objects, complex numbers and subspaces to JSON-ready values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real) + 0.0, float(obj.imag) + 0.0]
    if isinstance(obj, (np.floating, float)):
        return float(obj) + 0.0  # no negative zeros
    if isinstance(obj, stdsp.RealSubspace):
        return _subspace_out(obj)
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):  # enums
        return obj.value
    return obj


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"NaN"'
    if math.isinf(x):
        return '"Infinity"' if x > 0 else '"-Infinity"'
    if x == int(x) and abs(x) < 1e16:
        return repr(float(x))
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, floats with 17 significant digits."""
    obj = _plain(obj)

    def enc(o, ind):
        pad = "  " * (ind + 1)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(k)}: {enc(o[k], ind + 1)}" for k in sorted(o)]
            return "{\n" + ",\n".join(items) + "\n" + "  " * ind + "}"
        if isinstance(o, list):
            if not o:
                return "[]"
            if all(not isinstance(v, (dict, list)) for v in o):
                return "[" + ", ".join(enc(v, ind) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, ind + 1) for v in o) + "\n" + "  " * ind + "]"
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, float):
            return _fmt_float(o)
        return json.dumps(o)

    return enc(obj, 0)


def _text(obj: Any, ind: int = 0) -> List[str]:
    obj = _plain(obj)
    pad = "  " * ind
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict,)) or (isinstance(v, list) and v and isinstance(v[0], (dict, list))):
                lines.append(f"{pad}{k}:")
                lines += _text(v, ind + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines += _text(v, ind + 1)
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _scalar_text(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    return str(v)


def _classify_table(res: dict) -> List[str]:
    cases = res["cases"] if "cases" in res else [res]
    lines = [f"{'type':<6}{'node':>5}  {'euler':<6}{'symm':<6}dims (g1, g0, g-1)"]
    for c in cases:
        for n in c["nodes"]:
            dims = "" if n["dims"] is None else ", ".join(str(d) for d in n["dims"])
            lines.append(f"{c['family'] + str(c['rank']):<6}{n['j']:>5}  {str(n['euler']):<6}{str(n['symmetric']):<6}{dims}")
    return lines


# ---------------------------------------------------------------------------
# input parsing


def _floats(text: str, what: str = "vector") -> np.ndarray:
    try:
        if text.strip().startswith("["):
            return np.asarray(json.loads(text), dtype=float)
        return np.array([float(t) for t in text.replace(";", ",").split(",") if t.strip()])
    except (ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot parse {what} {text!r}") from exc


def _json_arg(text: str, inputs: list) -> Any:
    """Inline JSON or a path to a JSON file."""
    s = text.strip()
    if s[:1] in "[{":
        try:
            return json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid inline JSON: {exc.msg}", exc.lineno) from exc
    return _read_json(s, inputs)


def _read_json(path: str, inputs: list) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    inputs.append(raw)
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno) from exc


def _complex_array(data, ndim: int) -> np.ndarray:
    """Array of rank ``ndim`` given with real leaves or [re, im] pairs."""
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError("malformed numeric array") from exc
    if arr.ndim == ndim + 1 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == ndim:
        return arr.astype(complex)
    raise ParseError(f"expected a rank-{ndim} array of numbers or [re, im] pairs, got shape {arr.shape}")


def _complex_matrix(data) -> np.ndarray:
    return _complex_array(data, 2)


def _complex_out(A) -> list:
    A = np.asarray(A, dtype=complex)
    return [[float(z.real) + 0.0, float(z.imag) + 0.0] for z in A] if A.ndim == 1 else [_complex_out(r) for r in A]


def _subspace_in(data) -> stdsp.RealSubspace:
    if not isinstance(data, dict) or "vectors" not in data:
        raise ParseError("subspace needs 'vectors' (complex column vectors, given as rows)")
    vecs = [_complex_array(v, 1) for v in data["vectors"]]
    n = int(data.get("n", len(vecs[0]) if vecs else 0))
    if not vecs:
        return stdsp.zero_subspace(n)
    return stdsp.RealSubspace.from_complex_vectors(np.column_stack(vecs), n)


def _subspace_out(V: stdsp.RealSubspace) -> dict:
    return {"n": V.n, "dim": V.dim, "vectors": [_complex_out(v) for v in V.complex_basis().T]}


def _modular_in(data) -> stdsp.ModularPair:
    if not isinstance(data, dict) or "Delta" not in data or "J" not in data:
        raise ParseError("modular pair needs 'Delta' and 'J'")
    D = _complex_matrix(data["Delta"])
    Jd = data["J"]
    if isinstance(Jd, dict) and "antilinear" in Jd:
        J = stdsp.antilinear(_complex_matrix(Jd["antilinear"]))
    elif isinstance(Jd, dict) and "real" in Jd:
        J = np.asarray(Jd["real"], dtype=float)
    else:
        raise ParseError("J must be {'antilinear': A} (z -> A conj z) or {'real': 2n x 2n matrix}")
    return stdsp.ModularPair(D, J)


def _modular_out(p: stdsp.ModularPair) -> dict:
    return {"n": p.n, "Delta": _complex_out(p.Delta), "J": {"antilinear": _complex_out(stdsp.antilinear_to_complex(p.J))}}


# ---------------------------------------------------------------------------
# commands


def _ranks(text: str) -> List[int]:
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ParseError(f"no rank in {text!r}")
    return out


def cmd_classify(args, ctx):
    try:
        ranks = _ranks(args.rank)
    except ValueError as exc:
        raise ParseError(f"bad --rank {args.rank!r}") from exc
    fam = args.family
    if len(ranks) == 1:
        return rootsys.classify(fam, ranks[0])
    if args.parallel:
        with concurrent.futures.ProcessPoolExecutor() as pool:
            cases = list(pool.map(rootsys.classify, [fam] * len(ranks), ranks))
    else:
        cases = [rootsys.classify(fam, r) for r in ranks]
    return {"cases": sorted(cases, key=lambda c: c["rank"])}


def _algebra_and_h(args):
    L = liealg.resolve_algebra(args.algebra)
    h = _floats(args.h, "--h")
    if h.size != L.dim:
        raise ParseError(f"--h has {h.size} entries, algebra {L.name} has dimension {L.dim}")
    return L, h


def cmd_analyze(args, ctx):
    L, h = _algebra_and_h(args)
    rep = liealg.euler_report(L, h, tol=ctx["tol"], eig_tol=EIGEN_TOL).to_dict()
    rep["algebra"] = {"name": L.name, "dim": L.dim, "labels": list(L.labels)}
    rep["h"] = h
    return rep


def _cone(spec: str, inputs: list) -> cones.PolyhedralCone:
    if spec == "sl2":
        return cones.sl2_invariant_cone()
    if ":" in spec and spec.split(":", 1)[0] in ("light", "poincare"):
        kind, d = spec.split(":", 1)
        d = int(d)
        return cones.light_cone(d) if kind == "light" else cones.poincare_translation_cone(d)
    data = _json_arg(spec, inputs)
    gens = data["generators"] if isinstance(data, dict) else data
    return cones.PolyhedralCone.from_list(np.asarray(gens, dtype=float))


def cmd_cone(args, ctx):
    C = _cone(args.cone, ctx["inputs"])
    if args.action == "member":
        x = _floats(args.x, "--x")
        return {"member": cones.cone_member(C, x, ctx["tol"]), "x": x, "cone": C.name or args.cone}
    L, h = _algebra_and_h(args)
    Cp, Cm = cones.graded_cone_parts(L, C, h, seed=ctx["seed"])
    return {"C_plus": Cp.generators, "C_minus": Cm.generators, "algebra": L.name}


def _group_matrix(text: str, inputs: list) -> np.ndarray:
    data = _json_arg(text, inputs)
    M = np.asarray(data["matrix"] if isinstance(data, dict) else data, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParseError("group element must be a square matrix")
    return M


def cmd_wedge(args, ctx):
    inputs = ctx["inputs"]
    if args.action == "leq":
        if args.d is not None:
            L = liealg.poincare(args.d)
            W = wedgespace.poincare_couple(args.d)
            cfg = wedgespace.poincare_config(args.d, seed=ctx["seed"])
            g1 = wedgespace.poincare_element(L, causal.IsometryElement.from_affine(_group_matrix(args.g1, inputs)))
            g2 = wedgespace.poincare_element(L, causal.IsometryElement.from_affine(_group_matrix(args.g2, inputs)))
        else:
            L, h = _algebra_and_h(args)
            if args.cone is None:
                raise ParseError("wedge leq needs --d or --algebra/--h/--cone")
            W = wedgespace.standard_couple(L, h)
            cfg = wedgespace.WedgeOrderConfig(_cone(args.cone, inputs), seed=ctx["seed"])
            g1 = wedgespace.GradedGroupElement(liealg.Ad_of_matrix(L, _group_matrix(args.g1, inputs))).check(L)
            g2 = wedgespace.GradedGroupElement(liealg.Ad_of_matrix(L, _group_matrix(args.g2, inputs))).check(L)
        v = wedgespace.wedge_leq(cfg, W, g1, g2)
        return {"leq": v if isinstance(v, bool) else v.value}
    L, h = _algebra_and_h(args)
    W = wedgespace.standard_couple(L, h)
    if args.action == "dual":
        return {"wedge": W.to_dict(), "dual": wedgespace.dual_wedge(W).to_dict()}
    if args.g is None:
        raise ParseError("wedge act needs --g")
    A = liealg.Ad_of_matrix(L, _group_matrix(args.g, inputs))
    g = wedgespace.GradedGroupElement(A, args.parity).check(L)
    return {"wedge": W.to_dict(), "image": wedgespace.act_on_wedge(g, W).to_dict()}


def cmd_geom(args, ctx):
    if args.action == "compress":
        g = causal.IsometryElement.from_affine(_group_matrix(args.g, ctx["inputs"]))
        exact = causal.compression_member_poincare(g)
        sampled = causal.sampled_compression_check(g, n=args.samples, seed=ctx["seed"])
        return {"exact": exact, "sampled": sampled.to_dict(), "agree": not (exact and not sampled.consistent)}
    x = _floats(args.x, "--x")
    if args.action == "wedge-member":
        if args.space == "minkowski":
            return {"member": causal.in_wedge_WR(x)}
        return {"member": causal.wedge_region_dS_member(x)}
    if args.action == "flow":
        return {"x": x, "t": args.t, "image": causal.flow(args.t, x), "vector_field": causal.modular_vector_field(x)}
    return {"positive": causal.positivity_region_member(args.space, x), "vector_field": causal.modular_vector_field(x),
            "component": causal.timelike_component(x)}


def cmd_stdsp(args, ctx):
    data = _read_json(args.input, ctx["inputs"])
    tol = ctx["tol"]
    if args.action == "from-modular":
        p = _modular_in(data)
        V = stdsp.subspace_from_modular(p, tol)
        return {"subspace": _subspace_out(V), "kms_residual": stdsp.kms_residual(p, V)}
    if args.action == "to-modular":
        V = _subspace_in(data)
        return {"modular": _modular_out(stdsp.modular_from_subspace(V, tol))}
    if args.action == "complement":
        V = _subspace_in(data)
        return {"complement": _subspace_out(stdsp.symplectic_complement(V))}
    subs = data.get("subspaces") if isinstance(data, dict) else None
    if not subs:
        raise ParseError("expected {'subspaces': [...]}")
    Vs = [_subspace_in(s) for s in subs]
    if args.action == "intersect":
        n = Vs[0].n
        Q = la.intersect([V.basis for V in Vs], tol, m=2 * n)
        return {"intersection": _subspace_out(stdsp.RealSubspace(n, Q))}
    if len(Vs) != 2:
        raise ParseError("tensor takes exactly two subspaces")
    return {"tensor": _subspace_out(stdsp.tensor(Vs[0], Vs[1], tol))}


def _scene(data) -> tuple:
    if not isinstance(data, dict):
        raise ParseError("scene must be a JSON object")
    builtin = data.get("builtin")
    if builtin is not None:
        makers = {"good_toy": nets.good_toy, "counterexample_toy": nets.counterexample_toy}
        if builtin not in makers:
            raise ParseError(f"unknown builtin scene {builtin!r}; known: {sorted(makers)}")
        cfg = makers[builtin]()
    else:
        try:
            els, labels, rep = [], [], []
            for e in data["family"]:
                els.append(causal.IsometryElement(np.asarray(e["lorentz"], dtype=float), e.get("translation")))
                labels.append(e.get("label", f"g{len(labels)}"))
                U = _complex_matrix(e["unitary"])
                rep.append(stdsp.AntiUnitaryOp.antiunitary(U) if e.get("antilinear") else stdsp.AntiUnitaryOp.unitary(U))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed family entry: {exc}") from exc
        if "modular" in data:
            V = stdsp.subspace_from_modular(_modular_in(data["modular"]))
        elif "subspace" in data:
            V = _subspace_in(data["subspace"])
        else:
            raise ParseError("scene needs 'modular' or 'subspace'")
        cfg = nets.NetConfig(nets.WedgeFamily(els, labels), rep, V, seed=int(data.get("seed", 0)))
    return cfg, data.get("region")


def _region(desc, cfg: nets.NetConfig) -> nets.Region:
    if desc is None:
        return cfg.family.base_region
    kind = desc.get("kind")
    if kind == "wedge":
        el = desc.get("element")
        if el is None:
            return cfg.family.base_region
        if el not in cfg.family.labels:
            raise ParseError(f"unknown family element {el!r}")
        return cfg.family.region_of(cfg.family.labels.index(el))
    if kind == "double_cone":
        return nets.double_cone(desc["center"], float(desc["radius"]))
    raise ParseError(f"unsupported region kind {kind!r}")


def cmd_net(args, ctx):
    cfg, region = _scene(_read_json(args.scene, ctx["inputs"]))
    if args.action == "report":
        return nets.direct_net_report(cfg)
    O = _region(region, cfg)
    H = nets.h_max(cfg, O) if args.action == "hmax" else nets.h_min(cfg, O)
    return {"region": O.label, "subspace": _subspace_out(H), "standard": stdsp.is_standard(H),
            "cyclic": stdsp.is_cyclic(H), "separating": stdsp.is_separating(H)}


def cmd_model(args, ctx):
    N = args.N
    if args.which == "u1":
        demo = args.demo or "kms"
        if demo == "kms":
            return models.kms_trend(N)
        if demo == "codim":
            rows = {n: models.codimension_report(n) for n in (N, 2 * N)}
            return {"N": [N, 2 * N], "reports": [rows[N], rows[2 * N]],
                    "trend": all(r["estimate"] == r["expected"] for r in rows[2 * N]["pairs"])}
        if demo == "regularity":
            rng = np.random.default_rng(ctx["seed"])
            sample = [(0.0, 1.0)]
            for r in (1.0, 0.3, 0.1, 0.03):
                sample += [(float(b), float(np.exp(s))) for b, s in rng.uniform(-r, r, (3, 2))]
            out = [models.regularity_demo(models.build_u1_current(n), sample) for n in (N, 2 * N)]
            return {"N": [N, 2 * N], "reports": out}
        if demo == "inner":
            return models.inner_product_convergence()
        raise ParseError(f"demo {demo!r} is not available for u1")
    demo = args.demo or "flatness"
    if demo not in ("flatness", "commutator"):
        raise ParseError(f"demo {demo!r} is not available for aff")
    return models.aff_trend(N)


def _tables() -> dict:
    with resources.files("eulerwedge").joinpath("data/tables.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _case_key(key: str):
    fam = key.rstrip("0123456789")
    return fam, int(key[len(fam):])


def _table_check(name: str, table: dict, tol_nodes: dict) -> dict:
    rows, ok = [], True
    for key, expected in table.items():
        fam, r = _case_key(key)
        got = tol_nodes[(fam, r)](name)
        match = sorted(got) == sorted(expected)
        ok &= match
        rows.append({"case": key, "expected": sorted(expected), "computed": sorted(got), "match": match})
    return {"table": name, "pass": ok, "rows": rows}


def cmd_tables(args, ctx):
    data = _tables()
    aliases = data.get("aliases", {})
    names = [aliases.get(n.strip(), n.strip()) for n in args.check.split(",") if n.strip()]
    for n in names:
        if n not in ("euler", "symmetric"):
            raise ParseError(f"unknown table {n!r}; known: euler, symmetric, {', '.join(sorted(aliases))}")
    cache = {}

    def nodes(fam, r):
        if (fam, r) not in cache:
            rs = rootsys.root_system(fam, r)
            eul = sorted(rootsys.euler_nodes(rs))
            cache[(fam, r)] = {"euler": eul, "symmetric": [j for j in eul if rootsys.is_symmetric_euler(rs, j)]}
        return cache[(fam, r)]

    lookup = {}
    for n in names:
        for key in data[n]:
            fam, r = _case_key(key)
            lookup[(fam, r)] = (lambda f, k: (lambda which: nodes(f, k)[which]))(fam, r)
    results = [_table_check(n, data[n], lookup) for n in names]
    passed = all(r["pass"] for r in results)
    summary = {r["table"]: ("PASS" if r["pass"] else "FAIL") for r in results}
    out = {"summary": summary, "pass": passed, "tables": results}
    ctx["exit"] = 0 if passed else 1
    return out


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="rank tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output (the default)")
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="eulerwedge", parents=[common],
                                 description="Euler elements, wedges and standard subspaces.")
    ap.add_argument("--version", action="version", version=f"eulerwedge {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Euler nodes of a root system")
    p.add_argument("--family", required=True, choices=rootsys.FAMILIES)
    p.add_argument("--rank", required=True, help="rank, list (2,3) or range (2-8)")
    p.add_argument("--parallel", action="store_true", help="classify a batch of ranks in parallel")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", parents=[common], help="Euler report for h in a Lie algebra")
    p.add_argument("--algebra", required=True, help="builtin:NAME or a TOML file")
    p.add_argument("--h", required=True, help="coordinates c1,...,cn")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cone", parents=[common], help="cone membership and graded parts")
    p.add_argument("action", choices=("member", "parts"))
    p.add_argument("--cone", required=True, help="sl2, light:D, poincare:d, JSON generator list or file")
    p.add_argument("--x")
    p.add_argument("--algebra")
    p.add_argument("--h")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("wedge", parents=[common], help="abstract wedges (h, tau)")
    p.add_argument("action", choices=("act", "dual", "leq"))
    p.add_argument("--algebra")
    p.add_argument("--h")
    p.add_argument("--g", help="group matrix in the defining realization (JSON)")
    p.add_argument("--parity", type=int, default=1, choices=(1, -1))
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--d", type=int, help="Poincare group in d spacetime dimensions (affine matrices)")
    p.add_argument("--cone")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("geom", parents=[common], help="Minkowski and de Sitter wedge geometry")
    p.add_argument("action", choices=("wedge-member", "flow", "positivity", "compress"))
    p.add_argument("--x")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--space", default="minkowski", choices=("minkowski", "deSitter"))
    p.add_argument("--g", help="affine Poincare matrix (JSON)")
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_geom)

    p = sub.add_parser("stdsp", parents=[common], help="standard subspace calculus")
    p.add_argument("action", choices=("from-modular", "to-modular", "complement", "intersect", "tensor"))
    p.add_argument("--input", required=True, help="JSON file")
    p.set_defaults(func=cmd_stdsp)

    p = sub.add_parser("net", parents=[common], help="maximal and minimal nets on a scene")
    p.add_argument("action", choices=("hmax", "hmin", "report"))
    p.add_argument("--scene", required=True, help="JSON scene file")
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("model", parents=[common], help="grid models")
    p.add_argument("which", choices=("u1", "aff"))
    p.add_argument("--N", type=int, default=512)
    p.add_argument("--demo", choices=("kms", "codim", "regularity", "inner", "flatness", "commutator"))
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("tables", parents=[common], help="check the embedded classification tables")
    p.add_argument("--check", nargs="?", const="euler,symmetric", default="euler,symmetric",
                   help="comma separated table names (default: both)")
    p.set_defaults(func=cmd_tables)
    return ap


def _default_tol() -> float:
    env = os.environ.get("EULERWEDGE_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise ParseError(f"EULERWEDGE_TOL={env!r} is not a number")
    return DEFAULT_TOL


def _digest(argv: Sequence[str], inputs: list) -> str:
    h = hashlib.sha256()
    h.update(json.dumps(list(argv)).encode())
    for raw in inputs:
        h.update(b"\0")
        h.update(raw.encode())
    return h.hexdigest()


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    ctx = {"seed": getattr(args, "seed", 0), "inputs": [], "exit": 0}
    report = {"schema_version": SCHEMA_VERSION, "version": __version__, "command": argv, "seed": ctx["seed"]}
    code = 0
    try:
        ctx["tol"] = getattr(args, "tol", None) or _default_tol()
        report["tolerances"] = {"tol": ctx["tol"], "eigen_tol": EIGEN_TOL}
        report["results"] = args.func(args, ctx)
        code = ctx["exit"]
    except (ParseError, OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        report["error"] = {"code": getattr(exc, "code", "io_error"), "message": str(exc)}
        code = 2
    except EulerWedgeError as exc:
        report["error"] = {"code": exc.code, "message": str(exc)}
        code = 1
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        report["error"] = {"code": "invalid_input", "message": str(exc)}
        code = 1
    report["inputs_digest"] = _digest(argv, ctx["inputs"])
    if fmt == "text":
        if args.command == "classify" and "results" in report:
            lines = _classify_table(report["results"])
        else:
            lines = _text(report.get("results", report.get("error")))
        if "error" in report:
            lines = [f"error [{report['error']['code']}]: {report['error']['message']}"]
        out.write("\n".join(lines) + "\n")
    else:
        out.write(dumps(report) + "\n")
    return code


def main() -> None:
    sys.exit(run())
