"""Exact root systems in Bourbaki coordinates.

Everything here runs on :class:`fractions.Fraction`; the Euler and symmetric
Euler verdicts are integer facts and are decided without any tolerance.

>>> rs = build_root_system(RootSystemSpec("B", 3))
>>> sorted(euler_nodes(rs))
[1]
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import IndexOutOfRange, InvalidRank, NotEuler, OrbitTooLarge

Vector = Tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")
DEFAULT_ORBIT_BOUND = 10**6

_HALF = Fraction(1, 2)


def _vec(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _unit(n: int, i: int, scale=1) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _add(*vs):
    return tuple(sum(c, Fraction(0)) for c in zip(*vs))


def _scale(c, v):
    return tuple(c * a for a in v)


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def validate(self) -> None:
        fam, n = self.family, self.rank
        if fam not in FAMILIES:
            raise InvalidRank(f"unknown family {fam!r}")
        if not isinstance(n, int) or n < 1:
            raise InvalidRank(f"rank must be a positive integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 3,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "BC": n >= 1,
        }[fam]
        if not ok:
            raise InvalidRank(f"rank {n} is not admissible for family {fam}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Coweight:
    vector: Vector
    node: int


@dataclass
class RootSystem:
    spec: RootSystemSpec
    ambient_dim: int
    roots: Tuple[Vector, ...]
    simple_roots: Tuple[Vector, ...]
    cartan_matrix: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def check_node(self, j: int) -> None:
        if not isinstance(j, int) or not 1 <= j <= self.rank:
            raise IndexOutOfRange(f"node {j!r} outside 1..{self.rank}")


# ---------------------------------------------------------------------------
# Bourbaki realizations


def _roots_pm_pm(n: int, m: int = None) -> set:
    """All +-e_i +- e_j, i < j < m (m defaults to n)."""
    m = n if m is None else m
    out = set()
    for i, j in itertools.combinations(range(m), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * n
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    return out


def _roots_short(n: int, scale=1) -> set:
    out = set()
    for i in range(n):
        for s in (1, -1):
            out.add(tuple(_unit(n, i, s * scale)))
    return out


def _e8_roots() -> set:
    roots = _roots_pm_pm(8)
    for signs in itertools.product((1, -1), repeat=8):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            roots.add(tuple(Fraction(s, 2) for s in signs))
    return roots


def _e_simple_roots(n: int) -> List[Vector]:
    a1 = [_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, -_HALF, _HALF]
    simple = [tuple(a1), _vec([1, 1, 0, 0, 0, 0, 0, 0])]
    for i in range(1, 7):
        v = [0] * 8
        v[i], v[i - 1] = 1, -1
        simple.append(_vec(v))
    return simple[:n]


def _type_a(n):
    dim = n + 1
    roots = set()
    for i, j in itertools.permutations(range(dim), 2):
        v = [Fraction(0)] * dim
        v[i], v[j] = Fraction(1), Fraction(-1)
        roots.add(tuple(v))
    simple = [_add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n)]
    return dim, roots, simple


def _chain(n):
    return [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(n - 1)]


def _type_b(n):
    return n, _roots_pm_pm(n) | _roots_short(n), _chain(n) + [_vec(_unit(n, n - 1))]


def _type_c(n):
    return n, _roots_pm_pm(n) | _roots_short(n, 2), _chain(n) + [_vec(_unit(n, n - 1, 2))]


def _type_d(n):
    last = _add(_unit(n, n - 2), _unit(n, n - 1))
    return n, _roots_pm_pm(n), _chain(n) + [last]


def _type_e(n):
    all_roots = _e8_roots()
    # E7 and E6 are the E8 roots orthogonal to the simple roots they drop
    # from the ambient span: e7 + e8 cuts out E7, e6 + e8 additionally cuts out E6.
    cuts = {8: [], 7: [_vec([0] * 6 + [1, 1])], 6: [_vec([0] * 6 + [1, 1]), _vec([0] * 5 + [1, 0, 1])]}[n]
    roots = {r for r in all_roots if all(dot(r, c) == 0 for c in cuts)}
    return 8, roots, _e_simple_roots(n)


def _type_f(n):
    roots = _roots_pm_pm(4) | _roots_short(4)
    for signs in itertools.product((1, -1), repeat=4):
        roots.add(tuple(Fraction(s, 2) for s in signs))
    simple = [
        _vec([0, 1, -1, 0]),
        _vec([0, 0, 1, -1]),
        _vec([0, 0, 0, 1]),
        (_HALF, -_HALF, -_HALF, -_HALF),
    ]
    return 4, roots, simple


def _type_g(n):
    roots = set()
    for i, j in itertools.permutations(range(3), 2):
        v = [Fraction(0)] * 3
        v[i], v[j] = Fraction(1), Fraction(-1)
        roots.add(tuple(v))
    for i in range(3):
        for s in (1, -1):
            v = [Fraction(-s)] * 3
            v[i] = Fraction(2 * s)
            roots.add(tuple(v))
    simple = [_vec([1, -1, 0]), _vec([-2, 1, 1])]
    return 3, roots, simple


def _type_bc(n):
    dim, roots, simple = _type_b(n) if n >= 2 else (1, _roots_short(1), [_vec([1])])
    return dim, roots | _roots_short(n, 2), simple


_BUILDERS = {
    "A": _type_a,
    "B": _type_b,
    "C": _type_c,
    "D": _type_d,
    "E": _type_e,
    "F": _type_f,
    "G": _type_g,
    "BC": _type_bc,
}

ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
    "BC": lambda n: 2 * n * n + 2 * n,
}


def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Full root set, simple roots and Cartan matrix for one irreducible type."""
    spec.validate()
    dim, roots, simple = _BUILDERS[spec.family](spec.rank)
    simple = [tuple(s) for s in simple]
    cartan = tuple(
        tuple(int(2 * dot(ai, aj) / dot(aj, aj)) for aj in simple) for ai in simple
    )
    rs = RootSystem(
        spec=spec,
        ambient_dim=dim,
        roots=tuple(sorted(roots)),
        simple_roots=tuple(simple),
        cartan_matrix=cartan,
    )
    if len(rs.roots) != ROOT_COUNTS[spec.family](spec.rank):
        raise AssertionError(f"{spec.name}: got {len(rs.roots)} roots")
    return rs


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(RootSystemSpec(family, rank))


# ---------------------------------------------------------------------------
# exact linear algebra over Q


def solve_rational(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> List[Fraction]:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def _gram(vs):
    return [[dot(a, b) for b in vs] for a in vs]


def simple_root_coordinates(rs: RootSystem, v: Sequence[Fraction]) -> List[Fraction]:
    """Coefficients c with v = sum_i c_i alpha_i (v must lie in the root span)."""
    G = _gram(rs.simple_roots)
    rhs = [dot(a, v) for a in rs.simple_roots]
    c = solve_rational(G, rhs)
    back = _add(*[_scale(ci, a) for ci, a in zip(c, rs.simple_roots)])
    if tuple(back) != tuple(Fraction(x) for x in v):
        raise ValueError("vector is not in the span of the simple roots")
    return c


def positive_roots(rs: RootSystem) -> List[Vector]:
    out = []
    for r in rs.roots:
        c = simple_root_coordinates(rs, r)
        if all(x >= 0 for x in c):
            out.append(r)
    return out


def highest_root(rs: RootSystem) -> Vector:
    return max(positive_roots(rs), key=lambda r: sum(simple_root_coordinates(rs, r)))


def fundamental_coweight(rs: RootSystem, j: int) -> Coweight:
    """The vector h_j in the span of the roots with alpha_k(h_j) = delta_jk."""
    rs.check_node(j)
    n = rs.rank
    G = _gram(rs.simple_roots)
    rhs = [Fraction(1 if k == j - 1 else 0) for k in range(n)]
    coeffs = solve_rational(G, rhs)
    h = _add(*[_scale(c, a) for c, a in zip(coeffs, rs.simple_roots)])
    return Coweight(vector=tuple(h), node=j)


def pairings(rs: RootSystem, h: Sequence[Fraction]) -> List[Fraction]:
    return [dot(r, h) for r in rs.roots]


def is_euler_node(rs: RootSystem, j: int) -> bool:
    h = fundamental_coweight(rs, j).vector
    return all(p in (-1, 0, 1) for p in pairings(rs, h))


def euler_nodes(rs: RootSystem) -> set:
    return {j for j in range(1, rs.rank + 1) if is_euler_node(rs, j)}


# ---------------------------------------------------------------------------
# Weyl group


def reflect(v: Sequence[Fraction], alpha: Sequence[Fraction]) -> Vector:
    c = 2 * dot(v, alpha) / dot(alpha, alpha)
    return tuple(x - c * a for x, a in zip(v, alpha))


def weyl_orbit(rs: RootSystem, v: Sequence[Fraction], bound: int = DEFAULT_ORBIT_BOUND) -> List[Vector]:
    """Orbit of ``v`` under the Weyl group, by breadth-first closure.

    Returned sorted, so the output does not depend on traversal order.
    """
    start = tuple(Fraction(x) for x in v)
    if len(start) != rs.ambient_dim:
        raise ValueError("vector does not live in the ambient space")
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for a in rs.simple_roots:
            u = reflect(w, a)
            if u not in seen:
                seen.add(u)
                if len(seen) > bound:
                    raise OrbitTooLarge(f"orbit exceeds {bound} elements")
                queue.append(u)
    return sorted(seen)


def is_symmetric_euler(rs: RootSystem, j: int, bound: int = DEFAULT_ORBIT_BOUND) -> bool:
    """-h_j lies in the Weyl orbit of h_j (only defined for Euler nodes)."""
    if not is_euler_node(rs, j):
        raise NotEuler(f"{rs.spec.name}: h_{j} is not an Euler element")
    h = fundamental_coweight(rs, j).vector
    minus = tuple(-x for x in h)
    return minus in set(weyl_orbit(rs, h, bound))


def longest_element_word(rs: RootSystem) -> List[int]:
    """Reduced word (0-based simple reflections) of the longest Weyl element.

    Obtained by walking the sum of fundamental coweights down to the
    antidominant chamber, reflecting in any wall it is on the positive side of.
    """
    rho = _add(*[fundamental_coweight(rs, j).vector for j in range(1, rs.rank + 1)])
    word = []
    v = rho
    while True:
        k = next((i for i, a in enumerate(rs.simple_roots) if dot(a, v) > 0), None)
        if k is None:
            break
        v = reflect(v, rs.simple_roots[k])
        word.append(k)
    return word


def minus_w0_permutation(rs: RootSystem) -> Dict[int, int]:
    """The diagram automorphism j -> sigma(j) with -w0(alpha_j) = alpha_sigma(j)."""
    word = longest_element_word(rs)
    perm = {}
    for j, a in enumerate(rs.simple_roots, start=1):
        v = a
        for k in reversed(word):
            v = reflect(v, rs.simple_roots[k])
        neg = tuple(-x for x in v)
        perm[j] = rs.simple_roots.index(neg) + 1
    return perm


def is_symmetric_by_diagram(rs: RootSystem, j: int) -> bool:
    rs.check_node(j)
    return minus_w0_permutation(rs)[j] == j


def grading_dimensions(rs: RootSystem, j: int) -> Tuple[int, int, int]:
    """(dim g_1, dim g_0, dim g_-1) for the split form graded by h_j."""
    if not is_euler_node(rs, j):
        raise NotEuler(f"{rs.spec.name}: h_{j} is not an Euler element")
    p = pairings(rs, fundamental_coweight(rs, j).vector)
    plus = sum(1 for x in p if x == 1)
    minus = sum(1 for x in p if x == -1)
    zero = rs.rank + sum(1 for x in p if x == 0)
    return plus, zero, minus


def classify(family: str, rank: int) -> dict:
    """Per-node summary used by the command line and the table check."""
    rs = root_system(family, rank)
    nodes = []
    for j in range(1, rs.rank + 1):
        euler = is_euler_node(rs, j)
        entry = {"j": j, "euler": euler, "symmetric": False, "dims": None}
        if euler:
            entry["symmetric"] = is_symmetric_euler(rs, j)
            entry["dims"] = list(grading_dimensions(rs, j))
        nodes.append(entry)
    return {"family": family, "rank": rank, "nodes": nodes}
