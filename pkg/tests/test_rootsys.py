from fractions import Fraction

import pytest

from eulerwedge import rootsys
from eulerwedge.errors import IndexOutOfRange, InvalidRank, NotEuler, OrbitTooLarge

# Euler nodes and symmetric Euler nodes, written out by hand from the classification.
EULER = {
    "A": lambda n: set(range(1, n + 1)),
    "B": lambda n: {1},
    "C": lambda n: {n},
    "D": lambda n: {1, n - 1, n},
    "E": lambda n: {6: {1, 6}, 7: {7}, 8: set()}[n],
    "F": lambda n: set(),
    "G": lambda n: set(),
    "BC": lambda n: set(),
}
SYMMETRIC = {
    "A": lambda n: {(n + 1) // 2} if n % 2 else set(),
    "B": lambda n: {1},
    "C": lambda n: {n},
    "D": lambda n: {1, n - 1, n} if n % 2 == 0 else {1},
    "E": lambda n: {7} if n == 7 else set(),
    "F": lambda n: set(),
    "G": lambda n: set(),
    "BC": lambda n: set(),
}
RANGE = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + [("C", n) for n in range(3, 9)] \
    + [("D", n) for n in range(4, 9)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)] \
    + [("BC", n) for n in range(1, 5)]

# |roots| from the standard tables
ROOTS = {("A", 3): 12, ("B", 3): 18, ("C", 4): 32, ("D", 5): 40, ("E", 6): 72, ("E", 7): 126,
         ("E", 8): 240, ("F", 4): 48, ("G", 2): 12, ("BC", 2): 12}


@pytest.mark.parametrize("fam,n", RANGE)
def test_euler_nodes_match_table(fam, n):
    assert rootsys.euler_nodes(rootsys.root_system(fam, n)) == EULER[fam](n)


@pytest.mark.parametrize("fam,n", [c for c in RANGE if c != ("E", 8)])
def test_symmetric_nodes_match_table(fam, n):
    rs = rootsys.root_system(fam, n)
    got = {j for j in rootsys.euler_nodes(rs) if rootsys.is_symmetric_euler(rs, j)}
    assert got == SYMMETRIC[fam](n)


@pytest.mark.parametrize("fam,n", [("A", 5), ("B", 4), ("C", 5), ("D", 5), ("D", 6), ("E", 6)])
def test_orbit_and_diagram_criteria_agree(fam, n):
    rs = rootsys.root_system(fam, n)
    for j in rootsys.euler_nodes(rs):
        assert rootsys.is_symmetric_euler(rs, j) == rootsys.is_symmetric_by_diagram(rs, j)


@pytest.mark.parametrize("key,count", sorted(ROOTS.items()))
def test_root_counts(key, count):
    assert len(rootsys.root_system(*key).roots) == count


@pytest.mark.parametrize("fam,n", [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("E", 6), ("G", 2), ("F", 4)])
def test_coweights_are_dual_to_simple_roots(fam, n):
    rs = rootsys.root_system(fam, n)
    for j in range(1, n + 1):
        h = rootsys.fundamental_coweight(rs, j).vector
        assert [rootsys.dot(a, h) for a in rs.simple_roots] == [Fraction(int(k == j - 1)) for k in range(n)]


def test_b3_example():
    assert rootsys.euler_nodes(rootsys.root_system("B", 3)) == {1}


def test_a1_is_symmetric():
    rs = rootsys.root_system("A", 1)
    assert rootsys.is_symmetric_euler(rs, 1)


@pytest.mark.parametrize("fam,n,j,dims", [
    ("A", 1, 1, (1, 1, 1)),       # sl(2): e, h, f
    ("A", 3, 2, (4, 7, 4)),       # sl(4) with 2+2 blocks
    ("B", 3, 1, (5, 11, 5)),      # so(3,4): vector of so(2,3)
    ("E", 7, 7, (27, 79, 27)),
])
def test_grading_dimensions(fam, n, j, dims):
    rs = rootsys.root_system(fam, n)
    got = rootsys.grading_dimensions(rs, j)
    assert got == dims
    assert sum(got) == len(rs.roots) + n


def test_cartan_matrix_g2():
    rs = rootsys.root_system("G", 2)
    C = rs.cartan_matrix
    assert sorted([C[0][1], C[1][0]]) == [-3, -1]
    assert C[0][0] == C[1][1] == 2


def test_weyl_orbit_size_a3():
    rs = rootsys.root_system("A", 3)
    # orbit of h_1 = the 4 "vertices" of the simplex
    assert len(rootsys.weyl_orbit(rs, rootsys.fundamental_coweight(rs, 1).vector)) == 4


def test_errors():
    with pytest.raises(InvalidRank):
        rootsys.root_system("B", 1)
    with pytest.raises(InvalidRank):
        rootsys.root_system("E", 9)
    with pytest.raises(ValueError):
        rootsys.root_system("Q", 2)
    rs = rootsys.root_system("A", 2)
    with pytest.raises(IndexOutOfRange):
        rootsys.fundamental_coweight(rs, 3)
    with pytest.raises(NotEuler):
        rootsys.is_symmetric_euler(rootsys.root_system("D", 5), 2)
    with pytest.raises(OrbitTooLarge):
        rootsys.weyl_orbit(rootsys.root_system("E", 6), rootsys.fundamental_coweight(rootsys.root_system("E", 6), 1).vector, bound=5)


def test_classify_shape():
    out = rootsys.classify("D", 4)
    assert [n["j"] for n in out["nodes"]] == [1, 2, 3, 4]
    assert out["nodes"][1] == {"j": 2, "euler": False, "symmetric": False, "dims": None}
    assert all(out["nodes"][k]["symmetric"] for k in (0, 2, 3))
