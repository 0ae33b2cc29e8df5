import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eulerwedge import cones, liealg
from eulerwedge.errors import DimensionMismatch, NotInvariant, NotSkewHermitian

QUADRANT = cones.PolyhedralCone.from_list([[1, 0], [0, 1]])


def test_quadrant_membership():
    assert cones.cone_member(QUADRANT, [2, 3])
    assert cones.cone_member(QUADRANT, [0, 0])
    assert not cones.cone_member(QUADRANT, [-1e-3, 1])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        cones.cone_member(QUADRANT, [1, 2, 3])
    with pytest.raises(DimensionMismatch):
        cones.PolyhedralCone.from_list([[1, 0], [0, 1, 0]])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3))
def test_octant_membership_matches_signs(x):
    C = cones.PolyhedralCone.from_list(np.eye(3))
    x = np.array(x)
    if np.all(x >= 0) or np.any(x < -1e-6):
        assert cones.cone_member(C, x) == bool(np.all(x >= 0))


def test_pointedness():
    assert cones.is_pointed(QUADRANT)
    assert not cones.is_pointed(cones.PolyhedralCone.from_list([[1, 0], [-1, 0], [0, 1]]))
    assert cones.is_pointed(cones.light_cone(4))


def test_prune_removes_redundant():
    G = cones.prune([[1, 0], [0, 1], [1, 1], [2, 0]])
    assert G.shape == (2, 2)


def test_facets_of_square_cone():
    C = cones.PolyhedralCone.from_list([[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]])
    F = cones.facets(C)
    assert F.shape[0] == 4
    for n in F:
        assert np.all(C.generators @ n >= -1e-12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=4, max_size=4))
def test_light_cone_predicate(x):
    x = np.array(x)
    C = cones.light_cone(4)
    margin = x[0] - np.linalg.norm(x[1:])
    if abs(margin) > 1e-6:
        assert C.contains(x) == (margin > 0)


def test_light_cone_rays_are_null_and_inside():
    C = cones.light_cone(3)
    G = C.generators
    assert np.allclose(G[:, 0] ** 2 - (G[:, 1:] ** 2).sum(1), 0)
    assert all(C.contains(g) for g in G)


def test_sl2_cone_parts():
    L = liealg.sl(2)
    Cp, Cm = cones.graded_cone_parts(L, cones.sl2_invariant_cone(), [0.5, 0, 0])
    assert Cp.generators.shape[0] == 1 and Cm.generators.shape[0] == 1
    assert np.allclose(Cp.generators[0], [0, 1, 0], atol=1e-9)
    assert np.allclose(Cm.generators[0], [0, 0, 1], atol=1e-9)


def test_poincare4_cone_parts():
    L = liealg.poincare(4)
    Cp, Cm = cones.graded_cone_parts(L, cones.poincare_translation_cone(4), L.basis_vector("M01"))
    e = np.zeros(L.dim)
    ep, em = e.copy(), e.copy()
    ep[[0, 1]] = [1, 1]
    em[[0, 1]] = [-1, 1]
    assert Cp.generators.shape[0] == 1 and Cm.generators.shape[0] == 1
    assert np.allclose(Cp.generators[0], ep / np.sqrt(2), atol=1e-9)
    assert np.allclose(Cm.generators[0], em / np.sqrt(2), atol=1e-9)


def test_non_invariant_cone_is_rejected():
    L = liealg.sl(2)
    C = cones.PolyhedralCone.from_list([[0, 1, 1]])
    with pytest.raises(NotInvariant):
        cones.graded_cone_parts(L, C, [0.5, 0, 0])


def test_lie_wedge_membership():
    L = liealg.sl(2)
    h = [0.5, 0, 0]
    Cp, Cm = cones.graded_cone_parts(L, cones.sl2_invariant_cone(), h)
    _, g0, _ = liealg.grading(L, h)
    W = cones.lie_wedge_LSW(g0, Cp, Cm)
    assert W.member([5.0, 1.0, 2.0])
    assert W.member([-3.0, 0.0, 0.0])
    assert not W.member([0.0, -1.0, 0.0])
    assert not W.member([0.0, 0.0, -1.0])


def test_positive_cone_of_representation():
    L = liealg.abelian(1)
    rep = cones.FiniteDimRep(L, [1j * np.diag([1.0, 2.0])])
    assert cones.positive_cone_member(rep, [1.0])
    assert not cones.positive_cone_member(rep, [-1.0])
    with pytest.raises(NotSkewHermitian):
        cones.FiniteDimRep(L, [np.diag([1.0, 2.0])])


def test_embedded_cone():
    C = cones.light_cone(2).embedded([0, 1], 3)
    assert C.contains([1, 0.5, 0])
    assert not C.contains([1, 0.5, 0.1])
