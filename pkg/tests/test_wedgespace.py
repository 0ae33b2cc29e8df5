import numpy as np
import pytest
import scipy.linalg

from eulerwedge import causal, cones, liealg, wedgespace
from eulerwedge.errors import InvariantViolation, NoGeometricRealization
from eulerwedge.wedgespace import GradedGroupElement, Verdict


@pytest.fixture(scope="module")
def p4():
    L = liealg.poincare(4)
    return L, wedgespace.poincare_couple(4), wedgespace.poincare_config(4)


def test_tau_maps_wedge_to_dual():
    W = wedgespace.standard_couple(liealg.sl(2), [0.5, 0, 0])
    assert wedgespace.act_on_wedge(W.tau, W).same_as(wedgespace.dual_wedge(W))


def test_exp_h_fixes_wedge():
    L = liealg.sl(2)
    W = wedgespace.standard_couple(L, [0.5, 0, 0])
    assert wedgespace.fixes(GradedGroupElement.exp(L, [0.7, 0, 0]), W)
    assert not wedgespace.fixes(GradedGroupElement.exp(L, [0, 0.7, 0]), W)


def test_action_is_a_group_action():
    L = liealg.sl(2)
    W = wedgespace.standard_couple(L, [0.5, 0, 0])
    g = GradedGroupElement.exp(L, [0.1, 0.4, -0.3])
    h = GradedGroupElement.exp(L, [-0.2, 0.1, 0.5])
    lhs = wedgespace.act_on_wedge(g @ h, W)
    rhs = wedgespace.act_on_wedge(g, wedgespace.act_on_wedge(h, W))
    assert lhs.same_as(rhs)


def test_couple_invariants():
    L = liealg.sl(2)
    with pytest.raises(InvariantViolation):
        wedgespace.EulerCouple(L, [0.5, 0, 0], GradedGroupElement(np.eye(3), -1))
    with pytest.raises(InvariantViolation):
        wedgespace.EulerCouple(L, [0.5, 0, 0], GradedGroupElement(liealg.tau_h(L, [0.5, 0, 0]), 1))
    with pytest.raises(InvariantViolation):
        GradedGroupElement(np.diag([1.0, 2.0, 1.0])).check(L)


def test_poincare_decode_roundtrip(p4):
    L, _, _ = p4
    rng = np.random.default_rng(1)
    for _ in range(10):
        X = rng.normal(0, 0.5, L.dim)
        A = scipy.linalg.expm(L.to_matrix(X))
        iso = causal.IsometryElement.from_affine(A)
        back = wedgespace.poincare_decode(L, liealg.Ad_of_matrix(L, A))
        assert np.allclose(back.affine(), iso.affine(), atol=1e-9)


def test_semigroup_translations(p4):
    L, W, cfg = p4
    T = lambda v: wedgespace.poincare_element(L, causal.IsometryElement.translation_by(v))  # noqa: E731
    assert wedgespace.semigroup_member(cfg, W, T([0, 1, 0, 0])) is Verdict.IN
    assert wedgespace.semigroup_member(cfg, W, T([0.5, 1, 0.3, 0])) is Verdict.IN
    assert wedgespace.semigroup_member(cfg, W, T([1, 0, 0, 0])) is Verdict.OUT


def test_wedge_leq(p4):
    L, W, cfg = p4
    T = lambda v: wedgespace.poincare_element(L, causal.IsometryElement.translation_by(v))  # noqa: E731
    e = wedgespace.poincare_element(L, causal.IsometryElement(np.eye(4)))
    assert wedgespace.wedge_leq(cfg, W, T([0, 1, 0, 0]), e) is True
    assert wedgespace.wedge_leq(cfg, W, e, T([0, 1, 0, 0])) is False


def test_sl2_generic_path():
    L = liealg.sl(2)
    W = wedgespace.standard_couple(L, [0.5, 0, 0])
    cfg = wedgespace.WedgeOrderConfig(cones.sl2_invariant_cone(), n_starts=20)
    assert wedgespace.semigroup_member(cfg, W, GradedGroupElement.exp(L, [0, 1.3, 0])) is Verdict.IN
    assert wedgespace.semigroup_member(cfg, W, GradedGroupElement.exp(L, [0, -1.3, 0])) is Verdict.UNKNOWN
    with pytest.raises(NoGeometricRealization):
        wedgespace.semigroup_member(cfg, W, GradedGroupElement.exp(L, [0, -1.3, 0]), require_out_certificate=True)


def test_config_rejects_cone_with_line():
    with pytest.raises(InvariantViolation):
        wedgespace.WedgeOrderConfig(cones.PolyhedralCone.from_list([[1, 0, 0], [-1, 0, 0]]))
