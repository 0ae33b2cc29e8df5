import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eulerwedge import stdsp
from eulerwedge.errors import ModularRelationViolation, NotModularPair, NotStandard
from eulerwedge.stdsp import AntiUnitaryOp, ModularPair, RealSubspace


def _pair(n, seed):
    return stdsp.modular_from_subspace(stdsp.random_standard(n, np.random.default_rng(seed)))


def test_real_form_has_trivial_modular_data():
    p = stdsp.modular_from_subspace(stdsp.real_form(3))
    assert np.allclose(p.Delta, np.eye(3))
    assert np.allclose(p.J, stdsp.conjugation(3))


def test_graph_subspace_closed_form():
    p = stdsp.graph_pair(4.0)
    V = stdsp.subspace_from_modular(p)
    assert V.equals(stdsp.subspace_from_modular_direct(p))
    assert stdsp.kms_residual(p, V) < 1e-12
    assert stdsp.modular_from_subspace(V).equals(p)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_roundtrip(n, seed):
    V = stdsp.random_standard(n, np.random.default_rng(seed))
    p = stdsp.modular_from_subspace(V)
    assert stdsp.subspace_from_modular(p).equals(V, 1e-9)
    assert stdsp.kms_residual(p, V) < 1e-8


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_duality(n, seed):
    V = stdsp.random_standard(n, np.random.default_rng(seed))
    p = stdsp.modular_from_subspace(V)
    Vp = stdsp.symplectic_complement(V)
    assert stdsp.symplectic_complement(Vp).equals(V)
    assert RealSubspace(n, p.J @ V.basis).equals(Vp, 1e-8)
    q = stdsp.modular_from_subspace(Vp)
    assert np.allclose(q.Delta, np.linalg.inv(p.Delta), atol=1e-7)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6), st.booleans())
def test_transform_law(n, seed, anti):
    rng = np.random.default_rng(seed)
    V = stdsp.random_standard(n, rng)
    U = stdsp.random_unitary(n, rng)
    op = AntiUnitaryOp.antiunitary(U) if anti else AntiUnitaryOp.unitary(U)
    W = stdsp.transform(op, V)
    assert W.dim == n


def test_bgl_pair_and_errors():
    K = np.diag([0.3, -0.3])
    pair, V = stdsp.bgl_pair(K, stdsp.swap_conjugation(1))
    assert np.allclose(pair.Delta, np.diag(np.exp(-2 * np.pi * np.array([0.3, -0.3]))))
    assert stdsp.kms_residual(pair, V) < 1e-12
    with pytest.raises(ModularRelationViolation):
        stdsp.bgl_pair(np.diag([0.3, 0.1]), stdsp.swap_conjugation(1))
    with pytest.raises(ModularRelationViolation):
        stdsp.bgl_pair(np.array([[0, 1], [0, 0]]), stdsp.swap_conjugation(1))


def test_invalid_modular_pairs():
    with pytest.raises(NotModularPair):
        ModularPair(np.diag([1.0, -1.0]), stdsp.swap_conjugation(1))
    with pytest.raises(NotModularPair):
        ModularPair(np.diag([2.0, 2.0]), stdsp.swap_conjugation(1))
    with pytest.raises(NotModularPair):
        ModularPair(np.eye(2), np.eye(4))


def test_non_standard_subspaces():
    # a complex line is not separating
    C = RealSubspace.from_complex_vectors(np.array([[1.0, 1j], [0.0, 0.0]]), 2)
    assert C.dim == 2
    assert not stdsp.is_separating(C)
    with pytest.raises(NotStandard):
        stdsp.modular_from_subspace(C)


def test_doubling_matches_graph_pair():
    lam = 3.0
    d = stdsp.doubling([np.eye(1)], np.array([[lam]]))
    p = stdsp.graph_pair(lam)
    assert d.pair.equals(p)
    assert d.V.equals(stdsp.subspace_from_modular(p))


def test_doubling_covariance():
    rng = np.random.default_rng(4)
    n = 3
    Delta = np.diag(rng.uniform(0.2, 3, n))
    U = np.diag(np.exp(1j * rng.uniform(0, 6, n)))  # commutes with Delta
    d = stdsp.doubling([U], Delta)
    assert d.V.dim == 2 * n and stdsp.is_standard(d.V)
    assert stdsp.modular_from_subspace(d.V).equals(d.pair, 1e-8)
    assert d.ops[0].apply(d.V).equals(d.V, 1e-9)


def test_tensor_multiplicative():
    rng = np.random.default_rng(7)
    V1, V2 = stdsp.random_standard(2, rng), stdsp.random_standard(2, rng)
    p1, p2 = stdsp.modular_from_subspace(V1), stdsp.modular_from_subspace(V2)
    T = stdsp.tensor(V1, V2)
    assert T.dim == 4
    assert stdsp.modular_from_subspace(T).equals(stdsp.tensor_pair(p1, p2), 1e-7)
    U1, U2 = AntiUnitaryOp.unitary(stdsp.random_unitary(2, rng)), AntiUnitaryOp.unitary(stdsp.random_unitary(2, rng))
    lhs = stdsp.tensor_op(U1, U2).apply(T)
    assert lhs.equals(stdsp.tensor(U1.apply(V1), U2.apply(V2)), 1e-8)


def test_fixed_part_and_intersection():
    V = stdsp.direct_sum(stdsp.real_form(1), stdsp.subspace_from_modular(stdsp.graph_pair(2.0)))
    F = stdsp.fixed_part(V)
    assert F.dim == 1
    assert stdsp.intersect_family(V, []).equals(stdsp.whole_space(V.n))
    assert stdsp.intersect_family(V, [AntiUnitaryOp.identity(V.n)]).equals(V)


def test_operator_validation():
    with pytest.raises(ValueError):
        AntiUnitaryOp(2 * np.eye(2))
    with pytest.raises(ValueError):
        AntiUnitaryOp(stdsp.conjugation(2), 1)
