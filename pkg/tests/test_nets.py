import numpy as np
import pytest

from eulerwedge import causal, nets, stdsp
from eulerwedge.errors import PreconditionViolated
from eulerwedge.stdsp import AntiUnitaryOp


@pytest.fixture(scope="module")
def good():
    return nets.good_toy()


def test_region_inclusions():
    W = nets.wedge_region(dim=2)
    a = nets.wedge_region(causal.IsometryElement.translation_by([0.0, 1.0]))
    t = nets.wedge_region(causal.IsometryElement.translation_by([1.0, 0.0]))
    assert nets.included(a, W) and not nets.included(W, a)
    assert not nets.included(t, W)
    D = nets.double_cone([0.0, 2.0], 0.5)
    assert nets.included(D, W)
    assert not nets.included(nets.double_cone([0.0, 0.2], 0.5), W)
    assert nets.included(nets.double_cone([0.0, 2.0], 0.2), D)
    assert not nets.included(W, D)


def test_good_toy_all_true(good):
    r = nets.direct_net_report(good)
    assert all(r["verdicts"].values())
    assert r["consistent"] and r["counterexample"] is None
    assert set(r["compressors"]) >= {"a", "b"}


def test_counterexample_toy_is_consistent():
    r = nets.direct_net_report(nets.counterexample_toy())
    assert not any(r["verdicts"].values())
    assert r["consistent"]
    assert r["counterexample"] == "a"


def test_sandwich(good):
    D = nets.double_cone([0.0, 2.0], 0.5)
    assert nets.sandwich_check(good, lambda O: nets.h_max(good, O), [D])
    assert nets.sandwich_check(good, lambda O: nets.h_min(good, O), [D])
    with pytest.raises(PreconditionViolated, match="Iso"):
        nets.sandwich_check(good, nets.isotony_violating_net(good))


def test_hmax_hmin_on_double_cone(good):
    D = nets.double_cone([0.0, 2.0], 0.5)
    assert nets.h_max(good, D).equals(good.V)
    assert nets.h_min(good, D).dim == 0


def test_homomorphism_checked(good):
    rep = list(good.rep)
    rep[good.family.labels.index("boost+")] = AntiUnitaryOp.unitary(stdsp.random_unitary(2, np.random.default_rng(1)))
    with pytest.raises(PreconditionViolated):
        nets.NetConfig(good.family, rep, good.V)


def test_degeneracy_mixed_block():
    # Delta = 1 on the first summand, graph case on the other two
    V = stdsp.direct_sum(stdsp.real_form(1), stdsp.subspace_from_modular(stdsp.graph_pair(3.0)))
    U = stdsp.random_unitary(2, np.random.default_rng(0))
    ops = [AntiUnitaryOp.identity(3), stdsp.direct_sum_op(AntiUnitaryOp.identity(1), AntiUnitaryOp.unitary(U))]
    r = nets.degeneracy_report(V, ops)
    assert r["dim_V_cap_Vprime"] == 1
    assert r["equals_V_cap_Vprime"]
    assert r["V_cap_Vprime"].equals(stdsp.fixed_part(V))


def test_degeneracy_flow_only():
    p = stdsp.graph_pair(3.0)
    V = stdsp.subspace_from_modular(p)
    ops = [p.modular_unitary(t) for t in (0.0, 0.3, -1.1)]
    r = nets.degeneracy_report(V, ops)
    assert r["V_G"].equals(V)
    assert r["dim_V_cap_Vprime"] == 0
    assert not r["equals_V_cap_Vprime"]


def test_regularity_probe(good):
    assert nets.regularity_probe(good.V, good.rep)["regular"]
    p = stdsp.graph_pair(3.0)
    V = stdsp.subspace_from_modular(p)
    U = AntiUnitaryOp.unitary(stdsp.random_unitary(2, np.random.default_rng(2)))
    assert not nets.regularity_probe(V, [AntiUnitaryOp.identity(2), U])["regular"]
