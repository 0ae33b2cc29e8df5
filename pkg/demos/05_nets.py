"""
Maximal and minimal nets on a finite family of wedges
=====================================================

A finite family of Poincare elements in 1+1 dimensions acts on C^2 through
functions of the modular operator.  The maximal net intersects, the
minimal net spans.
"""

import numpy as np

from eulerwedge import nets, stdsp
from eulerwedge.stdsp import AntiUnitaryOp

good = nets.good_toy()
r = nets.direct_net_report(good)
print("compressors of W:", r["compressors"])
for k, v in r["verdicts"].items():
    print(f"  {k:22s} {v}")

# a generic unitary on one compressor spoils every verdict at once
bad = nets.counterexample_toy()
r = nets.direct_net_report(bad)
print("counterexample at", r["counterexample"], " consistent:", r["consistent"])

# a double cone deep inside W
D = nets.double_cone([0.0, 2.0], 0.5)
print("h_max(D) dim:", nets.h_max(good, D).dim, " h_min(D) dim:", nets.h_min(good, D).dim)
print("sandwich for h_max:", nets.sandwich_check(good, lambda O: nets.h_max(good, O), [D]))
try:
    nets.sandwich_check(good, nets.isotony_violating_net(good))
except Exception as exc:  # the isotony axiom fails and is reported
    print("rejected:", exc)

# degeneracy: modular flow alone fixes V, so V_G = V while V n V' = 0
p = stdsp.graph_pair(3.0)
V = stdsp.subspace_from_modular(p)
rep = nets.degeneracy_report(V, [p.modular_unitary(t) for t in np.linspace(-1, 1, 5)])
print("flow only: dim V_G =", rep["dim_V_G"], " dim V n V' =", rep["dim_V_cap_Vprime"])

# a generic family shrinks V_G down to V n V'
V = stdsp.direct_sum(stdsp.real_form(1), V)
U = stdsp.random_unitary(2, np.random.default_rng(0))
ops = [AntiUnitaryOp.identity(3), stdsp.direct_sum_op(AntiUnitaryOp.identity(1), AntiUnitaryOp.unitary(U))]
rep = nets.degeneracy_report(V, ops)
print("generic: dim V_G =", rep["dim_V_G"], " equals V n V':", rep["equals_V_cap_Vprime"])
