"""
Standard subspaces in finite dimension
======================================

A standard subspace V of C^n is a real form with V + iV = C^n and
V n iV = 0.  Its Tomita operator S = J Delta^{1/2} is computed in the
realified picture where antilinear maps are ordinary real matrices.
"""

import numpy as np

from eulerwedge import stdsp
from eulerwedge.stdsp import AntiUnitaryOp, RealSubspace

# the graph case on C^2
p = stdsp.graph_pair(4.0)
V = stdsp.subspace_from_modular(p)
print("dim V:", V.dim, " standard:", stdsp.is_standard(V), " KMS residual:", stdsp.kms_residual(p, V))

# roundtrip for a random instance
rng = np.random.default_rng(0)
V = stdsp.random_standard(5, rng)
q = stdsp.modular_from_subspace(V)
print("Delta spectrum:", np.round(np.linalg.eigvalsh(q.Delta), 4))
print("roundtrip distance:", V.distance(stdsp.subspace_from_modular(q)))

# duality: J V = V'
Vp = stdsp.symplectic_complement(V)
print("JV = V':", RealSubspace(5, q.J @ V.basis).equals(Vp, 1e-8))

# covariance, checked inside transform
U = AntiUnitaryOp.antiunitary(stdsp.random_unitary(5, rng))
W = stdsp.transform(U, V)
print("UV is standard:", stdsp.is_standard(W))

# BGL pair from a one-parameter group, and the doubling construction
pair, V = stdsp.bgl_pair(np.diag([0.2, -0.2]), stdsp.swap_conjugation(1))
print("BGL Delta:", np.round(np.diag(pair.Delta).real, 4))
d = stdsp.doubling([np.eye(2)], np.diag([2.0, 0.5]))
print("doubled subspace dim:", d.V.dim, " modular data match:", stdsp.modular_from_subspace(d.V).equals(d.pair, 1e-8))

# tensor products multiply modular operators
T = stdsp.tensor(stdsp.subspace_from_modular(stdsp.graph_pair(2.0)), stdsp.subspace_from_modular(stdsp.graph_pair(3.0)))
print("tensor Delta:", np.round(np.sort(np.linalg.eigvalsh(stdsp.modular_from_subspace(T).Delta)), 4))
