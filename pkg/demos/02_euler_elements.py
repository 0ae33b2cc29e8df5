"""
Euler elements inside concrete Lie algebras
===========================================

Numerical side of the story: ad h is diagonalized, tau_h = e^{i pi ad h}
is built as the grading involution, and the ideal n_h decides
anti-ellipticity.
"""

from pathlib import Path

import numpy as np

from eulerwedge import liealg

# sl(3) with the first fundamental coweight
L = liealg.sl(3)
h = L.coords_of_matrix(np.diag([2 / 3, -1 / 3, -1 / 3]))
print("is Euler:", liealg.is_euler(L, h))
g1, g0, gm1 = liealg.grading(L, h)
print("grading dims:", g1.shape[1], g0.shape[1], gm1.shape[1])
T = liealg.tau_h(L, h)
print("tau_h automorphism residual:", liealg.automorphism_residual(L, T))

# gl(2): h = diag(1/2, -1/2) is Euler, but n_h = sl(2) contains h
G = liealg.gl(2)
hg = G.coords_of_matrix(np.diag([0.5, -0.5]))
rep = liealg.euler_report(G, hg)
print("gl2 anti-elliptic:", rep.anti_elliptic, " n_h dim:", rep.n_h_basis.shape[1])

# the 2d Poincare algebra is anti-elliptic, n_h being the translations
P = liealg.poincare(2)
print("poincare2 n_h dim:", liealg.n_h(P, P.basis_vector("M01")).shape[1],
      " anti-elliptic:", liealg.is_anti_elliptic(P, P.basis_vector("M01")))

# custom algebras come from TOML files
toml = Path(__file__).resolve().parent.parent / "tests" / "data" / "sl2.toml"
if toml.exists():
    S = liealg.load_toml(toml)
    print(S.name, S.labels, "Jacobi residual:", S.jacobi_residual()[0])
