"""
Wedges, cones and the Poincare compression semigroup
====================================================

Abstract wedges are couples (h, tau).  For the Poincare group the order on
wedges is decided exactly from the geometry of the right wedge
W_R = {|x0| < x1}.
"""

import numpy as np
import scipy.linalg

from eulerwedge import causal, cones, liealg, wedgespace
from eulerwedge.wedgespace import GradedGroupElement

# sl(2): tau maps the wedge to its dual
L = liealg.sl(2)
W = wedgespace.standard_couple(L, [0.5, 0, 0])
print("tau.W is the dual:", wedgespace.act_on_wedge(W.tau, W).same_as(wedgespace.dual_wedge(W)))
g = GradedGroupElement.exp(L, [0.0, 0.8, 0.0])
print("g.W has h =", np.round(wedgespace.act_on_wedge(g, W).h, 4))

# graded parts of the translation cone for the boost generator in 1+3 dimensions
P = liealg.poincare(4)
h = P.basis_vector("M01")
Cp, Cm = cones.graded_cone_parts(P, cones.poincare_translation_cone(4), h)
print("C+ generator:", np.round(Cp.generators[0][:4], 4), " C- generator:", np.round(Cm.generators[0][:4], 4))

# Lie wedge g_0 + C_+ + C_-, and a flow along one of its elements
_, g0, _ = liealg.grading(P, h)
LW = cones.lie_wedge_LSW(g0, Cp, Cm)
x = LW.edge[:, 0] + Cp.generators[0] + 0.5 * Cm.generators[0]
pts = causal.sample_region(causal.in_wedge_WR, 4, 2000, seed=0)
A = scipy.linalg.expm(3.0 * P.to_matrix(x))
img = pts @ A[:4, :4].T + A[:4, 4]
print("points left in the closed wedge after t = 3:", int(causal.in_closed_wedge_WR(img, 1e-9).sum()), "/ 2000")

# order: a translation into the wedge compresses it, a time translation does not
Wp = wedgespace.poincare_couple(4)
cfg = wedgespace.poincare_config(4)
for v in ([0, 1, 0, 0], [1, 0, 0, 0]):
    el = wedgespace.poincare_element(P, causal.IsometryElement.translation_by(v))
    print("translation", v, "->", wedgespace.semigroup_member(cfg, Wp, el).value)

# the sampled check finds a witness point for the time translation
v = causal.sampled_compression_check(causal.IsometryElement.translation_by([1.0, 0, 0, 0]), n=5000)
print(v.kind, "witness", np.round(v.point, 3), "->", np.round(v.image, 3))
