"""
Grid models: the U(1) current and Aff(R)
========================================

The one-particle space of the U(1) current is L^2(R_+, p dp).  On the
logarithmic grid u = log p dilations become shifts and the modular group
is generated by -i d/du.
"""

import numpy as np

from eulerwedge import models

ops = models.build_u1_current(512)
print("dilation unitarity defect:", ops.unitarity_defect(1.3))
print("group law residual:", ops.group_law_residual([(0.3, 1.5), (-0.4, 0.6)]))

# KMS residual of the band-limited BGL basis at N and 2N
t = models.kms_trend(512)
print("KMS residuals:", ["%.2e" % v for v in t["kms_residual"]], " ratio %.3f" % t["ratio"])

# inner product of two Gaussians against adaptive quadrature
c = models.inner_product_convergence()
print("inner product errors:", ["%.1e" % e for e in c["errors"]])

# H^(k)(I) inside H^(l)(I): codimension from a singular value gap
ops = models.build_u1_current(1024, 1e-4, 300.0)
for k, l in [(1, 2), (1, 3), (2, 3)]:
    r = models.codimension_profile(ops, (-1.0, 1.0), k, l)
    print(f"k={k} l={l}: estimate {r['estimate']}  gap ratio {r['gap_ratio']:.1e}")

# half-line: the distance to the larger space shrinks like 1/L
r = models.half_line_study(ops)
print("half-line distances:", ["%.3f" % d for d in r["distance"]], " slope %.2f" % r["loglog_slope"])

# Aff(R): no eigenvector of the discretized momentum carries a noticeable share of a packet
rep = models.build_aff_rep(1024)
f = models.spectral_flatness(rep)
print("Aff flatness max weight %.4f (threshold %.2f)" % (f["max_weight"], f["threshold"]))
print("commutator trend:", models.aff_trend(512)["commutator_residual"])
