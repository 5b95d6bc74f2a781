"""Certified counterexamples outside the sufficiency region.

Each witness is a concrete 2x2 pair (A, B) together with a unit vector v
and the negative value v^T (M_q - M_p) v, so the failure of the order
inequality is checkable by hand.
"""

import numpy as np

from powmean import classify, find_counterexample, power_mean

np.set_printoptions(precision=8, suppress=True)


def show(p, q):
    label = classify(p, q)
    w = find_counterexample(p, q)
    print("(p, q) = (%g, %g)   family: %s" % (p, q, label))
    if w.x is not None:
        print("  construction: x = %g, y = x^2 = %g, angle = %g" % (w.x, w.y, w.theta))
    elif w.theta is not None:
        print("  construction: rank-one projection at angle %g" % w.theta)
    print("  A =", np.array2string(w.a, prefix="      "))
    print("  B =", np.array2string(w.b, prefix="      "))
    diff = power_mean(q, w.a, w.b) - power_mean(p, w.a, w.b)
    quad = float(w.witness @ diff @ w.witness)
    print("  negative eigenvalue: %.6e" % w.neg_eigenvalue)
    print("  v^T (M_q - M_p) v  : %.6e  (recomputed)" % quad)
    print()


print("direct constructions:")
show(0.25, 1.0)     # generic exponent window
show(0.0, 2.0)      # log-Euclidean mean on the left
show(0.6, 0.8)      # both exponents in (0, 1): singular rank-one pair

print("through the (p,q) -> (-q,-p) reflection (witness pairs inverted,")
print("then re-certified directly):")
show(-2.0, -0.25)
show(-0.9, -0.7)

print("p > q fails even for scalars:")
show(2.0, 1.0)
