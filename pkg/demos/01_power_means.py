"""Tour of the two-matrix power mean and its log-Euclidean limit.

The p-power mean ((A^p + B^p)/2)^(1/p) interpolates between the harmonic
mean (p = -1), the log-Euclidean mean (p -> 0), and the arithmetic mean
(p = 1).  This script evaluates the family on a sample pair and checks the
classical identities numerically.
"""

import numpy as np

from powmean import Power, limit_slope_check, mat_fun, power_mean, random_pd
from powmean.maps import block_average

np.set_printoptions(precision=6, suppress=True)

a = random_pd(2, seed=1, condition_spread=6.0)
b = random_pd(2, seed=2, condition_spread=6.0)
print("A =\n", a)
print("B =\n", b)

print("\nmean as a function of the exponent (trace shown):")
for p in (-4.0, -1.0, -0.5, 0.0, 0.5, 1.0, 4.0):
    m = power_mean(p, a, b)
    print("  p = %+5.1f   trace = %.6f" % (p, np.trace(m)))
print("the trace grows with p: the family is monotone for scalars,")
print("and in the Loewner order exactly on the sufficiency region.")

print("\narithmetic and harmonic checks:")
arith = power_mean(1.0, a, b)
harm = power_mean(-1.0, a, b)
inv = lambda m: mat_fun(m, Power(-1.0))
print("  |M_1  - (A+B)/2|           =", np.abs(arith - (a + b) / 2).max())
print("  |M_-1 - ((A^-1+B^-1)/2)^-1| =",
      np.abs(harm - inv((inv(a) + inv(b)) / 2.0)).max())

print("\ninversion duality M_p(A,B)^-1 = M_{-p}(A^-1, B^-1):")
for p in (-2.0, 0.0, 0.7):
    lhs = inv(power_mean(p, a, b))
    rhs = power_mean(-p, inv(a), inv(b))
    print("  p = %+4.1f   gap = %.2e" % (p, np.abs(lhs - rhs).max()))

print("\nthe p -> 0 limit (deviation from the log-Euclidean mean, via the")
print("block-average map on A (+) B):")
embed = np.zeros((4, 4))
embed[:2, :2] = a
embed[2:, 2:] = b
ps = np.array([1e-1, 1e-2, 1e-3, 1e-4])
devs = limit_slope_check(block_average(2), embed, ps)
for p, d in zip(ps, devs):
    print("  p = %.0e   deviation = %.3e   deviation/p = %.4f" % (p, d, d / p))
print("deviation/p settles to a constant: the limit is attained at first order.")
