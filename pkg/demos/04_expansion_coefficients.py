"""Closed-form determinant coefficients against the extrapolation oracle.

For A = diag(1, x) and B_t the rotation of diag(1, y) by a small angle t,
det(M_q - M_p) = coeff * t^2 + o(t^2).  The coefficient has a closed form
for the generic family, its log-Euclidean limit, and the singular rank-one
family; a Richardson tableau on det/t^2 recovers the same number without
touching the formulas.
"""

from powmean import (
    det_coeff_log_pair,
    det_coeff_power_pair,
    det_coeff_rank_one,
    numeric_det_coeff,
    pd_rotation_difference,
    rank_one_difference,
    rank_one_remainder_orders,
)


def report(name, closed, oracle):
    gap = abs(closed - oracle.value)
    print("  %-28s closed %+.8e   oracle %+.8e   gap %.1e"
          % (name, closed, oracle.value, gap))


print("generic family (p, q, x, y):")
for p, q, x, y in [(1.0, 2.0, 0.5, 0.25), (0.25, 1.0, 0.0625, 0.00390625),
                   (-0.5, 0.5, 0.3, 0.09)]:
    closed = det_coeff_power_pair(p, q, x, y)
    oracle = numeric_det_coeff(pd_rotation_difference(p, q, x, y))
    report("(%g, %g, %g, %g)" % (p, q, x, y), closed.total, oracle)
    print("      breakdown: delta1 = %+.3e, delta2 = %+.3e (delta2 <= 0 always)"
          % (closed.delta1, closed.delta2))

print("\nlog-Euclidean family (q, x, y); also the p -> 0 limit of the above:")
for q, x, y in [(1.0, 0.01, 0.0001), (2.0, 0.3, 0.6)]:
    closed = det_coeff_log_pair(q, x, y)
    oracle = numeric_det_coeff(pd_rotation_difference(0.0, q, x, y))
    report("(%g, %g, %g)" % (q, x, y), closed.total, oracle)
    limit = det_coeff_power_pair(1e-6, q, x, y).total
    print("      power-family value at p = 1e-6: %+.8e" % limit)

print("\nrank-one family (p, q), always nonpositive, zero only at p = q:")
for p, q in [(0.25, 0.5), (0.6, 0.8), (0.7, 0.9)]:
    closed = det_coeff_rank_one(p, q)
    orders = rank_one_remainder_orders(p, q)
    oracle = numeric_det_coeff(rank_one_difference(p, q), orders=orders)
    report("(%g, %g)" % (p, q), closed, oracle)
    print("      tail elimination orders: %s" % (orders,))

print("\nnegative coefficient => the determinant of M_q - M_p goes negative")
print("for small angles, so the difference is indefinite: a counterexample.")
