"""Sign patterns of the classic compression example.

C takes a 3x3 matrix to its top-left 2x2 corner.  For the positive
definite matrix B below, the eigenvalue signs of C(B^p) - C(B)^p walk
through five intervals in p, which pins down exactly where the Jensen
power inequality C(B)^p <= C(B^p) can hold.
"""

import numpy as np

from powmean import CHOI_MATRIX, Power, choi_sign_table, compression, mat_fun

np.set_printoptions(precision=6, suppress=True)

print("B =\n", CHOI_MATRIX)
print("eigenvalues of B:", np.linalg.eigvalsh(CHOI_MATRIX))

comp = compression((0, 1), 3)
print("\nC(B) =\n", comp.apply(CHOI_MATRIX))

print("\np       eigenvalues of C(B^p) - C(B)^p          signs")
for p, signs in choi_sign_table([-2.0, -0.5, 0.5, 1.5, 3.0]):
    gap = comp.apply(mat_fun(CHOI_MATRIX, Power(p))) - mat_fun(
        comp.apply(CHOI_MATRIX), Power(p)
    )
    eigs = np.linalg.eigvalsh(gap)
    print("%-7g [%+.6f, %+.6f]              (%s, %s)"
          % (p, eigs[0], eigs[1], signs[0], signs[1]))

print("\nreading the table: C(B)^p <= C(B^p) needs (+, +), which happens only")
print("on -1 < p < 0 and 1 < p < 2 (and their closures); the reverse order")
print("needs (-, -), which happens only on 0 < p < 1.")
