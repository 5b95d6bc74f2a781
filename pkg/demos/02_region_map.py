"""Map of the exponent plane.

For which (p, q) does M_p(A, B) <= M_q(A, B) hold for every positive
definite pair?  Exactly on a six-piece region; everything else below the
diagonal admits a certified counterexample from one of three families.
"""

from powmean import Case, classify

GLYPH = {
    Case.IN_REGION: "#",
    Case.SCALAR_FAIL: ".",
    Case.PD_ROTATION: "r",
    Case.LOG_EUCLIDEAN: "l",
    Case.RANK_ONE: "k",
}

STEP = 0.25
LO, HI = -2.0, 2.0

print("q runs upward, p runs rightward, both over [%g, %g] step %g" % (LO, HI, STEP))
print("#  order inequality holds for all pairs")
print(".  fails already for scalars (p > q)")
print("r/l/k  counterexample family (pd-rotation / log-euclidean / rank-one),")
print("       upper case when reached through the (p,q) -> (-q,-p) reflection\n")

steps = int(round((HI - LO) / STEP))
for j in range(steps, -1, -1):
    q = LO + j * STEP
    row = []
    for i in range(steps + 1):
        p = LO + i * STEP
        label = classify(p, q)
        glyph = GLYPH[label.case]
        row.append(glyph.upper() if label.via_dual else glyph)
    print("q=%+5.2f  %s" % (q, " ".join(row)))

print("\ncounts on the [-4, 4] grid, step 0.25:")
counts = {}
for i in range(33):
    for j in range(33):
        label = classify(-4.0 + 0.25 * i, -4.0 + 0.25 * j)
        counts[str(label)] = counts.get(str(label), 0) + 1
for name in sorted(counts):
    print("  %-22s %4d" % (name, counts[name]))
