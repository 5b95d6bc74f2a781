"""Second-order expansion machinery for rotated two-matrix means.

For A = diag(1, x) and B_t the rotation of diag(1, y) by a small angle t,
the power mean M_p(A, B_t) expands as

    [[1 + a11 t^2,  a12 t      ],
     [a12 t,        m_p + a22 t^2]]  + o(t^2),

with m_p the scalar power mean of (x, y).  The determinant of M_q - M_p is
then coeff * t^2 + o(t^2), and the coefficient has closed forms for the
generic power family, its log-Euclidean (p = 0) limit, and a singular
rank-one family.  A Richardson-extrapolation oracle computes the same
coefficient numerically and independently.

The machinery is built from two layers: confluent divided differences of
scalar functions, and Daleckii-Krein Frechet derivatives of matrix
functions (Schur products against divided-difference matrices in the
eigenbasis of the base point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .core import DEFAULT_TOL, Tolerances, eig_sym, symmetrize
from .errors import DegenerateFrameError, DomainError, NonConvergenceError, PreconditionError
from .functions import EXP, Power, ScalarFunction

DEFAULT_THETAS = tuple(0.1 * 2.0**-k for k in range(8))
_TABLEAU_COLUMNS = 2
_ORACLE_REL_TOL = 1e-5


# ---------------------------------------------------------------------------
# Divided differences
# ---------------------------------------------------------------------------

def divided_diff_1(
    f: ScalarFunction, l1: float, l2: float, tol: Tolerances = DEFAULT_TOL
) -> float:
    """First divided difference f[l1, l2], confluent limit f'(l) at l1 = l2.

    Nodes closer than ``tol.confluent`` (relative to 1 + their magnitude)
    use the analytic derivative; the result is symmetric in the arguments.
    """
    scale = 1.0 + max(abs(l1), abs(l2))
    if abs(l1 - l2) <= tol.confluent * scale:
        return f.deriv(0.5 * (l1 + l2), 1)
    return (f(l1) - f(l2)) / (l1 - l2)


def divided_diff_2(
    f: ScalarFunction,
    l1: float,
    l2: float,
    l3: float,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Second divided difference f[l1, l2, l3] with confluent limits.

    Invariant under every permutation of the nodes; coincident nodes use
    analytic derivatives (f''(l)/2 when all three coincide).
    """
    x0, x1, x2 = sorted((float(l1), float(l2), float(l3)))
    scale = 1.0 + max(abs(x0), abs(x2))
    gap = tol.confluent * scale
    if x2 - x0 <= gap:
        return 0.5 * f.deriv((x0 + x1 + x2) / 3.0, 2)
    if x1 - x0 <= gap:
        node = 0.5 * (x0 + x1)
        return (divided_diff_1(f, node, x2, tol) - f.deriv(node, 1)) / (x2 - node)
    if x2 - x1 <= gap:
        node = 0.5 * (x1 + x2)
        return (f.deriv(node, 1) - divided_diff_1(f, x0, node, tol)) / (node - x0)
    return (divided_diff_1(f, x0, x1, tol) - divided_diff_1(f, x1, x2, tol)) / (x0 - x2)


# ---------------------------------------------------------------------------
# Frechet derivatives (Daleckii-Krein)
# ---------------------------------------------------------------------------

def frechet_d1(
    f: ScalarFunction, base, h, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray:
    """First Frechet derivative of X -> f(X) at ``base`` in direction ``h``.

    In the eigenbasis of the base point this is the Schur product of the
    first-divided-difference matrix with the rotated direction:

        D f(base)(h) = V ( f[l_i, l_j] o (V^T h V) ) V^T.
    """
    base = symmetrize(base)
    h = symmetrize(h)
    if base.shape != h.shape:
        raise PreconditionError("base and direction need equal dimensions")
    dec = eig_sym(base, tol)
    lam = dec.eigenvalues
    n = lam.size
    dd = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            dd[i, j] = dd[j, i] = divided_diff_1(f, lam[i], lam[j], tol)
    ht = dec.basis.T @ h @ dec.basis
    out = dec.basis @ (dd * ht) @ dec.basis.T
    return (out + out.T) / 2.0


def frechet_d2(
    f: ScalarFunction, base, h, k, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray:
    """Second Frechet derivative D^2 f(base)(h, k), symmetric bilinear.

    With H, K rotated to the eigenbasis,

        [D^2]_{ij} = sum_r f[l_i, l_r, l_j] (H_{ir} K_{rj} + K_{ir} H_{rj}),

    so the Taylor expansion reads
    f(base + h) = f(base) + D f(h) + (1/2) D^2 f(h, h) + o(|h|^2).
    """
    base = symmetrize(base)
    h = symmetrize(h)
    k = symmetrize(k)
    if base.shape != h.shape or base.shape != k.shape:
        raise PreconditionError("base and directions need equal dimensions")
    dec = eig_sym(base, tol)
    lam = dec.eigenvalues
    n = lam.size
    ht = dec.basis.T @ h @ dec.basis
    kt = dec.basis.T @ k @ dec.basis
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for r in range(n):
                acc += divided_diff_2(f, lam[i], lam[r], lam[j], tol) * (
                    ht[i, r] * kt[r, j] + kt[i, r] * ht[r, j]
                )
            out[i, j] = acc
    rotated = dec.basis @ out @ dec.basis.T
    return (rotated + rotated.T) / 2.0


# ---------------------------------------------------------------------------
# Taylor frames and expansion coefficients
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TaylorFrame:
    """Base point with first- and second-order directions of an expansion."""

    base: np.ndarray
    first: np.ndarray
    second: np.ndarray


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Entries of the second-order mean expansion described above."""

    alpha11: float
    alpha12: float
    alpha22: float


@dataclass(frozen=True)
class DetCoefficientBreakdown:
    """The t^2 determinant coefficient split into its two contributions.

    ``delta1`` couples the diagonal second-order terms with the scalar-mean
    gap; ``delta2`` is the (always nonpositive) square of the off-diagonal
    slope difference times w_p * w_q, where w_p = 1 - m_p is one minus the
    scalar power mean (w_0 = 1 - sqrt(x y) in the log-Euclidean case).
    """

    delta1: float
    delta2: float
    wp: float
    wq: float

    @property
    def total(self) -> float:
        return self.delta1 + self.delta2


def _check_power_frame(p: float, x: float, y: float, tol: Tolerances) -> float:
    if p == 0.0:
        raise PreconditionError("power frame needs a nonzero exponent")
    if x <= 0.0 or y <= 0.0:
        raise PreconditionError("x and y must be positive")
    s = x**p + y**p
    if abs(s - 2.0) <= tol.confluent:
        raise DegenerateFrameError("x^p + y^p is too close to 2")
    return s


def taylor_frame_power(
    p: float, x: float, y: float, tol: Tolerances = DEFAULT_TOL
) -> TaylorFrame:
    """Frame of A^p + B_t^p around t = 0 for the rotated-diagonal family.

    Expanding entries of A^p + B_t^p in the rotation angle gives
    base = diag(2, x^p + y^p), first with off-diagonal 1 - y^p, and
    second = diag(-(1 - y^p), 1 - y^p).
    """
    s = _check_power_frame(p, x, y, tol)
    hy = 1.0 - y**p
    return TaylorFrame(
        base=np.diag([2.0, s]),
        first=np.array([[0.0, hy], [hy, 0.0]]),
        second=np.diag([-hy, hy]),
    )


def taylor_frame_log(x: float, y: float, tol: Tolerances = DEFAULT_TOL) -> TaylorFrame:
    """Frame of log A + log B_t around t = 0 (the p -> 0 family).

    base = diag(0, log xy), first with off-diagonal -log y, and
    second = diag(log y, -log y); requires xy away from 1.
    """
    if x <= 0.0 or y <= 0.0:
        raise PreconditionError("x and y must be positive")
    lxy = math.log(x * y)
    if abs(lxy) <= tol.confluent:
        raise DegenerateFrameError("x * y is too close to 1")
    ly = math.log(y)
    return TaylorFrame(
        base=np.diag([0.0, lxy]),
        first=np.array([[0.0, -ly], [-ly, 0.0]]),
        second=np.diag([ly, -ly]),
    )


def _second_order_matrix(
    f: ScalarFunction, frame: TaylorFrame, tol: Tolerances
) -> np.ndarray:
    base = frame.base / 2.0
    return frechet_d1(f, base, frame.second / 2.0, tol) + 0.5 * frechet_d2(
        f, base, frame.first / 2.0, frame.first / 2.0, tol
    )


def alpha_power(
    p: float, x: float, y: float, tol: Tolerances = DEFAULT_TOL
) -> ExpansionCoefficients:
    """Expansion coefficients of M_p(A, B_t) for the rotated-diagonal family.

    ``alpha11`` and ``alpha12`` come from closed forms; ``alpha22`` is read
    off the Frechet machinery (its closed form is never needed for the
    determinant coefficient).
    """
    s = _check_power_frame(p, x, y, tol)
    hy = 1.0 - y**p
    mp = (s / 2.0) ** (1.0 / p)
    wp = 1.0 - mp
    alpha11 = -(1.0 - x**p) * hy / (2.0 * p * (2.0 - s)) - hy**2 * wp / (2.0 - s) ** 2
    alpha12 = hy * wp / (2.0 - s)
    frame = taylor_frame_power(p, x, y, tol)
    alpha22 = float(_second_order_matrix(Power(1.0 / p), frame, tol)[1, 1])
    return ExpansionCoefficients(alpha11, alpha12, alpha22)


def alpha_log(x: float, y: float, tol: Tolerances = DEFAULT_TOL) -> ExpansionCoefficients:
    """Expansion coefficients of the log-Euclidean mean of (A, B_t)."""
    frame = taylor_frame_log(x, y, tol)
    lx, ly = math.log(x), math.log(y)
    lxy = lx + ly
    w0 = 1.0 - math.sqrt(x * y)
    alpha11 = lx * ly / (2.0 * lxy) - w0 * ly**2 / lxy**2
    alpha12 = w0 * ly / lxy
    alpha22 = float(_second_order_matrix(EXP, frame, tol)[1, 1])
    return ExpansionCoefficients(alpha11, alpha12, alpha22)


# ---------------------------------------------------------------------------
# Closed-form determinant coefficients
# ---------------------------------------------------------------------------

def det_coeff_power_pair(
    p: float, q: float, x: float, y: float, tol: Tolerances = DEFAULT_TOL
) -> DetCoefficientBreakdown:
    """t^2 coefficient of det(M_q - M_p) for the rotated-diagonal family.

    With m_r = ((x^r + y^r)/2)^(1/r), w_r = 1 - m_r and
    a_r = (1 - y^r)/(2 - x^r - y^r):

        delta1 = (1/2) [ (1-x^p)(1-y^p)/(p (2-x^p-y^p))
                         - (1-x^q)(1-y^q)/(q (2-x^q-y^q)) ] (m_q - m_p)
        delta2 = -(a_p - a_q)^2 w_p w_q

    Raises ``DegenerateFrameError`` when x^r + y^r is too close to 2 for
    either exponent (the divided-difference denominators degenerate).
    """
    sp = _check_power_frame(p, x, y, tol)
    sq = _check_power_frame(q, x, y, tol)
    mp = (sp / 2.0) ** (1.0 / p)
    mq = (sq / 2.0) ** (1.0 / q)
    cp = (1.0 - x**p) * (1.0 - y**p) / (p * (2.0 - sp))
    cq = (1.0 - x**q) * (1.0 - y**q) / (q * (2.0 - sq))
    ap = (1.0 - y**p) / (2.0 - sp)
    aq = (1.0 - y**q) / (2.0 - sq)
    wp, wq = 1.0 - mp, 1.0 - mq
    delta1 = 0.5 * (cp - cq) * (mq - mp)
    delta2 = -((ap - aq) ** 2) * wp * wq
    return DetCoefficientBreakdown(delta1, delta2, wp, wq)


def det_coeff_log_pair(
    q: float, x: float, y: float, tol: Tolerances = DEFAULT_TOL
) -> DetCoefficientBreakdown:
    """t^2 coefficient of det(M_q - log-Euclidean mean), the p -> 0 limit.

        delta1 = -(1/2) [ log x log y / log xy
                          + (1-x^q)(1-y^q)/(q (2-x^q-y^q)) ] (m_q - sqrt(xy))
        delta2 = -( log y/log xy - (1-y^q)/(2-x^q-y^q) )^2 w_0 w_q

    Requires xy away from 1 and x^q + y^q away from 2.
    """
    if x <= 0.0 or y <= 0.0:
        raise PreconditionError("x and y must be positive")
    lxy = math.log(x * y)
    if abs(lxy) <= tol.confluent:
        raise DegenerateFrameError("x * y is too close to 1")
    sq = _check_power_frame(q, x, y, tol)
    mq = (sq / 2.0) ** (1.0 / q)
    m0 = math.sqrt(x * y)
    w0, wq = 1.0 - m0, 1.0 - mq
    cq = (1.0 - x**q) * (1.0 - y**q) / (q * (2.0 - sq))
    a0 = math.log(y) / lxy
    aq = (1.0 - y**q) / (2.0 - sq)
    delta1 = -0.5 * (math.log(x) * math.log(y) / lxy + cq) * (mq - m0)
    delta2 = -((a0 - aq) ** 2) * w0 * wq
    return DetCoefficientBreakdown(delta1, delta2, w0, wq)


def det_coeff_rank_one(p: float, q: float) -> float:
    """t^2 coefficient of det(M_q - M_p) for the singular rank-one family.

    For A = diag(2, 0) and B_t the rank-one projection at angle t,

        coeff = -((2^p+1)/2)^(1/p) ((2^q+1)/2)^(1/q)
                 (1/(2^p+1) - 1/(2^q+1))^2,

    valid for p, q in (0, 1); always <= 0, zero exactly when p = q.
    """
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        raise DomainError("rank-one coefficient needs p, q in (0, 1)")
    mp = ((2.0**p + 1.0) / 2.0) ** (1.0 / p)
    mq = ((2.0**q + 1.0) / 2.0) ** (1.0 / q)
    gap = 1.0 / (2.0**p + 1.0) - 1.0 / (2.0**q + 1.0)
    return -mp * mq * gap**2


# ---------------------------------------------------------------------------
# Numeric oracle
# ---------------------------------------------------------------------------

class ExtrapolationResult(NamedTuple):
    value: float
    error: float


DEFAULT_REMAINDER_ORDERS = (2.0, 4.0)


def rank_one_remainder_orders(p: float, q: float) -> tuple[float, ...]:
    """Elimination orders for the singular rank-one family's det/t^2 tail.

    The semidefinite pair feeds fractional powers t^(2/r - 2) into the
    tail, one per exponent r with 2/r - 2 below the analytic orders; those
    must be eliminated alongside the usual t^2 and t^4 terms or the tableau
    stalls for exponents above 1/2.
    """
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        raise DomainError("rank-one remainder orders need p, q in (0, 1)")
    fractional = {
        round(2.0 / r - 2.0, 12)
        for r in (p, q)
        if 2.0 / r - 2.0 < 2.0 - 1e-9
    }
    return tuple(sorted(fractional)) + DEFAULT_REMAINDER_ORDERS


def numeric_det_coeff(
    difference_at: Callable[[float], np.ndarray],
    thetas: Sequence[float] = DEFAULT_THETAS,
    rel_tol: float = _ORACLE_REL_TOL,
    orders: Sequence[float] = DEFAULT_REMAINDER_ORDERS,
) -> ExtrapolationResult:
    """Richardson-extrapolated limit of det(difference(t)) / t^2 as t -> 0.

    ``difference_at`` maps an angle to a symmetric 2x2 matrix whose
    determinant is coeff * t^2 + o(t^2).  A descending angle sequence
    (ratio 2 by default) feeds a Neville tableau that eliminates the tail
    terms t^order for each entry of ``orders``; the default (2, 4) suits
    determinants that are even analytic functions of the angle, while
    singular families carry fractional orders (see
    ``rank_one_remainder_orders``).  The reported error is the gap between
    the last two extrapolants.

    Raises
    ------
    NonConvergenceError
        If successive extrapolants disagree beyond 10x ``rel_tol``.
    """
    ts = np.asarray(thetas, dtype=float)
    if ts.ndim != 1 or ts.size < 4:
        raise PreconditionError("need at least 4 angles")
    if not np.all(ts > 0.0) or not np.all(np.diff(ts) < 0.0):
        raise PreconditionError("angles must be positive and strictly descending")
    orders = tuple(float(e) for e in orders)
    if not orders or any(e <= 0.0 for e in orders):
        raise PreconditionError("elimination orders must be positive")
    if len(orders) >= ts.size:
        raise PreconditionError("need more angles than elimination orders")
    ratios = []
    for t in ts:
        d = np.asarray(difference_at(float(t)), dtype=float)
        if d.shape != (2, 2):
            raise PreconditionError("difference_at must return a 2x2 matrix")
        det = d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0]
        ratios.append(det / (t * t))
    col = np.array(ratios)
    nodes = ts
    for e in orders:
        factor = (nodes[:-1] / nodes[1:]) ** e
        col = (factor * col[1:] - col[:-1]) / (factor - 1.0)
        nodes = nodes[1:]
    value = float(col[-1])
    error = float(abs(col[-1] - col[-2]))
    if error > 10.0 * rel_tol * (1.0 + abs(value)):
        raise NonConvergenceError(
            "extrapolants disagree by %.3e at value %.6e" % (error, value)
        )
    return ExtrapolationResult(value, error)
