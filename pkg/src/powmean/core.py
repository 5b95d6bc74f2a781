"""Dense real symmetric matrix algebra for small matrices (dim 1..8).

Everything downstream rests on four primitives: a symmetrizing constructor,
a deterministic spectral decomposition (closed form for 2x2, cyclic Jacobi
above), spectral matrix functions f(M) = V diag(f(lambda_i)) V^T, and a
Loewner-order verdict that always carries a witness vector.

All operations are pure functions of their inputs; arrays are never mutated
in place once returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainError,
    NonConvergenceError,
    PreconditionError,
)
from .functions import Exp, Log, Power, ScalarFunction

MAX_DIM = 8
_MAX_ASYMMETRY = 1e-13
_JACOBI_SWEEP_CAP = 100


@dataclass(frozen=True)
class Tolerances:
    """Dimensionless relative scales used throughout the package.

    Attributes
    ----------
    eig : float
        Spectral decomposition accuracy (reconstruction, orthogonality).
    psd : float
        Floor below which an eigenvalue counts as non-positive for domain
        checks, relative to the matrix norm; also the unitality slack.
    order : float
        Slack in Loewner-order verdicts, relative to 1 + the norm of the
        difference.
    confluent : float
        Node separation below which divided differences switch to their
        derivative-based confluent form.
    """

    eig: float = 1e-12
    psd: float = 1e-10
    order: float = 1e-10
    confluent: float = 1e-7

    def __post_init__(self) -> None:
        for name in ("eig", "psd", "order", "confluent"):
            if not getattr(self, name) > 0.0:
                raise PreconditionError("tolerance %r must be positive" % name)
        if not self.confluent > self.eig:
            raise PreconditionError("confluent tolerance must exceed eig tolerance")


DEFAULT_TOL = Tolerances()


class SpectralDecomposition(NamedTuple):
    """Ascending eigenvalues and an orthogonal matrix of column eigenvectors."""

    eigenvalues: np.ndarray
    basis: np.ndarray


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of a Loewner comparison A <= B.

    ``min_eigenvalue`` is the smallest eigenvalue of B - A and ``witness``
    is a unit vector achieving it, so a failed verdict is certified by
    witness^T (B - A) witness = min_eigenvalue < 0.
    """

    holds: bool
    min_eigenvalue: float
    witness: np.ndarray


def symmetrize(m, max_asymmetry: float = _MAX_ASYMMETRY) -> np.ndarray:
    """Validate a square matrix and return its exactly symmetric part.

    Asymmetry up to ``max_asymmetry`` (relative to 1 + the max entry) is
    treated as accumulation drift and averaged away; anything larger is an
    error rather than silently rewritten.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise PreconditionError("expected a square matrix, got shape %r" % (m.shape,))
    n = m.shape[0]
    if not 1 <= n <= MAX_DIM:
        raise PreconditionError("dimension %d outside 1..%d" % (n, MAX_DIM))
    if not np.all(np.isfinite(m)):
        raise PreconditionError("matrix entries must be finite")
    asym = float(np.abs(m - m.T).max())
    if asym > max_asymmetry * (1.0 + float(np.abs(m).max())):
        raise PreconditionError("asymmetry %.3e exceeds the construction guard" % asym)
    return (m + m.T) / 2.0


def _fix_column_signs(v: np.ndarray) -> np.ndarray:
    idx = np.argmax(np.abs(v), axis=0)
    signs = np.where(v[idx, np.arange(v.shape[1])] < 0.0, -1.0, 1.0)
    return v * signs


def _eig_1x1(m: np.ndarray) -> SpectralDecomposition:
    return SpectralDecomposition(np.array([m[0, 0]]), np.ones((1, 1)))


def _eig_2x2(m: np.ndarray) -> SpectralDecomposition:
    a = float(m[0, 0])
    b = float(m[0, 1])
    d = float(m[1, 1])
    if b == 0.0:
        if a <= d:
            return SpectralDecomposition(np.array([a, d]), np.eye(2))
        return SpectralDecomposition(np.array([d, a]), np.array([[0.0, 1.0], [1.0, 0.0]]))
    half = 0.5 * (a - d)
    r = math.hypot(half, b)
    mid = 0.5 * (a + d)
    # Cancellation-free eigenvector for the larger eigenvalue.
    if half >= 0.0:
        ux, uy = r + half, b
    else:
        ux, uy = b, r - half
    nrm = math.hypot(ux, uy)
    c, s = ux / nrm, uy / nrm
    basis = _fix_column_signs(np.array([[-s, c], [c, s]]))
    return SpectralDecomposition(np.array([mid - r, mid + r]), basis)


def _eig_jacobi(m: np.ndarray, tol: Tolerances) -> SpectralDecomposition:
    a = m.copy()
    n = a.shape[0]
    v = np.eye(n)
    iu = np.triu_indices(n, 1)
    thresh = tol.eig * math.sqrt(float((a * a).sum()))
    # One extra sweep after crossing the threshold: clustered spectra need
    # off-diagonals at machine level for accurate eigenvectors.
    polish = 1
    for _ in range(_JACOBI_SWEEP_CAP):
        if float(np.abs(a[iu]).max()) <= thresh:
            if polish == 0:
                break
            polish -= 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
                vcolp = v[:, p].copy()
                vcolq = v[:, q].copy()
                v[:, p] = c * vcolp - s * vcolq
                v[:, q] = s * vcolp + c * vcolq
    else:
        raise NonConvergenceError(
            "Jacobi sweeps exceeded the cap of %d" % _JACOBI_SWEEP_CAP
        )
    diag = np.diag(a)
    order = np.argsort(diag, kind="stable")
    return SpectralDecomposition(diag[order].copy(), _fix_column_signs(v[:, order]))


def eig_sym(m, tol: Tolerances = DEFAULT_TOL) -> SpectralDecomposition:
    """Spectral decomposition of a real symmetric matrix.

    Uses the closed-form rotation for 2x2 and cyclic Jacobi sweeps above,
    with the off-diagonal threshold ``tol.eig`` times the Frobenius norm and
    a hard cap on sweeps.  Deterministic for fixed input.

    Returns
    -------
    SpectralDecomposition
        Eigenvalues ascending; ``basis`` orthogonal with eigenvectors as
        columns, so ``basis @ diag(eigenvalues) @ basis.T`` reconstructs
        the input.

    Raises
    ------
    NonConvergenceError
        If the sweep cap is exceeded (pathological input).
    """
    m = symmetrize(m)
    n = m.shape[0]
    if n == 1:
        return _eig_1x1(m)
    if n == 2:
        return _eig_2x2(m)
    return _eig_jacobi(m, tol)


def _spectrum_values(f: ScalarFunction, eigs: np.ndarray, tol: Tolerances) -> np.ndarray:
    if isinstance(f, Exp):
        return np.exp(eigs)
    floor = tol.psd * float(np.abs(eigs).max())
    if isinstance(f, Log):
        if eigs[0] <= floor:
            raise DomainError(
                "log needs eigenvalues > %.3e, smallest is %.3e" % (floor, eigs[0])
            )
        return np.log(eigs)
    if not isinstance(f, Power):
        raise TypeError("unsupported scalar function tag: %r" % (f,))
    r = f.exponent
    if r == round(r) and r >= 0.0:
        return eigs ** int(round(r))
    if r > 0.0:
        if eigs[0] < -floor:
            raise DomainError(
                "power %g needs eigenvalues >= 0, smallest is %.3e" % (r, eigs[0])
            )
        # eigenvalues inside the floor are true zeros up to rounding; mapping
        # their junk magnitude through a fractional power would inflate it
        return np.where(eigs <= floor, 0.0, eigs) ** r
    if eigs[0] <= floor:
        raise DomainError(
            "power %g needs eigenvalues > %.3e, smallest is %.3e" % (r, floor, eigs[0])
        )
    return eigs**r


def mat_fun(m, f: ScalarFunction, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Spectral matrix function: apply a scalar function to the eigenvalues.

    Parameters
    ----------
    m : array_like
        Real symmetric matrix.
    f : Power | Log | Exp
        Scalar function tag.  ``Power(r)`` with r a nonnegative integer is
        unrestricted; with r > 0 fractional it admits positive semidefinite
        input, treating eigenvalues within ``tol.psd * norm(m)`` of zero as
        exact zeros (0 ** r = 0); ``Power(r <= 0)`` and ``Log`` require all
        eigenvalues above that floor.

    Raises
    ------
    DomainError
        If an eigenvalue violates the function's domain as above.
    """
    dec = eig_sym(m, tol)
    vals = _spectrum_values(f, dec.eigenvalues, tol)
    out = (dec.basis * vals) @ dec.basis.T
    return (out + out.T) / 2.0


def loewner_leq(a, b, tol: Tolerances = DEFAULT_TOL) -> OrderVerdict:
    """Decide A <= B in the Loewner order, with a witness.

    The verdict holds iff the smallest eigenvalue of B - A is at least
    ``-tol.order * (1 + max|B - A|)``; the witness is the corresponding
    unit eigenvector either way.
    """
    a = symmetrize(a)
    b = symmetrize(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(
            "cannot compare %r with %r" % (a.shape, b.shape)
        )
    d = b - a
    dec = eig_sym(d, tol)
    lam = float(dec.eigenvalues[0])
    scale = 1.0 + float(np.abs(d).max())
    return OrderVerdict(lam >= -tol.order * scale, lam, dec.basis[:, 0].copy())


def random_pd(dim: int, seed: int, condition_spread: float = 10.0) -> np.ndarray:
    """Seeded random symmetric positive definite matrix.

    Eigenvalues are drawn log-uniformly in
    ``[1/condition_spread, condition_spread]`` and conjugated by a random
    orthogonal basis, so ``condition_spread == 1`` forces the identity.
    Deterministic per ``(dim, seed, condition_spread)``.
    """
    if not 1 <= dim <= MAX_DIM:
        raise PreconditionError("dimension %d outside 1..%d" % (dim, MAX_DIM))
    if condition_spread < 1.0:
        raise PreconditionError("condition_spread must be >= 1")
    rng = np.random.default_rng(seed)
    vals = np.exp(rng.uniform(-1.0, 1.0, size=dim) * math.log(condition_spread))
    gauss = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(gauss)
    q = q * np.where(np.diag(r) >= 0.0, 1.0, -1.0)
    return symmetrize((q * vals) @ q.T)
