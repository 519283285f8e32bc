"""Exact Kronecker factorization and nearest Kronecker product.

A nonzero matrix splits as ``B ⊗ C`` for a given partition exactly when its
block vec matrix has rank one. The rank test and the best approximation both
come from the dominant singular triple of that matrix, which is computed here
by power iteration on the smaller Gram matrix.
"""
from dataclasses import dataclass

import numpy as np

from .core import as_matrix, frobenius, rearrange, unvec
from .errors import NotFactorizable, ZeroMatrixError

DEFAULT_TOL = 1e-10
MAX_ITER = 10_000
# relative change in the sigma estimate that counts as converged
SIGMA_RTOL = 1e-14
# relative closeness under which two moduli are treated as tied
TIE_RTOL = 1e-12


@dataclass(frozen=True)
class RankOneCertificate:
    """Dominant singular triple of ``R`` with ``R ≈ sigma1 * u @ v.T``.

    ``v`` is the conjugate of the usual right singular vector, so the
    approximation uses a plain transpose. For real ``R`` nothing changes.
    """

    sigma1: float
    u: np.ndarray
    v: np.ndarray
    relative_residual: float
    iterations: int = 0

    def is_rank_one(self, tol=DEFAULT_TOL):
        return self.relative_residual <= tol

    def approximation(self):
        return self.sigma1 * (self.u @ self.v.T)


@dataclass(frozen=True)
class FactorPair:
    """Kronecker factors ``(B, C)`` scaled so that ``vec(C)`` has unit norm
    and its largest-modulus entry is real and positive."""

    B: np.ndarray
    C: np.ndarray

    def product(self):
        return np.kron(self.B, self.C)


def _start_vector(r, rows):
    # row sums (or column sums) of |R|, plus a fixed sign-varying component
    # so symmetric sign patterns cannot pin the start to a minor eigenvector
    mags = np.abs(r).sum(axis=1 if rows else 0)
    size = mags.shape[0]
    norm = np.linalg.norm(mags)
    x = mags / norm if norm > 0 else np.ones(size) / np.sqrt(size)
    x = x + 0.25 * np.sin(np.arange(1, size + 1)) / np.sqrt(size)
    return x.astype(r.dtype) / np.linalg.norm(x)


def dominant_triple(r, max_iter=MAX_ITER):
    """Return ``(sigma, u, w, iterations)`` with ``r @ w ≈ sigma * u``.

    ``u`` and ``w`` are unit vectors (1-D). Iterates on ``r r^H`` or
    ``r^H r``, whichever is smaller, and recovers the other vector with
    one multiplication.
    """
    r = as_matrix(r)
    # the Gram matrix squares magnitudes; keep it clear of under/overflow
    scale = float(np.abs(r).max())
    if scale == 0.0:
        raise ZeroMatrixError("dominant singular triple of a zero matrix")
    r = r / scale
    rows, cols = r.shape
    on_rows = rows <= cols
    gram = r @ r.conj().T if on_rows else r.conj().T @ r
    x = _start_vector(r, on_rows)

    lam = 0.0
    it = 0
    for it in range(1, max_iter + 1):
        y = gram @ x
        ynorm = np.linalg.norm(y)
        if ynorm == 0.0:
            break
        x = y / ynorm
        lam_new = float(np.real(np.vdot(x, gram @ x)))
        if abs(lam_new - lam) < SIGMA_RTOL * abs(lam_new):
            lam = lam_new
            break
        lam = lam_new

    if on_rows:
        u = x
        w = r.conj().T @ u
        sigma = float(np.linalg.norm(w))
        w = w / sigma if sigma > 0 else w
    else:
        w = x
        u = r @ w
        sigma = float(np.linalg.norm(u))
        u = u / sigma if sigma > 0 else u
    return sigma * scale, u, w, it


def rank_one_test(r, tol=DEFAULT_TOL):
    """Best rank-one approximation of ``r`` and its relative residual.

    ``tol`` is not used to compute the certificate; compare
    ``relative_residual`` against it (see :meth:`RankOneCertificate.is_rank_one`).
    """
    r = as_matrix(r)
    if not np.any(r):
        raise ZeroMatrixError("rank test needs a nonzero matrix")
    scale = float(np.abs(r).max())
    r = r / scale
    norm = frobenius(r)
    sigma, u, w, it = dominant_triple(r)
    u = u.reshape(-1, 1)
    v = w.conj().reshape(-1, 1)
    residual = frobenius(r - sigma * (u @ v.T)) / norm
    return RankOneCertificate(
        sigma1=sigma * scale, u=u, v=v, relative_residual=min(residual, 1.0), iterations=it
    )


def _largest_index(x):
    """Lowest index among the entries of (near) maximal modulus."""
    mods = np.abs(x)
    top = mods.max()
    return int(np.flatnonzero(mods >= top * (1.0 - TIE_RTOL))[0])


def canonical_pair(vec_b, vec_c, part):
    """Rescale ``vec(B) vec(C)^T`` into the canonical factor pair."""
    vec_b = np.asarray(vec_b).reshape(-1)
    vec_c = np.asarray(vec_c).reshape(-1)
    cnorm = frobenius(vec_c)
    k = _largest_index(vec_c)
    phase = vec_c[k] / abs(vec_c[k])
    scale = cnorm * phase
    vec_c = vec_c / scale
    vec_b = vec_b * scale
    if np.iscomplexobj(vec_c):
        vec_c[k] = abs(vec_c[k])
    B = unvec(vec_b, part.m, part.n)
    C = unvec(vec_c, part.p, part.q)
    return FactorPair(B, C)


def zero_pair(part, dtype=np.float64):
    return FactorPair(np.zeros((part.m, part.n), dtype), np.zeros((part.p, part.q), dtype))


def kron_factor(a, part, tol=DEFAULT_TOL):
    """Factor ``a`` as ``B ⊗ C`` for the partition ``part``.

    Returns the canonical :class:`FactorPair`. Raises :class:`NotFactorizable`
    with the rank-one certificate when the block vec matrix is not rank one
    within ``tol``.

    The factors are built from the block of largest Frobenius norm: it fixes
    the direction of ``C`` and every ``b_ij`` is the least-squares projection
    of the corresponding block onto it.
    """
    a = as_matrix(a)
    r = rearrange(a, part)
    if not np.any(r):
        return zero_pair(part, a.dtype)
    cert = rank_one_test(r, tol)
    if not cert.is_rank_one(tol):
        raise NotFactorizable(cert)

    scale = float(np.abs(r).max())
    rows = r / scale
    pivot = rows[int(np.argmax(np.linalg.norm(rows, axis=1)))]
    vec_b = scale * (rows @ pivot.conj()) / np.vdot(pivot, pivot).real
    return canonical_pair(vec_b, pivot, part)


def nearest_kron(a, part):
    """Kronecker product ``B ⊗ C`` closest to ``a`` in Frobenius norm.

    Returns ``(FactorPair, residual)`` where ``residual`` is
    ``||a - B ⊗ C||_F``. When the two largest singular values of the block
    vec matrix coincide the minimizer is not unique and whichever one the
    iteration reaches is returned.
    """
    a = as_matrix(a)
    r = rearrange(a, part)
    if not np.any(r):
        raise ZeroMatrixError("nearest Kronecker product of a zero matrix is undefined")
    cert = rank_one_test(r)
    residual = frobenius(r - cert.approximation())
    pair = canonical_pair(cert.sigma1 * cert.u, cert.v, part)
    return pair, residual
