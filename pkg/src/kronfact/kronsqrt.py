"""Kronecker square roots ``A = B ⊗ B``.

With ``R`` the block vec matrix of ``A`` for ``m x n`` blocks, a complex
root exists iff ``R`` is symmetric and rank one; a real root exists iff in
addition ``tr(R) > 0``. The root is unique up to sign.
"""
from dataclasses import dataclass

import numpy as np

from .core import PartitionSpec, as_matrix, frobenius, is_real, rearrange, unvec
from .errors import DimensionError, FieldError, NoRoot, ZeroMatrixError
from .factor import DEFAULT_TOL, TIE_RTOL, rank_one_test

NOT_SYMMETRIC = "not-symmetric"
NOT_RANK_ONE = "not-rank-one"
NEGATIVE_TRACE = "negative-trace"


@dataclass(frozen=True)
class Feasibility:
    symmetric: bool
    rank_one: bool
    trace_value: float
    symmetry_defect: float
    rank_one_residual: float
    sigma: float

    @property
    def complex_root(self):
        return self.symmetric and self.rank_one


@dataclass(frozen=True)
class KronSqrtResult:
    """Root ``B`` of ``A = B ⊗ B``; ``-B`` is the other root."""

    B: np.ndarray
    field: str
    trace_value: float
    sigma: float


def _square_partition(a, m, n):
    a = as_matrix(a)
    if a.shape != (m * m, n * n):
        raise DimensionError(
            f"square root with {m}x{n} factors needs a {m * m}x{n * n} matrix, got {a.shape[0]}x{a.shape[1]}"
        )
    if not np.any(a):
        raise ZeroMatrixError("Kronecker square root of the zero matrix is not handled")
    return a, rearrange(a, PartitionSpec(m, n, m, n))


def _feasibility(r, tol):
    norm = frobenius(r)
    defect = frobenius(r - r.T) / norm
    cert = rank_one_test(r, tol)
    report = Feasibility(
        symmetric=defect <= tol,
        rank_one=cert.is_rank_one(tol),
        trace_value=float(np.real(np.trace(r))),
        symmetry_defect=defect,
        rank_one_residual=cert.relative_residual,
        sigma=cert.sigma1,
    )
    return report, cert


def sqrt_feasibility(a, m, n, tol=DEFAULT_TOL):
    """Check the symmetric-and-rank-one condition on the block vec matrix."""
    _, r = _square_partition(a, m, n)
    return _feasibility(r, tol)[0]


def _projected(r, tol):
    """Symmetrize ``r`` and replace it by its best rank-one approximation
    when it is only rank one up to ``tol``."""
    s = (r + r.T) / 2
    cert = rank_one_test(s, tol)
    if cert.relative_residual > 0:
        s = cert.approximation()
        s = (s + s.T) / 2
    return s


def _canonical_sign(b):
    flat = b.reshape(-1, order="F")
    mods = np.abs(flat)
    k = int(np.flatnonzero(mods >= mods.max() * (1.0 - TIE_RTOL))[0])
    z = complex(flat[k])
    # real part below rounding noise counts as zero
    if abs(z.real) <= TIE_RTOL * abs(z):
        flip = z.imag < 0
    else:
        flip = z.real < 0
    return -b if flip else b


def _check(report):
    if not report.symmetric:
        raise NoRoot(NOT_SYMMETRIC, report)
    if not report.rank_one:
        raise NoRoot(NOT_RANK_ONE, report)


def kron_sqrt_complex(a, m, n, tol=DEFAULT_TOL):
    """Complex ``m x n`` matrix ``B`` with ``a = B ⊗ B``.

    Uses a diagonal pivot on the rank-one symmetric block vec matrix
    ``w w^T``: with ``s`` maximizing ``|R_ss|``, ``w_s = sqrt(R_ss)`` and
    ``w_i = R_is / w_s``. Raises :class:`NoRoot` when no root exists.
    """
    a, r = _square_partition(a, m, n)
    report, _ = _feasibility(r, tol)
    _check(report)

    s = _projected(r.astype(np.complex128), tol)
    diag = np.diag(s)
    k = int(np.argmax(np.abs(diag)))
    pivot = np.sqrt(complex(diag[k]))
    w = s[:, k] / pivot
    w[k] = pivot
    B = _canonical_sign(unvec(w, m, n))
    return KronSqrtResult(B, "complex", report.trace_value, report.sigma)


def kron_sqrt_real(a, m, n, tol=DEFAULT_TOL):
    """Real ``m x n`` matrix ``B`` with ``a = B ⊗ B``.

    Needs a real ``a``. Besides symmetry and rank one, the trace of the
    block vec matrix must exceed ``tol * ||R||_F``; it equals ``||vec(B)||^2``.
    """
    if not is_real(a):
        raise FieldError("real square root requested for a matrix with complex entries")
    a = np.real(as_matrix(a))
    a, r = _square_partition(a, m, n)
    report, _ = _feasibility(r, tol)
    _check(report)
    if report.trace_value <= tol * frobenius(r):
        raise NoRoot(NEGATIVE_TRACE, report)

    s = _projected(r, tol)
    lam = float(np.trace(s))
    col = s[:, int(np.argmax(np.linalg.norm(s / np.abs(s).max(), axis=0)))]
    q = col / frobenius(col)
    B = _canonical_sign(unvec(np.sqrt(lam) * q, m, n))
    return KronSqrtResult(B, "real", report.trace_value, report.sigma)


def kron_sqrt(a, m, n, field=None, tol=DEFAULT_TOL):
    """Dispatch on ``field`` ("real" or "complex"); defaults to the field of ``a``."""
    if field is None:
        field = "real" if is_real(a) else "complex"
    if field == "real":
        return kron_sqrt_real(a, m, n, tol)
    if field == "complex":
        return kron_sqrt_complex(a, m, n, tol)
    raise FieldError(f"unknown field {field!r}; use 'real' or 'complex'")
