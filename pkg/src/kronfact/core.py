"""Dense matrix operators: vec, Kronecker product and the block vec
(rearrangement) matrix.

Matrices are plain 2-D numpy arrays of dtype float64 or complex128.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidPartitionError


def as_matrix(a):
    """Coerce ``a`` to a 2-D float64 or complex128 array."""
    arr = np.asarray(a)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"matrix dimensions must be positive, got {arr.shape}")
    if np.iscomplexobj(arr):
        return arr.astype(np.complex128, copy=False)
    return arr.astype(np.float64, copy=False)


def is_real(a):
    """True when ``a`` has a real dtype or no nonzero imaginary part."""
    return not np.iscomplexobj(a) or not np.any(np.imag(a))


def frobenius(a):
    """Frobenius norm, scaled first so tiny or huge entries do not
    under/overflow when squared."""
    a = np.asarray(a)
    scale = float(np.abs(a).max()) if a.size else 0.0
    if scale == 0.0 or not np.isfinite(scale):
        return scale
    return scale * float(np.linalg.norm(a / scale))


def trace(a):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"trace needs a square matrix, got {a.shape}")
    return np.trace(a)


@dataclass(frozen=True)
class PartitionSpec:
    """Partition of an ``m*p x n*q`` matrix into an ``m x n`` grid of
    ``p x q`` blocks."""

    m: int
    n: int
    p: int
    q: int

    def __post_init__(self):
        for name in ("m", "n", "p", "q"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise InvalidPartitionError(f"{name} must be a positive integer, got {value!r}")

    @property
    def shape(self):
        """Shape of the partitioned matrix."""
        return (self.m * self.p, self.n * self.q)

    @property
    def rearranged_shape(self):
        return (self.m * self.n, self.p * self.q)

    def check(self, a):
        if a.shape != self.shape:
            raise InvalidPartitionError(
                f"matrix of shape {a.shape} cannot be split into a {self.m}x{self.n} "
                f"grid of {self.p}x{self.q} blocks (needs {self.shape})"
            )

    def transposed(self):
        """Partition with the roles of (m, n) and (p, q) swapped."""
        return PartitionSpec(self.p, self.q, self.m, self.n)


def vec(a):
    """Stack the columns of ``a`` into a single column."""
    a = as_matrix(a)
    return a.reshape(-1, 1, order="F")


def unvec(v, rows, cols):
    v = np.asarray(v)
    if v.size != rows * cols:
        raise DimensionError(f"cannot reshape {v.size} entries into {rows}x{cols}")
    return v.reshape(rows, cols, order="F")


def kron(b, c):
    """Kronecker product; block (i, j) of the result is ``b[i, j] * c``."""
    return np.kron(as_matrix(b), as_matrix(c))


def rearrange(a, part):
    """Block vec matrix of ``a`` for the partition ``part``.

    Row ``j*m + i`` holds ``vec(A_ij)^T``, i.e.
    ``out[j*m + i, l*p + k] == a[i*p + k, j*q + l]``. No conjugation.
    """
    a = as_matrix(a)
    part.check(a)
    m, n, p, q = part.m, part.n, part.p, part.q
    # axes of a.reshape: (i, k, j, l)
    blocks = a.reshape(m, p, n, q)
    return blocks.transpose(2, 0, 3, 1).reshape(n * m, q * p)


def unrearrange(r, part):
    """Inverse of :func:`rearrange`."""
    r = as_matrix(r)
    if r.shape != part.rearranged_shape:
        raise InvalidPartitionError(
            f"rearranged matrix must be {part.rearranged_shape} for {part}, got {r.shape}"
        )
    m, n, p, q = part.m, part.n, part.p, part.q
    # axes of r.reshape: (j, i, l, k)
    return r.reshape(n, m, q, p).transpose(1, 3, 0, 2).reshape(m * p, n * q)
