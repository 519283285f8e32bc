"""Kronecker product factorization, square roots and nearest approximations
for dense real and complex matrices."""
from .core import PartitionSpec, kron, rearrange, unrearrange, unvec, vec
from .errors import (
    DimensionError,
    FieldError,
    InvalidPartitionError,
    KronError,
    NegativeResult,
    NoRoot,
    NotFactorizable,
    ParseError,
    ZeroMatrixError,
)
from .factor import FactorPair, RankOneCertificate, kron_factor, nearest_kron, rank_one_test
from .kronsqrt import (
    KronSqrtResult,
    kron_sqrt,
    kron_sqrt_complex,
    kron_sqrt_real,
    sqrt_feasibility,
)
from .matrix_io import read_matrix, write_matrix
from .structure import predicates, verify_square_structure

__version__ = "0.1.0"
