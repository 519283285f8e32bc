"""Walk through the 4x2 rank-two fixture and the [[-1]] square-root fixture.

    python scripts/rank_two_demo.py
"""
import numpy as np

from kronfact import (
    NoRoot,
    NotFactorizable,
    PartitionSpec,
    kron_factor,
    kron_sqrt_complex,
    kron_sqrt_real,
    nearest_kron,
    rearrange,
)

A = np.array([[2.0, 1.0], [2.0, 0.0], [3.0, 0.0], [0.0, 3.0]])
part = PartitionSpec(2, 1, 2, 2)

R = rearrange(A, part)
print("block vec matrix for 2x2 blocks:")
print(R)
s = np.linalg.svd(R, compute_uv=False)
print("singular values squared:", s ** 2)

try:
    kron_factor(A, part)
except NotFactorizable as exc:
    cert = exc.certificate
    print(f"not a Kronecker product: sigma1={cert.sigma1:.17g} "
          f"relative residual={cert.relative_residual:.17g}")

pair, residual = nearest_kron(A, part)
print(f"nearest Kronecker product residual {residual:.17g} (sqrt 6 = {np.sqrt(6):.17g})")
print("B =", pair.B.ravel(), " C =", pair.C.ravel())

minus_one = np.array([[-1.0]])
root = kron_sqrt_complex(minus_one, 1, 1)
print("complex roots of [[-1]]:", root.B[0, 0], -root.B[0, 0])
try:
    kron_sqrt_real(minus_one, 1, 1)
except NoRoot as exc:
    print("real root of [[-1]]:", exc.reason)
