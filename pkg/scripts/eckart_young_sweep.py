"""Compare nearest_kron against a full SVD over random matrices and every
partition of their shape, and report how often random perturbations of the
returned factors do better (they should never).

    python scripts/eckart_young_sweep.py --trials 200 --shape 6 6
"""
import argparse
import time

import numpy as np

from kronfact import PartitionSpec, nearest_kron, rearrange


def partitions(rows, cols):
    for m in range(1, rows + 1):
        for n in range(1, cols + 1):
            if rows % m == 0 and cols % n == 0:
                yield PartitionSpec(m, n, rows // m, cols // n)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--shape", type=int, nargs=2, default=(4, 4))
    parser.add_argument("--perturbations", type=int, default=200)
    parser.add_argument("--step", type=float, default=1e-3)
    parser.add_argument("--complex", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    rows, cols = args.shape
    t0 = time.perf_counter()
    for part in partitions(rows, cols):
        worst = 0.0
        beaten = 0
        for _ in range(args.trials):
            a = rng.standard_normal((rows, cols))
            if args.complex:
                a = a + 1j * rng.standard_normal((rows, cols))
            pair, residual = nearest_kron(a, part)
            s = np.linalg.svd(rearrange(a, part), compute_uv=False)
            worst = max(worst, abs(residual - np.sqrt(np.sum(s[1:] ** 2))))
            for _ in range(args.perturbations):
                b = pair.B + args.step * rng.standard_normal(pair.B.shape)
                c = pair.C + args.step * rng.standard_normal(pair.C.shape)
                beaten += np.linalg.norm(a - np.kron(b, c)) < residual
        print(f"m={part.m} n={part.n} p={part.p} q={part.q}: "
              f"max |residual - svd| = {worst:.3g}, beaten {beaten}/{args.trials * args.perturbations}")
    print(f"{time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
