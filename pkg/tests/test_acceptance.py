"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria"."""
import io
import time

import numpy as np
import pytest

from kronfact.core import PartitionSpec, kron, rearrange, vec
from kronfact.errors import FieldError, NoRoot, NotFactorizable
from kronfact.factor import kron_factor, nearest_kron
from kronfact.kronsqrt import NEGATIVE_TRACE, kron_sqrt_complex, kron_sqrt_real
from kronfact.matrix_io import format_matrix, read_matrix
from kronfact.structure import verify_square_structure

import generators as gen
from conftest import DATA, RANK_TWO_A, RANK_TWO_R, random_matrix, rel_err, sign_err
from test_structure import match_multisets

pytestmark = pytest.mark.acceptance

SEED = 20240607


def dims(rng, top=4):
    return tuple(int(d) for d in rng.integers(1, top + 1, 2))


def test_criterion_1_rank_two_fixture(criterion):
    part = PartitionSpec(2, 1, 2, 2)
    target = np.sqrt(6 / 21)

    def attempt():
        r = rearrange(RANK_TWO_A, part)
        try:
            kron_factor(RANK_TWO_A, part)
        except NotFactorizable as exc:
            return r, exc.certificate
        return r, None

    r, cert = attempt()
    best = min(_timed(attempt) for _ in range(50))
    exact = np.array_equal(r, RANK_TWO_R)
    residual = None if cert is None else cert.relative_residual
    ok = exact and cert is not None and abs(residual - target) <= 1e-10 and best < 1e-3
    criterion(1, ok, f"rearrange exact={exact}, relative_residual={residual!r} "
                     f"(stated target sqrt(6/21)={target:.17g}), {best * 1e3:.3f} ms")
    assert exact
    assert cert is not None
    assert best < 1e-3
    assert abs(residual - target) <= 1e-10


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_2_outer_product_identity(criterion):
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(1000):
        complex_ = k % 2 == 1
        b = random_matrix(rng, *dims(rng), complex_)
        c = random_matrix(rng, *dims(rng), complex_)
        r = rearrange(kron(b, c), PartitionSpec(*b.shape, *c.shape))
        worst = max(worst, rel_err(r, vec(b) @ vec(c).T))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 1.0
    criterion(2, ok, f"max relative error {worst:.3g} (<= 1e-12), {elapsed:.3f} s (< 1 s)")
    assert worst <= 1e-12
    assert elapsed < 1.0


def test_criterion_3_factor_roundtrip(criterion):
    rng = np.random.default_rng(SEED + 1)
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(1000):
        b = random_matrix(rng, *dims(rng), k % 2 == 1)
        c = random_matrix(rng, *dims(rng), k % 2 == 1)
        a = kron(b, c)
        pair = kron_factor(a, PartitionSpec(*b.shape, *c.shape), tol=1e-10)
        worst = max(worst, rel_err(pair.product(), a))

    rejected = 0
    for k in range(1000):
        part = PartitionSpec(*dims(rng, 3), *dims(rng, 3))
        while min(part.rearranged_shape) < 2:
            part = PartitionSpec(*dims(rng, 3), *dims(rng, 3))
        a = random_matrix(rng, *part.shape, k % 2 == 1)
        r = rearrange(a, part)
        # independent oracle: full rank per LAPACK SVD
        assert np.linalg.matrix_rank(r) == min(r.shape)
        try:
            kron_factor(a, part, tol=1e-10)
        except NotFactorizable:
            rejected += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and rejected == 1000 and elapsed < 5.0
    criterion(3, ok, f"recomposition max {worst:.3g} (<= 1e-12), rejected {rejected}/1000, {elapsed:.3f} s (< 5 s)")
    assert worst <= 1e-12
    assert rejected == 1000
    assert elapsed < 5.0


def test_criterion_4_square_root_roundtrip(criterion):
    rng = np.random.default_rng(SEED + 2)
    worst_real = worst_complex = 0.0
    for _ in range(500):
        m, n = dims(rng)
        b = random_matrix(rng, m, n)
        worst_real = max(worst_real, sign_err(kron_sqrt_real(kron(b, b), m, n).B, b))
        b = random_matrix(rng, m, n, True)
        worst_complex = max(worst_complex, sign_err(kron_sqrt_complex(kron(b, b), m, n).B, b))

    reasons = []
    field_errors = 0
    for _ in range(100):
        m, n = dims(rng)
        b = 1j * random_matrix(rng, m, n)
        a = kron(b, b)
        try:
            kron_sqrt_real(np.real(a), m, n)
            reasons.append(None)
        except NoRoot as exc:
            reasons.append(exc.reason)
        z = random_matrix(rng, m, n, True)
        try:
            kron_sqrt_real(kron(z, z), m, n)
        except FieldError:
            field_errors += 1

    minus_one = np.array([[-1.0]])
    root = kron_sqrt_complex(minus_one, 1, 1).B
    try:
        kron_sqrt_real(minus_one, 1, 1)
        real_reason = None
    except NoRoot as exc:
        real_reason = exc.reason

    negatives_ok = all(r == NEGATIVE_TRACE for r in reasons) and field_errors == 100
    fixture_ok = root.tolist() == [[1j]] and np.array_equal(kron(-root, -root), minus_one) and real_reason == NEGATIVE_TRACE
    ok = worst_real <= 1e-10 and worst_complex <= 1e-10 and negatives_ok and fixture_ok
    criterion(4, ok, f"real max {worst_real:.3g}, complex max {worst_complex:.3g} (<= 1e-10); "
                     f"negative-trace on i*B fixtures {reasons.count(NEGATIVE_TRACE)}/100; "
                     f"[[-1]] -> complex root {root[0, 0]} (and its negative), real {real_reason}")
    assert worst_real <= 1e-10 and worst_complex <= 1e-10
    assert negatives_ok
    assert fixture_ok


def test_criterion_5_eckart_young(criterion):
    rng = np.random.default_rng(SEED + 3)
    part = PartitionSpec(2, 2, 2, 2)
    worst = 0.0
    beaten = 0
    for _ in range(200):
        a = rng.standard_normal((4, 4))
        pair, residual = nearest_kron(a, part)
        s = np.linalg.svd(rearrange(a, part), compute_uv=False)
        worst = max(worst, abs(residual - np.sqrt(np.sum(s[1:] ** 2))))
        db = 1e-3 * rng.standard_normal((1000, 2, 2))
        dc = 1e-3 * rng.standard_normal((1000, 2, 2))
        bs, cs = pair.B + db, pair.C + dc
        # batched Kronecker products: (k, i, p, j, q) -> (k, 4, 4)
        prods = np.einsum("kij,kpq->kipjq", bs, cs).reshape(1000, 4, 4)
        trial = np.linalg.norm(a - prods, axis=(1, 2))
        beaten += int(np.sum(trial < residual))
    ok = worst <= 1e-8 and beaten == 0
    criterion(5, ok, f"max |residual - svd oracle| {worst:.3g} (<= 1e-8), perturbations beating it {beaten}/200000")
    assert worst <= 1e-8
    assert beaten == 0


def _structure_cases(rng, n):
    """(label, B, (item, expected lhs)) triples covering both directions."""
    cases = []
    for _ in range(10):
        cases += [
            ("a+", gen.symmetric(rng, n), ("a", True)),
            ("a+", gen.skew_symmetric(rng, n, complex_=False), ("a", True)),
            ("c+", gen.hermitian(rng, n), ("c", True)),
            ("c+", gen.skew_hermitian(rng, n), ("c", True)),
            ("d+", gen.positive_definite(rng, n), ("d", True)),
            ("d+", -gen.positive_definite(rng, n, complex_=False), ("d", True)),
            ("d-", gen.skew_hermitian(rng, n), ("d", False)),
            ("e+", gen.phase_rotated_hermitian(rng, n), ("e", True)),
            ("f+", gen.unitary(rng, n), ("f", True)),
            ("f-", 1.5 * gen.unitary(rng, n), ("f", False)),
            ("g+", gen.real_orthogonal(rng, n), ("g", True)),
            ("g-", 2.0 * gen.real_orthogonal(rng, n), ("g", False)),
            ("h+", gen.complex_orthogonal(rng, n), ("h", True)),
            ("h+", -1j * gen.complex_orthogonal(rng, n), ("h", True)),
        ]
        if n > 1:
            cases += [
                ("a-", gen.gaussian(rng, n), ("a", False)),
                ("c-", gen.gaussian(rng, n), ("c", False)),
                ("d-", gen.gaussian(rng, n, complex_=False), ("d", False)),
                ("e-", gen.gaussian(rng, n), ("e", False)),
                ("g-", gen.gaussian(rng, n, complex_=False), ("g", False)),
                ("h-", gen.gaussian(rng, n), ("h", False)),
            ]
    return cases


def test_criterion_6_square_structure(criterion):
    rng = np.random.default_rng(SEED + 4)
    failures = []
    checked = 0
    for n in (1, 2, 3):
        for label, b, (item, expected) in _structure_cases(rng, n):
            report = verify_square_structure(b, tol=1e-10)
            got = {it.label: it for it in report.items}[item]
            checked += 1
            if not report.consistent or got.lhs != expected or got.rhs != expected:
                failures.append((n, label))

    skew_hits = 0
    for k in range(1000):
        n = 1 + k % 3
        b = gen.gaussian(rng, n, complex_=k % 2 == 1)
        report = verify_square_structure(b, tol=1e-10)
        skew_hits += report.A.skew_symmetric
        if not report.consistent:
            failures.append((n, "b"))

    eig_worst = 0.0
    for k in range(200):
        n = 2 + k % 2
        b = gen.gaussian(rng, n, complex_=k % 4 >= 2)
        lam = np.linalg.eigvals(b)
        products = np.array([x * y for x in lam for y in lam])
        got = np.linalg.eigvals(kron(b, b))
        eig_worst = max(eig_worst, match_multisets(got, products) / max(1.0, np.abs(products).max()))

    ok = not failures and skew_hits == 0 and eig_worst <= 1e-8
    criterion(6, ok, f"{checked} generator cases, failures {failures[:5]}; skew-symmetric squares {skew_hits}/1000; "
                     f"eigenvalue products max {eig_worst:.3g} (<= 1e-8)")
    assert not failures
    assert skew_hits == 0
    assert eig_worst <= 1e-8


def test_criterion_7_partition_identities(criterion):
    rng = np.random.default_rng(SEED + 5)
    bad = 0
    for k in range(100):
        rows, cols = dims(rng, 6)
        a = random_matrix(rng, rows, cols, k % 2 == 1)
        checks = [
            np.array_equal(rearrange(a, PartitionSpec(rows, cols, 1, 1)), vec(a)),
            np.array_equal(rearrange(a, PartitionSpec(1, 1, rows, cols)), vec(a).T),
            np.array_equal(rearrange(a, PartitionSpec(rows, 1, 1, cols)), a),
            np.array_equal(rearrange(a, PartitionSpec(1, cols, rows, 1)), a.T),
        ]
        # nested: split into mp x nq with random divisors
        m = int(rng.choice([d for d in range(1, rows + 1) if rows % d == 0]))
        n = int(rng.choice([d for d in range(1, cols + 1) if cols % d == 0]))
        part = PartitionSpec(m, n, rows // m, cols // n)
        mp, nq = part.shape
        checks.append(np.array_equal(rearrange(vec(a), PartitionSpec(nq, 1, mp, 1)), a.T))
        bad += not all(checks)
    criterion(7, bad == 0, f"{100 - bad}/100 matrices satisfy all five identities exactly")
    assert bad == 0


def _bits(a):
    return a.shape, a.dtype, np.ascontiguousarray(a).view(np.uint8).tobytes()


def test_criterion_8_io(criterion):
    files = sorted((DATA / "corpus").glob("*.mtx"))
    bad = []
    for path in files:
        M = read_matrix(path)
        text = format_matrix(M)
        again = read_matrix(io.StringIO(text))
        if _bits(again) != _bits(M) or format_matrix(again) != text:
            bad.append(path.name)
    kinds = {read_matrix(p).dtype.kind for p in files}
    ok = len(files) == 50 and not bad and kinds == {"f", "c"}
    criterion(8, ok, f"{len(files) - len(bad)}/{len(files)} corpus files roundtrip bit-exact (real and complex)")
    assert len(files) == 50
    assert not bad
    assert kinds == {"f", "c"}
