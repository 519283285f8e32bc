"""Structural predicates and the consistency report for Kronecker squares.

For ``A = B ⊗ B`` with ``B`` nonzero, the sign ambiguity of the root forces
a tight link between the structure of ``A`` and of ``B``; for instance ``A``
is symmetric iff ``B`` is symmetric or skew symmetric, and ``A`` is never
skew symmetric. :func:`verify_square_structure` evaluates all eight links on a
given ``B``.
"""
from dataclasses import dataclass, field

import numpy as np

from .core import as_matrix, frobenius

DEFAULT_TOL = 1e-10
PHASE = np.exp(1j * np.pi / 4)

PREDICATES = (
    "symmetric",
    "skew_symmetric",
    "hermitian",
    "positive_definite",
    "negative_definite",
    "skew_hermitian",
    "unitary",
    "real_orthogonal",
    "complex_orthogonal",
)


@dataclass(frozen=True)
class Check:
    holds: bool
    deviation: float


@dataclass(frozen=True)
class PredicateSet:
    """Predicate results for one matrix.

    Each entry holds iff its deviation (a Frobenius-norm defect) is at most
    ``threshold = tol * max(1, ||M||_F)``. The definiteness entries are the
    exception: they need the Hermitian test to pass and the extreme
    eigenvalue of the Hermitian part to clear ``threshold``; their deviation
    is ``max(hermitian defect, -margin)``.
    """

    checks: dict
    threshold: float
    note: str = ""

    def __getitem__(self, name):
        return self.checks[name]

    def __getattr__(self, name):
        checks = self.__dict__.get("checks", {})
        if name in checks:
            return checks[name].holds
        raise AttributeError(name)


def predicates(M, tol=DEFAULT_TOL):
    M = as_matrix(M)
    thr = tol * max(1.0, frobenius(M))
    if M.shape[0] != M.shape[1]:
        inf = float("inf")
        return PredicateSet(
            {name: Check(False, inf) for name in PREDICATES},
            thr,
            note=f"non-square matrix {M.shape[0]}x{M.shape[1]}",
        )

    eye = np.eye(M.shape[0])
    H = M.conj().T
    T = M.T
    herm = frobenius(M - H)
    orth = frobenius(M @ T - eye)
    checks = {
        "symmetric": frobenius(M - T),
        "skew_symmetric": frobenius(M + T),
        "hermitian": herm,
        "skew_hermitian": frobenius(M + H),
        "unitary": frobenius(M @ H - eye),
        "real_orthogonal": max(frobenius(np.imag(M)), orth),
        "complex_orthogonal": orth,
    }
    checks = {name: Check(dev <= thr, dev) for name, dev in checks.items()}

    eig = np.linalg.eigvalsh((M + H) / 2)
    lo, hi = float(eig[0]), float(eig[-1])
    herm_ok = herm <= thr
    checks["positive_definite"] = Check(herm_ok and lo > thr, max(herm, -lo))
    checks["negative_definite"] = Check(herm_ok and hi < -thr, max(herm, hi))
    return PredicateSet({name: checks[name] for name in PREDICATES}, thr)


@dataclass(frozen=True)
class Item:
    label: str
    statement: str
    lhs: bool
    rhs: bool
    consistent: bool


@dataclass
class StructureReport:
    A: PredicateSet
    B: PredicateSet
    phase_rotated: PredicateSet
    i_scaled: PredicateSet
    items: list = field(default_factory=list)

    @property
    def consistent(self):
        return all(item.consistent for item in self.items)

    @property
    def violations(self):
        return [item for item in self.items if not item.consistent]

    @property
    def phase_rotated_hermitian(self):
        return self.phase_rotated.hermitian

    @property
    def i_scaled_complex_orthogonal(self):
        return self.i_scaled.complex_orthogonal


def _iff(label, statement, lhs, rhs):
    return Item(label, statement, lhs, rhs, lhs == rhs)


def verify_square_structure(B, tol=DEFAULT_TOL):
    """Evaluate the eight structure links between ``A = B ⊗ B`` and ``B``.

    An inconsistent item cannot happen in exact arithmetic, so it points at
    ``tol`` being too tight or too loose for the input.
    """
    B = as_matrix(B)
    A = np.kron(B, B)
    pa = predicates(A, tol)
    pb = predicates(B, tol)
    rot = predicates(PHASE * B, tol)
    ib = predicates(1j * B, tol)
    b_zero = frobenius(B) <= tol
    b_real = not np.iscomplexobj(B) or frobenius(np.imag(B)) <= pb.threshold

    items = [
        _iff("a", "A symmetric <=> B symmetric or skew symmetric",
             pa.symmetric, pb.symmetric or pb.skew_symmetric),
        Item("b", "A skew symmetric => B = 0", pa.skew_symmetric, b_zero,
             (not pa.skew_symmetric) or b_zero),
        _iff("c", "A Hermitian <=> B Hermitian or skew Hermitian",
             pa.hermitian, pb.hermitian or pb.skew_hermitian),
        _iff("d", "A Hermitian positive definite <=> B Hermitian definite",
             pa.positive_definite, pb.positive_definite or pb.negative_definite),
        _iff("e", "A skew Hermitian <=> exp(i pi/4) B Hermitian",
             pa.skew_hermitian, rot.hermitian),
        _iff("f", "A unitary <=> B unitary", pa.unitary, pb.unitary),
    ]
    if b_real:
        items.append(_iff("g", "B real: A real orthogonal <=> B real orthogonal",
                          pa.real_orthogonal, pb.real_orthogonal))
    else:
        items.append(Item("g", "B real: A real orthogonal <=> B real orthogonal (B not real, vacuous)",
                          pa.real_orthogonal, pb.real_orthogonal, True))
    items.append(_iff("h", "A complex orthogonal <=> B or iB complex orthogonal",
                      pa.complex_orthogonal, pb.complex_orthogonal or ib.complex_orthogonal))
    return StructureReport(pa, pb, rot, ib, items)
