"""Command-line front end.

Exit status: 0 on success, 1 when the answer is mathematically negative
(not factorizable, no square root), 2 on input or usage errors.
"""
import argparse
import sys

from .core import PartitionSpec, rearrange
from .errors import KronError, NoRoot, NotFactorizable
from .factor import DEFAULT_TOL, kron_factor, nearest_kron
from .kronsqrt import kron_sqrt
from .matrix_io import format_matrix, format_number, read_matrix, write_matrix
from .structure import PREDICATES, predicates, verify_square_structure

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _tolerance(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value >= 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"tolerance must be finite and nonnegative, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kronfact",
        description="Detect, construct and approximate Kronecker product structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def partition_flags(p):
        for flag in ("--m", "--n", "--p", "--q"):
            p.add_argument(flag, type=_positive, required=True)

    p = sub.add_parser("rearrange", help="write the block vec matrix")
    partition_flags(p)
    p.add_argument("input")
    p.add_argument("-o", "--output")

    for name, text in (("factor", "exact factorization A = B ⊗ C"),
                       ("nearest", "nearest Kronecker product in Frobenius norm")):
        p = sub.add_parser(name, help=text)
        partition_flags(p)
        if name == "factor":
            p.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL)
        p.add_argument("input")
        p.add_argument("-o-b", "--output-b", dest="output_b")
        p.add_argument("-o-c", "--output-c", dest="output_c")

    p = sub.add_parser("sqrt", help="Kronecker square root A = B ⊗ B")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--field", choices=("real", "complex"),
                   help="field of the root (default: field of the input)")
    p.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL)
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = sub.add_parser("check", help="structure predicates")
    p.add_argument("--as-square", action="store_true",
                   help="treat the input as B and report on A = B ⊗ B")
    p.add_argument("--m", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL)
    p.add_argument("input")
    return parser


def _emit(M, path, label, out):
    if path:
        write_matrix(M, path)
    else:
        if label:
            out.write(f"% {label}\n")
        out.write(format_matrix(M))


def _partition(args):
    return PartitionSpec(args.m, args.n, args.p, args.q)


def _cmd_rearrange(args, out):
    R = rearrange(read_matrix(args.input), _partition(args))
    _emit(R, args.output, None, out)
    return EXIT_OK


def _cmd_factor(args, out):
    A = read_matrix(args.input)
    try:
        pair = kron_factor(A, _partition(args), args.tol)
    except NotFactorizable as exc:
        cert = exc.certificate
        out.write("NOT FACTORIZABLE: block vec matrix is not rank one\n")
        out.write(f"relative_residual {format_number(cert.relative_residual)}\n")
        out.write(f"sigma1 {format_number(cert.sigma1)}\n")
        out.write(f"tol {format_number(args.tol)}\n")
        return EXIT_NEGATIVE
    out.write("FACTORIZABLE\n")
    _emit(pair.B, args.output_b, "B", out)
    _emit(pair.C, args.output_c, "C", out)
    return EXIT_OK


def _cmd_nearest(args, out):
    pair, residual = nearest_kron(read_matrix(args.input), _partition(args))
    out.write(f"residual {format_number(residual)}\n")
    _emit(pair.B, args.output_b, "B", out)
    _emit(pair.C, args.output_c, "C", out)
    return EXIT_OK


def _cmd_sqrt(args, out):
    A = read_matrix(args.input)
    try:
        result = kron_sqrt(A, args.m, args.n, field=args.field, tol=args.tol)
    except NoRoot as exc:
        out.write(f"NO ROOT: {exc.reason}\n")
        if exc.feasibility is not None:
            out.write(f"trace {format_number(exc.feasibility.trace_value)}\n")
        return EXIT_NEGATIVE
    out.write(f"ROOT field {result.field} trace {format_number(result.trace_value)}\n")
    _emit(result.B, args.output, "B", out)
    return EXIT_OK


def _table(preds, title, out):
    out.write(f"{title}\n")
    if preds.note:
        out.write(f"  note: {preds.note}\n")
    for name in PREDICATES:
        check = preds[name]
        out.write(f"  {name:<20} {str(check.holds):<6} {format_number(check.deviation)}\n")


def _cmd_check(args, out):
    M = read_matrix(args.input)
    if not args.as_square:
        _table(predicates(M, args.tol), "matrix", out)
        return EXIT_OK
    if args.m is None or args.n is None:
        raise UsageError("--as-square needs --m and --n")
    if M.shape != (args.m, args.n):
        raise UsageError(f"--m {args.m} --n {args.n} does not match the {M.shape[0]}x{M.shape[1]} input")
    report = verify_square_structure(M, args.tol)
    _table(report.A, "A = kron(B, B)", out)
    _table(report.B, "B", out)
    out.write(f"  {'exp(i pi/4) B hermitian':<20} {report.phase_rotated_hermitian}\n")
    out.write(f"  {'i B complex_orthogonal':<20} {report.i_scaled_complex_orthogonal}\n")
    out.write("links\n")
    for item in report.items:
        status = "ok" if item.consistent else "VIOLATED"
        out.write(f"  ({item.label}) {status:<8} lhs={item.lhs} rhs={item.rhs}  {item.statement}\n")
    return EXIT_OK


COMMANDS = {
    "rearrange": _cmd_rearrange,
    "factor": _cmd_factor,
    "nearest": _cmd_nearest,
    "sqrt": _cmd_sqrt,
    "check": _cmd_check,
}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (KronError, UsageError, OSError, ValueError) as exc:
        err.write(f"kronfact {args.command}: error: {exc}\n")
        return EXIT_ERROR


def run():
    sys.exit(main())
