"""Dense MatrixMarket ``array`` files, real and complex.

Only the ``general`` storage variant is accepted. Entries are written
column-major with 17 significant digits, which round-trips every finite
double exactly.
"""
import math
import os
import re

import numpy as np

from .core import as_matrix
from .errors import ParseError

HEADER = "%%MatrixMarket matrix array {} general"
NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def _lines(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    return data.splitlines()


def _number(token, lineno):
    if not NUMBER.fullmatch(token):
        if token.lower().lstrip("+-") in ("nan", "inf", "infinity"):
            raise ParseError(f"non-finite value is not allowed: {token!r}", lineno)
        raise ParseError(f"not a number: {token!r}", lineno)
    value = float(token)
    if math.isinf(value):
        raise ParseError(f"value overflows double precision: {token!r}", lineno)
    return value


def _parse_header(line):
    parts = line.split()
    if not parts or parts[0] != "%%MatrixMarket":
        raise ParseError("missing '%%MatrixMarket' header", 1)
    if len(parts) != 5:
        raise ParseError(f"header needs 5 fields, got {len(parts)}", 1)
    obj, fmt, fld, sym = (p.lower() for p in parts[1:])
    if obj != "matrix":
        raise ParseError(f"unsupported object {parts[1]!r}", 1)
    if fmt != "array":
        raise ParseError(f"only the dense 'array' format is supported, got {parts[2]!r}", 1)
    if fld not in ("real", "complex"):
        raise ParseError(f"field must be 'real' or 'complex', got {parts[3]!r}", 1)
    if sym != "general":
        raise ParseError(
            f"storage variant {parts[4]!r} is not supported; write the full matrix as 'general'", 1
        )
    return fld


def read_matrix(source):
    """Read a matrix from a path or a (binary or text) file object."""
    lines = _lines(source)
    if not lines:
        raise ParseError("empty input", 1)
    fld = _parse_header(lines[0])
    width = 2 if fld == "complex" else 1

    size = None
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        if size is None:
            if len(tokens) != 2:
                raise ParseError(f"size line needs 'rows cols', got {stripped!r}", lineno)
            try:
                rows, cols = (int(t) for t in tokens)
            except ValueError:
                raise ParseError(f"size line must hold two integers, got {stripped!r}", lineno) from None
            if rows < 1 or cols < 1:
                raise ParseError(f"dimensions must be positive, got {rows}x{cols}", lineno)
            size = (rows, cols)
            continue
        if len(tokens) != width:
            raise ParseError(f"{fld} entry needs {width} token(s), got {len(tokens)}", lineno)
        if len(values) == size[0] * size[1]:
            raise ParseError(f"too many entries; expected {size[0] * size[1]}", lineno)
        nums = [_number(t, lineno) for t in tokens]
        values.append(complex(nums[0], nums[1]) if width == 2 else nums[0])

    if size is None:
        raise ParseError("missing size line", len(lines))
    expected = size[0] * size[1]
    if len(values) != expected:
        raise ParseError(f"expected {expected} entries, got {len(values)}", len(lines))
    dtype = np.complex128 if width == 2 else np.float64
    return np.array(values, dtype=dtype).reshape(size, order="F")


def format_number(x):
    return "%.17g" % x


def format_matrix(M):
    """Return the file text for ``M``."""
    M = as_matrix(M)
    if not np.all(np.isfinite(M)):
        raise ValueError("cannot write non-finite entries")
    is_complex = np.iscomplexobj(M)
    out = [HEADER.format("complex" if is_complex else "real"), f"{M.shape[0]} {M.shape[1]}"]
    for z in M.reshape(-1, order="F"):
        if is_complex:
            out.append(f"{format_number(z.real)} {format_number(z.imag)}")
        else:
            out.append(format_number(z))
    return "\n".join(out) + "\n"


def write_matrix(M, sink):
    """Write ``M`` to a path or a file object (binary or text)."""
    text = format_matrix(M)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        return
    try:
        sink.write(text)
    except TypeError:
        sink.write(text.encode("ascii"))
