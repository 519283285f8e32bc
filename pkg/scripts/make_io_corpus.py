"""Generate the MatrixMarket fixture corpus used by the I/O tests.

Files vary in field, shape, number formatting (plain decimals, scientific
notation, signs, subnormals), comments and whitespace. Output is
deterministic for a given seed.

    python scripts/make_io_corpus.py tests/data/corpus
"""
import argparse
import pathlib

import numpy as np


def fmt_value(x, style, rng):
    if style == "repr":
        return repr(float(x))
    if style == "sci":
        return "%.16e" % x
    if style == "SCI":
        return ("%.16E" % x).replace("E+", "E")
    if style == "plus":
        text = "%.17g" % x
        return text if text.startswith("-") else "+" + text
    if style == "short":
        return "%.3g" % x
    raise ValueError(style)


def values(rng, kind, size):
    if kind == "normal":
        return rng.standard_normal(size)
    if kind == "wide":
        return rng.standard_normal(size) * 10.0 ** rng.integers(-300, 300, size)
    if kind == "ints":
        return rng.integers(-9, 10, size).astype(float)
    if kind == "tiny":
        return rng.standard_normal(size) * 1e-310
    raise ValueError(kind)


def make_file(rng, index):
    field = "complex" if index % 3 == 0 else "real"
    rows, cols = (int(v) for v in rng.integers(1, 7, 2))
    style = ["repr", "sci", "SCI", "plus", "short"][index % 5]
    kind = ["normal", "wide", "ints", "tiny", "normal"][(index // 5) % 5]
    n = rows * cols
    re = values(rng, kind, n)
    im = values(rng, kind, n)
    if index % 7 == 0:
        re[0] = -0.0

    header = f"%%MatrixMarket matrix array {field} general"
    if index % 4 == 1:
        header = f"%%MatrixMarket MATRIX Array {field.upper()} General"
    out = [header]
    if index % 2 == 0:
        out.append(f"% corpus file {index:02d}, {kind} values, {style} formatting")
        out.append("%")
    sep = "\t" if index % 6 == 5 else " "
    out.append(f"{rows}{sep}{cols}")
    for k in range(n):
        token = fmt_value(re[k], style, rng)
        if field == "complex":
            token = token + sep * (1 + k % 2) + fmt_value(im[k], style, rng)
        if index % 5 == 4 and k % 3 == 0:
            token = "  " + token + "   "
        out.append(token)
        if index % 8 == 3 and k == n // 2:
            out.append("% interleaved comment")
            out.append("")
    return "\n".join(out) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=pathlib.Path)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20240607)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for index in range(args.count):
        path = args.outdir / f"m{index:02d}.mtx"
        path.write_text(make_file(rng, index), encoding="ascii")
    print(f"wrote {args.count} files to {args.outdir}")


if __name__ == "__main__":
    main()
