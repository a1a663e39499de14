#!/usr/bin/env python3
"""Write the offline b-file fixtures used by `cubicmaps oeis check`.

These are generated locally, not downloaded: three sequences from their closed
formulas and two transcribed from the published table of small values.
`cubicmaps oeis fetch` replaces them with the real b-files when a network is available.
"""

import argparse
import pathlib
from math import factorial


def double_factorial(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def a000260(n):
    # rooted 3-connected cubic maps with 2n+2 vertices (a(0) = 1 by convention)
    return 2 * factorial(4 * n + 1) // (factorial(n + 1) * factorial(3 * n + 2))


def a000309(n):
    return 2 ** (n + 1) * factorial(3 * n) // (factorial(n) * factorial(2 * n + 2))


def a002005(n):
    return 2 ** (2 * n + 1) * double_factorial(3 * n) // (factorial(n + 2) * double_factorial(n))


# cells for 3..11 faces, i.e. n = 1..9
TABLE = {
    "A058860": [0, 1, 3, 19, 128, 909, 6737, 51683, 407802],
    "A058859": [0, 1, 3, 19, 143, 1089, 8564, 69075, 569469],
}

FORMULAS = {
    "A000260": (a000260, "2 (4n+1)! / ((n+1)! (3n+2)!)"),
    "A000309": (a000309, "2^(n+1) (3n)! / (n! (2n+2)!)"),
    "A002005": (a002005, "2^(2n+1) (3n)!! / ((n+2)! n!!)"),
}


def write(path, seq, source, rows):
    lines = [
        f"# {seq}",
        "# LOCALLY GENERATED fixture, not downloaded from the OEIS.",
        f"# source: {source}",
        "# refresh with: cubicmaps oeis fetch " + seq,
    ]
    lines += [f"{n} {v}" for n, v in rows]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "oeis"))
    ap.add_argument("--terms", type=int, default=101)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for seq, (f, text) in FORMULAS.items():
        write(out / f"b{seq[1:]}.txt", seq, "closed formula " + text, [(n, f(n)) for n in range(args.terms)])
    for seq, cells in TABLE.items():
        write(out / f"b{seq[1:]}.txt", seq, "table of small values, 3 to 11 faces",
              [(n, v) for n, v in enumerate(cells, start=1)])


if __name__ == "__main__":
    main()
