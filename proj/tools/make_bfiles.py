#!/usr/bin/env python3
"""Regenerate the OEIS-format fixtures under data/bfiles from sympy's
Stirling numbers. Usage: python3 tools/make_bfiles.py [rows]"""

import math
import pathlib
import sys

from sympy.functions.combinatorial.numbers import stirling

ROWS = int(sys.argv[1]) if len(sys.argv) > 1 else 20
OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "bfiles"


def s2(n, k):
    return int(stirling(n, k, kind=2))


def c1(n, k):
    return int(stirling(n, k, kind=1, signed=False))


SEQUENCES = {
    "A008277": ("Stirling numbers of the second kind S2(n,k), rows n>=1, 1<=k<=n",
                1, lambda n, k: s2(n, k)),
    "A019538": ("k! S2(n,k), rows n>=1, 1<=k<=n",
                1, lambda n, k: math.factorial(k) * s2(n, k)),
    "A130534": ("unsigned Stirling numbers of the first kind c(n,k), rows n>=1, 1<=k<=n",
                0, lambda n, k: c1(n, k)),
    "A188881": ("(k-1)! c(n,k), rows n>=1, 1<=k<=n",
                1, lambda n, k: math.factorial(k - 1) * c1(n, k)),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for anum, (desc, offset, term) in SEQUENCES.items():
        lines = [f"# {anum}: {desc}",
                 f"# generated by tools/make_bfiles.py, {ROWS} rows, offset {offset}"]
        index = offset
        for n in range(1, ROWS + 1):
            for k in range(1, n + 1):
                lines.append(f"{index} {term(n, k)}")
                index += 1
        (OUT / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
