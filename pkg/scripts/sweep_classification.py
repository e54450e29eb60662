#!/usr/bin/env python3
"""Sweep the (p, q) grid and dump one classification row per algebra.

Writes CSV to stdout or --output. With --certify, each row is cross-checked
by the brute-force corner computation (slow above p+q of about 8).
"""

import argparse
import sys

from cl8.classify import (
    algebra_type,
    division_ring_of,
    primitive_idempotent,
    radon_hurwitz,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=7)
    ap.add_argument("--qmax", type=int, default=7)
    ap.add_argument("--certify", action="store_true",
                    help="also run the exact corner computation per cell")
    ap.add_argument("--output", default=None)
    args = ap.parse_args()

    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    columns = ["p", "q", "type", "ring", "simple", "matrix_rank", "k", "ideal_dim"]
    if args.certify:
        columns.append("corner_ring")
    print(",".join(columns), file=out)
    mismatches = 0
    for p in range(args.pmax + 1):
        for q in range(args.qmax + 1):
            at = algebra_type(p, q)
            k = q - radon_hurwitz(q - p)
            ideal = (1 << (p + q)) >> k
            row = [p, q, at.type_mod8, at.ring, str(at.simple).lower(), at.matrix_rank,
                   k, ideal]
            if args.certify:
                _, ring = division_ring_of(p, q)
                row.append(ring)
                if ring != at.ring or primitive_idempotent(p, q).k != k:
                    mismatches += 1
            print(",".join(str(v) for v in row), file=out)
    if args.output:
        out.close()
    if mismatches:
        print(f"{mismatches} cells disagree with the table", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
