#!/usr/bin/env python3
"""Render the algebra board, the eight-hour clock, and one transition cycle.

Everything goes to stdout; pass --order for bigger boards (JSON export is
available through the cl8 CLI for orders up to 3).
"""

import argparse
import sys

from cl8.periodicity import board_text, bw_cycle, chessboard, clock_text


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=1)
    ap.add_argument("--cycle-row", type=int, default=0, dest="row")
    args = ap.parse_args()

    print(board_text(chessboard(args.order)))
    print()
    print(clock_text())
    print()
    print(f"transitions, cycle r={args.row}:")
    for t in bw_cycle(args.row):
        print(f"  h={t.h}: q={t.q_from} -> q={t.q_to}   {t.ring_from} -> {t.ring_to}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
