"""Mod-8 periodicity made walkable: the ring clock, nested chessboards,
and the arithmetic of the idempotent exponent k(0, q).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .classify import algebra_type, primitive_idempotent, radon_hurwitz


@dataclass(frozen=True)
class BWState:
    """Position on the clock: q = h + 8r once q >= 1; q = 0 sits before hour 1."""

    q: int
    h: int | None
    r: int
    ring: str


@dataclass(frozen=True)
class Transition:
    q_from: int
    q_to: int
    h: int
    ring_from: str
    ring_to: str


def bw_state(q: int) -> BWState:
    if q < 0:
        raise ValueError("q must be >= 0")
    ring = algebra_type(0, q).ring
    if q == 0:
        return BWState(q=0, h=None, r=0, ring=ring)
    h = ((q - 1) % 8) + 1
    r = (q - h) // 8
    return BWState(q=q, h=h, r=r, ring=ring)


def bw_step(state: BWState) -> BWState:
    return bw_state(state.q + 1)


def bw_cycle(r: int) -> list:
    """The eight hour transitions of cycle r, from q = 8r to q = 8r + 8."""
    if r < 0:
        raise ValueError("cycle index must be >= 0")
    out = []
    for h in range(1, 9):
        q_from = 8 * r + h - 1
        out.append(Transition(
            q_from=q_from,
            q_to=q_from + 1,
            h=h,
            ring_from=algebra_type(0, q_from).ring,
            ring_to=algebra_type(0, q_from + 1).ring,
        ))
    return out


class Chessboard:
    """Square board of side 8^order indexed by (p, q).

    Cells hold classification records, never algebra elements. Boards up to
    order 3 materialize their records eagerly; larger boards answer cell
    queries on demand, since only the mod-8 difference matters.
    """

    MATERIALIZE_MAX_ORDER = 3

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.size = 8 ** order
        if order <= self.MATERIALIZE_MAX_ORDER:
            self.cells = {
                (p, q): algebra_type(p, q)
                for p in range(self.size)
                for q in range(self.size)
            }
        else:
            self.cells = None

    def record(self, p: int, q: int):
        if not (0 <= p < self.size and 0 <= q < self.size):
            raise ValueError(f"cell ({p}, {q}) outside board of size {self.size}")
        if self.cells is not None:
            return self.cells[(p, q)]
        return algebra_type(p, q)

    def cell(self, p: int, q: int) -> str:
        return self.record(p, q).ring

    def __repr__(self):
        return f"Chessboard(order={self.order}, size={self.size})"


def chessboard(order: int) -> Chessboard:
    return Chessboard(order)


def fractal_dimension() -> float:
    """Box dimension ln 63 / ln 8 of the self-similar filled-cell pattern."""
    return math.log(63) / math.log(8)


_PARITY_EVEN = "●"  # filled circle, p+q even
_PARITY_ODD = "○"   # open circle, p+q odd


def board_text(board: Chessboard) -> str:
    """8x8 base pattern as text: type digit plus parity marker per cell."""
    lines = [f"mod-8 chessboard, order {board.order}, size {board.size}x{board.size}"]
    header = "     " + " ".join(f"q={q}" for q in range(8))
    lines.append(header)
    for p in range(8):
        row = []
        for q in range(8):
            t = algebra_type(p, q).type_mod8
            mark = _PARITY_EVEN if (p + q) % 2 == 0 else _PARITY_ODD
            row.append(f" {t}{mark}")
        lines.append(f"p={p} |" + " ".join(row))
    lines.append("legend: 0=R 1=R+R 2=R 3=C 4=H 5=H+H 6=H 7=C")
    lines.append(f"        {_PARITY_EVEN} p+q even, {_PARITY_ODD} p+q odd; "
                 "pattern repeats every 8 in each direction")
    return "\n".join(lines)


def board_json(board: Chessboard) -> str:
    """Full cell listing as JSON; limited to materialized boards."""
    if board.cells is None:
        raise ValueError("JSON export needs a materialized board (order <= 3)")
    cells = []
    for p in range(board.size):
        for q in range(board.size):
            info = board.cells[(p, q)]
            cells.append({
                "p": p,
                "q": q,
                "type": info.type_mod8,
                "ring": info.ring,
                "simple": info.simple,
            })
    return json.dumps({"order": board.order, "size": board.size, "cells": cells})


_CLOCK_OCTET = ("R", "C", "H", "H+H", "H", "C", "R", "R+R", "R")


def clock_text() -> str:
    lines = ["ring clock, one eight-hour cycle of q -> q+1:"]
    for h in range(1, 9):
        lines.append(f"  h{h}: {_CLOCK_OCTET[h - 1]:>3} -> {_CLOCK_OCTET[h]}")
    lines.append("after eight hours the ring returns to R and k has grown by 4")
    return "\n".join(lines)


def clock_json() -> str:
    hours = [
        {"h": h, "from": _CLOCK_OCTET[h - 1], "to": _CLOCK_OCTET[h]}
        for h in range(1, 9)
    ]
    return json.dumps({"hours": hours})


def verify_theorem3(q_max: int = 24) -> dict:
    """Check k(0, q) = q - r_q row by row and the +4 shift law up to q_max.

    The exponent at large q is arithmetic; brute-force idempotent search
    confirms it wherever that search is feasible (q <= 9).
    """
    if q_max < 24:
        raise ValueError("q_max must be >= 24 to cover three full cycles")

    def k(q: int) -> int:
        return q - radon_hurwitz(q)

    sequences = [tuple(k(q) for q in range(0, 9))]
    r = 1
    while 8 * r + 8 <= q_max:
        sequences.append(tuple(k(q) for q in range(8 * r + 1, 8 * r + 9)))
        r += 1
    shift_ok = all(k(q + 8) == k(q) + 4 for q in range(q_max - 8 + 1))
    brute_max = min(q_max, 9)
    brute_ok = all(
        primitive_idempotent(0, q).k == k(q) for q in range(brute_max + 1)
    )
    non_decreasing = all(
        seq[i] <= seq[i + 1] for seq in sequences for i in range(len(seq) - 1)
    )
    return {
        "passed": shift_ok and brute_ok and non_decreasing,
        "sequences": sequences,
        "shift_ok": shift_ok,
        "brute_ok": brute_ok,
        "brute_max_q": brute_max,
    }
