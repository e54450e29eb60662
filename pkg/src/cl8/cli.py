"""Command-line front end.

Subcommands map one-to-one onto library operations; nothing mathematical
lives here. Output is deterministic for a fixed seed so reports can be
snapshot-compared byte for byte. Exit codes: 0 success, 1 a verification
suite found a counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import pauli, reps, suites
from .classify import algebra_type, primitive_idempotent
from .periodicity import (
    board_json,
    board_text,
    bw_cycle,
    chessboard,
    clock_json,
    clock_text,
)

_CONFIG_TYPES = {
    "pmax": int,
    "qmax": int,
    "order": int,
    "seed": int,
    "samples": int,
    "r": int,
    "format": str,
    "output": str,
}

_VERIFY_SUITES = {
    "classification": lambda a: suites.classification_suite(),
    "radon": lambda a: suites.radon_suite(),
    "theorem3": lambda a: suites.theorem3_suite(qmax=a.qmax),
    "cycles": lambda a: suites.cycles_suite(),
    "chevalley": lambda a: suites.chevalley_suite(),
    "karoubi": lambda a: suites.karoubi_suite(),
    "even": lambda a: suites.even_iso_suite(),
    "phipsi": lambda a: suites.phi_psi_suite(),
    "block": lambda a: suites.block_suite(seed=a.seed),
    "chain24": lambda a: suites.chain24_suite(),
    "reps": lambda a: suites.reps_suite(),
    "numeric": lambda a: suites.numeric_suite(seed=a.seed),
}


def _add_common(sp, *, formats=("text", "json")):
    sp.add_argument("--format", choices=formats, default=None)
    sp.add_argument("--output", default=None, help="write to this file instead of stdout")
    sp.add_argument("--config", default=None, help="key=value defaults file; flags win")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--samples", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cl8")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="mod-8 class of Cl(p,q), or a sweep")
    p_classify.add_argument("pq", nargs="*", type=int)
    p_classify.add_argument("--pmax", type=int, default=None)
    p_classify.add_argument("--qmax", type=int, default=None)
    _add_common(p_classify, formats=("text", "json", "csv"))

    p_idem = sub.add_parser("idempotent", help="primitive idempotent data for Cl(p,q)")
    p_idem.add_argument("p", type=int)
    p_idem.add_argument("q", type=int)
    _add_common(p_idem)

    p_board = sub.add_parser("chessboard", help="render an order-n algebra board")
    p_board.add_argument("--order", type=int, default=None)
    _add_common(p_board)

    p_clock = sub.add_parser("clock", help="the eight-hour ring cycle")
    _add_common(p_clock)

    p_cycle = sub.add_parser("cycle", help="one full cycle of transitions at row r")
    p_cycle.add_argument("--r", type=int, default=None)
    _add_common(p_cycle)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(_VERIFY_SUITES) + ["all"])
    p_verify.add_argument("--qmax", type=int, default=None)
    _add_common(p_verify)

    p_rep = sub.add_parser("rep", help="label data for tau_{k/2, r/2}")
    p_rep.add_argument("k", type=int)
    p_rep.add_argument("r", type=int)
    _add_common(p_rep)

    p_chain = sub.add_parser("chain", help="spin chain from (l, l_dot)")
    p_chain.add_argument("l")
    p_chain.add_argument("l_dot")
    _add_common(p_chain)

    p_block = sub.add_parser("block", help="representation block grid")
    p_block.add_argument("--order", type=int, default=None)
    _add_common(p_block)

    p_spinor = sub.add_parser("spinor", help="sampled null-vector checks")
    _add_common(p_spinor)

    p_twistor = sub.add_parser("twistor", help="incidence at a point")
    p_twistor.add_argument("--x", default=None, help="four comma-separated reals")
    p_twistor.add_argument("--pi", default=None, help="re0,im0,re1,im1")
    _add_common(p_twistor)

    p_qubit = sub.add_parser("qubit", help="sampled Bloch round-trip checks")
    _add_common(p_qubit)

    return parser


def _apply_config(args, parser):
    path = getattr(args, "config", None)
    if not path:
        return
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        parser.error(f"cannot read config file: {exc}")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            parser.error(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _CONFIG_TYPES:
            continue
        if hasattr(args, key) and getattr(args, key) is None:
            try:
                setattr(args, key, _CONFIG_TYPES[key](value))
            except ValueError:
                parser.error(f"{path}:{lineno}: bad value for {key}: {value!r}")


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dumps(data) -> str:
    return json.dumps(data, sort_keys=True)


def _classify_record(p: int, q: int) -> dict:
    at = algebra_type(p, q)
    return {
        "p": p,
        "q": q,
        "type": at.type_mod8,
        "ring": at.ring,
        "simple": at.simple,
        "matrix_rank": at.matrix_rank,
    }


_CSV_COLUMNS = ["p", "q", "type", "ring", "simple", "matrix_rank"]


def _csv_row(rec: dict) -> str:
    return ",".join(
        str(rec[c]).lower() if c == "simple" else str(rec[c]) for c in _CSV_COLUMNS
    )


def _classify_text(rec: dict) -> str:
    shape = "simple" if rec["simple"] else "semisimple"
    return (f"Cl({rec['p']},{rec['q']}): type {rec['type']}, ring {rec['ring']}, "
            f"{shape}, matrix rank {rec['matrix_rank']}")


def _cmd_classify(args, parser) -> int:
    fmt = args.format or "text"
    if len(args.pq) == 2:
        rec = _classify_record(*args.pq)
        if fmt == "json":
            _emit(args, _dumps(rec))
        elif fmt == "csv":
            _emit(args, ",".join(_CSV_COLUMNS) + "\n" + _csv_row(rec))
        else:
            _emit(args, _classify_text(rec))
        return 0
    if args.pq:
        parser.error("classify takes p and q together, or neither for a sweep")
    pmax = 7 if args.pmax is None else args.pmax
    qmax = 7 if args.qmax is None else args.qmax
    records = [
        _classify_record(p, q)
        for p in range(pmax + 1) for q in range(qmax + 1)
    ]
    if fmt == "json":
        _emit(args, _dumps(records))
    elif fmt == "csv":
        rows = [",".join(_CSV_COLUMNS)] + [_csv_row(r) for r in records]
        _emit(args, "\n".join(rows))
    else:
        _emit(args, "\n".join(_classify_text(r) for r in records))
    return 0


def _blade_name(mask: int) -> str:
    return "e" + "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


def _cmd_idempotent(args, parser) -> int:
    fmt = args.format or "text"
    data = primitive_idempotent(args.p, args.q)
    at = algebra_type(args.p, args.q)
    rec = {
        "p": args.p,
        "q": args.q,
        "k": data.k,
        "group_order": data.group_order,
        "ring": at.ring,
        "ideal_dim": (1 << (args.p + args.q)) >> data.k,
        "generators": [_blade_name(m) for m in data.generators],
    }
    if fmt == "json":
        _emit(args, _dumps(rec))
    else:
        gens = ", ".join(rec["generators"]) or "(none)"
        _emit(args, "\n".join([
            f"Cl({args.p},{args.q}): k = {rec['k']}, idempotent group order {rec['group_order']}",
            f"commuting blades: {gens}",
            f"ring {rec['ring']}, minimal left ideal dimension {rec['ideal_dim']}",
        ]))
    return 0


def _cmd_chessboard(args, parser) -> int:
    fmt = args.format or "text"
    order = 1 if args.order is None else args.order
    board = chessboard(order)
    _emit(args, board_json(board) if fmt == "json" else board_text(board))
    return 0


def _cmd_clock(args, parser) -> int:
    fmt = args.format or "text"
    _emit(args, clock_json() if fmt == "json" else clock_text())
    return 0


def _cmd_cycle(args, parser) -> int:
    fmt = args.format or "text"
    r = 0 if args.r is None else args.r
    transitions = bw_cycle(r)
    if fmt == "json":
        _emit(args, _dumps([
            {"h": t.h, "q_from": t.q_from, "q_to": t.q_to,
             "ring_from": t.ring_from, "ring_to": t.ring_to}
            for t in transitions
        ]))
    else:
        lines = [f"cycle r={r}"]
        lines += [
            f"h={t.h}: q={t.q_from} -> q={t.q_to}   {t.ring_from} -> {t.ring_to}"
            for t in transitions
        ]
        _emit(args, "\n".join(lines))
    return 0


def _cmd_verify(args, parser) -> int:
    fmt = args.format or "text"
    if args.qmax is None:
        args.qmax = 24
    if args.seed is None:
        args.seed = 0
    if args.suite == "all":
        results = suites.run_all(seed=args.seed)
    else:
        results = [_VERIFY_SUITES[args.suite](args)]
    if fmt == "json":
        _emit(args, _dumps(results))
    else:
        _emit(args, suites.render_report(results))
    return 0 if all(s["passed"] for s in results) else 1


def _cmd_rep(args, parser) -> int:
    fmt = args.format or "text"
    label = reps.rep_label(args.k, args.r)
    if fmt == "json":
        _emit(args, _dumps(reps.label_json_dict(label)))
    else:
        _emit(args, "\n".join([
            reps.label_token(label),
            f"spin {label.spin}, degree {label.degree}, "
            f"spinspace dimension {label.spinspace_dim}, field {label.field}",
        ]))
    return 0


def _cmd_chain(args, parser) -> int:
    fmt = args.format or "text"
    try:
        l, ld = Fraction(args.l), Fraction(args.l_dot)
    except ValueError:
        parser.error("l and l_dot must be rationals like 3 or 1/2")
    chain = reps.spin_chain(l, ld)
    _emit(args, reps.chain_json(chain) if fmt == "json" else reps.chain_text(chain))
    return 0


def _cmd_block(args, parser) -> int:
    fmt = args.format or "text"
    order = 1 if args.order is None else args.order
    block = reps.representation_block(order)
    if fmt == "json":
        nodes = [
            {"l": reps._frac_str(l), "l_dot": reps._frac_str(ld), "field": tag}
            for (l, ld), tag in block.nodes.items()
        ]
        _emit(args, _dumps({"order": block.order, "bound": block.bound, "nodes": nodes}))
    else:
        _emit(args, reps.block_text(block))
    return 0


def _cmd_spinor(args, parser) -> int:
    fmt = args.format or "text"
    seed = 0 if args.seed is None else args.seed
    samples = 100 if args.samples is None else args.samples
    rng = np.random.default_rng(seed)
    max_null = 0.0
    max_imag = 0.0
    for _ in range(samples):
        xi = rng.normal(size=2) + 1j * rng.normal(size=2)
        x = pauli.spinor_outer(xi, xi.conj())
        max_imag = max(max_imag, float(np.max(np.abs(x.imag))))
        max_null = max(max_null, abs(pauli.lorentz_norm(x.real)))
    rec = {
        "passed": max_null < 1e-9 and max_imag < 1e-9,
        "checked": samples,
        "max_null_defect": max_null,
        "max_imag": max_imag,
    }
    if fmt == "json":
        _emit(args, _dumps(rec))
    else:
        verdict = "PASS" if rec["passed"] else "FAIL"
        _emit(args, f"{verdict} {samples} conjugate outer products stay real and null "
                    f"(max |S^2| = {max_null:.3e})")
    return 0 if rec["passed"] else 1


def _floats(text: str, parser, flag: str) -> list:
    try:
        return [float(t) for t in text.split(",")]
    except ValueError:
        parser.error(f"{flag} expects comma-separated numbers")


def _cmd_twistor(args, parser) -> int:
    fmt = args.format or "text"
    x = [math.sqrt(2.0), 0.0, 0.0, 0.0] if args.x is None else _floats(args.x, parser, "--x")
    raw_pi = [1.0, 0.0, 0.0, 0.0] if args.pi is None else _floats(args.pi, parser, "--pi")
    if len(x) != 4:
        parser.error("--x expects exactly four components")
    if len(raw_pi) != 4:
        parser.error("--pi expects re0,im0,re1,im1")
    pi = np.array([complex(raw_pi[0], raw_pi[1]), complex(raw_pi[2], raw_pi[3])])
    omega = pauli.twistor_incidence(np.array(x), pi)
    rec = {
        "x": x,
        "pi": [[pi[0].real, pi[0].imag], [pi[1].real, pi[1].imag]],
        "omega": [[omega[0].real, omega[0].imag], [omega[1].real, omega[1].imag]],
        "norm": pauli.twistor_norm(omega, pi),
        "form_signature": list(pauli.twistor_form_signature()),
    }
    if fmt == "json":
        _emit(args, _dumps(rec))
    else:
        _emit(args, "\n".join([
            f"x = {tuple(x)}",
            f"omega = ({omega[0]:.6g}, {omega[1]:.6g})",
            f"norm = {rec['norm']:.6g}, form signature {tuple(rec['form_signature'])}",
        ]))
    return 0


def _cmd_qubit(args, parser) -> int:
    fmt = args.format or "text"
    seed = 0 if args.seed is None else args.seed
    samples = 100 if args.samples is None else args.samples
    rng = np.random.default_rng(seed)
    max_round = 0.0
    max_purity = 0.0
    for _ in range(samples):
        v = rng.normal(size=4)
        a, b = complex(v[0], v[1]), complex(v[2], v[3])
        s = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        rho = pauli.qubit_density(a / s, b / s)
        P = pauli.bloch_vector(rho)
        max_round = max(max_round, float(np.max(np.abs(pauli.density_from_bloch(P) - rho))))
        max_purity = max(max_purity, abs(pauli.purity(rho) - 1.0))
    rec = {
        "passed": max_round < 1e-9 and max_purity < 1e-9,
        "checked": samples,
        "max_roundtrip_defect": max_round,
        "max_purity_defect": max_purity,
    }
    if fmt == "json":
        _emit(args, _dumps(rec))
    else:
        verdict = "PASS" if rec["passed"] else "FAIL"
        _emit(args, f"{verdict} {samples} pure states round-trip through the Bloch map "
                    f"(max defect = {max_round:.3e})")
    return 0 if rec["passed"] else 1


_DISPATCH = {
    "classify": _cmd_classify,
    "idempotent": _cmd_idempotent,
    "chessboard": _cmd_chessboard,
    "clock": _cmd_clock,
    "cycle": _cmd_cycle,
    "verify": _cmd_verify,
    "rep": _cmd_rep,
    "chain": _cmd_chain,
    "block": _cmd_block,
    "spinor": _cmd_spinor,
    "twistor": _cmd_twistor,
    "qubit": _cmd_qubit,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, parser)
    try:
        return _DISPATCH[args.command](args, parser)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
