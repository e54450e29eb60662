"""Verification suites: every headline claim re-checked as a pass/fail line.

Each suite returns {"name", "passed", "lines"}; render_report turns a list
of suites into a stable text report. Nothing here computes new mathematics,
it only drives the library and formats outcomes, so a FAIL line always
points at a genuine counterexample.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .classify import algebra_type, division_ring_of, primitive_idempotent, radon_hurwitz
from .pauli import (
    bloch_vector,
    density_from_bloch,
    lorentz_norm,
    purity,
    qubit_density,
    sl2c_double_cover_check,
    spinor_outer,
)
from .periodicity import bw_cycle, chessboard, fractal_dimension, verify_theorem3
from .reps import bw_rep_walk, quotient_structure, rep_field, rep_label
from .tensoriso import (
    block_matrix_form,
    even_iso_check,
    graded_tensor_check,
    karoubi_check,
    phi_psi_factorization,
    spin24_chain,
)

RING_OCTET = ["R", "C", "H", "H+H", "H", "C", "R", "R+R", "R"]


def _line(ok: bool, text: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} {text}"


def _suite(name: str, checks: list) -> dict:
    return {
        "name": name,
        "passed": all(ok for ok, _ in checks),
        "lines": [_line(ok, text) for ok, text in checks],
    }


def classification_suite(max_n: int = 7) -> dict:
    checks = []
    for p in range(max_n + 1):
        for q in range(max_n + 1 - p):
            dim, ring = division_ring_of(p, q)
            want = algebra_type(p, q).ring
            ok = ring == want
            checks.append((ok, f"Cl({p},{q}) corner ring {ring} (table says {want})"))
    return _suite("classification", checks)


def radon_suite() -> dict:
    base = [radon_hurwitz(i) for i in range(8)]
    checks = [(base == [0, 1, 2, 2, 3, 3, 3, 3], f"base row r_0..r_7 = {base}")]
    shift = all(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4 for i in range(-16, 65))
    checks.append((shift, "shift law r_(i+8) = r_i + 4 for -16 <= i <= 64"))
    return _suite("radon_hurwitz", checks)


def theorem3_suite(qmax: int = 24) -> dict:
    def k(q):
        return q - radon_hurwitz(q)

    checks = []
    rows = []
    if qmax >= 8:
        rows.append((1, [k(q) for q in range(9)]))
    r = 1
    while 8 * r + 8 <= qmax:
        rows.append((r + 1, [k(q) for q in range(8 * r + 1, 8 * r + 9)]))
        r += 1
    prev = None
    for cycle, seq in rows:
        ok = all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1))
        if prev is not None:
            tail = prev[-len(seq):]
            ok = ok and all(a == b + 4 for a, b in zip(seq, tail))
        checks.append((ok, f"k-sequence cycle {cycle}: {','.join(map(str, seq))}"))
        prev = seq
    if qmax >= 8:
        shift = all(k(q + 8) == k(q) + 4 for q in range(qmax - 8 + 1))
        checks.append((shift, f"shift law k(0,q+8) = k(0,q) + 4 for 0 <= q <= {qmax - 8}"))
    bmax = min(qmax, 9)
    brute = all(primitive_idempotent(0, q).k == k(q) for q in range(bmax + 1))
    checks.append((brute, f"idempotent search matches arithmetic k for q <= {bmax}"))
    if qmax >= 24:
        rep = verify_theorem3(qmax)
        checks.append((rep["passed"], f"full mod-4 periodicity report up to q = {qmax}"))
    return _suite("theorem3", checks)


def cycles_suite() -> dict:
    checks = []
    for r in range(8):
        cyc = bw_cycle(r)
        rings = [cyc[0].ring_from] + [t.ring_to for t in cyc]
        checks.append((rings == RING_OCTET, f"cycle r={r}: {' -> '.join(rings)}"))
    fd = fractal_dimension()
    checks.append((abs(fd - math.log(63) / math.log(8)) < 1e-15,
                   f"fractal dimension = {fd:.6f}"))
    board = chessboard(2)
    similar = all(
        board.cell(p + 8, q + 8) == board.cell(p, q)
        for p in range(8) for q in range(8)
    )
    checks.append((similar, "order-2 board repeats the order-1 block on the diagonal"))
    return _suite("brauer_wall_cycles", checks)


def chevalley_suite(max_n: int = 2) -> dict:
    sigs = [(p, q) for p in range(max_n + 1) for q in range(max_n + 1 - p)]
    checks = []
    bad = []
    for a in sigs:
        for b in sigs:
            rep = graded_tensor_check(a, b)
            if not rep.certified:
                bad.append((a, b))
    checks.append((not bad,
                   f"graded tensor certificates for all {len(sigs) ** 2} pairs with "
                   f"p+q <= {max_n} on both factors" + (f"; failures {bad}" if bad else "")))
    named = graded_tensor_check((1, 1), (2, 0))
    checks.append((named.certified and named.target_sig == (3, 1),
                   "graded witness Cl(1,1) x Cl(2,0) -> Cl(3,1) at rank 16"))
    return _suite("chevalley", checks)


def karoubi_suite() -> dict:
    cases = [
        ((1, 1), (0, 2), (1, 3), "positive"),
        ((1, 1), (2, 0), (3, 1), "positive"),
        ((0, 2), (1, 1), (1, 3), "negative"),
    ]
    checks = []
    for a, b, want, mode in cases:
        rep = karoubi_check(a, b)
        ok = rep.certified and rep.target_sig == want and rep.construction == mode
        checks.append((ok, f"Cl{a} x Cl{b} -> Cl{want} ({mode} twist)"))
    return _suite("karoubi", checks)


def even_iso_suite(max_n: int = 6) -> dict:
    checks = []
    for source, target in [((1, 3), (3, 0)), ((4, 1), (1, 3)), ((2, 4), (4, 1))]:
        rep = even_iso_check(*source)
        ok = rep.certified and rep.target_sig == target
        checks.append((ok, f"even part of Cl{source} -> Cl{target}"))
    bad = []
    count = 0
    for p in range(max_n + 1):
        for q in range(max_n + 1 - p):
            if p + q < 1:
                continue
            count += 1
            rep = even_iso_check(p, q)
            want = (q, p - 1) if (p >= 1 and p != q) else (p, q - 1)
            if not (rep.certified and rep.target_sig == want):
                bad.append((p, q))
    checks.append((not bad, f"sweep of {count} even-subalgebra witnesses for p+q <= {max_n}"))
    return _suite("even_subalgebra", checks)


def phi_psi_suite() -> dict:
    cases = [
        ((1, 3), (1, 1), "quaternion"),
        ((2, 2), (1, 1), "anti"),
        ((2, 2), (2, 0), "pseudo"),
        ((0, 4), (0, 2), "pseudo"),
        ((0, 2), (0, 0), "quaternion"),
        ((2, 0), (0, 0), "pseudo"),
        ((3, 1), (1, 1), "pseudo"),
    ]
    checks = []
    for target, base, want in cases:
        rep = phi_psi_factorization(target, base)
        ok = rep.passed and rep.case == want
        checks.append((ok, f"Cl{target} over Cl{base}: case {rep.case}, rank {rep.rank}"))
    return _suite("phi_psi", checks)


def block_suite(seed: int = 0, samples: int = 100) -> dict:
    checks = []
    form = block_matrix_form(1, 2)
    rep = form.sample_homomorphism(samples=samples, seed=seed)
    checks.append((rep["passed"],
                   f"Cl(1,3) block form: {rep['checked']} sampled products, "
                   f"{rep['failures']} failures"))
    form2 = block_matrix_form(2, 3)
    rep2 = form2.sample_homomorphism(samples=max(10, samples // 4), seed=seed + 1)
    checks.append((rep2["passed"],
                   f"Cl(2,4) block form: {rep2['checked']} sampled products, "
                   f"{rep2['failures']} failures"))
    return _suite("block_matrices", checks)


def chain24_suite() -> dict:
    rep = spin24_chain()
    checks = [(link.certified, f"{link.name}: rank {link.rank}") for link in rep.links]
    checks.append((rep.ok, "all links of the conformal chain certified"))
    return _suite("spin24_chain", checks)


def reps_suite() -> dict:
    checks = []
    degree_ok = all(
        rep_label(k, r).degree == (k + 1) * (r + 1)
        for k in range(9) for r in range(9)
    )
    checks.append((degree_ok, "degree formula (k+1)(r+1) for k,r <= 8"))
    field_ok = True
    for il in range(9):
        for ild in range(9):
            ring = algebra_type(2 * il, 2 * ild).ring
            want = "real" if ring in ("R", "R+R") else "quaternionic"
            if rep_field(Fraction(il, 2), Fraction(ild, 2)) != want:
                field_ok = False
    checks.append((field_ok, "field tags match the algebra ring on the 9x9 corner grid"))
    walk = bw_rep_walk(8)
    walk_ok = len(walk) == 64
    for e in walk:
        if e.q % 2 == 0:
            walk_ok = walk_ok and not e.quotient and e.l == 0 and e.l_dot == Fraction(e.q, 4)
        else:
            prev = walk[e.q - 1]
            walk_ok = walk_ok and e.quotient and (e.l, e.l_dot, e.field) == (
                prev.l, prev.l_dot, prev.field)
    checks.append((walk_ok, "mod-8 walk emits 64 labels alternating fresh/quotient"))
    for q in (1, 3, 5, 7):
        rep = quotient_structure(q)
        ok = rep["passed"] and rep["kernel_dim"] == 1 << (q - 1)
        checks.append((ok, f"q={q}: kernel and quotient dimensions {rep['kernel_dim']}"))
    return _suite("representations", checks)


def numeric_suite(seed: int = 0) -> dict:
    checks = []
    cover = sl2c_double_cover_check(samples=100, seed=seed)
    checks.append((cover["passed"],
                   f"double cover on 100 samples, max drift {cover['max_norm_drift']:.3e}"))
    rng = np.random.default_rng(seed + 1)
    max_null = 0.0
    for _ in range(200):
        xi = rng.normal(size=2) + 1j * rng.normal(size=2)
        x = spinor_outer(xi, xi.conj())
        max_null = max(max_null, abs(lorentz_norm(x.real)))
    checks.append((max_null < 1e-9, f"null outer products, max |S^2| = {max_null:.3e}"))
    max_round = 0.0
    for _ in range(200):
        v = rng.normal(size=4)
        a, b = complex(v[0], v[1]), complex(v[2], v[3])
        s = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        rho = qubit_density(a / s, b / s)
        P = bloch_vector(rho)
        max_round = max(max_round, float(np.max(np.abs(density_from_bloch(P) - rho))))
        max_round = max(max_round, abs(purity(rho) - (1 + float(np.dot(P, P))) / 2))
    checks.append((max_round < 1e-12, f"Bloch round trips, max defect {max_round:.3e}"))
    return _suite("numeric_layer", checks)


SUITE_BUILDERS = [
    ("classification", lambda seed: classification_suite()),
    ("radon_hurwitz", lambda seed: radon_suite()),
    ("theorem3", lambda seed: theorem3_suite()),
    ("brauer_wall_cycles", lambda seed: cycles_suite()),
    ("chevalley", lambda seed: chevalley_suite()),
    ("karoubi", lambda seed: karoubi_suite()),
    ("even_subalgebra", lambda seed: even_iso_suite()),
    ("phi_psi", lambda seed: phi_psi_suite()),
    ("block_matrices", lambda seed: block_suite(seed=seed)),
    ("spin24_chain", lambda seed: chain24_suite()),
    ("representations", lambda seed: reps_suite()),
    ("numeric_layer", lambda seed: numeric_suite(seed=seed)),
]


def run_all(seed: int = 0) -> list:
    return [build(seed) for _, build in SUITE_BUILDERS]


def render_report(results) -> str:
    out = ["verification report", "==================="]
    passed = 0
    for suite in results:
        out.append("")
        out.append(f"[{suite['name']}]")
        out.extend(suite["lines"])
        if suite["passed"]:
            passed += 1
    out.append("")
    out.append(f"summary: {passed}/{len(results)} suites passed")
    return "\n".join(out)
