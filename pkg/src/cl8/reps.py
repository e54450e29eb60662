"""Label catalogue for the double-valued representations tau_{l,l_dot}.

Everything here is bookkeeping over (l, l_dot) pairs: spin, degree, the
real/quaternionic field tag, quotient flags along the mod-8 walk, spin
chains, and the block grids. No representation matrices are constructed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MV, GaussianRational, Signature, volume_element
from .linalg import rank_of


@dataclass(frozen=True)
class RepLabel:
    l: Fraction
    l_dot: Fraction
    field: str
    quotient: bool
    spin: Fraction
    degree: int
    spinspace_dim: int
    q: int | None = None


@dataclass(frozen=True)
class TensorAlgebraDescriptor:
    k: int
    r: int
    spinspace_dim: int


@dataclass(frozen=True)
class SpinChain:
    start: tuple
    members: list
    spins_signed: list

    def __len__(self):
        return len(self.members)


def _half_integer(value, name):
    f = Fraction(value)
    if (2 * f).denominator != 1:
        raise ValueError(f"{name} must be a half-integer, got {value}")
    return f


def rep_field(l, l_dot) -> str:
    """Field tag of tau_{l,l_dot}: the division ring of the algebra with
    4l plus and 4l_dot minus generators, which is never complex."""
    l = _half_integer(l, "l")
    ld = _half_integer(l_dot, "l_dot")
    t = int(4 * l - 4 * ld) % 8
    return "real" if t in (0, 2) else "quaternionic"


def rep_label(k: int, r: int, quotient: bool = False, q: int | None = None) -> RepLabel:
    if k < 0 or r < 0:
        raise ValueError("k and r must be nonnegative")
    l = Fraction(k, 2)
    ld = Fraction(r, 2)
    return RepLabel(
        l=l,
        l_dot=ld,
        field=rep_field(l, ld),
        quotient=quotient,
        spin=abs(l - ld),
        degree=(k + 1) * (r + 1),
        spinspace_dim=1 << (k + r),
        q=q,
    )


def bw_rep_walk(cycles: int) -> list:
    """One label per step of the mod-8 walk on the minus-definite column.

    Even steps give a fresh tau with l_dot = q/4; odd steps repeat the
    previous label with the quotient flag raised.
    """
    if cycles < 1:
        raise ValueError("cycles must be at least 1")
    walk = []
    for q in range(8 * cycles):
        if q % 2 == 0:
            walk.append(rep_label(0, q // 2, quotient=False, q=q))
        else:
            prev = walk[-1]
            walk.append(RepLabel(
                l=prev.l,
                l_dot=prev.l_dot,
                field=prev.field,
                quotient=True,
                spin=prev.spin,
                degree=prev.degree,
                spinspace_dim=prev.spinspace_dim,
                q=q,
            ))
    return walk


def quotient_structure(q: int) -> dict:
    """Split the odd-step algebra through its central idempotents.

    lambda_plus and lambda_minus are (1 +- alpha)/2 where alpha is the
    volume element normalized to square +1; when omega^2 = -1 (q = 1 mod 4)
    the normalization needs the complex unit, matching the i that appears
    in the one-generator split R + iR. The kernel of the fold-down map is
    spanned by b - alpha*b over all blades b and must have half the total
    dimension.
    """
    if q % 2 == 0:
        raise ValueError("q must be odd")
    sig = Signature(0, q, complexified=True)
    omega = volume_element(sig)
    one = MV.scalar(sig, 1)
    if omega * omega == one:
        alpha = omega
    else:
        alpha = omega * GaussianRational(0, 1)
    lam_plus = (one + alpha) * Fraction(1, 2)
    lam_minus = (one - alpha) * Fraction(1, 2)
    checks = [
        lam_plus * lam_plus == lam_plus,
        lam_minus * lam_minus == lam_minus,
        not (lam_plus * lam_minus),
    ]
    for i in range(1, q + 1):
        e = MV.generator(sig, i)
        checks.append(alpha * e == e * alpha)
    kernel_vectors = []
    for mask in range(1 << q):
        b = MV.blade(sig, mask)
        kernel_vectors.append((b - alpha * b).terms)
    kernel_dim = rank_of(kernel_vectors)
    quotient_dim = (1 << q) - kernel_dim
    checks.append(kernel_dim == 1 << (q - 1))
    return {
        "lambda_plus": lam_plus,
        "lambda_minus": lam_minus,
        "kernel_dim": kernel_dim,
        "quotient_dim": quotient_dim,
        "passed": all(checks),
    }


def spin_chain(l, l_dot) -> SpinChain:
    """Ladder of labels from tau_{l,l_dot} to tau_{l_dot,l} in half steps."""
    l = _half_integer(l, "l")
    ld = _half_integer(l_dot, "l_dot")
    if l > ld:
        l, ld = ld, l
    members = []
    cur_l, cur_ld = l, ld
    while True:
        members.append(rep_label(int(2 * cur_l), int(2 * cur_ld)))
        if cur_l == ld:
            break
        cur_l += Fraction(1, 2)
        cur_ld -= Fraction(1, 2)
    spins = []
    s = l - ld
    while s <= ld - l:
        spins.append(s)
        s += 1
    return SpinChain(start=(l, ld), members=members, spins_signed=spins)


def chain_algebra_sequence(chain: SpinChain) -> list:
    return [
        TensorAlgebraDescriptor(
            k=int(2 * m.l),
            r=int(2 * m.l_dot),
            spinspace_dim=m.spinspace_dim,
        )
        for m in chain.members
    ]


class RepBlock:
    """Grid of field tags over 0 <= l, l_dot <= bound in half steps."""

    def __init__(self, order, bound, nodes):
        self.order = order
        self.bound = bound
        self.nodes = nodes

    def sub_block(self, i: int, j: int) -> "RepBlock":
        lo_l, hi_l = Fraction(2 * i), Fraction(2 * i + 2)
        lo_d, hi_d = Fraction(2 * j), Fraction(2 * j + 2)
        window = {
            key: tag
            for key, tag in self.nodes.items()
            if lo_l <= key[0] <= hi_l and lo_d <= key[1] <= hi_d
        }
        if len(window) != 25:
            raise ValueError("sub-block window falls outside the grid")
        return RepBlock(order=self.order, bound=self.bound, nodes=window)


def representation_block(order: int) -> RepBlock:
    if order < 1:
        raise ValueError("order must be at least 1")
    bound = 2 * 8 ** (order - 1)
    half = Fraction(1, 2)
    nodes = {}
    steps = 2 * bound + 1
    for a in range(steps):
        for b in range(steps):
            l, ld = a * half, b * half
            nodes[(l, ld)] = rep_field(l, ld)
    return RepBlock(order=order, bound=bound, nodes=nodes)


# --------------------------------------------------------------------------
# renderers
# --------------------------------------------------------------------------


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def label_token(label: RepLabel) -> str:
    tag = "r" if label.field == "real" else "q"
    eps = "^e " if label.quotient else ""
    return f"{eps}tau[{tag}]({_frac_str(label.l)},{_frac_str(label.l_dot)})"


def label_json_dict(label: RepLabel, include_quotient: bool = True) -> dict:
    out = {
        "l": _frac_str(label.l),
        "l_dot": _frac_str(label.l_dot),
        "field": label.field,
        "spin": _frac_str(label.spin),
        "degree": label.degree,
        "spinspace_dim": label.spinspace_dim,
    }
    if include_quotient:
        out["quotient"] = label.quotient
    return out


def block_text(block: RepBlock) -> str:
    """Letter grid, l increasing down, l_dot increasing right."""
    half = Fraction(1, 2)
    steps = 2 * block.bound + 1
    header = "l\\ld " + " ".join(f"{_frac_str(b * half):>4}" for b in range(steps))
    lines = [header]
    for a in range(steps):
        l = a * half
        row = [f"{_frac_str(l):>4} "]
        for b in range(steps):
            tag = block.nodes[(l, b * half)]
            row.append(f"{'r' if tag == 'real' else 'q':>4}")
        lines.append(" ".join(row))
    return "\n".join(lines)


def chain_text(chain: SpinChain) -> str:
    arrow = " -> ".join(label_token(m) for m in chain.members)
    spins = ", ".join(_frac_str(s) for s in chain.spins_signed)
    return f"{arrow}\nspins: {spins}"


def chain_json(chain: SpinChain) -> str:
    return json.dumps({
        "start": [_frac_str(chain.start[0]), _frac_str(chain.start[1])],
        "members": [label_json_dict(m, include_quotient=False) for m in chain.members],
        "spins_signed": [_frac_str(s) for s in chain.spins_signed],
        "algebras": [
            {"k": d.k, "r": d.r, "spinspace_dim": d.spinspace_dim}
            for d in chain_algebra_sequence(chain)
        ],
    })


def walk_text(walk: list) -> str:
    return " -> ".join(label_token(e) for e in walk)
