"""Representation catalogue: labels, fields, walks, chains, blocks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cl8.classify import algebra_type
from cl8.reps import (
    bw_rep_walk,
    chain_algebra_sequence,
    quotient_structure,
    rep_field,
    rep_label,
    representation_block,
    spin_chain,
)

from figdata import FIG8, FIG9, WALK_CYCLE_1, WALK_CYCLE_2, WALK_CYCLE_8
from naive import stars_and_bars_degree


half = Fraction(1, 2)


def test_rep_label_basic():
    lab = rep_label(1, 2)
    assert lab.l == half
    assert lab.l_dot == 1
    assert lab.spin == half
    assert lab.degree == 6
    assert lab.spinspace_dim == 8
    assert lab.field == rep_field(lab.l, lab.l_dot)


@pytest.mark.parametrize("k", range(7))
@pytest.mark.parametrize("r", range(7))
def test_degree_matches_component_count(k, r):
    lab = rep_label(k, r)
    assert lab.degree == (k + 1) * (r + 1)
    assert lab.degree == stars_and_bars_degree(k, r)
    assert lab.spinspace_dim == 2 ** (k + r)
    assert lab.spin == abs(Fraction(k, 2) - Fraction(r, 2))


def test_rep_field_rule_examples():
    assert rep_field(0, 0) == "real"
    assert rep_field(half, 0) == "real"
    assert rep_field(0, half) == "quaternionic"
    assert rep_field(half, half) == "real"
    assert rep_field(1, 0) == "quaternionic"
    assert rep_field(Fraction(31, 2), 16) == "quaternionic"
    assert rep_field(16, 16) == "real"


def test_rep_field_matches_algebra_ring():
    # the field of tau_{l,ld} is the ring of the algebra with 4l plus and
    # 4ld minus generators; complex never occurs because 4(l-ld) is even
    for il in range(9):
        for ild in range(9):
            l, ld = Fraction(il, 2), Fraction(ild, 2)
            ring = algebra_type(int(4 * l), int(4 * ld)).ring
            want = "real" if ring in ("R", "R+R") else "quaternionic"
            assert ring != "C"
            assert rep_field(l, ld) == want


def test_fig8_grid():
    for (l, ld), tag in FIG8.items():
        want = "real" if tag == "r" else "quaternionic"
        assert rep_field(l, ld) == want, (l, ld)


def test_fig9_labels():
    for tag, l, ld in FIG9:
        want = "real" if tag == "r" else "quaternionic"
        assert rep_field(l, ld) == want, (l, ld)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=32), st.integers(min_value=0, max_value=32))
def test_rep_field_mod2_periodicity(il, ild):
    l, ld = Fraction(il, 2), Fraction(ild, 2)
    assert rep_field(l, ld) == rep_field(l + 2, ld)
    assert rep_field(l, ld) == rep_field(l, ld + 2)
    assert rep_field(l + 2, ld + 2) == rep_field(l, ld)


def walk_tuples(entries):
    return [(e.l, e.l_dot, e.field, e.quotient) for e in entries]


def test_bw_rep_walk_first_cycle():
    walk = bw_rep_walk(1)
    assert len(walk) == 8
    assert walk_tuples(walk) == WALK_CYCLE_1
    assert [e.q for e in walk] == list(range(8))


def test_bw_rep_walk_two_cycles():
    walk = bw_rep_walk(2)
    assert len(walk) == 16
    assert walk_tuples(walk[8:]) == WALK_CYCLE_2


def test_bw_rep_walk_eighth_cycle():
    walk = bw_rep_walk(8)
    assert len(walk) == 64
    assert walk_tuples(walk[56:]) == WALK_CYCLE_8


def test_bw_rep_walk_structure():
    walk = bw_rep_walk(8)
    for idx, e in enumerate(walk):
        assert e.q == idx
        if e.q % 2 == 0:
            assert not e.quotient
            assert e.l == 0
            assert e.l_dot == Fraction(e.q, 4)
            ring = algebra_type(0, e.q).ring
            assert e.field == ("real" if ring in ("R", "R+R") else "quaternionic")
        else:
            prev = walk[idx - 1]
            assert e.quotient
            assert (e.l, e.l_dot, e.field) == (prev.l, prev.l_dot, prev.field)


@pytest.mark.parametrize("q,dim", [(1, 1), (3, 4), (5, 16)])
def test_quotient_structure(q, dim):
    rep = quotient_structure(q)
    assert rep["kernel_dim"] == dim
    assert rep["quotient_dim"] == dim
    assert rep["passed"] is True
    lp, lm = rep["lambda_plus"], rep["lambda_minus"]
    assert lp * lp == lp
    assert lm * lm == lm
    assert not lp * lm
    one = lp + lm
    assert one == one * lp + one * lm


def test_quotient_structure_rejects_even():
    with pytest.raises(ValueError):
        quotient_structure(4)


def test_spin_chain_seven_plet():
    chain = spin_chain(Fraction(0), Fraction(3))
    pairs = [(m.l, m.l_dot) for m in chain.members]
    assert pairs == [
        (Fraction(0), Fraction(3)),
        (half, Fraction(5, 2)),
        (Fraction(1), Fraction(2)),
        (Fraction(3, 2), Fraction(3, 2)),
        (Fraction(2), Fraction(1)),
        (Fraction(5, 2), half),
        (Fraction(3), Fraction(0)),
    ]
    assert chain.spins_signed == [Fraction(s) for s in range(-3, 4)]
    assert [m.spin for m in chain.members] == [abs(s) for s in chain.spins_signed]


def test_spin_chain_doublet_and_singlet():
    doublet = spin_chain(half, Fraction(1))
    assert [(m.l, m.l_dot) for m in doublet.members] == [(half, Fraction(1)), (Fraction(1), half)]
    assert doublet.spins_signed == [-half, half]
    singlet = spin_chain(Fraction(1), Fraction(1))
    assert len(singlet.members) == 1
    assert singlet.spins_signed == [Fraction(0)]


def test_chain_algebra_sequence_constant_spinspace():
    chain = spin_chain(Fraction(0), Fraction(3))
    seq = chain_algebra_sequence(chain)
    assert [(d.k, d.r) for d in seq] == [
        (0, 6), (1, 5), (2, 4), (3, 3), (4, 2), (5, 1), (6, 0),
    ]
    assert all(d.k + d.r == 6 for d in seq)
    assert all(d.spinspace_dim == 64 for d in seq)


def test_representation_block_order_one_matches_grid():
    block = representation_block(1)
    assert block.order == 1
    assert block.bound == 2
    assert len(block.nodes) == 25
    for (l, ld), tag in FIG8.items():
        want = "real" if tag == "r" else "quaternionic"
        assert block.nodes[(l, ld)] == want


def test_representation_block_order_two_contains_published_labels():
    block = representation_block(2)
    assert block.bound == 16
    assert len(block.nodes) == 33 * 33
    for tag, l, ld in FIG9:
        want = "real" if tag == "r" else "quaternionic"
        assert block.nodes[(l, ld)] == want


def test_representation_sub_block_window():
    block = representation_block(2)
    sub = block.sub_block(7, 7)
    assert (Fraction(31, 2), Fraction(16)) in sub.nodes
    assert min(k[0] for k in sub.nodes) == 14
    assert max(k[0] for k in sub.nodes) == 16
    assert min(k[1] for k in sub.nodes) == 14
    assert max(k[1] for k in sub.nodes) == 16
    assert len(sub.nodes) == 25
    corner = block.sub_block(0, 0)
    for (l, ld), tag in FIG8.items():
        want = "real" if tag == "r" else "quaternionic"
        assert corner.nodes[(l, ld)] == want
