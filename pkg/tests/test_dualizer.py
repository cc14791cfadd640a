"""Dualization: mates, structure isos, pairing cells and their laws."""

import random

import pytest

from hopfcheck import dualizer as DU, duoidal as D, laws as L
from hopfcheck.core import (idc, id2, invert2, invert2_strict, two_cells_equal,
                            comparison, whisker, vcompose2, Witness)
from hopfcheck.gvecback import frobenius_commutative, graded_cell
from hopfcheck.spanback import frobenius_monoidale


def test_span_dualize_swaps_legs():
    ctx = frobenius_monoidale((0, 1))
    be = ctx.backend
    f = ctx.atom(be.atomic_cell("f", [("e0", (0,), (1,)), ("e1", (1,), (1,))],
                                1, 1))
    got = sorted((dl, cl) for _, dl, cl in DU.dualize(f).total.elements)
    assert got == [((1,), (0,)), ((1,), (1,))]


def test_gvec_dualize_transposes_grading():
    ctx = frobenius_commutative(2)
    f = graded_cell(ctx, "f", {((0,), (0,)): 1, ((0,), (1,)): 2,
                               ((1,), (1,)): 1})
    got = {g: len(labs) for g, labs in DU.dualize(f).total.grades}
    assert got == {((0,), (0,)): 1, ((1,), (0,)): 2, ((1,), (1,)): 1}


def test_gvec_dualize_base_one_preserves_dimension():
    ctx = frobenius_commutative(1)
    f = graded_cell(ctx, "f", {((0,), (0,)): 3})
    assert DU.dualize(f).total.total_dim == 3


def test_roundtrip_and_structure_isos(ctx_row, rng):
    lbl, ctx, rand, _ = ctx_row
    for k in range(3):
        f = rand(ctx, rng, "r%d" % k)
        g = rand(ctx, rng, "s%d" % k)
        assert not isinstance(invert2(DU.roundtrip(f)), Witness)
        assert not isinstance(invert2(DU.compose_iso(f, g)), Witness)
        assert not isinstance(invert2(DU.conv_iso(f, g)), Witness)
    assert not isinstance(invert2(DU.unit_compose_iso(ctx)), Witness)
    assert not isinstance(invert2(DU.unit_conv_iso(ctx)), Witness)
    assert not isinstance(invert2(DU.dual_comult_iso(ctx)), Witness)
    assert not isinstance(invert2(DU.dual_mult_iso(ctx)), Witness)


def test_compose_iso_is_pair_reversal_for_spans():
    # two composable arrow cells of a three-morphism chain category
    ctx = frobenius_monoidale((0, 1, 2))
    be = ctx.backend
    f = ctx.atom(be.atomic_cell("f", [("f01", (0,), (1,))], 1, 1))
    g = ctx.atom(be.atomic_cell("g", [("g12", (1,), (2,))], 1, 1))
    xi = DU.compose_iso(f, g)
    src, tgt = xi.src.total, xi.tgt.total

    def content(cell, lab):
        return tuple(c for c, keep in zip(lab, cell.mask) if keep)

    for ti, si in enumerate(xi.data):
        ct = content(tgt, tgt.elements[ti][0])
        cs = content(src, src.elements[si][0])
        # target carries (f-part, g-part); source carries (g-part, f-part)
        assert ct == (cs[1], cs[0])


def test_unit_compose_iso_span_identity_carriers():
    ctx = frobenius_monoidale((0, 1))
    cell = DU.unit_compose_iso(ctx)
    assert len(cell.src.total.elements) == len(cell.tgt.total.elements) == 2


def test_pairing_unit_case_one_dimensional():
    ctx = frobenius_commutative(1)
    f = graded_cell(ctx, "f", {((0,), (0,)): 1})
    ph = DU.pairing_right(f, f)
    g = ((0,), (0,))
    assert ph.data.d[g] == ((1,),)
    up = DU.conv_iso(f, f)
    assert up.data.d[g] == ((1,),)


def test_pairing_boundaries(ctx_row, rng):
    lbl, ctx, rand, _ = ctx_row
    f, g, h = (rand(ctx, rng, n) for n in "fgh")
    ph = DU.pairing_right(f, g)
    assert ph.src == D.circ(f, DU.dualize(g))
    assert ph.tgt == D.bullet(D.circ(D.bullet(f, g), D.unit_j(ctx)),
                              D.unit_i(ctx))
    ps = DU.pairing_left(f, g)
    assert ps.src == D.circ(DU.dualize(f), g)
    assert ps.tgt == D.bullet(D.unit_i(ctx),
                              D.circ(D.unit_j(ctx), D.bullet(f, g)))
    th = DU.pairing_mixed(f, g, h)
    assert th.tgt == D.bullet(
        D.circ(D.circ(D.bullet(f, h), g), D.unit_j(ctx)), D.unit_i(ctx))


def test_mixed_pairing_at_unit_reduces(ctx_row, rng):
    lbl, ctx, rand, _ = ctx_row
    f, h = rand(ctx, rng, "f"), rand(ctx, rng, "h")
    i_, j_ = D.unit_i(ctx), D.unit_j(ctx)
    th_i = DU.pairing_mixed(f, i_, h)
    ji_to_i = comparison(D.bullet(D.circ(i_, j_), i_), i_)
    pre = whisker(f, ji_to_i, DU.dualize(h))
    lhs = vcompose2(th_i, invert2_strict(pre))
    assert two_cells_equal(lhs, DU.pairing_right(f, h))


def test_pairing_compat_laws(ctx_row, rng):
    lbl, ctx, rand, rand2 = ctx_row
    for trial in range(2):
        f, g, h, k = (rand(ctx, rng, "c%d%d" % (trial, i)) for i in range(4))
        assert L.check_pairing_left_compat(f, g, h, k)
        assert L.check_pairing_right_compat(f, g, h, k)
        assert L.check_mixed_pairing_left(f, g, h, k)
        assert L.check_mixed_pairing_counit(f, g, h)


def test_naturality_and_functoriality(ctx_row, rng):
    lbl, ctx, rand, rand2 = ctx_row
    for trial in range(2):
        f = rand(ctx, rng, "f%d" % trial)
        g = rand(ctx, rng, "g%d" % trial)
        al = rand2(ctx, rng, f, "al%d" % trial)
        be = rand2(ctx, rng, al.tgt, "be%d" % trial)
        assert L.check_pairing_naturality(al, g)
        assert L.check_dualize_functor(al, be)
        assert L.check_roundtrip_natural(al)
