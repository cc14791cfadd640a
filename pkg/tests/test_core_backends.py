"""Backend contract tests: cells, 2-cell calculus, comparisons, witnesses."""

import random

import pytest

from hopfcheck.core import (idc, id2, paste, whisker, tensor2, hcompose2,
                            comparison, invert2, invert2_strict, Witness,
                            two_cells_equal, vcompose2)
from hopfcheck.errors import CompositionError, CoherenceError
from hopfcheck.spanback import frobenius_monoidale, random_cell as sp_rand, \
    random_two_cell as sp_rand2
from hopfcheck.gvecback import (frobenius_commutative, frobenius_weak,
                                graded_cell, random_cell as gv_rand,
                                random_two_cell as gv_rand2)


def span2():
    return frobenius_monoidale((0, 1))


def all_ctx():
    return [
        ("span2", frobenius_monoidale((0, 1)), sp_rand, sp_rand2),
        ("span3", frobenius_monoidale((0, 1, 2)), sp_rand, sp_rand2),
        ("comm1", frobenius_commutative(1), gv_rand, gv_rand2),
        ("comm2", frobenius_commutative(2), gv_rand, gv_rand2),
        ("weak2", frobenius_weak(2), gv_rand, gv_rand2),
    ]


def test_span_pullback_composition():
    # one edge 0->1 composed with one edge 1->0 leaves a single pair
    ctx = span2()
    be = ctx.backend
    e = ctx.atom(be.atomic_cell("E", [("e", (0,), (1,))], 1, 1))
    f = ctx.atom(be.atomic_cell("F", [("f", (1,), (0,))], 1, 1))
    comp = e.then(f).total
    assert len(comp.elements) == 1
    assert comp.elements[0][1:] == ((0,), (0,))


def test_span_identity_units_and_j():
    ctx = span2()
    j = ctx.ustar.then(ctx.u)
    assert len(j.total.elements) == 4
    assert len(idc(ctx, 1).total.elements) == 2


def test_compose_with_identity_is_canonical():
    ctx = span2()
    rng = random.Random(0)
    f = sp_rand(ctx, rng, "f")
    # the identity chain is strict, and the comparison with any
    # identity-padded relayering is invertible
    assert f.then(idc(ctx, 1)) == f
    padded = f.tensor(idc(ctx, 0))
    assert padded == f


def test_arity_mismatch_raises_naming_cells():
    ctx = span2()
    with pytest.raises(CompositionError):
        ctx.m.then(ctx.m)


def test_gvec_tensor_dimensions_multiply():
    ctx = frobenius_commutative(1)
    q2 = graded_cell(ctx, "x", {((0,), (0,)): 2})
    q3 = graded_cell(ctx, "y", {((0,), (0,)): 3})
    assert q2.tensor(q3).total.total_dim == 6


def test_gvec_invert_unipotent():
    from fractions import Fraction
    ctx = frobenius_commutative(1)
    a = graded_cell(ctx, "a", {((0,), (0,)): 2})
    b = graded_cell(ctx, "b", {((0,), (0,)): 2})
    cell = ctx.backend.two_cell_fn(
        a, b, lambda g, tl, sl: [[1, 1], [0, 1]][tl[0][3]][sl[0][3]])
    inv = invert2_strict(cell)
    g = ((0,), (0,))
    assert inv.data.d[g] == ((Fraction(1), Fraction(-1)),
                             (Fraction(0), Fraction(1)))


def test_gvec_invert_rank_deficient_witness():
    ctx = frobenius_commutative(1)
    a = graded_cell(ctx, "a", {((0,), (0,)): 2})
    b = graded_cell(ctx, "b", {((0,), (0,)): 2})
    cell = ctx.backend.two_cell_fn(a, b, lambda g, tl, sl: 1)
    w = invert2(cell)
    assert isinstance(w, Witness) and w.kind == "kernel"
    grade, vec = w.data
    assert list(vec) in ([1, -1], [-1, 1])
    assert w.replay()


def test_span_invert_bijection_and_witness():
    ctx = span2()
    rng = random.Random(3)
    f = sp_rand(ctx, rng, "f")
    ident = id2(f)
    assert not isinstance(invert2(ident), Witness)
    # a collapsing 2-cell has a replayable witness
    be = ctx.backend
    a = ctx.atom(be.atomic_cell("a", [("x", (0,), (0,)), ("y", (0,), (0,))],
                                1, 1))
    b = ctx.atom(be.atomic_cell("b", [("z", (0,), (0,))], 1, 1))
    coll = be.make_two_cell(b, a, lambda lab: (("b", "z"),))
    w = invert2(coll)
    assert isinstance(w, Witness) and w.kind == "multiple-preimages"
    assert w.replay()


@pytest.mark.parametrize("lbl,ctx,rand,rand2", all_ctx())
def test_middle_four_interchange(lbl, ctx, rand, rand2):
    rng = random.Random(7)
    for trial in range(6):
        f = rand(ctx, rng, "f%d" % trial)
        g = rand(ctx, rng, "g%d" % trial)
        a1 = rand2(ctx, rng, f, "a%d" % trial)
        a2 = rand2(ctx, rng, a1.tgt, "b%d" % trial)
        b1 = rand2(ctx, rng, g, "c%d" % trial)
        b2 = rand2(ctx, rng, b1.tgt, "d%d" % trial)
        lhs = tensor2(vcompose2(a2, a1), vcompose2(b2, b1))
        rhs = vcompose2(tensor2(a2, b2), tensor2(a1, b1))
        assert two_cells_equal(lhs, rhs)


@pytest.mark.parametrize("lbl,ctx,rand,rand2", all_ctx())
def test_horizontal_interchange(lbl, ctx, rand, rand2):
    rng = random.Random(11)
    for trial in range(4):
        f = rand(ctx, rng, "f%d" % trial)
        g = rand(ctx, rng, "g%d" % trial)
        a = rand2(ctx, rng, f, "a%d" % trial)
        b = rand2(ctx, rng, g, "b%d" % trial)
        lhs = hcompose2(a, b)
        first = whisker(idc(ctx, 1), a, g)
        second = whisker(a.tgt, b, idc(ctx, 1))
        other = vcompose2(second, first)
        assert two_cells_equal(lhs, other)
        # the two whiskering orders agree
        first2 = whisker(f, b, idc(ctx, 1))
        second2 = whisker(idc(ctx, 1), a, b.tgt)
        assert two_cells_equal(lhs, vcompose2(second2, first2))


@pytest.mark.parametrize("lbl,ctx,rand,rand2", all_ctx())
def test_comparison_paths_compose_coherently(lbl, ctx, rand, rand2):
    rng = random.Random(13)
    one = idc(ctx, 1)
    for trial in range(4):
        f = rand(ctx, rng, "f%d" % trial)
        g = rand(ctx, rng, "g%d" % trial)
        a = f.tensor(g)
        b = f.tensor(one).then(one.tensor(g))
        c = one.tensor(g).then(f.tensor(one))
        ab = comparison(a, b)
        bc = comparison(b, c)
        ac = comparison(a, c)
        assert two_cells_equal(vcompose2(bc, ab), ac)


def test_comparison_refuses_ambiguity():
    ctx = span2()
    # u*.u from I to I has |X| indistinguishable elements
    loop = ctx.u.then(ctx.ustar)
    other = ctx.u.then(ctx.ustar)
    dup = loop.then(idc(ctx, 0))
    assert dup == other
    with pytest.raises(CoherenceError):
        comparison(loop, idc(ctx, 0))
