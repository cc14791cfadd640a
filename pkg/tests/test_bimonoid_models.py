"""Model constructors, validation, and the seeded corpus."""

import pytest

from hopfcheck import models as M
from hopfcheck.bimonoid import (validate_bimonoid, dual_bimonoid,
                                free_right_module, cofree_right_comodule,
                                free_left_module, cofree_left_comodule,
                                validate_module, validate_comodule,
                                lax_mult, colax_mult, lax_unit, colax_unit)
from hopfcheck.errors import ValidationError
from hopfcheck.gvecback import frobenius_commutative, frobenius_weak
from hopfcheck.spanback import frobenius_monoidale


def test_category_validation_rejects_bad_table():
    cat = M.walking_arrow()
    table = dict(cat.compose)
    table[("id_0", "t")] = "id_1"
    bad = M.FiniteCategory(cat.objects, cat.morphisms, cat.identities, table)
    with pytest.raises(ValidationError):
        M.validate_category(bad)


def test_bialgebra_validation_rejects_non_coassociative():
    ctx = frobenius_commutative(1)
    grades = [(0, 0), (0, 0)]
    mu = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}
    eta = {0: 1}
    delta = {(0, 0, 0): 1, (1, 1, 0): 1}   # not coassociative
    eps = {0: 1, 1: 1}
    with pytest.raises(ValidationError):
        M.bialgebra_bimonoid(ctx, "bad", grades, mu, eta, delta, eps)


def test_standard_models_validate():
    for mk in [
        lambda: M.group_algebra(M.cyclic_group_table(2), "g0"),
        lambda: M.group_algebra(M.cyclic_group_table(3), "g0"),
        lambda: M.idempotent_monoid_algebra(),
        lambda: M.sweedler(),
        lambda: M.category_bimonoid(M.walking_arrow()),
        lambda: M.category_bimonoid(M.discrete_category((0, 1))),
        lambda: M.linearized_category(M.walking_arrow()),
    ]:
        b = mk()
        assert validate_bimonoid(b)
        assert validate_bimonoid(dual_bimonoid(b))


def test_groupoid_oracle():
    assert M.groupoid_oracle(M.discrete_category((0, 1)))
    assert not M.groupoid_oracle(M.walking_arrow())
    assert M.groupoid_oracle(
        M.group_as_category(M.cyclic_group_table(3), "g0"))
    t3, u3 = M.sym3_table()
    assert M.groupoid_oracle(M.group_as_category(t3, u3))


def test_trivial_bimonoids_validate_everywhere():
    for ctx in [frobenius_monoidale((0, 1)), frobenius_commutative(1),
                frobenius_commutative(2), frobenius_weak(2)]:
        assert validate_bimonoid(M.trivial_compose_unit(ctx))
        assert validate_bimonoid(M.trivial_conv_unit(ctx))


def test_modules_and_comodules_validate(rng):
    for b in [M.group_algebra(M.cyclic_group_table(2), "g0"),
              M.category_bimonoid(M.walking_arrow())]:
        from hopfcheck.diagnose import random_endocell
        z = random_endocell(b.ctx, rng, "z")
        assert validate_module(free_right_module(b, z))
        assert validate_module(free_left_module(b, z))
        assert validate_comodule(cofree_right_comodule(b, z))
        assert validate_comodule(cofree_left_comodule(b, z))


def test_lax_structure_cells_shapes():
    b = M.group_algebra(M.cyclic_group_table(2), "g0")
    ctx = b.ctx
    a = b.cell
    assert lax_mult(b).src == a.tensor(a).then(ctx.m)
    assert lax_mult(b).tgt == ctx.m.then(a)
    assert colax_mult(b).src == ctx.mstar.then(a.tensor(a))
    assert colax_mult(b).tgt == a.then(ctx.mstar)
    assert lax_unit(b).src == ctx.u
    assert lax_unit(b).tgt == ctx.u.then(a)
    assert colax_unit(b).src == ctx.ustar
    assert colax_unit(b).tgt == a.then(ctx.ustar)


def test_corpus_reproducible_and_valid():
    c1 = M.corpus_categories(40, 42)
    c2 = M.corpus_categories(40, 42)
    assert c1 == c2
    for cat in c1:
        assert M.validate_category(cat)
        assert len(cat.morphisms) <= 12 and len(cat.objects) <= 4
    kinds = {M.groupoid_oracle(c) for c in c1}
    assert kinds == {True, False}


def test_sweedler_structure_constants():
    b = M.sweedler()
    # x * g = -g x  shows up as a -1 entry in the convolution cell
    from hopfcheck.duoidal import bullet
    conv = bullet(b.cell, b.cell)
    g = ((0,), (0,))
    flat = [x for row in b.mu.data.d[g] for x in row]
    assert min(flat) == -1 and max(flat) == 1
