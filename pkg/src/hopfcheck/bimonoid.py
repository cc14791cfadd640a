"""Bimonoids in the duoidal hom-category and their (co)modules.

A bimonoid is a convolution monoid that is also a composition comonoid,
compatibly; over the span backend these are small categories with a
fixed object set, over the graded backend ordinary bialgebras (or
bialgebroids for a larger base).  The same data is a comonad on the base
object whose comultiplication and counit are monoidal.
"""

from dataclasses import dataclass, field

from .core import (Chain, TwoCell, idc, id2, paste, whisker, tensor2,
                   hcompose2, comparison, two_cells_equal, vcompose2,
                   invert2_strict)
from .duoidal import (unit_i, unit_j, circ, bullet, bullet2, circ2,
                      interchange, interchange_unit_j, interchange_unit_i,
                      counit_j, bullet_assoc, bullet_unit_left,
                      bullet_unit_right)
from .dualizer import (dualize, dualize2, compose_iso, conv_iso,
                       unit_compose_iso, unit_conv_iso)
from .errors import ValidationError


@dataclass(frozen=True)
class Bimonoid:
    """Convolution monoid + composition comonoid on one endo-1-cell."""

    cell: Chain
    mu: TwoCell      # a•a -> a
    eta: TwoCell     # j -> a
    delta: TwoCell   # a -> a∘a
    eps: TwoCell     # a -> i
    name: str = "a"

    @property
    def ctx(self):
        return self.cell.ctx

    def monoid(self):
        return ConvMonoid(self.cell, self.mu, self.eta)

    def comonoid(self):
        return CompComonoid(self.cell, self.delta, self.eps)


@dataclass(frozen=True)
class ConvMonoid:
    """A monoid for the convolution product."""

    cell: Chain
    mu: TwoCell
    eta: TwoCell

    @property
    def ctx(self):
        return self.cell.ctx


@dataclass(frozen=True)
class CompComonoid:
    """A comonoid for the composition product."""

    cell: Chain
    delta: TwoCell
    eps: TwoCell

    @property
    def ctx(self):
        return self.cell.ctx


def conv_monoid_product(m1, m2):
    """``m1 ∘ m2`` as a convolution monoid (composition of monoids)."""
    a, b = m1.cell, m2.cell
    mu = paste(interchange(a, b, a, b), circ2(m1.mu, m2.mu))
    eta = paste(interchange_unit_j(a.ctx), hcompose2(m1.eta, m2.eta))
    return ConvMonoid(circ(a, b), mu, eta)


def comp_comonoid_product(c1, c2):
    """``c1 • c2`` as a composition comonoid (tensor of comonoids)."""
    c, d = c1.cell, c2.cell
    delta = paste(bullet2(c1.delta, c2.delta), interchange(c, c, d, d))
    eps = paste(bullet2(c1.eps, c2.eps), interchange_unit_i(c.ctx))
    return CompComonoid(bullet(c, d), delta, eps)


def _require(ok, axiom, witness=None):
    if not ok:
        raise ValidationError("bimonoid axiom failed: %s" % axiom, witness)


def validate_bimonoid(b):
    """Check all monoid, comonoid and compatibility axioms exactly."""
    a, ctx = b.cell, b.ctx
    j = unit_j(ctx)
    # convolution monoid
    lhs = vcompose2(b.mu, bullet2(b.mu, id2(a)))
    rhs = paste(bullet_assoc(a, a, a), bullet2(id2(a), b.mu), b.mu)
    _require(two_cells_equal(lhs, rhs), "associativity of the convolution "
             "multiplication")
    unit_l = paste(bullet2(b.eta, id2(a)), b.mu)
    _require(two_cells_equal(unit_l, bullet_unit_left(a)), "left unit law")
    unit_r = paste(bullet2(id2(a), b.eta), b.mu)
    _require(two_cells_equal(unit_r, bullet_unit_right(a)), "right unit law")
    # composition comonoid (strictly associative product)
    _require(two_cells_equal(vcompose2(hcompose2(b.delta, id2(a)), b.delta),
                             vcompose2(hcompose2(id2(a), b.delta), b.delta)),
             "coassociativity of the comultiplication")
    _require(two_cells_equal(vcompose2(hcompose2(b.eps, id2(a)), b.delta),
                             id2(a)), "left counit law")
    _require(two_cells_equal(vcompose2(hcompose2(id2(a), b.eps), b.delta),
                             id2(a)), "right counit law")
    # compatibility
    lhs = vcompose2(b.delta, b.mu)
    rhs = paste(bullet2(b.delta, b.delta), interchange(a, a, a, a),
                circ2(b.mu, b.mu))
    _require(two_cells_equal(lhs, rhs),
             "multiplication is a comonoid morphism")
    lhs = vcompose2(b.eps, b.mu)
    rhs = paste(bullet2(b.eps, b.eps), interchange_unit_i(ctx))
    _require(two_cells_equal(lhs, rhs), "counit is multiplicative")
    lhs = vcompose2(b.delta, b.eta)
    rhs = paste(interchange_unit_j(ctx), hcompose2(b.eta, b.eta))
    _require(two_cells_equal(lhs, rhs), "unit is a comonoid morphism")
    lhs = vcompose2(b.eps, b.eta)
    _require(two_cells_equal(lhs, counit_j(ctx)), "unit/counit compatibility")
    return True


# -- derived lax/colax structure ------------------------------------------

def lax_mult(b):
    """``m.(a a) -> a.m``, the lax multiplication comparison."""
    ctx = b.ctx
    s1 = whisker(idc(ctx, 2), ctx.eta_m, b.cell.tensor(b.cell).then(ctx.m))
    s2 = whisker(ctx.m, b.mu, idc(ctx, 1))
    return paste(s1, s2)


def colax_mult(b):
    """``(a a).m* -> m*.a``, the colax multiplication comparison."""
    ctx = b.ctx
    s1 = whisker(ctx.mstar.then(b.cell.tensor(b.cell)), ctx.eta_m,
                 idc(ctx, 2))
    s2 = whisker(idc(ctx, 1), b.mu, ctx.mstar)
    return paste(s1, s2)


def lax_unit(b):
    """``u -> a.u``."""
    ctx = b.ctx
    s1 = whisker(idc(ctx, 0), ctx.eta_u, ctx.u)
    s2 = whisker(ctx.u, b.eta, idc(ctx, 1))
    return paste(s1, s2)


def colax_unit(b):
    """``u* -> u*.a``."""
    ctx = b.ctx
    s1 = whisker(ctx.ustar, ctx.eta_u, idc(ctx, 0))
    s2 = whisker(idc(ctx, 1), b.eta, ctx.ustar)
    return paste(s1, s2)


# -- the dual bimonoid -----------------------------------------------------

def dual_bimonoid(b):
    """The bimonoid structure on the dual cell, via the duality isos."""
    a, ctx = b.cell, b.ctx
    am = dualize(a)
    mu = vcompose2(dualize2(b.mu), conv_iso(a, a))
    eta = vcompose2(dualize2(b.eta), unit_conv_iso(ctx))
    delta = vcompose2(invert2_strict(compose_iso(a, a)), dualize2(b.delta))
    eps = vcompose2(invert2_strict(unit_compose_iso(ctx)), dualize2(b.eps))
    return Bimonoid(am, mu, eta, delta, eps, name=b.name + "^-")


# -- modules and comodules -------------------------------------------------

@dataclass(frozen=True)
class RightModule:
    over: Bimonoid
    cell: Chain
    act: TwoCell      # q•a -> q


@dataclass(frozen=True)
class LeftModule:
    over: Bimonoid
    cell: Chain
    act: TwoCell      # a•q -> q


@dataclass(frozen=True)
class RightComodule:
    over: Bimonoid
    cell: Chain
    coact: TwoCell    # p -> p∘a


@dataclass(frozen=True)
class LeftComodule:
    over: Bimonoid
    cell: Chain
    coact: TwoCell    # p -> a∘p


def validate_module(mod):
    b, q = mod.over, mod.cell
    a = b.cell
    if isinstance(mod, RightModule):
        lhs = vcompose2(mod.act, bullet2(mod.act, id2(a)))
        rhs = paste(bullet_assoc(q, a, a), bullet2(id2(q), b.mu), mod.act)
        _require(two_cells_equal(lhs, rhs), "module associativity")
        unit = paste(bullet2(id2(q), b.eta), mod.act)
        _require(two_cells_equal(unit, bullet_unit_right(q)),
                 "module unitality")
    else:
        lhs = vcompose2(mod.act, bullet2(id2(a), mod.act))
        rhs = paste(invert2_strict(bullet_assoc(a, a, q)),
                    bullet2(b.mu, id2(q)), mod.act)
        _require(two_cells_equal(lhs, rhs), "module associativity")
        unit = paste(bullet2(b.eta, id2(q)), mod.act)
        _require(two_cells_equal(unit, bullet_unit_left(q)),
                 "module unitality")
    return True


def validate_comodule(com):
    b, p = com.over, com.cell
    a = b.cell
    if isinstance(com, RightComodule):
        lhs = vcompose2(hcompose2(com.coact, id2(a)), com.coact)
        rhs = vcompose2(hcompose2(id2(p), b.delta), com.coact)
        _require(two_cells_equal(lhs, rhs), "comodule coassociativity")
        counit = vcompose2(hcompose2(id2(p), b.eps), com.coact)
        _require(two_cells_equal(counit, id2(p)), "comodule counitality")
    else:
        lhs = vcompose2(hcompose2(id2(a), com.coact), com.coact)
        rhs = vcompose2(hcompose2(b.delta, id2(p)), com.coact)
        _require(two_cells_equal(lhs, rhs), "comodule coassociativity")
        counit = vcompose2(hcompose2(b.eps, id2(p)), com.coact)
        _require(two_cells_equal(counit, id2(p)), "comodule counitality")
    return True


def free_right_module(b, z):
    """``z•a`` with the multiplication action."""
    q = bullet(z, b.cell)
    act = paste(bullet_assoc(z, b.cell, b.cell),
                bullet2(id2(z), b.mu))
    return RightModule(b, q, act)


def free_left_module(b, z):
    q = bullet(b.cell, z)
    act = paste(invert2_strict(bullet_assoc(b.cell, b.cell, z)),
                bullet2(b.mu, id2(z)))
    return LeftModule(b, q, act)


def regular_right_module(b):
    return RightModule(b, b.cell, b.mu)


def cofree_right_comodule(b, y):
    """``y∘a`` with the comultiplication coaction."""
    p = circ(y, b.cell)
    coact = hcompose2(id2(y), b.delta)
    return RightComodule(b, p, coact)


def cofree_left_comodule(b, y):
    p = circ(b.cell, y)
    coact = hcompose2(b.delta, id2(y))
    return LeftComodule(b, p, coact)


def regular_right_comodule(b):
    return RightComodule(b, b.cell, b.delta)


def tensor_right_comodules(cm1, cm2):
    """Convolution tensor of right comodules (the comonad is monoidal)."""
    b = cm1.over
    a = b.cell
    p, p2 = cm1.cell, cm2.cell
    coact = paste(bullet2(cm1.coact, cm2.coact),
                  interchange(p, a, p2, a),
                  circ2(id2(bullet(p, p2)), b.mu))
    return RightComodule(b, bullet(p, p2), coact)


def tensor_right_modules(md1, md2):
    """Composition tensor of right modules (the monad is opmonoidal)."""
    b = md1.over
    a = b.cell
    q, q2 = md1.cell, md2.cell
    act = paste(bullet2(id2(circ(q, q2)), b.delta),
                interchange(q, q2, a, a),
                circ2(md1.act, md2.act))
    return RightModule(b, circ(q, q2), act)


# -- Hopf modules ----------------------------------------------------------

@dataclass(frozen=True)
class HopfModule:
    over: Bimonoid
    cell: Chain
    act: TwoCell      # h•a -> h
    coact: TwoCell    # h -> h∘a


def validate_hopf_module(hm):
    b = hm.over
    validate_module(RightModule(b, hm.cell, hm.act))
    validate_comodule(RightComodule(b, hm.cell, hm.coact))
    # the coaction must be a module morphism for the tensor action on h∘a
    h, a = hm.cell, b.cell
    ha = tensor_right_modules(RightModule(b, hm.cell, hm.act),
                              regular_right_module(b))
    lhs = vcompose2(hm.coact, hm.act)
    rhs = paste(bullet2(hm.coact, b.delta),
                interchange(h, a, a, a),
                circ2(hm.act, b.mu))
    _require(two_cells_equal(rhs, vcompose2(ha.act,
                                            bullet2(hm.coact, id2(a)))),
             "internal check: tensor action mismatch")
    _require(two_cells_equal(lhs, rhs),
             "Hopf compatibility between action and coaction")
    return True
