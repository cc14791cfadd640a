"""The two interacting monoidal structures on endo-1-cells of M.

``circ(f, g)`` is composition (f applied first), with unit the identity
1-cell; ``bullet(f, g)`` is convolution ``m.(f g).m*`` with unit
``j = u.u*``.  The interchange 2-cell and its three unit companions make
the hom-category duoidal.  Whisker helpers lift 2-cells through either
product.
"""

from .core import (Chain, idc, id2, paste, whisker, tensor2, hcompose2,
                   comparison, rcomparison, tensor_seq, seq_of, vcompose2,
                   two_cells_equal)


def unit_i(ctx):
    """Unit of the composition product: the identity 1-cell."""
    return idc(ctx, 1)


def unit_j(ctx):
    """Unit of the convolution product: ``u.u*``."""
    return ctx.ustar.then(ctx.u)


def circ(f, g):
    """Composition product (f first, then g)."""
    return f.then(g)


def bullet(f, g):
    """Convolution product ``m.(f g).m*``."""
    ctx = f.ctx
    return ctx.mstar.then(f.tensor(g)).then(ctx.m)


def duoidal_products(f, g):
    """Both products at once, keyed for the public surface."""
    return {"circ": circ(f, g), "bullet": bullet(f, g)}


def circ2(sig, tau):
    """Composition product of 2-cells."""
    return hcompose2(sig, tau)


def bullet2(sig, tau):
    """Convolution product of 2-cells."""
    ctx = sig.ctx
    return whisker(ctx.mstar, tensor2(sig, tau), ctx.m)


def bullet2_left(sig, g):
    """``sig • g`` with an identity on the right factor."""
    return bullet2(sig, id2(g))


def bullet2_right(f, tau):
    return bullet2(id2(f), tau)


def interchange(w, x, y, z):
    """The duoidal interchange ``(w∘x)•(y∘z) -> (w•y)∘(x•z)``.

    Built by inserting the unit of the multiplication adjunction between
    the two tensor blocks, after aligning the convolution layering.
    """
    ctx = w.ctx
    src = bullet(circ(w, x), circ(y, z))
    aligned = ctx.mstar.then(w.tensor(y)).then(x.tensor(z)).then(ctx.m)
    steps = []
    if src != aligned:
        src_seq = tensor_seq(circ(w, x), circ(y, z),
                             seq_of(w, "w") + seq_of(x, "x"),
                             seq_of(y, "y") + seq_of(z, "z"))
        tgt_seq = tensor_seq(w, y, seq_of(w, "w"), seq_of(y, "y")) + \
            tensor_seq(x, z, seq_of(x, "x"), seq_of(z, "z"))
        steps.append(rcomparison(src, aligned, src_seq, tgt_seq))
    steps.append(whisker(ctx.mstar.then(w.tensor(y)), ctx.eta_m,
                         x.tensor(z).then(ctx.m)))
    out = paste(*steps)
    assert out.tgt == circ(bullet(w, y), bullet(x, z))
    return out


def interchange_unit_j(ctx):
    """``j -> j∘j``: comultiplication of the unit comonad."""
    return whisker(ctx.ustar, ctx.eta_u, ctx.u)


def interchange_unit_i(ctx):
    """``i•i -> i``: the counit of the multiplication adjunction."""
    return ctx.eps_m


def counit_j(ctx):
    """``j -> i``: the counit of the unit adjunction."""
    return ctx.eps_u


def xi_cells(w, x, y, z):
    """Spec-facing bundle of the interchange and its unit cells."""
    ctx = w.ctx
    return {
        "xi": interchange(w, x, y, z),
        "xi0": interchange_unit_j(ctx),
        "xiSub0": interchange_unit_i(ctx),
        "xi00": counit_j(ctx),
    }


# -- monoidale constraint cells and their mate pastings ------------------

def alpha(ctx):
    """Associativity constraint ``m.(m 1) -> m.(1 m)``."""
    one = idc(ctx, 1)
    return comparison(ctx.m.tensor(one).then(ctx.m),
                      one.tensor(ctx.m).then(ctx.m))


def lam(ctx):
    """Left unit constraint ``m.(u 1) -> 1``."""
    one = idc(ctx, 1)
    return comparison(ctx.u.tensor(one).then(ctx.m), one)


def rho(ctx):
    """Right unit constraint ``m.(1 u) -> 1``."""
    one = idc(ctx, 1)
    return comparison(one.tensor(ctx.u).then(ctx.m), one)


def alpha_star(ctx):
    """Coassociativity constraint ``(m* 1).m* -> (1 m*).m*``."""
    one = idc(ctx, 1)
    return comparison(ctx.mstar.then(ctx.mstar.tensor(one)),
                      ctx.mstar.then(one.tensor(ctx.mstar)))


def pi_cell(ctx):
    """Frobenius comparison ``m1.1m* -> m*.m`` (canonical form)."""
    one = idc(ctx, 1)
    return comparison(one.tensor(ctx.mstar).then(ctx.m.tensor(one)),
                      ctx.m.then(ctx.mstar))


def pi_prime_cell(ctx):
    """Frobenius comparison ``1m.m*1 -> m*.m`` (canonical form)."""
    one = idc(ctx, 1)
    return comparison(ctx.mstar.tensor(one).then(one.tensor(ctx.m)),
                      ctx.m.then(ctx.mstar))


def pi_mate_pasting(ctx):
    """``pi`` rebuilt as the mate of the associativity constraint."""
    one = idc(ctx, 1)
    src = one.tensor(ctx.mstar).then(ctx.m.tensor(one))
    s1 = whisker(src, ctx.eta_m, idc(ctx, 2))
    s2 = whisker(one.tensor(ctx.mstar), alpha(ctx), ctx.mstar)
    mid = one.tensor(ctx.mstar).then(one.tensor(ctx.m))
    s3 = whisker(idc(ctx, 2), tensor2(id2(one), ctx.eps_m),
                 ctx.m.then(ctx.mstar))
    assert s3.src == mid.then(ctx.m).then(ctx.mstar)
    return paste(s1, s2, s3)


def pi_prime_mate_pasting(ctx):
    """``pi'`` rebuilt as the mate of the inverse constraint."""
    from .core import invert2_strict
    one = idc(ctx, 1)
    src = ctx.mstar.tensor(one).then(one.tensor(ctx.m))
    s1 = whisker(src, ctx.eta_m, idc(ctx, 2))
    s2 = whisker(ctx.mstar.tensor(one), invert2_strict(alpha(ctx)), ctx.mstar)
    s3 = whisker(idc(ctx, 2), tensor2(ctx.eps_m, id2(one)),
                 ctx.m.then(ctx.mstar))
    return paste(s1, s2, s3)


# -- law checks (used by tests and the selftest suites) -------------------

def check_triangle_identities(ctx):
    """Both triangle identities for m -| m* and u -| u*."""
    one, two, zero = idc(ctx, 1), idc(ctx, 2), idc(ctx, 0)
    m, ms, u, us = ctx.m, ctx.mstar, ctx.u, ctx.ustar
    ok = two_cells_equal(
        paste(whisker(two, ctx.eta_m, m), whisker(m, ctx.eps_m, one)), id2(m))
    ok &= two_cells_equal(
        paste(whisker(ms, ctx.eta_m, two), whisker(one, ctx.eps_m, ms)), id2(ms))
    ok &= two_cells_equal(
        paste(whisker(zero, ctx.eta_u, u), whisker(u, ctx.eps_u, one)), id2(u))
    ok &= two_cells_equal(
        paste(whisker(us, ctx.eta_u, zero), whisker(one, ctx.eps_u, us)), id2(us))
    return ok


def check_frobenius(ctx):
    """pi and pi' are invertible and agree with their mate pastings."""
    from .core import invert2, Witness
    pi, pip = pi_cell(ctx), pi_prime_cell(ctx)
    if isinstance(invert2(pi), Witness) or isinstance(invert2(pip), Witness):
        return False
    return two_cells_equal(pi, pi_mate_pasting(ctx)) and \
        two_cells_equal(pip, pi_prime_mate_pasting(ctx))


def bullet_assoc(f, g, h):
    """The convolution associator ``(f•g)•h -> f•(g•h)``.

    Relayer, then conjugate the constraint cells of the monoidale through
    the middle tensor block.
    """
    ctx = f.ctx
    one = idc(ctx, 1)
    sf, sg, sh = seq_of(f, "f"), seq_of(g, "g"), seq_of(h, "h")
    fgh = f.tensor(g).tensor(h)
    fgh_seq = tensor_seq(f.tensor(g), h, tensor_seq(f, g, sf, sg), sh)
    pre = ctx.mstar.then(ctx.mstar.tensor(one))
    s1 = rcomparison(bullet(bullet(f, g), h),
                     pre.then(fgh).then(ctx.m.tensor(one)).then(ctx.m),
                     tensor_seq(bullet(f, g), h,
                                tensor_seq(f, g, sf, sg), sh),
                     fgh_seq)
    s2 = whisker(pre.then(fgh), alpha(ctx), one)
    post = fgh.then(one.tensor(ctx.m)).then(ctx.m)
    s3 = whisker(one, alpha_star(ctx), post)
    s4 = rcomparison(ctx.mstar.then(one.tensor(ctx.mstar)).then(post),
                     bullet(f, bullet(g, h)),
                     fgh_seq,
                     tensor_seq(f, bullet(g, h), sf,
                                tensor_seq(g, h, sg, sh)))
    return paste(s1, s2, s3, s4)


def bullet_unit_left(f):
    """The convolution left unitor ``j•f -> f``."""
    ctx = f.ctx
    one = idc(ctx, 1)
    pre = ctx.mstar.then(ctx.ustar.tensor(one))
    s1 = comparison(bullet(unit_j(ctx), f),
                    pre.then(f).then(ctx.u.tensor(one)).then(ctx.m))
    s2 = whisker(pre.then(f), lam(ctx), one)
    s3 = whisker(one, comparison(pre, one), f)
    return paste(s1, s2, s3)


def bullet_unit_right(f):
    """The convolution right unitor ``f•j -> f``."""
    ctx = f.ctx
    one = idc(ctx, 1)
    pre = ctx.mstar.then(one.tensor(ctx.ustar))
    s1 = comparison(bullet(f, unit_j(ctx)),
                    pre.then(f).then(one.tensor(ctx.u)).then(ctx.m))
    s2 = whisker(pre.then(f), rho(ctx), one)
    s3 = whisker(one, comparison(pre, one), f)
    return paste(s1, s2, s3)


def check_interchange_assoc(u_, v, w, x, y, z):
    """Associativity coherence of the interchange cell, both routes."""
    ctx = u_.ctx
    lhs = paste(
        bullet2_left(interchange(u_, v, w, x), circ(y, z)),
        interchange(bullet(u_, w), bullet(v, x), y, z),
        circ2(bullet_assoc(u_, w, y), bullet_assoc(v, x, z)),
    )
    rhs = paste(
        bullet_assoc(circ(u_, v), circ(w, x), circ(y, z)),
        bullet2_right(circ(u_, v), interchange(w, x, y, z)),
        interchange(u_, v, bullet(w, y), bullet(x, z)),
    )
    return two_cells_equal(lhs, rhs)


def check_interchange_units(x, y):
    """Unit coherence of the interchange against j, and counits against i."""
    ctx = x.ctx
    j = unit_j(ctx)
    i = unit_i(ctx)
    # j-side: j•(x∘y) -> (j∘j)•(x∘y) -> (j•x)∘(j•y) -> x∘y equals the unitor.
    lhs = paste(
        bullet2_left(interchange_unit_j(ctx), circ(x, y)),
        interchange(j, j, x, y),
        circ2(bullet_unit_left(x), bullet_unit_left(y)),
    )
    ok = two_cells_equal(lhs, bullet_unit_left(circ(x, y)))
    rhs = paste(
        bullet2_right(circ(x, y), interchange_unit_j(ctx)),
        interchange(x, y, j, j),
        circ2(bullet_unit_right(x), bullet_unit_right(y)),
    )
    ok &= two_cells_equal(rhs, bullet_unit_right(circ(x, y)))
    # i-side: (i∘x)•(i∘y) = x•y -> (i•i)∘(x•y) -> x•y is the identity.
    lhs = paste(interchange(i, x, i, y),
                circ2(interchange_unit_i(ctx), id2(bullet(x, y))))
    ok &= two_cells_equal(lhs, id2(bullet(x, y)))
    rhs = paste(interchange(x, i, y, i),
                circ2(id2(bullet(x, y)), interchange_unit_i(ctx)))
    ok &= two_cells_equal(rhs, id2(bullet(x, y)))
    return ok
