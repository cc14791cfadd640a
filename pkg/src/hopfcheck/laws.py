"""Exact diagram-law checks used by the selftest suites and acceptance.

Each function evaluates two composite routes of one diagram and compares
them exactly.  Hidden unit and associativity identifications of the
informal notation are inserted as canonical cells.
"""

from .core import (idc, id2, paste, whisker, tensor2, hcompose2, comparison,
                   rcomparison, seq_of, tensor_seq, unmasked, vcompose2,
                   invert2, invert2_strict, two_cells_equal, Witness, TwoCell)
from .duoidal import (unit_i, unit_j, circ, bullet, bullet2, circ2,
                      interchange, interchange_unit_j, interchange_unit_i,
                      counit_j, bullet_assoc, bullet_unit_left,
                      bullet_unit_right)
from .dualizer import (dualize, dualize2, pairing_right, pairing_left,
                       pairing_mixed, compose_iso, conv_iso,
                       compose_iso_general, unit_compose_iso, unit_conv_iso,
                       dual_comult_iso, dual_mult_iso, tensor_dual_iso,
                       roundtrip, _transport)
from .bimonoid import (Bimonoid, dual_bimonoid, conv_monoid_product,
                       comp_comonoid_product)
from .transform import (identity_x, identity_y, compose_xx, compose_yy,
                        inverse_pair_holds)


def _iw(gamma):
    return bullet2(id2(unit_i(gamma.ctx)), gamma)


def _wi(gamma):
    return bullet2(gamma, id2(unit_i(gamma.ctx)))


def check_pairing_left_compat(f, g, h, k):
    """First compatibility diagram of the two pairings (the left one)."""
    ctx = f.ctx
    i, j = unit_i(ctx), unit_j(ctx)
    hf = bullet(h, f)
    gk = bullet(g, k)
    a1 = interchange(dualize(f), g, dualize(h), k)
    a2 = circ2(conv_iso(h, f), id2(gk))
    a3 = pairing_left(hf, gk)
    a4 = _iw(circ2(id2(j), bullet_assoc(h, f, gk)))
    route_a = paste(a1, a2, a3, a4)

    fg = bullet(f, g)
    hk = circ(dualize(h), k)
    b1 = bullet2(pairing_left(f, g), id2(hk))
    b2 = bullet_assoc(i, circ(j, fg), hk)
    b3 = bullet2(id2(i), interchange(j, fg, dualize(h), k))
    b4 = bullet2(id2(i), circ2(bullet_unit_left(dualize(h)),
                               id2(bullet(fg, k))))
    b5 = bullet2(id2(i), pairing_left(h, bullet(fg, k)))
    w = circ(j, bullet(h, bullet(fg, k)))
    b6 = invert2_strict(bullet_assoc(i, i, w))
    b7 = bullet2(interchange_unit_i(ctx), id2(w))
    b8 = _iw(circ2(id2(j), bullet2(id2(h), bullet_assoc(f, g, k))))
    route_b = paste(b1, b2, b3, b4, b5, b6, b7, b8)
    return two_cells_equal(route_a, route_b)


def check_pairing_right_compat(f, g, h, k):
    """Second compatibility diagram of the two pairings (the right one)."""
    ctx = f.ctx
    i, j = unit_i(ctx), unit_j(ctx)
    fh = bullet(f, h)
    kg = bullet(k, g)
    a1 = interchange(f, dualize(g), h, dualize(k))
    a2 = circ2(id2(fh), conv_iso(k, g))
    a3 = pairing_right(fh, kg)
    a4 = _wi(circ2(bullet_assoc(f, h, kg), id2(j)))
    route_a = paste(a1, a2, a3, a4)

    hk = bullet(h, k)
    fgm = circ(f, dualize(g))
    b1 = bullet2(id2(fgm), pairing_right(h, k))
    b2 = invert2_strict(bullet_assoc(fgm, circ(hk, j), i))
    b3 = bullet2(interchange(f, dualize(g), hk, j), id2(i))
    b4 = bullet2(circ2(id2(bullet(f, hk)), bullet_unit_right(dualize(g))),
                 id2(i))
    b5 = bullet2(pairing_right(bullet(f, hk), g), id2(i))
    w = circ(bullet(bullet(f, hk), g), j)
    b6 = bullet_assoc(w, i, i)
    b7 = bullet2(id2(w), interchange_unit_i(ctx))
    b8 = _wi(circ2(paste(bullet_assoc(f, hk, g),
                         bullet2(id2(f), bullet_assoc(h, k, g))), id2(j)))
    route_b = paste(b1, b2, b3, b4, b5, b6, b7, b8)
    return two_cells_equal(route_a, route_b)


def check_mixed_pairing_left(f, g, h, k):
    """Compatibility of the mixed pairing with composition (two duals)."""
    ctx = f.ctx
    i, j = unit_i(ctx), unit_j(ctx)
    r1 = hcompose2(hcompose2(id2(f), pairing_right(g, h)), id2(dualize(k)))
    r2 = pairing_mixed(f, bullet(g, h), k)
    route_1 = paste(r1, r2)

    q1 = hcompose2(id2(circ(f, g)), compose_iso(k, h))
    q2 = pairing_right(circ(f, g), circ(k, h))
    q3 = bullet2(circ2(interchange(f, g, k, h), id2(j)), id2(i))
    route_2 = paste(q1, q2, q3)
    return two_cells_equal(route_1, route_2)


def check_mixed_pairing_counit(f, g, h):
    """Compatibility of the mixed pairing with the unit comultiplication."""
    ctx = f.ctx
    i, j = unit_i(ctx), unit_j(ctx)
    fh = bullet(f, h)
    r1 = paste(pairing_mixed(f, g, h),
               _wi(circ2(id2(circ(fh, g)), interchange_unit_j(ctx))))
    inner = hcompose2(id2(f),
                      _wi(circ2(id2(g), interchange_unit_j(ctx))))
    r2 = paste(hcompose2(inner, id2(dualize(h))),
               pairing_mixed(f, circ(g, j), h))
    return two_cells_equal(r1, r2)


def check_pairing_naturality(alpha_f, g):
    """Naturality of the right pairing in its first argument."""
    f, f2 = alpha_f.src, alpha_f.tgt
    ctx = f.ctx
    i, j = unit_i(ctx), unit_j(ctx)
    lhs = paste(hcompose2(alpha_f, id2(dualize(g))), pairing_right(f2, g))
    rhs = paste(pairing_right(f, g),
                _wi(circ2(bullet2(alpha_f, id2(g)), id2(j))))
    ok = two_cells_equal(lhs, rhs)
    lhs = paste(hcompose2(dualize2(alpha_f), id2(g)), pairing_left(f2, g))
    rhs = paste(pairing_left(f, g),
                _iw(circ2(id2(j), bullet2(alpha_f, id2(g)))))
    return ok and two_cells_equal(lhs, rhs)


def check_dualize_functor(alpha, beta):
    """Dualization preserves vertical composition and identities."""
    ok = two_cells_equal(dualize2(vcompose2(beta, alpha)),
                         vcompose2(dualize2(beta), dualize2(alpha)))
    return ok and two_cells_equal(dualize2(id2(alpha.src)),
                                  id2(dualize(alpha.src)))


def check_roundtrip_natural(alpha):
    """Naturality of the double-dual comparison."""
    from .dualizer import undualize2
    f, g = alpha.src, alpha.tgt
    lhs = vcompose2(alpha, roundtrip(f))
    rhs = vcompose2(roundtrip(g), undualize2(dualize2(alpha)))
    return two_cells_equal(lhs, rhs)


def check_hopf_duality(b):
    """The Hopf map of the dual bimonoid against the dualized co-Hopf map.

    Both routes run from ``m.(a- a-)`` to the dual of ``(1 a).m*.a``.
    """
    from .hopf import hopf_map, cohopf_map
    ctx = b.ctx
    a = b.cell
    one = idc(ctx, 1)
    am = dualize(a)
    au = unmasked(a)

    def flat_right(x):
        # dualize(x) ⊗ 1  ->  dualize(1 ⊗ x)
        xu = unmasked(x)
        inner = rcomparison(dualize(xu).tensor(one),
                            dualize(one.tensor(xu)),
                            seq_of(xu, "x"), seq_of(xu, "x"))
        return _transport(inner, dualize(x).tensor(one),
                          dualize(one.tensor(x)))

    # top route: identify the source with the dual of (a a).m*, then
    # dualize the co-Hopf map.
    t1 = whisker(am.tensor(am), invert2_strict(dual_comult_iso(ctx)),
                 idc(ctx, 1))
    t2 = whisker(idc(ctx, 2), tensor_dual_iso(a, a), dualize(ctx.mstar))
    t3 = compose_iso_general(ctx.mstar, a.tensor(a))
    t4 = dualize2(cohopf_map(b))
    top = paste(t1, t2, t3, t4)

    # bottom route: the Hopf map of the dual bimonoid, then identify the
    # target with the dual of (1 a).m*.a.
    d = hopf_map(dual_bimonoid(b))
    b1 = whisker(am.tensor(one), invert2_strict(dual_comult_iso(ctx)), am)
    b2 = whisker(idc(ctx, 2), flat_right(a), dualize(ctx.mstar).then(am))
    b3 = whisker(idc(ctx, 2),
                 compose_iso_general(ctx.mstar, one.tensor(a)), am)
    b4 = compose_iso_general(a, ctx.mstar.then(one.tensor(a)))
    bottom = paste(d, b1, b2, b3, b4)
    return two_cells_equal(top, bottom)


def check_inverse_pair_conv(b, c_bim, d_bim, sig, sig_p, tau, tau_p):
    """The convolution-product inverse pair survives tensoring.

    Given inverse pairs (sig, sig') over the comonoid of ``c_bim`` and
    (tau, tau') over ``d_bim``, both against the monoid of ``b``, checks
    that the displayed composites form an inverse pair over the tensor
    comonoid.
    """
    cb = (comp_comonoid_product(c_bim.comonoid(), d_bim.comonoid()),
          b.monoid())
    big_sig = paste(bullet2(sig, tau), b.mu)
    big_sig_p = paste(bullet2(sig_p, tau_p), conv_iso(b.cell, b.cell),
                      dualize2(b.mu))
    return inverse_pair_holds(cb, big_sig, big_sig_p)


def check_inverse_pair_comp(a_bim, b_bim, c_bim, sig, sig_p, tau, tau_p):
    """The composition-product inverse pair survives composing."""
    cb = (c_bim.comonoid(),
          conv_monoid_product(a_bim.monoid(), b_bim.monoid()))
    big_sig = paste(c_bim.delta, hcompose2(sig, tau))
    big_sig_p = paste(c_bim.delta, hcompose2(tau_p, sig_p),
                      compose_iso(a_bim.cell, b_bim.cell))
    return inverse_pair_holds(cb, big_sig, big_sig_p)


def check_galois_naturality(b, md, md2, phi_mod, x):
    """Galois maps are natural in module morphisms."""
    from .hopf import galois_map
    lhs = paste(bullet2(hcompose2(phi_mod, id2(x)), id2(b.cell)),
                galois_map(md2, x))
    rhs = paste(galois_map(md, x),
                hcompose2(phi_mod, id2(bullet(x, b.cell))))
    return two_cells_equal(lhs, rhs)


def check_cogalois_naturality(b, cm, cm2, phi_com, x):
    """Co-Galois maps are natural in comodule morphisms."""
    from .hopf import cogalois_map
    lhs = paste(bullet2(phi_com, id2(circ(x, b.cell))), cogalois_map(cm2, x))
    rhs = paste(cogalois_map(cm, x),
                hcompose2(bullet2(phi_com, id2(x)), id2(b.cell)))
    return two_cells_equal(lhs, rhs)
