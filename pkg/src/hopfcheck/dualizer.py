"""Self-duality of the base object and its action on endo-1-cells.

``dualize(f)`` is the mate of ``f`` under the evaluation/coevaluation
pair built from the multiplication and unit adjoints; for spans it is
the leg swap (the opposite category when ``f`` carries one), for graded
cells the transpose grading (the opposite bimodule).  The module also
builds the canonical isos relating dualization to both products, and the
three pairing cells used by the transform machinery.
"""

from .core import (TwoCell, idc, id2, paste, whisker, tensor2, comparison,
                   rcomparison, tensor_seq, seq_of, owner_perm, unmasked,
                   invert2_strict)
from .duoidal import (unit_i, unit_j, circ, bullet, alpha, alpha_star,
                      lam, rho)


def _coev(ctx, p):
    """Coevaluation ``I -> M^{2p}`` of the self-duality, iterated."""
    if p == 0:
        return idc(ctx, 0)
    inner = _coev(ctx, p - 1)
    base = ctx.u.then(ctx.mstar)
    return base.then(idc(ctx, 1).tensor(inner).tensor(idc(ctx, 1)))


def _ev(ctx, q):
    """Evaluation ``M^{2q} -> I``, matching :func:`_coev`."""
    if q == 0:
        return idc(ctx, 0)
    inner = _ev(ctx, q - 1)
    base = ctx.m.then(ctx.ustar)
    return idc(ctx, 1).tensor(inner).tensor(idc(ctx, 1)).then(base)


def dualize(f):
    """The mate ``M^q -> M^p`` of a 1-cell ``f: M^p -> M^q``."""
    ctx = f.ctx
    p, q = f.dom, f.cod
    step1 = idc(ctx, q).tensor(_coev(ctx, p))
    step2 = idc(ctx, q).tensor(f).tensor(idc(ctx, p))
    step3 = _ev(ctx, q).tensor(idc(ctx, p))
    return step1.then(step2).then(step3)


def undualize(f):
    """The other mate; inverse to :func:`dualize` up to :func:`roundtrip`."""
    ctx = f.ctx
    p, q = f.dom, f.cod
    step1 = _coev(ctx, p).tensor(idc(ctx, q))
    step2 = idc(ctx, p).tensor(f).tensor(idc(ctx, q))
    step3 = idc(ctx, p).tensor(_ev(ctx, q))
    return step1.then(step2).then(step3)


def dualize2(gamma):
    """Dualization of a 2-cell (covariantly)."""
    ctx = gamma.ctx
    f = gamma.src
    p, q = f.dom, f.cod
    before = idc(ctx, q).tensor(_coev(ctx, p))
    mid = tensor2(tensor2(id2(idc(ctx, q)), gamma), id2(idc(ctx, p)))
    after = _ev(ctx, q).tensor(idc(ctx, p))
    return whisker(before, mid, after)


def _transport(inner, src, tgt):
    return TwoCell(src, tgt, inner.data)


def undualize2(gamma):
    """The other mate on 2-cells."""
    ctx = gamma.ctx
    h = gamma.src
    p, q = h.dom, h.cod
    before = _coev(ctx, p).tensor(idc(ctx, q))
    mid = tensor2(tensor2(id2(idc(ctx, p)), gamma), id2(idc(ctx, q)))
    after = idc(ctx, p).tensor(_ev(ctx, q))
    return whisker(before, mid, after)


def roundtrip(f):
    """Canonical invertible 2-cell ``undualize(dualize(f)) -> f``."""
    fu = unmasked(f)
    inner = comparison(undualize(dualize(fu)), fu)
    return _transport(inner, undualize(dualize(f)), f)


def compose_iso(f, g):
    """``dualize(g) ∘ dualize(f) -> dualize(f ∘ g)`` (both endo on M)."""
    fu, gu = unmasked(f), unmasked(g)
    inner = rcomparison(circ(dualize(gu), dualize(fu)), dualize(circ(fu, gu)),
                        seq_of(gu, "g") + seq_of(fu, "f"),
                        seq_of(fu, "f") + seq_of(gu, "g"))
    return _transport(inner, circ(dualize(g), dualize(f)),
                      dualize(circ(f, g)))


def compose_iso_general(x, y):
    """``dualize(y) ∘ dualize(x) -> dualize(x ∘ y)`` for any composable
    pair."""
    xu, yu = unmasked(x), unmasked(y)
    inner = rcomparison(dualize(yu).then(dualize(xu)),
                        dualize(xu.then(yu)),
                        seq_of(yu, "y") + seq_of(xu, "x"),
                        seq_of(xu, "x") + seq_of(yu, "y"))
    return _transport(inner, dualize(y).then(dualize(x)),
                      dualize(x.then(y)))


def dual_mult_iso(ctx):
    """``dualize(m) -> m*``, companion to :func:`dual_comult_iso`."""
    return comparison(dualize(ctx.m), ctx.mstar)


def conv_iso(f, g):
    """``dualize(g) • dualize(f) -> dualize(f • g)``."""
    from .errors import CoherenceError
    src = bullet(dualize(g), dualize(f))
    tgt = dualize(bullet(f, g))
    try:
        fu, gu = unmasked(f), unmasked(g)
        inner = rcomparison(bullet(dualize(gu), dualize(fu)),
                            dualize(bullet(fu, gu)),
                            tensor_seq(dualize(gu), dualize(fu),
                                       seq_of(gu, "g"), seq_of(fu, "f")),
                            tensor_seq(fu, gu,
                                       seq_of(fu, "f"), seq_of(gu, "g")))
        return _transport(inner, src, tgt)
    except CoherenceError:
        pass
    # decomposition route: rewrite the convolution sandwich through the
    # dualized multiplication and comultiplication, then fold with the
    # composition isos.
    ctx = f.ctx
    mid = dualize(g).tensor(dualize(f))
    s1 = whisker(idc(ctx, 1), invert2_strict(dual_mult_iso(ctx)),
                 mid.then(ctx.m))
    s2 = whisker(dualize(ctx.m).then(mid),
                 invert2_strict(dual_comult_iso(ctx)), idc(ctx, 1))
    s3 = whisker(dualize(ctx.m), tensor_dual_iso(g, f), dualize(ctx.mstar))
    fg = f.tensor(g)
    s4 = whisker(idc(ctx, 1), compose_iso_general(fg, ctx.m),
                 dualize(ctx.mstar))
    s5 = compose_iso_general(ctx.mstar, fg.then(ctx.m))
    return paste(s1, s2, s3, s4, s5)


def unit_compose_iso(ctx):
    """``i -> dualize(i)``."""
    return comparison(unit_i(ctx), dualize(unit_i(ctx)))


def unit_conv_iso(ctx):
    """``j -> dualize(j)`` (boundary-determined, no content to pin)."""
    return comparison(unit_j(ctx), dualize(unit_j(ctx)))


def dual_comult_iso(ctx):
    """``dualize(m*) -> m``: the identification of the dualized comonoidale
    with the monoidale, kept explicit."""
    return comparison(dualize(ctx.mstar), ctx.m)


def tensor_dual_iso(f, g):
    """``dualize(f) ⊗ dualize(g) -> dualize(g ⊗ f)`` with the factor swap."""
    fu, gu = unmasked(f), unmasked(g)
    inner = rcomparison(dualize(fu).tensor(dualize(gu)),
                        dualize(gu.tensor(fu)),
                        tensor_seq(dualize(fu), dualize(gu),
                                   seq_of(fu, "f"), seq_of(gu, "g")),
                        tensor_seq(gu, fu, seq_of(gu, "g"), seq_of(fu, "f")))
    return _transport(inner, dualize(f).tensor(dualize(g)),
                      dualize(g.tensor(f)))


# -- pairing cells ---------------------------------------------------------

def pairing_right(f, g):
    """``f ∘ dualize(g) -> ((f•g) ∘ j) • i``.

    Unit insertion at the end, one unit of the multiplication adjunction
    in front, then constraint relayering.  Computed against unmasked
    argument clones so that free wires inside structural arguments stay
    pinned; the payload transports verbatim.
    """
    fu, gu = unmasked(f), unmasked(g)
    if (fu, gu) != (f, g):
        inner = pairing_right(fu, gu)
        return _transport(inner, circ(f, dualize(g)),
                          bullet(circ(bullet(f, g), unit_j(f.ctx)),
                                 unit_i(f.ctx)))
    ctx = f.ctx
    one = idc(ctx, 1)
    two = idc(ctx, 2)
    post = f.tensor(two).then(one.tensor(g).tensor(one)) \
        .then(ctx.m.tensor(one)).then(ctx.ustar.tensor(one)) \
        .then(ctx.u.tensor(one)).then(ctx.m)
    x1 = f.then(dualize(g)).then(ctx.u.tensor(one)).then(ctx.m)
    x2 = one.tensor(ctx.u).then(one.tensor(ctx.mstar)).then(post)
    x3 = one.tensor(ctx.u).then(ctx.m).then(ctx.mstar) \
        .then(one.tensor(ctx.mstar)).then(post)
    x4 = ctx.mstar.then(one.tensor(ctx.mstar)).then(post)
    x5 = ctx.mstar.then(ctx.mstar.tensor(one)).then(post)
    tgt = bullet(circ(bullet(f, g), unit_j(ctx)), unit_i(ctx))
    sfg = seq_of(f, "f") + seq_of(g, "g")
    sA = whisker(f.then(dualize(g)), invert2_strict(lam(ctx)), one)
    sB = rcomparison(x1, x2, sfg, sfg)
    sC = whisker(one.tensor(ctx.u), ctx.eta_m,
                 one.tensor(ctx.mstar).then(post))
    sD = whisker(idc(ctx, 1), rho(ctx),
                 ctx.mstar.then(one.tensor(ctx.mstar)).then(post))
    sE = whisker(one, invert2_strict(alpha_star(ctx)), post)
    sF = rcomparison(x5, tgt, sfg,
                     tensor_seq(f, g, seq_of(f, "f"), seq_of(g, "g")))
    assert sC.src == x2 and sC.tgt == x3 and sD.src == x3 and sD.tgt == x4
    return paste(sA, sB, sC, sD, sE, sF)


def pairing_left(f, g):
    """``dualize(f) ∘ g -> i • (j ∘ (f•g))``: the mirror construction."""
    fu, gu = unmasked(f), unmasked(g)
    if (fu, gu) != (f, g):
        inner = pairing_left(fu, gu)
        return _transport(inner, circ(dualize(f), g),
                          bullet(unit_i(f.ctx),
                                 circ(unit_j(f.ctx), bullet(f, g))))
    ctx = f.ctx
    one = idc(ctx, 1)
    two = idc(ctx, 2)
    pre = ctx.mstar.then(one.tensor(ctx.ustar)).then(one.tensor(ctx.u)) \
        .then(one.tensor(ctx.mstar)).then(one.tensor(f).tensor(one)) \
        .then(two.tensor(g))
    x2 = pre.then(ctx.m.tensor(one)).then(ctx.ustar.tensor(one))
    x3 = pre.then(ctx.m.tensor(one)).then(ctx.m).then(ctx.mstar) \
        .then(ctx.ustar.tensor(one))
    x4 = pre.then(ctx.m.tensor(one)).then(ctx.m)
    x5 = pre.then(one.tensor(ctx.m)).then(ctx.m)
    tgt = bullet(unit_i(ctx), circ(unit_j(ctx), bullet(f, g)))
    cancel = comparison(ctx.mstar.then(one.tensor(ctx.ustar)), one)
    sfg = seq_of(f, "f") + seq_of(g, "g")
    sA = whisker(one, invert2_strict(cancel), dualize(f).then(g))
    sB = rcomparison(ctx.mstar.then(one.tensor(ctx.ustar))
                     .then(dualize(f)).then(g), x2, sfg, sfg)
    sC = whisker(pre.then(ctx.m.tensor(one)), ctx.eta_m,
                 ctx.ustar.tensor(one))
    sD = whisker(pre.then(ctx.m.tensor(one)).then(ctx.m),
                 comparison(ctx.mstar.then(ctx.ustar.tensor(one)), one),
                 idc(ctx, 1))
    sE = whisker(pre, alpha(ctx), one)
    sF = rcomparison(x5, tgt, sfg,
                     tensor_seq(f, g, seq_of(f, "f"), seq_of(g, "g")))
    assert sC.src == x2 and sC.tgt == x3 and sD.src == x3 and sD.tgt == x4
    return paste(sA, sB, sC, sD, sE, sF)


def pairing_mixed(f, g, h):
    """``f ∘ ((g∘j)•i) ∘ dualize(h) -> ((f•h) ∘ g ∘ j) • i``.

    The fresh wire of the dual block is slid left and cancelled against
    the inserted unit pair by the counit of the unit adjunction; the rest
    is constraint relayering.
    """
    fu, gu, hu = unmasked(f), unmasked(g), unmasked(h)
    if (fu, gu, hu) != (f, g, h):
        inner = pairing_mixed(fu, gu, hu)
        ctx0 = f.ctx
        src = circ(circ(f, bullet(circ(g, unit_j(ctx0)), unit_i(ctx0))),
                   dualize(h))
        tgt = bullet(circ(circ(bullet(f, h), g), unit_j(ctx0)),
                     unit_i(ctx0))
        return _transport(inner, src, tgt)
    ctx = f.ctx
    one = idc(ctx, 1)
    two = idc(ctx, 2)
    gji = bullet(circ(g, unit_j(ctx)), unit_i(ctx))
    red = ctx.mstar.then(g.tensor(one)).then(ctx.ustar.tensor(one))
    post = f.tensor(one).then(ctx.mstar.tensor(one)) \
        .then(g.tensor(one).tensor(one)).then(ctx.ustar.tensor(two)) \
        .then(one.tensor(ctx.mstar)).then(one.tensor(h).tensor(one)) \
        .then(ctx.m.tensor(one)).then(ctx.ustar.tensor(one))
    x2 = ctx.mstar.then(one.tensor(ctx.ustar)).then(f.then(red)
                                                    .then(dualize(h)))
    x3 = ctx.mstar.then(one.tensor(ctx.ustar)).then(one.tensor(ctx.u)) \
        .then(post)
    x4 = ctx.mstar.then(post)
    yred = ctx.mstar.then(ctx.mstar.tensor(one)) \
        .then(f.tensor(h).tensor(one)).then(ctx.m.tensor(one)) \
        .then(g.tensor(one)).then(ctx.ustar.tensor(one))
    tgt = bullet(circ(circ(bullet(f, h), g), unit_j(ctx)), unit_i(ctx))
    cancel = comparison(ctx.mstar.then(one.tensor(ctx.ustar)), one)
    sfgh = seq_of(f, "f") + seq_of(g, "g") + seq_of(h, "h")
    yred_seq = tensor_seq(f, h, seq_of(f, "f"), seq_of(h, "h")) + \
        seq_of(g, "g")
    sA = whisker(f.then(red), lam(ctx), dualize(h))
    sB = whisker(idc(ctx, 1), invert2_strict(cancel),
                 f.then(red).then(dualize(h)))
    sC = rcomparison(x2, x3, sfgh, sfgh)
    sD = whisker(ctx.mstar, tensor2(id2(one), ctx.eps_u), post)
    sE = rcomparison(x4, yred, sfgh, yred_seq)
    sF = whisker(yred, invert2_strict(lam(ctx)), idc(ctx, 1))
    sG = rcomparison(sF.tgt, tgt, yred_seq, yred_seq)
    assert sA.src == f.then(gji).then(dualize(h))
    return paste(sA, sB, sC, sD, sE, sF, sG)
