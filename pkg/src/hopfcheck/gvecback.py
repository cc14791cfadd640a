"""Graded rational vector space backend.

A cell ``M^p -> M^q`` is a finite-dimensional vector space over the
rationals graded by pairs (output multi-index, input multi-index) over a
base alphabet; concretely a bimodule over a product of copies of Q.
Composition contracts the shared multi-index (tensoring over the base),
tensor concatenates gradings.  Basis vectors carry flat labels exactly
like the span backend, so both operations are strictly associative.

Two monoidale presets are provided: the commutative base (alphabet of
size n, multiplication supported on equal indices) and the weak base
(alphabet of index pairs, separable-Frobenius multiplication).
2-cells are grade-preserving matrices with exact rational entries.
"""

from fractions import Fraction
from itertools import product

from . import linalg
from .core import (Chain, FrobMonoidale, TwoCell, Witness, ID_NAME,
                   _zip_plan, match_groups, shared_structural_names)
from .errors import BackendError, CoherenceError, ShapeError

ZERO = Fraction(0)
ONE = Fraction(1)


class GradedCell:
    """One layer: a multigraded rational space with labelled bases."""

    __slots__ = ("dom", "cod", "slots", "mask", "grades", "tag",
                 "_bygrade", "_gradeof", "_posin", "_hash")

    def __init__(self, dom, cod, slots, mask, grades, tag):
        self.dom = dom
        self.cod = cod
        self.slots = slots
        self.mask = mask
        self.grades = grades     # tuple of ((codg, domg), labels), sorted
        self.tag = tag
        self._bygrade = None
        self._gradeof = None
        self._posin = None
        self._hash = None

    @property
    def bygrade(self):
        if self._bygrade is None:
            self._bygrade = dict(self.grades)
        return self._bygrade

    @property
    def gradeof(self):
        if self._gradeof is None:
            self._gradeof = {lab: g for g, labs in self.grades for lab in labs}
        return self._gradeof

    @property
    def posin(self):
        if self._posin is None:
            self._posin = {lab: i for _, labs in self.grades
                           for i, lab in enumerate(labs)}
        return self._posin

    def dim(self, grade):
        return len(self.bygrade.get(grade, ()))

    @property
    def total_dim(self):
        return sum(len(labs) for _, labs in self.grades)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedCell):
            return NotImplemented
        return (self.dom, self.cod, self.mask, self.grades) == \
               (other.dom, other.cod, other.mask, other.grades)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.mask, self.grades))
        return self._hash

    def __repr__(self):
        return "<graded %s: M^%d->M^%d, dim %d>" % (
            self.tag, self.dom, self.cod, self.total_dim)


def _freeze_grades(bucket):
    return tuple(sorted((g, tuple(sorted(labs))) for g, labs in bucket.items()
                 if labs))


class Blocks:
    """Frozen per-grade matrix family (payload of a graded 2-cell)."""

    __slots__ = ("items", "_dict", "_hash")

    def __init__(self, items):
        self.items = tuple(sorted(items))
        self._dict = None
        self._hash = None

    @property
    def d(self):
        if self._dict is None:
            self._dict = dict(self.items)
        return self._dict

    def __eq__(self, other):
        if not isinstance(other, Blocks):
            return NotImplemented
        return self.items == other.items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.items)
        return self._hash


def _common_grades(stot, ttot):
    return sorted(set(stot.bygrade) & set(ttot.bygrade))


class GradedBackend:
    """Concrete cell and 2-cell operations over a fixed grading alphabet."""

    kind = "gvec"

    def __init__(self, alphabet):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise BackendError("graded backend needs a nonempty alphabet")
        self.alphabet = alphabet
        self._id_cells = {}

    # -- cells ---------------------------------------------------------

    def atomic_cell(self, name, dims, dom, cod, structural=False):
        """Cell from a mapping (codgrade, domgrade) -> dimension."""
        bucket = {}
        sigma = set(self.alphabet)
        for (cg, dg), d in sorted(dims.items()):
            cg, dg = tuple(cg), tuple(dg)
            if len(cg) != cod or len(dg) != dom:
                raise BackendError("grade %r has wrong arity for %r"
                                   % ((cg, dg), name))
            if any(s not in sigma for s in cg + dg):
                raise BackendError("grade %r of %r uses symbols outside the "
                                   "base alphabet" % ((cg, dg), name))
            if d:
                bucket[(cg, dg)] = [((name, cg, dg, k),) for k in range(d)]
        return GradedCell(dom, cod, 1, (not structural,),
                          _freeze_grades(bucket), name)

    def id_label(self, g):
        """Identity-cell label at a grade tuple (one slot per wire)."""
        return tuple((ID_NAME, (s,), (s,), 0) for s in g)

    def id_cell(self, p):
        cell = self._id_cells.get(p)
        if cell is None:
            if p == 0:
                grades = ((((), ()), ((),)),)
                cell = GradedCell(0, 0, 0, (), grades, "1^0")
            else:
                bucket = {}
                for g in product(self.alphabet, repeat=p):
                    bucket[(g, g)] = [self.id_label(g)]
                cell = GradedCell(p, p, p, (False,) * p,
                                  _freeze_grades(bucket), "1^%d" % p)
            self._id_cells[p] = cell
        return cell

    def unmask_cell(self, cell):
        if all(cell.mask):
            return cell
        return GradedCell(cell.dom, cell.cod, cell.slots,
                          (True,) * cell.slots, cell.grades, cell.tag)

    def compose_cells(self, a, b):
        bydom = {}
        for (cg, dg), labs in b.grades:
            bydom.setdefault(dg, []).append((cg, labs))
        bucket = {}
        for (mid, dg), labs in a.grades:
            for cg, labs2 in bydom.get(mid, ()):
                out = bucket.setdefault((cg, dg), [])
                out.extend(l1 + l2 for l1 in labs for l2 in labs2)
        return GradedCell(a.dom, b.cod, a.slots + b.slots, a.mask + b.mask,
                          _freeze_grades(bucket), "(%s;%s)" % (a.tag, b.tag))

    def tensor_cells(self, a, b):
        bucket = {}
        for (cg, dg), labs in a.grades:
            for (cg2, dg2), labs2 in b.grades:
                bucket[(cg + cg2, dg + dg2)] = \
                    [l1 + l2 for l1 in labs for l2 in labs2]
        return GradedCell(a.dom + b.dom, a.cod + b.cod, a.slots + b.slots,
                          a.mask + b.mask, _freeze_grades(bucket),
                          "(%s*%s)" % (a.tag, b.tag))

    # -- 2-cell payloads -------------------------------------------------
    # Payload: Blocks mapping each grade carried by both endpoints to a
    # (dim tgt) x (dim src) rational matrix.

    def id_payload(self, total):
        return Blocks([(g, linalg.eye(len(labs))) for g, labs in total.grades])

    def make_two_cell(self, src, tgt, blocks):
        stot, ttot = src.total, tgt.total
        items = []
        for g in _common_grades(stot, ttot):
            m = blocks.get(g)
            if m is None:
                m = linalg.zeros(ttot.dim(g), stot.dim(g))
            else:
                m = linalg.mat(m)
                if linalg.shape(m) != (ttot.dim(g), stot.dim(g)):
                    raise ShapeError("block at grade %r has shape %r, expected %r"
                                     % (g, linalg.shape(m),
                                        (ttot.dim(g), stot.dim(g))))
            items.append((g, m))
        for g in blocks:
            if g not in stot.bygrade or g not in ttot.bygrade:
                mx = linalg.mat(blocks[g])
                if any(any(x for x in row) for row in mx):
                    raise ShapeError("nonzero block at grade %r missing from an "
                                     "endpoint" % (g,))
        return TwoCell(src, tgt, Blocks(items))

    def two_cell_fn(self, src, tgt, entry):
        """2-cell with matrix entries entry(grade, tgt_label, src_label)."""
        stot, ttot = src.total, tgt.total
        items = []
        for g in _common_grades(stot, ttot):
            slabs = stot.bygrade[g]
            tlabs = ttot.bygrade[g]
            items.append((g, tuple(tuple(Fraction(entry(g, tl, sl))
                                         for sl in slabs) for tl in tlabs)))
        return TwoCell(src, tgt, Blocks(items))

    def vcomp_payload(self, alpha, beta):
        f = alpha.src.total
        h = beta.tgt.total
        g = alpha.tgt.total
        pa, pb = alpha.data.d, beta.data.d
        items = []
        for gr in _common_grades(f, h):
            dmid = g.dim(gr)
            if dmid == 0:
                items.append((gr, linalg.zeros(h.dim(gr), f.dim(gr))))
            else:
                items.append((gr, linalg.matmul(pb[gr], pa[gr])))
        return Blocks(items)

    def whisker_payload(self, before, gamma, after, src_chain, tgt_chain):
        bt = before.total
        at = after.total
        gs, gt = gamma.src.total, gamma.tgt.total
        gblocks = gamma.data.d
        sb = before.slots
        gsrc_empty = gamma.src.is_identity()
        gtgt_empty = gamma.tgt.is_identity()
        sgt = 0 if gtgt_empty else gamma.tgt.slots
        seam_arity = before.cod
        stot, ttot = src_chain.total, tgt_chain.total
        items = []
        for G in _common_grades(stot, ttot):
            K, I = G
            slabs = stot.bygrade[G]
            tlabs = ttot.bygrade[G]
            spos = {lab: i for i, lab in enumerate(slabs)}
            rows = [[ZERO] * len(slabs) for _ in tlabs]
            for ti, lab in enumerate(tlabs):
                bpart = lab[:sb]
                mid = lab[sb:sb + sgt]
                apart = lab[sb + sgt:]
                seam_dom = bt.gradeof[bpart][0] if sb else I
                seam_cod = at.gradeof[apart][1] if apart else K
                gmid = (seam_cod, seam_dom)
                if gtgt_empty:
                    midlab = self.id_label(seam_dom)
                    gmid = (seam_dom, seam_dom)
                else:
                    midlab = mid
                block = gblocks.get(gmid)
                if block is None:
                    continue
                r = gt.posin[midlab]
                for c, mslab in enumerate(gs.bygrade[gmid]):
                    v = block[r][c]
                    if not v:
                        continue
                    midsrc = () if gsrc_empty else mslab
                    si = spos.get(bpart + midsrc + apart)
                    if si is None:
                        raise CoherenceError("whisker produced a label outside "
                                             "the source carrier")
                    rows[ti][si] += v
            items.append((G, tuple(tuple(r) for r in rows)))
        return Blocks(items)

    def _split_plan(self, chain_a, chain_b):
        plan = _zip_plan(len(chain_a.layers), len(chain_b.layers))
        out = []
        for ia, ib in plan:
            wa = chain_a.layers[ia].slots if ia is not None else \
                self.id_cell(chain_a.dom).slots
            wb = chain_b.layers[ib].slots if ib is not None else \
                self.id_cell(chain_b.dom).slots
            out.append((ia, ib, wa, wb))
        return out

    def _decompose(self, splits, lab):
        apart, bpart = [], []
        pos = 0
        for ia, ib, wa, wb in splits:
            if ia is not None:
                apart.extend(lab[pos:pos + wa])
            pos += wa
            if ib is not None:
                bpart.extend(lab[pos:pos + wb])
            pos += wb
        return tuple(apart), tuple(bpart)

    def _recompose(self, splits, chain_a, chain_b, alab, blab, ga_dom, gb_dom):
        out = []
        ai = bi = 0
        for ia, ib, wa, wb in splits:
            if ia is None:
                out.extend(self.id_label(ga_dom))
            else:
                out.extend(alab[ai:ai + wa])
                ai += wa
            if ib is None:
                out.extend(self.id_label(gb_dom))
            else:
                out.extend(blab[bi:bi + wb])
                bi += wb
        return tuple(out)

    def tensor2_payload(self, sig, tau, src_chain, tgt_chain):
        a_s, b_s = sig.src, tau.src
        a_t, b_t = sig.tgt, tau.tgt
        ast, bst = a_s.total, b_s.total
        att, btt = a_t.total, b_t.total
        sblocks, tblocks = sig.data.d, tau.data.d
        splits_t = self._split_plan(a_t, b_t)
        splits_s = self._split_plan(a_s, b_s)
        pa, qa = a_t.dom, a_t.cod
        stot, ttot = src_chain.total, tgt_chain.total
        items = []
        for G in _common_grades(stot, ttot):
            K, I = G
            ga = (K[:qa], I[:pa])
            gb = (K[qa:], I[pa:])
            slabs = stot.bygrade[G]
            tlabs = ttot.bygrade[G]
            spos = {lab: i for i, lab in enumerate(slabs)}
            rows = [[ZERO] * len(slabs) for _ in tlabs]
            ba = sblocks.get(ga)
            bb = tblocks.get(gb)
            if ba is not None and bb is not None:
                aslabs = ast.bygrade.get(ga, ())
                bslabs = bst.bygrade.get(gb, ())
                for ti, lab in enumerate(tlabs):
                    alab, blab = self._decompose(splits_t, lab)
                    if a_t.is_identity():
                        alab = self.id_label(I[:pa])
                    if b_t.is_identity():
                        blab = self.id_label(I[pa:])
                    ra = att.posin[alab]
                    rb = btt.posin[blab]
                    for ca, aslab in enumerate(aslabs):
                        va = ba[ra][ca]
                        if not va:
                            continue
                        for cb, bslab in enumerate(bslabs):
                            v = va * bb[rb][cb]
                            if not v:
                                continue
                            if src_chain.is_identity():
                                slab = self.id_label(I)
                            else:
                                sa = () if a_s.is_identity() else aslab
                                sbl = () if b_s.is_identity() else bslab
                                slab = self._recompose(splits_s, a_s, b_s,
                                                       sa, sbl,
                                                       I[:pa], I[pa:])
                            si = spos.get(slab)
                            if si is None:
                                raise CoherenceError(
                                    "tensor produced a label outside the "
                                    "source carrier")
                            rows[ti][si] += v
            items.append((G, tuple(tuple(r) for r in rows)))
        return Blocks(items)

    def comparison_payload(self, stot, ttot, perm):
        shared = shared_structural_names(stot, ttot)
        items = []
        if set(stot.bygrade) != set(ttot.bygrade):
            raise CoherenceError("no canonical comparison: supported grades "
                                 "differ")
        for g, tlabs in ttot.grades:
            slabs = stot.bygrade[g]
            if len(slabs) != len(tlabs):
                raise CoherenceError("no canonical comparison: dimensions "
                                     "differ at grade %r" % (g,))
            src_items = [(lab, g) for lab in slabs]
            tgt_items = [(lab, g) for lab in tlabs]
            matched = match_groups(src_items, tgt_items, shared,
                                   stot.mask, ttot.mask, perm)
            rows = [[ZERO] * len(slabs) for _ in tlabs]
            for ti, si in enumerate(matched):
                rows[ti][si] = ONE
            items.append((g, tuple(tuple(r) for r in rows)))
        return Blocks(items)

    def invert_payload(self, gamma):
        stot = gamma.src.total
        ttot = gamma.tgt.total
        blocks = gamma.data.d
        sgr, tgr = set(stot.bygrade), set(ttot.bygrade)
        for g in sorted(sgr - tgr):
            v = [ZERO] * stot.dim(g)
            v[0] = ONE
            return Witness("kernel", "grade %r is annihilated" % (g,),
                           (g, tuple(v)), gamma)
        for g in sorted(tgr - sgr):
            v = [ZERO] * ttot.dim(g)
            v[0] = ONE
            return Witness("cokernel", "grade %r is not reached" % (g,),
                           (g, tuple(v)), gamma)
        items = []
        for g in sorted(sgr):
            block = blocks[g]
            nr, nc = linalg.shape(block)
            if nr == nc:
                inv = linalg.inverse(block)
                if inv is not None:
                    items.append((g, inv))
                    continue
            v = linalg.kernel_vector(block)
            if v is not None:
                return Witness("kernel",
                               "kernel vector %s at grade %r"
                               % ([str(x) for x in v], g), (g, v), gamma)
            w = linalg.cokernel_vector(block)
            return Witness("cokernel",
                           "cokernel vector %s at grade %r"
                           % ([str(x) for x in w], g), (g, w), gamma)
        return Blocks(items)

    def payload_equal(self, a, b):
        return a.data == b.data

    def check_witness(self, gamma, witness):
        blocks = gamma.data.d
        g, v = witness.data if isinstance(witness.data, tuple) and \
            len(witness.data) == 2 else (None, None)
        if g is None:
            return False
        if not any(x for x in v):
            return False
        stot, ttot = gamma.src.total, gamma.tgt.total
        block = blocks.get(g)
        if witness.kind == "kernel":
            if block is None:
                return g in stot.bygrade and g not in ttot.bygrade and \
                    len(v) == stot.dim(g)
            if len(v) != linalg.shape(block)[1]:
                return False
            return all(x == 0 for x in linalg.matvec(block, v))
        if witness.kind == "cokernel":
            if block is None:
                return g in ttot.bygrade and g not in stot.bygrade and \
                    len(v) == ttot.dim(g)
            bt = tuple(zip(*block)) if block and block[0] else ()
            if not bt:
                return len(v) == linalg.shape(block)[0]
            if len(v) != linalg.shape(block)[0]:
                return False
            return all(x == 0 for x in linalg.matvec(bt, v))
        return False


def _delta_cell(be, name, dom, cod, support):
    """Structural cell with one basis vector per grade in ``support``."""
    return be.atomic_cell(name, {g: 1 for g in support}, dom, cod,
                          structural=True)


def frobenius_commutative(n):
    """Commutative base preset: alphabet of size n, diagonal multiplication."""
    if n < 1:
        raise BackendError("base dimension must be at least 1")
    be = GradedBackend(range(n))
    ctx = FrobMonoidale(be)
    ctx.base_dim = n
    ctx.preset = "commutative"
    R = range(n)
    m = _delta_cell(be, "m", 2, 1, [((k,), (k, k)) for k in R])
    u = _delta_cell(be, "u", 0, 1, [((k,), ()) for k in R])
    ms = _delta_cell(be, "m*", 1, 2, [((k, k), (k,)) for k in R])
    us = _delta_cell(be, "u*", 1, 0, [((), (k,)) for k in R])
    ctx.m, ctx.u, ctx.mstar, ctx.ustar = (ctx.atom(c) for c in (m, u, ms, us))

    one = lambda g, tl, sl: ONE
    ctx.eta_m = be.two_cell_fn(Chain(ctx, 2, 2), ctx.m.then(ctx.mstar), one)
    ctx.eps_m = be.two_cell_fn(ctx.mstar.then(ctx.m), Chain(ctx, 1, 1), one)
    ctx.eta_u = be.two_cell_fn(Chain(ctx, 0, 0), ctx.u.then(ctx.ustar), one)
    ctx.eps_u = be.two_cell_fn(ctx.ustar.then(ctx.u), Chain(ctx, 1, 1), one)
    ctx.well_pointed = ctx.u
    ctx.idempotents_split = True
    return ctx


def frobenius_weak(n):
    """Weak base preset: alphabet of index pairs, separable multiplication."""
    if n < 1:
        raise BackendError("base dimension must be at least 1")
    pairs = tuple(product(range(n), repeat=2))
    be = GradedBackend(pairs)
    ctx = FrobMonoidale(be)
    ctx.base_dim = n
    ctx.preset = "weak"
    m = _delta_cell(be, "m", 2, 1,
                    [(((i, l),), ((i, j), (j, l)))
                     for i in range(n) for j in range(n) for l in range(n)])
    u = _delta_cell(be, "u", 0, 1, [(((i, i),), ()) for i in range(n)])
    ms = _delta_cell(be, "m*", 1, 2,
                     [((((i, j), (j, l))), ((i, l),))
                      for i in range(n) for j in range(n) for l in range(n)])
    us = _delta_cell(be, "u*", 1, 0, [((), ((i, i),)) for i in range(n)])
    ctx.m, ctx.u, ctx.mstar, ctx.ustar = (ctx.atom(c) for c in (m, u, ms, us))

    one = lambda g, tl, sl: ONE
    ctx.eta_m = be.two_cell_fn(Chain(ctx, 2, 2), ctx.m.then(ctx.mstar), one)
    ctx.eps_m = be.two_cell_fn(ctx.mstar.then(ctx.m), Chain(ctx, 1, 1), one)
    ctx.eta_u = be.two_cell_fn(Chain(ctx, 0, 0), ctx.u.then(ctx.ustar), one)
    ctx.eps_u = be.two_cell_fn(ctx.ustar.then(ctx.u), Chain(ctx, 1, 1), one)
    v = _delta_cell(be, "v", 0, 1, [((p,), ()) for p in pairs])
    ctx.well_pointed = ctx.atom(v)
    ctx.idempotents_split = True
    return ctx


def graded_cell(ctx, name, dims):
    """A non-structural endo-cell from (codgrade, domgrade) -> dimension."""
    return ctx.atom(ctx.backend.atomic_cell(name, dims, 1, 1))


def random_cell(ctx, rng, name, max_total=4):
    """Random endo-1-cell with small per-grade dimensions."""
    alphabet = ctx.backend.alphabet
    dims = {}
    total = 0
    attempts = rng.randrange(1, 4)
    for _ in range(attempts):
        g = ((rng.choice(alphabet),), (rng.choice(alphabet),))
        d = rng.randrange(1, 3)
        if total + d > max_total:
            break
        dims[g] = dims.get(g, 0) + d
        total += d
    if not dims:
        g = ((alphabet[0],), (alphabet[0],))
        dims[g] = 1
    return graded_cell(ctx, name, dims)


def random_two_cell(ctx, rng, src, name):
    """Random 2-cell from ``src`` into a fresh random parallel chain."""
    be = ctx.backend
    stot = src.total
    dims = {}
    for g, labs in stot.grades:
        d = rng.randrange(0, 3)
        if d:
            dims[g] = d
    if not dims:
        g = stot.grades[0][0] if stot.grades else \
            (((be.alphabet[0],),) * src.cod, ((be.alphabet[0],),) * src.dom)
        dims = {g: 1}
    tgt = ctx.atom(be.atomic_cell(name, dims, src.dom, src.cod))
    entries = lambda g, tl, sl: Fraction(rng.randrange(-2, 3))
    return be.two_cell_fn(src, tgt, entries)


def random_two_cell_between(ctx, rng, src, tgt):
    """Random grade-preserving 2-cell src -> tgt with small entries."""
    be = ctx.backend
    return be.two_cell_fn(src, tgt,
                          lambda g, tl, sl: Fraction(rng.randrange(-2, 3)))
