"""Finite-span backend: 1-cells are spans over a finite set, 2-cells are
reversed span morphisms (the 2-cell data runs target-to-source).

A cell ``M^p -> M^q`` over the carrier set ``X`` is a finite set of
elements, each with a label, a leg in ``X^p`` and a leg in ``X^q``.
Composition is pullback over the shared leg, tensor is cartesian
product; both concatenate labels and keep elements sorted in a canonical
order, so they are strictly associative.  Bimonoids over this backend
are small categories with object set ``X``.
"""

from itertools import product

from .core import (Chain, FrobMonoidale, TwoCell, Witness, ID_NAME,
                   _zip_plan, match_groups, shared_structural_names)
from .errors import BackendError, CoherenceError, ShapeError, ValidationError


def skey(v):
    """Total sort key over the label values the backend accepts."""
    if isinstance(v, tuple):
        return (0, tuple(skey(x) for x in v))
    if isinstance(v, bool):
        return (1, int(v))
    if isinstance(v, int):
        return (1, v)
    return (2, str(v))


def _label_key(label):
    return tuple((c[0], skey(c[1])) for c in label)




class SpanCell:
    """One layer: a finite span ``X^p <- E -> X^q`` with labelled carrier."""

    __slots__ = ("dom", "cod", "slots", "mask", "elements", "tag",
                 "_index", "_hash")

    def __init__(self, dom, cod, slots, mask, elements, tag):
        self.dom = dom
        self.cod = cod
        self.slots = slots
        self.mask = mask
        self.elements = elements   # tuple of (label, domleg, codleg), sorted
        self.tag = tag
        self._index = None
        self._hash = None

    @property
    def index(self):
        if self._index is None:
            self._index = {lab: i for i, (lab, _, _) in enumerate(self.elements)}
        return self._index

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SpanCell):
            return NotImplemented
        return (self.dom, self.cod, self.mask, self.elements) == \
               (other.dom, other.cod, other.mask, other.elements)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.mask, self.elements))
        return self._hash

    def __repr__(self):
        return "<span %s: M^%d->M^%d, %d elements>" % (
            self.tag, self.dom, self.cod, len(self.elements))


class SpanBackend:
    """Concrete cell and 2-cell operations over a fixed finite set."""

    kind = "span"

    def __init__(self, X):
        X = tuple(sorted(set(X), key=skey))
        if not X:
            raise BackendError("span backend needs a nonempty carrier set")
        self.X = X
        self._id_cells = {}

    # -- cells ---------------------------------------------------------

    def atomic_cell(self, name, elements, dom, cod, structural=False):
        """Build a one-slot cell from (value, domleg, codleg) triples."""
        elems = []
        seen = set()
        for value, dl, cl in elements:
            if value in seen:
                raise BackendError("duplicate element %r in cell %r" % (value, name))
            seen.add(value)
            if len(dl) != dom or len(cl) != cod:
                raise BackendError("element %r of %r has legs of wrong arity"
                                   % (value, name))
            elems.append((((name, value),), tuple(dl), tuple(cl)))
        elems.sort(key=lambda e: _label_key(e[0]))
        return SpanCell(dom, cod, 1, (not structural,), tuple(elems), name)

    def id_label(self, point):
        """Identity-cell label for a point of X^p (one slot per wire)."""
        return tuple((ID_NAME, (v,)) for v in point)

    def id_cell(self, p):
        cell = self._id_cells.get(p)
        if cell is None:
            if p == 0:
                elems = (((), (), ()),)
                cell = SpanCell(0, 0, 0, (), elems, "1^0")
            else:
                elems = tuple((self.id_label(x), x, x)
                              for x in sorted(product(self.X, repeat=p),
                                              key=skey))
                cell = SpanCell(p, p, p, (False,) * p, elems, "1^%d" % p)
            self._id_cells[p] = cell
        return cell

    def unmask_cell(self, cell):
        if all(cell.mask):
            return cell
        return SpanCell(cell.dom, cell.cod, cell.slots, (True,) * cell.slots,
                        cell.elements, cell.tag)

    def compose_cells(self, a, b):
        """Pullback composite: ``a`` first, then ``b``."""
        bydom = {}
        for lab, dl, cl in b.elements:
            bydom.setdefault(dl, []).append((lab, cl))
        elems = []
        for lab, dl, cl in a.elements:
            for lab2, cl2 in bydom.get(cl, ()):
                elems.append((lab + lab2, dl, cl2))
        elems.sort(key=lambda e: _label_key(e[0]))
        return SpanCell(a.dom, b.cod, a.slots + b.slots, a.mask + b.mask,
                        tuple(elems), "(%s;%s)" % (a.tag, b.tag))

    def tensor_cells(self, a, b):
        elems = []
        for lab, dl, cl in a.elements:
            for lab2, dl2, cl2 in b.elements:
                elems.append((lab + lab2, dl + dl2, cl + cl2))
        elems.sort(key=lambda e: _label_key(e[0]))
        return SpanCell(a.dom + b.dom, a.cod + b.cod, a.slots + b.slots,
                        a.mask + b.mask, tuple(elems),
                        "(%s*%s)" % (a.tag, b.tag))

    # -- 2-cell payloads -----------------------------------------------
    # The payload of a 2-cell f => g is a tuple giving, for every element
    # of g's carrier, the index of its image in f's carrier.

    def id_payload(self, total):
        return tuple(range(len(total.elements)))

    def make_two_cell(self, src, tgt, fn):
        """2-cell from an explicit element map carrier(tgt) -> carrier(src).

        ``fn`` maps target labels to source labels; leg compatibility is
        verified.
        """
        stot, ttot = src.total, tgt.total
        out = []
        for lab, dl, cl in ttot.elements:
            slab = fn(lab)
            sidx = stot.index.get(slab)
            if sidx is None:
                raise ShapeError("image %r is not an element of %r" % (slab, src))
            _, sdl, scl = stot.elements[sidx]
            if sdl != dl or scl != cl:
                raise ShapeError("element map does not commute with legs at %r"
                                 % (lab,))
            out.append(sidx)
        return TwoCell(src, tgt, tuple(out))

    def vcomp_payload(self, alpha, beta):
        pa, pb = alpha.data, beta.data
        return tuple(pa[i] for i in pb)

    def whisker_payload(self, before, gamma, after, src_chain, tgt_chain):
        bt = before.total
        gs, gt = gamma.src.total, gamma.tgt.total
        sb = before.slots
        gsrc_empty = gamma.src.is_identity()
        gtgt_empty = gamma.tgt.is_identity()
        sgt = 0 if gtgt_empty else gamma.tgt.slots
        seam_arity = before.cod
        stot, ttot = src_chain.total, tgt_chain.total
        out = []
        for lab, dl, cl in ttot.elements:
            bpart = lab[:sb]
            mid = lab[sb:sb + sgt]
            apart = lab[sb + sgt:]
            if gtgt_empty:
                seam = bt.elements[bt.index[bpart]][2] if sb else dl
                midlab = self.id_label(seam)
                gidx = gt.index[midlab]
            else:
                gidx = gt.index[mid]
            sidx = gamma.data[gidx]
            midsrc = () if gsrc_empty else gs.elements[sidx][0]
            out.append(stot.index[bpart + midsrc + apart])
        return tuple(out)

    def _decompose(self, chain_a, chain_b, lab, pads_value=None):
        """Split a tensored-chain label into true a- and b-side labels."""
        plan = _zip_plan(len(chain_a.layers), len(chain_b.layers))
        aw = [chain_a.layers[ia].slots if ia is not None
              else self.id_cell(chain_a.dom).slots for ia, _ in plan]
        bw = [chain_b.layers[ib].slots if ib is not None
              else self.id_cell(chain_b.dom).slots for _, ib in plan]
        apart, bpart = [], []
        pos = 0
        for (ia, ib), wa, wb in zip(plan, aw, bw):
            if ia is not None:
                apart.extend(lab[pos:pos + wa])
            pos += wa
            if ib is not None:
                bpart.extend(lab[pos:pos + wb])
            pos += wb
        return tuple(apart), tuple(bpart)

    def _recompose(self, chain_a, chain_b, alab, blab, a_dl, b_dl):
        plan = _zip_plan(len(chain_a.layers), len(chain_b.layers))
        out = []
        ai = bi = 0
        for ia, ib in plan:
            if ia is None:
                out.extend(self.id_label(a_dl))
            else:
                w = chain_a.layers[ia].slots
                out.extend(alab[ai:ai + w])
                ai += w
            if ib is None:
                out.extend(self.id_label(b_dl))
            else:
                w = chain_b.layers[ib].slots
                out.extend(blab[bi:bi + w])
                bi += w
        return tuple(out)

    def tensor2_payload(self, sig, tau, src_chain, tgt_chain):
        a_s, b_s = sig.src, tau.src
        a_t, b_t = sig.tgt, tau.tgt
        ast, bst = a_s.total, b_s.total
        att, btt = a_t.total, b_t.total
        stot, ttot = src_chain.total, tgt_chain.total
        pa, pb = a_t.dom, b_t.dom
        out = []
        for lab, dl, cl in ttot.elements:
            alab, blab = self._decompose(a_t, b_t, lab)
            if a_t.is_identity():
                aidx = att.index[self.id_label(dl[:pa])]
            else:
                aidx = att.index[alab]
            if b_t.is_identity():
                bidx = btt.index[self.id_label(dl[pa:])]
            else:
                bidx = btt.index[blab]
            asrc = ast.elements[sig.data[aidx]]
            bsrc = bst.elements[tau.data[bidx]]
            if src_chain.is_identity():
                slab = self.id_label(asrc[1] + bsrc[1])
            else:
                a_lab = () if a_s.is_identity() else asrc[0]
                b_lab = () if b_s.is_identity() else bsrc[0]
                slab = self._recompose(a_s, b_s, a_lab, b_lab,
                                       asrc[1], bsrc[1])
            out.append(stot.index[slab])
        return tuple(out)

    def comparison_payload(self, stot, ttot, perm):
        shared = shared_structural_names(stot, ttot)
        src_items = [(lab, (dl, cl)) for lab, dl, cl in stot.elements]
        tgt_items = [(lab, (dl, cl)) for lab, dl, cl in ttot.elements]
        if len(src_items) != len(tgt_items):
            raise CoherenceError("no canonical comparison: carriers differ "
                                 "in size")
        return tuple(match_groups(src_items, tgt_items, shared,
                                  stot.mask, ttot.mask, perm))

    def invert_payload(self, gamma):
        stot = gamma.src.total
        ttot = gamma.tgt.total
        seen = {}
        for ti, si in enumerate(gamma.data):
            if si in seen:
                return Witness(
                    "multiple-preimages",
                    "elements %r and %r share the image %r" % (
                        ttot.elements[seen[si]][0], ttot.elements[ti][0],
                        stot.elements[si][0]),
                    (ttot.elements[seen[si]][0], ttot.elements[ti][0]),
                    gamma)
            seen[si] = ti
        if len(seen) != len(stot.elements):
            missing = next(i for i in range(len(stot.elements)) if i not in seen)
            return Witness(
                "no-preimage",
                "element %r has no preimage" % (stot.elements[missing][0],),
                stot.elements[missing][0],
                gamma)
        inv = [0] * len(stot.elements)
        for ti, si in enumerate(gamma.data):
            inv[si] = ti
        return tuple(inv)

    def payload_equal(self, a, b):
        return a.data == b.data

    def check_witness(self, gamma, witness):
        stot = gamma.src.total
        ttot = gamma.tgt.total
        if witness.kind == "no-preimage":
            si = stot.index.get(witness.data)
            if si is None:
                return False
            return all(x != si for x in gamma.data)
        if witness.kind == "multiple-preimages":
            la, lb = witness.data
            ia, ib = ttot.index.get(la), ttot.index.get(lb)
            if ia is None or ib is None or ia == ib:
                return False
            return gamma.data[ia] == gamma.data[ib]
        return False


def frobenius_monoidale(X):
    """The diagonal-induced naturally Frobenius map-monoidale on a set."""
    be = SpanBackend(X)
    ctx = FrobMonoidale(be)
    m = be.atomic_cell("m", [(x, (x, x), (x,)) for x in be.X], 2, 1, True)
    u = be.atomic_cell("u", [(x, (), (x,)) for x in be.X], 0, 1, True)
    ms = be.atomic_cell("m*", [(x, (x,), (x, x)) for x in be.X], 1, 2, True)
    us = be.atomic_cell("u*", [(x, (x,), ()) for x in be.X], 1, 0, True)
    ctx.m = ctx.atom(m)
    ctx.u = ctx.atom(u)
    ctx.mstar = ctx.atom(ms)
    ctx.ustar = ctx.atom(us)

    mm = ctx.m.then(ctx.mstar)          # m*.m : M^2 -> M^2
    ctx.eta_m = be.make_two_cell(
        Chain(ctx, 2, 2), mm,
        lambda lab: be.id_label((lab[0][1], lab[0][1])))
    sm = ctx.mstar.then(ctx.m)          # m.m* : M -> M
    ctx.eps_m = be.make_two_cell(
        sm, Chain(ctx, 1, 1),
        lambda lab: (("m*", lab[0][1][0]), ("m", lab[0][1][0])))
    uu = ctx.u.then(ctx.ustar)          # u*.u : I -> I
    ctx.eta_u = be.make_two_cell(Chain(ctx, 0, 0), uu, lambda lab: ())
    ju = ctx.ustar.then(ctx.u)          # u.u* : M -> M
    ctx.eps_u = be.make_two_cell(
        ju, Chain(ctx, 1, 1),
        lambda lab: (("u*", lab[0][1][0]), ("u", lab[0][1][0])))
    ctx.well_pointed = ctx.u
    ctx.idempotents_split = True
    return ctx


def random_cell(ctx, rng, name, max_size=8):
    """A random endo-1-cell on M with a small labelled carrier."""
    be = ctx.backend
    size = rng.randrange(1, max_size + 1)
    elems = []
    for k in range(size):
        dl = (rng.choice(be.X),)
        cl = (rng.choice(be.X),)
        elems.append((k, dl, cl))
    return ctx.atom(be.atomic_cell(name, elems, 1, 1))


def random_two_cell(ctx, rng, src, name):
    """A random 2-cell from ``src`` into a random parallel chain.

    Built by generating a leg-compatible element map onto a fresh cell.
    """
    be = ctx.backend
    stot = src.total
    if not stot.elements:
        tgt = ctx.atom(be.atomic_cell(name, [], src.dom, src.cod))
        return be.make_two_cell(src, tgt, lambda lab: lab)
    size = rng.randrange(1, len(stot.elements) + 3)
    elems = []
    images = []
    for k in range(size):
        _, dl, cl = stot.elements[rng.randrange(len(stot.elements))]
        elems.append((k, dl, cl))
        images.append((dl, cl))
    tgt = ctx.atom(be.atomic_cell(name, elems, src.dom, src.cod))
    choice = {}
    bylegs = {}
    for lab, dl, cl in stot.elements:
        bylegs.setdefault((dl, cl), []).append(lab)
    for (lab, dl, cl) in tgt.total.elements:
        choice[lab] = rng.choice(bylegs[(dl, cl)])
    return be.make_two_cell(src, tgt, lambda lab: choice[lab])


def random_two_cell_between(ctx, rng, src, tgt):
    """Random leg-compatible 2-cell src -> tgt, or None when impossible."""
    be = ctx.backend
    stot, ttot = src.total, tgt.total
    bylegs = {}
    for i, (_, dl, cl) in enumerate(stot.elements):
        bylegs.setdefault((dl, cl), []).append(i)
    out = []
    for lab, dl, cl in ttot.elements:
        cands = bylegs.get((dl, cl))
        if not cands:
            return None
        out.append(rng.choice(cands))
    return TwoCell(src, tgt, tuple(out))
