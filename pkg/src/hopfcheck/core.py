"""Chain calculus for exact diagram computations over concrete backends.

A backend realizes the tensor powers ``M^0, M^1, M^2, ...`` of one object
of a monoidal bicategory, together with concrete 1-cells and 2-cells.
The two builtin backends are finite spans (with reversed 2-cells) and
multigraded rational vector spaces.

* A *cell* is a single-layer 1-cell ``M^p -> M^q``.  Its carrier
  elements (or graded basis vectors) have flat *labels*: one slot per
  atomic generator glued into the layer.  Composing or tensoring cells
  concatenates labels and re-sorts the carrier into a canonical order,
  which makes both operations strictly associative with a strict tensor
  unit.
* A :class:`Chain` is a composable sequence of cells read in diagram
  order (``layers[0]`` is applied first).  The empty chain is the
  identity 1-cell, so the strict unit law for composition holds on the
  nose; identity layers are never stored.
* A :class:`TwoCell` connects two parallel chains and stores backend map
  data between their evaluated total carriers.

The only comparison cells the strictification leaves behind are
relayerings, unit insertions and snake-like cancellations.  They are all
produced by :func:`comparison`, which matches elements of the two
evaluations by their non-structural label content and verifies that the
match is a well-defined bijection.  Every operation is pure and every
value immutable, so results are safe to share between threads.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import CompositionError, ShapeError, CoherenceError

ID_NAME = "1"


def _zip_plan(na, nb):
    """Layer alignment for tensoring chains of lengths na, nb.

    Shorter chains are padded with identity layers at the start, so a
    2-cell expanding one side acts as early as possible.  Entries are
    (index into a | None, index into b | None).
    """
    length = max(na, nb)
    return tuple(
        (k - (length - na) if k >= length - na else None,
         k - (length - nb) if k >= length - nb else None)
        for k in range(length)
    )


@dataclass(frozen=True)
class Chain:
    """A 1-cell ``M^dom -> M^cod`` given as a list of composable layers."""

    ctx: object
    dom: int
    cod: int
    layers: tuple = ()

    def __post_init__(self):
        a = self.dom
        for cell in self.layers:
            if cell.dom != a:
                raise CompositionError(
                    "layer %r expects domain arity %d, chain provides %d"
                    % (cell, cell.dom, a))
            a = cell.cod
        if a != self.cod:
            raise CompositionError(
                "chain declared codomain %d but layers end at %d" % (self.cod, a))

    @property
    def backend(self):
        return self.ctx.backend

    @property
    def total(self):
        """The evaluated total cell (identity cell for the empty chain)."""
        return self.ctx.eval_chain(self)

    @property
    def slots(self):
        return sum(c.slots for c in self.layers)

    def then(self, other):
        """Horizontal composite: ``self`` first, then ``other``."""
        if other.ctx is not self.ctx:
            raise CompositionError("cannot compose chains over different contexts")
        if self.cod != other.dom:
            raise CompositionError(
                "composition undefined: %r ends at M^%d but %r starts at M^%d"
                % (self, self.cod, other, other.dom))
        return Chain(self.ctx, self.dom, other.cod, self.layers + other.layers)

    def tensor(self, other):
        """Tensor product of chains, layers aligned at the end."""
        if other.ctx is not self.ctx:
            raise CompositionError("cannot tensor chains over different contexts")
        be = self.backend
        if not self.layers and not other.layers:
            return Chain(self.ctx, self.dom + other.dom, self.cod + other.cod)
        layers = []
        for ia, ib in _zip_plan(len(self.layers), len(other.layers)):
            ca = self.layers[ia] if ia is not None else be.id_cell(self.dom)
            cb = other.layers[ib] if ib is not None else be.id_cell(other.dom)
            layers.append(be.tensor_cells(ca, cb))
        return Chain(self.ctx, self.dom + other.dom, self.cod + other.cod,
                     tuple(layers))

    def is_identity(self):
        return not self.layers

    def __repr__(self):
        body = "; ".join(c.tag for c in self.layers) if self.layers else "id"
        return "<M^%d -> M^%d : %s>" % (self.dom, self.cod, body)


def idc(ctx, p):
    """The identity chain on ``M^p``."""
    return Chain(ctx, p, p)


def compose1(f, g):
    """``g . f`` in diagram order (f first); spec-facing alias of ``then``."""
    return f.then(g)


def tensor1(f, g):
    return f.tensor(g)


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell between parallel chains, with backend map data."""

    src: Chain
    tgt: Chain
    data: object

    def __post_init__(self):
        if self.src.ctx is not self.tgt.ctx:
            raise ShapeError("2-cell endpoints live over different contexts")
        if (self.src.dom, self.src.cod) != (self.tgt.dom, self.tgt.cod):
            raise ShapeError(
                "2-cell endpoints are not parallel: %r vs %r" % (self.src, self.tgt))

    @property
    def ctx(self):
        return self.src.ctx

    @property
    def backend(self):
        return self.src.ctx.backend

    def __repr__(self):
        return "<2-cell %r => %r>" % (self.src, self.tgt)


@dataclass(frozen=True)
class Witness:
    """Explicit evidence that a 2-cell is not invertible.

    ``kind`` is one of ``"no-preimage"``, ``"multiple-preimages"``,
    ``"kernel"``, ``"cokernel"``, ``"dimension"``.  ``data`` is
    backend-specific replayable content (an element label, or a grade
    plus rational vector).
    """

    kind: str
    message: str
    data: object
    cell: Optional[TwoCell] = None

    def replay(self):
        """Re-verify this witness against its stored 2-cell."""
        if self.cell is None:
            return False
        return self.cell.backend.check_witness(self.cell, self)


def id2(chain):
    """Identity 2-cell on a chain."""
    return TwoCell(chain, chain, chain.backend.id_payload(chain.total))


def vcompose2(beta, alpha):
    """Vertical composite: ``alpha`` then ``beta`` (spec argument order)."""
    if alpha.ctx is not beta.ctx:
        raise CompositionError("2-cells over different contexts")
    if alpha.tgt != beta.src:
        raise CompositionError(
            "vertical composition undefined: target %r differs from source %r"
            % (alpha.tgt, beta.src))
    data = alpha.backend.vcomp_payload(alpha, beta)
    return TwoCell(alpha.src, beta.tgt, data)


def paste(first, *rest):
    """Vertical composite of 2-cells listed in application order."""
    out = first
    for step in rest:
        out = vcompose2(step, out)
    return out


def whisker(before, gamma, after):
    """``before . gamma . after``: whisker a 2-cell by chains on both sides.

    ``before`` is applied before the 2-cell's boundary, ``after`` after it;
    either may be an identity (empty) chain.
    """
    if before.is_identity() and after.is_identity() \
            and before.dom == gamma.src.dom and after.cod == gamma.src.cod:
        return gamma
    src = before.then(gamma.src).then(after)
    tgt = before.then(gamma.tgt).then(after)
    data = gamma.backend.whisker_payload(before, gamma, after, src, tgt)
    return TwoCell(src, tgt, data)


def tensor2(sig, tau):
    """Tensor of 2-cells, boundaries aligned like ``Chain.tensor``."""
    if sig.ctx is not tau.ctx:
        raise CompositionError("2-cells over different contexts")
    src = sig.src.tensor(tau.src)
    tgt = sig.tgt.tensor(tau.tgt)
    data = sig.backend.tensor2_payload(sig, tau, src, tgt)
    return TwoCell(src, tgt, data)


def hcompose2(sig, tau):
    """Horizontal composite along the object: ``sig`` first, then ``tau``."""
    step1 = whisker(idc(sig.ctx, sig.src.dom), sig, tau.src)
    step2 = whisker(sig.tgt, tau, idc(tau.ctx, tau.tgt.cod))
    return vcompose2(step2, step1)


def comparison(src, tgt, perm=None):
    """Canonical invertible comparison between two builds of one diagram.

    Elements are matched by their non-structural label content (plus legs
    or grades); ``perm`` optionally permutes content slots, with
    ``perm[i]`` giving the source slot matched against target slot ``i``.
    Raises :class:`CoherenceError` when no well-defined bijection exists.
    """
    if src.ctx is not tgt.ctx:
        raise CompositionError("chains over different contexts")
    if (src.dom, src.cod) != (tgt.dom, tgt.cod):
        raise ShapeError("no comparison between non-parallel chains: %r, %r"
                         % (src, tgt))
    if src == tgt:
        return id2(src)
    data = src.backend.comparison_payload(src.total, tgt.total, perm)
    return TwoCell(src, tgt, data)


def invert2(gamma):
    """Exact two-sided inverse of a 2-cell, or a :class:`Witness`."""
    out = gamma.backend.invert_payload(gamma)
    if isinstance(out, Witness):
        return out
    return TwoCell(gamma.tgt, gamma.src, out)


def is_invertible(gamma):
    return not isinstance(invert2(gamma), Witness)


def invert2_strict(gamma):
    res = invert2(gamma)
    if isinstance(res, Witness):
        raise ShapeError("expected invertible 2-cell: %s" % res.message)
    return res


def two_cells_equal(a, b):
    """Exact equality of 2-cells (same boundaries, same map data)."""
    if a.src != b.src or a.tgt != b.tgt:
        return False
    return a.backend.payload_equal(a, b)


def unmasked(chain):
    """The same chain with every label slot counted as content.

    Carriers, labels and orderings are unchanged, so 2-cell payloads
    computed against the unmasked chain transport verbatim to the masked
    one.  Used to pin down comparisons between builds whose only content
    would otherwise be structural (duality isos of the units).
    """
    be = chain.backend
    return Chain(chain.ctx, chain.dom, chain.cod,
                 tuple(be.unmask_cell(c) for c in chain.layers))


def slot_names(cell):
    """Per-slot atom names of a cell (constant across its elements)."""
    first = None
    if getattr(cell, "elements", None):
        first = cell.elements[0][0]
    elif getattr(cell, "grades", None):
        for _, labs in cell.grades:
            if labs:
                first = labs[0]
                break
    if first is None:
        return None
    return tuple(c[0] for c in first)


def shared_structural_names(cell_s, cell_t):
    """Structural atom names occurring equally often on both sides.

    Identity padding is excluded: a pad records the value of a wire at
    one time slice, which is not invariant under relayering.
    """
    ns, nt = slot_names(cell_s), slot_names(cell_t)
    if ns is None or nt is None:
        return frozenset()
    cs = {}
    for n, keep in zip(ns, cell_s.mask):
        if not keep and n != ID_NAME:
            cs[n] = cs.get(n, 0) + 1
    ct = {}
    for n, keep in zip(nt, cell_t.mask):
        if not keep and n != ID_NAME:
            ct[n] = ct.get(n, 0) + 1
    return frozenset(n for n, c in cs.items() if ct.get(n) == c)


def content_slots(chain):
    """Number of non-structural label slots of a chain."""
    return sum(sum(c.mask) for c in chain.layers)


def tensor_seq(a, b, seq_a, seq_b):
    """Owner tags of ``a.tensor(b)``'s content slots, from the factors'."""
    out = []
    pa = pb = 0
    for ia, ib in _zip_plan(len(a.layers), len(b.layers)):
        if ia is not None:
            k = sum(a.layers[ia].mask)
            out.extend(seq_a[pa:pa + k])
            pa += k
        if ib is not None:
            k = sum(b.layers[ib].mask)
            out.extend(seq_b[pb:pb + k])
            pb += k
    return out


def owner_perm(src_seq, tgt_seq):
    """Content permutation matching equal owner tags in order.

    ``perm[k]`` is the source content slot matched against target slot k;
    within one owner the slot order is preserved.
    """
    pos = {}
    for i, t in enumerate(src_seq):
        pos.setdefault(t, []).append(i)
    cnt = dict.fromkeys(pos, 0)
    perm = []
    for t in tgt_seq:
        if t not in pos or cnt[t] >= len(pos[t]):
            raise CoherenceError("owner sequences do not match")
        perm.append(pos[t][cnt[t]])
        cnt[t] += 1
    if len(perm) != len(src_seq):
        raise CoherenceError("owner sequences do not match")
    return tuple(perm)


def rcomparison(src, tgt, src_seq, tgt_seq):
    """Comparison with the content permutation induced by owner tags."""
    return comparison(src, tgt, owner_perm(src_seq, tgt_seq))


def seq_of(chain, tag):
    return [tag] * content_slots(chain)


def content_key(mask, lab, perm):
    """Order-canonical key of a label's non-structural content.

    Components are tagged by (atom name, occurrence) and sorted, so
    relayerings that interleave distinct atoms differently still match.
    ``perm`` reorders the plain content sequence before tagging.
    """
    comps = [c for c, keep in zip(lab, mask) if keep]
    if perm is not None:
        if len(perm) != len(comps):
            raise CoherenceError("content permutation has wrong length")
        comps = [comps[perm[k]] for k in range(len(perm))]
    counts = {}
    keyed = []
    for c in comps:
        occ = counts.get(c[0], 0)
        counts[c[0]] = occ + 1
        keyed.append(((c[0], occ), c))
    keyed.sort(key=lambda kc: kc[0])
    return tuple(keyed)


def sort_key(v):
    """Total order on the nested tuples/ints/strings used in labels."""
    if isinstance(v, tuple):
        return (0, tuple(sort_key(x) for x in v))
    if isinstance(v, bool):
        return (1, int(v))
    if isinstance(v, int):
        return (1, v)
    return (2, str(v))


def struct_key(mask, lab, shared):
    """Secondary key: value multisets of shared structural atoms by name.

    Used only to break ties between elements with equal content and
    boundary (free internal wires).  Values are collected as sorted
    multisets because relayering may reorder occurrences of one atom;
    structural atoms rerouted by constraint cells never reach this
    tiebreaker, their elements being distinguished by the primary key.
    """
    struct = {}
    for c, keep in zip(lab, mask):
        if not keep and c[0] in shared:
            struct.setdefault(c[0], []).append(c[1:])
    return tuple(sorted((n, tuple(sorted(v, key=sort_key)))
                        for n, v in struct.items()))


def match_groups(src_items, tgt_items, shared, mask_s, mask_t, perm):
    """Two-phase canonical matching of labelled element lists.

    ``src_items``/``tgt_items`` are lists of (label, boundary) pairs;
    returns for every target position the matched source position.
    Raises :class:`CoherenceError` when no well-defined bijection exists.
    """
    groups_s = {}
    for i, (lab, bound) in enumerate(src_items):
        groups_s.setdefault((content_key(mask_s, lab, perm), bound),
                            []).append(i)
    groups_t = {}
    for i, (lab, bound) in enumerate(tgt_items):
        groups_t.setdefault((content_key(mask_t, lab, None), bound),
                            []).append(i)
    if set(groups_s) != set(groups_t):
        raise CoherenceError("no canonical comparison: content/boundary "
                             "classes differ")
    out = [None] * len(tgt_items)
    for key, tis in groups_t.items():
        sis = groups_s[key]
        if len(sis) != len(tis):
            raise CoherenceError("no canonical comparison: class sizes differ "
                                 "at %r" % (key,))
        if len(sis) == 1:
            out[tis[0]] = sis[0]
            continue
        refined = {}
        for si in sis:
            sk = struct_key(mask_s, src_items[si][0], shared)
            if sk in refined:
                raise CoherenceError("no canonical comparison: ambiguous "
                                     "source elements at %r" % (key,))
            refined[sk] = si
        for ti in tis:
            sk = struct_key(mask_t, tgt_items[ti][0], shared)
            if sk not in refined:
                raise CoherenceError("no canonical comparison: unmatched "
                                     "target element at %r" % (key,))
            out[ti] = refined.pop(sk)
    return out


class FrobMonoidale:
    """A computable naturally Frobenius map-monoidale over a backend.

    Holds the multiplication/unit 1-cells, their right adjoints, the four
    adjunction 2-cells, and backend capability data.  All downstream
    constructions (duoidal products, duality, Hopf diagnostics) take one
    of these as their context.  Instances are immutable after the backend
    factory finishes filling them in.
    """

    def __init__(self, backend):
        self.backend = backend
        self._eval_cache = {}
        self.m = None        # Chain M^2 -> M
        self.u = None        # Chain I -> M
        self.mstar = None    # Chain M -> M^2
        self.ustar = None    # Chain M -> I
        self.eta_m = None    # TwoCell 1_{M^2} -> m*.m
        self.eps_m = None    # TwoCell m.m*   -> 1_M
        self.eta_u = None    # TwoCell 1_I    -> u*.u
        self.eps_u = None    # TwoCell u.u*   -> 1_M
        self.well_pointed = None   # Chain I -> M or None
        self.idempotents_split = True

    def eval_chain(self, chain):
        key = (chain.dom, chain.layers)
        cached = self._eval_cache.get(key)
        if cached is None:
            if not chain.layers:
                cached = self.backend.id_cell(chain.dom)
            else:
                cached = chain.layers[0]
                for cell in chain.layers[1:]:
                    cached = self.backend.compose_cells(cached, cell)
            self._eval_cache[key] = cached
        return cached

    def atom(self, cell):
        """Wrap a single backend cell as a chain."""
        return Chain(self, cell.dom, cell.cod, (cell,))
