"""Model constructors: the bimonoid corpus used by tests and diagnostics.

Span-backed bimonoids are finite categories with a fixed object set;
graded-backed ones are bialgebras given by structure constants (group
and monoid algebras, the 4-dimensional non-commutative example) and
linearized finite categories over a multi-object base.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import idc, id2, Chain
from .duoidal import (bullet, circ, unit_i, unit_j, bullet_unit_left,
                      interchange_unit_j, interchange_unit_i, counit_j)
from .bimonoid import Bimonoid, validate_bimonoid
from .errors import ValidationError
from .spanback import frobenius_monoidale
from .gvecback import frobenius_commutative, graded_cell


# -- finite categories ------------------------------------------------------

@dataclass(frozen=True)
class FiniteCategory:
    """Objects, named morphisms, identity assignment, composition table.

    ``compose[(f, g)]`` is the composite "f then g", defined exactly for
    the composable pairs.
    """

    objects: tuple
    morphisms: tuple          # (name, src, tgt) triples
    identities: dict          # object -> morphism name
    compose: dict             # (f_name, g_name) -> name of "f then g"

    def src(self, f):
        return self._by_name[f][1]

    def tgt(self, f):
        return self._by_name[f][2]

    @property
    def _by_name(self):
        return {name: (name, s, t) for name, s, t in self.morphisms}


def validate_category(cat):
    by_name = cat._by_name
    for ob in cat.objects:
        ident = cat.identities.get(ob)
        if ident is None or ident not in by_name:
            raise ValidationError("missing identity for object %r" % (ob,),
                                  (ob,))
        if by_name[ident][1] != ob or by_name[ident][2] != ob:
            raise ValidationError("identity of %r has wrong endpoints" % (ob,),
                                  (ob, ident))
    for name, s, t in cat.morphisms:
        if s not in cat.objects or t not in cat.objects:
            raise ValidationError("morphism %r has unknown endpoints" % name,
                                  (name,))
    for (f, g), h in cat.compose.items():
        if cat.tgt(f) != cat.src(g):
            raise ValidationError("composite defined for non-composable pair",
                                  (f, g))
        if h not in by_name or cat.src(h) != cat.src(f) \
                or cat.tgt(h) != cat.tgt(g):
            raise ValidationError("composite %r of (%r, %r) ill-typed"
                                  % (h, f, g), (f, g, h))
    for name, s, t in cat.morphisms:
        for name2, s2, t2 in cat.morphisms:
            if t == s2 and (name, name2) not in cat.compose:
                raise ValidationError("missing composite", (name, name2))
        if cat.compose[(cat.identities[s], name)] != name or \
                cat.compose[(name, cat.identities[t])] != name:
            raise ValidationError("identity law fails", (name,))
    for f, sf, tf in cat.morphisms:
        for g, sg, tg in cat.morphisms:
            if tf != sg:
                continue
            for h, sh, th in cat.morphisms:
                if tg != sh:
                    continue
                left = cat.compose[(cat.compose[(f, g)], h)]
                right = cat.compose[(f, cat.compose[(g, h)])]
                if left != right:
                    raise ValidationError("associativity fails",
                                          (f, g, h))
    return True


def groupoid_oracle(cat):
    """Brute-force check that every morphism has a two-sided inverse."""
    for f, s, t in cat.morphisms:
        ok = False
        for g, s2, t2 in cat.morphisms:
            if s2 != t or t2 != s:
                continue
            if cat.compose[(f, g)] == cat.identities[s] and \
                    cat.compose[(g, f)] == cat.identities[t]:
                ok = True
                break
        if not ok:
            return False
    return True


def category_bimonoid(cat, ctx=None):
    """The category as a bimonoid in the span backend over its objects."""
    validate_category(cat)
    if ctx is None:
        ctx = frobenius_monoidale(cat.objects)
    be = ctx.backend
    a = ctx.atom(be.atomic_cell(
        "a", [(name, (s,), (t,)) for name, s, t in cat.morphisms], 1, 1))
    aa = circ(a, a)
    delta = be.make_two_cell(
        a, aa, lambda lab: (("a", cat.compose[(lab[0][1], lab[1][1])]),))
    eps = be.make_two_cell(
        a, unit_i(ctx), lambda lab: (("a", cat.identities[lab[0][1][0]]),))
    conv = bullet(a, a)
    atot = a.total

    def mu_fn(lab):
        name = lab[0][1]
        _, dl, cl = atot.elements[atot.index[((("a", name)),)]]
        return (("m*", dl[0]), ("a", name), ("a", name), ("m", cl[0]))

    mu = be.make_two_cell(conv, a, mu_fn)
    eta = be.make_two_cell(
        unit_j(ctx), a,
        lambda lab: (("u*", cat.src(lab[0][1])), ("u", cat.tgt(lab[0][1]))))
    b = Bimonoid(a, mu, eta, delta, eps, name="cat")
    validate_bimonoid(b)
    return b


# -- standard categories -----------------------------------------------------

def discrete_category(objects):
    morphs = tuple(("id_%s" % o, o, o) for o in objects)
    idents = {o: "id_%s" % o for o in objects}
    comp = {("id_%s" % o, "id_%s" % o): "id_%s" % o for o in objects}
    return FiniteCategory(tuple(objects), morphs, idents, comp)


def walking_arrow():
    morphs = (("id_0", 0, 0), ("id_1", 1, 1), ("t", 0, 1))
    idents = {0: "id_0", 1: "id_1"}
    comp = {("id_0", "id_0"): "id_0", ("id_1", "id_1"): "id_1",
            ("id_0", "t"): "t", ("t", "id_1"): "t"}
    return FiniteCategory((0, 1), morphs, idents, comp)


def group_as_category(table, unit):
    """A group (or monoid) composition table as a one-object category."""
    elems = sorted(table)
    morphs = tuple((g, 0, 0) for g in elems)
    idents = {0: unit}
    comp = {(g, h): table[g][h] for g in elems for h in elems}
    return FiniteCategory((0,), morphs, idents, comp)


def cyclic_group_table(k):
    """Z_k with elements g0..g(k-1)."""
    return {"g%d" % i: {"g%d" % j: "g%d" % ((i + j) % k) for j in range(k)}
            for i in range(k)}


def sym3_table():
    """S_3 as permutations of (0,1,2) in one-line notation names."""
    import itertools
    perms = list(itertools.permutations(range(3)))
    name = {p: "p" + "".join(map(str, p)) for p in perms}

    def mul(p, q):
        # apply p first, then q
        return tuple(q[p[i]] for i in range(3))

    return {name[p]: {name[q]: name[mul(p, q)] for q in perms}
            for p in perms}, name[(0, 1, 2)]


def functions_category(sets):
    """The category of all functions between the given finite sets.

    Guaranteed associative; the corpus generator carves random
    subcategories out of it.
    """
    objects = tuple(range(len(sets)))
    morphs = []
    comp = {}
    fn_by_name = {}
    for i, dom in enumerate(sets):
        for j, cod in enumerate(sets):
            for fn in product(range(len(cod)), repeat=len(dom)):
                nm = "f%d%d_%s" % (i, j, "".join(map(str, fn)))
                morphs.append((nm, i, j))
                fn_by_name[nm] = (i, j, fn)
    idents = {}
    for i, dom in enumerate(sets):
        idents[i] = "f%d%d_%s" % (i, i, "".join(map(str, range(len(dom)))))
    for nm1, (i, j, f1) in fn_by_name.items():
        for nm2, (j2, k, f2) in fn_by_name.items():
            if j != j2:
                continue
            comp_fn = tuple(f2[f1[x]] for x in range(len(sets[i])))
            comp[(nm1, nm2)] = "f%d%d_%s" % (i, k, "".join(map(str, comp_fn)))
    return FiniteCategory(objects, tuple(morphs), idents, comp)


def subcategory_closure(cat, generators, cap=12):
    """Close a morphism set under composition (with identities); None if
    the closure exceeds ``cap`` morphisms."""
    morphs = set(cat.identities.values()) | set(generators)
    changed = True
    while changed:
        changed = False
        for f in sorted(morphs):
            for g in sorted(morphs):
                if cat.tgt(f) == cat.src(g):
                    h = cat.compose[(f, g)]
                    if h not in morphs:
                        morphs.add(h)
                        changed = True
        if len(morphs) > cap:
            return None
    by_name = cat._by_name
    keep_objects = tuple(cat.objects)
    morphisms = tuple(sorted(by_name[f] for f in morphs))
    comp = {(f, g): h for (f, g), h in cat.compose.items()
            if f in morphs and g in morphs}
    return FiniteCategory(keep_objects, morphisms, cat.identities, comp)


def random_category(rng, max_objects=3, cap=12):
    """A random finite category, valid by construction.

    Mixes three families: closures of random functions between small
    sets, permutation-generated one-object groupoids, and small cyclic
    groups; roughly half the output is a groupoid.
    """
    style = rng.randrange(3)
    if style == 0:
        k = rng.choice([1, 2, 3, 4, 6])
        return group_as_category(cyclic_group_table(k), "g0")
    if style == 1:
        nobj = rng.randrange(1, max_objects + 1)
        sets = [list(range(rng.randrange(1, 3))) for _ in range(nobj)]
        amb = functions_category(sets)
        names = [m[0] for m in amb.morphisms]
        gens = [rng.choice(names) for _ in range(rng.randrange(1, 4))]
        sub = subcategory_closure(amb, gens, cap)
        if sub is not None:
            return sub
        return discrete_category(tuple(range(nobj)))
    nobj = rng.randrange(1, max_objects + 1)
    return discrete_category(tuple(range(nobj)))


# -- graded bialgebras -------------------------------------------------------

def bialgebra_bimonoid(ctx, name, grades, mu, eta, delta, eps, validate=True):
    """Bimonoid from structure constants over a graded preset.

    ``grades``: list assigning each basis index its (out, in) grade pair
    (symbols of the backend alphabet).  ``mu``: dict (i, j, k) ->
    coefficient of e_k in e_i • e_j.  ``eta``: dict i -> coefficient of
    e_i in the image of the convolution unit.  ``delta``: dict
    (i, j, k) -> coefficient of e_j ⊗ e_k (e_j the first composition
    factor) in the comultiplication of e_i.  ``eps``: dict i ->
    counit coefficient.
    """
    be = ctx.backend
    dims = {}
    index_at = {}
    for i, (r, c) in enumerate(grades):
        g = ((r,), (c,))
        index_at[i] = (g, dims.get(g, 0))
        dims[g] = dims.get(g, 0) + 1
    a = graded_cell(ctx, name, dims)
    pos_to_i = {v: k for k, v in index_at.items()}

    def basis_index(comp):
        return pos_to_i[((comp[1], comp[2]), comp[3])]

    def contents(cell, lab):
        return [c for c, keep in zip(lab, cell.mask) if keep]

    conv = bullet(a, a)

    def mu_entry(g, tl, sl):
        ci, cj = contents(conv.total, sl)
        k = basis_index(tl[0])
        return mu.get((basis_index(ci), basis_index(cj), k), 0)

    mu2 = be.two_cell_fn(conv, a, mu_entry)

    def eta_entry(g, tl, sl):
        return eta.get(basis_index(tl[0]), 0)

    eta2 = be.two_cell_fn(unit_j(ctx), a, eta_entry)
    aa = circ(a, a)

    def delta_entry(g, tl, sl):
        cj, ck = contents(aa.total, tl)
        return delta.get((basis_index(sl[0]), basis_index(cj),
                          basis_index(ck)), 0)

    delta2 = be.two_cell_fn(a, aa, delta_entry)

    def eps_entry(g, tl, sl):
        return eps.get(basis_index(sl[0]), 0)

    eps2 = be.two_cell_fn(a, unit_i(ctx), eps_entry)
    b = Bimonoid(a, mu2, eta2, delta2, eps2, name=name)
    if validate:
        validate_bimonoid(b)
    return b


def monoid_algebra(table, unit, ctx=None, name="QM"):
    """Monoid algebra over the rationals with grouplike comultiplication."""
    if ctx is None:
        ctx = frobenius_commutative(1)
    elems = sorted(table)
    idx = {g: i for i, g in enumerate(elems)}
    grades = [(0, 0)] * len(elems)
    mu = {(idx[g], idx[h], idx[table[g][h]]): 1 for g in elems for h in elems}
    eta = {idx[unit]: 1}
    delta = {(i, i, i): 1 for i in range(len(elems))}
    eps = {i: 1 for i in range(len(elems))}
    return bialgebra_bimonoid(ctx, name, grades, mu, eta, delta, eps)


def group_algebra(table, unit, ctx=None, name="QG"):
    """Group algebra; same data as :func:`monoid_algebra`, group table."""
    return monoid_algebra(table, unit, ctx=ctx, name=name)


def idempotent_monoid_algebra(ctx=None):
    """Q{1, e} with e idempotent: a bialgebra without convolution inverse."""
    table = {"1": {"1": "1", "e": "e"}, "e": {"1": "e", "e": "e"}}
    return monoid_algebra(table, "1", ctx=ctx, name="Qe")


def sweedler(ctx=None):
    """The 4-dimensional bialgebra with basis 1, g, x, gx.

    Relations: g*g = 1, x*x = 0, x*g = -g*x; the comultiplication sends
    x to x⊗1 + g⊗x.
    """
    if ctx is None:
        ctx = frobenius_commutative(1)
    one, g, x, gx = range(4)
    mu = {
        (one, one, one): 1, (one, g, g): 1, (one, x, x): 1, (one, gx, gx): 1,
        (g, one, g): 1, (g, g, one): 1, (g, x, gx): 1, (g, gx, x): 1,
        (x, one, x): 1, (x, g, gx): -1,
        (gx, one, gx): 1, (gx, g, x): -1,
    }
    eta = {one: 1}
    delta = {(one, one, one): 1, (g, g, g): 1,
             (x, x, one): 1, (x, g, x): 1,
             (gx, gx, g): 1, (gx, one, gx): 1}
    eps = {one: 1, g: 1}
    return bialgebra_bimonoid(ctx, "sweedler", [(0, 0)] * 4,
                              mu, eta, delta, eps)


def linearized_category(cat, ctx=None, name="lincat"):
    """The category algebra as a bimonoid over the multi-object base.

    Base alphabet = objects; an arrow x -> y spans grade (y, x);
    convolution multiplies parallel arrows pointwise, the unit sums each
    hom-set, comultiplication sums over factorizations, and the counit
    picks out identities.
    """
    validate_category(cat)
    if ctx is None:
        ctx = frobenius_commutative(len(cat.objects))
    obj_idx = {o: i for i, o in enumerate(cat.objects)}
    arrows = [name_ for name_, _, _ in cat.morphisms]
    idx = {f: i for i, f in enumerate(arrows)}
    grades = [(obj_idx[cat.tgt(f)], obj_idx[cat.src(f)]) for f in arrows]
    mu = {(i, i, i): 1 for i in range(len(arrows))}
    eta = {i: 1 for i in range(len(arrows))}
    delta = {}
    for (f, g), h in cat.compose.items():
        # h = f then g ; first composition factor is f
        delta[(idx[h], idx[f], idx[g])] = \
            delta.get((idx[h], idx[f], idx[g]), 0) + 1
    eps = {idx[ident]: 1 for ident in cat.identities.values()}
    return bialgebra_bimonoid(ctx, name, grades, mu, eta, delta, eps)


# -- trivial bialgebras ------------------------------------------------------

def trivial_compose_unit(ctx):
    """The composition unit i as a bimonoid."""
    i = unit_i(ctx)
    return Bimonoid(i, interchange_unit_i(ctx), counit_j(ctx),
                    id2(i), id2(i), name="i")


def trivial_conv_unit(ctx):
    """The convolution unit j as a bimonoid."""
    j = unit_j(ctx)
    return Bimonoid(j, bullet_unit_left(j), id2(j),
                    interchange_unit_j(ctx), counit_j(ctx), name="j")


# -- seeded corpus -----------------------------------------------------------

def corpus_categories(count, seed):
    """Deterministic list of valid finite categories."""
    import random
    rng = random.Random(seed)
    out = [discrete_category((0,)), discrete_category((0, 1)),
           walking_arrow(),
           group_as_category(cyclic_group_table(2), "g0"),
           group_as_category(cyclic_group_table(3), "g0")]
    while len(out) < count:
        out.append(random_category(rng))
    return out[:count]
