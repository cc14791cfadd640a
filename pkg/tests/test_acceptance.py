"""Acceptance criteria: exact, oracle-backed, one pass/fail line each."""

import random
from fractions import Fraction

import pytest

from hopfcheck import models as M, hopf as H, transform as T, dualizer as DU
from hopfcheck import duoidal as D, laws as L, linalg
from hopfcheck.bimonoid import (cofree_right_comodule, free_right_module,
                                tensor_right_comodules)
from hopfcheck.core import (id2, idc, invert2, invert2_strict, two_cells_equal,
                            comparison, vcompose2, Witness)
from hopfcheck.diagnose import diagnose, random_endocell
from hopfcheck.duoidal import bullet, bullet2, circ2, bullet_assoc, unit_i
from hopfcheck.gvecback import frobenius_commutative, frobenius_weak
from hopfcheck.spanback import frobenius_monoidale


def _report(num, ok, text):
    print("ACCEPTANCE %2d: %s - %s" % (num, "PASS" if ok else "FAIL", text))
    assert ok, "acceptance criterion %d failed: %s" % (num, text)


def corpus_bimonoids():
    """The fixed bimonoid corpus used by several criteria."""
    span2 = frobenius_monoidale((0, 1))
    comm1 = frobenius_commutative(1)
    out = [
        M.trivial_compose_unit(span2),
        M.trivial_conv_unit(span2),
        M.trivial_compose_unit(comm1),
        M.trivial_conv_unit(comm1),
        M.category_bimonoid(M.group_as_category(M.cyclic_group_table(2),
                                                "g0")),
        M.category_bimonoid(M.group_as_category(M.cyclic_group_table(3),
                                                "g0")),
        M.category_bimonoid(M.walking_arrow()),
        M.category_bimonoid(M.discrete_category((0, 1))),
        M.group_algebra(M.cyclic_group_table(2), "g0", name="QZ2"),
        M.group_algebra(M.cyclic_group_table(3), "g0", name="QZ3"),
        M.idempotent_monoid_algebra(),
        M.sweedler(),
        M.linearized_category(M.walking_arrow(), name="lin-walking"),
        M.linearized_category(
            M.group_as_category(M.cyclic_group_table(2), "g0"),
            name="lin-Z2"),
    ]
    return out


def test_01_groupoid_characterization():
    cats = M.corpus_categories(200, seed=11)
    disagreements = 0
    for cat in cats:
        b = M.category_bimonoid(cat)
        rep = diagnose(b, samples=0, seed=0, exact_only=True)
        if rep.exact_hold() != M.groupoid_oracle(cat):
            disagreements += 1
    _report(1, disagreements == 0,
            "diagnose (a,b,c) matches the inverse-search oracle on 200 "
            "categories, %d disagreements" % disagreements)


def test_02_exact_verdicts_consistent():
    ok = True
    for b in corpus_bimonoids():
        rep = diagnose(b, samples=0, seed=0, exact_only=True)
        st = {rep.verdicts[c]["status"]
              for c in ("antipode", "hopf_map", "cohopf_map")}
        ok &= len(st) == 1
    _report(2, ok, "antipode/Hopf/co-Hopf verdicts identical on the corpus")


def test_03_transform_of_hopf_map_is_identity():
    ok = True
    for b in corpus_bimonoids():
        ok &= two_cells_equal(T.transform(b, H.hopf_map(b)), id2(b.cell))
    _report(3, ok, "the transform of the Hopf map is the identity cell")


def _classical_convolution_antipode(dim, mu, delta, eta, eps):
    """Independent oracle: solve both convolution-inverse equations."""
    rows, rhs = [], []
    unit = [Fraction(0)] * dim
    for i, c in eta.items():
        unit[i] = Fraction(c)
    for i in range(dim):
        for t in range(dim):
            row = [Fraction(0)] * (dim * dim)
            for (ii, jj, kk), dc in delta.items():
                if ii != i:
                    continue
                for s in range(dim):
                    mc = mu.get((s, kk, t))
                    if mc:
                        row[s * dim + jj] += Fraction(dc) * Fraction(mc)
            rows.append(tuple(row))
            rhs.append(Fraction(eps.get(i, 0)) * unit[t])
    for i in range(dim):
        for t in range(dim):
            row = [Fraction(0)] * (dim * dim)
            for (ii, jj, kk), dc in delta.items():
                if ii != i:
                    continue
                for s in range(dim):
                    mc = mu.get((jj, s, t))
                    if mc:
                        row[s * dim + kk] += Fraction(dc) * Fraction(mc)
            rows.append(tuple(row))
            rhs.append(Fraction(eps.get(i, 0)) * unit[t])
    sol = linalg.solve_all(tuple(rows), tuple(rhs))
    if sol is None:
        return None
    x0, kernel = sol
    assert not kernel, "convolution inverse not unique"
    return tuple(tuple(x0[s * dim + j] for j in range(dim))
                 for s in range(dim))


def _group_algebra_data(table, unit):
    elems = sorted(table)
    idx = {g: i for i, g in enumerate(elems)}
    mu = {(idx[g], idx[h], idx[table[g][h]]): 1
          for g in elems for h in elems}
    eta = {idx[unit]: 1}
    delta = {(i, i, i): 1 for i in range(len(elems))}
    eps = {i: 1 for i in range(len(elems))}
    return len(elems), mu, delta, eta, eps, elems, idx


def test_04_antipode_against_convolution_solver():
    cases = []
    for name, table, unit in [("QZ2", M.cyclic_group_table(2), "g0"),
                              ("QZ3", M.cyclic_group_table(3), "g0"),
                              ("QS3",) + M.sym3_table()]:
        dim, mu, delta, eta, eps, elems, idx = _group_algebra_data(table,
                                                                   unit)
        b = M.group_algebra(table, unit, name=name)
        sig = T.antipode_solve(b)["antipode"]
        mat = vcompose2(comparison(DU.dualize(b.cell), b.cell),
                        sig).data.d[((0,), (0,))]
        oracle = _classical_convolution_antipode(dim, mu, delta, eta, eps)
        cases.append(mat == oracle)
        # group algebras: the antipode is the linearized inversion
        inv_ok = True
        for g in elems:
            ginv = next(h for h in elems if table[g][h] == unit)
            col = [mat[r][idx[g]] for r in range(dim)]
            expect = [Fraction(1) if r == idx[ginv] else Fraction(0)
                      for r in range(dim)]
            inv_ok &= col == expect
        cases.append(inv_ok)
    # Sweedler: oracle match plus order four
    bs = M.sweedler()
    sw_mu = {(0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 1, (0, 3, 3): 1,
             (1, 0, 1): 1, (1, 1, 0): 1, (1, 2, 3): 1, (1, 3, 2): 1,
             (2, 0, 2): 1, (2, 1, 3): -1,
             (3, 0, 3): 1, (3, 1, 2): -1}
    sw_delta = {(0, 0, 0): 1, (1, 1, 1): 1, (2, 2, 0): 1, (2, 1, 2): 1,
                (3, 3, 1): 1, (3, 0, 3): 1}
    oracle = _classical_convolution_antipode(4, sw_mu, sw_delta, {0: 1},
                                             {0: 1, 1: 1})
    sig = T.antipode_solve(bs)["antipode"]
    s1 = vcompose2(comparison(DU.dualize(bs.cell), bs.cell), sig)
    mat = s1.data.d[((0,), (0,))]
    cases.append(mat == oracle)
    s2 = vcompose2(s1, s1)
    cases.append(not two_cells_equal(s2, id2(bs.cell)))
    cases.append(two_cells_equal(vcompose2(s2, s2), id2(bs.cell)))
    _report(4, all(cases),
            "transform antipodes equal the convolution-inverse solver "
            "entry-for-entry (QZ2, QZ3, QS3, 4-dim); order-four law holds")


def test_05_negative_instances_fail_with_replayable_witnesses():
    ok = True
    for b in [M.idempotent_monoid_algebra(),
              M.category_bimonoid(M.walking_arrow())]:
        rep = diagnose(b, samples=2, seed=1)
        ok &= all(v["status"] == "fails" for v in rep.verdicts.values())
        ok &= bool(rep.witnesses)
        ok &= all(w.replay() for w in rep.witnesses)
    _report(5, ok, "both negative instances fail every condition with "
            "replayable witnesses")


def test_06_trivial_bialgebra_antipodes():
    ok = True
    for ctx in [frobenius_monoidale((0, 1)), frobenius_monoidale((0, 1, 2)),
                frobenius_commutative(1), frobenius_commutative(2)]:
        bi = M.trivial_compose_unit(ctx)
        ok &= two_cells_equal(T.antipode_solve(bi)["antipode"],
                              DU.unit_compose_iso(ctx))
        bj = M.trivial_conv_unit(ctx)
        ok &= two_cells_equal(T.antipode_solve(bj)["antipode"],
                              DU.unit_conv_iso(ctx))
    _report(6, ok, "trivial bialgebras have the unit duality isos as "
            "antipodes in both backends")


def test_07_antipode_anti_homomorphism():
    ok = True
    for b in corpus_bimonoids():
        res = T.antipode_solve(b)
        if "antipode" not in res:
            continue
        ok &= all(T.antipode_morphism_check(b, res["antipode"]).values())
    _report(7, ok, "all four (co)monoid-morphism equalities hold for every "
            "corpus antipode")


def test_08_diagram_suites():
    from hopfcheck.spanback import random_cell as sp_rand
    from hopfcheck.gvecback import random_cell as gv_rand
    rng = random.Random(17)
    ok = True
    rows = [(frobenius_monoidale((0, 1)), sp_rand, {"max_size": 5}, 10),
            (frobenius_monoidale((0, 1, 2)), sp_rand, {"max_size": 4}, 10),
            (frobenius_commutative(1), gv_rand, {"max_total": 3}, 10),
            (frobenius_commutative(2), gv_rand, {"max_total": 3}, 10)]
    for ctx, rand, kw, count in rows:
        for t in range(count):
            f, g, h, k = (rand(ctx, rng, "c%d%d" % (t, i), **kw)
                          for i in range(4))
            ok &= L.check_pairing_left_compat(f, g, h, k)
            ok &= L.check_pairing_right_compat(f, g, h, k)
            ok &= L.check_mixed_pairing_left(f, g, h, k)
            ok &= L.check_mixed_pairing_counit(f, g, h)
    hopfs = [b for b in corpus_bimonoids()
             if "antipode" in T.antipode_solve(b)]
    for b in hopfs:
        ok &= L.check_hopf_duality(b)
        sig = T.antipode_solve(b)["antipode"]
        ok &= L.check_inverse_pair_conv(b, b, b, id2(b.cell), sig,
                                        id2(b.cell), sig)
        ok &= L.check_inverse_pair_comp(b, b, b, id2(b.cell), sig,
                                        id2(b.cell), sig)
    _report(8, ok, "pairing compatibility, mixed-pairing, Hopf-duality and "
            "both inverse-pair diagrams commute on seeded instances")


def test_09_trivial_cotrivial_equivalence():
    ctx = frobenius_commutative(2)
    rng = random.Random(23)
    ok = True
    cells = [random_endocell(ctx, rng, "t%d" % k, max_total=2)
             for k in range(10)]
    for x in cells:
        ok &= not isinstance(invert2(H.trivial_unit_component(ctx, x)),
                             Witness)
        ok &= not isinstance(invert2(H.trivial_counit_component(ctx, x)),
                             Witness)
    bj = M.trivial_conv_unit(ctx)
    for k in range(10):
        y1 = random_endocell(ctx, rng, "p%d" % k, max_total=2)
        y2 = random_endocell(ctx, rng, "q%d" % k, max_total=2)
        y3 = random_endocell(ctx, rng, "r%d" % k, max_total=2)
        c1, c2, c3 = (cofree_right_comodule(bj, y) for y in (y1, y2, y3))
        cell = H.strong_monoidal_binary(ctx, c1, c2)
        ok &= not isinstance(invert2(cell), Witness)
        # associativity of the binary structure cell
        c23 = tensor_right_comodules(c2, c3)
        c12 = tensor_right_comodules(c1, c2)
        i = unit_i(ctx)
        p, p2, p3 = c1.cell, c2.cell, c3.cell
        route1 = vcompose2(
            circ2(id2(bullet(p, i)), H.strong_monoidal_binary(ctx, c2, c3)),
            vcompose2(H.strong_monoidal_binary(ctx, c1, c23),
                      bullet2(bullet_assoc(p, p2, p3), id2(i))))
        route2 = vcompose2(
            circ2(H.strong_monoidal_binary(ctx, c1, c2),
                  id2(bullet(p3, i))),
            H.strong_monoidal_binary(ctx, c12, c3))
        ok &= two_cells_equal(route1, route2)
    _report(9, ok, "unit/counit of the unit-equivalence invertible at 10 "
            "instances each; binary cell invertible and associative")


def test_10_cross_backend_consistency():
    cats = M.corpus_categories(25, seed=29)
    ok = True
    for cat in cats:
        b_span = M.category_bimonoid(cat)
        rep_s = diagnose(b_span, samples=0, seed=0, exact_only=True)
        b_lin = M.linearized_category(cat)
        rep_g = diagnose(b_lin, samples=0, seed=0, exact_only=True)
        ok &= rep_s.exact_hold() == rep_g.exact_hold()
    _report(10, ok, "span and linearized verdicts agree on 25 seeded "
            "categories")


def test_11_foundation_suite():
    from hopfcheck.spanback import random_cell as sp_rand
    from hopfcheck.gvecback import random_cell as gv_rand
    rng = random.Random(31)
    ok = True
    rows = [(frobenius_monoidale((0, 1)), sp_rand, {}, 30),
            (frobenius_monoidale((0, 1, 2)), sp_rand, {"max_size": 6}, 20),
            (frobenius_commutative(1), gv_rand, {"max_total": 3}, 20),
            (frobenius_commutative(2), gv_rand, {}, 20),
            (frobenius_weak(2), gv_rand, {}, 10)]
    for ctx, rand, kw, count in rows:
        ok &= D.check_triangle_identities(ctx)
        ok &= D.check_frobenius(ctx)
        for t in range(count):
            f = rand(ctx, rng, "f%d" % t, **kw)
            ok &= not isinstance(invert2(DU.roundtrip(f)), Witness)
            if t % 2 == 0:
                cells = [rand(ctx, rng, "c%d%d" % (t, k), **kw)
                         for k in range(4)]
                ok &= D.check_interchange_units(cells[0], cells[1])
                ok &= D.check_interchange_assoc(cells[0], cells[1], cells[2],
                                                cells[3], cells[0], cells[1])
    _report(11, ok, "triangles, Frobenius comparisons, interchange "
            "coherence and dual roundtrips pass on random cells")
