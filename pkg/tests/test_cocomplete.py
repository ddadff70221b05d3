import numpy as np
import pytest

from vapprox.cocomplete import (J_S, cocompleteness_report, is_cocontinuous_functor,
                                is_J_cocomplete, presheaf_sup, pushforward, sup_data,
                                sup_functor, supremum)
from vapprox.continuity import is_cocontinuous_dist
from vapprox.dist import Distributor
from vapprox.ideals import (ALL, ORDER_IDEAL, IdealClass, build_JX, enumerate_copresheaves,
                            enumerate_presheaves, presheaf_category)
from vapprox.laws import generators as gen
from vapprox.quantale import lukasiewicz, two
from vapprox.vcat import VCategory, VFunctor, enumerate_functors, validate_vfunctor

from oracles import poset_join, scott_open_oracle, subsets

POSETS4 = [le for n in range(1, 5) for le in gen.gen_poset(n)]
SMALL = gen.enumerate_vcategories(two(), 3) + gen.enumerate_vcategories(lukasiewicz(2), 2) \
    + gen.enumerate_vcategories(lukasiewicz(4), 2)


def _eq1_witnesses(X, phi):
    """Objects s with X(s, x') = meet_x hom(phi x, X(x, x')) for every x', by loops."""
    q = X.quantale
    n = len(X)
    out = []
    for s in range(n):
        ok = True
        for x2 in range(n):
            h = q.top
            for x in range(n):
                h = q.meet[h, q.hom[phi[x], X.structure[x, x2]]]
            ok &= X.structure[s, x2] == h
        if ok:
            out.append(s)
    return out


def test_representables_have_their_object_as_supremum():
    for X in SMALL:
        for x in range(len(X)):
            assert x in supremum(X, X.structure[:, x]).witnesses


def test_supremum_matches_formula_scan():
    for X in SMALL:
        for p in enumerate_presheaves(X):
            assert list(supremum(X, p).witnesses) == _eq1_witnesses(X, p)


def test_boolean_suprema_are_joins():
    B = two()
    for le in POSETS4:
        X = gen.poset_category(le, B)
        L = le.tolist()
        for p in enumerate_presheaves(X):
            D = [i for i in range(len(le)) if p[i]]
            j = poset_join(L, D)
            w = supremum(X, p).witnesses
            assert (list(w) == [j]) if j is not None else w == ()


def test_chain_and_antichain_examples(chain2, antichain2):
    assert supremum(chain2, [1, 1]).witnesses == (1,)
    assert not supremum(antichain2, [1, 1]).exists
    assert is_J_cocomplete(chain2, ALL)
    assert not is_J_cocomplete(antichain2, ALL)
    js = {tuple(r) for r in J_S(antichain2, ALL).members}
    # neither the empty nor the full presheaf has a supremum
    assert js == {(0, 1), (1, 0)}


def test_cocomplete_means_js_is_jx():
    for X in SMALL:
        sd = sup_data(X, ALL)
        assert sd.cocomplete == (len(sd.JS) == len(sd.J))
        reps = {tuple(c) for c in X.structure.T}
        assert reps <= {tuple(r) for r in sd.JS.members}


def test_finite_posets_are_order_cocomplete():
    B = two()
    for le in POSETS4:
        assert is_J_cocomplete(gen.poset_category(le, B), ORDER_IDEAL)


def test_representables_class_is_always_cocomplete():
    cls = IdealClass("custom", name="representables")
    for X in SMALL:
        assert is_J_cocomplete(X, cls)


def test_sup_is_a_functor_and_inverts_yoneda():
    for X in SMALL:
        f = sup_functor(X)
        assert validate_vfunctor(f).ok
    cls = IdealClass("custom", name="representables")
    B = two()
    for le in POSETS4:
        X = gen.poset_category(le, B)
        f = sup_functor(X, cls)
        JS = J_S(X, cls)
        for x in range(len(X)):
            assert f.mapping[JS.lookup(X.structure[:, x])] == x


def test_presheaf_sup_is_union_and_matches_scan():
    for X in SMALL[:20]:
        J = presheaf_category(X)
        K = J.category
        for k in range(len(J)):
            # representable at phi
            assert presheaf_sup(J, K.structure[:, k]).tolist() == J.members[k].tolist()
        for Psi in enumerate_presheaves(K)[:40]:
            s = presheaf_sup(J, Psi)
            w = supremum(K, Psi).witnesses
            assert len(w) == 1 and J.members[w[0]].tolist() == s.tolist()
            if X.quantale.display == "two":
                union = np.zeros(len(X), dtype=int)
                for k, v in enumerate(Psi):
                    if v:
                        union |= J.members[k]
                assert s.tolist() == union.tolist()


def test_report_shape(antichain2):
    rep = cocompleteness_report(antichain2, ALL)
    assert rep["cocomplete"] is False
    missing = [p for p in rep["presheaves"] if not p["witnesses"]]
    assert [p["presheaf"] for p in missing] == [["bot", "bot"], ["top", "top"]]


def _preserves_existing_joins(le_x, le_y, f, downsets):
    for D in downsets:
        j = poset_join(le_x, D)
        if j is None:
            continue
        img = sorted({f[d] for d in D})
        jy = poset_join(le_y, img)
        if jy is not None and jy != f[j]:
            return False
    return True


def _downsets(le):
    n = len(le)
    return [D for D in subsets(range(n))
            if not any(le[y][x] and y not in D for x in D for y in range(n))]


def test_cocontinuous_functors_between_posets():
    B = two()
    posets = [le for n in range(1, 4) for le in gen.gen_poset(n)]
    for lx in posets:
        X = gen.poset_category(lx, B)
        Lx = lx.tolist()
        downs = _downsets(Lx)
        directed = [D for D in downs if D and all(
            any(Lx[a][c] and Lx[b][c] for c in D) for a in D for b in D)]
        for ly in posets:
            Y = gen.poset_category(ly, B)
            for row in enumerate_functors(X, Y):
                f = VFunctor(X, Y, row)
                assert is_cocontinuous_functor(f, ALL) == \
                    _preserves_existing_joins(Lx, ly.tolist(), row, downs)
                assert is_cocontinuous_functor(f, ORDER_IDEAL) == \
                    _preserves_existing_joins(Lx, ly.tolist(), row, directed)


def test_constant_maps_on_the_chain(chain2):
    assert is_cocontinuous_functor(VFunctor(chain2, chain2, ["0", "1"]))
    # the empty presheaf has supremum 0; only the constant map to 1 moves it
    assert is_cocontinuous_functor(VFunctor(chain2, chain2, ["0", "0"]))
    assert not is_cocontinuous_functor(VFunctor(chain2, chain2, ["1", "1"]))


def test_pushforward_along_identity(chain2):
    f = VFunctor(chain2, chain2, [0, 1])
    for p in enumerate_presheaves(chain2):
        assert pushforward(f, p).tolist() == p.tolist()


def _join_inaccessible(le, U, family):
    for D in family:
        j = poset_join(le, D)
        if j is not None and j in U and not set(D) & set(U):
            return False
    return True


def test_cocontinuous_copresheaves_are_scott_open():
    B = two()
    for n in range(1, 6):
        for le in gen.gen_poset(n):
            X = gen.poset_category(le, B)
            L = le.tolist()
            one = VCategory.unit_category(B)
            downs = _downsets(L)
            for c in enumerate_copresheaves(X):
                v = Distributor(one, X, c[None, :])
                U = [i for i in range(n) if c[i]]
                assert is_cocontinuous_dist(v, ORDER_IDEAL) == scott_open_oracle(L, U)
                assert is_cocontinuous_dist(v, ALL) == _join_inaccessible(L, U, downs)


def test_bottom_distributor_is_cocontinuous():
    for X in SMALL[:20]:
        v = Distributor(X, X, np.full((len(X), len(X)), X.quantale.bottom))
        assert is_cocontinuous_dist(v, ALL)
