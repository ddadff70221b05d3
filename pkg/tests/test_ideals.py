import numpy as np
import pytest

from vapprox.ideals import (ALL, FSW, ORDER_IDEAL, RIGHT_ADJOINT, IdealClass, build_JX,
                            enumerate_distributors, enumerate_presheaves, is_fsw_ideal,
                            is_order_ideal, is_presheaf, is_right_adjoint_presheaf,
                            presheaf_category, register_custom_class, representables,
                            sample_distributors, saturation_check)
from vapprox.dist import Distributor, validate_distributor
from vapprox.laws import generators as gen
from vapprox.quantale import lukasiewicz, two
from vapprox.report import ResourceLimitError, StructureError
from vapprox.vcat import VCategory

from oracles import all_distributors, presheaves_oracle

POSETS4 = [le for n in range(1, 5) for le in gen.gen_poset(n)]
SMALL = gen.enumerate_vcategories(two(), 3) + gen.enumerate_vcategories(lukasiewicz(2), 2) \
    + gen.enumerate_vcategories(lukasiewicz(4), 2)


def _principal(le, x):
    return [bool(le[y, x]) for y in range(len(le))]


def _directed_downset_oracle(le, members):
    S = [i for i, m in enumerate(members) if m]
    if not S:
        return False
    if any(le[y, x] and not members[y] for x in S for y in range(len(le))):
        return False
    return all(any(le[a, c] and le[b, c] for c in S) for a in S for b in S)


@pytest.mark.parametrize("X", SMALL, ids=lambda X: f"{X.quantale.display}-{X.structure.tolist()}")
def test_presheaf_enumeration_matches_oracle(X):
    got = sorted(tuple(r) for r in enumerate_presheaves(X))
    want = sorted(presheaves_oracle(X.quantale, X.structure.tolist()))
    assert got == want
    assert all(is_presheaf(X, p) for p in got)


def test_counts(B, L4, chain2, antichain2):
    for n in range(1, 5):
        assert len(enumerate_presheaves(VCategory.discrete(B, list(range(n))))) == 2 ** n
    assert len(enumerate_presheaves(chain2)) == 3
    assert len(enumerate_presheaves(VCategory.unit_category(L4))) == 5
    assert len(build_JX(chain2, ALL)) == 3
    ords = build_JX(antichain2, ORDER_IDEAL).members
    assert sorted(map(tuple, ords)) == sorted(map(tuple, representables(antichain2)))


def test_members_cover_representables():
    for X in SMALL:
        for cls in (ALL, FSW, RIGHT_ADJOINT):
            J = build_JX(X, cls)
            assert len(J) >= len({tuple(c) for c in X.structure.T})
            assert all(i is not None for i in J.yoneda_indices)


@pytest.mark.parametrize("le", POSETS4, ids=lambda le: gen.canonical_form(le).hex())
def test_order_and_fsw_agree_with_directed_downsets(le, B):
    X = gen.poset_category(le, B)
    for p in enumerate_presheaves(X):
        members = [bool(v) for v in p]
        want = _directed_downset_oracle(le, members)
        assert is_order_ideal(X, p) == want
        assert is_fsw_ideal(X, p, "totally") == want
        assert is_fsw_ideal(X, p, "directed") == want
        principal = any(members == _principal(le, x) for x in range(len(le)))
        assert is_right_adjoint_presheaf(X, p) == principal


def test_empty_presheaf_is_no_ideal(chain2):
    assert not is_order_ideal(chain2, [0, 0])
    assert not is_fsw_ideal(chain2, [0, 0])
    assert not is_right_adjoint_presheaf(chain2, [0, 0])


def test_union_of_incomparable_principals_is_not_directed(antichain2):
    assert not is_order_ideal(antichain2, [1, 1])


def test_representables_are_fsw_and_right_adjoint():
    for X in SMALL:
        for r in representables(X):
            assert is_fsw_ideal(X, r)
            assert is_right_adjoint_presheaf(X, r)


def test_order_ideals_need_two(L4):
    X = VCategory.unit_category(L4)
    with pytest.raises(StructureError):
        ORDER_IDEAL.mask(X, enumerate_presheaves(X))


def test_yoneda_lemma():
    for X in SMALL:
        hat = presheaf_category(X)
        H = hat.structure
        for x, ix in enumerate(hat.yoneda_indices):
            for k, p in enumerate(hat.members):
                assert H[ix, k] == p[x]


def test_saturation(B, chain2):
    assert saturation_check(chain2, ALL).vacuous
    for le in POSETS4:
        rep = saturation_check(gen.poset_category(le, B), ORDER_IDEAL)
        assert rep.saturated
    # a representable psi on JX has supremum the presheaf it represents
    assert saturation_check(chain2, IdealClass("custom", name="representables")).saturated


def test_broken_class_fails_saturation(B):
    register_custom_class("no-pairs", lambda X, P: (P == X.quantale.top).sum(axis=1) != 2)
    X = VCategory.discrete(B, list("abc"))
    bad = saturation_check(X, IdealClass("custom", name="no-pairs"))
    assert not bad.saturated
    assert bad.counterexample["composite"].count("top") == 2


def test_custom_registration(chain2):
    register_custom_class("nonempty-test", lambda X, P: (P != X.quantale.bottom).any(axis=1))
    cls = IdealClass.parse("custom:nonempty-test")
    assert len(build_JX(chain2, cls)) == 2


def test_parse_errors_list_valid_names():
    with pytest.raises(ValueError, match="valid: all, order, fsw"):
        IdealClass.parse("bogus")
    with pytest.raises(ValueError, match="registered"):
        IdealClass("custom", name="nope")
    assert str(IdealClass.parse("fsw", below="directed")) == "fsw[directed]"


@pytest.mark.parametrize("q", [two(), lukasiewicz(2)], ids=repr)
def test_distributor_enumeration_matches_oracle(q):
    cats = gen.enumerate_vcategories(q, 2)[:6] + gen.enumerate_vcategories(q, 1)
    for X in cats:
        for Y in cats:
            got = sorted(m.tolist() for m in enumerate_distributors(X, Y))
            want = sorted(all_distributors(q, X.structure.tolist(), Y.structure.tolist()))
            assert got == want


def test_sampled_distributors_are_valid(L4):
    rng = np.random.default_rng(0)
    X = gen.gen_vcategory(L4, 3, rng)
    Y = gen.gen_vcategory(L4, 3, rng)
    for m in sample_distributors(X, Y, rng, 30):
        assert validate_distributor(Distributor(X, Y, m)).ok


def test_enumeration_cap(L4):
    X = VCategory.discrete(L4, list("abcdefgh"))
    with pytest.raises(ResourceLimitError):
        enumerate_presheaves(X, cap=1000)
