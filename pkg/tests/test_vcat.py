import numpy as np
import pytest

from vapprox.laws import generators as gen
from vapprox.quantale import lukasiewicz, two
from vapprox.report import ResourceLimitError, StructureError
from vapprox.vcat import (VCategory, VFunctor, dual, enumerate_functors, identity_functor,
                          internal_hom_category, is_antisymmetric, is_fully_faithful,
                          tensor_product, underlying_preorder, validate_vcategory,
                          validate_vfunctor)

from oracles import is_distributor


def test_discrete_and_chain_validate(B, chain2):
    assert validate_vcategory(VCategory.discrete(B, ["a", "b", "c"])).ok
    assert validate_vcategory(chain2).ok


def test_reflexivity_failure_witness(B):
    X = VCategory(B, ["a", "b"], [[0, 1], [0, 1]])
    rep = validate_vcategory(X)
    assert not rep["reflexivity"].passed
    assert rep["reflexivity"].witness == "a"


def test_transitivity_failure(B):
    X = VCategory.from_preorder(B, ["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    rep = validate_vcategory(X)
    assert not rep["transitivity"].passed
    assert rep["transitivity"].witness == ("a", "b", "c")


def test_structure_is_a_distributor_on_itself():
    q = lukasiewicz(2)
    for X in gen.enumerate_vcategories(q, 2):
        s = X.structure.tolist()
        assert is_distributor(q, s, s, s)


def test_dual(B, chain2):
    d = dual(chain2)
    assert np.array_equal(d.structure, chain2.structure.T)
    D = VCategory.discrete(B, ["a", "b"])
    assert dual(D) == D


def test_tensor_product_of_chains_is_product_order(B, chain2):
    P = tensor_product(chain2, chain2)
    le = underlying_preorder(P)
    pairs = [(a, b) for a in range(2) for b in range(2)]
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            assert le[i, j] == (a <= c and b <= d)
    one = VCategory.unit_category(B)
    assert np.array_equal(tensor_product(chain2, one).structure, chain2.structure)


def test_internal_hom_two_to_the_chain(B, chain2):
    two_cat = VCategory.of_quantale(B)
    H = internal_hom_category(chain2, two_cat)
    assert len(H) == 3
    assert validate_vcategory(H).ok


def test_functors_into_discrete_from_connected_are_constant(B):
    X = VCategory.from_preorder(B, ["a", "b"], np.ones((2, 2), bool))
    D = VCategory.discrete(B, ["p", "q", "r"])
    fs = enumerate_functors(X, D)
    assert len(fs) == 3
    assert all(len(set(row)) == 1 for row in fs)


def test_enumerate_functors_matches_brute_force():
    q = two()
    for le in gen.gen_poset(3):
        X = gen.poset_category(le, q)
        Y = gen.poset_category(gen.chain(3), q)
        fs = {tuple(r) for r in enumerate_functors(X, Y)}
        brute = set()
        for m in np.ndindex(*(3,) * 3):
            if all(not le[i, j] or m[i] <= m[j] for i in range(3) for j in range(3)):
                brute.add(m)
        assert fs == brute


def test_enumerate_functors_cap(B):
    D = VCategory.discrete(B, list("abcdef"))
    with pytest.raises(ResourceLimitError):
        enumerate_functors(D, D, cap=100)


def test_functor_validation(B, chain2):
    assert is_fully_faithful(identity_functor(chain2))
    D = VCategory.discrete(B, ["a", "b"])
    # reversing the chain breaks monotonicity
    f = VFunctor(chain2, chain2, ["1", "0"])
    assert not validate_vfunctor(f).ok
    g = VFunctor(chain2, D, ["a", "a"])
    assert validate_vfunctor(g).ok
    h = VFunctor(chain2, D, ["a", "b"])
    assert not validate_vfunctor(h).ok


def test_underlying_preorder_of_quantale_category(L4):
    X = VCategory.of_quantale(L4)
    le = underlying_preorder(X)
    assert np.array_equal(le, L4.leq)
    assert is_antisymmetric(X)


def test_shape_errors(B):
    with pytest.raises(StructureError):
        VCategory(B, ["a", "a"], [[1, 1], [1, 1]])
    with pytest.raises(StructureError):
        VCategory(B, ["a", "b"], [[1, 1]])
    with pytest.raises(StructureError):
        VCategory(B, ["a"], [[5]])
