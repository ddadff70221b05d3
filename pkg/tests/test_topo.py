import numpy as np
import pytest

from vapprox import topo
from vapprox.laws import generators as gen
from vapprox.report import ResourceLimitError, StructureError
from vapprox.topo import (ALL, PROPER, FinTop, alexandroff, all_spaces, continuity_top,
                          convergence_points, discrete, enumerate_filters, f0_basis, f0_space,
                          indiscrete, is_cocomplete_top, is_continuous_top,
                          local_waybelow_consistency, principal_filter, sierpinski,
                          specialization, subbasis_fixture, sup_filter, waybelow_filter,
                          yoneda_top)

from oracles import subsets


def _filter_oracle(space):
    """All families of opens that contain X, are upward closed and closed under
    binary intersection, found by scanning every family."""
    opens = sorted(space.opens, key=lambda s: (len(s), sorted(s)))
    out = []
    for fam in subsets(opens):
        F = set(fam)
        if space.full not in F:
            continue
        if any(o not in F for f in F for o in opens if f <= o):
            continue
        if any(a & b not in F for a in F for b in F):
            continue
        out.append(frozenset(F))
    return out


def _key(members):
    return tuple(sorted(tuple(sorted(o)) for o in members))


def _named_opens(space):
    return {frozenset(space.points[i] for i in o) for o in space.opens}


def _names(space, F):
    return sorted(tuple(sorted(space.points[i] for i in o)) for o in F.members)


def _by_members(space, members):
    return next(F for F in enumerate_filters(space) if F.members == frozenset(members))


def test_space_axioms():
    with pytest.raises(StructureError):
        FinTop(["a", "b", "c"], [[0], [1]])  # union {0,1} missing
    with pytest.raises(StructureError):
        FinTop(["a"], [[3]])
    s = sierpinski()
    assert frozenset() in s.opens and s.full in s.opens


@pytest.mark.parametrize("n,count,t0", [(1, 1, 1), (2, 4, 3), (3, 29, 19)])
def test_topology_counts(n, count, t0):
    spaces = all_spaces(n)
    assert len(spaces) == count
    assert sum(s.is_t0() for s in spaces) == t0


def test_filter_enumeration_matches_scan():
    for n in (1, 2, 3):
        for sp in all_spaces(n):
            got = sorted(_key(F.members) for F in enumerate_filters(sp))
            assert got == sorted(_key(F) for F in _filter_oracle(sp))


def test_filter_counts():
    s = sierpinski()
    fs = enumerate_filters(s)
    assert len(fs) == 3
    described = sorted(_names(s, F) for F in fs)
    assert described == sorted([[("0", "1")], [("0", "1"), ("1",)],
                                [(), ("0", "1"), ("1",)]])
    assert len(enumerate_filters(discrete(1))) == 2
    # four opens, each generating one principal filter
    assert len(enumerate_filters(discrete(2))) == 4


def test_filter_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_filters(discrete(7))


def test_alexandroff_round_trip():
    chain2 = gen.chain(2)
    s = alexandroff(["0", "1"], chain2)
    # {1} is closed here; sierpinski() names the open point 1 instead
    assert s == FinTop(["0", "1"], [[0]])
    assert _named_opens(alexandroff(["1", "0"], chain2)) == _named_opens(sierpinski())
    assert np.array_equal(specialization(s), chain2)
    assert alexandroff(["0", "1"], np.eye(2, dtype=bool)) == discrete(2)
    for n in range(1, 5):
        for le in gen.gen_poset(n):
            assert np.array_equal(specialization(alexandroff(list(range(n)), le)), le)
    for sp in all_spaces(3):
        if sp.is_t0():
            assert alexandroff(sp.points, specialization(sp)) == sp


def test_sierpinski_order():
    s = sierpinski()
    # 1 lies in the closure of 0? no; 0 lies in the closure of 1
    assert s.order[1, 0] and not s.order[0, 1]


def test_yoneda_filters():
    s = sierpinski()
    assert _names(s, yoneda_top(s, "1")) == [("0", "1"), ("1",)]
    d = discrete(3)
    for x in range(3):
        assert yoneda_top(d, x) == principal_filter(d, {x})
    i = indiscrete(3)
    for x in range(3):
        assert yoneda_top(i, x).members == frozenset({i.full})


def test_sup_examples():
    s = sierpinski()
    top_only = _by_members(s, [s.full])
    assert sup_filter(s, top_only) == (0,)
    improper = principal_filter(s, frozenset())
    assert convergence_points(s, improper) == [0, 1]
    assert sup_filter(s, improper) == (1,)  # the least point in the closure order
    for sp in all_spaces(3):
        for x in range(3):
            assert x in convergence_points(sp, yoneda_top(sp, x))


def test_sierpinski_cocomplete_and_continuous():
    s = sierpinski()
    for cls in (ALL, PROPER):
        assert is_cocomplete_top(s, cls)
        assert is_continuous_top(s, cls)


def test_sierpinski_waybelow_filters():
    s = sierpinski()
    assert waybelow_filter(s, "1", ALL) == principal_filter(s, frozenset())
    assert waybelow_filter(s, "0", ALL).members == frozenset({s.full})
    assert _names(s, waybelow_filter(s, "1", PROPER)) == [("0", "1"), ("1",)]
    one = discrete(1)
    assert not waybelow_filter(one, 0, ALL).proper


def test_discrete_two_is_not_cocomplete():
    d = discrete(2)
    rep = topo.cocompleteness_top(d, ALL)
    assert not rep["cocomplete"] and not rep["pointwise"]
    assert not is_continuous_top(d, ALL)


def test_f0_space_structure():
    s = sierpinski()
    F0 = f0_space(s)
    assert len(F0) == 3
    basis = f0_basis(s)
    assert len(basis[frozenset({1})]) == 2
    assert len(basis[s.full]) == 3
    for B in basis.values():
        assert B in F0.opens
    # the basis generates: every open is a union of basic opens
    for U in F0.opens:
        parts = [B for B in basis.values() if B <= U]
        assert frozenset().union(*parts) == U
    assert len(f0_space(discrete(1))) == 2
    assert f0_space(discrete(1)).is_t0()


def test_filter_spaces_are_cocomplete_and_continuous():
    for n in (1, 2):
        for sp in all_spaces(n):
            F0 = f0_space(sp)
            for cls in (ALL, PROPER):
                assert is_cocomplete_top(F0, cls)
                assert is_continuous_top(F0, cls)


def test_waybelow_map_is_monotone_on_small_spaces():
    for n in (1, 2, 3):
        for sp in all_spaces(n):
            for cls in (ALL, PROPER):
                rep = local_waybelow_consistency(sp, cls)
                assert rep["monotone"], rep
                assert rep["continuous"]


def test_continuity_report_shape():
    rep = continuity_top(sierpinski(), ALL)
    assert set(rep) >= {"class", "cocomplete", "waybelow_continuous", "recovers_points",
                        "continuous", "waybelow"}
    assert rep["waybelow"]["0"] == [["0", "1"]]


def test_unknown_class():
    with pytest.raises(ValueError):
        is_cocomplete_top(sierpinski(), "bogus")


@pytest.mark.parametrize("name,le", [("chain3", gen.chain(3)), ("m3", gen.m3()),
                                     ("n5", gen.n5())])
def test_subbasis_fixture_is_cocomplete(name, le):
    sp = subbasis_fixture([str(i) for i in range(len(le))], le)
    assert is_cocomplete_top(sp, ALL)
    with pytest.raises(StructureError):
        subbasis_fixture(["a", "b"], np.eye(2, dtype=bool))
