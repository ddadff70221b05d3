"""The catalogue of checked laws.

Each law draws a random instance from a per-case generator and evaluates it.
``THEOREM`` laws must never fail; ``OBSERVATION`` laws record behaviour that is
either conjectural or known to break, and never affect the exit status.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from .. import cocomplete, continuity, dist, topo
from ..ideals import (ALL, FSW, ORDER_IDEAL, RIGHT_ADJOINT, IdealClass, build_JX,
                      enumerate_distributors, enumerate_presheaves, hat_structure,
                      presheaf_category, sample_distributors, saturation_check)
from ..quantale import chain_plus, frame_of_downsets, lukasiewicz, two, validate_quantale
from ..report import ResourceLimitError
from ..vcat import (VCategory, VFunctor, dual, enumerate_functors, is_fully_faithful,
                    validate_vcategory)
from . import generators as gen
from .oracles import totally_below_reconstruction

THEOREM = "THEOREM"
OBSERVATION = "OBSERVATION"
TIERS = (THEOREM, OBSERVATION)

MAX_QUANTALE = 8
MAX_OBJECTS = 5
DEFAULT_CAP = 10_000


@dataclass
class Verdict:
    applicable: bool
    holds: bool
    witness: Any = None
    evaluations: int = 1


@dataclass(frozen=True)
class Law:
    id: str
    tier: str
    summary: str
    generate: Callable[[np.random.Generator], dict]
    check: Callable[[dict], Verdict]
    group: str | None = None

    @property
    def seed_group(self) -> str:
        return self.group or self.id


# instance pools

INHABITED = IdealClass("custom", name="inhabited")
FSW_DIRECTED = IdealClass("fsw", below="directed")


def _quantales():
    return (two(), lukasiewicz(2), lukasiewicz(3), chain_plus(2), lukasiewicz(4),
            frame_of_downsets(["a", "b"], [[1, 0], [0, 1]]))


QUANTALES = _quantales()
assert all(len(q) <= MAX_QUANTALE for q in QUANTALES)


def _classes(q) -> list:
    out = [ALL, FSW, RIGHT_ADJOINT, INHABITED, FSW_DIRECTED]
    if len(q) == 2:
        out.append(ORDER_IDEAL)
    return out


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _category(rng, max_n: int, quantales=QUANTALES) -> VCategory:
    q = _pick(rng, quantales)
    n = int(rng.integers(1, max_n + 1))
    if len(q) == 2 and rng.random() < 0.5:
        return gen.poset_category(gen.random_poset(n, rng))
    return gen.gen_vcategory(q, n, rng)


def _category_and_class(rng, max_n: int, quantales=QUANTALES) -> dict:
    X = _category(rng, max_n, quantales)
    return {"X": X, "cls": _pick(rng, _classes(X.quantale))}


def _names(q, m) -> list:
    return [[q.name(v) for v in row] for row in np.atleast_2d(m)]


# algebra

def _gen_quantale(rng):
    k = int(rng.integers(5))
    if k == 0:
        return {"quantale": two()}
    if k == 1:
        return {"quantale": lukasiewicz(int(rng.integers(1, MAX_QUANTALE)))}
    if k == 2:
        return {"quantale": chain_plus(int(rng.integers(1, MAX_QUANTALE)))}
    le = gen.random_poset(int(rng.integers(1, 4)), rng)
    return {"quantale": frame_of_downsets([chr(97 + i) for i in range(len(le))], le)}


def _check_quantale(inst) -> Verdict:
    q = inst["quantale"]
    rep = validate_quantale(q)
    if not rep.ok:
        return Verdict(True, False, rep.failures)
    # a (x) b <= c  iff  b <= hom(a, c)
    lhs = q.leq[q.tensor[:, :, None], np.arange(len(q))[None, None, :]]
    rhs = q.leq[np.arange(len(q))[None, :, None], q.hom[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    return Verdict(True, not len(bad), bad[0].tolist() if len(bad) else None)


def _check_vcategory_valid(inst) -> Verdict:
    X = inst["X"]
    rep = validate_vcategory(X)
    drep = validate_vcategory(dual(X))
    return Verdict(True, rep.ok and drep.ok and dual(dual(X)) == X,
                   rep.failures or drep.failures or None)


def _check_yoneda(inst) -> Verdict:
    X = inst["X"]
    q = X.quantale
    hat = presheaf_category(X)
    reps = X.structure.T
    lhs = hat_structure(q, reps, hat.members)  # hat(y x, phi)
    ok = np.array_equal(lhs, hat.members.T)
    y = VFunctor(X, hat.category, hat.yoneda_indices)
    ff = is_fully_faithful(y)
    return Verdict(True, ok and ff, None if ok and ff else {"yoneda_value": ok, "fully_faithful": ff},
                   evaluations=len(hat))


def _triple(rng, max_n):
    X = _category(rng, max_n)
    q = X.quantale
    sub = [gen.gen_vcategory(q, int(rng.integers(1, 3)), rng) for _ in range(3)]
    return {"X": X, "Y": sub[0], "Z": sub[1], "W": sub[2]}


def _one(X, Y, rng):
    return dist.Distributor(X, Y, sample_distributors(X, Y, rng, 1)[0])


def _check_composition(inst) -> Verdict:
    rng = np.random.default_rng(inst["_seed"])
    X, Y, Z, W = inst["X"], inst["Y"], inst["Z"], inst["W"]
    f, g, h = _one(X, Y, rng), _one(Y, Z, rng), _one(Z, W, rng)
    assoc = dist.compose(h, dist.compose(g, f)) == dist.compose(dist.compose(h, g), f)
    unit = dist.compose(f, dist.identity(X)) == f and dist.compose(dist.identity(Y), f) == f
    valid = dist.validate_distributor(dist.compose(g, f)).ok
    return Verdict(True, assoc and unit and valid,
                   None if assoc and unit and valid else {"assoc": assoc, "unit": unit})


def _gammas(A, B, rng, cap):
    try:
        return enumerate_distributors(A, B, cap)
    except ResourceLimitError:
        return sample_distributors(A, B, rng, min(cap, 200))


def _check_lifting(inst) -> Verdict:
    rng = np.random.default_rng(inst["_seed"])
    X, Y, Z = inst["X"], inst["Y"], inst["Z"]
    phi, psi = _one(X, Y, rng), _one(Z, Y, rng)
    L = dist.lifting(phi, psi)
    if not dist.validate_distributor(L).ok or not dist.compose(phi, L) <= psi:
        return Verdict(True, False, {"phi": _names(X.quantale, phi.matrix)})
    gs = _gammas(Z, X, rng, inst.get("_cap", DEFAULT_CAP))
    for g in gs:
        gamma = dist.Distributor(Z, X, g)
        if (dist.compose(phi, gamma) <= psi) != (gamma <= L):
            return Verdict(True, False, {"gamma": _names(X.quantale, g)})
    return Verdict(True, True, evaluations=len(gs))


def _check_right_extension(inst) -> Verdict:
    rng = np.random.default_rng(inst["_seed"])
    X, Y, Z = inst["X"], inst["Y"], inst["Z"]
    phi, psi = _one(X, Y, rng), _one(X, Z, rng)
    R = dist.right_extension(psi, phi)
    if not dist.validate_distributor(R).ok or not dist.compose(R, phi) <= psi:
        return Verdict(True, False, {"phi": _names(X.quantale, phi.matrix)})
    gs = _gammas(Y, Z, rng, inst.get("_cap", DEFAULT_CAP))
    for g in gs:
        gamma = dist.Distributor(Y, Z, g)
        if (dist.compose(gamma, phi) <= psi) != (gamma <= R):
            return Verdict(True, False, {"gamma": _names(X.quantale, g)})
    return Verdict(True, True, evaluations=len(gs))


def _pair(rng, max_n):
    X = _category(rng, max_n)
    return {"X": X, "Y": gen.gen_vcategory(X.quantale, int(rng.integers(1, max_n + 1)), rng)}


def _check_star_adjunction(inst) -> Verdict:
    rng = np.random.default_rng(inst["_seed"])
    X, Y = inst["X"], inst["Y"]
    fs = enumerate_functors(X, Y)
    if not len(fs):
        return Verdict(False, True)
    f = VFunctor(X, Y, fs[int(rng.integers(len(fs)))])
    ok = dist.adjoint_check(dist.lower_star(f), dist.upper_star(f))
    return Verdict(True, ok, None if ok else {"f": list(f.mapping)})


# suprema and ideals

def _check_representable_sup(inst) -> Verdict:
    X = inst["X"]
    for x in range(len(X)):
        s = cocomplete.supremum(X, X.structure[:, x])
        iso = all(X.quantale.leq[X.quantale.unit, X.structure[x, w]]
                  and X.quantale.leq[X.quantale.unit, X.structure[w, x]] for w in s.witnesses)
        if x not in s.witnesses or not iso:
            return Verdict(True, False, {"object": X.objects[x], "witnesses": list(s.witnesses)})
    return Verdict(True, True, evaluations=len(X))


def _gen_poset_cat(rng, max_n=MAX_OBJECTS):
    return {"X": gen.poset_category(gen.random_poset(int(rng.integers(1, max_n + 1)), rng))}


def _check_fsw_order(inst) -> Verdict:
    X = inst["X"]
    P = enumerate_presheaves(X)
    a, b = ORDER_IDEAL.mask(X, P), FSW.mask(X, P)
    bad = np.flatnonzero(a != b)
    return Verdict(True, not len(bad),
                   _names(X.quantale, P[bad[0]]) if len(bad) else None, evaluations=len(P))


def _check_radj_within_fsw(inst) -> Verdict:
    X = inst["X"]
    P = enumerate_presheaves(X)
    r, f = RIGHT_ADJOINT.mask(X, P), FSW.mask(X, P)
    bad = np.flatnonzero(r & ~f)
    return Verdict(True, not len(bad),
                   _names(X.quantale, P[bad[0]]) if len(bad) else None, evaluations=len(P))


def _check_radj_principal(inst) -> Verdict:
    """Over two, right adjoint presheaves are exactly the principal down-sets."""
    X = inst["X"]
    P = enumerate_presheaves(X)
    principal = (P[:, None, :] == X.structure.T[None, :, :]).all(axis=-1).any(axis=1)
    bad = np.flatnonzero(RIGHT_ADJOINT.mask(X, P) != principal)
    return Verdict(True, not len(bad),
                   _names(X.quantale, P[bad[0]]) if len(bad) else None, evaluations=len(P))


def _check_saturation(inst) -> Verdict:
    rep = saturation_check(inst["X"], inst["cls"])
    return Verdict(not rep.vacuous, rep.saturated, rep.counterexample)


# way-below and continuity

def _gen_wb(rng):
    return _category_and_class(rng, 4)


def _check_waybelow_formula(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    a = continuity.way_below(X, cls).matrix
    b = continuity.way_below_elementwise(X, cls)
    return Verdict(True, np.array_equal(a, b), None if np.array_equal(a, b) else
                   {"lifting": _names(X.quantale, a), "elementwise": _names(X.quantale, b)})


def _check_waybelow_auxiliary(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    wb = continuity.way_below(X, cls).distributor
    ok = dist.validate_distributor(wb).ok and continuity.is_auxiliary(wb)
    return Verdict(True, ok, None if ok else _names(X.quantale, wb.matrix))


def _check_characterisation(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    rep = continuity.is_J_continuous(X, cls)
    return Verdict(True, rep.agree, None if rep.agree else rep.to_dict())


def _check_waybelow_mod_J(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    wb = continuity.way_below(X, cls).distributor
    return Verdict(True, continuity.in_mod_J(wb, cls), _names(X.quantale, wb.matrix))


def _gen_symmetric(rng):
    X = _category(rng, 4, quantales=tuple(lukasiewicz(n) for n in range(1, 5)))
    s = X.quantale.meet[X.structure, X.structure.T]
    return {"X": VCategory(X.quantale, X.objects, s), "cls": _pick(rng, [FSW, RIGHT_ADJOINT])}


def _check_symmetric_waybelow(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    wb = continuity.way_below(X, cls).matrix
    return Verdict(True, np.array_equal(wb, X.structure), _names(X.quantale, wb))


def _five_way_vs(X, cls, rng, cap) -> list:
    vs = [continuity.way_below(X, cls).matrix, X.structure]
    cands = continuity.mod_J_candidates(X, cls, cap, rng)
    for k in rng.permutation(len(cands))[:3]:
        vs.append(cands[int(k)])
    vs.append(sample_distributors(X, X, rng, 1)[0])
    return vs


def _check_five_way(inst) -> Verdict:
    """Only triples with ``v`` in ``Mod J`` fall under the equivalence."""
    X, cls = inst["X"], inst["cls"]
    rng = np.random.default_rng(inst["_seed"])
    vs = _five_way_vs(X, cls, rng, inst.get("_cap", DEFAULT_CAP))
    n = 0
    for v in vs:
        rep = continuity.theorem_cont_check(X, cls, v)
        if not rep.in_J:
            continue
        n += 1
        if not rep.all_equal:
            return Verdict(True, False, {"v": _names(X.quantale, v), **rep.to_dict()},
                           evaluations=n)
    return Verdict(n > 0, True, evaluations=n)


def _gen_lemma(rng):
    return _category_and_class(rng, 3)


def lemma_candidates(X, cls, cap, seed) -> list:
    """``Mod J`` members plus arbitrary endodistributors, exhaustive below ``cap``."""
    rng = np.random.default_rng(seed)
    out = {tuple(np.asarray(m).ravel()): m for m in continuity.mod_J_candidates(X, cls, cap, rng)}
    try:
        extra = enumerate_distributors(X, X, cap)
    except ResourceLimitError:
        extra = sample_distributors(X, X, rng, min(cap, 500))
    for m in extra:
        out.setdefault(tuple(m.ravel()), m)
    return [out[k] for k in sorted(out)]


@lru_cache(maxsize=256)
def _candidates(X, cls, cap, seed) -> tuple:
    return tuple(lemma_candidates(X, cls, cap, seed))


@lru_cache(maxsize=256)
def _lemma_report(X, cls, cap, seed):
    cands = _candidates(X, cls, cap, seed)
    return continuity.lemma_suite(X, cls, cands), len(cands)


def _inst_candidates(inst) -> tuple:
    return _candidates(inst["X"], inst["cls"], inst.get("_cap", DEFAULT_CAP), inst["_seed"])


def _check_waybelow_universal(inst) -> Verdict:
    """``Sup^* . v <= y_*`` iff ``v <= waybelow``."""
    X, cls = inst["X"], inst["cls"]
    sd = cocomplete.sup_data(X, cls)
    wb = continuity.way_below(X, cls).distributor
    cands = _inst_candidates(inst)
    for m in cands:
        v = dist.Distributor(X, X, m)
        if (dist.compose(sd.sup_upper_star, v) <= sd.yoneda_lower_star) != (v <= wb):
            return Verdict(True, False, {"v": _names(X.quantale, m)})
    return Verdict(True, True, evaluations=len(cands))


def _check_mate_cocontinuity(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    cands = _inst_candidates(inst)
    for m in cands:
        v = dist.Distributor(X, X, m)
        a, b = continuity.is_cocontinuous_dist(v, cls), continuity.is_cocontinuous_mate(v, cls)
        if a != b:
            return Verdict(True, False, {"v": _names(X.quantale, m), "distributor": a, "mate": b})
    return Verdict(True, True, evaluations=len(cands))


def _check_cocontinuous_composite(inst) -> Verdict:
    """``v`` cocontinuous implies ``v . w`` cocontinuous."""
    X, cls = inst["X"], inst["cls"]
    rng = np.random.default_rng(inst["_seed"])
    cands = _inst_candidates(inst)
    n = 0
    for m in cands:
        v = dist.Distributor(X, X, m)
        if not continuity.is_cocontinuous_dist(v, cls):
            continue
        w = dist.Distributor(X, X, cands[int(rng.integers(len(cands)))])
        n += 1
        if not continuity.is_cocontinuous_dist(dist.compose(v, w), cls):
            return Verdict(True, False, {"v": _names(X.quantale, m),
                                         "w": _names(X.quantale, w.matrix)}, evaluations=n)
    return Verdict(n > 0, True, evaluations=n)


def _check_exists_cocontinuous_approximating(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    if not cocomplete.is_J_cocomplete(X, cls):
        return Verdict(False, True)
    cap = inst.get("_cap", DEFAULT_CAP)
    J = build_JX(X, cls)
    try:
        cands = [J.members[f].T for f in enumerate_functors(X, J.category, cap)]
        exhaustive = True
    except ResourceLimitError:
        cands = continuity.mod_J_candidates(X, cls, cap, np.random.default_rng(inst["_seed"]))
        exhaustive = False
    found = continuity.exists_cocontinuous_approximating(X, cls, cands)
    if not found and not exhaustive:  # a sampled search cannot refute
        return Verdict(False, True)
    verdict = continuity.is_J_continuous(X, cls).continuous
    return Verdict(True, found == verdict, None if found == verdict else
                   {"search": found, "continuous": verdict}, evaluations=len(cands))


def _check_waybelow_interpolative(inst) -> Verdict:
    X, cls = inst["X"], inst["cls"]
    rep = continuity.is_J_continuous(X, cls)
    if not rep.continuous:
        return Verdict(False, True)
    wb = continuity.way_below(X, cls).distributor
    ok = continuity.is_interpolative(wb)
    return Verdict(True, ok, None if ok else _names(X.quantale, wb.matrix))


def _lemma_check(name):
    def check(inst) -> Verdict:
        rep, n = _lemma_report(inst["X"], inst["cls"], inst.get("_cap", DEFAULT_CAP),
                               inst["_seed"])
        o = rep.outcomes[name]
        return Verdict(o.applicable > 0, o.passed, o.counterexample, evaluations=o.applicable)
    return check


def _gen_lattice(rng):
    lats = gen.gen_lattice(6)
    le = lats[int(rng.integers(len(lats)))]
    return {"poset": le}


def _check_complete_distributivity(inst) -> Verdict:
    le = inst["poset"]
    X = gen.poset_category(le)
    lhs = cocomplete.is_J_cocomplete(X, ALL) and continuity.is_J_continuous(X, ALL).continuous
    rhs = totally_below_reconstruction(le)
    return Verdict(True, lhs == rhs, None if lhs == rhs else {"pipeline": lhs, "oracle": rhs})


def _check_finite_poset_domain(inst) -> Verdict:
    X = inst["X"]
    rep = continuity.is_J_continuous(X, ORDER_IDEAL)
    ok = rep.cocomplete and rep.continuous and np.array_equal(
        continuity.way_below(X, ORDER_IDEAL).matrix, X.structure)
    return Verdict(True, ok, None if ok else rep.to_dict())


def _gen_chain_quantale(rng):
    n = int(rng.integers(1, MAX_QUANTALE))
    q = lukasiewicz(n) if rng.random() < 0.5 else chain_plus(n)
    return {"X": VCategory.of_quantale(q)}


def _check_chain_fsw(inst) -> Verdict:
    X = inst["X"]
    rep = continuity.is_J_continuous(X, FSW)
    ok = rep.cocomplete and rep.continuous and rep.agree
    return Verdict(True, ok, None if ok else rep.to_dict())


# topology

def _gen_space(max_n: int):
    def g(rng):
        n = int(rng.integers(1, max_n + 1))
        return {"space": topo.FinTop([str(i) for i in range(n)], gen.random_space_opens(n, rng))}
    return g


def _check_top_yoneda(inst) -> Verdict:
    sp = inst["space"]
    N = [topo.yoneda_top(sp, x) for x in range(len(sp))]
    for x in range(len(sp)):
        for y in range(len(sp)):
            if (N[x] <= N[y]) != bool(sp.order[x, y]):
                return Verdict(True, False, {"x": sp.points[x], "y": sp.points[y]})
    return Verdict(True, True, evaluations=len(sp) ** 2)


def _check_top_sup_of_nbhd(inst) -> Verdict:
    sp = inst["space"]
    for x in range(len(sp)):
        s = topo.sup_filter(sp, topo.yoneda_top(sp, x))
        if x not in s or (sp.is_t0() and s != (x,)):
            return Verdict(True, False, {"x": sp.points[x], "sup": list(s)})
    return Verdict(True, True, evaluations=len(sp))


def _check_top_monotone(inst) -> Verdict:
    sp = inst["space"]
    for cls in topo.CLASSES:
        r = topo.local_waybelow_consistency(sp, cls)
        if not r["monotone"]:
            return Verdict(True, False, {"class": cls, **r})
    return Verdict(True, True, evaluations=2)


def _check_top_waybelow_continuous(inst) -> Verdict:
    sp = inst["space"]
    for cls in topo.CLASSES:
        r = topo.local_waybelow_consistency(sp, cls)
        if not r["continuous"]:
            return Verdict(True, False, {"class": cls})
    return Verdict(True, True, evaluations=2)


def _check_f0(inst) -> Verdict:
    F = topo.f0_space(inst["space"])
    res = {c: topo.is_cocomplete_top(F, c) and topo.is_continuous_top(F, c) for c in topo.CLASSES}
    return Verdict(True, all(res.values()), None if all(res.values()) else res)


def _gen_poset(max_n: int):
    def g(rng):
        return {"poset": gen.random_poset(int(rng.integers(1, max_n + 1)), rng)}
    return g


def _check_alexandroff(inst) -> Verdict:
    le = inst["poset"]
    sp = topo.alexandroff([str(i) for i in range(len(le))], le)
    back = topo.alexandroff(sp.points, topo.specialization(sp))
    ok = np.array_equal(topo.specialization(sp), le) and back == sp
    return Verdict(True, ok)


def _cross(top_class, cat_class):
    def check(inst) -> Verdict:
        le = inst["poset"]
        sp = topo.alexandroff([str(i) for i in range(len(le))], le)
        X = gen.poset_category(le)
        a = topo.is_continuous_top(sp, top_class)
        b = cocomplete.is_J_cocomplete(X, cat_class) and \
            continuity.is_J_continuous(X, cat_class).continuous
        return Verdict(True, a == b, None if a == b else {"topological": a, "categorical": b})
    return check


def _lemma_law(name, summary):
    return Law(name, THEOREM, summary, _gen_lemma, _lemma_check(name), group="lemmas")


LAWS: tuple = (
    Law("quantale-axioms", THEOREM, "builtin quantales satisfy the axioms and hom is right adjoint to tensor",
        _gen_quantale, _check_quantale),
    Law("vcategory-axioms", THEOREM, "generated categories and their duals are valid",
        lambda rng: {"X": _category(rng, MAX_OBJECTS)}, _check_vcategory_valid),
    Law("yoneda-lemma", THEOREM, "hat(y x, phi) = phi(x) and y is fully faithful",
        lambda rng: {"X": _category(rng, 3)}, _check_yoneda),
    Law("composition-associative", THEOREM, "distributor composition is associative and unital",
        lambda rng: _triple(rng, 3), _check_composition),
    Law("lifting-universal", THEOREM, "the lifting is the largest gamma with phi.gamma <= psi",
        lambda rng: _triple(rng, 2), _check_lifting),
    Law("right-extension-universal", THEOREM, "the right extension is the largest gamma with gamma.phi <= psi",
        lambda rng: _triple(rng, 2), _check_right_extension),
    Law("star-adjunction", THEOREM, "f_* is left adjoint to f^*",
        lambda rng: _pair(rng, 3), _check_star_adjunction),
    Law("representable-supremum", THEOREM, "Sup of X(-, x) is x up to isomorphism",
        lambda rng: {"X": _category(rng, MAX_OBJECTS)}, _check_representable_sup),
    Law("fsw-equals-order-ideals", THEOREM, "over two, FSW ideals are exactly order ideals",
        _gen_poset_cat, _check_fsw_order),
    Law("waybelow-formula", THEOREM, "way-below by lifting equals the pointwise formula",
        _gen_wb, _check_waybelow_formula),
    Law("waybelow-is-auxiliary", THEOREM, "the way-below distributor is auxiliary",
        _gen_wb, _check_waybelow_auxiliary),
    Law("continuity-characterisation", THEOREM,
        "way-below is approximating iff Sup has a left adjoint", _gen_wb, _check_characterisation),
    Law("five-way-equivalence", THEOREM, "the five characterisations of mate(v) -| Sup agree",
        _gen_lemma, _check_five_way),
    _lemma_law("approximating-is-auxiliary", "approximating implies auxiliary"),
    _lemma_law("approximating-closed-under-composition", "composites of approximating distributors are approximating"),
    _lemma_law("approximating-cocontinuous-is-interpolative", "approximating and cocontinuous implies interpolative"),
    _lemma_law("waybelow-below-approximating", "way-below lies below every approximating distributor"),
    _lemma_law("auxiliary-cocontinuous-below-waybelow", "auxiliary and cocontinuous implies below way-below"),
    _lemma_law("interpolative-below-waybelow-is-cocontinuous", "interpolative and below way-below implies cocontinuous"),
    _lemma_law("split-cocontinuous-is-left-adjoint", "a cocontinuous section of Sup is left adjoint to Sup"),
    Law("waybelow-universal", THEOREM, "Sup^*.v <= y_* iff v <= way-below",
        _gen_lemma, _check_waybelow_universal, group="lemmas"),
    Law("cocontinuous-distributor-iff-mate", THEOREM,
        "a distributor is cocontinuous iff its mate is a cocontinuous functor",
        _gen_lemma, _check_mate_cocontinuity, group="lemmas"),
    Law("cocontinuous-composite", THEOREM, "v cocontinuous implies v.w cocontinuous",
        _gen_lemma, _check_cocontinuous_composite, group="lemmas"),
    Law("continuity-iff-cocontinuous-approximating", THEOREM,
        "continuous iff some cocontinuous approximating distributor exists",
        _gen_lemma, _check_exists_cocontinuous_approximating, group="lemmas"),
    Law("waybelow-interpolative-when-continuous", THEOREM,
        "on continuous categories way-below is interpolative", _gen_wb, _check_waybelow_interpolative),
    Law("radj-principal-at-two", THEOREM, "over two, right adjoint presheaves are the principal down-sets",
        _gen_poset_cat, _check_radj_principal),
    Law("lattice-complete-distributivity", THEOREM,
        "a finite lattice is continuous for all presheaves iff totally-below reconstructs it",
        _gen_lattice, _check_complete_distributivity),
    Law("finite-poset-continuous-domain", THEOREM, "finite posets are order-ideal continuous with way-below = order",
        _gen_poset_cat, _check_finite_poset_domain),
    Law("chain-quantale-fsw-continuous", THEOREM, "discretised chains are FSW-continuous over themselves",
        _gen_chain_quantale, _check_chain_fsw),
    Law("top-yoneda-fully-faithful", THEOREM, "N(x) <= N(y) iff x <= y",
        _gen_space(4), _check_top_yoneda),
    Law("top-sup-of-neighbourhood-filter", THEOREM, "x is a smallest convergence point of N(x)",
        _gen_space(4), _check_top_sup_of_nbhd),
    Law("top-waybelow-monotone", THEOREM, "x |-> waybelow_x is monotone",
        _gen_space(4), _check_top_monotone),
    Law("top-filter-space-continuous", THEOREM, "F0(X) is cocomplete and continuous",
        _gen_space(3), _check_f0),
    Law("top-alexandroff-roundtrip", THEOREM, "alexandroff and specialization are mutually inverse",
        _gen_poset(4), _check_alexandroff),
    Law("cross-module-all", THEOREM, "alexandroff(P) continuous for all filters iff P continuous for all presheaves",
        _gen_poset(4), _cross(topo.ALL, ALL)),
    Law("cross-module-proper-inhabited", THEOREM,
        "alexandroff(P) continuous for proper filters iff P continuous for inhabited presheaves",
        _gen_poset(4), _cross(topo.PROPER, INHABITED)),
    Law("cross-module-proper-order-ideal", OBSERVATION,
        "alexandroff(P) continuous for proper filters iff P continuous for order ideals",
        _gen_poset(4), _cross(topo.PROPER, ORDER_IDEAL)),
    Law("top-waybelow-continuous", OBSERVATION, "x |-> waybelow_x is continuous into F0(X)",
        _gen_space(4), _check_top_waybelow_continuous),
    Law("radj-within-fsw", OBSERVATION, "right adjoint presheaves are FSW ideals",
        lambda rng: {"X": _category(rng, 3)}, _check_radj_within_fsw),
    Law("symmetric-waybelow-is-identity", OBSERVATION, "on symmetric categories way-below equals the structure",
        _gen_symmetric, _check_symmetric_waybelow),
    Law("waybelow-in-mod-J", OBSERVATION, "way-below columns are ideals even without continuity",
        _gen_wb, _check_waybelow_mod_J),
    Law("saturation", OBSERVATION, "psi . y_* lies in JX for every psi in J(JX)",
        lambda rng: _category_and_class(rng, 3), _check_saturation),
)

BY_ID = {law.id: law for law in LAWS}


def select(selection=None, tier: str | None = None) -> list:
    """Laws by id prefix (comma-separated or list) and optional tier."""
    if isinstance(selection, str):
        selection = [s for s in selection.split(",") if s]
    laws = list(LAWS)
    if selection:
        unknown = [s for s in selection if not any(l.id.startswith(s) for l in laws)]
        if unknown:
            raise KeyError(f"no law matches {unknown}; known: {', '.join(BY_ID)}")
        laws = [l for l in laws if any(l.id.startswith(s) for s in selection)]
    if tier:
        tier = tier.upper()
        if tier not in TIERS:
            raise ValueError(f"tier must be one of {TIERS}")
        laws = [l for l in laws if l.tier == tier]
    return laws


def clear_caches() -> None:
    from ..ideals import _clear_caches

    _lemma_report.cache_clear()
    _candidates.cache_clear()
    cocomplete.sup_data.cache_clear()
    _clear_caches()
