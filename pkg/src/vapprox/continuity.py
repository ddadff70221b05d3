"""Auxiliary, interpolative, approximating and cocontinuous distributors; the
way-below distributor; continuity of a V-category relative to an ideal class."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from . import cocomplete, dist
from .dist import Distributor
from .ideals import ALL, IdealClass, build_JX, hat_structure
from .report import ResourceLimitError
from .vcat import VCategory, VFunctor, enumerate_functors, validate_vfunctor


def _endo(X: VCategory, v) -> Distributor:
    return v if isinstance(v, Distributor) else Distributor(X, X, v)


def is_auxiliary(v: Distributor) -> bool:
    return v <= dist.identity(v.source)


def is_interpolative(v: Distributor) -> bool:
    return v <= dist.compose(v, v)


def in_mod_J(v: Distributor, ideal_class: IdealClass) -> bool:
    """Every ``x^* . v`` (the column ``v(-, x)``) is a ``J``-ideal."""
    J = build_JX(v.source, ideal_class)
    return all(J.index_or_none(col) is not None for col in v.matrix.T)


def is_approximating(v: Distributor, ideal_class: IdealClass = ALL) -> bool:
    X = v.source
    return in_mod_J(v, ideal_class) and \
        dist.right_extension(dist.identity(X), v) == dist.identity(X)


def is_cocontinuous_dist(v: Distributor, ideal_class: IdealClass = ALL) -> bool:
    """``Sup^* . v = y_* . v`` as distributors ``X -/-> J_S Y``."""
    sd = cocomplete.sup_data(v.target, ideal_class)
    return dist.compose(sd.sup_upper_star, v) == dist.compose(sd.yoneda_lower_star, v)


def mate_into(v: Distributor, ideal_class: IdealClass = ALL) -> VFunctor | None:
    """``x |-> v(-, x)`` as a functor ``X -> J_S X``, or ``None`` if a column misses."""
    sd = cocomplete.sup_data(v.source, ideal_class)
    idx = [sd.JS.index_or_none(col) for col in v.matrix.T]
    if any(i is None for i in idx):
        return None
    return VFunctor(v.target, sd.JS.category, idx)


def is_cocontinuous_mate(v: Distributor, ideal_class: IdealClass = ALL) -> bool:
    """Cocontinuity of ``x |-> v(-, x)`` as a functor into the full presheaf category."""
    return cocomplete.is_cocontinuous_functor(dist.mate(v), ideal_class)


@dataclass
class WayBelow:
    base: VCategory
    ideal_class: IdealClass
    distributor: Distributor

    @property
    def matrix(self) -> np.ndarray:
        return self.distributor.matrix

    def to_dict(self) -> dict:
        q, X = self.base.quantale, self.base
        return {"class": str(self.ideal_class), "objects": list(X.objects),
                "matrix": [[q.name(v) for v in row] for row in self.matrix]}


def way_below(X: VCategory, ideal_class: IdealClass = ALL) -> WayBelow:
    """The lifting of ``y_*`` along ``Sup^*``, both of type ``X -/-> J_S X``."""
    sd = cocomplete.sup_data(X, ideal_class)
    return WayBelow(X, ideal_class, dist.lifting(sd.sup_upper_star, sd.yoneda_lower_star))


def way_below_elementwise(X: VCategory, ideal_class: IdealClass = ALL) -> np.ndarray:
    """``meet_psi hom(X(x, Sup psi), psi(y))`` at ``[y, x]``, straight from the formula."""
    q = X.quantale
    sd = cocomplete.sup_data(X, ideal_class)
    n = len(X)
    out = np.full((n, n), q.top, dtype=np.int64)
    for psi, s in zip(sd.JS.members, sd.sup):
        for y in range(n):
            for x in range(n):
                out[y, x] = q.meet[out[y, x], q.hom[X.structure[x, s], psi[y]]]
    return out


@dataclass
class ContinuityReport:
    ideal_class: str
    continuous: bool
    way_below: list
    approximating: bool
    left_adjoint: list | None
    search_verdict: bool
    agree: bool
    cocomplete: bool

    def to_dict(self) -> dict:
        return asdict(self)


def left_adjoint_search(X: VCategory, ideal_class: IdealClass = ALL) -> list | None:
    """Search ``J_S X`` for a left adjoint to ``Sup``, object by object.

    ``alpha(x)`` must satisfy ``J_S X(alpha x, psi) = X(x, Sup psi)`` for every
    ``psi``; returns the list of ``J_S`` indices, or ``None``.
    """
    sd = cocomplete.sup_data(X, ideal_class)
    H = sd.JS.structure
    target = X.structure[:, sd.sup]  # (x, psi)
    alpha = []
    for x in range(len(X)):
        hits = np.flatnonzero((H == target[x][None, :]).all(axis=1))
        if len(hits) == 0:
            return None
        alpha.append(int(hits[0]))
    f = VFunctor(X, sd.JS.category, alpha)
    if not validate_vfunctor(f).ok:  # pragma: no cover - pointwise adjoints are functorial
        raise AssertionError("pointwise left adjoint is not a functor")
    return alpha


def is_J_continuous(X: VCategory, ideal_class: IdealClass = ALL) -> ContinuityReport:
    q = X.quantale
    sd = cocomplete.sup_data(X, ideal_class)
    wb = way_below(X, ideal_class)
    approx = is_approximating(wb.distributor, ideal_class)
    alpha = left_adjoint_search(X, ideal_class)
    mate = mate_into(wb.distributor, ideal_class) if approx else None
    names = sd.JS.names()
    return ContinuityReport(
        ideal_class=str(ideal_class),
        continuous=sd.cocomplete and approx,
        way_below=[[q.name(v) for v in row] for row in wb.matrix],
        approximating=approx,
        left_adjoint=[names[i] for i in mate.mapping] if mate is not None else None,
        search_verdict=alpha is not None,
        agree=approx == (alpha is not None),
        cocomplete=sd.cocomplete,
    )


@dataclass
class EquivalenceReport:
    in_J: bool
    conditions: tuple

    @property
    def all_equal(self) -> bool:
        return len(set(self.conditions)) == 1

    def to_dict(self) -> dict:
        return {"in_J": self.in_J, "conditions": list(self.conditions),
                "all_equal": self.all_equal}


def _adjoint_to_sup(v: Distributor, ideal_class: IdealClass) -> bool:
    """Unit and counit of ``mate(v) -| Sup``."""
    q = v.quantale
    X = v.source
    sd = cocomplete.sup_data(X, ideal_class)
    alpha = mate_into(v, ideal_class)
    if alpha is None:
        return False
    round_trip = X.structure[np.arange(len(X)), sd.sup[list(alpha.mapping)]]
    unit_ok = bool(q.leq[q.unit, round_trip].all())
    # mate(Sup psi) <= psi pointwise
    counit_ok = q.le(v.matrix[:, sd.sup], sd.JS.members.T)
    return unit_ok and counit_ok


def theorem_cont_check(X: VCategory, ideal_class: IdealClass, v) -> EquivalenceReport:
    """Evaluate the five characterisations of ``mate(v) -| Sup`` independently.

    (i) ``mate(v)`` lands in ``J_S X`` and is left adjoint to ``Sup``;
    (ii) ``v`` is approximating and equals the way-below distributor;
    (iii) ``v`` is approximating and cocontinuous;
    (iv) ``v`` is approximating and ``mate(v): X -> J_S X`` is cocontinuous;
    (v) ``hat X(v(-, x), psi) = X(x, Sup psi)`` for all ``x`` and ``psi`` in ``J_S X``.
    """
    v = _endo(X, v)
    q = X.quantale
    sd = cocomplete.sup_data(X, ideal_class)
    approx = is_approximating(v, ideal_class)
    c1 = _adjoint_to_sup(v, ideal_class)
    c2 = approx and v == way_below(X, ideal_class).distributor
    c3 = approx and is_cocontinuous_dist(v, ideal_class)
    if approx:
        alpha = mate_into(v, ideal_class)
        c4 = alpha is not None and cocomplete.is_cocontinuous_functor(alpha, ideal_class)
    else:
        c4 = False
    lhs = hat_structure(q, v.matrix.T, sd.JS.members)
    c5 = bool(np.array_equal(lhs, X.structure[:, sd.sup]))
    return EquivalenceReport(in_mod_J(v, ideal_class), (c1, c2, c3, c4, c5))


def exists_cocontinuous_approximating(X: VCategory, ideal_class: IdealClass, candidates) -> bool:
    """Search ``candidates`` (endodistributor matrices) for a cocontinuous approximating one."""
    for m in candidates:
        v = Distributor(X, X, m)
        if is_approximating(v, ideal_class) and is_cocontinuous_dist(v, ideal_class):
            return True
    return False


@dataclass
class LawOutcome:
    law: str
    checked: int = 0
    applicable: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class LawReport:
    outcomes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes.values())

    def to_dict(self) -> dict:
        return {k: asdict(o) for k, o in self.outcomes.items()}


MAX_PAIRS = 2500

LEMMAS = (
    "approximating-is-auxiliary",
    "approximating-closed-under-composition",
    "approximating-cocontinuous-is-interpolative",
    "waybelow-below-approximating",
    "auxiliary-cocontinuous-below-waybelow",
    "interpolative-below-waybelow-is-cocontinuous",
    "split-cocontinuous-is-left-adjoint",
)


def _record(out: LawOutcome, applies: bool, holds: bool, witness) -> None:
    out.checked += 1
    if applies:
        out.applicable += 1
        if not holds and out.counterexample is None:
            out.counterexample = witness


def lemma_suite(X: VCategory, ideal_class: IdealClass, candidates) -> LawReport:
    """Check the implications between the distributor predicates on each candidate.

    ``candidates`` is an iterable of endodistributor matrices on ``X``.
    """
    q = X.quantale
    wb = way_below(X, ideal_class).distributor
    sd = cocomplete.sup_data(X, ideal_class)
    report = LawReport({name: LawOutcome(name) for name in LEMMAS})
    o = report.outcomes
    approximating = []
    for m in candidates:
        v = Distributor(X, X, m)
        w = {"v": [[q.name(e) for e in row] for row in m]}
        approx = is_approximating(v, ideal_class)
        aux = is_auxiliary(v)
        cocont = is_cocontinuous_dist(v, ideal_class)
        interp = is_interpolative(v)
        _record(o["approximating-is-auxiliary"], approx, aux, w)
        _record(o["approximating-cocontinuous-is-interpolative"], approx and cocont, interp, w)
        _record(o["waybelow-below-approximating"], approx, wb <= v, w)
        _record(o["auxiliary-cocontinuous-below-waybelow"], aux and cocont, v <= wb, w)
        _record(o["interpolative-below-waybelow-is-cocontinuous"], interp and v <= wb, cocont, w)
        alpha = mate_into(v, ideal_class)
        split = False
        if alpha is not None:
            iso = all(x in sd.witnesses[sd.js_index[a]] for x, a in enumerate(alpha.mapping))
            split = iso and cocomplete.is_cocontinuous_functor(alpha, ideal_class)
        _record(o["split-cocontinuous-is-left-adjoint"], split,
                _adjoint_to_sup(v, ideal_class) if split else True, w)
        if approx:
            approximating.append(v)
    comp = o["approximating-closed-under-composition"]
    k = len(approximating)
    step = max(1, -(-k * k // MAX_PAIRS))
    for i in range(0, k * k, step):
        a, b = approximating[i // k], approximating[i % k]
        ab = dist.compose(b, a)
        _record(comp, True, is_approximating(ab, ideal_class),
                {"v": [[q.name(e) for e in row] for row in a.matrix],
                 "w": [[q.name(e) for e in row] for row in b.matrix]})
    return report


def _random_functor(X: VCategory, K: VCategory, rng: np.random.Generator, tries: int = 64):
    """A random functor ``X -> K`` by randomised depth-first search, or ``None``."""
    q = X.quantale
    sx, sk = X.structure, K.structure
    for _ in range(tries):
        row = []
        for i in range(len(X)):
            opts = [c for c in rng.permutation(len(K))
                    if q.leq[sx[i, i], sk[c, c]]
                    and all(q.leq[sx[j, i], sk[row[j], c]] and q.leq[sx[i, j], sk[c, row[j]]]
                            for j in range(i))]
            if not opts:
                break
            row.append(int(opts[0]))
        else:
            return row
    return None


def mod_J_candidates(X: VCategory, ideal_class: IdealClass, cap: int = 10_000,
                     rng: np.random.Generator | None = None) -> list:
    """Endodistributors in ``Mod J``: the functors ``X -> JX`` read column-wise.

    Exhaustive when there are at most ``cap`` of them, otherwise ``cap`` distinct
    random draws (seeded by ``rng``).
    """
    J = build_JX(X, ideal_class)
    try:
        fs = enumerate_functors(X, J.category, cap=cap)
        return [J.members[f].T.copy() for f in fs]
    except ResourceLimitError:
        pass
    rng = rng if rng is not None else np.random.default_rng(0)
    seen, out = set(), []
    for _ in range(4 * cap):
        f = _random_functor(X, J.category, rng)
        if f is None or tuple(f) in seen:
            continue
        seen.add(tuple(f))
        out.append(J.members[f].T.copy())
        if len(out) >= cap:
            break
    return out
