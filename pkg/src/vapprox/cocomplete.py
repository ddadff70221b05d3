"""Suprema of presheaves, the subcategory of ideals with suprema, cocompleteness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import dist
from .ideals import ALL, IdealClass, PresheafCat, build_JX, hat_structure
from .vcat import VCategory, VFunctor


@dataclass(frozen=True)
class SupremumResult:
    presheaf: tuple
    witnesses: tuple

    @property
    def canonical(self):
        return self.witnesses[0] if self.witnesses else None

    @property
    def exists(self) -> bool:
        return bool(self.witnesses)


def yoneda_homs(X: VCategory, P: np.ndarray) -> np.ndarray:
    """``hat X(phi, y x)`` for every row ``phi`` of ``P`` and object ``x``."""
    return hat_structure(X.quantale, P, X.structure.T)


def witness_matrix(X: VCategory, P: np.ndarray) -> np.ndarray:
    """``W[k, x]`` iff ``X(x, x') = hat X(P[k], y x')`` for every ``x'``."""
    P = np.asarray(P, dtype=np.int64).reshape(-1, len(X))
    R = yoneda_homs(X, P)
    return (X.structure[None, :, :] == R[:, None, :]).all(axis=-1)


def supremum(X: VCategory, phi) -> SupremumResult:
    phi = tuple(int(v) for v in phi)
    w = witness_matrix(X, np.array([phi]))[0]
    return SupremumResult(phi, tuple(int(i) for i in np.flatnonzero(w)))


class SupremumData:
    """``JX`` together with the suprema that exist, computed once per ``(X, J)``."""

    def __init__(self, X: VCategory, ideal_class: IdealClass):
        self.X = X
        self.ideal_class = ideal_class
        self.J = build_JX(X, ideal_class)
        W = witness_matrix(X, self.J.members) if len(self.J) else \
            np.zeros((0, len(X)), dtype=bool)
        self.witnesses = [tuple(int(i) for i in np.flatnonzero(row)) for row in W]
        self.js_index = np.flatnonzero(W.any(axis=1))
        self.JS = PresheafCat(X, self.J.members[self.js_index], ideal_class)
        self.sup = np.array([self.witnesses[k][0] for k in self.js_index], dtype=np.int64)

    @property
    def cocomplete(self) -> bool:
        return len(self.js_index) == len(self.J)

    @cached_property
    def sup_upper_star(self) -> dist.Distributor:
        """``Sup^*(x, psi) = X(x, Sup psi)`` as a distributor ``X -/-> J_S X``."""
        return dist.Distributor(self.X, self.JS.category, self.X.structure[:, self.sup])

    @cached_property
    def yoneda_lower_star(self) -> dist.Distributor:
        """``y_*(x, psi) = psi(x)`` as a distributor ``X -/-> J_S X``."""
        return dist.Distributor(self.X, self.JS.category, self.JS.members.T)


@lru_cache(maxsize=512)
def sup_data(X: VCategory, ideal_class: IdealClass = ALL) -> SupremumData:
    return SupremumData(X, ideal_class)


def J_S(X: VCategory, ideal_class: IdealClass = ALL) -> PresheafCat:
    """Members of ``JX`` that have a supremum, as a full subcategory of ``JX``."""
    return sup_data(X, ideal_class).JS


def sup_functor(X: VCategory, ideal_class: IdealClass = ALL) -> VFunctor:
    """``Sup: J_S X -> X`` choosing the least-index witness."""
    from .vcat import validate_vfunctor

    sd = sup_data(X, ideal_class)
    f = VFunctor(sd.JS.category, X, sd.sup)
    rep = validate_vfunctor(f)
    if not rep.ok:  # pragma: no cover - would contradict the Yoneda lemma
        raise AssertionError(f"Sup is not a V-functor: {rep.failures}")
    return f


def is_J_cocomplete(X: VCategory, ideal_class: IdealClass = ALL) -> bool:
    return sup_data(X, ideal_class).cocomplete


def cocompleteness_report(X: VCategory, ideal_class: IdealClass = ALL) -> dict:
    sd = sup_data(X, ideal_class)
    q = X.quantale
    return {
        "class": str(ideal_class),
        "cocomplete": sd.cocomplete,
        "presheaves": [
            {"presheaf": [q.name(v) for v in row],
             "witnesses": [X.objects[w] for w in ws]}
            for row, ws in zip(sd.J.members, sd.witnesses)
        ],
    }


def presheaf_sup(J: PresheafCat, Psi) -> np.ndarray:
    """Supremum in ``J`` of a presheaf ``Psi`` on ``J``: the composite ``Psi . y_*``.

    ``(Psi . y_*)(x) = join_phi phi(x) (x) Psi(phi)``.
    """
    q = J.base.quantale
    Psi = np.asarray(Psi, dtype=np.int64)
    return dist.compose_matrices(q, J.members.T, Psi[:, None])[:, 0]


def pushforward(f: VFunctor, phi) -> np.ndarray:
    """``phi . f^*``: the presheaf ``y |-> join_x Y(y, fx) (x) phi(x)`` on the target."""
    q = f.source.quantale
    fstar = dist.upper_star(f).matrix  # (y, x)
    return dist.compose_matrices(q, fstar, np.asarray(phi, dtype=np.int64)[:, None])[:, 0]


def cocontinuity_counterexample(f: VFunctor, ideal_class: IdealClass = ALL):
    """First ``phi`` in ``J(source)`` whose supremum is not preserved, or ``None``."""
    X, Y = f.source, f.target
    sd = sup_data(X, ideal_class)
    for k in sd.js_index:
        phi = sd.J.members[k]
        target = supremum(Y, pushforward(f, phi))
        if not target.exists:
            continue
        if any(f.mapping[w] not in target.witnesses for w in sd.witnesses[k]):
            return {"presheaf": [int(v) for v in phi],
                    "source_sup": list(sd.witnesses[k]),
                    "target_sup": list(target.witnesses)}
    return None


def is_cocontinuous_functor(f: VFunctor, ideal_class: IdealClass = ALL) -> bool:
    """``f(Sup phi) = Sup (phi . f^*)`` whenever both suprema exist."""
    return cocontinuity_counterexample(f, ideal_class) is None
