"""Presheaves, presheaf categories and pluggable ideal classes.

A presheaf on ``X`` (a distributor ``X -/-> 1``) is a vector ``phi`` of element
indices with ``X(x', x) (x) phi(x) <= phi(x')``.  Collections of presheaves are
2-d integer arrays, one presheaf per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable

import numpy as np

from .dist import Distributor
from .report import ResourceLimitError, StructureError
from .vcat import VCategory

ENUM_CAP = 200_000

KINDS = ("all", "order", "fsw", "radj", "custom")


@dataclass(frozen=True)
class IdealClass:
    """A membership rule for presheaves.

    ``kind`` is one of ``all``, ``order`` (two-valued order ideals), ``fsw``,
    ``radj`` (right adjoint presheaves) or ``custom`` (a registered predicate
    named by ``name``).  ``below`` selects the relation used by ``fsw``:
    ``totally`` or ``directed``.
    """

    kind: str = "all"
    below: str = "totally"
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ideal class {self.kind!r}; valid: {', '.join(KINDS)}")
        if self.below not in ("totally", "directed"):
            raise ValueError("below must be 'totally' or 'directed'")
        if self.kind == "custom" and self.name not in CUSTOM_CLASSES:
            raise ValueError(f"unknown custom class {self.name!r}; "
                             f"registered: {', '.join(sorted(CUSTOM_CLASSES))}")

    @classmethod
    def parse(cls, text: str, below: str = "totally") -> "IdealClass":
        aliases = {"all": "all", "order": "order", "idl": "order", "fsw": "fsw",
                   "radj": "radj"}
        if text.startswith("custom:"):
            return cls("custom", below, text.split(":", 1)[1])
        if text not in aliases:
            raise ValueError(f"unknown ideal class {text!r}; valid: all, order, fsw, "
                             f"radj, custom:<name> with <name> in {sorted(CUSTOM_CLASSES)}")
        return cls(aliases[text], below)

    def __str__(self) -> str:
        if self.kind == "custom":
            return f"custom:{self.name}"
        if self.kind == "fsw" and self.below != "totally":
            return f"fsw[{self.below}]"
        return self.kind

    def mask(self, X: VCategory, presheaves: np.ndarray) -> np.ndarray:
        """Boolean membership of each row of ``presheaves``."""
        P = np.asarray(presheaves, dtype=np.int64).reshape(-1, len(X))
        if self.kind == "all":
            return np.ones(len(P), dtype=bool)
        if self.kind == "order":
            return np.array([_order_ideal(X, p) for p in P], dtype=bool)
        if self.kind == "fsw":
            return np.array([_fsw(X, p, self.below) for p in P], dtype=bool)
        if self.kind == "radj":
            return _right_adjoint_mask(X, P)
        return np.asarray(CUSTOM_CLASSES[self.name](X, P), dtype=bool)

    def contains(self, X: VCategory, phi) -> bool:
        return bool(self.mask(X, np.asarray(phi))[0])


ALL = IdealClass("all")
ORDER_IDEAL = IdealClass("order")
FSW = IdealClass("fsw")
RIGHT_ADJOINT = IdealClass("radj")


def representables(X: VCategory) -> np.ndarray:
    """Row ``x`` is ``X(-, x)``."""
    return X.structure.T.copy()


def _representables_only(X, P):
    reps = {tuple(r) for r in representables(X)}
    return np.array([tuple(p) in reps for p in P], dtype=bool)


def _inhabited(X, P):
    q = X.quantale
    return q.join_reduce(P, axis=1) == q.unit if len(X) else np.zeros(len(P), bool)


CUSTOM_CLASSES: dict[str, Callable[[VCategory, np.ndarray], np.ndarray]] = {
    "representables": _representables_only,
    "inhabited": _inhabited,
}


def register_custom_class(name: str, predicate) -> None:
    """Register ``predicate(X, presheaves) -> bool array`` as ``custom:<name>``."""
    CUSTOM_CLASSES[name] = predicate
    _clear_caches()


# enumeration

def _extend_columns(X: VCategory, values: np.ndarray, cap: int) -> np.ndarray:
    q = X.quantale
    s = X.structure
    rows = np.zeros((1, 0), dtype=np.int64)
    for i in range(len(X)):
        cand = np.repeat(rows, len(values), axis=0)
        new = np.tile(values, len(rows))
        ok = np.ones(len(cand), dtype=bool)
        for j in range(i):
            ok &= q.leq[q.tensor[s[j, i], new], cand[:, j]]
            ok &= q.leq[q.tensor[s[i, j], cand[:, j]], new]
        rows = np.column_stack([cand[ok], new[ok]])
        if len(rows) > cap:
            raise ResourceLimitError(f"presheaf enumeration exceeds cap {cap}")
    return rows


def enumerate_presheaves(X: VCategory, cap: int = ENUM_CAP) -> np.ndarray:
    """All presheaves on ``X`` in lexicographic order of element indices."""
    return _extend_columns(X, np.arange(len(X.quantale)), cap)


def enumerate_copresheaves(X: VCategory, cap: int = ENUM_CAP) -> np.ndarray:
    """All distributors ``1 -/-> X``, i.e. presheaves on the dual."""
    from .vcat import dual

    return enumerate_presheaves(dual(X), cap)


def is_presheaf(X: VCategory, phi) -> bool:
    q = X.quantale
    p = np.asarray(phi, dtype=np.int64)
    return bool(q.leq[q.tensor[X.structure, p[None, :]], p[:, None]].all())


def as_distributor(X: VCategory, phi) -> Distributor:
    return Distributor(X, VCategory.unit_category(X.quantale), np.asarray(phi).reshape(-1, 1))


# membership predicates

def _order_ideal(X: VCategory, p: np.ndarray) -> bool:
    q = X.quantale
    if len(q) != 2:
        raise StructureError("order ideals are defined over the two-element quantale")
    support = np.flatnonzero(p == q.top)
    if len(support) == 0:
        return False
    le = X.structure[np.ix_(support, support)] == q.top
    # every pair in the support has an upper bound inside it
    return bool((le.astype(int) @ le.astype(int).T > 0).all())


def is_order_ideal(X: VCategory, phi) -> bool:
    return _order_ideal(X, np.asarray(phi, dtype=np.int64))


def _fsw(X: VCategory, p: np.ndarray, below: str) -> bool:
    q = X.quantale
    B = q.below if below == "totally" else q.way_below
    if q.join_reduce(p) != q.unit:
        return False
    es = np.flatnonzero(B[:, q.unit])
    Bx = B[np.ix_(es, X.structure.ravel())].reshape(len(es), len(X), len(X))  # (e, x, z)
    Bp = B[np.ix_(es, p)]  # (e, x): e below p(x)
    # reach[e1, x1, e2, x2, d]: some z with d below p(z), e1 below X(x1,z), e2 below X(x2,z)
    A = Bx[:, :, None, None, None, :] & Bx[None, None, :, :, None, :] \
        & Bp[None, None, None, None, :, :]
    reach = A.any(axis=-1)
    need = Bp[:, :, None, None, None] & Bp[None, None, :, :, None]
    return bool((~need | reach).all())


def is_fsw_ideal(X: VCategory, phi, below: str = "totally") -> bool:
    return _fsw(X, np.asarray(phi, dtype=np.int64), below)


@lru_cache(maxsize=256)
def _copresheaves(X: VCategory) -> np.ndarray:
    return enumerate_copresheaves(X)


def _right_adjoint_mask(X: VCategory, P: np.ndarray) -> np.ndarray:
    q = X.quantale
    C = _copresheaves(X)  # (c, n): phi(x) for phi: 1 -/-> X
    out = np.zeros(len(P), dtype=bool)
    for k, psi in enumerate(P):
        # (phi . psi)(x', x) = psi(x') (x) phi(x) <= X(x', x)
        below_x = q.leq[q.tensor[psi[None, :, None], C[:, None, :]], X.structure[None]]
        counit = below_x.reshape(len(C), -1).all(axis=1)
        # (psi . phi) = join_x phi(x) (x) psi(x) must reach the unit
        unit = q.join_reduce(q.tensor[C, psi[None, :]], axis=1) == q.unit
        out[k] = bool((counit & unit).any())
    return out


def is_right_adjoint_presheaf(X: VCategory, phi) -> bool:
    return bool(_right_adjoint_mask(X, np.asarray(phi, dtype=np.int64)[None, :])[0])


# presheaf categories

class PresheafCat:
    """A set of presheaves on ``base`` with ``hat X(phi, psi) = meet_x hom(phi x, psi x)``."""

    def __init__(self, base: VCategory, members: np.ndarray, ideal_class: IdealClass = ALL):
        self.base = base
        self.ideal_class = ideal_class
        m = np.asarray(members, dtype=np.int64).reshape(-1, len(base))
        m = m.copy()
        m.setflags(write=False)
        self.members = m
        self._pos = {tuple(r): i for i, r in enumerate(m)}

    def __len__(self) -> int:
        return len(self.members)

    def lookup(self, phi) -> int:
        try:
            return self._pos[tuple(int(v) for v in phi)]
        except KeyError:
            raise KeyError("presheaf is not a member") from None

    def index_or_none(self, phi):
        return self._pos.get(tuple(int(v) for v in phi))

    @cached_property
    def structure(self) -> np.ndarray:
        return hat_structure(self.base.quantale, self.members, self.members)

    @cached_property
    def category(self) -> VCategory:
        q = self.base.quantale
        names = ["(" + ",".join(q.name(v) for v in row) + ")" for row in self.members]
        return VCategory(q, names, self.structure)

    @cached_property
    def yoneda_indices(self) -> list:
        """Index of each representable ``X(-, x)``, or ``None`` when absent."""
        return [self.index_or_none(col) for col in self.base.structure.T]

    def names(self) -> list[str]:
        return list(self.category.objects)


def hat_structure(q, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """``meet_x hom(A[i, x], B[j, x])`` for every pair of rows."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape[1] == 0:
        return np.full((len(A), len(B)), q.top, dtype=np.int64)
    return q.meet_reduce(q.hom[A[:, None, :], B[None, :, :]], axis=-1)


@lru_cache(maxsize=256)
def presheaf_category(X: VCategory) -> PresheafCat:
    return PresheafCat(X, enumerate_presheaves(X), ALL)


@lru_cache(maxsize=512)
def build_JX(X: VCategory, ideal_class: IdealClass = ALL) -> PresheafCat:
    allp = presheaf_category(X).members
    return PresheafCat(X, allp[ideal_class.mask(X, allp)], ideal_class)


def membership_of_endodistributor(X: VCategory, v: np.ndarray, ideal_class: IdealClass) -> bool:
    """``v: X -/-> X`` is in ``Mod J``: every column ``x^* . v = v(-, x)`` lies in ``JX``."""
    J = build_JX(X, ideal_class)
    return all(J.index_or_none(col) is not None for col in np.asarray(v).T)


@dataclass
class SaturationReport:
    ideal_class: str
    saturated: bool
    checked: int
    vacuous: bool = False
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"class": self.ideal_class, "saturated": self.saturated,
                "checked": self.checked, "vacuous": self.vacuous,
                "counterexample": self.counterexample}


@lru_cache(maxsize=512)
def saturation_check(X: VCategory, ideal_class: IdealClass = ALL,
                     cap: int = ENUM_CAP) -> SaturationReport:
    """For every ``psi`` in ``J(JX)``, check ``psi . y_*`` lies in ``JX``."""
    if ideal_class.kind == "all":
        return SaturationReport(str(ideal_class), True, 0, vacuous=True)
    q = X.quantale
    J = build_JX(X, ideal_class)
    K = J.category
    second = enumerate_presheaves(K, cap)
    second = second[ideal_class.mask(K, second)]
    if len(J):
        # (psi . y_*)(x) = join_phi phi(x) (x) psi(phi)
        sups = q.join_reduce(q.tensor[J.members.T[:, :, None], second.T[None, :, :]], axis=1).T
    else:
        sups = np.full((len(second), len(X)), q.bottom, dtype=np.int64)
    inside = ideal_class.mask(X, sups) if len(sups) else np.zeros(0, bool)
    if inside.all():
        return SaturationReport(str(ideal_class), True, len(second))
    k = int(np.flatnonzero(~inside)[0])
    return SaturationReport(str(ideal_class), False, len(second), counterexample={
        "psi": [q.name(v) for v in second[k]],
        "psi_domain": list(K.objects),
        "composite": [q.name(v) for v in sups[k]],
    })


def _clear_caches() -> None:
    for fn in (presheaf_category, build_JX, saturation_check, _copresheaves):
        fn.cache_clear()


def _column_extend(X: VCategory, Y: VCategory, rows: np.ndarray, j: int,
                   options: np.ndarray, H: np.ndarray) -> np.ndarray:
    """Keep ``(row, p)`` pairs where presheaf ``p`` is a valid column at ``j``."""
    q = X.quantale
    sy = Y.structure
    ok = np.ones((len(rows), len(options)), dtype=bool)
    for i in range(j):
        prev = rows[:, i][:, None]
        ok &= q.leq[sy[i, j], H[prev, options[None, :]]]
        ok &= q.leq[sy[j, i], H[options[None, :], prev]]
    return ok


def enumerate_distributors(X: VCategory, Y: VCategory, cap: int = ENUM_CAP) -> np.ndarray:
    """All distributors ``X -/-> Y`` as an array of shape ``(k, |X|, |Y|)``.

    Each column ``phi(-, y)`` is a presheaf on ``X``; columns are chosen so that
    ``Y(y, y') <= hat X(phi(-, y), phi(-, y'))``.
    """
    hat = presheaf_category(X)
    P, H = hat.members, hat.structure
    options = np.arange(len(P))
    rows = np.zeros((1, 0), dtype=np.int64)
    for j in range(len(Y)):
        ok = _column_extend(X, Y, rows, j, options, H)
        r, c = np.nonzero(ok)
        rows = np.column_stack([rows[r], options[c]])
        if len(rows) > cap:
            raise ResourceLimitError(f"distributor enumeration exceeds cap {cap}")
    return np.transpose(P[rows], (0, 2, 1)) if len(Y) else \
        np.zeros((1, len(X), 0), dtype=np.int64)


def sample_distributors(X: VCategory, Y: VCategory, rng: np.random.Generator,
                        count: int) -> np.ndarray:
    """``count`` random distributors ``X -/-> Y``, built column by column.

    A consistent partial choice always extends (the join of the pushed-forward
    earlier columns is admissible), so sampling never backtracks.
    """
    hat = presheaf_category(X)
    P, H = hat.members, hat.structure
    options = np.arange(len(P))
    out = np.empty((count, len(X), len(Y)), dtype=np.int64)
    for k in range(count):
        row = np.zeros((1, 0), dtype=np.int64)
        for j in range(len(Y)):
            ok = np.flatnonzero(_column_extend(X, Y, row, j, options, H)[0])
            row = np.column_stack([row, [[rng.choice(ok)]]])
        out[k] = P[row[0]].T
    return out
