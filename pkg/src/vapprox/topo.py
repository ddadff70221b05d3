"""Finite topological spaces through their filters of open sets.

Points carry the order ``x <= y`` iff ``y`` lies in the closure of ``{x}``
(the dual of the specialisation order).  A filter ``F`` converges to ``x`` when
every open neighbourhood of ``x`` is in ``F``; its supremum is the least point,
in the order above, that it converges to.

On a finite space every filter of opens is principal, so filters are stored as
the set of member opens and generated from their least member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .report import ResourceLimitError, StructureError

FILTER_CAP = 64
OPEN_CAP = 1 << 16

ALL = "all"
PROPER = "proper"
CLASSES = (ALL, PROPER)


class FinTop:
    def __init__(self, points, opens):
        self.points = tuple(str(p) for p in points)
        n = len(self.points)
        full = frozenset(range(n))
        fam = set()
        for o in opens:
            s = frozenset(int(i) for i in o)
            if any(not 0 <= i < n for i in s):
                raise StructureError("open set mentions an unknown point")
            fam.add(s)
        fam |= {frozenset(), full}
        for a, b in combinations(list(fam), 2):
            if a | b not in fam or a & b not in fam:
                raise StructureError(f"opens not closed under union/intersection: "
                                     f"{sorted(a)} and {sorted(b)}")
        self.opens = frozenset(fam)
        self.full = full

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"FinTop({list(self.points)!r}, {len(self.opens)} opens)"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinTop):
            return NotImplemented
        return self.points == other.points and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.points, self.opens))

    @cached_property
    def sorted_opens(self) -> list:
        return sorted(self.opens, key=lambda s: (len(s), sorted(s)))

    @cached_property
    def smallest_nbhd(self) -> list:
        return [frozenset.intersection(*[o for o in self.opens if x in o])
                for x in range(len(self))]

    @cached_property
    def order(self) -> np.ndarray:
        """``order[x, y]`` iff ``y`` is in the closure of ``{x}``."""
        n = len(self)
        return np.array([[x in self.smallest_nbhd[y] for y in range(n)] for x in range(n)],
                        dtype=bool)

    def is_t0(self) -> bool:
        le = self.order
        return not (le & le.T & ~np.eye(len(self), dtype=bool)).any()


@dataclass(frozen=True)
class OpenFilter:
    space: FinTop
    members: frozenset

    @property
    def least(self) -> frozenset:
        return frozenset.intersection(*self.members)

    @property
    def proper(self) -> bool:
        return frozenset() not in self.members

    def __le__(self, other: "OpenFilter") -> bool:
        return self.members >= other.members

    def describe(self) -> list:
        return [sorted(self.space.points[i] for i in o)
                for o in sorted(self.members, key=lambda s: (len(s), sorted(s)))]


def principal_filter(space: FinTop, U) -> OpenFilter:
    U = frozenset(U)
    return OpenFilter(space, frozenset(o for o in space.opens if U <= o))


def is_filter(space: FinTop, members) -> bool:
    fam = frozenset(members)
    if space.full not in fam or not fam <= space.opens:
        return False
    if any(o not in fam for f in fam for o in space.opens if f <= o):
        return False
    return all(a & b in fam for a in fam for b in fam)


def generate_filter(space: FinTop, sets) -> OpenFilter:
    """Close under finite intersections and then upwards."""
    least = frozenset(space.full)
    for s in sets:
        least &= s
    return principal_filter(space, least)


# constructions

def sierpinski() -> FinTop:
    """Two points; ``1`` is open, ``0`` is closed."""
    return FinTop(["0", "1"], [[1]])


def discrete(n: int) -> FinTop:
    return FinTop([str(i) for i in range(n)],
                  [[i for i in range(n) if m >> i & 1] for m in range(1 << n)])


def indiscrete(n: int) -> FinTop:
    return FinTop([str(i) for i in range(n)], [])


def alexandroff(points, leq) -> FinTop:
    """Opens are the down-closed sets, so the closure order is the given order."""
    le = np.asarray(leq, dtype=bool)
    n = len(points)
    opens = []
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if all(j in s for i in s for j in range(n) if le[j, i]):
            opens.append(s)
    return FinTop(points, opens)


def specialization(space: FinTop) -> np.ndarray:
    return space.order.copy()


def all_spaces(n: int) -> list:
    """Every topology on ``n`` labelled points."""
    full = (1 << n) - 1
    inner = [m for m in range(1, full)]
    out = []
    for k in range(1 << len(inner)):
        fam = {0, full} | {inner[i] for i in range(len(inner)) if k >> i & 1}
        if all((a | b) in fam and (a & b) in fam for a in fam for b in fam):
            out.append(FinTop([str(i) for i in range(n)],
                              [[i for i in range(n) if m >> i & 1] for m in fam]))
    return out


def enumerate_filters(space: FinTop) -> list:
    if len(space.opens) > FILTER_CAP:
        raise ResourceLimitError(f"open lattice has {len(space.opens)} > {FILTER_CAP} members")
    return [principal_filter(space, U) for U in space.sorted_opens]


def f0_basis(space: FinTop) -> dict:
    """Basic open ``{F : A in F}`` of ``F0(X)`` for each open ``A``, as filter indices."""
    filters = enumerate_filters(space)
    return {A: frozenset(i for i, F in enumerate(filters) if A in F.members)
            for A in space.sorted_opens}


def f0_space(space: FinTop) -> FinTop:
    """The space of filters, topologised by the basis ``{F : A in F}``."""
    filters = enumerate_filters(space)
    opens = {frozenset()}
    for B in f0_basis(space).values():
        opens |= {o | B for o in opens}
        if len(opens) > OPEN_CAP:
            raise ResourceLimitError("too many opens in the filter space")
    labels = ["<" + ";".join("{" + ",".join(s) + "}" for s in F.describe()) + ">"
              for F in filters]
    out = FinTop(labels, opens)
    out.filters = filters
    return out


def yoneda_top(space: FinTop, x) -> OpenFilter:
    """The neighbourhood filter of ``x``."""
    return principal_filter(space, space.smallest_nbhd[_pt(space, x)])


def _pt(space, x) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    return space.points.index(str(x))


def convergence_points(space: FinTop, F: OpenFilter) -> list:
    return [x for x in range(len(space)) if space.smallest_nbhd[x] in F.members]


def sup_filter(space: FinTop, F: OpenFilter) -> tuple:
    """Convergence points below every other convergence point."""
    conv = convergence_points(space, F)
    le = space.order
    return tuple(x for x in conv if all(le[x, y] for y in conv))


def in_class(F: OpenFilter, ideal_class: str) -> bool:
    if ideal_class == ALL:
        return True
    if ideal_class == PROPER:
        return F.proper
    raise ValueError(f"unknown filter class {ideal_class!r}; expected all or proper")


def _open_in_subspace(S: set, members: list, basis: dict) -> bool:
    """``S`` is open in the subspace on ``members`` of the filter space."""
    mem = set(members)
    for F in S:
        if not any(F in B and (B & mem) <= S for B in basis.values()):
            return False
    return True


def is_cocomplete_top(space: FinTop, ideal_class: str = ALL) -> bool:
    return cocompleteness_top(space, ideal_class)["cocomplete"]


def cocompleteness_top(space: FinTop, ideal_class: str = ALL) -> dict:
    """Every class filter has a smallest convergence point, and ``F |-> Sup F``
    is continuous on the class subspace of ``F0(X)``."""
    filters = enumerate_filters(space)
    members = [i for i, F in enumerate(filters) if in_class(F, ideal_class)]
    sups = {i: sup_filter(space, filters[i]) for i in members}
    missing = [i for i in members if not sups[i]]
    out = {"pointwise": not missing, "continuous": False, "cocomplete": False,
           "missing": [filters[i].describe() for i in missing]}
    if missing:
        return out
    basis = f0_basis(space)
    for U in space.opens:
        pre = {i for i in members if sups[i][0] in U}
        if not _open_in_subspace(pre, members, basis):
            out["discontinuity"] = sorted(space.points[i] for i in U)
            return out
    out["continuous"] = out["cocomplete"] = True
    return out


def waybelow_filter(space: FinTop, x, ideal_class: str = ALL) -> OpenFilter:
    """Generated by the union of class filters whose supremum lies above ``x``."""
    x = _pt(space, x)
    le = space.order
    chosen = []
    for F in enumerate_filters(space):
        if not in_class(F, ideal_class):
            continue
        s = sup_filter(space, F)
        if s and le[x, s[0]]:
            chosen.append(F.least)
    return generate_filter(space, chosen)


def _map_continuous(space: FinTop, image: list, basis: dict) -> bool:
    """``x |-> image[x]`` (filter indices) is continuous into ``F0(X)``."""
    for B in basis.values():
        pre = frozenset(x for x in range(len(space)) if image[x] in B)
        if pre not in space.opens:
            return False
    return True


def is_continuous_top(space: FinTop, ideal_class: str = ALL) -> bool:
    return continuity_top(space, ideal_class)["continuous"]


def continuity_top(space: FinTop, ideal_class: str = ALL) -> dict:
    """Cocomplete, ``x |-> waybelow_x`` continuous, and each ``x`` a smallest
    convergence point of its (class) way-below filter."""
    filters = enumerate_filters(space)
    pos = {F.members: i for i, F in enumerate(filters)}
    wb = [waybelow_filter(space, x, ideal_class) for x in range(len(space))]
    image = [pos[F.members] for F in wb]
    cocomplete = is_cocomplete_top(space, ideal_class)
    map_ok = _map_continuous(space, image, f0_basis(space))
    recovers = [in_class(F, ideal_class) and x in sup_filter(space, F)
                for x, F in enumerate(wb)]
    return {
        "class": ideal_class,
        "cocomplete": cocomplete,
        "waybelow_continuous": map_ok,
        "recovers_points": all(recovers),
        "continuous": cocomplete and map_ok and all(recovers),
        "waybelow": {space.points[x]: F.describe() for x, F in enumerate(wb)},
    }


def local_waybelow_consistency(space: FinTop, ideal_class: str = ALL) -> dict:
    """Monotonicity of ``x |-> waybelow_x`` (expected) and its continuity (open)."""
    le = space.order
    wb = [waybelow_filter(space, x, ideal_class) for x in range(len(space))]
    mono = next(((space.points[x], space.points[y]) for x in range(len(space))
                 for y in range(len(space)) if le[x, y] and not wb[x] <= wb[y]), None)
    filters = enumerate_filters(space)
    pos = {F.members: i for i, F in enumerate(filters)}
    cont = _map_continuous(space, [pos[F.members] for F in wb], f0_basis(space))
    return {"monotone": mono is None, "monotonicity_witness": mono, "continuous": cont}


def subbasis_fixture(elements, leq) -> FinTop:
    """Topology on a finite complete lattice from the down-sets ``A`` such that
    ``meet B in A`` forces ``B`` to meet ``A``."""
    le = np.asarray(leq, dtype=bool)
    n = len(elements)
    subbasis = []
    for mask in range(1 << n):
        A = {i for i in range(n) if mask >> i & 1}
        if not all(j in A for i in A for j in range(n) if le[j, i]):
            continue
        ok = True
        for bmask in range(1 << n):
            B = [i for i in range(n) if bmask >> i & 1]
            m = _meet_of(le, B)
            if m is None:
                raise StructureError("not a complete lattice")
            if m in A and not (A & set(B)):
                ok = False
                break
        if ok:
            subbasis.append(frozenset(A))
    opens = {frozenset(), frozenset(range(n))}
    basis = {frozenset(range(n))}
    for k in range(1, len(subbasis) + 1):
        for combo in combinations(subbasis, k):
            basis.add(frozenset.intersection(*combo))
    for b in basis:
        opens |= {o | b for o in opens}
    return FinTop(elements, opens)


def _meet_of(le: np.ndarray, B: list):
    n = len(le)
    lbs = [z for z in range(n) if all(le[z, b] for b in B)]
    great = [z for z in lbs if all(le[w, z] for w in lbs)]
    return great[0] if great else None
