"""Finite V-categories and V-functors."""

from __future__ import annotations

from functools import cached_property
from itertools import product

import numpy as np

from .quantale import QuantaleTable
from .report import ResourceLimitError, StructureError, ValidationReport

INTERNAL_HOM_CAP = 10**6


class VCategory:
    """A set of objects with a quantale-valued structure matrix.

    ``structure[x, y]`` is the index of ``X(x, y)`` in ``quantale.elements``.
    """

    def __init__(self, quantale: QuantaleTable, objects, structure):
        self.quantale = quantale
        self.objects = tuple(str(o) for o in objects)
        n = len(self.objects)
        if len(set(self.objects)) != n:
            raise StructureError("duplicate object identifiers")
        arr = np.asarray(structure, dtype=np.int64)
        if arr.shape != (n, n):
            raise StructureError(f"structure must be {n}x{n}, got {arr.shape}")
        if n and ((arr < 0) | (arr >= len(quantale))).any():
            raise StructureError("structure entry is not an element index")
        arr = arr.copy()
        arr.setflags(write=False)
        self.structure = arr

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        return f"VCategory({list(self.objects)!r})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, VCategory):
            return NotImplemented
        return (self.objects == other.objects and self.quantale == other.quantale
                and np.array_equal(self.structure, other.structure))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.quantale, self.objects, self.structure.tobytes()))

    def index(self, obj) -> int:
        if isinstance(obj, (int, np.integer)):
            return int(obj)
        try:
            return self.objects.index(str(obj))
        except ValueError:
            raise StructureError(f"unknown object {obj!r}") from None

    def hom(self, x, y) -> str:
        return self.quantale.name(self.structure[self.index(x), self.index(y)])

    def full_subcategory(self, keep) -> "VCategory":
        keep = list(keep)
        return VCategory(self.quantale, [self.objects[i] for i in keep],
                         self.structure[np.ix_(keep, keep)])

    @classmethod
    def from_preorder(cls, quantale, objects, leq) -> "VCategory":
        """Two-valued category from a boolean relation: top where related."""
        le = np.asarray(leq, dtype=bool)
        return cls(quantale, objects, np.where(le, quantale.top, quantale.bottom))

    @classmethod
    def discrete(cls, quantale, objects) -> "VCategory":
        n = len(objects)
        return cls(quantale, objects,
                   np.where(np.eye(n, dtype=bool), quantale.unit, quantale.bottom))

    @classmethod
    def unit_category(cls, quantale) -> "VCategory":
        return cls(quantale, ["*"], [[quantale.unit]])

    @classmethod
    def of_quantale(cls, quantale) -> "VCategory":
        """The quantale as a category over itself, structured by ``hom``."""
        return cls(quantale, quantale.elements, quantale.hom)


def validate_vcategory(X: VCategory) -> ValidationReport:
    q, s = X.quantale, X.structure
    rep = ValidationReport("vcategory")
    n = len(X)
    refl = next((X.objects[x] for x in range(n) if not q.leq[q.unit, s[x, x]]), None)
    rep.add("reflexivity", refl is None, refl)
    trans = None
    if n:
        lhs = q.tensor[s[:, :, None], s[None, :, :]]  # (x, y, z)
        bad = ~q.leq[lhs, s[:, None, :]]
        if bad.any():
            x, y, z = np.argwhere(bad)[0]
            trans = (X.objects[x], X.objects[y], X.objects[z])
    rep.add("transitivity", trans is None, trans)
    return rep


def dual(X: VCategory) -> VCategory:
    return VCategory(X.quantale, X.objects, X.structure.T)


def tensor_product(X: VCategory, Y: VCategory) -> VCategory:
    _same_quantale(X, Y)
    q = X.quantale
    objs = [f"({a},{b})" for a, b in product(X.objects, Y.objects)]
    s = q.tensor[X.structure[:, None, :, None], Y.structure[None, :, None, :]]
    n = len(objs)
    return VCategory(q, objs, s.reshape(n, n))


def underlying_preorder(X: VCategory) -> np.ndarray:
    """``x <= y`` iff ``unit <= X(x, y)``."""
    return X.quantale.leq[X.quantale.unit, X.structure]


def is_antisymmetric(X: VCategory) -> bool:
    le = underlying_preorder(X)
    return not (le & le.T & ~np.eye(len(X), dtype=bool)).any()


def _same_quantale(X, Y):
    if X.quantale != Y.quantale:
        raise StructureError("categories are over different quantales")


class VFunctor:
    def __init__(self, source: VCategory, target: VCategory, mapping):
        _same_quantale(source, target)
        self.source, self.target = source, target
        mp = tuple(int(target.index(v)) for v in mapping)
        if len(mp) != len(source):
            raise StructureError("functor map must cover every source object")
        if any(not 0 <= v < len(target) for v in mp):
            raise StructureError("functor maps outside the target")
        self.mapping = mp

    def __call__(self, x):
        return self.mapping[self.source.index(x)]

    def __repr__(self) -> str:
        return f"VFunctor({[self.target.objects[v] for v in self.mapping]!r})"

    @cached_property
    def pulled_structure(self) -> np.ndarray:
        m = np.asarray(self.mapping, dtype=np.int64)
        return self.target.structure[np.ix_(m, m)]


def validate_vfunctor(f: VFunctor) -> ValidationReport:
    q = f.source.quantale
    rep = ValidationReport("vfunctor")
    bad = ~q.leq[f.source.structure, f.pulled_structure]
    w = None
    if bad.any():
        x, y = np.argwhere(bad)[0]
        w = (f.source.objects[x], f.source.objects[y])
    rep.add("functoriality", w is None, w)
    return rep


def is_fully_faithful(f: VFunctor) -> bool:
    return bool(np.array_equal(f.source.structure, f.pulled_structure))


def identity_functor(X: VCategory) -> VFunctor:
    return VFunctor(X, X, range(len(X)))


def enumerate_functors(X: VCategory, Y: VCategory, cap: int = INTERNAL_HOM_CAP) -> np.ndarray:
    """All V-functors ``X -> Y`` as rows of object indices, in lexicographic order."""
    _same_quantale(X, Y)
    q = X.quantale
    sx, sy = X.structure, Y.structure
    rows = np.zeros((1, 0), dtype=np.int64)
    for i in range(len(X)):
        cand = np.repeat(rows, len(Y), axis=0)
        new = np.tile(np.arange(len(Y)), len(rows))
        ok = np.ones(len(cand), dtype=bool)
        for j in range(i):
            ok &= q.leq[sx[j, i], sy[cand[:, j], new]]
            ok &= q.leq[sx[i, j], sy[new, cand[:, j]]]
        ok &= q.leq[sx[i, i], sy[new, new]]
        rows = np.column_stack([cand[ok], new[ok]])
        if len(rows) > cap:
            raise ResourceLimitError(f"more than {cap} partial functors after {i + 1} objects")
    return rows


def internal_hom_category(X: VCategory, Y: VCategory, cap: int = INTERNAL_HOM_CAP) -> VCategory:
    """``Y^X``: functors ``X -> Y`` with ``Y^X(f, g) = meet_x Y(fx, gx)``."""
    q = X.quantale
    fs = enumerate_functors(X, Y, cap)
    s = q.meet_reduce(Y.structure[fs[:, None, :], fs[None, :, :]], axis=-1) \
        if len(X) else np.full((len(fs), len(fs)), q.top)
    names = ["[" + ",".join(Y.objects[v] for v in row) + "]" for row in fs]
    cat = VCategory(q, names, s)
    cat.functor_maps = fs
    return cat
