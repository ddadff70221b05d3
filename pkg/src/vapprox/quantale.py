"""Finite commutative unital quantales given by tables.

Elements are opaque string identifiers; every table is indexed by element
position.  Vectorised helpers (``join_reduce``, ``meet_reduce``, ``hom_of``...)
operate on integer arrays of element indices and are what the rest of the
package uses for matrix algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, reduce
from itertools import product

import numpy as np

from .report import StructureError, ValidationReport

MAX_ELEMENTS = 16

__all__ = [
    "QuantaleTable", "validate_quantale", "hom", "totally_below",
    "directed_below", "builtin_quantales", "two", "lukasiewicz", "chain_plus",
    "frame_of_downsets",
]


class QuantaleTable:
    """A finite quantale ``(Q, <=, tensor, unit)``.

    Construction only checks the tables are well formed.  The axioms are
    checked by :func:`validate_quantale`; derived tables (joins, meets, hom,
    totally-below) assume the carrier is a lattice and raise
    :class:`~vapprox.report.StructureError` otherwise.
    """

    def __init__(self, elements, leq, tensor, unit, display=None):
        self.elements = tuple(str(e) for e in elements)
        m = len(self.elements)
        if m == 0:
            raise StructureError("quantale carrier must be nonempty")
        if len(set(self.elements)) != m:
            raise StructureError("duplicate element identifiers")
        self._index = {e: i for i, e in enumerate(self.elements)}
        self.leq = _square(leq, m, "leq", dtype=bool)
        self.tensor = _square(tensor, m, "tensor", dtype=np.int64)
        if ((self.tensor < 0) | (self.tensor >= m)).any():
            bad = np.argwhere((self.tensor < 0) | (self.tensor >= m))[0]
            raise StructureError(f"tensor[{bad[0]}][{bad[1]}] is not an element index")
        self.unit = self._resolve(unit)
        self.display = display
        self.leq.setflags(write=False)
        self.tensor.setflags(write=False)

    def _resolve(self, e) -> int:
        if isinstance(e, (int, np.integer)) and not isinstance(e, bool):
            if not 0 <= int(e) < len(self.elements):
                raise StructureError(f"element index {e} out of range")
            return int(e)
        try:
            return self._index[str(e)]
        except KeyError:
            raise StructureError(f"unknown element {e!r}") from None

    def idx(self, e) -> int:
        """Index of an element given by identifier (or index)."""
        return self._resolve(e)

    def name(self, i) -> str:
        return self.elements[int(i)]

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"QuantaleTable({list(self.elements)!r}, unit={self.name(self.unit)!r})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, QuantaleTable):
            return NotImplemented
        return (self.elements == other.elements and self.unit == other.unit
                and np.array_equal(self.leq, other.leq)
                and np.array_equal(self.tensor, other.tensor))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.elements, self.unit, self.leq.tobytes(), self.tensor.tobytes()))

    # lattice structure

    @cached_property
    def join(self) -> np.ndarray:
        return self._bound_table(self.leq)

    @cached_property
    def meet(self) -> np.ndarray:
        return self._bound_table(self.leq.T)

    def _bound_table(self, le: np.ndarray) -> np.ndarray:
        m = len(self)
        out = np.empty((m, m), dtype=np.int64)
        for a in range(m):
            for b in range(a, m):
                ub = np.flatnonzero(le[a] & le[b])
                least = [u for u in ub if le[u, ub].all()]
                if not least:
                    raise StructureError(
                        f"{self.name(a)!r} and {self.name(b)!r} have no least bound")
                out[a, b] = out[b, a] = least[0]
        out.setflags(write=False)
        return out

    @cached_property
    def bottom(self) -> int:
        return self._extreme(self.leq)

    @cached_property
    def top(self) -> int:
        return self._extreme(self.leq.T)

    def _extreme(self, le: np.ndarray) -> int:
        cands = np.flatnonzero(le.all(axis=1))
        if len(cands) == 0:
            raise StructureError("no least/greatest element")
        return int(cands[0])

    def join_of(self, items) -> int:
        return reduce(lambda a, b: int(self.join[a, b]), items, self.bottom)

    def meet_of(self, items) -> int:
        return reduce(lambda a, b: int(self.meet[a, b]), items, self.top)

    @cached_property
    def hom(self) -> np.ndarray:
        """``hom[a, b]`` is the largest ``c`` with ``a (x) c <= b``."""
        m = len(self)
        out = np.empty((m, m), dtype=np.int64)
        for a in range(m):
            for b in range(m):
                out[a, b] = self.join_of(np.flatnonzero(self.leq[self.tensor[a], b]))
        out.setflags(write=False)
        return out

    @cached_property
    def below(self) -> np.ndarray:
        """``below[b, a]`` iff ``b`` is totally below ``a``."""
        return _subset_below(self, directed=False)

    @cached_property
    def way_below(self) -> np.ndarray:
        """``way_below[b, a]`` using directed subsets only."""
        return _subset_below(self, directed=True)

    # vectorised helpers over index arrays

    def join_reduce(self, arr, axis=-1) -> np.ndarray:
        arr = np.moveaxis(np.asarray(arr), axis, 0)
        if arr.shape[0] == 0:
            return np.full(arr.shape[1:], self.bottom, dtype=np.int64)
        return reduce(lambda acc, a: self.join[acc, a], arr[1:], arr[0])

    def meet_reduce(self, arr, axis=-1) -> np.ndarray:
        arr = np.moveaxis(np.asarray(arr), axis, 0)
        if arr.shape[0] == 0:
            return np.full(arr.shape[1:], self.top, dtype=np.int64)
        return reduce(lambda acc, a: self.meet[acc, a], arr[1:], arr[0])

    def le(self, a, b) -> bool:
        """Pointwise order on index arrays of equal shape."""
        return bool(self.leq[np.asarray(a), np.asarray(b)].all())


def _square(tbl, m: int, label: str, dtype) -> np.ndarray:
    rows = list(tbl)
    if len(rows) != m or any(len(r) != m for r in rows):
        raise StructureError(f"{label} must be a {m}x{m} table")
    try:
        return np.array(rows, dtype=dtype)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{label}: {exc}") from None


def _subset_joins(q: QuantaleTable) -> np.ndarray:
    m = len(q)
    joins = np.empty(1 << m, dtype=np.int64)
    joins[0] = q.bottom
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        joins[mask] = q.join[joins[mask & (mask - 1)], low]
    return joins


def _subset_below(q: QuantaleTable, directed: bool) -> np.ndarray:
    m = len(q)
    if m > MAX_ELEMENTS:
        raise StructureError(f"subset scan capped at {MAX_ELEMENTS} elements")
    masks = np.arange(1 << m)
    joins = _subset_joins(q)
    if directed:
        masks, joins = _directed_masks(q, masks, joins)
    bits = 1 << np.arange(m)
    upset = np.array([int(bits[q.leq[b]].sum()) for b in range(m)])
    out = np.zeros((m, m), dtype=bool)
    for a in range(m):
        covering = masks[q.leq[a, joins]]
        for b in range(m):
            out[b, a] = bool(((covering & upset[b]) != 0).all())
    out.setflags(write=False)
    return out


def _directed_masks(q, masks, joins):
    keep = []
    for mask in masks:
        if mask == 0:
            continue
        members = [i for i in range(len(q)) if mask >> i & 1]
        if all(any(q.leq[a, c] and q.leq[b, c] for c in members)
               for a in members for b in members):
            keep.append(mask)
    keep = np.array(keep, dtype=np.int64)
    return keep, joins[keep]


def hom(table: QuantaleTable, a, b) -> str:
    return table.name(table.hom[table.idx(a), table.idx(b)])


def totally_below(table: QuantaleTable, b, a) -> bool:
    return bool(table.below[table.idx(b), table.idx(a)])


def directed_below(table: QuantaleTable, b, a) -> bool:
    return bool(table.way_below[table.idx(b), table.idx(a)])


def validate_quantale(table: QuantaleTable) -> ValidationReport:
    """Check every quantale axiom and collect a witness for each failure."""
    q = table
    rep = ValidationReport("quantale")
    m = len(q)
    rng = range(m)
    le = q.leq
    refl = next(((a,) for a in rng if not le[a, a]), None)
    anti = next(((a, b) for a, b in product(rng, rng)
                 if a != b and le[a, b] and le[b, a]), None)
    trans = next(((a, b, c) for a, b, c in product(rng, rng, rng)
                  if le[a, b] and le[b, c] and not le[a, c]), None)
    lattice_w = refl or anti or trans
    if lattice_w is None:
        try:
            q.join, q.meet, q.bottom, q.top
        except StructureError as exc:
            lattice_w = str(exc)
    rep.add("lattice", lattice_w is None, lattice_w)

    t = q.tensor
    rep.add("commutativity", np.array_equal(t, t.T),
            _first(np.argwhere(t != t.T)))
    assoc = next(((a, b, c) for a, b, c in product(rng, rng, rng)
                  if t[t[a, b], c] != t[a, t[b, c]]), None)
    rep.add("associativity", assoc is None, assoc)
    neutral = next(((a,) for a in rng if t[q.unit, a] != a or t[a, q.unit] != a), None)
    rep.add("unit", neutral is None, neutral)
    if lattice_w is not None:
        for name in ("unit-is-top", "bottom-neq-unit", "join-preservation",
                     "complete-distributivity"):
            rep.add(name, False, "carrier is not a complete lattice")
        return rep
    rep.add("unit-is-top", q.unit == q.top, (q.name(q.unit), q.name(q.top)))
    rep.add("bottom-neq-unit", q.bottom != q.unit, (q.name(q.bottom),))
    jp = next(((a,) for a in rng if t[a, q.bottom] != q.bottom), None)
    if jp is None:
        jp = next(((a, b, c) for a, b, c in product(rng, rng, rng)
                   if t[a, q.join[b, c]] != q.join[t[a, b], t[a, c]]), None)
    rep.add("join-preservation", jp is None, jp)
    cd = next(((a,) for a in rng
               if q.join_of(np.flatnonzero(q.below[:, a])) != a), None)
    rep.add("complete-distributivity", cd is None, cd)
    return rep


def _first(arr):
    return tuple(int(v) for v in arr[0]) if len(arr) else None


# builtins

def two() -> QuantaleTable:
    return QuantaleTable(["bot", "top"], [[True, True], [False, True]],
                         [[0, 0], [0, 1]], "top", display="two")


def _fraction_label(k: int, n: int) -> str:
    return str(Fraction(k, n))


def _truncated_chain(n: int, labels, display) -> QuantaleTable:
    if n < 1:
        raise ValueError("chain length n must be >= 1")
    # element k carries numeric value k; reversed order, so larger k is lower
    leq = [[a >= b for b in range(n + 1)] for a in range(n + 1)]
    tensor = [[min(a + b, n) for b in range(n + 1)] for a in range(n + 1)]
    return QuantaleTable(labels, leq, tensor, 0, display=display)


def lukasiewicz(n: int) -> QuantaleTable:
    """``[0,1]`` discretised to steps of ``1/n``, reversed order, truncated sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _truncated_chain(n, [_fraction_label(k, n) for k in range(n + 1)],
                            f"lukasiewicz({n})")


def chain_plus(n: int) -> QuantaleTable:
    """``[0,inf]`` discretised to ``0..n-1, inf``; sums at or past ``n`` are ``inf``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _truncated_chain(n, [str(k) for k in range(n)] + ["inf"], f"chain_plus({n})")


def frame_of_downsets(elements, leq) -> QuantaleTable:
    """Down-closed subsets of a finite poset, ordered by inclusion, with ``&``."""
    elements = [str(e) for e in elements]
    le = np.asarray(leq, dtype=bool)
    n = len(elements)
    downs = []
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if all(mask >> j & 1 for i in members for j in range(n) if le[j, i]):
            downs.append(mask)
    downs.sort(key=lambda d: (bin(d).count("1"), d))
    pos = {d: k for k, d in enumerate(downs)}
    labels = ["{" + ",".join(elements[i] for i in range(n) if d >> i & 1) + "}"
              for d in downs]
    sub = [[(a & ~b) == 0 for b in downs] for a in downs]
    meet = [[pos[a & b] for b in downs] for a in downs]
    return QuantaleTable(labels, sub, meet, pos[(1 << n) - 1], display="frame")


def builtin_quantales(name: str, size: int | None = None, poset=None) -> QuantaleTable:
    """Look up a builtin quantale by name.

    ``poset`` is ``(elements, leq)`` for ``frame_of_downsets``.
    """
    if name == "two":
        return two()
    if name in ("lukasiewicz", "chain_plus"):
        if size is None or size < 1:
            raise ValueError(f"{name} needs n >= 1")
        return lukasiewicz(size) if name == "lukasiewicz" else chain_plus(size)
    if name == "frame_of_downsets":
        if poset is None:
            raise ValueError("frame_of_downsets needs a poset")
        return frame_of_downsets(*poset)
    raise ValueError(f"unknown builtin quantale {name!r}; expected two, "
                     "lukasiewicz, chain_plus or frame_of_downsets")
